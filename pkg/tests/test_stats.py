import math

import pytest
from hypothesis import assume, given, strategies as st

from varbench import stats
from varbench.model import MeasurementRecord, RecordError, TimingSpec

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
factors = st.floats(min_value=0.01, max_value=1e4, allow_nan=False, allow_infinity=False)


def test_pearson_fixtures():
    assert stats.pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0, abs=1e-9)
    assert stats.pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0, abs=1e-9)
    # deviations (-1.5,-.5,.5,1.5) and (-.5,-1.5,1.5,.5): cross sum 3, squares 5 and 5
    assert stats.pearson([1, 2, 3, 4], [2, 1, 4, 3]) == pytest.approx(0.6, abs=1e-9)


def test_pearson_errors():
    with pytest.raises(ValueError, match="constant"):
        stats.pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(ValueError, match="length"):
        stats.pearson([1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        stats.pearson([1], [1])


def test_pearson_matches_scipy():
    scipy_stats = pytest.importorskip("scipy.stats")
    xs = [0.3, 1.7, 2.2, 5.9, 4.1, 3.3]
    ys = [10.0, 8.5, 9.9, 1.2, 4.4, 6.0]
    assert stats.pearson(xs, ys) == pytest.approx(scipy_stats.pearsonr(xs, ys)[0], abs=1e-12)


def test_summary_small_sample():
    s = stats.summary([1.5, 2.5, 2.9])
    assert s.count == 3 and s.histogram == {1: 1, 2: 2}
    assert s.mean == pytest.approx(6.9 / 3)
    assert s.peak_bucket == 2
    with pytest.raises(ValueError):
        stats.summary([])
    with pytest.raises(ValueError):
        stats.floor_histogram([0.0])


def test_full_scale_fixture_shape():
    assert stats.FULL_SCALE.total == 1_431_167
    assert stats.GETCOUNT_TABLE.total == 1_431_167
    assert [b for b, _ in stats.FULL_SCALE_ROWS] == list(range(100))
    with pytest.raises(ValueError):
        stats.ReplayFixture(((1, 2), (1, 3)))


def test_histogram_csv_round_trip_and_errors():
    text = stats.histogram_csv({3: 1, 40: 7})
    assert text == "bucket,count\n3,1\n40,7\n"
    assert stats.parse_histogram_csv(text) == {3: 1, 40: 7}
    with pytest.raises(RecordError):
        stats.parse_histogram_csv("b,c\n")
    with pytest.raises(RecordError, match="line 3"):
        stats.parse_histogram_csv("bucket,count\n1,2\nx\n")


def test_records_round_trip(tmp_path):
    recs = [MeasurementRecord("p", f"i{k}", TimingSpec(2, 1), [0.2 + k, 0.3 + k], [0.1, 0.1]) for k in range(3)]
    path = tmp_path / "r.jsonl"
    stats.save_records(recs, path)
    assert stats.load_records(path) == recs
    r, pts = stats.correlate_runtime_speedup(recs, with_points=True)
    assert pts == [(x.t_baseline, x.g) for x in recs] and r == pytest.approx(1.0)


def test_load_records_reports_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    good = MeasurementRecord("p", "i", TimingSpec(1, 1), [0.2], [0.1]).to_dict()
    import json
    path.write_text(json.dumps(good) + "\n" + json.dumps({**good, "g": 5.0}) + "\n")
    with pytest.raises(RecordError, match="line 2"):
        stats.load_records(path)


@given(st.lists(finite, min_size=3, max_size=30), st.data())
def test_pearson_affine_invariance(xs, data):
    ys = data.draw(st.lists(finite, min_size=len(xs), max_size=len(xs)))
    assume(len(set(xs)) > 1 and len(set(ys)) > 1)
    try:
        r = stats.pearson(xs, ys)
    except ValueError:
        return  # deviations can underflow for nearly constant samples
    a = data.draw(st.floats(min_value=0.1, max_value=100))
    b = data.draw(st.floats(min_value=-100, max_value=100))
    assume(max(xs) - min(xs) > 1e-3 and max(ys) - min(ys) > 1e-3)
    assert -1.0 <= r <= 1.0
    assert stats.pearson([a * x + b for x in xs], ys) == pytest.approx(r, abs=1e-6)
    assert stats.pearson(xs, ys) == pytest.approx(stats.pearson(ys, xs), abs=1e-12)


@given(st.lists(factors, min_size=1, max_size=40), st.randoms())
def test_histogram_permutation_invariant(gs, rnd):
    shuffled = list(gs)
    rnd.shuffle(shuffled)
    assert stats.floor_histogram(gs) == stats.floor_histogram(shuffled)
    assert sum(stats.floor_histogram(gs).values()) == len(gs)


@given(st.lists(factors, min_size=1, max_size=40), st.sampled_from([0.5, 2.0, 4.0, 0.25, 8.0]))
def test_summary_scale_equivariance(gs, k):
    # powers of two keep the scaled values exact, so equivariance holds to rounding of the moments
    s, t = stats.summary(gs), stats.summary([k * g for g in gs])
    assert t.mean == pytest.approx(k * s.mean, rel=1e-12, abs=1e-12)
    assert t.std == pytest.approx(k * s.std, rel=1e-12, abs=1e-12)
    assert t.min_g == k * s.min_g and t.max_g == k * s.max_g


@given(st.lists(factors, min_size=1, max_size=40))
def test_summary_moments_bounded(gs):
    s = stats.summary(gs)
    assert s.min_g <= s.mean <= s.max_g
    assert s.std >= 0 and s.std <= (s.max_g - s.min_g) + 1e-9
    assert math.isfinite(s.std)
