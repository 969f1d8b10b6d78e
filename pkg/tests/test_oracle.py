import ast
import itertools
import json

import pytest

from varbench import data, oracle
from varbench.corpus import getcount, getextrema, micro, series
from varbench.gate import gate_pair
from varbench.corpus import entry

FLAWED_FUNCS = {
    "getextrema/original-vs-oneliner": getextrema.getextrema_oneliner,
    "getextrema/original-vs-wholescan": getextrema.getextrema_wholescan,
    "getextrema/original-vs-valuefilter": getextrema.getextrema_valuefilter,
    "getextrema/original-vs-islice": getextrema.getextrema_islice,
}


def test_oracle_does_not_import_corpus():
    tree = ast.parse(open(oracle.__file__).read())
    names = {a.name for n in ast.walk(tree) if isinstance(n, ast.Import) for a in n.names}
    names |= {n.module or "" for n in ast.walk(tree) if isinstance(n, ast.ImportFrom)}
    assert not any("corpus" in n for n in names)


def test_ref_extrema_examples():
    assert oracle.ref_extrema([0] * 256) == [(255, 0)]
    h = [0] * 256
    h[0] = h[255] = 1
    assert oracle.ref_extrema(h) == [(0, 255)]
    with pytest.raises(IndexError):
        oracle.ref_extrema([0] * 300)


def test_band_one_result_unaffected_by_band_two_exhaustive():
    # every 2-band histogram with at most two nonzero bins
    zero = [0] * 512
    positions = range(512)
    cases = itertools.chain([()], ((p,) for p in positions), itertools.combinations(positions, 2))
    for nz in cases:
        h = list(zero)
        for p in nz:
            h[p] = 1
        first = [p for p in nz if p < 256]
        want = (first[0], first[-1]) if first else (255, 0)
        assert oracle.ref_extrema(h)[0] == want


def test_ref_count_and_first_nonzero():
    assert oracle.ref_count([1] * 256) == [256]
    assert oracle.ref_count([0] * 256) == [0]
    assert oracle.ref_count([1] * 300) == [256, 44]
    assert oracle.ref_first_nonzero([0, 0, 3]) == 2
    assert oracle.ref_first_nonzero([0] * 256) is None


def test_ref_series_check():
    assert oracle.ref_series_check([[1, 2], 3]) is None
    assert oracle.ref_series_check([[1], []]) == "Coefficient array is empty"
    assert oracle.ref_series_check([[[1, 2]]]) == "Coefficient array is not 1-d"


def _seeded_histograms(n):
    per = n // len(data.HISTOGRAM_PATTERNS) + 1
    out = []
    for k, p in enumerate(data.HISTOGRAM_PATTERNS):
        bands = 1 + k % 3
        out += [it.payload for it in data.synth(data.PatternSpec(p, bands=bands, seed=11 + k, items=per))]
    return out[:n]


def _outcome(f, x):
    try:
        return "value", f(x)
    except Exception as exc:
        return "error", type(exc).__name__


def test_baselines_agree_with_oracle_on_10000_seeded_cases():
    cases = _seeded_histograms(10_000)
    assert len(cases) == 10_000
    for h in cases:
        assert _outcome(getextrema.getextrema_original, h) == _outcome(oracle.ref_extrema, h)
        assert getcount.getcount_original(h) == oracle.ref_count(h)
        assert micro.loop(h[:256]) == oracle.ref_first_nonzero(h)


def test_series_baseline_agrees_with_oracle():
    specs = [data.PatternSpec(p, seed=s, items=500) for p in data.SERIES_PATTERNS for s in (0, 1)]
    cases = [it.payload for sp in specs for it in data.synth(sp)]
    cases += list(series.NORMAL_CASES) + list(series.ERROR_CASES)
    for alist in cases:
        try:
            series.as_series(alist)
            got = None
        except ValueError as exc:
            got = str(exc)
        assert got == oracle.ref_series_check(alist), alist


def test_frozen_reference_results_match_baselines(fixtures_dir):
    cases = dict(oracle.reference_cases(0, 200))
    funcs = {"extrema": getextrema.getextrema_original, "count": getcount.getcount_original}
    for name, func in funcs.items():
        lines = (fixtures_dir / "reference" / f"reference_{name}.jsonl").read_text().splitlines()
        assert len(lines) == 200
        for line in lines:
            ref = json.loads(line)
            h = cases[ref["case_id"]]
            assert oracle.digest(h) == ref["input_digest"]
            assert repr(func(h)) == ref["expected"]


@pytest.mark.parametrize("pair_id", sorted(FLAWED_FUNCS))
def test_frozen_counterexamples(fixtures_dir, pair_id):
    frozen = json.loads((fixtures_dir / "counterexamples.json").read_text())[pair_id]
    h = [0] * frozen["length"]
    for i, v in frozen["nonzero"]:
        h[i] = v
    base = _outcome(getextrema.getextrema_original, h)
    cand = _outcome(FLAWED_FUNCS[pair_id], h)
    assert repr(base) == frozen["reference"]
    assert repr(cand) == frozen["candidate"]
    assert base != cand
    ds = data.Dataset("cx", (data.DatasetItem("cx", h),), "band-histogram")
    assert gate_pair(entry(pair_id).pair, ds).mismatched == 1


def test_brute_force_search_is_reproducible():
    assert oracle.find_counterexample(getextrema.getextrema_original) is None
    assert oracle.find_counterexample(getextrema.getextrema_oneliner) == [0] * 256
