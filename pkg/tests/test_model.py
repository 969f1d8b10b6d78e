import json

import pytest
from hypothesis import given, strategies as st

from varbench.model import (
    EMPTY_ITEM_ID, MEASUREMENT_FIELDS, CodeSizeReport, CorrectnessReport, Counterexample,
    Dataset, DatasetItem, ExecutableUnit, MeasurementRecord, PairRegistry, RecordError,
    RegistrationError, StatsSummary, TimingSpec, VariantPair, iter_jsonl,
)


def _unit(uid="u", func=lambda x: x, arity="one"):
    return ExecutableUnit(uid, func, arity=arity)


def test_timing_spec_validation():
    assert TimingSpec().repeat == 10 and TimingSpec().number == 1000
    assert TimingSpec().within_measured_ranges()
    assert not TimingSpec(repeat=3, number=10).within_measured_ranges()
    with pytest.raises(ValueError):
        TimingSpec(repeat=0)
    with pytest.raises(ValueError):
        TimingSpec(number=0)
    assert TimingSpec().replace(number=50) == TimingSpec(10, 50)


def test_unit_arity():
    assert _unit(func=lambda a, b: a - b, arity="star")([5, 2]) == 3
    assert _unit(func=lambda: 7, arity="none")() == 7
    with pytest.raises(ValueError):
        _unit(arity="two")


def test_registry_rejects_duplicates_and_unknown():
    p = VariantPair("p", _unit("a"), _unit("b"))
    reg = PairRegistry([p])
    assert reg.get("p") is p and "p" in reg and len(reg) == 1
    with pytest.raises(RegistrationError):
        reg.register(p)
    with pytest.raises(RegistrationError):
        reg.get("missing")


def test_dataset_rejects_duplicate_ids():
    with pytest.raises(ValueError):
        Dataset("d", (DatasetItem("x", 1), DatasetItem("x", 2)), "none")


def test_dataset_item_round_trip():
    it = DatasetItem("x", [1, 2], {"k": "v"})
    assert DatasetItem.from_dict(it.to_dict()) == it
    with pytest.raises(RecordError):
        DatasetItem.from_dict({"id": "x", "payload": 1, "meta": {}, "extra": 0})


def test_record_recomputes_derived_fields():
    r = MeasurementRecord("p", "i", TimingSpec(3, 10), [0.3, 0.2, 0.25], [0.1, 0.2, 0.15])
    assert r.t_baseline == 0.2 and r.t_candidate == 0.1 and r.g == 2.0
    d = r.to_dict()
    assert list(d) == list(MEASUREMENT_FIELDS)
    d["g"] = 3.0
    with pytest.raises(RecordError):
        MeasurementRecord.from_dict(d)


def test_record_rejects_wrong_repeat_count():
    with pytest.raises(RecordError):
        MeasurementRecord("p", "i", TimingSpec(3, 10), [0.1], [0.1, 0.1, 0.1])


def test_record_flags_serialized_only_when_present():
    r = MeasurementRecord("p", EMPTY_ITEM_ID, TimingSpec(1, 1), [1e-9], [1e-9], flags=("resolution-limited",))
    d = r.to_dict()
    assert d["flags"] == ["resolution-limited"] and d["item_id"] == "∅"
    assert MeasurementRecord.from_dict(json.loads(json.dumps(d))) == r


durations = st.floats(min_value=1e-9, max_value=1e3, allow_nan=False)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.lists(durations, min_size=n, max_size=n),
                                                    st.lists(durations, min_size=n, max_size=n))),
       st.integers(1, 10_000))
def test_record_json_round_trip(totals, number):
    b, c = totals
    r = MeasurementRecord("pair/x", "item-1", TimingSpec(len(b), number), b, c)
    back = MeasurementRecord.from_dict(json.loads(json.dumps(r.to_dict())))
    assert back == r
    assert back.g == back.t_baseline / back.t_candidate


def test_correctness_report_fraction_and_round_trip():
    rep = CorrectnessReport("p", 4, 1, (Counterexample("i", "value 1", "value 2"),))
    assert rep.fraction == 0.25
    assert CorrectnessReport.from_dict(json.loads(json.dumps(rep.to_dict()))) == rep
    with pytest.raises(RecordError):
        CorrectnessReport("p", 1, 2)


def test_stats_summary_round_trip():
    s = StatsSummary(3, 2.0, 0.5, 1.5, 2.5, {1: 1, 2: 2})
    assert s.peak_bucket == 2
    assert StatsSummary.from_dict(json.loads(json.dumps(s.to_dict()))) == s
    with pytest.raises(RecordError):
        StatsSummary(2, 1.0, 0.0, 1.0, 1.0, {1: 1})


def test_code_size_report_additivity_enforced():
    r = CodeSizeReport("u", 10, (("a", 4), ("b", 6)), "x")
    assert CodeSizeReport.from_dict(r.to_dict()) == r
    with pytest.raises(RecordError):
        CodeSizeReport("u", 11, (("a", 4), ("b", 6)), "x")


def test_iter_jsonl_reports_line_numbers():
    rows = list(iter_jsonl('{"a": 1}\n\n{"b": 2}\n'))
    assert rows == [(1, {"a": 1}), (3, {"b": 2})]
    with pytest.raises(RecordError, match="line 2"):
        list(iter_jsonl('{"a": 1}\n{bad\n'))
