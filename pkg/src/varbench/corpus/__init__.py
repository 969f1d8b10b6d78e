"""Registered variant pairs: validated rewrites, flawed rewrites and idiom families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .. import data
from ..model import Dataset, ExecutableUnit, PairRegistry, TimingSpec, VariantPair
from . import getcount, getextrema, micro, series

CASE_STUDY = "case-study"
FLAWED = "flawed"
MICRO = "micro"

CASE_STUDY_SPEC = TimingSpec(repeat=10, number=1000)


@dataclass(frozen=True)
class Expectation:
    metric: str
    value: float
    tolerance_policy: str = "informational"


@dataclass(frozen=True)
class CorpusEntry:
    pair: VariantPair
    category: str
    family: str
    exposure_pattern: str
    reference_expectation: tuple = ()
    gated: bool = True
    notes: str = ""

    def __post_init__(self):
        if self.category == FLAWED and self.pair.expected_equivalent:
            raise ValueError(f"{self.pair.id}: flawed entries cannot be expected equivalent")
        if self.category == CASE_STUDY and not self.pair.expected_equivalent:
            raise ValueError(f"{self.pair.id}: case-study entries must be expected equivalent")

    @property
    def id(self) -> str:
        return self.pair.id

    @property
    def gate_expectation(self) -> str:
        if not self.gated:
            return "speed-only"
        return "equivalent" if self.pair.expected_equivalent else "divergent"

    def to_dict(self) -> dict:
        p = self.pair
        return {
            "id": p.id,
            "category": self.category,
            "family": self.family,
            "baseline": {"id": p.baseline.id, "listing_ref": p.baseline.listing_ref},
            "candidate": {"id": p.candidate.id, "listing_ref": p.candidate.listing_ref},
            "expected_equivalent": p.expected_equivalent,
            "gate_expectation": self.gate_expectation,
            "exposure_pattern": self.exposure_pattern,
            "dataset_hint": p.dataset_hint,
            "defaults": {"repeat": p.default_spec.repeat, "number": p.default_spec.number},
            "reference_expectation": [
                {"metric": e.metric, "value": e.value, "tolerance_policy": e.tolerance_policy}
                for e in self.reference_expectation
            ],
        }


def _unit(uid, func, ref, arity="one", tags=(), description=""):
    return ExecutableUnit(id=uid, func=func, description=description or (func.__doc__ or "").strip(),
                          listing_ref=ref, arity=arity, tags=frozenset(tags))


PILLOW = "pillow ImageStat"

EXTREMA_ORIG = _unit("getextrema/original", getextrema.getextrema_original,
                     f"{PILLOW}._getextrema, upstream before the rewrite", tags={"corpus"})
COUNT_ORIG = _unit("getcount/original", getcount.getcount_original,
                   f"{PILLOW}._getcount, upstream before the rewrite", tags={"corpus"})
SERIES_ORIG = _unit("as_series/original", series.as_series,
                    "numpy polyutils.as_series validation segment, upstream before the rewrite",
                    tags={"corpus"})


def _extrema_pair(suffix, func, ref, equivalent, tags):
    cand = _unit(f"getextrema/{suffix}", func, ref, tags=tags)
    return VariantPair(f"getextrema/original-vs-{suffix}", EXTREMA_ORIG, cand,
                       expected_equivalent=equivalent, default_spec=CASE_STUDY_SPEC,
                       dataset_hint="band-histogram")


def _micro_pair(pid, base, cand, spec, hint="none", equivalent=True):
    return VariantPair(pid, base, cand, expected_equivalent=equivalent, default_spec=spec,
                       dataset_hint=hint)


def _m(uid, func, ref, arity="none"):
    return _unit(uid, func, ref, arity=arity, tags={"micro"})


LOOP_SPEC = TimingSpec(repeat=10, number=1000)
FIRST_NONZERO_SPEC = TimingSpec(repeat=20, number=10_000)
ASSIGN_SPEC = TimingSpec(repeat=20, number=100_000)
TERNARY_SPEC = TimingSpec(repeat=20, number=100_000)
ARRAY_SPEC = TimingSpec(repeat=20, number=10_000)


def _build() -> tuple:
    entries = []
    add = entries.append
    mean_g = lambda v: Expectation("mean_g", v)

    merged = _unit("getextrema/merged", getextrema.getextrema_merged,
                   f"{PILLOW}._getextrema as merged upstream", tags={"corpus"})
    add(CorpusEntry(
        VariantPair("getextrema/original-vs-final", EXTREMA_ORIG, merged, True, CASE_STUDY_SPEC,
                    "band-histogram"),
        CASE_STUDY, "getextrema", "edge_concentrated",
        (mean_g(38.41), Expectation("std_g", 8.06), Expectation("peak_bucket", 40),
         Expectation("pearson_runtime_speedup", 0.68)),
        notes="early exit from both ends of each 256-bin band"))

    flawed = (
        ("oneliner", getextrema.getextrema_oneliner, "first rewrite attempt: one-line min/max of each slice",
         "uniform_dense", "takes min/max of the counts instead of the bin indices"),
        ("wholescan", getextrema.getextrema_wholescan, "second rewrite attempt: enumerate over the whole slice",
         "two_band_tail", "ignores the 256-bin bound, so later bands leak into earlier ones"),
        ("valuefilter", getextrema.getextrema_valuefilter, "third rewrite attempt: filter zero counts",
         "uniform_dense", "returns count values instead of bin indices"),
        ("islice", getextrema.getextrema_islice, "hand-written islice/reversed rewrite",
         "non_multiple_length", "mis-indexes a trailing band shorter than 256 bins"),
    )
    for suffix, func, ref, pattern, why in flawed:
        add(CorpusEntry(_extrema_pair(suffix, func, ref, False, {"corpus", "flawed"}),
                        FLAWED, "getextrema", pattern, notes=why))

    add(CorpusEntry(
        _extrema_pair("pivotal", getextrema.getextrema_pivotal,
                      "early-exit rewrite with a conditional-expression return", True, {"corpus"}),
        CASE_STUDY, "getextrema", "edge_concentrated",
        notes="the conditional binds to the second tuple element only; still equivalent"))
    add(CorpusEntry(
        _extrema_pair("manual-final", getextrema.getextrema_manual_final,
                      "early-exit rewrite with explicit if/else, as submitted upstream", True, {"corpus"}),
        CASE_STUDY, "getextrema", "edge_concentrated"))

    add(CorpusEntry(
        VariantPair("getcount/original-vs-sum", COUNT_ORIG,
                    _unit("getcount/sum", getcount.getcount_sum, f"{PILLOW}._getcount using sum()",
                          tags={"corpus"}),
                    True, CASE_STUDY_SPEC, "band-histogram"),
        CASE_STUDY, "getcount", "uniform_dense",
        (mean_g(2.99), Expectation("std_g", 0.23)),
        notes="builtin sum replaces functools.reduce(operator.add, ...)"))

    add(CorpusEntry(
        VariantPair("as_series/original-vs-earlyexit", SERIES_ORIG,
                    _unit("as_series/earlyexit", series.as_series_opt,
                          "numpy polyutils.as_series validation segment with an early-exit loop",
                          tags={"corpus"}),
                    True, CASE_STUDY_SPEC, "coefficient-series", error_path_timing=True),
        CASE_STUDY, "as_series", "coeff_series_empty",
        (Expectation("normal_path_g_min", 1.01), Expectation("normal_path_g_max", 1.09),
         Expectation("error_path_g_min", 1.04), Expectation("error_path_g_max", 1.30)),
        notes="stops at the first empty coefficient array instead of taking min over all sizes"))

    loop_ref = "counting loop to 10000"
    range_unit = _m("loop/range", micro.for_repeat, f"{loop_ref}: for ... in range")
    for uid, func, label, rel in (
            ("loop/while", micro.while_impl, "while with a native int", 1.7),
            ("loop/numpy-ushort", micro.numpy_impl, "while with a boxed unsigned-short counter", 6.68),
            ("loop/fixedint-uint16", micro.fixedint_impl, "while with a boxed fixed-width counter", 53.6),
            ("loop/unroll", micro.range_unroll, "range with step 2 and a manual second counter", 1.14),
            ("loop/itertools-count", micro.itertools_impl, "while over itertools.count", 2.3)):
        name = uid.split("/", 1)[1]
        add(CorpusEntry(
            _micro_pair(f"micro/loop-family/{name}-vs-range",
                        _m(uid, func, f"{loop_ref}: {label}"), range_unit, LOOP_SPEC),
            MICRO, "micro/loop-family", "none", (mean_g(rel),)))

    add(CorpusEntry(
        _micro_pair("micro/generator-vs-loop",
                    _m("first-nonzero/generator", micro.generator,
                       "first nonzero bin: next() over islice(enumerate())", "one"),
                    _m("first-nonzero/loop", micro.loop, "first nonzero bin: for ... in range(256)", "one"),
                    FIRST_NONZERO_SPEC, hint="band-histogram"),
        MICRO, "micro/generator-vs-loop", "first_nonzero",
        tuple(Expectation(f"g[checks={k}]", v) for k, v in
              ((1, 4.6), (16, 2.18), (128, 1.46), (240, 1.34), (256, 1.33)))))
    add(CorpusEntry(
        _micro_pair("micro/assignment",
                    _m("assignment/line-by-line", micro.linebyline, "ten sequential assignments"),
                    _m("assignment/tuple", micro.tuple_impl, "one ten-way tuple assignment"),
                    ASSIGN_SPEC),
        MICRO, "micro/assignment", "none", (mean_g(1.1),)))
    add(CorpusEntry(
        _micro_pair("micro/ternary-vs-if",
                    _m("ternary/ternary", micro.ternary, "conditional-expression return", "star"),
                    _m("ternary/explicit-if", micro.explicit_if, "explicit if/else return", "star"),
                    TERNARY_SPEC, hint="scalar-pair", equivalent=False),
        MICRO, "micro/ternary-vs-if", "scalar_pairs",
        (Expectation("g[min-gt-max]", 1.02), Expectation("g[min-lt-max]", 1.29)),
        gated=False, notes="listings return different values; timed only"))
    add(CorpusEntry(
        _micro_pair("micro/append-vs-comprehension",
                    _m("array-init/append", micro.append, "list built with append"),
                    _m("array-init/comprehension", micro.comprehension, "list comprehension"),
                    ARRAY_SPEC),
        MICRO, "micro/append-vs-comprehension", "none", (mean_g(1.0),)))
    return tuple(entries)


@lru_cache(maxsize=1)
def catalog() -> tuple:
    return _build()


def registry() -> PairRegistry:
    return PairRegistry(e.pair for e in catalog())


def entry(pair_id: str) -> CorpusEntry:
    for e in catalog():
        if e.id == pair_id:
            return e
    raise KeyError(pair_id)


def families() -> list:
    return sorted({e.family for e in catalog()})


def control_pair() -> VariantPair:
    """Two distinct units wrapping the same function, for noise-band checks."""
    def noop():
        return None
    return VariantPair("control/identity", ExecutableUnit("control/a", noop, arity="none"),
                       ExecutableUnit("control/b", noop, arity="none"),
                       default_spec=TimingSpec(repeat=10, number=100_000))


def _series_fixed(kind: str) -> Dataset:
    cases = series.NORMAL_CASES if kind == "normal" else series.ERROR_CASES
    return data.series_dataset(cases, f"as_series-{kind}")


def gate_datasets(e: CorpusEntry, items: int = 1000, seed: int = 0) -> list:
    """Datasets the entry is gated on: the full suite for case studies, the exposure pattern otherwise."""
    hint = e.pair.dataset_hint
    if hint == "none":
        return [Dataset("empty", (), "none")]
    if hint == "scalar-pair":
        return [data.scalar_pair_dataset()]
    if e.family == "micro/generator-vs-loop":
        return [data.first_nonzero_dataset(),
                data.synth(data.PatternSpec("single_bin", bands=1, seed=seed, items=items))]
    if hint == "coefficient-series":
        return ([_series_fixed("normal"), _series_fixed("error")]
                + data.exposure_suite(data.SERIES_PATTERNS, items=items, seed=seed))
    if e.category == CASE_STUDY:
        return data.exposure_suite(data.HISTOGRAM_PATTERNS, items=items, seed=seed)
    return [data.synth(data.PatternSpec(e.exposure_pattern, seed=seed, items=items))]


def bench_dataset(e: CorpusEntry, items: int = 20, seed: int = 0) -> Dataset:
    hint = e.pair.dataset_hint
    if hint == "none":
        return Dataset("empty", (), "none")
    if hint == "scalar-pair":
        return data.scalar_pair_dataset()
    if e.family == "micro/generator-vs-loop":
        return data.first_nonzero_dataset()
    if hint == "coefficient-series":
        both = _series_fixed("normal").items + _series_fixed("error").items
        return Dataset("as_series-documented", both, "coefficient-series")
    return data.synth(data.PatternSpec(e.exposure_pattern, seed=seed, items=items))


def listing_source(unit: ExecutableUnit) -> str:
    import inspect
    return inspect.getsource(unit.func)


DOCUMENTATION_FIXTURES = {
    "getextrema/numpy": {
        "source": getextrema.NUMPY_VARIANT_SOURCE,
        "note": getextrema.NUMPY_VARIANT_NOTE,
        "executed": False,
    },
}
