"""Synthetic datasets and JSONL dataset persistence.

Histogram payloads are flat lists of ``256 * k`` non-negative bin counts, one
256-bin block per image band.  Generation is driven by a 64-bit linear
congruential generator with Knuth's MMIX constants::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

and draws the upper 32 bits of each new state, so a ``PatternSpec`` yields the
same dataset on every host.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .model import Dataset, DatasetItem, RecordError, iter_jsonl

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1

MAX_COUNT = 5000

HISTOGRAM_PATTERNS = (
    "edge_concentrated", "uniform_dense", "empty_band", "single_bin",
    "two_band_tail", "non_multiple_length", "grayscale_like",
)
SERIES_PATTERNS = ("coeff_series", "coeff_series_empty")
PATTERNS = HISTOGRAM_PATTERNS + SERIES_PATTERNS

SCHEMA_OF = {p: "band-histogram" for p in HISTOGRAM_PATTERNS}
SCHEMA_OF.update({p: "coefficient-series" for p in SERIES_PATTERNS})


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64
        self.next32()

    def next32(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state >> 32

    def below(self, n: int) -> int:
        """Uniform-ish integer in ``[0, n)`` by multiply-shift."""
        return (self.next32() * n) >> 32

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class PatternSpec:
    pattern: str
    bands: int = 3
    seed: int = 0
    items: int = 1

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}; choose from {', '.join(PATTERNS)}")
        if self.bands < 1 or self.items < 1:
            raise ValueError("bands and items must be >= 1")

    @property
    def dataset_id(self) -> str:
        return f"{self.pattern}-b{self.bands}-s{self.seed}-n{self.items}"

    @classmethod
    def parse(cls, text: str, **defaults) -> "PatternSpec":
        """Parse ``pattern[:key=value,...]``, e.g. ``uniform_dense:bands=1,items=50``."""
        name, _, rest = text.partition(":")
        kw = dict(defaults)
        for part in filter(None, rest.split(",")):
            key, sep, value = part.partition("=")
            if not sep or key not in ("bands", "seed", "items"):
                raise ValueError(f"bad pattern option {part!r}")
            kw[key] = int(value)
        return cls(name, **kw)


def _sparse_band(rng: Lcg64, out: list, length: int = 256) -> None:
    for _ in range(length):
        out.append(rng.between(1, MAX_COUNT) if rng.below(4) == 0 else 0)


def _histogram(spec: PatternSpec, rng: Lcg64) -> list:
    p, bands = spec.pattern, spec.bands
    h: list = []
    if p == "edge_concentrated":
        for _ in range(bands):
            band = [0] * 256
            band[0] = rng.between(1, MAX_COUNT)
            band[255] = rng.between(1, MAX_COUNT)
            h.extend(band)
    elif p == "uniform_dense":
        h = [rng.between(1, MAX_COUNT) for _ in range(256 * bands)]
    elif p == "empty_band":
        empty = rng.below(bands)
        for b in range(bands):
            if b == empty:
                h.extend([0] * 256)
            else:
                _sparse_band(rng, h)
    elif p == "single_bin":
        h = [0] * (256 * bands)
        h[rng.below(len(h))] = rng.between(1, MAX_COUNT)
    elif p == "two_band_tail":
        n = max(bands, 2)
        for _ in range(n):
            _sparse_band(rng, h)
        h[256 * (n - 1) + rng.below(256)] = rng.between(1, MAX_COUNT)
    elif p == "non_multiple_length":
        for _ in range(bands):
            _sparse_band(rng, h)
        _sparse_band(rng, h, rng.between(1, 255))
    elif p == "grayscale_like":
        centre = rng.between(64, 191)
        width = rng.between(4, 48)
        h = [0] * 256
        for i in range(centre - width, centre + width + 1):
            h[i] = 1 + (MAX_COUNT * (width + 1 - abs(i - centre))) // (width + 1) + rng.below(50)
    return h


def _series(spec: PatternSpec, rng: Lcg64) -> list:
    alist = []
    for _ in range(rng.between(1, 5)):
        if rng.below(4) == 0:
            alist.append(rng.between(-9, 9))
        else:
            alist.append([rng.between(-9, 9) for _ in range(rng.between(1, 8))])
    if spec.pattern == "coeff_series_empty":
        alist[rng.below(len(alist))] = []
    return alist


def synth(spec: PatternSpec) -> Dataset:
    """Deterministic dataset for ``spec``; results are cached per spec."""
    return _synth_cached(spec)


@lru_cache(maxsize=64)
def _synth_cached(spec: PatternSpec) -> Dataset:
    rng = Lcg64(spec.seed)
    schema = SCHEMA_OF[spec.pattern]
    make = _series if schema == "coefficient-series" else _histogram
    bands = 1 if spec.pattern == "grayscale_like" else spec.bands
    items = []
    for k in range(spec.items):
        meta = {"dataset": spec.dataset_id, "pattern": spec.pattern, "seed": str(spec.seed),
                "schema": schema}
        if schema == "band-histogram":
            meta["bands"] = str(bands)
        items.append(DatasetItem(f"{spec.pattern}-s{spec.seed}-{k:05d}", make(spec, rng), meta))
    return Dataset(spec.dataset_id, tuple(items), schema)


def exposure_suite(patterns=HISTOGRAM_PATTERNS, items: int = 1000, bands: int = 3, seed: int = 0) -> list:
    return [synth(PatternSpec(p, bands=bands, seed=seed, items=items)) for p in patterns]


def first_nonzero_dataset(checks=(1, 16, 128, 240, 256)) -> Dataset:
    """One 256-bin band per entry of ``checks`` whose first nonzero bin sits at ``check - 1``."""
    items = []
    for c in checks:
        h = [0] * 256
        for i in range(c - 1, 256):
            h[i] = 1
        meta = {"dataset": "first-nonzero", "schema": "band-histogram", "checks": str(c)}
        items.append(DatasetItem(f"checks-{c}", h, meta))
    return Dataset("first-nonzero", tuple(items), "band-histogram")


def scalar_pair_dataset(pairs=((100, 7), (7, 100))) -> Dataset:
    meta = {"dataset": "scalar-pairs", "schema": "scalar-pair"}
    items = tuple(DatasetItem(f"pair-{a}-{b}", [a, b], dict(meta)) for a, b in pairs)
    return Dataset("scalar-pairs", items, "scalar-pair")


def series_dataset(cases, dataset_id: str) -> Dataset:
    meta = {"dataset": dataset_id, "schema": "coefficient-series"}
    items = tuple(DatasetItem(f"{dataset_id}-{k}", c, dict(meta)) for k, c in enumerate(cases))
    return Dataset(dataset_id, items, "coefficient-series")


def _check_payload(schema: str, payload) -> str | None:
    if schema == "band-histogram":
        if not isinstance(payload, list) or not all(
                type(x) is int and x >= 0 for x in payload):
            return "band-histogram payload must be a list of non-negative integers"
    elif schema == "scalar-pair":
        if not isinstance(payload, list) or len(payload) != 2:
            return "scalar-pair payload must be a two-element list"
    elif schema == "coefficient-series":
        if not isinstance(payload, list):
            return "coefficient-series payload must be a list"
    elif schema == "none":
        if payload is not None:
            return "payload-free dataset items must carry a null payload"
    return None


def dataset_to_jsonl(d: Dataset) -> str:
    return "".join(json.dumps(it.to_dict(), sort_keys=True) + "\n" for it in d)


def save_dataset(d: Dataset, path) -> None:
    Path(path).write_text(dataset_to_jsonl(d), encoding="utf-8")


def load_dataset(path, schema: str | None = None) -> Dataset:
    path = Path(path)
    items, dataset_id = [], path.stem
    for lineno, obj in iter_jsonl(path.read_text(encoding="utf-8")):
        try:
            item = DatasetItem.from_dict(obj)
        except RecordError as exc:
            raise RecordError(str(exc), lineno) from None
        line_schema = item.meta.get("schema", schema or "none")
        if schema is None:
            schema = line_schema
            dataset_id = item.meta.get("dataset", dataset_id)
        elif line_schema != schema:
            raise RecordError(f"schema {line_schema!r} differs from {schema!r}", lineno)
        problem = _check_payload(schema, item.payload)
        if problem:
            raise RecordError(problem, lineno)
        items.append(item)
    try:
        return Dataset(dataset_id, tuple(items), schema or "none")
    except ValueError as exc:
        raise RecordError(str(exc)) from None
