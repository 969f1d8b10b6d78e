"""Core records exchanged between the timing, gate, stats and report layers.

All record types are frozen dataclasses.  Each one that persists has a
``to_dict``/``from_dict`` pair producing plain JSON-compatible values.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping

#: Item id used for the single measurement taken when a dataset is empty.
EMPTY_ITEM_ID = "∅"

#: Sentinel meaning "call the unit without any argument".
NO_PAYLOAD = object()

RESOLUTION_LIMITED = "resolution-limited"
ERROR_PATH = "error-path"

MEASURED_NUMBER_RANGE = (1000, 10_000_000)
MEASURED_REPEAT_RANGE = (10, 100)


class RegistrationError(KeyError):
    pass


class RecordError(ValueError):
    """A record failed validation or could not be parsed."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


@dataclass(frozen=True)
class ExecutableUnit:
    """One function under test.

    ``arity`` controls how a dataset payload is delivered: ``"one"`` passes
    it as the single argument, ``"star"`` unpacks it as positional arguments
    and ``"none"`` calls the function with no arguments at all.
    """

    id: str
    func: Callable[..., Any]
    description: str = ""
    listing_ref: str = "synthetic"
    arity: str = "one"
    tags: frozenset = frozenset()

    def __post_init__(self):
        if not self.id:
            raise ValueError("unit id must be non-empty")
        if self.arity not in ("one", "star", "none"):
            raise ValueError(f"unknown arity {self.arity!r}")
        object.__setattr__(self, "tags", frozenset(self.tags))

    def args_for(self, payload=NO_PAYLOAD) -> tuple:
        if payload is NO_PAYLOAD or self.arity == "none":
            return ()
        if self.arity == "star":
            return tuple(payload)
        return (payload,)

    def __call__(self, payload=NO_PAYLOAD):
        return self.func(*self.args_for(payload))


@dataclass(frozen=True)
class TimingSpec:
    repeat: int = 10
    number: int = 1000
    warmup: bool = True

    def __post_init__(self):
        if int(self.repeat) != self.repeat or self.repeat < 1:
            raise ValueError(f"repeat must be an integer >= 1, got {self.repeat!r}")
        if int(self.number) != self.number or self.number < 1:
            raise ValueError(f"number must be an integer >= 1, got {self.number!r}")

    def within_measured_ranges(self) -> bool:
        lo, hi = MEASURED_NUMBER_RANGE
        rlo, rhi = MEASURED_REPEAT_RANGE
        return lo <= self.number <= hi and rlo <= self.repeat <= rhi

    def replace(self, repeat: int | None = None, number: int | None = None) -> "TimingSpec":
        return TimingSpec(
            repeat=self.repeat if repeat is None else repeat,
            number=self.number if number is None else number,
            warmup=self.warmup,
        )


@dataclass(frozen=True)
class VariantPair:
    id: str
    baseline: ExecutableUnit
    candidate: ExecutableUnit
    expected_equivalent: bool = True
    default_spec: TimingSpec = field(default_factory=TimingSpec)
    dataset_hint: str = "none"
    error_path_timing: bool = False

    def __post_init__(self):
        if not self.id:
            raise ValueError("pair id must be non-empty")
        if self.baseline.id == self.candidate.id:
            raise ValueError(f"pair {self.id}: baseline and candidate share id {self.baseline.id!r}")

    @property
    def payload_free(self) -> bool:
        return self.dataset_hint == "none"


class PairRegistry:
    """Insertion-ordered collection of pairs keyed by id."""

    def __init__(self, pairs: Iterable[VariantPair] = ()):
        self._pairs: dict[str, VariantPair] = {}
        for p in pairs:
            self.register(p)

    def register(self, pair: VariantPair) -> None:
        if pair.id in self._pairs:
            raise RegistrationError(f"pair {pair.id!r} already registered")
        self._pairs[pair.id] = pair

    def get(self, pair_id: str) -> VariantPair:
        try:
            return self._pairs[pair_id]
        except KeyError:
            raise RegistrationError(f"unknown pair {pair_id!r}") from None

    def __contains__(self, pair_id) -> bool:
        return pair_id in self._pairs

    def __iter__(self) -> Iterator[VariantPair]:
        return iter(list(self._pairs.values()))

    def __len__(self) -> int:
        return len(self._pairs)

    def ids(self) -> list[str]:
        return list(self._pairs)


def register_pair(pair: VariantPair, registry: PairRegistry) -> None:
    registry.register(pair)


@dataclass(frozen=True)
class DatasetItem:
    id: str
    payload: Any
    meta: Mapping[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"id": self.id, "payload": self.payload, "meta": dict(self.meta)}

    @classmethod
    def from_dict(cls, d: Mapping) -> "DatasetItem":
        if not isinstance(d, Mapping) or set(d) != {"id", "payload", "meta"}:
            raise RecordError("dataset line must be an object with keys id, payload, meta")
        if not isinstance(d["id"], str) or not isinstance(d["meta"], Mapping):
            raise RecordError("dataset id must be a string and meta an object")
        return cls(id=d["id"], payload=d["payload"], meta={str(k): str(v) for k, v in d["meta"].items()})


@dataclass(frozen=True)
class Dataset:
    id: str
    items: tuple = ()
    schema: str = "none"

    def __post_init__(self):
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        seen = set()
        for it in items:
            if it.id in seen:
                raise ValueError(f"dataset {self.id}: duplicate item id {it.id!r}")
            seen.add(it.id)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[DatasetItem]:
        return iter(self.items)


MEASUREMENT_FIELDS = (
    "pair_id", "item_id", "repeat", "number",
    "baseline_totals", "candidate_totals", "t_baseline", "t_candidate", "g",
)


@dataclass(frozen=True)
class MeasurementRecord:
    """Raw repeat totals of one dataset item plus the derived improvement factor.

    ``t_baseline``, ``t_candidate`` and ``g`` are recomputed from the totals.
    Passing them explicitly is allowed only if they agree exactly.
    """

    pair_id: str
    item_id: str
    spec: TimingSpec
    baseline_totals: tuple
    candidate_totals: tuple
    t_baseline: float | None = None
    t_candidate: float | None = None
    g: float | None = None
    flags: tuple = ()

    def __post_init__(self):
        bt = tuple(float(x) for x in self.baseline_totals)
        ct = tuple(float(x) for x in self.candidate_totals)
        if len(bt) != self.spec.repeat or len(ct) != self.spec.repeat:
            raise RecordError(
                f"expected {self.spec.repeat} totals per unit, got {len(bt)} and {len(ct)}")
        if any(not (x > 0 and math.isfinite(x)) for x in bt + ct):
            raise RecordError("all durations must be positive and finite")
        tb, tc = min(bt), min(ct)
        g = tb / tc
        for name, given, derived in (("t_baseline", self.t_baseline, tb),
                                     ("t_candidate", self.t_candidate, tc),
                                     ("g", self.g, g)):
            if given is not None and given != derived:
                raise RecordError(f"{name}={given!r} inconsistent with totals (expected {derived!r})")
        object.__setattr__(self, "baseline_totals", bt)
        object.__setattr__(self, "candidate_totals", ct)
        object.__setattr__(self, "t_baseline", tb)
        object.__setattr__(self, "t_candidate", tc)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "flags", tuple(sorted(set(self.flags))))

    @property
    def resolution_limited(self) -> bool:
        return RESOLUTION_LIMITED in self.flags

    def to_dict(self) -> dict:
        d = {
            "pair_id": self.pair_id,
            "item_id": self.item_id,
            "repeat": self.spec.repeat,
            "number": self.spec.number,
            "baseline_totals": list(self.baseline_totals),
            "candidate_totals": list(self.candidate_totals),
            "t_baseline": self.t_baseline,
            "t_candidate": self.t_candidate,
            "g": self.g,
        }
        if self.flags:
            d["flags"] = list(self.flags)
        if not self.spec.warmup:
            d["warmup"] = False
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "MeasurementRecord":
        if not isinstance(d, Mapping):
            raise RecordError("record must be a JSON object")
        missing = [k for k in MEASUREMENT_FIELDS if k not in d]
        if missing:
            raise RecordError(f"missing fields: {', '.join(missing)}")
        extra = set(d) - set(MEASUREMENT_FIELDS) - {"flags", "warmup"}
        if extra:
            raise RecordError(f"unexpected fields: {', '.join(sorted(extra))}")
        try:
            spec = TimingSpec(repeat=d["repeat"], number=d["number"], warmup=d.get("warmup", True))
            return cls(
                pair_id=str(d["pair_id"]),
                item_id=str(d["item_id"]),
                spec=spec,
                baseline_totals=d["baseline_totals"],
                candidate_totals=d["candidate_totals"],
                t_baseline=d["t_baseline"],
                t_candidate=d["t_candidate"],
                g=d["g"],
                flags=tuple(d.get("flags", ())),
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, RecordError):
                raise
            raise RecordError(str(exc)) from exc


@dataclass(frozen=True)
class Counterexample:
    item_id: str
    baseline: str
    candidate: str


@dataclass(frozen=True)
class CorrectnessReport:
    pair_id: str
    total: int
    mismatched: int
    counterexamples: tuple = ()

    def __post_init__(self):
        if not 0 <= self.mismatched <= self.total:
            raise RecordError(f"mismatched={self.mismatched} outside [0, total={self.total}]")
        object.__setattr__(self, "counterexamples", tuple(self.counterexamples))

    @property
    def fraction(self) -> float:
        return self.mismatched / self.total if self.total else 0.0

    def to_dict(self) -> dict:
        return {
            "pair_id": self.pair_id,
            "total": self.total,
            "mismatched": self.mismatched,
            "fraction": self.fraction,
            "counterexamples": [[c.item_id, c.baseline, c.candidate] for c in self.counterexamples],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "CorrectnessReport":
        rep = cls(
            pair_id=d["pair_id"],
            total=int(d["total"]),
            mismatched=int(d["mismatched"]),
            counterexamples=tuple(Counterexample(*c) for c in d.get("counterexamples", ())),
        )
        if "fraction" in d and d["fraction"] != rep.fraction:
            raise RecordError("fraction inconsistent with counts")
        return rep


@dataclass(frozen=True)
class StatsSummary:
    count: int
    mean: float
    std: float
    min_g: float
    max_g: float
    histogram: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if sum(self.histogram.values()) != self.count:
            raise RecordError("histogram counts do not add up to count")

    @property
    def peak_bucket(self) -> int | None:
        if not self.histogram:
            return None
        return max(sorted(self.histogram), key=lambda b: self.histogram[b])

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "mean": self.mean,
            "std": self.std,
            "min_g": self.min_g,
            "max_g": self.max_g,
            "histogram": [[b, self.histogram[b]] for b in sorted(self.histogram)],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "StatsSummary":
        return cls(
            count=int(d["count"]), mean=float(d["mean"]), std=float(d["std"]),
            min_g=float(d["min_g"]), max_g=float(d["max_g"]),
            histogram={int(b): int(c) for b, c in d["histogram"]},
        )


@dataclass(frozen=True)
class CodeSizeReport:
    unit_id: str
    total_size: int
    parts: tuple = ()
    backend_id: str = "unsupported"
    size_unit: str = "bytes"
    flags: tuple = ()

    def __post_init__(self):
        parts = tuple((str(n), int(s)) for n, s in self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "flags", tuple(self.flags))
        if self.total_size != sum(s for _, s in parts):
            raise RecordError("total_size must equal the sum of part sizes")

    @property
    def supported(self) -> bool:
        return "unsupported" not in self.flags

    @property
    def consistent(self) -> bool:
        return "inconsistent" not in self.flags

    def to_dict(self) -> dict:
        return {
            "unit_id": self.unit_id,
            "total_size": self.total_size,
            "parts": [list(p) for p in self.parts],
            "backend_id": self.backend_id,
            "size_unit": self.size_unit,
            "flags": list(self.flags),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "CodeSizeReport":
        return cls(unit_id=d["unit_id"], total_size=int(d["total_size"]),
                   parts=tuple(tuple(p) for p in d["parts"]), backend_id=d["backend_id"],
                   size_unit=d.get("size_unit", "bytes"), flags=tuple(d.get("flags", ())))


def dump_jsonl(rows: Iterable[dict]) -> str:
    return "".join(json.dumps(r, ensure_ascii=False, sort_keys=False) + "\n" for r in rows)


def iter_jsonl(text: str) -> Iterator[tuple]:
    """Yield ``(lineno, obj)`` for every non-blank line, raising RecordError on bad JSON."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield lineno, json.loads(line)
        except json.JSONDecodeError as exc:
            raise RecordError(f"invalid JSON: {exc.msg}", lineno) from None
