"""Differential correctness checks between a baseline and a candidate."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable

from .model import (
    EMPTY_ITEM_ID,
    NO_PAYLOAD,
    Counterexample,
    CorrectnessReport,
    Dataset,
    ExecutableUnit,
    VariantPair,
)

MAX_COUNTEREXAMPLES = 10
DIGEST_LIMIT = 256

# Portable error taxonomy: an exception maps to the first of these it derives from.
_TAXONOMY = (
    ValueError, IndexError, KeyError, TypeError, ZeroDivisionError, OverflowError,
    ArithmeticError, LookupError, AttributeError, StopIteration, RecursionError,
    NotImplementedError, RuntimeError, AssertionError, MemoryError,
)


def error_class_name(exc: BaseException) -> str:
    for cls in _TAXONOMY:
        if isinstance(exc, cls):
            return cls.__name__
    return type(exc).__name__


@dataclass(frozen=True)
class Outcome:
    kind: str
    value: Any = None
    error_class: str = ""
    error_message: str = ""

    @classmethod
    def of_value(cls, value) -> "Outcome":
        return cls("value", value=value)

    @classmethod
    def of_error(cls, error_class: str, message: str) -> "Outcome":
        return cls("error", error_class=error_class, error_message=message)

    @property
    def is_error(self) -> bool:
        return self.kind == "error"

    def digest(self) -> str:
        if self.is_error:
            text = f"error {self.error_class}: {self.error_message}"
        else:
            text = f"value {self.value!r}"
        return text[:DIGEST_LIMIT]


def run_once(unit: ExecutableUnit, payload=NO_PAYLOAD) -> Outcome:
    try:
        return Outcome.of_value(unit(payload))
    except Exception as exc:
        return Outcome.of_error(error_class_name(exc), str(exc))


def structural_equal(a, b) -> bool:
    """Exact, order-sensitive deep equality.  ``1``, ``1.0`` and ``True`` all differ."""
    if type(a) is not type(b):
        return False
    if isinstance(a, float):
        return a == b or (math.isnan(a) and math.isnan(b))
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(structural_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, dict):
        return list(a) == list(b) and all(structural_equal(a[k], b[k]) for k in a)
    if hasattr(a, "dtype") and hasattr(a, "shape") and hasattr(a, "tolist"):
        # array-like values: same shape, same element type, same elements
        return (a.shape == b.shape and a.dtype == b.dtype
                and structural_equal(a.tolist(), b.tolist()))
    return a == b


@dataclass(frozen=True)
class Comparator:
    id: str
    compare_values: Callable[[Any, Any], bool]

    def compare(self, x: Outcome, y: Outcome) -> bool:
        if x.is_error or y.is_error:
            return (x.is_error and y.is_error
                    and x.error_class == y.error_class
                    and x.error_message == y.error_message)
        return self.compare_values(x.value, y.value)


EXACT = Comparator("exact", structural_equal)


def gate_pair(pair: VariantPair, dataset: Dataset, comparator: Comparator = EXACT,
              workers: int = 1) -> CorrectnessReport:
    """Run both units on every item and count the items whose outcomes differ.

    Counterexamples follow dataset order and are capped at ten.
    """
    if len(dataset):
        cases = [(it.id, it.payload) for it in dataset]
    elif pair.payload_free:
        cases = [(EMPTY_ITEM_ID, NO_PAYLOAD)]
    else:
        raise ValueError(f"pair {pair.id} needs a non-empty dataset")

    def check(case):
        item_id, payload = case
        b = run_once(pair.baseline, payload)
        c = run_once(pair.candidate, payload)
        return item_id, b, c, comparator.compare(b, c)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(check, cases))
    else:
        results = [check(c) for c in cases]

    bad = [(i, b, c) for i, b, c, ok in results if not ok]
    return CorrectnessReport(
        pair_id=pair.id,
        total=len(results),
        mismatched=len(bad),
        counterexamples=tuple(Counterexample(i, b.digest(), c.digest())
                              for i, b, c in bad[:MAX_COUNTEREXAMPLES]),
    )
