"""Brute-force reference answers, kept independent of the corpus listings.

Nothing here imports from ``varbench.corpus``.  The functions favour obvious
index arithmetic over speed.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

BAND = 256


@dataclass(frozen=True)
class ReferenceResult:
    case_id: str
    input_digest: str
    expected: str

    def to_dict(self) -> dict:
        return {"case_id": self.case_id, "input_digest": self.input_digest, "expected": self.expected}


def digest(value) -> str:
    return hashlib.sha256(json.dumps(value, sort_keys=True).encode()).hexdigest()[:16]


def _band_offsets(n: int) -> list:
    offsets = []
    k = 0
    while k * BAND < n:
        offsets.append(k * BAND)
        k += 1
    return offsets


def ref_extrema(histogram) -> list:
    """Per band: (first nonzero index, last nonzero index) or (255, 0) when empty.

    A trailing band shorter than 256 bins raises IndexError, matching a scan
    that insists on reading all 256 positions.
    """
    n = len(histogram)
    result = []
    for off in _band_offsets(n):
        if off + BAND > n:
            raise IndexError("list index out of range")
        nonzero = [j for j in range(BAND) if histogram[off + j] != 0]
        if nonzero:
            result.append((nonzero[0], nonzero[-1]))
        else:
            result.append((255, 0))
    return result


def ref_count(histogram) -> list:
    n = len(histogram)
    totals = []
    for off in _band_offsets(n):
        total = 0
        j = off
        while j < n and j < off + BAND:
            total = total + histogram[j]
            j += 1
        totals.append(total)
    return totals


def ref_first_nonzero(values, limit: int = BAND):
    j = 0
    while j < len(values) and j < limit:
        if values[j]:
            return j
        j += 1
    return None


def ref_series_check(alist):
    """Outcome of coefficient-array validation: ``None`` when valid, else the error message.

    Emptiness is checked before dimensionality, as in the upstream routine.
    """
    def shape(a):
        if isinstance(a, (list, tuple)):
            if len(a) == 0:
                return (0,)
            inner = shape(a[0])
            return (len(a),) + inner
        return ()

    shapes = [shape(a) for a in alist]
    sizes = []
    for s in shapes:
        size = 1
        for d in s:
            size *= d
        sizes.append(size)
    if any(z == 0 for z in sizes):
        return "Coefficient array is empty"
    if any(len(s) > 1 for s in shapes):
        return "Coefficient array is not 1-d"
    return None


def freeze(cases, func, path) -> list:
    """Write ``ReferenceResult`` JSONL for ``(case_id, input)`` pairs and return the results."""
    results = []
    for case_id, value in cases:
        try:
            expected = repr(func(value))
        except Exception as exc:
            expected = f"error {type(exc).__name__}: {exc}"
        results.append(ReferenceResult(case_id, digest(value), expected))
    Path(path).write_text("".join(json.dumps(r.to_dict()) + "\n" for r in results), encoding="utf-8")
    return results


def _outcome(func, value):
    try:
        return ("value", func(value))
    except Exception as exc:
        return ("error", type(exc).__name__)


def small_histograms(lengths=(256, 512, 257, 258, 513), values=(1, 2, 3)):
    """Histograms in increasing complexity: all zero, one nonzero bin, then two."""
    for n in lengths:
        yield [0] * n
        for p in range(n):
            for v in values:
                h = [0] * n
                h[p] = v
                yield h
    for n in lengths[:2]:
        for p in range(0, n, 17):
            for q in range(p + 1, n, 17):
                h = [0] * n
                h[p], h[q] = 1, 2
                yield h


def find_counterexample(func, reference=None, candidates=None):
    """First candidate histogram on which ``func`` and ``reference`` disagree, or None."""
    reference = reference or ref_extrema
    for h in candidates if candidates is not None else small_histograms():
        if _outcome(func, h) != _outcome(reference, h):
            return h
    return None


def reference_cases(seed: int = 0, count: int = 200) -> list:
    """Seeded histogram cases drawn with the standard library generator."""
    import random
    rng = random.Random(seed)
    cases = []
    for k in range(count):
        bands = rng.randint(1, 3)
        density = rng.choice((0.0, 0.01, 0.2, 1.0))
        h = [rng.randint(1, 9) if rng.random() < density else 0 for _ in range(BAND * bands)]
        cases.append((f"seed{seed}-{k:04d}", h))
    return cases


def main(argv=None) -> int:
    import argparse
    p = argparse.ArgumentParser(prog="python -m varbench.oracle",
                                description="Write reference results as JSONL fixtures.")
    p.add_argument("out_dir")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    args = p.parse_args(argv)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cases = reference_cases(args.seed, args.count)
    for name, func in (("extrema", ref_extrema), ("count", ref_count)):
        freeze(cases, func, out / f"reference_{name}.jsonl")
    freeze(cases, ref_first_nonzero, out / "reference_first_nonzero.jsonl")
    print(f"wrote {3 * len(cases)} reference results to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
