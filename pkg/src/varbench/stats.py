"""Reductions over improvement factors: floor buckets, moments, correlation."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .model import MeasurementRecord, RecordError, StatsSummary, iter_jsonl, dump_jsonl

# Floor(g) -> image count for the _getextrema rewrite over 1,431,167 images.
FULL_SCALE_ROWS = (
    (0, 0), (1, 1), (2, 15), (3, 73), (4, 206), (5, 347), (6, 554), (7, 941),
    (8, 1267), (9, 1744), (10, 2237), (11, 2700), (12, 3261), (13, 3865),
    (14, 4680), (15, 5099), (16, 5706), (17, 6308), (18, 6867), (19, 7373),
    (20, 7745), (21, 8538), (22, 9697), (23, 10550), (24, 10197), (25, 10578),
    (26, 11198), (27, 12213), (28, 14516), (29, 17100), (30, 18408), (31, 19757),
    (32, 20334), (33, 25315), (34, 34979), (35, 50686), (36, 75008), (37, 74050),
    (38, 67220), (39, 111896), (40, 204995), (41, 198600), (42, 107758),
    (43, 41314), (44, 20683), (45, 12754), (46, 9901), (47, 10292), (48, 15058),
    (49, 25051), (50, 29930), (51, 25890), (52, 20040), (53, 14809), (54, 10833),
    (55, 7644), (56, 4931), (57, 2780), (58, 1446), (59, 692), (60, 399),
    (61, 313), (62, 234), (63, 206), (64, 171), (65, 147), (66, 132), (67, 121),
    (68, 91), (69, 63), (70, 94), (71, 123), (72, 128), (73, 120), (74, 96),
    (75, 39), (76, 24), (77, 13), (78, 8), (79, 2), (80, 2), (81, 1), (82, 3),
    (83, 0), (84, 0), (85, 2), (86, 1), (87, 0), (88, 0), (89, 1), (90, 0),
    (91, 0), (92, 2), (93, 0), (94, 0), (95, 0), (96, 0), (97, 0), (98, 1),
    (99, 0),
)

# Same layout for the _getcount rewrite.
GETCOUNT_ROWS = ((0, 0), (1, 423), (2, 42742), (3, 1364625), (4, 22185),
                 (5, 268), (6, 923), (7, 0), (8, 1))

REPORTED = {
    "getextrema_mean": 38.41,
    "getextrema_std": 8.06,
    "getextrema_peak": 40,
    "getextrema_pearson_runtime_speedup": 0.68,
    "image_count": 1_431_167,
    "getcount_mean": 2.99,
    "getcount_std": 0.23,
}


@dataclass(frozen=True)
class ReplayFixture:
    rows: tuple

    def __post_init__(self):
        rows = tuple((int(b), int(c)) for b, c in self.rows)
        buckets = [b for b, _ in rows]
        if len(set(buckets)) != len(buckets):
            raise ValueError("replay buckets must be unique")
        if any(b < 0 or c < 0 for b, c in rows):
            raise ValueError("replay buckets and counts must be non-negative")
        object.__setattr__(self, "rows", rows)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.rows)

    def histogram(self) -> dict:
        return {b: c for b, c in self.rows if c}


FULL_SCALE = ReplayFixture(FULL_SCALE_ROWS)
GETCOUNT_TABLE = ReplayFixture(GETCOUNT_ROWS)


def expand_fixture(fixture: ReplayFixture) -> list:
    """Reconstruct raw factors as ``count`` copies of each bucket midpoint."""
    out: list = []
    for bucket, count in fixture.rows:
        out.extend([bucket + 0.5] * count)
    return out


def floor_histogram(gs: Iterable[float]) -> dict:
    counts: Counter = Counter()
    for g in gs:
        if not g > 0:
            raise ValueError(f"improvement factors must be positive, got {g!r}")
        counts[math.floor(g)] += 1
    return dict(sorted(counts.items()))


def summary(gs: Sequence[float]) -> StatsSummary:
    """Mean, population standard deviation, extrema and floor histogram."""
    gs = list(gs)
    if not gs:
        raise ValueError("summary of an empty sample")
    hist = floor_histogram(gs)
    n = len(gs)
    mean = math.fsum(gs) / n
    std = math.sqrt(math.fsum((g - mean) ** 2 for g in gs) / n)
    lo, hi = min(gs), max(gs)
    # fsum rounding can move the mean of a constant sample off by one ulp
    mean = min(max(mean, lo), hi)
    return StatsSummary(count=n, mean=mean, std=std, min_g=lo, max_g=hi, histogram=hist)


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    xs, ys = list(map(float, xs)), list(map(float, ys))
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise ValueError("pearson needs at least two observations")
    n = len(xs)
    mx, my = math.fsum(xs) / n, math.fsum(ys) / n
    dx = [x - mx for x in xs]
    dy = [y - my for y in ys]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0:
        raise ValueError("first series is constant")
    if syy == 0:
        raise ValueError("second series is constant")
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def scatter_points(records: Sequence[MeasurementRecord]) -> list:
    return [(r.t_baseline, r.g) for r in records]


def correlate_runtime_speedup(records: Sequence[MeasurementRecord], with_points: bool = False):
    """Pearson coefficient between baseline runtime and improvement factor."""
    pts = scatter_points(records)
    r = pearson([p[0] for p in pts], [p[1] for p in pts])
    return (r, pts) if with_points else r


def load_records(path) -> list:
    text = Path(path).read_text(encoding="utf-8")
    out = []
    for lineno, obj in iter_jsonl(text):
        try:
            out.append(MeasurementRecord.from_dict(obj))
        except RecordError as exc:
            raise RecordError(str(exc), lineno) from None
    return out


def save_records(records: Iterable[MeasurementRecord], path) -> None:
    Path(path).write_text(dump_jsonl(r.to_dict() for r in records), encoding="utf-8")


def histogram_csv(hist: dict) -> str:
    lines = ["bucket,count"] + [f"{b},{hist[b]}" for b in sorted(hist)]
    return "\n".join(lines) + "\n"


def parse_histogram_csv(text: str) -> dict:
    lines = [l for l in text.splitlines() if l.strip()]
    if not lines or lines[0] != "bucket,count":
        raise RecordError("CSV must start with header 'bucket,count'", 1)
    out = {}
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            b, c = line.split(",")
            out[int(b)] = int(c)
        except ValueError:
            raise RecordError(f"bad CSV row {line!r}", lineno) from None
    return out
