"""Min-of-repeats timing of variant pairs.

Each unit is run ``repeat`` times; every run is the wall time of ``number``
back-to-back invocations.  The representative time is the minimum run and
the improvement factor is ``t_baseline / t_candidate``.

Clocks count integer nanoseconds so that scripted clocks reproduce their
durations exactly.
"""

from __future__ import annotations

import copy
import itertools
import threading
import time
from typing import Iterable, Sequence

from .model import (
    EMPTY_ITEM_ID,
    ERROR_PATH,
    NO_PAYLOAD,
    RESOLUTION_LIMITED,
    Dataset,
    ExecutableUnit,
    MeasurementRecord,
    TimingSpec,
    VariantPair,
)

__all__ = [
    "PerfClock", "ScriptedClock", "MeasurementError", "time_unit", "min_total",
    "speedup", "measure_pair", "run_lock",
]


class PerfClock:
    """The host's monotonic high-resolution counter."""

    def __init__(self):
        self.resolution = time.get_clock_info("perf_counter").resolution

    @staticmethod
    def now_ns() -> int:
        return time.perf_counter_ns()

    def now(self) -> float:
        return self.now_ns() / 1e9


class ScriptedClock:
    """Deterministic clock whose successive start/stop readings are ``durations`` apart.

    Readings come in pairs: the first call of a pair returns the current
    timestamp, the second advances it by the next scripted duration.  Once the
    script is exhausted it starts over, so one clock can serve several units.
    """

    def __init__(self, durations: Sequence[float], resolution: float = 1e-9):
        if not durations:
            raise ValueError("script must contain at least one duration")
        self._steps = [round(d * 1e9) for d in durations]
        self._pos = 0
        self._t = 0
        self._started = False
        self.resolution = resolution

    def now_ns(self) -> int:
        if self._started:
            self._t += self._steps[self._pos % len(self._steps)]
            self._pos += 1
        self._started = not self._started
        return self._t

    def now(self) -> float:
        return self.now_ns() / 1e9


class MeasurementError(RuntimeError):
    def __init__(self, unit_id: str, cause: BaseException | str, partial: Sequence = ()):
        super().__init__(f"unit {unit_id!r} failed during measurement: {cause!r}")
        self.unit_id = unit_id
        self.cause = cause
        self.partial = list(partial)


class _RunLock:
    def __init__(self):
        self._lock = threading.Lock()

    def __enter__(self):
        if not self._lock.acquire(blocking=False):
            raise MeasurementError("<harness>", "another measurement is already running in this process")
        return self

    def __exit__(self, *exc):
        self._lock.release()
        return False


run_lock = _RunLock()


def _clamp(durations: Iterable[float], resolution: float) -> tuple:
    out, limited = [], False
    for d in durations:
        if d < resolution:
            d, limited = resolution, True
        out.append(d)
    return out, limited


def _time_raw(unit: ExecutableUnit, payload, spec: TimingSpec, clock,
              guarded: bool = False, warmup: bool | None = None) -> tuple:
    func = unit.func
    args = unit.args_for(payload)
    warmup = spec.warmup if warmup is None else warmup
    try:
        if warmup:
            func(*args)
        totals = []
        for _ in range(spec.repeat):
            loop = itertools.repeat(None, spec.number)
            if guarded:
                t0 = clock.now_ns()
                for _ in loop:
                    try:
                        func(*args)
                    except Exception:
                        pass
                t1 = clock.now_ns()
            else:
                t0 = clock.now_ns()
                for _ in loop:
                    func(*args)
                t1 = clock.now_ns()
            totals.append((t1 - t0) / 1e9)
    except Exception as exc:
        raise MeasurementError(unit.id, exc) from exc
    return _clamp(totals, clock.resolution)


def _raises(unit: ExecutableUnit, payload) -> bool:
    try:
        unit(payload)
    except Exception:
        return True
    return False


def time_unit(unit: ExecutableUnit, payload=NO_PAYLOAD, spec: TimingSpec = TimingSpec(),
              clock=None) -> list:
    """Return ``spec.repeat`` run totals in seconds, each clamped to the clock resolution."""
    clock = clock or PerfClock()
    totals, _ = _time_raw(unit, payload, spec, clock)
    return totals


def min_total(totals: Sequence[float]) -> float:
    if not totals:
        raise ValueError("min_total needs at least one duration")
    if any(t <= 0 for t in totals):
        raise ValueError("durations must be positive")
    return min(totals)


def speedup(t_baseline: float, t_candidate: float, resolution: float = 0.0,
            with_flag: bool = False):
    """Improvement factor of the candidate over the baseline.

    Durations below ``resolution`` are raised to it; with ``with_flag`` the
    result is ``(g, clamped)``.
    """
    if t_baseline <= 0 or t_candidate <= 0:
        raise ValueError(f"durations must be positive, got {t_baseline!r}, {t_candidate!r}")
    clamped = t_baseline < resolution or t_candidate < resolution
    g = max(t_baseline, resolution) / max(t_candidate, resolution)
    return (g, clamped) if with_flag else g


def measure_pair(pair: VariantPair, dataset: Dataset, spec: TimingSpec | None = None,
                 clock=None) -> list:
    """Time baseline then candidate on each dataset item.

    An empty dataset yields one record with item id ``∅`` taken without any
    payload.  Each unit receives its own deep copy of the payload.

    Pairs with ``error_path_timing`` are probed once per item; when either unit
    raises, both are timed inside a ``try`` loop and the record is flagged
    ``error-path``.  The probe replaces the warmup call.
    """
    spec = spec or pair.default_spec
    clock = clock or PerfClock()
    if len(dataset) and dataset.schema != pair.dataset_hint:
        raise ValueError(
            f"pair {pair.id} expects {pair.dataset_hint!r} data, dataset {dataset.id} is {dataset.schema!r}")
    cases = [(it.id, it.payload) for it in dataset] or [(EMPTY_ITEM_ID, NO_PAYLOAD)]
    records: list = []
    with run_lock:
        for item_id, payload in cases:
            guarded, warmup = False, None
            if pair.error_path_timing:
                guarded = _raises(pair.baseline, payload) or _raises(pair.candidate, payload)
                warmup = False
            try:
                b_totals, b_lim = _time_raw(pair.baseline, _fresh(payload), spec, clock, guarded, warmup)
                c_totals, c_lim = _time_raw(pair.candidate, _fresh(payload), spec, clock, guarded, warmup)
            except MeasurementError as err:
                err.partial = records
                raise
            flags = ((RESOLUTION_LIMITED,) if (b_lim or c_lim) else ()) + ((ERROR_PATH,) if guarded else ())
            records.append(MeasurementRecord(pair.id, item_id, spec, b_totals, c_totals, flags=flags))
    return records


def _fresh(payload):
    return payload if payload is NO_PAYLOAD else copy.deepcopy(payload)
