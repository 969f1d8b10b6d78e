"""Correctness-gated benchmarking of baseline/candidate function pairs."""

from .model import (
    CodeSizeReport, CorrectnessReport, Dataset, DatasetItem, ExecutableUnit,
    MeasurementRecord, PairRegistry, StatsSummary, TimingSpec, VariantPair,
)

__version__ = "0.1.0"
