"""Idiom-level comparisons.  Factors here depend on the interpreter version."""

import statistics

from varbench import corpus
from varbench.corpus import micro
from varbench.model import TimingSpec
from varbench.timing import measure_pair

# %% reduced call counts keep this demo short; the catalog defaults are larger
for e in corpus.catalog():
    if e.category != corpus.MICRO:
        continue
    spec = TimingSpec(repeat=10, number=max(e.pair.default_spec.number // 10, 10))
    if "boxed" in e.pair.baseline.listing_ref:
        spec = TimingSpec(repeat=3, number=10)
    recs = measure_pair(e.pair, corpus.bench_dataset(e), spec)
    g = statistics.median(r.g for r in recs)
    ref = ", ".join(f"{x.metric}={x.value}" for x in e.reference_expectation)
    print(f"{e.id:<48} g={g:6.2f}   recorded: {ref}")

# %% the two branch listings are timed only; they return different things
print(micro.ternary(100, 7), micro.explicit_if(100, 7))
