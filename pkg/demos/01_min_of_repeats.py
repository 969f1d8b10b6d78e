"""Timing a pair: each run is `number` calls, the kept time is the fastest of `repeat` runs."""

from varbench import corpus, data
from varbench.model import TimingSpec
from varbench.timing import ScriptedClock, measure_pair, time_unit

# %% a scripted clock makes the arithmetic visible
pair = corpus.control_pair()
clock = ScriptedClock([0.010, 0.008, 0.009, 0.005, 0.004, 0.006])
(rec,) = measure_pair(pair, data.Dataset("empty", (), "none"), TimingSpec(repeat=3, number=1000), clock)
print("baseline runs  ", rec.baseline_totals, "-> min", rec.t_baseline)
print("candidate runs ", rec.candidate_totals, "-> min", rec.t_candidate)
print("g =", rec.g)

# %% the same thing on the real clock
e = corpus.entry("getcount/original-vs-sum")
ds = data.synth(data.PatternSpec("uniform_dense", items=5))
for r in measure_pair(e.pair, ds):
    print(f"{r.item_id}: t_orig={r.t_baseline * 1e3:.2f} ms  t_opt={r.t_candidate * 1e3:.2f} ms  g={r.g:.2f}")

# %% raw run totals of a single unit
print(time_unit(e.pair.candidate, ds.items[0].payload, TimingSpec(repeat=10, number=100)))
