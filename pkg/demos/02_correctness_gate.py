"""The gate runs both units on every item and counts disagreements."""

from varbench import corpus, data
from varbench.gate import gate_pair

# %% a validated rewrite agrees everywhere
final = corpus.entry("getextrema/original-vs-final")
for ds in corpus.gate_datasets(final, items=200):
    rep = gate_pair(final.pair, ds)
    print(f"{ds.id:<34} {rep.mismatched}/{rep.total}")

# %% each flawed rewrite breaks on the pattern built to expose it
for e in corpus.catalog():
    if e.category != corpus.FLAWED:
        continue
    rep = gate_pair(e.pair, data.synth(data.PatternSpec(e.exposure_pattern, items=200)))
    print(f"\n{e.id}: fraction {rep.fraction:.2f} on {e.exposure_pattern} ({e.notes})")
    c = rep.counterexamples[0]
    print("  baseline :", c.baseline[:90])
    print("  candidate:", c.candidate[:90])
