"""Band histograms from portable pixmaps, then the getextrema pair on them."""

import pathlib

from varbench import corpus, data, ppm
from varbench.gate import gate_pair

here = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "ppm"
ds = ppm.ingest_ppm(here)
for it in ds:
    nz = {i: v for i, v in enumerate(it.payload) if v}
    print(f"{it.id:<10} {it.meta['width']}x{it.meta['height']} bands={it.meta['bands']}  nonzero bins {nz}")

# %% the parsed histograms go straight into the gate
rep = gate_pair(corpus.entry("getextrema/original-vs-final").pair, ds)
print("gate:", rep.mismatched, "of", rep.total, "differ")

# %% and round-trip through JSONL unchanged
data.save_dataset(ds, "pixmaps.jsonl")
print(data.load_dataset("pixmaps.jsonl") == ds)
