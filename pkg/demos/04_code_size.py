"""Bytecode size, summed over a function and every code object nested in it."""

from varbench import codesize, corpus

backend = codesize.DEFAULT_BACKEND
print("backend:", backend.id)

# %% the early-exit rewrite is longer but faster
e = corpus.entry("getextrema/original-vs-final")
a, b = codesize.analyze(e.pair.baseline), codesize.analyze(e.pair.candidate)
for rep in (a, b):
    print(rep.unit_id, rep.total_size, rep.parts)
print("delta:", codesize.compare_sizes(a, b))

# %% host sizes next to the reference-host sizes
seen = set()
for e in corpus.catalog():
    for u in (e.pair.baseline, e.pair.candidate):
        if u.id in seen:
            continue
        seen.add(u.id)
        rep = codesize.analyze(u)
        print(f"{u.id:<28} {rep.total_size:>4}  recorded: {codesize.REFERENCE_SIZES.get(u.id, '-')}")
