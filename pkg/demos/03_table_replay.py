"""Rebuilding the full-scale distribution from its bucket table."""

from varbench import report, stats

# %% every bucket expands to `count` copies of its midpoint
gs = stats.expand_fixture(stats.FULL_SCALE)
s = stats.summary(gs)
print(f"images={s.count}  mean={s.mean:.2f}  std={s.std:.2f}  peak bucket={s.peak_bucket}")
print("reported:", stats.REPORTED["getextrema_mean"], stats.REPORTED["getextrema_std"])

# %% midpoints shift the mean by at most half a bucket; the peak is exact
top = sorted(s.histogram.items(), key=lambda kv: -kv[1])[:5]
print("five largest buckets:", top)

# %% the same replay for the getcount rewrite
c = stats.summary(stats.expand_fixture(stats.GETCOUNT_TABLE))
print(f"getcount: mean={c.mean:.2f} std={c.std:.2f} peak={c.peak_bucket}")

# %% chart as a standalone file
with open("full-scale.html", "w", encoding="utf-8") as f:
    f.write(report.render_html("bucket table replay", s))
print("wrote full-scale.html")
