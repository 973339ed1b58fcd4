"""
Volume bounds side by side
==========================

For each dimension, the ZPW volume is a lower bound for the maximal volume and
the new upper bound is within a factor d+1 of it.  The older bound is
astronomically larger, so only its logarithm is printed.
"""
from latsimplex import bounds_report

print(f"{'d':>2} {'zpw':>14} {'upper':>14} {'ratio':>6} {'tau bound':>14} {'log10 old':>10}")
for d in range(1, 8):
    r = bounds_report(d, 1)
    tau = f"{float(r.thm32_bound):.6g}" if r.thm32_bound is not None else "-"
    print(f"{d:>2} {float(r.zpw_volume):>14.6g} {float(r.thm12_bound):>14.6g} "
          f"{str(r.ratio_thm12_over_zpw):>6} {tau:>14} {r.pikhurko_old_log10:>10}")

###############################################################################
# Full report
# -----------

print(bounds_report(3, 2).dumps())
