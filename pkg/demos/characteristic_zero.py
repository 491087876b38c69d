"""
The characteristic zero limit
=============================

With ell = 0, or any ell larger than n, only the torus series remains.
The correspondence then sends a partition to its transpose, which is the
classical Springer correspondence for GL(n).
"""

from modspringer import ZERO, CharParams, full_table, has_cuspidal, transpose

for ell in (ZERO, 7, 2):
    table = full_table(CharParams(5, ell))
    print(f"ell={ell}: {len(table.series())} series, cuspidal={has_cuspidal(CharParams(5, ell))}")

table = full_table(CharParams(5, ZERO))
for row in table.rows:
    lam = row.irr[1]
    print(f"{str(lam):10s} -> {row.orbit}")
    assert row.orbit == transpose(lam)

###############################################################################
# Cuspidal pairs exist only when n is a power of ell. In characteristic zero
# that leaves just n = 1.

print([n for n in range(1, 33) if has_cuspidal(CharParams(n, 2))])
print([n for n in range(1, 33) if has_cuspidal(CharParams(n, ZERO))])
