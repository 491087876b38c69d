"""
Recovering the series of an orbit from digits
==============================================

Take an orbit mu and write each gap mu_j - mu_{j+1} in base ell. Digit i
of gap j is the number of parts equal to j in the component at block size
ell**i. Nothing is searched.
"""

from modspringer import Partition, ell_adic_digits, psi_co, series_of

mu = Partition([6, 3])
ell = 3

digits = ell_adic_digits(mu, ell)
print("gaps:", digits.differences())
for (i, j), b in sorted(digits.items()):
    print(f"  digit {i} of gap {j}: {b}")

###############################################################################
# The digits fix the Levi class and the label. Mapping forward gives mu back.

datum = series_of(mu, ell)
print("Levi class:", datum.levi.nu, "label:", datum.irr)
assert psi_co(datum.levi, datum.irr) == mu

###############################################################################
# The same orbit lands in a different series once the characteristic changes.

for p in (2, 5):
    d = series_of(mu, p)
    print(f"ell={p}: Levi class {d.levi.nu}, label {d.irr}")
