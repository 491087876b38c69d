"""
The GL(6) table in characteristic 2
===================================

Every nilpotent orbit of GL(6) lands in exactly one series. A series is
indexed by a Levi class whose block sizes are powers of 2. Inside a series,
the orbits are labelled by 2-regular multipartitions.
"""

from modspringer import CharParams, full_table
from modspringer.serialize import render_table

params = CharParams(6, 2)
table = full_table(params)

###############################################################################
# Print the table grouped by series. The torus series comes first and the
# series of GL(4) x GL(2) comes last.

print(render_table(table, "text"))

###############################################################################
# There are 11 partitions of 6, so there are 11 orbits. They split 4+2+1+2+1+1.

for levi, rows in table.series():
    print(f"{levi.shape():20s} {len(rows)} orbit(s)")
print("total:", len(table.rows))
