"""
Strata and their layers
=======================

The Levi classes are ordered by merging blocks. Listing them with more
blocks first gives a linear extension of that order. Each class also
contributes one layer of simple objects, and the layer sizes add up to the
number of partitions.
"""

from modspringer import CharParams, levi_leq, linear_extension, recollement_report, stratum_info

params = CharParams(8, 2)
order = [c.nu for c in linear_extension(params)]

for nu in order:
    info = stratum_info(nu, params)
    above = ", ".join(str(x) for x in info.closure_contains if x != nu)
    print(f"{str(nu):18s} dim {info.dimension:3d}   closure also meets: {above or '-'}")

###############################################################################
# The list respects the order: if a <= b then a comes no later than b.

assert all(order.index(a) <= order.index(b) for a in order for b in order if levi_leq(a, b, params))

###############################################################################
# Layers of the recollement, one per stratum.

layers = recollement_report(params)
for layer in layers:
    print(layer.index, layer.levi.shape(), [str(mu) for mu in layer.simples])
print("simples:", sum(layer.layer_size for layer in layers))
