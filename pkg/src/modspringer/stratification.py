"""Order on cuspidal Levi classes, strata, and the layers of the recollement.

A Levi class ``nu`` sits inside ``nu'`` exactly when the blocks of ``nu`` can
be grouped so that the group sums are the blocks of ``nu'``.  Each class
``nu`` indexes a stratum of gl(n): matrices whose generalized eigenspaces have
dimensions ``nu_1, nu_2, ...`` with one Jordan block on each.  Only labels are
modelled; the gluing functors between layers are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .correspondence import (
    CharParams,
    LeviClass,
    cuspidal_levi_classes,
    series_of,
    series_rows,
    weyl_irr_count,
)
from .partitions import Partition, has_power_parts


@lru_cache(maxsize=1 << 16)
def _can_merge(parts: tuple[int, ...], capacities: tuple[int, ...]) -> bool:
    # parts sorted decreasing; capacities sorted decreasing, all positive
    if not parts:
        return not capacities
    if sum(parts) != sum(capacities):
        return False
    first, rest = parts[0], parts[1:]
    tried = set()
    for idx, cap in enumerate(capacities):
        if cap < first or cap in tried:
            continue
        tried.add(cap)
        left = cap - first
        caps = capacities[:idx] + capacities[idx + 1:]
        if left:
            caps = tuple(sorted(caps + (left,), reverse=True))
        if _can_merge(rest, caps):
            return True
    return False


def merges_to(nu: Partition, target: Partition) -> bool:
    """Whether the parts of ``nu`` split into groups summing to the parts of ``target``."""
    nu, target = Partition(nu), Partition(target)
    if nu.size != target.size or len(nu) < len(target):
        return False
    return _can_merge(tuple(nu), tuple(target))


def levi_leq(nu: Partition, nu_prime: Partition, params: CharParams) -> bool:
    """``L_nu <= L_nu'``: some conjugate of ``L_nu`` lies inside ``L_nu'``."""
    for x in (nu, nu_prime):
        if Partition(x).size != params.n or not has_power_parts(x, params.ell):
            raise ValueError(f"{x} is not a partition of {params.n} into powers of {params.ell}")
    return merges_to(nu, nu_prime)


def linear_extension(params: CharParams) -> list[LeviClass]:
    """Cuspidal Levi classes ordered by block count descending, ties lexicographic."""
    return cuspidal_levi_classes(params)


@dataclass(frozen=True)
class StratumInfo:
    nu: Partition
    dimension: int
    closure_contains: tuple[Partition, ...]


def stratum_dimension(nu: Partition) -> int:
    """``dim G/L + dim(centre of Lie L) + dim(regular orbit of L)`` = ``n^2 - n + #blocks``."""
    n = Partition(nu).size
    return n * n - n + len(nu)


def stratum_info(nu: Partition, params: CharParams) -> StratumInfo:
    nu = Partition(nu)
    inside = tuple(
        levi.nu for levi in linear_extension(params) if levi_leq(nu, levi.nu, params)
    )
    return StratumInfo(nu, stratum_dimension(nu), inside)


@dataclass(frozen=True)
class RecollementLayer:
    index: int
    levi: LeviClass
    simples: tuple[Partition, ...]

    @property
    def layer_size(self) -> int:
        return len(self.simples)


def recollement_report(params: CharParams) -> list[RecollementLayer]:
    """One layer per Levi class, listing the orbits of its series."""
    return [
        RecollementLayer(i, levi, tuple(row.orbit for row in series_rows(levi)))
        for i, levi in enumerate(linear_extension(params), start=1)
    ]


def layer_of(mu: Partition, params: CharParams) -> int:
    """1-based index of the layer containing the simple object labelled ``mu``."""
    nu = series_of(mu, params.ell).levi.nu
    for i, levi in enumerate(linear_extension(params), start=1):
        if levi.nu == nu:
            return i
    raise AssertionError(f"series {nu} missing from the extension")


def serre_content(layers: list[RecollementLayer], i: int) -> list[Partition]:
    """Labels of the simple objects in the ``i``-th subcategory: layers ``i, i+1, ...``."""
    return [mu for layer in layers if layer.index >= i for mu in layer.simples]


def expected_layer_size(levi: LeviClass) -> int:
    return weyl_irr_count(levi)
