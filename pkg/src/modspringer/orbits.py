"""Nilpotent orbits of GL(n) and of its standard Levi subgroups, by label.

Orbits of GL(n) are labelled by partitions of n (Jordan types).  An orbit of
the Levi ``GL(nu_1) x GL(nu_2) x ...`` is a list of partitions aligned with
the blocks of ``nu`` taken in decreasing order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .partitions import Partition, add, dominance_leq, transpose


@dataclass(frozen=True)
class OrbitLabel:
    partition: Partition
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        if self.partition.size != self.rank:
            raise ValueError(f"{self.partition!r} is not a partition of {self.rank}")

    @classmethod
    def of(cls, lam) -> "OrbitLabel":
        lam = Partition(lam)
        return cls(lam, lam.size)


@dataclass(frozen=True)
class LeviOrbitLabel:
    levi: Partition
    orbits: tuple[Partition, ...]

    def __post_init__(self):
        levi = Partition(self.levi)
        orbits = tuple(Partition(o) for o in self.orbits)
        object.__setattr__(self, "levi", levi)
        object.__setattr__(self, "orbits", orbits)
        if len(orbits) != len(levi):
            raise ValueError(f"need one orbit per block of {levi!r}, got {len(orbits)}")
        for block, o in zip(levi, orbits):
            if o.size != block:
                raise ValueError(f"orbit {o!r} does not fit a block of size {block}")

    @property
    def rank(self) -> int:
        return self.levi.size


def closure_leq(a: OrbitLabel, b: OrbitLabel) -> bool:
    """Whether orbit ``a`` lies in the closure of orbit ``b``."""
    if a.rank != b.rank:
        raise ValueError(f"orbits of GL({a.rank}) and GL({b.rank}) are not comparable")
    return dominance_leq(a.partition, b.partition)


def orbit_dimension(a: OrbitLabel) -> int:
    """``n**2`` minus the centralizer dimension ``sum_j (lam^t_j)**2``."""
    return a.rank**2 - sum(c * c for c in transpose(a.partition))


def induced_orbit(src: LeviOrbitLabel) -> OrbitLabel:
    """Orbit induced from a Levi orbit: the componentwise sum of the block labels."""
    lam = functools.reduce(add, src.orbits, Partition())
    return OrbitLabel(lam, src.rank)


def principal(nu: Partition) -> LeviOrbitLabel:
    nu = Partition(nu)
    return LeviOrbitLabel(nu, tuple(Partition([b]) for b in nu))


def zero_orbits(nu: Partition) -> LeviOrbitLabel:
    nu = Partition(nu)
    return LeviOrbitLabel(nu, tuple(Partition([1] * b) for b in nu))
