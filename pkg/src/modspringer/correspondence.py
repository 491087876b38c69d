"""The modular generalized Springer correspondence for GL(n), on labels.

Series are indexed by partitions ``nu`` of ``n`` whose parts are powers of
``ell`` (the Levi subgroups ``GL(nu_1) x GL(nu_2) x ...`` carrying a cuspidal
pair).  Inside the series of ``nu`` the irreducibles of the relative Weyl group
``prod_i S_{m_i(nu)}`` are multipartitions ``lam`` with an ``ell``-regular
component ``lam[q]`` of size ``m_q(nu)`` at every power ``q = ell**i``, and

    psi_co(nu, lam) = sum over q of  q * transpose(lam[q])

(componentwise sums).  The inverse reads ``lam`` off the base-``ell`` digits of
the differences ``mu_j - mu_{j+1}``: the digit at position ``i`` is the
multiplicity of ``j`` in ``lam[ell**i]``.

For ``ell = 0`` only the torus series ``nu = (1^n)`` exists and the map is
plain transposition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .orbits import LeviOrbitLabel, induced_orbit
from .partitions import (
    MAX_ENUM_SIZE,
    MAX_SIZE,
    ZERO,
    Composition,
    MultiPartition,
    Partition,
    add,
    check_ell,
    ell_adic_digits,
    enumerate_ell_regular,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_power_partitions,
    from_multiplicities,
    has_power_parts,
    is_ell_regular,
    is_power_of,
    multiplicities,
    scale,
    transpose,
)


@dataclass(frozen=True)
class CharParams:
    n: int
    ell: int

    def __post_init__(self):
        check_ell(self.ell)
        if not 1 <= self.n <= MAX_SIZE:
            raise ValueError(f"n must be in [1, {MAX_SIZE}], got {self.n}")


def stratification_key(nu: Partition) -> tuple:
    """Sort key putting Levi classes in a linear extension of the inclusion order:
    more blocks first, then lexicographically smaller block lists."""
    return (-len(nu), tuple(nu))


@dataclass(frozen=True)
class LeviClass:
    """Conjugacy class of the Levi subgroup with block sizes ``nu``."""

    nu: Partition
    ell: int
    weyl_profile: Composition = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nu", Partition(self.nu))
        check_ell(self.ell)
        if not self.nu:
            raise ValueError("Levi class of the empty partition")
        if not has_power_parts(self.nu, self.ell):
            raise ValueError(f"{self.nu} has parts that are not powers of ell={self.ell}")
        object.__setattr__(self, "weyl_profile", multiplicities(self.nu))

    @property
    def n(self) -> int:
        return self.nu.size

    def shape(self) -> str:
        """Human readable factor list, e.g. ``GL(4) x GL(1)^2``."""
        terms = []
        for q in sorted(self.weyl_profile, reverse=True):
            m = self.weyl_profile[q]
            terms.append(f"GL({q})" + (f"^{m}" if m > 1 else ""))
        return " x ".join(terms)

    def weyl_group(self) -> str:
        """The relative Weyl group as a product of symmetric groups."""
        terms = [f"S{self.weyl_profile[q]}" for q in sorted(self.weyl_profile, reverse=True)]
        return " x ".join(terms)


@dataclass(frozen=True)
class IrrLabel:
    """Irreducible of the relative Weyl group: components keyed by block size."""

    mp: MultiPartition

    def __getitem__(self, key: int) -> Partition:
        return self.mp[key]

    def __str__(self) -> str:
        return str(self.mp)

    @classmethod
    def parse(cls, text: str) -> "IrrLabel":
        return cls(MultiPartition.parse(text))


@dataclass(frozen=True)
class SpringerDatum:
    levi: LeviClass
    irr: IrrLabel
    orbit: Partition

    def __post_init__(self):
        if psi_co(self.levi, self.irr) != self.orbit:
            raise ValueError(f"{self.orbit} is not the image of {self.irr} in the series {self.levi.nu}")


@dataclass(frozen=True)
class CorrespondenceTable:
    params: CharParams
    rows: tuple[SpringerDatum, ...]

    def series(self) -> list[tuple[LeviClass, list[SpringerDatum]]]:
        """Rows grouped by Levi class, in row order."""
        groups: dict[LeviClass, list[SpringerDatum]] = {}
        for row in self.rows:
            groups.setdefault(row.levi, []).append(row)
        return list(groups.items())

    def orbits(self) -> list[Partition]:
        return [row.orbit for row in self.rows]

    def lookup(self, mu: Partition) -> SpringerDatum:
        for row in self.rows:
            if row.orbit == mu:
                return row
        raise KeyError(mu)


def has_cuspidal(params: CharParams) -> bool:
    """Whether GL(n) itself carries a cuspidal pair.

    For ``ell >= 2`` this happens iff ``n`` is a power of ``ell``, and the pair
    is then the regular orbit ``(n)`` with the constant local system.  For
    ``ell = 0`` only the torus GL(1) qualifies.
    """
    if params.ell == ZERO:
        return params.n == 1
    return is_power_of(params.n, params.ell)


def cuspidal_levi_classes(params: CharParams) -> list[LeviClass]:
    """All Levi classes carrying a cuspidal pair, in stratification order."""
    nus = sorted(enumerate_power_partitions(params.n, params.ell), key=stratification_key)
    return [LeviClass(nu, params.ell) for nu in nus]


def irr_labels(levi: LeviClass) -> list[IrrLabel]:
    return [IrrLabel(mp) for mp in enumerate_multipartitions(levi.weyl_profile, levi.ell, regular=True)]


def check_irr(levi: LeviClass, irr: IrrLabel) -> None:
    """Raise ``ValueError`` unless ``irr`` labels an irreducible of the Weyl group of ``levi``."""
    for key, comp in irr.mp.components:
        if levi.weyl_profile[key] != comp.size:
            raise ValueError(
                f"component {key}:{comp} has size {comp.size}, but {levi.nu} has {levi.weyl_profile[key]} blocks of size {key}"
            )
        if not is_ell_regular(comp, levi.ell):
            raise ValueError(f"component {key}:{comp} is not {levi.ell}-regular")
    for key in levi.weyl_profile:
        if not irr[key]:
            raise ValueError(f"missing component for the {levi.weyl_profile[key]} blocks of size {key}")


@lru_cache(maxsize=1 << 16)
def psi_co(levi: LeviClass, irr: IrrLabel) -> Partition:
    """Orbit attached to ``irr`` in the series of ``levi``."""
    check_irr(levi, irr)
    mu = Partition()
    for q, comp in irr.mp.components:
        mu = add(mu, scale(q, transpose(comp)))
    return mu


def series_of(mu: Partition, ell: int) -> SpringerDatum:
    """The unique series datum whose image is ``mu``."""
    mu = Partition(mu)
    check_ell(ell)
    if not 1 <= mu.size <= MAX_SIZE:
        raise ValueError(f"orbit size must be in [1, {MAX_SIZE}], got {mu.size}")
    if ell == ZERO:
        lam = transpose(mu)
        levi = LeviClass(Partition([1] * mu.size), ell)
        irr = IrrLabel(MultiPartition.from_mapping({1: lam}))
        return SpringerDatum(levi, irr, mu)
    digits = ell_adic_digits(mu, ell)
    mults: dict[int, dict[int, int]] = {}
    for (i, j), b in digits.items():
        mults.setdefault(ell**i, {})[j] = b
    comps = {q: from_multiplicities(m) for q, m in mults.items()}
    nu = from_multiplicities({q: lam.size for q, lam in comps.items()})
    levi = LeviClass(nu, ell)
    irr = IrrLabel(MultiPartition.from_mapping(comps))
    return SpringerDatum(levi, irr, mu)


def series_rows(levi: LeviClass) -> list[SpringerDatum]:
    return [SpringerDatum(levi, irr, psi_co(levi, irr)) for irr in irr_labels(levi)]


def _check_table_size(n: int) -> None:
    if n > MAX_ENUM_SIZE:
        raise ValueError(f"full tables are capped at n = {MAX_ENUM_SIZE}, got {n}")


def full_table(params: CharParams) -> CorrespondenceTable:
    _check_table_size(params.n)
    rows: list[SpringerDatum] = []
    for levi in cuspidal_levi_classes(params):
        rows.extend(series_rows(levi))
    return CorrespondenceTable(params, tuple(rows))


def springer_restriction(params: CharParams) -> list[tuple[Partition, Partition]]:
    """The torus series as ``(lam, mu)`` pairs; here ``mu`` is the transpose of ``lam``."""
    torus = LeviClass(Partition([1] * params.n), params.ell)
    return [(row.irr[1], row.orbit) for row in series_rows(torus)]


def intermediate_levi(datum: SpringerDatum) -> LeviOrbitLabel:
    """The Levi with one block of size ``q * m_q(nu)`` per power ``q``, carrying
    the orbit ``q * transpose(lam[q])`` on that block."""
    blocks = []
    for q, comp in datum.irr.mp.components:
        blocks.append((q * comp.size, scale(q, transpose(comp))))
    blocks.sort(key=lambda b: (b[0], tuple(b[1])), reverse=True)
    return LeviOrbitLabel(Partition(b for b, _ in blocks), tuple(o for _, o in blocks))


def induced_consistency(datum: SpringerDatum) -> bool:
    """Whether inducing through :func:`intermediate_levi` reproduces the datum's orbit."""
    return induced_orbit(intermediate_levi(datum)).partition == datum.orbit


@dataclass(frozen=True)
class BijectionReport:
    params: CharParams
    series_counts: tuple[tuple[Partition, int], ...]
    total: int
    partition_count: int
    duplicates: tuple[Partition, ...]
    missing: tuple[Partition, ...]

    @property
    def ok(self) -> bool:
        return self.total == self.partition_count and not self.duplicates and not self.missing


def weyl_irr_count(levi: LeviClass) -> int:
    """Number of irreducibles of the relative Weyl group (product of ell-regular counts)."""
    count = 1
    for q in levi.weyl_profile:
        count *= len(enumerate_ell_regular(levi.weyl_profile[q], levi.ell))
    return count


def verify_bijection(params: CharParams) -> BijectionReport:
    table = full_table(params)
    counts = tuple((levi.nu, weyl_irr_count(levi)) for levi in cuspidal_levi_classes(params))
    seen = Counter(table.orbits())
    everything = enumerate_partitions(params.n)
    duplicates = tuple(mu for mu, c in seen.items() if c > 1)
    missing = tuple(mu for mu in everything if mu not in seen)
    return BijectionReport(
        params=params,
        series_counts=counts,
        total=sum(c for _, c in counts),
        partition_count=len(everything),
        duplicates=duplicates,
        missing=missing,
    )
