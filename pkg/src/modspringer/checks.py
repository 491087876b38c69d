"""Self-checks over ranges of ``(n, ell)``, used by ``modspringer verify``.

Each check returns ``None`` on success or a short counterexample string.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import lru_cache

from .correspondence import (
    CharParams,
    LeviClass,
    full_table,
    has_cuspidal,
    induced_consistency,
    psi_co,
    series_of,
    series_rows,
    verify_bijection,
)
from .orbits import induced_orbit, principal, zero_orbits
from .partitions import (
    ZERO,
    Partition,
    enumerate_partitions,
    is_power_of,
    transpose,
)
from .stratification import levi_leq, linear_extension

MAX_VERIFY_N = 40

# several checks share one table per (n, ell)
_table = lru_cache(maxsize=4)(full_table)
_report = lru_cache(maxsize=4)(verify_bijection)


def partition_count(n: int) -> int:
    """p(n) by the coin-change recurrence; independent of the enumerator."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def check_bijection(params: CharParams) -> str | None:
    report = _report(params)
    if report.duplicates:
        return f"orbit {report.duplicates[0]} hit twice"
    if report.missing:
        return f"orbit {report.missing[0]} never hit"
    return None


def check_counting(params: CharParams) -> str | None:
    report = _report(params)
    expected = partition_count(params.n)
    if report.total != expected:
        return f"series sizes sum to {report.total}, p({params.n}) = {expected}"
    return None


def check_round_trip(params: CharParams) -> str | None:
    table = _table(params)
    for row in table.rows:
        back = series_of(row.orbit, params.ell)
        if (back.levi, back.irr) != (row.levi, row.irr):
            return f"series_of({row.orbit}) gave ({back.levi.nu}, {back.irr}), expected ({row.levi.nu}, {row.irr})"
    for mu in enumerate_partitions(params.n):
        datum = series_of(mu, params.ell)
        if psi_co(datum.levi, datum.irr) != mu:
            return f"psi_co(series_of({mu})) != {mu}"
    return None


def check_degeneration(params: CharParams) -> str | None:
    if not (params.ell == ZERO or params.ell > params.n):
        return None
    torus = Partition([1] * params.n)
    table = _table(params)
    groups = table.series()
    if [levi.nu for levi, _ in groups] != [torus]:
        return f"expected the single series {torus}, got {[str(levi.nu) for levi, _ in groups]}"
    for row in table.rows:
        if row.orbit != transpose(row.irr[1]):
            return f"{row.irr} maps to {row.orbit}, not its transpose"
    return None


def check_induced(params: CharParams) -> str | None:
    for row in _table(params).rows:
        if not induced_consistency(row):
            return f"induction disagrees with psi_co at ({row.levi.nu}, {row.irr})"
    return None


def check_richardson(params: CharParams) -> str | None:
    n = params.n
    for nu in enumerate_partitions(n):
        if induced_orbit(zero_orbits(nu)).partition != transpose(nu):
            return f"zero orbit of {nu} does not induce {transpose(nu)}"
        if induced_orbit(principal(nu)).partition != Partition([n]):
            return f"principal orbit of {nu} does not induce ({n})"
    return None


def check_poset(params: CharParams) -> str | None:
    order = [levi.nu for levi in linear_extension(params)]
    if order[0] != Partition([1] * params.n):
        return f"first class is {order[0]}, not the torus"
    if (order[-1] == Partition([params.n])) != has_cuspidal(params):
        return f"last class {order[-1]} inconsistent with the cuspidal test"
    up = [{j for j, b in enumerate(order) if levi_leq(a, b, params)} for a in order]
    for i, above in enumerate(up):
        if i not in above:
            return f"{order[i]} not <= itself"
        for j in above:
            if j < i:
                return f"{order[i]} <= {order[j]} but it is listed later"
            if j != i and i in up[j]:
                return f"{order[i]} and {order[j]} are mutually <="
            if not up[j] <= above:
                k = min(up[j] - above)
                return f"{order[i]} <= {order[j]} <= {order[k]} but not {order[i]} <= {order[k]}"
    return None


def check_cuspidal(params: CharParams) -> str | None:
    n, ell = params.n, params.ell
    expected = n == 1 if ell == ZERO else is_power_of(n, ell)
    if has_cuspidal(params) != expected:
        return f"has_cuspidal({n}, {ell}) = {has_cuspidal(params)}"
    if expected and ell != ZERO:
        rows = series_rows(LeviClass(Partition([n]), ell))
        if [r.orbit for r in rows] != [Partition([n])]:
            return f"cuspidal series of GL({n}) is {[str(r.orbit) for r in rows]}"
    return None


CHECKS: dict[str, Callable[[CharParams], str | None]] = {
    "bijection": check_bijection,
    "counting": check_counting,
    "round_trip": check_round_trip,
    "degeneration": check_degeneration,
    "induced_consistency": check_induced,
    "richardson": check_richardson,
    "poset": check_poset,
    "cuspidal": check_cuspidal,
}


@dataclass
class VerificationSummary:
    n_max: int
    ells: tuple[int, ...]
    passed: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "ells": list(self.ells),
            "ok": self.ok,
            "passed": self.passed,
            "failures": self.failures,
        }


def run_verification(n_max: int, ells: Iterable[int], stop_at_first: bool = True) -> VerificationSummary:
    if not 1 <= n_max <= MAX_VERIFY_N:
        raise ValueError(f"n_max must be in [1, {MAX_VERIFY_N}], got {n_max}")
    ells = tuple(ells)
    summary = VerificationSummary(n_max, ells, {name: 0 for name in CHECKS})
    for n in range(1, n_max + 1):
        for ell in ells:
            params = CharParams(n, ell)
            for name, check in CHECKS.items():
                problem = check(params)
                if problem is None:
                    summary.passed[name] += 1
                    continue
                summary.failures.append({"check": name, "n": n, "ell": ell, "detail": problem})
                if stop_at_first:
                    return summary
    return summary
