"""Integer partitions, compositions and multipartitions.

Everything here is exact integer combinatorics on immutable values.  The
characteristic parameter ``ell`` is a plain ``int``: ``0`` stands for
characteristic zero, any integer ``>= 2`` is accepted (primality is not
required for the combinatorics).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache

ZERO = 0

MAX_SIZE = 10000
MAX_ENUM_SIZE = 60


def check_ell(ell: int) -> int:
    """Validate a characteristic parameter and return it as an ``int``."""
    if isinstance(ell, bool) or not isinstance(ell, int):
        raise TypeError(f"ell must be an int, got {type(ell).__name__}")
    if ell != ZERO and ell < 2:
        raise ValueError(f"ell must be 0 or an integer >= 2, got {ell}")
    return ell


def powers_of(ell: int, bound: int) -> list[int]:
    """Powers ``1, ell, ell**2, ...`` not exceeding ``bound`` (just ``[1]`` for ell = 0)."""
    check_ell(ell)
    if bound < 1:
        return []
    if ell == ZERO:
        return [1]
    out = [1]
    while out[-1] * ell <= bound:
        out.append(out[-1] * ell)
    return out


def is_power_of(k: int, ell: int) -> bool:
    if k < 1:
        return False
    if ell == ZERO:
        return k == 1
    while k % ell == 0:
        k //= ell
    return k == 1


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so equality is structural.
    Text form is ``"4,2"``; the empty partition is ``"-"``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", ""):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {text!r}")
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


class Composition(Mapping):
    """Finitely supported sequence of nonnegative integers, indexed from 1.

    Behaves as a read-only mapping over its support; missing indices read as 0.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = enumerate(entries, start=1)
        data = {}
        for i, v in items:
            i, v = int(i), int(v)
            if i < 1:
                raise ValueError(f"composition indices start at 1, got {i}")
            if v < 0:
                raise ValueError(f"composition entries must be nonnegative, got {v}")
            if v:
                data[i] = v
        self._entries = dict(sorted(data.items()))

    def __getitem__(self, i: int) -> int:
        return self._entries.get(i, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, i) -> bool:
        return i in self._entries

    def __eq__(self, other) -> bool:
        if isinstance(other, Composition):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"Composition({self._entries})"

    def norm(self) -> int:
        return sum(self._entries.values())


def transpose(lam: Partition) -> Partition:
    """Conjugate partition: ``result[j] = #{i : lam[i] >= j}``."""
    lam = Partition(lam)
    if not lam:
        return Partition()
    out = []
    i = len(lam)
    for j in range(1, lam[0] + 1):
        while lam[i - 1] < j:
            i -= 1
        out.append(i)
    return Partition(out)


def multiplicities(lam: Partition) -> Composition:
    counts: dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    return Composition(counts)


def from_multiplicities(m: Mapping[int, int]) -> Partition:
    """Inverse of :func:`multiplicities`."""
    m = Composition(m)
    parts: list[int] = []
    for i in sorted(m, reverse=True):
        parts.extend([i] * m[i])
    return Partition(parts)


def add(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum after padding with zeros."""
    return Partition(a + b for a, b in itertools.zip_longest(lam, mu, fillvalue=0))


def scale(k: int, lam: Partition) -> Partition:
    if k < 0:
        raise ValueError(f"scale factor must be nonnegative, got {k}")
    return Partition(k * p for p in lam)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """``lam <= mu`` in the dominance order; only partitions of one size compare."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"cannot compare partitions of {lam.size} and {mu.size}")
    sl = sm = 0
    for a, b in itertools.zip_longest(lam, mu, fillvalue=0):
        sl += a
        sm += b
        if sl > sm:
            return False
    return True


def is_ell_regular(lam: Partition, ell: int) -> bool:
    """True iff no part is repeated ``ell`` or more times (always true for ell = 0)."""
    check_ell(ell)
    if ell == ZERO:
        return True
    return all(len(list(run)) < ell for _, run in itertools.groupby(Partition(lam)))


def has_power_parts(lam: Partition, ell: int) -> bool:
    check_ell(ell)
    return all(is_power_of(p, ell) for p in lam)


def _check_enum_size(m: int) -> None:
    if m < 0:
        raise ValueError(f"size must be nonnegative, got {m}")
    if m > MAX_ENUM_SIZE:
        raise ValueError(f"enumeration capped at size {MAX_ENUM_SIZE}, got {m}")


def _parts_below(m: int, largest: int, allowed: tuple[int, ...], max_mult: int) -> Iterator[tuple[int, ...]]:
    # allowed is sorted decreasing; parts of the result are drawn from allowed, each <= largest,
    # each value repeated at most max_mult times (0 means unbounded).
    if m == 0:
        yield ()
        return
    for idx, p in enumerate(allowed):
        if p > largest or p > m:
            continue
        rest = allowed[idx + 1:]
        top = m // p if not max_mult else min(m // p, max_mult)
        for k in range(top, 0, -1):
            for tail in _parts_below(m - k * p, p - 1, rest, max_mult):
                yield (p,) * k + tail


def _enumerate(m: int, allowed: tuple[int, ...], max_mult: int) -> list[Partition]:
    # generated tuples are already canonical, skip revalidation
    make = tuple.__new__
    return [make(Partition, t) for t in _parts_below(m, m, allowed, max_mult)]


@lru_cache(maxsize=None)
def _all_partitions(m: int) -> tuple[Partition, ...]:
    return tuple(_enumerate(m, tuple(range(m, 0, -1)), 0))


def enumerate_partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order: ``(m)`` first, ``(1^m)`` last."""
    _check_enum_size(m)
    return list(_all_partitions(m))


def enumerate_ell_regular(m: int, ell: int) -> list[Partition]:
    """Partitions of ``m`` with every multiplicity below ``ell``, same order as
    :func:`enumerate_partitions`."""
    check_ell(ell)
    _check_enum_size(m)
    if ell == ZERO:
        return enumerate_partitions(m)
    return _enumerate(m, tuple(range(m, 0, -1)), ell - 1)


def enumerate_power_partitions(n: int, ell: int) -> list[Partition]:
    """Partitions of ``n`` whose parts are all powers of ``ell`` (reverse-lex order)."""
    check_ell(ell)
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    if n > MAX_SIZE:
        raise ValueError(f"size capped at {MAX_SIZE}, got {n}")
    allowed = tuple(reversed(powers_of(ell, n)))
    return _enumerate(n, allowed, 0)


class DigitTable(Mapping):
    """Base-``ell`` digits of the successive differences of a partition.

    Keys are ``(i, j)`` with ``i >= 0`` the digit position and ``j >= 1`` the
    index of the difference ``mu_j - mu_{j+1}``; only nonzero digits are stored.
    """

    __slots__ = ("ell", "_digits")

    def __init__(self, digits: Mapping[tuple[int, int], int], ell: int):
        check_ell(ell)
        if ell == ZERO:
            raise ValueError("digit tables need ell >= 2")
        data = {}
        for (i, j), b in digits.items():
            if i < 0 or j < 1:
                raise ValueError(f"bad digit position {(i, j)}")
            if not 0 <= b < ell:
                raise ValueError(f"digit {b} at {(i, j)} out of range for ell={ell}")
            if b:
                data[(i, j)] = b
        self.ell = ell
        self._digits = dict(sorted(data.items()))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._digits.get(key, 0)

    def __iter__(self):
        return iter(self._digits)

    def __len__(self) -> int:
        return len(self._digits)

    def __contains__(self, key) -> bool:
        return key in self._digits

    def __eq__(self, other) -> bool:
        if isinstance(other, DigitTable):
            return self.ell == other.ell and self._digits == other._digits
        if isinstance(other, Mapping):
            return self._digits == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ell, tuple(self._digits.items())))

    def __repr__(self) -> str:
        return f"DigitTable({self._digits}, ell={self.ell})"

    def differences(self) -> dict[int, int]:
        """``j -> sum_i digit(i, j) * ell**i``."""
        out: dict[int, int] = {}
        for (i, j), b in self._digits.items():
            out[j] = out.get(j, 0) + b * self.ell**i
        return out

    def reconstruct(self) -> Partition:
        """Rebuild the partition whose differences these digits encode."""
        diffs = self.differences()
        if not diffs:
            return Partition()
        parts, running = [], 0
        for j in range(max(diffs), 0, -1):
            running += diffs.get(j, 0)
            parts.append(running)
        return Partition(reversed(parts))


def ell_adic_digits(mu: Partition, ell: int) -> DigitTable:
    check_ell(ell)
    if ell == ZERO:
        raise ValueError("ell-adic digits are undefined for ell = 0")
    mu = Partition(mu)
    digits = {}
    for j in range(1, len(mu) + 1):
        d = mu.part(j) - mu.part(j + 1)
        i = 0
        while d:
            d, b = divmod(d, ell)
            if b:
                digits[(i, j)] = b
            i += 1
    return DigitTable(digits, ell)


@dataclass(frozen=True)
class MultiPartition:
    """A tuple of partitions indexed by positive integers.

    ``components`` holds ``(key, partition)`` pairs for nonempty components,
    sorted by key; ``profile`` records the required size at each key.
    """

    components: tuple[tuple[int, Partition], ...]
    profile: Composition

    def __post_init__(self):
        comps = tuple(sorted((int(k), Partition(p)) for k, p in self.components if Partition(p)))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "profile", Composition(self.profile))
        keys = [k for k, _ in comps]
        if len(set(keys)) != len(keys):
            raise ValueError(f"repeated component key in {keys}")
        for k, p in comps:
            if p.size != self.profile[k]:
                raise ValueError(f"component at {k} has size {p.size}, profile wants {self.profile[k]}")
        for k in self.profile:
            if k not in keys:
                raise ValueError(f"missing component of size {self.profile[k]} at {k}")

    @classmethod
    def from_mapping(cls, comps: Mapping[int, Partition], profile: Mapping[int, int] | None = None):
        comps = {int(k): Partition(p) for k, p in comps.items()}
        if profile is None:
            profile = {k: p.size for k, p in comps.items()}
        return cls(tuple(comps.items()), Composition(profile))

    def __getitem__(self, key: int) -> Partition:
        for k, p in self.components:
            if k == key:
                return p
        return Partition()

    def keys(self) -> list[int]:
        return [k for k, _ in self.components]

    def as_dict(self) -> dict[int, Partition]:
        return dict(self.components)

    @classmethod
    def parse(cls, text: str, profile: Mapping[int, int] | None = None) -> "MultiPartition":
        """Parse ``"2:1;4:1"`` (key, colon, comma-separated parts; ``;`` between keys)."""
        text = text.strip()
        comps: dict[int, Partition] = {}
        if text not in ("", "-"):
            for chunk in text.split(";"):
                if not chunk.strip():
                    continue
                key, sep, parts = chunk.partition(":")
                if not sep:
                    raise ValueError(f"expected key:parts, got {chunk!r}")
                try:
                    k = int(key)
                except ValueError:
                    raise ValueError(f"bad component key {key!r}") from None
                if k in comps:
                    raise ValueError(f"repeated component key {k}")
                comps[k] = Partition.parse(parts)
        return cls.from_mapping(comps, profile)

    def __str__(self) -> str:
        if not self.components:
            return "-"
        return ";".join(f"{k}:{p}" for k, p in self.components)


def enumerate_multipartitions(a: Mapping[int, int], ell: int, regular: bool = True) -> list[MultiPartition]:
    """Cartesian product over the support of ``a`` (keys ascending) of the
    partitions of each ``a[i]``, ``ell``-regular ones if ``regular``."""
    a = Composition(a)
    keys = list(a)
    if regular:
        factors = [enumerate_ell_regular(a[k], ell) for k in keys]
    else:
        factors = [enumerate_partitions(a[k]) for k in keys]
    return [MultiPartition(tuple(zip(keys, combo)), a) for combo in itertools.product(*factors)]
