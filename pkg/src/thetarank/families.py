"""
Symbol families of the finite classical groups and their Witt towers.

A family is a kind plus a size parameter.  For Sp and the orthogonal kinds the
parameter is the symbol rank; for unitary groups it is the dimension (which
is what ``rank_u`` returns).  Membership is decided by that parameter and the
class of the defect:

    Sp      def = 1 (mod 4)        O+ even  def = 0 (mod 4)
    O odd   def = 3 (mod 4)        O- even  def = 2 (mod 4)
    U       def even and >= 0, or odd and < 0

>>> len(enumerate_symbols(GroupFamily(Kind.SP, 2)))
6
>>> [str(s) for s in enumerate_symbols(GroupFamily(Kind.U, 3))]
['[|1]', '[1|1,0]', '[1,0|]']
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .symbols import (Bipartition, Symbol, SymbolError, defect, defect_quadratic,
                      normalize, rank, rank_u, transpose, upsilon, upsilon_inverse)

__all__ = [
    "DEFAULT_MAX_RANK", "FamilyError", "BoundError",
    "Kind", "GroupFamily", "UnipotentChar", "WittKind",
    "max_rank", "partitions", "bipartitions", "bipartition_count",
    "admissible_defects", "unitary_defect_ok", "member", "family_of",
    "enumerate_symbols", "enumerate_unipotent", "is_self_transpose",
    "witt_family", "witt_dimension", "parse_family",
]

DEFAULT_MAX_RANK = 30


class FamilyError(ValueError):
    """A symbol, character or parameter that does not fit the requested family."""


class BoundError(FamilyError):
    """An enumeration bound was exceeded."""


def max_rank() -> int:
    """The enumeration ceiling; ``THETA_MAX_RANK`` overrides the default."""
    raw = os.environ.get("THETA_MAX_RANK")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_RANK
    try:
        value = int(raw)
    except ValueError:
        raise BoundError(f"THETA_MAX_RANK must be an integer, got {raw!r}") from None
    if value < 0:
        raise BoundError("THETA_MAX_RANK must be non-negative")
    return value


class Kind(enum.Enum):
    SP = "sp"
    OPLUS = "o+"
    OMINUS = "o-"
    OODD = "oodd"
    U = "u"

    @property
    def is_unitary(self) -> bool:
        return self is Kind.U

    @property
    def is_even_orthogonal(self) -> bool:
        return self in (Kind.OPLUS, Kind.OMINUS)

    @property
    def is_orthogonal(self) -> bool:
        return self in (Kind.OPLUS, Kind.OMINUS, Kind.OODD)


# defect residue mod 4 for each symplectic/orthogonal kind
_RESIDUE = {Kind.OPLUS: 0, Kind.SP: 1, Kind.OMINUS: 2, Kind.OODD: 3}
_BY_RESIDUE = {r: k for k, r in _RESIDUE.items()}


def unitary_defect_ok(d: int) -> bool:
    return (d >= 0 and d % 2 == 0) or (d < 0 and d % 2 == 1)


def family_of(s: Symbol, unitary: bool = False) -> GroupFamily:
    """The family a symbol lies in: by defect mod 4, or the unitary rule."""
    d = defect(s)
    if unitary:
        if not unitary_defect_ok(d):
            raise FamilyError(f"{s} has defect {d}, which no unitary family admits")
        return GroupFamily(Kind.U, rank_u(s))
    return GroupFamily(_BY_RESIDUE[d % 4], rank(s))


@dataclass(frozen=True)
class GroupFamily:
    kind: Kind
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise FamilyError(f"family parameter must be a non-negative integer, got {self.n!r}")

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.n}"


def parse_family(text: str) -> GroupFamily:
    """Parse ``sp:2``, ``o+:4``, ``o-:3``, ``oodd:2`` or ``u:5``."""
    head, sep, tail = text.strip().partition(":")
    try:
        kind = Kind(head.strip().lower())
    except ValueError:
        raise SymbolError(f"unknown family kind {head!r}", head) from None
    tail = tail.strip()
    if not sep or not tail.isdigit():
        raise SymbolError(f"bad family parameter in {text!r}", tail or text)
    return GroupFamily(kind, int(tail))


def member(family: GroupFamily, s: Symbol) -> bool:
    d = defect(s)
    if family.kind is Kind.U:
        return unitary_defect_ok(d) and rank_u(s) == family.n
    return d % 4 == _RESIDUE[family.kind] and rank(s) == family.n


@dataclass(frozen=True)
class UnipotentChar:
    """A unipotent character label.

    ``sgn_flag`` marks the sign twist of an odd orthogonal character.  For
    even orthogonal groups the sign twist is the character of the
    transposed symbol, so the flag stays off there.
    """
    family: GroupFamily
    symbol: Symbol
    sgn_flag: bool = False

    def __post_init__(self):
        object.__setattr__(self, "symbol", normalize(self.symbol))
        if not member(self.family, self.symbol):
            raise FamilyError(f"{self.symbol} is not in the family {self.family}")
        if self.sgn_flag and self.family.kind is not Kind.OODD:
            raise FamilyError("sgn_flag is only meaningful for odd orthogonal groups")

    def __str__(self) -> str:
        return f"{self.family} {self.symbol}" + (" sgn" if self.sgn_flag else "")


# -- partitions ---------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` with parts at most ``largest``, in reverse lex order."""
    if largest is None or largest > n:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def bipartitions(n: int) -> Iterator[Bipartition]:
    for k in range(n + 1):
        for mu in partitions(k):
            for nu in partitions(n - k):
                yield Bipartition(mu, nu)


@lru_cache(maxsize=None)
def bipartition_count(n: int) -> int:
    """p2(n) from the recurrence n p2(n) = sum_k s(k) p2(n-k), s(k) = 2 sigma(k)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    for k in range(1, n + 1):
        sigma = sum(j for j in range(1, k + 1) if k % j == 0)
        total += 2 * sigma * bipartition_count(n - k)
    assert total % n == 0
    return total // n


# -- enumeration --------------------------------------------------------------

def admissible_defects(family: GroupFamily) -> list[tuple[int, int]]:
    """Pairs (defect, size of the bipartition) that can occur in the family, by defect."""
    n = family.n
    out = []
    if family.kind is Kind.U:
        d = 0
        # even d >= 0 use core T(d); odd d < 0 use T(|d|)
        for a in range(0, n + 2):
            core = a * (a + 1) // 2
            if core > n:
                break
            if (n - core) % 2:
                continue
            d = a if a % 2 == 0 else -a
            out.append((d, (n - core) // 2))
    else:
        r = _RESIDUE[family.kind]
        a = 0
        while defect_quadratic(a) <= n:
            for d in {a, -a}:
                if d % 4 == r:
                    out.append((d, n - defect_quadratic(d)))
            a += 1
    out.sort()
    return out


def _check_bound(n: int) -> None:
    ceiling = max_rank()
    if n > ceiling:
        raise BoundError(f"parameter {n} exceeds the enumeration ceiling {ceiling}")


def enumerate_symbols(family: GroupFamily) -> list[Symbol]:
    """All reduced symbols of the family, ordered by defect then by Υ."""
    _check_bound(family.n)
    return list(_enumerate_cached(family))


@lru_cache(maxsize=256)
def _enumerate_cached(family: GroupFamily) -> tuple[Symbol, ...]:
    out = []
    for d, size in admissible_defects(family):
        bips = sorted(bipartitions(size), key=lambda b: (b.top, b.bottom))
        out.extend(upsilon_inverse(b, d) for b in bips)
    return tuple(out)


def is_self_transpose(s: Symbol) -> bool:
    s = normalize(s)
    return s == transpose(s)


# -- Witt towers --------------------------------------------------------------

class WittKind(enum.Enum):
    """The series G_n: Sp_2n, O+_2n, O-_2n+2, O_2n+1, U_2n, U_2n+1."""
    SP = "sp"
    OPLUS = "o+"
    OMINUS = "o-"
    OODD = "oodd"
    U_EVEN = "u-even"
    U_ODD = "u-odd"


def witt_dimension(witt: WittKind, n: int) -> int:
    return {
        WittKind.SP: 2 * n, WittKind.OPLUS: 2 * n, WittKind.OMINUS: 2 * n + 2,
        WittKind.OODD: 2 * n + 1, WittKind.U_EVEN: 2 * n, WittKind.U_ODD: 2 * n + 1,
    }[witt]


def witt_family(witt: WittKind, n: int) -> GroupFamily:
    """The symbol family of the n-th member of a Witt series."""
    if n < 0:
        raise FamilyError("Witt index must be non-negative")
    if witt is WittKind.SP:
        return GroupFamily(Kind.SP, n)
    if witt is WittKind.OPLUS:
        return GroupFamily(Kind.OPLUS, n)
    if witt is WittKind.OMINUS:
        return GroupFamily(Kind.OMINUS, n + 1)
    if witt is WittKind.OODD:
        return GroupFamily(Kind.OODD, n)
    return GroupFamily(Kind.U, witt_dimension(witt, n))


def enumerate_unipotent(family: GroupFamily | WittKind, n: int | None = None) -> list[UnipotentChar]:
    """Unipotent characters of a family, or of the n-th member of a Witt series.

    Odd orthogonal symbols give two characters each (with and without the
    sign twist).
    """
    if isinstance(family, WittKind):
        if n is None:
            raise FamilyError("a Witt series needs an index")
        family = witt_family(family, n)
    out = []
    for s in enumerate_symbols(family):
        out.append(UnipotentChar(family, s))
        if family.kind is Kind.OODD:
            out.append(UnipotentChar(family, s, True))
    return out
