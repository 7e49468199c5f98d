"""
Theta-rank of unipotent characters and first occurrences in Witt towers.

Everything is read off two removals from the transposed symbol.  For
Λ = (a1 > a2 > ... ; b1 > b2 > ...) with both rows non-empty put

    r1 = (b1, b2, ... ; a2, a3, ...)      (drop a1)
    r2 = (b2, b3, ... ; a1, a2, ...)      (drop b1)

In the symplectic/orthogonal world the two first occurrences are 2 rk(r1)
and 2 rk(r2); in the unitary world they are the dimensions of r1 and r2.
The Θ-rank is the smaller of the two.

>>> theta_rank_symbol(World.SPO, Symbol.parse("[3,2,1,0|3,2,1]"))
6
>>> theta_rank_symbol(World.U, Symbol.parse("[0|1]"))
1
"""

from __future__ import annotations

import enum

from .families import FamilyError, GroupFamily, Kind, UnipotentChar, unitary_defect_ok
from .symbols import (Symbol, defect, expand, normalize, rank, transpose, unitary_core,
                      upsilon)

__all__ = [
    "World", "Tower", "TOWERS",
    "removal_pair", "removal_dimension", "theta_rank_symbol", "theta_rank_char",
    "first_occurrence", "towers_of", "steinberg_symbol", "steinberg_characters",
    "cuspidal_symbol", "cuspidal_characters", "trivial_symbol", "world_of",
]


class World(enum.Enum):
    SPO = "spo"
    U = "u"


class Tower(enum.Enum):
    OPLUS_OF_SP = "oplus-of-sp"
    OMINUS_OF_SP = "ominus-of-sp"
    SP_OF_OPLUS = "sp-of-oplus"
    SP_OF_OMINUS = "sp-of-ominus"
    U_SAME_PARITY = "u-same-parity"
    U_OPPOSITE_PARITY = "u-opposite-parity"
    SP_OF_OODD = "sp-of-oodd"


# which towers a character of each kind can be placed in
TOWERS = {
    Kind.SP: (Tower.OPLUS_OF_SP, Tower.OMINUS_OF_SP),
    Kind.OPLUS: (Tower.SP_OF_OPLUS,),
    Kind.OMINUS: (Tower.SP_OF_OMINUS,),
    Kind.OODD: (Tower.SP_OF_OODD,),
    Kind.U: (Tower.U_SAME_PARITY, Tower.U_OPPOSITE_PARITY),
}


def towers_of(kind: Kind) -> tuple[Tower, ...]:
    return TOWERS[kind]


def world_of(kind: Kind) -> World:
    return World.U if kind is Kind.U else World.SPO


def _two_sided(s: Symbol) -> Symbol:
    s = normalize(s)
    if not s.top or not s.bottom:
        s = expand(s)
    return s


def removal_pair(s: Symbol) -> tuple[Symbol, Symbol]:
    """(r1, r2): drop a1, resp. b1, from the transpose of a two-sided representative."""
    s = _two_sided(s)
    a, b = s.top, s.bottom
    return Symbol(b, a[1:]), Symbol(b[1:], a)


def removal_dimension(world: World, r: Symbol) -> int:
    """Dimension of the partner group attached to a removal ``r``.

    In the unitary world a removal can land on defect +1, which no unitary
    family uses; its core is then read as the one of defect 0.
    """
    if world is World.SPO:
        return 2 * rank(r)
    k = unitary_core(defect(r))
    return 2 * len(upsilon(r)) + k * (k + 1) // 2


def _check_world(world: World, s: Symbol) -> None:
    if world is World.U and not unitary_defect_ok(defect(s)):
        raise FamilyError(f"{s} has defect {defect(s)}, which no unitary family admits")


def theta_rank_symbol(world: World, s: Symbol) -> int:
    _check_world(world, s)
    r1, r2 = removal_pair(s)
    return min(removal_dimension(world, r1), removal_dimension(world, r2))


def first_occurrence(char: UnipotentChar, tower: Tower) -> int:
    """Dimension of the smallest group of ``tower`` whose correspondence contains ``char``."""
    kind = char.family.kind
    if tower not in TOWERS[kind]:
        raise FamilyError(f"tower {tower.value} does not apply to {kind.value} characters")
    world = world_of(kind)
    r1, r2 = removal_pair(char.symbol)
    if tower in (Tower.OPLUS_OF_SP, Tower.SP_OF_OPLUS, Tower.U_SAME_PARITY):
        return removal_dimension(world, r1)
    if tower is Tower.SP_OF_OODD:
        # through the symplectic character of the transpose: the plain
        # character meets the O+ tower, its sign twist the O- tower
        return removal_dimension(world, r2 if char.sgn_flag else r1)
    return removal_dimension(world, r2)


def theta_rank_char(char: UnipotentChar) -> int:
    """Θ-rank of a unipotent character, as a minimum of first occurrences.

    Characters of orthogonal groups are also compared with their sign twist,
    which for even orthogonal groups is the transposed symbol.
    """
    kind = char.family.kind
    values = [first_occurrence(char, t) for t in TOWERS[kind]]
    if kind.is_even_orthogonal:
        twin = UnipotentChar(char.family, transpose(char.symbol))
        values.extend(first_occurrence(twin, t) for t in TOWERS[kind])
    elif kind is Kind.OODD:
        twin = UnipotentChar(char.family, char.symbol, not char.sgn_flag)
        values.extend(first_occurrence(twin, t) for t in TOWERS[kind])
    return min(values)


# -- named characters ---------------------------------------------------------

def _down(top: int, bottom: int = 0) -> tuple[int, ...]:
    """top, top-1, ..., bottom (empty when top < bottom)."""
    return tuple(range(top, bottom - 1, -1))


def trivial_symbol(kind: Kind, n: int) -> Symbol:
    """The symbol of the trivial character of the family (kind, n)."""
    if kind is Kind.SP:
        return Symbol((n,), ())
    if kind is Kind.OPLUS:
        return normalize(Symbol((n,), (0,)))
    if kind is Kind.OMINUS:
        if n < 1:
            raise FamilyError("O- families start at rank 1")
        return Symbol((n, 0), ())
    if kind is Kind.OODD:
        return Symbol((), (n,))
    if n % 2 == 0:
        return Symbol((n // 2,), (0,)) if n else Symbol()
    return Symbol((), ((n - 1) // 2,))


def steinberg_characters(kind: Kind, n: int) -> list[UnipotentChar]:
    """The Steinberg character(s) of the family (kind, n).

    Even orthogonal groups have two, on a symbol and its transpose; odd
    orthogonal groups have two on one symbol, told apart by the sign flag.
    """
    lowest = 0 if kind is Kind.SP else 1
    if n < lowest:
        raise FamilyError(f"Steinberg character of {kind.value} needs n >= {lowest}")
    fam = GroupFamily(kind, n)
    if kind is Kind.SP:
        return [UnipotentChar(fam, Symbol(_down(n), _down(n, 1)))]
    if kind is Kind.OPLUS:
        s = Symbol(_down(n, 1), _down(n - 1))
        return [UnipotentChar(fam, s), UnipotentChar(fam, transpose(s))]
    if kind is Kind.OMINUS:
        s = Symbol(_down(n), _down(n - 1, 1))
        return [UnipotentChar(fam, s), UnipotentChar(fam, transpose(s))]
    if kind is Kind.OODD:
        s = Symbol(_down(n, 1), _down(n))
        return [UnipotentChar(fam, s), UnipotentChar(fam, s, True)]
    if n % 2 == 0:
        s = Symbol(_down(n // 2 - 1), _down(n // 2, 1))
    else:
        s = Symbol(_down((n - 1) // 2, 1), _down((n - 1) // 2))
    return [UnipotentChar(fam, s)]


def steinberg_symbol(kind: Kind, n: int) -> UnipotentChar:
    return steinberg_characters(kind, n)[0]


def cuspidal_characters(kind: Kind, d: int) -> list[UnipotentChar]:
    """Cuspidal unipotent character(s) indexed by ``d``.

    Sp_{2d(d+1)} and O_{2d(d+1)+1} use defect ±(2d+1), the even orthogonal
    group of rank d² uses defect ±2d (so the sign is + for even d), and
    U_{d(d+1)/2} uses defect d or -d.  Both transposes are returned for even
    orthogonal groups and both sign flags for odd ones.
    """
    if d < 0 or (kind.is_even_orthogonal and d < 1):
        raise FamilyError(f"cuspidal index {d} out of range for {kind.value}")
    if kind.is_even_orthogonal:
        want = Kind.OPLUS if d % 2 == 0 else Kind.OMINUS
        if kind is not want:
            raise FamilyError(f"the cuspidal of index {d} lives in {want.value}, not {kind.value}")
        s = Symbol(_down(2 * d - 1), ())
        fam = GroupFamily(kind, d * d)
        return [UnipotentChar(fam, s), UnipotentChar(fam, transpose(s))]
    if kind is Kind.U:
        row = _down(d - 1)
        s = Symbol(row, ()) if d % 2 == 0 else Symbol((), row)
        return [UnipotentChar(GroupFamily(kind, d * (d + 1) // 2), s)]
    row = _down(2 * d)
    # Sp wants defect 1 mod 4, O odd wants 3 mod 4
    positive = (d % 2 == 0) == (kind is Kind.SP)
    s = Symbol(row, ()) if positive else Symbol((), row)
    fam = GroupFamily(kind, d * (d + 1))
    if kind is Kind.OODD:
        return [UnipotentChar(fam, s), UnipotentChar(fam, s, True)]
    return [UnipotentChar(fam, s)]


def cuspidal_symbol(kind: Kind, d: int) -> UnipotentChar:
    return cuspidal_characters(kind, d)[0]
