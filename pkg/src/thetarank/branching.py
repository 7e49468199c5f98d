"""
Parabolic induction one step up a Witt tower, on symbols and on data.

Inducing a unipotent character from G_n x GL_1 to G_{n+1} gives the
characters whose symbol has the same defect and whose bipartition Υ has one
more box.  For unitary groups one Witt step adds 2 to the dimension.

>>> from .families import GroupFamily, Kind, UnipotentChar
>>> c = UnipotentChar(GroupFamily(Kind.SP, 1), Symbol.parse("[1|]"))
>>> [str(s.symbol) for s in successors(c)]
['[2,0|1]', '[2,1|0]', '[2|]']
"""

from __future__ import annotations

from dataclasses import replace

from .datum import OrthoSympDatum, UnitaryDatum, theta_rank_datum
from .families import FamilyError, GroupFamily, Kind, UnipotentChar
from .symbols import Bipartition, Symbol, defect, normalize, upsilon, upsilon_inverse
from .theta import removal_dimension, removal_pair, theta_rank_char, world_of

__all__ = [
    "add_box", "symbol_successors", "successors", "induced_set",
    "min_theta_over_induced", "distinguished_successor", "datum_successors",
    "successor_count", "step",
]


def add_box(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Every partition obtained from ``parts`` by adding one box."""
    out = []
    for i in range(len(parts) + 1):
        cur = parts[i] if i < len(parts) else 0
        if i == 0 or parts[i - 1] > cur:
            out.append(parts[:i] + (cur + 1,) + parts[i + 1:])
    return out


def symbol_successors(s: Symbol) -> list[Symbol]:
    b = upsilon(s)
    d = defect(s)
    out = [upsilon_inverse(Bipartition(mu, b.bottom), d) for mu in add_box(b.top)]
    out += [upsilon_inverse(Bipartition(b.top, nu), d) for nu in add_box(b.bottom)]
    return sorted(set(out), key=_order)


def successor_count(s: Symbol) -> int:
    """Addable boxes of Υ(s): one per distinct part plus a new row, in each partition."""
    b = upsilon(s)
    return len(set(b.top)) + 1 + len(set(b.bottom)) + 1


def _order(s: Symbol):
    b = upsilon(s)
    return (defect(s), b.top, b.bottom)


def step(kind: Kind) -> int:
    """How much the family parameter grows per Witt step."""
    return 2 if kind is Kind.U else 1


def successors(char: UnipotentChar) -> list[UnipotentChar]:
    fam = char.family
    nxt = GroupFamily(fam.kind, fam.n + step(fam.kind))
    return [UnipotentChar(nxt, s, char.sgn_flag) for s in symbol_successors(char.symbol)]


def induced_set(char: UnipotentChar, m: int) -> list[UnipotentChar]:
    """Everything reached from ``char`` in the Witt steps up to parameter ``m``."""
    fam = char.family
    gap = m - fam.n
    if gap < 0:
        raise FamilyError(f"target {m} is below the family parameter {fam.n}")
    if gap % step(fam.kind):
        raise FamilyError(f"target {m} is not in the Witt tower of {fam}")
    layer = {char.symbol}
    for _ in range(gap // step(fam.kind)):
        layer = {t for s in layer for t in symbol_successors(s)}
    target = GroupFamily(fam.kind, m)
    return [UnipotentChar(target, s, char.sgn_flag) for s in sorted(layer, key=_order)]


def min_theta_over_induced(char: UnipotentChar, m: int) -> int:
    return min(theta_rank_char(c) for c in induced_set(char, m))


def distinguished_successor(char: UnipotentChar, case: str | None = None) -> UnipotentChar:
    """The successor raising a1 (case "a") or b1 (case "b") by one.

    The removal that does not contain the raised entry is untouched, so the
    Θ-rank survives when that removal is the smaller one.  By default the
    case is picked that way.
    """
    a_side, b_side = removal_pair(char.symbol)
    if case is None:
        world = world_of(char.family.kind)
        case = "a" if removal_dimension(world, a_side) <= removal_dimension(world, b_side) else "b"
    if case not in ("a", "b"):
        raise ValueError(f"case must be 'a' or 'b', got {case!r}")
    s = normalize(char.symbol)
    b = upsilon(s)
    if case == "a":
        b = Bipartition((b.top[0] + 1,) + b.top[1:] if b.top else (1,), b.bottom)
    else:
        b = Bipartition(b.top, (b.bottom[0] + 1,) + b.bottom[1:] if b.bottom else (1,))
    fam = char.family
    nxt = GroupFamily(fam.kind, fam.n + step(fam.kind))
    return UnipotentChar(nxt, upsilon_inverse(b, defect(s)), char.sgn_flag)


def datum_successors(d: OrthoSympDatum | UnitaryDatum, part: str | int | None = None) -> list:
    """Data one Witt step up whose character occurs in the induced character.

    For Sp and O the new GL_1 eigenvalue joins the +1 part by default
    (``part="plus"``); ``part="minus"`` puts it at -1 instead.  For U,
    ``part`` is the index of the slot that grows; ``len(d.slots)`` opens
    one of the empty slots.  By default the slot giving the Θ-rank grows.
    """
    if isinstance(d, UnitaryDatum):
        return _unitary_successors(d, part)
    if part is None:
        part = "plus"
    if part == "plus":
        return [replace(d, n=d.n + 1, n_plus=d.n_plus + 1, lambda_plus=s)
                for s in symbol_successors(d.lambda_plus)]
    if part == "minus":
        return [replace(d, n=d.n + 1, n_minus=d.n_minus + 1, lambda_minus=s)
                for s in symbol_successors(d.lambda_minus)]
    raise ValueError(f"part must be 'plus' or 'minus', got {part!r}")


def _unitary_successors(d: UnitaryDatum, slot: int | None) -> list[UnitaryDatum]:
    slots = list(d.slots)
    if slot is None:
        best, slot = d.n, len(slots)
        for j, (m, s) in enumerate(slots):
            value = theta_rank_datum(UnitaryDatum(m, ((m, s),), 0)) if m else 0
            if d.n - m + value < best:
                best, slot = d.n - m + value, j
    if not isinstance(slot, int) or not 0 <= slot <= len(slots):
        raise ValueError(f"slot index {slot!r} out of range")
    if slot == len(slots):
        slots.append((0, Symbol()))
    m, s = slots[slot]
    out = []
    for t in symbol_successors(s):
        new = list(slots)
        new[slot] = (m + 2, t)
        out.append(UnitaryDatum(d.n + 2, tuple(new), d.rest))
    return out
