"""
Explicit characters of prescribed Θ-rank.

``witness_symbol(kind, n, k)`` returns a unipotent character or a Lusztig
datum of the family (kind, n) whose Θ-rank is exactly ``k``.  Every witness
is checked when it is built.

Admissible k:

    Sp        0 <= k <= 2n
    O+, O-    even k with 0 <= k <= 2n   (O- needs n >= 1)
    O odd     even k with 0 <= k <= 2n
    U         k = 0 for n <= 1, otherwise 0 <= k <= n

For O+ with n = 1 and k = 2 the witness is a torus datum.  Over F_3 that
torus does not exist and O+_2(3) has no character of Θ-rank 2; the model
has no q in it and cannot see that.
"""

from __future__ import annotations

from .datum import OrthoSympDatum, UnitaryDatum, theta_rank_datum
from .families import FamilyError, GroupFamily, Kind, UnipotentChar
from .symbols import Bipartition, Symbol, transpose, upsilon_inverse
from .theta import steinberg_symbol, theta_rank_char, trivial_symbol

__all__ = ["WITNESS_EXCEPTIONS", "admissible_theta_ranks", "witness_symbol",
           "four_case_unitary_witness"]

# q-dependent statements the model cannot check
WITNESS_EXCEPTIONS = (
    "O+_2(3): the torus GL_1(q) with n- = n+ = 0 needs q > 3; over F_3 every "
    "character is linear, so Θ-rank 2 is not attained. Not machine-checkable "
    "in the q-free model.",
)


def admissible_theta_ranks(kind: Kind, n: int) -> list[int]:
    if kind is Kind.SP:
        return list(range(0, 2 * n + 1))
    if kind is Kind.U:
        return [0] if n <= 1 else list(range(0, n + 1))
    if kind is Kind.OMINUS and n < 1:
        return []
    return list(range(0, 2 * n + 1, 2))


def _down(top: int, bottom: int = 0) -> tuple[int, ...]:
    return tuple(range(top, bottom - 1, -1))


def _sp_even(n: int, k: int) -> Symbol:
    if k == 2 * n:
        return steinberg_symbol(Kind.SP, n).symbol
    h = k // 2
    return Symbol((n,) + _down(h, 1), _down(h - 1))


def _oplus(n: int, k: int) -> Symbol:
    h = k // 2
    return Symbol((n,) + _down(h, 1), _down(h))


def _ominus(n: int, k: int) -> Symbol:
    # only used for k < 2n - 2, where n - 1 > k/2 keeps the top row strict
    h = k // 2
    return Symbol((n - 1,) + _down(h, 1), _down(h - 2))


def four_case_unitary_witness(n: int, k: int) -> Symbol | None:
    """The four-case construction for U_n and 0 <= k < n.

    Returns None when the rows it prescribes are not strictly decreasing.
    The result is not checked here; see ``witness_symbol``.
    """
    if (n + k) % 2 == 0:
        if n % 2 == 0:
            top, bottom = (n // 2,) + _down(k // 2, 1), _down(k // 2)
        else:
            top, bottom = ((n - 1) // 2,) + _down((k - 1) // 2, 1), _down((k + 1) // 2)
    elif n % 2 == 0:
        top, bottom = _down((k - 1) // 2), (n // 2,) + _down((k - 1) // 2, 1)
    else:
        top, bottom = _down(k // 2 - 1), ((n - 1) // 2,) + _down(k // 2, 1)
    if len(set(top)) < len(top) or len(set(bottom)) < len(bottom):
        return None
    return Symbol(top, bottom)


def _unitary_odd(n: int, k: int) -> Symbol:
    """Witness for U_n with n odd and 0 <= k < n.

    The four-case construction does not land in S_{U_n} for odd n, so these
    are built on Υ directly, with h = (n-1)/2:

        k even, k < n-1   defect -1, Υ = (- ; h - k/2, 1^(k/2))
        k = n-1           the Steinberg symbol
        k = 1             defect 2,  Υ = (h - 1 ; -)
        k odd, k >= 3     defect -1, Υ = (h - (k-3)/2, 1^((k-3)/2) ; -)
    """
    h = (n - 1) // 2
    if k == n - 1:
        return steinberg_symbol(Kind.U, n).symbol
    if k % 2 == 0:
        return upsilon_inverse(Bipartition((), (h - k // 2,) + (1,) * (k // 2)), -1)
    if k == 1:
        return upsilon_inverse(Bipartition((h - 1,), ()), 2)
    j = (k - 3) // 2
    return upsilon_inverse(Bipartition((h - j,) + (1,) * j, ()), -1)


def witness_symbol(kind: Kind, n: int, k: int) -> UnipotentChar | OrthoSympDatum | UnitaryDatum:
    if k not in admissible_theta_ranks(kind, n):
        raise FamilyError(f"Θ-rank {k} is not attainable in {kind.value}:{n}")
    fam = GroupFamily(kind, n)
    out: UnipotentChar | OrthoSympDatum | UnitaryDatum
    if kind is Kind.SP:
        if k % 2 == 0:
            out = UnipotentChar(fam, _sp_even(n, k))
        else:
            # pseudo-unipotent: everything at eigenvalue -1
            minus = _oplus(n, k - 1)
            out = OrthoSympDatum(Kind.SP, n, n, 0, minus, Symbol((0,), ()))
    elif kind is Kind.OODD:
        out = UnipotentChar(fam, transpose(_sp_even(n, k)))
    elif kind.is_even_orthogonal:
        if k == 2 * n and n >= 1:
            # a torus: no eigenvalue ±1 at all
            out = OrthoSympDatum(kind, n, 0, 0, Symbol(), Symbol())
        elif k == 0:
            out = UnipotentChar(fam, trivial_symbol(kind, n))
        elif kind is Kind.OPLUS:
            out = UnipotentChar(fam, _oplus(n, k))
        else:
            # the direct symbol repeats n-1 at k = 2n-2; the Steinberg
            # character has exactly that Θ-rank
            s = _ominus(n, k) if k < 2 * n - 2 else steinberg_symbol(kind, n).symbol
            out = UnipotentChar(fam, s)
    else:
        if k == n and n >= 2:
            out = UnitaryDatum(n, (), n)
        elif n <= 1:
            out = UnipotentChar(fam, trivial_symbol(kind, n))
        else:
            s = four_case_unitary_witness(n, k) if n % 2 == 0 else _unitary_odd(n, k)
            out = UnipotentChar(fam, s)
    got = theta_rank_char(out) if isinstance(out, UnipotentChar) else theta_rank_datum(out)
    if got != k:
        raise AssertionError(f"witness {out} for {kind.value}:{n} has Θ-rank {got}, not {k}")
    return out
