"""
The underline-theta correspondence on symbols.

For a pair of groups (G', G) of one of four kinds

    I    O+ even and Sp        III  unitary, same parity of dimension
    II   O- even and Sp        IV   unitary, opposite parity

a symbol Λ' of G' goes to the symbol Λ of G with

    Υ(Λ) = (ν ; μ) ∪ (τ ; -)   in cases I, III
    Υ(Λ) = (ν ; μ) ∪ (- ; τ)   in cases II, IV

where Υ(Λ') = (μ ; ν) and τ >= 0 is whatever the size of G forces.  The
defect of Λ is tied to the defect d' of Λ' by

    I    def Λ = 1 - σ d'          III  def Λ = u(1 - σ d')
    II   def Λ = -1 - σ d'         IV   def Λ = u(-1 - σ d')

with u the map sending a defect that no unitary family uses to its
neighbour nearer zero.  The sign σ is not taken on trust: ``calibrated_sign``
fixes it per case by requiring the congruences of both orientations and the
first occurrences of the removal formulas to come out right, and refuses to
proceed unless exactly one sign survives.  It comes out as σ = +1 in all
four cases, so in cases I and II the orthogonal and symplectic defects add up
to 1 and to -1 respectively.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .families import (FamilyError, GroupFamily, Kind, UnipotentChar, enumerate_symbols,
                       member, unitary_defect_ok)
from .symbols import (Bipartition, Symbol, defect, defect_quadratic, normalize, rank, rank_u,
                      transpose, upsilon, upsilon_inverse)
from .theta import Tower, first_occurrence

__all__ = [
    "PairCase", "ThetaImage", "CorrespondenceError", "CalibrationError",
    "unitary_defect", "orientation", "target_defect", "underline_theta",
    "underline_theta_full", "preimages", "min_source_dimension",
    "underline_theta_rank", "calibrated_sign", "brute_min_source_dimension",
    "case_tower", "group_dimension",
]


class CorrespondenceError(FamilyError):
    """No admissible image, or an ambiguous one."""


class CalibrationError(RuntimeError):
    """The sign convention of a case could not be pinned down."""


class PairCase(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    @property
    def unitary(self) -> bool:
        return self in (PairCase.III, PairCase.IV)

    @property
    def tau_on_top(self) -> bool:
        return self in (PairCase.I, PairCase.III)

    @property
    def offset(self) -> int:
        return 1 if self in (PairCase.I, PairCase.III) else -1


@dataclass(frozen=True)
class ThetaImage:
    symbol: Symbol
    tau: int
    defect: int


def unitary_defect(d: int) -> int:
    """Move a defect no unitary family uses one step towards zero."""
    if unitary_defect_ok(d):
        return d
    return d - 1 if d > 0 else d + 1


def group_dimension(kind: Kind, s: Symbol) -> int:
    """Dimension of the group a symbol belongs to: 2 rk for Sp and O, rk_U for U."""
    if kind is Kind.U:
        return rank_u(s)
    if kind is Kind.OODD:
        return 2 * rank(s) + 1
    return 2 * rank(s)


def orientation(case: PairCase, s: Symbol) -> tuple[Kind, Kind]:
    """(source kind, target kind) for a source symbol in a case."""
    d = defect(s)
    if case.unitary:
        if not unitary_defect_ok(d):
            raise CorrespondenceError(f"{s} is not a unitary symbol")
        return Kind.U, Kind.U
    other = Kind.OPLUS if case is PairCase.I else Kind.OMINUS
    if d % 4 == 1:
        return Kind.SP, other
    if d % 4 == (0 if case is PairCase.I else 2):
        return other, Kind.SP
    raise CorrespondenceError(f"{s} (defect {d}) takes no part in case {case.value}")


def _family_ok(kind: Kind, d: int) -> bool:
    if kind is Kind.U:
        return unitary_defect_ok(d)
    return d % 4 == {Kind.SP: 1, Kind.OPLUS: 0, Kind.OMINUS: 2}[kind]


def _raw_target_defect(case: PairCase, d: int, sign: int) -> int:
    t = case.offset - sign * d
    return unitary_defect(t) if case.unitary else t


def target_defect(case: PairCase, d: int, sign: int | None = None) -> int:
    if sign is None:
        sign = calibrated_sign(case)
    return _raw_target_defect(case, d, sign)


def _bulk(kind: Kind, d: int) -> int:
    """The part of the group size not carried by Υ, in units of |Υ|."""
    if kind is Kind.U:
        k = abs(d)
        return k * (k + 1) // 2
    return defect_quadratic(d)


def _adjoin(b: Bipartition, tau: int, top: bool) -> Bipartition:
    mu, nu = b.bottom, b.top       # the rows swap
    if top:
        mu = tuple(sorted(mu + (tau,), reverse=True))
    else:
        nu = tuple(sorted(nu + (tau,), reverse=True))
    return Bipartition(mu, nu)


def _image(case: PairCase, src: Symbol, target_rank: int, sign: int) -> ThetaImage:
    s_kind, t_kind = orientation(case, src)
    d_t = _raw_target_defect(case, defect(src), sign)
    if not _family_ok(t_kind, d_t):
        raise CorrespondenceError(
            f"defect {d_t} does not belong to {t_kind.value} (case {case.value}, sign {sign})")
    b = upsilon(src)
    room = target_rank - _bulk(t_kind, d_t)
    if case.unitary:
        if room % 2:
            raise CorrespondenceError(
                f"U_{target_rank} is not reachable from {src} in case {case.value} (parity)")
        room //= 2
    tau = room - len(b)
    if tau < 0:
        raise CorrespondenceError(
            f"{src} has no image at target {target_rank} in case {case.value}: tau = {tau} < 0")
    out = upsilon_inverse(_adjoin(b, tau, case.tau_on_top), d_t)
    return ThetaImage(out, tau, d_t)


def underline_theta_full(case: PairCase, lambda_prime: Symbol, target_rank: int) -> ThetaImage:
    """Image of ``lambda_prime`` at ``target_rank`` (symbol rank, or dimension for U)."""
    return _image(case, normalize(lambda_prime), target_rank, calibrated_sign(case))


def underline_theta(case: PairCase, lambda_prime: Symbol, target_rank: int) -> Symbol:
    return underline_theta_full(case, lambda_prime, target_rank).symbol


# -- inverse direction --------------------------------------------------------

def _source_defects(case: PairCase, s_kind: Kind, d_t: int, sign: int) -> list[int]:
    # |d_s| is within 2 of |d_t| in every case
    out = []
    for d in range(-abs(d_t) - 3, abs(d_t) + 4):
        if _family_ok(s_kind, d) and _raw_target_defect(case, d, sign) == d_t:
            out.append(d)
    return out


def _source_kind(case: PairCase, t_kind: Kind) -> Kind:
    if case.unitary:
        return Kind.U
    if t_kind is Kind.SP:
        return Kind.OPLUS if case is PairCase.I else Kind.OMINUS
    return Kind.SP


def preimages(case: PairCase, target: Symbol, sign: int | None = None) -> list[tuple[Symbol, int]]:
    """Every (source symbol, tau) mapping onto ``target`` at its own size."""
    if sign is None:
        sign = calibrated_sign(case)
    target = normalize(target)
    d_t = defect(target)
    t_kind = _target_kind(case, target)
    s_kind = _source_kind(case, t_kind)
    b = upsilon(target)
    row = b.top if case.tau_on_top else b.bottom
    out = []
    for tau in sorted(set(row) | {0}):
        rest = list(row)
        if tau:
            rest.remove(tau)
        rest_b = Bipartition(tuple(rest), b.bottom) if case.tau_on_top else Bipartition(b.top, tuple(rest))
        swapped = rest_b.swap()
        for d_s in _source_defects(case, s_kind, d_t, sign):
            src = upsilon_inverse(swapped, d_s)
            out.append((src, tau))
    return sorted(set(out), key=lambda p: (group_dimension(s_kind, p[0]), p[1], p[0]))


def _target_size(kind: Kind, s: Symbol) -> int:
    return rank_u(s) if kind is Kind.U else rank(s)


def min_source_dimension(case: PairCase, target: Symbol, sign: int | None = None) -> int:
    """Smallest dimension of a source group with a symbol mapping onto ``target``."""
    if sign is None:
        sign = calibrated_sign(case)
    target = normalize(target)
    t_kind = _target_kind(case, target)
    s_kind = _source_kind(case, t_kind)
    pre = [src for src, _ in preimages(case, target, sign)
           if _check_forward(case, src, target, t_kind, sign)]
    if not pre:
        raise CorrespondenceError(f"{target} is not in the image of case {case.value}")
    return min(group_dimension(s_kind, src) for src in pre)


def _check_forward(case: PairCase, src: Symbol, target: Symbol, t_kind: Kind, sign: int) -> bool:
    try:
        return _image(case, src, _target_size(t_kind, target), sign).symbol == target
    except CorrespondenceError:
        return False


def _target_kind(case: PairCase, target: Symbol) -> Kind:
    d = defect(target)
    if case.unitary:
        if not unitary_defect_ok(d):
            raise CorrespondenceError(f"{target} is not a unitary symbol")
        return Kind.U
    if d % 4 == 1:
        return Kind.SP
    other = Kind.OPLUS if case is PairCase.I else Kind.OMINUS
    if _family_ok(other, d):
        return other
    raise CorrespondenceError(f"{target} (defect {d}) takes no part in case {case.value}")


def brute_min_source_dimension(case: PairCase, target: Symbol, sign: int,
                               limit: int | None = None) -> int | None:
    """The same minimum as ``min_source_dimension``, by pushing every small source forward."""
    target = normalize(target)
    t_kind = _target_kind(case, target)
    s_kind = _source_kind(case, t_kind)
    size = _target_size(t_kind, target)
    if limit is None:
        limit = 2 * size + 4
    for m in range(0, limit + 1):
        fam = GroupFamily(s_kind, m)
        if s_kind is Kind.OMINUS and m == 0:
            continue
        for src in enumerate_symbols(fam):
            try:
                img = _image(case, src, size, sign)
            except CorrespondenceError:
                continue
            if img.symbol == target:
                return group_dimension(s_kind, src)
    return None


# -- the rank -----------------------------------------------------------------

def case_tower(case: PairCase, target_kind: Kind) -> Tower:
    """The tower in which a target of ``target_kind`` meets the sources of ``case``."""
    if case is PairCase.I:
        return Tower.OPLUS_OF_SP if target_kind is Kind.SP else Tower.SP_OF_OPLUS
    if case is PairCase.II:
        return Tower.OMINUS_OF_SP if target_kind is Kind.SP else Tower.SP_OF_OMINUS
    return Tower.U_SAME_PARITY if case is PairCase.III else Tower.U_OPPOSITE_PARITY


_CASES_FOR = {
    Kind.SP: (PairCase.I, PairCase.II),
    Kind.OPLUS: (PairCase.I,),
    Kind.OMINUS: (PairCase.II,),
    Kind.U: (PairCase.III, PairCase.IV),
}


def underline_theta_rank(s: Symbol, kind: Kind, sgn_flag: bool = False) -> int:
    """Smallest source dimension over the towers for which ``s`` is an image.

    Orthogonal characters are also compared with their sign twist; an odd
    orthogonal character is handled through the symplectic character of its
    transposed symbol.
    """
    s = normalize(s)
    if kind is Kind.OODD:
        return underline_theta_rank(transpose(s), Kind.SP)
    targets = [s]
    if kind.is_even_orthogonal:
        targets.append(transpose(s))
    values = [min_source_dimension(case, t) for case in _CASES_FOR[kind] for t in targets]
    return min(values)


# -- calibration --------------------------------------------------------------

CALIBRATION_BOUND = 3


def _sign_passes(case: PairCase, sign: int, bound: int) -> bool:
    kinds = [Kind.U] if case.unitary else [
        Kind.SP, Kind.OPLUS if case is PairCase.I else Kind.OMINUS]
    for t_kind in kinds:
        s_kind = _source_kind(case, t_kind)
        # both orientations must land in the right family
        for m in range(0, bound + 1):
            if s_kind is Kind.OMINUS and m == 0:
                continue
            for src in enumerate_symbols(GroupFamily(s_kind, m)):
                if not _family_ok(t_kind, _raw_target_defect(case, defect(src), sign)):
                    return False
        # and the smallest source of every target is its first occurrence
        for m in range(0, bound + 1):
            if t_kind is Kind.OMINUS and m == 0:
                continue
            fam = GroupFamily(t_kind, m)
            for target in enumerate_symbols(fam):
                tower = case_tower(case, t_kind)
                want = first_occurrence(UnipotentChar(fam, target), tower)
                got = brute_min_source_dimension(case, target, sign)
                if got != want:
                    return False
    return True


@lru_cache(maxsize=None)
def calibrated_sign(case: PairCase) -> int:
    passing = [sign for sign in (1, -1) if _sign_passes(case, sign, CALIBRATION_BOUND)]
    if len(passing) != 1:
        raise CalibrationError(
            f"case {case.value}: signs {passing} pass calibration; expected exactly one")
    return passing[0]
