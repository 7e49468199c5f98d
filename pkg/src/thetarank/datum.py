"""
Modified Lusztig data and the Θ-rank of arbitrary irreducible characters.

An irreducible character of Sp or O is described by the ranks n⁻ and n⁺ of the
(-1)- and (+1)-eigenspace parts of its semisimple label together with one
unipotent symbol for each of them.  The rest of the rank, n⁰ = n - n⁻ - n⁺,
sits in general linear or unitary factors that no formula here looks at.

For U_n the only data that matter are the unitary factors U_{n_j} belonging to
eigenvalues of order dividing q+1, each with a unipotent symbol.  Those are
the ``slots``; whatever is left over is ``rest``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .families import FamilyError, GroupFamily, Kind, UnipotentChar, member
from .symbols import Symbol, SymbolError, defect, normalize, rank, transpose
from .theta import World, theta_rank_symbol

__all__ = [
    "DatumError", "OrthoSympDatum", "UnitaryDatum",
    "theta_rank_so", "theta_rank_u", "theta_rank_datum",
    "twist_sgn", "twist_chi", "embed_unipotent",
    "datum_from_json", "datum_to_json", "even_type",
]


class DatumError(FamilyError):
    """A datum that violates its invariants, or a twist that does not apply."""


_SO_KINDS = (Kind.SP, Kind.OPLUS, Kind.OMINUS, Kind.OODD)


def even_type(s: Symbol) -> Kind:
    """O+ or O- for an even-defect symbol, by defect mod 4."""
    d = defect(s)
    if d % 2:
        raise DatumError(f"{s} has odd defect, so it is not an even orthogonal symbol")
    return Kind.OPLUS if d % 4 == 0 else Kind.OMINUS


@dataclass(frozen=True)
class OrthoSympDatum:
    kind: Kind
    n: int
    n_minus: int
    n_plus: int
    lambda_minus: Symbol
    lambda_plus: Symbol
    sgn_flag: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lambda_minus", normalize(self.lambda_minus))
        object.__setattr__(self, "lambda_plus", normalize(self.lambda_plus))
        self.validate()

    @property
    def n_zero(self) -> int:
        return self.n - self.n_minus - self.n_plus

    def validate(self) -> None:
        if self.kind not in _SO_KINDS:
            raise DatumError(f"{self.kind.value} is not a symplectic or orthogonal kind")
        if min(self.n, self.n_minus, self.n_plus) < 0 or self.n_zero < 0:
            raise DatumError(
                f"need 0 <= n- + n+ <= n, got n={self.n}, n-={self.n_minus}, n+={self.n_plus}")
        for label, s, want in (("lambda_minus", self.lambda_minus, self.n_minus),
                               ("lambda_plus", self.lambda_plus, self.n_plus)):
            if rank(s) != want:
                raise DatumError(f"{label} {s} has rank {rank(s)}, expected {want}")
        if self.kind is Kind.OODD:
            for label, s in (("lambda_minus", self.lambda_minus), ("lambda_plus", self.lambda_plus)):
                if defect(s) % 4 != 1:
                    raise DatumError(f"{label} {s} must be a symplectic symbol (defect 1 mod 4)")
        else:
            if self.kind is Kind.SP:
                if defect(self.lambda_plus) % 4 != 1:
                    raise DatumError(f"lambda_plus {self.lambda_plus} must be a symplectic symbol")
                even = [self.lambda_minus]
            else:
                even = [self.lambda_minus, self.lambda_plus]
            types = [even_type(s) for s in even]
            # with no room for other factors the two orthogonal pieces must
            # multiply to the group's own type
            if self.kind.is_even_orthogonal and self.n_zero == 0:
                sign = 1
                for t in types:
                    sign *= 1 if t is Kind.OPLUS else -1
                want = 1 if self.kind is Kind.OPLUS else -1
                if sign != want:
                    raise DatumError(
                        f"types of lambda_minus and lambda_plus do not multiply to {self.kind.value}")
        if self.sgn_flag and self.kind is not Kind.OODD:
            raise DatumError("sgn_flag is only meaningful for odd orthogonal groups")


@dataclass(frozen=True)
class UnitaryDatum:
    n: int
    slots: tuple[tuple[int, Symbol], ...] = ()
    rest: int = 0

    def __post_init__(self):
        slots = tuple((int(m), normalize(s)) for m, s in self.slots)
        object.__setattr__(self, "slots", slots)
        if self.n < 0 or self.rest < 0:
            raise DatumError("n and rest must be non-negative")
        for m, s in slots:
            if m <= 0:
                raise DatumError(f"slot dimensions must be positive, got {m}")
            if not member(GroupFamily(Kind.U, m), s):
                raise DatumError(f"{s} is not a unipotent symbol of U_{m}")
        if sum(m for m, _ in slots) + self.rest != self.n:
            raise DatumError(
                f"slot dimensions {[m for m, _ in slots]} plus rest {self.rest} do not add up to {self.n}")


def theta_rank_so(d: OrthoSympDatum) -> int:
    plus = 2 * d.n - 2 * d.n_plus + theta_rank_symbol(World.SPO, d.lambda_plus)
    minus = 2 * d.n - 2 * d.n_minus + theta_rank_symbol(World.SPO, d.lambda_minus)
    if d.kind is Kind.SP:
        minus += 1
    return min(plus, minus)


def theta_rank_u(d: UnitaryDatum) -> int:
    # the empty slots are always there, each contributing n
    best = d.n
    for m, s in d.slots:
        best = min(best, d.n - m + theta_rank_symbol(World.U, s))
    return best


def theta_rank_datum(d: OrthoSympDatum | UnitaryDatum) -> int:
    if isinstance(d, UnitaryDatum):
        return theta_rank_u(d)
    return theta_rank_so(d)


def twist_sgn(d: OrthoSympDatum) -> OrthoSympDatum:
    """The datum of the sign twist: transposed symbols, or a flipped flag."""
    if d.kind is Kind.SP:
        raise DatumError("symplectic groups have no sign character")
    if d.kind is Kind.OODD:
        return replace(d, sgn_flag=not d.sgn_flag)
    return replace(d, lambda_minus=transpose(d.lambda_minus),
                   lambda_plus=transpose(d.lambda_plus))


def twist_chi(d: OrthoSympDatum) -> OrthoSympDatum:
    """The datum of the spinor-norm twist: the two eigenvalue parts swap."""
    if d.kind is Kind.SP:
        raise DatumError("the spinor-norm twist is only defined for orthogonal groups")
    return replace(d, n_minus=d.n_plus, n_plus=d.n_minus,
                   lambda_minus=d.lambda_plus, lambda_plus=d.lambda_minus)


def _rank_zero(kind: Kind) -> Symbol:
    # the symplectic series starts at [0|]; the even orthogonal one at [|]
    return Symbol((0,), ()) if kind in (Kind.SP, Kind.OODD) else Symbol()


def embed_unipotent(char: UnipotentChar) -> OrthoSympDatum | UnitaryDatum:
    kind, n, s = char.family.kind, char.family.n, char.symbol
    if kind is Kind.U:
        return UnitaryDatum(n, ((n, s),) if n else (), 0)
    if kind is Kind.OODD:
        return OrthoSympDatum(kind, n, 0, n, _rank_zero(Kind.SP), transpose(s), char.sgn_flag)
    return OrthoSympDatum(kind, n, 0, n, Symbol(), s)


# -- JSON ---------------------------------------------------------------------

def _symbol_field(obj: dict, key: str, rank_zero: Symbol) -> Symbol:
    if key not in obj:
        raise SymbolError(f"missing field {key!r}", key)
    raw = obj[key]
    if not isinstance(raw, str):
        raise SymbolError(f"field {key!r} must be a symbol string", key)
    s = Symbol.parse(raw)
    # "[|]" stands for the rank-zero symbol of whichever series the slot uses
    if s == Symbol():
        return rank_zero
    return s


def _int_field(obj: dict, key: str, default: int | None = None) -> int:
    if key not in obj:
        if default is not None:
            return default
        raise SymbolError(f"missing field {key!r}", key)
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise SymbolError(f"field {key!r} must be an integer", key)
    return v


def datum_from_json(text: str | dict) -> OrthoSympDatum | UnitaryDatum:
    obj = json.loads(text) if isinstance(text, str) else text
    if not isinstance(obj, dict):
        raise SymbolError("a datum must be a JSON object", str(obj)[:40])
    fam = obj.get("family")
    try:
        kind = Kind(str(fam).lower())
    except ValueError:
        raise SymbolError(f"unknown family {fam!r}", str(fam)) from None
    n = _int_field(obj, "n")
    if kind is Kind.U:
        slots = []
        for slot in obj.get("slots", []):
            if not isinstance(slot, dict):
                raise SymbolError("each slot must be an object", str(slot)[:40])
            slots.append((_int_field(slot, "n"), _symbol_field(slot, "lambda", Symbol())))
        rest = _int_field(obj, "rest", n - sum(m for m, _ in slots))
        return UnitaryDatum(n, tuple(slots), rest)
    minus_zero = _rank_zero(Kind.SP) if kind is Kind.OODD else Symbol()
    plus_zero = _rank_zero(Kind.SP) if kind in (Kind.SP, Kind.OODD) else Symbol()
    sgn = obj.get("sgn", False)
    if not isinstance(sgn, bool):
        raise SymbolError("field 'sgn' must be a boolean", "sgn")
    return OrthoSympDatum(kind, n, _int_field(obj, "nMinus"), _int_field(obj, "nPlus"),
                          _symbol_field(obj, "lambdaMinus", minus_zero),
                          _symbol_field(obj, "lambdaPlus", plus_zero), sgn)


def datum_to_json(d: OrthoSympDatum | UnitaryDatum) -> dict:
    if isinstance(d, UnitaryDatum):
        return {"family": "u", "n": d.n,
                "slots": [{"n": m, "lambda": str(s)} for m, s in d.slots], "rest": d.rest}
    return {"family": d.kind.value, "n": d.n, "nMinus": d.n_minus, "nPlus": d.n_plus,
            "lambdaMinus": str(d.lambda_minus), "lambdaPlus": str(d.lambda_plus),
            "sgn": d.sgn_flag}
