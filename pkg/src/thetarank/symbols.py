"""
Symbols, bipartitions and the statistics attached to them.

A symbol is an ordered pair of beta-sets (strictly decreasing tuples of
non-negative integers), written ``[a1,a2,...|b1,b2,...]``.  Two symbols are
equivalent when one is obtained from the other by repeatedly shifting both
rows up by one and appending a zero to each row.  Every statistic here is
constant on equivalence classes.

>>> s = Symbol.parse("[3,2,1,0|0]")
>>> normalize(s)
Symbol(top=(2, 1, 0), bottom=())
>>> rank(Symbol.parse("[2,1,0|2,1]")), defect(Symbol.parse("[2,1,0|2,1]"))
(2, 1)
>>> upsilon(Symbol.parse("[4,1|2]"))
Bipartition(top=(3, 1), bottom=(2,))
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "MAX_ENTRY", "MAX_ROW",
    "SymbolError", "Symbol", "Bipartition",
    "normalize", "expand", "defect", "rank", "rank_u", "rank_u_closed",
    "transpose", "upsilon", "upsilon_inverse", "equivalent",
    "defect_quadratic", "unitary_core", "partition_size",
]

MAX_ENTRY = 10**9
MAX_ROW = 10**6


class SymbolError(ValueError):
    """Raised for malformed symbols or partitions.

    ``token`` names the offending piece of input when there is one.
    """

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


def _check_beta(row: tuple[int, ...], label: str) -> None:
    if len(row) > MAX_ROW:
        raise SymbolError(f"{label} row longer than {MAX_ROW}")
    for i, x in enumerate(row):
        if not isinstance(x, int) or isinstance(x, bool):
            raise SymbolError(f"non-integer entry {x!r} in {label} row", str(x))
        if x < 0:
            raise SymbolError(f"negative entry {x} in {label} row", str(x))
        if x > MAX_ENTRY:
            raise SymbolError(f"entry {x} exceeds {MAX_ENTRY}", str(x))
        if i and row[i - 1] <= x:
            raise SymbolError(
                f"{label} row {list(row)} is not strictly decreasing", str(x))


@dataclass(frozen=True, order=True)
class Symbol:
    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        _check_beta(self.top, "top")
        _check_beta(self.bottom, "bottom")

    _ROW = re.compile(r"\s*\[([^|\]]*)\|([^|\]]*)\]\s*")

    @classmethod
    def parse(cls, text: str) -> Symbol:
        """Parse ``[a1,...|b1,...]``; whitespace is ignored, empty rows allowed."""
        m = cls._ROW.fullmatch(text)
        if m is None:
            raise SymbolError(f"cannot parse symbol {text!r}", text)
        rows = []
        for part in m.groups():
            part = part.strip()
            if not part:
                rows.append(())
                continue
            entries = []
            for tok in part.split(","):
                tok = tok.strip()
                if not tok.isdigit():
                    raise SymbolError(f"bad entry {tok!r} in {text!r}", tok)
                if len(tok) > 10 or int(tok) > MAX_ENTRY:
                    raise SymbolError(f"entry {tok} exceeds {MAX_ENTRY}", tok)
                entries.append(int(tok))
            rows.append(tuple(entries))
        return cls(*rows)

    def __str__(self) -> str:
        return "[{}|{}]".format(",".join(map(str, self.top)),
                                ",".join(map(str, self.bottom)))


@dataclass(frozen=True, order=True)
class Bipartition:
    """An ordered pair of partitions; zero parts are never stored."""
    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self):
        for label in ("top", "bottom"):
            parts = tuple(getattr(self, label))
            if any(p < 0 for p in parts):
                raise SymbolError(f"negative part in {label} partition")
            if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise SymbolError(f"{label} partition {list(parts)} is not weakly decreasing")
            object.__setattr__(self, label, tuple(p for p in parts if p))

    def __len__(self) -> int:
        # the size |(mu, nu)| = |mu| + |nu|, not a part count
        return sum(self.top) + sum(self.bottom)

    def swap(self) -> Bipartition:
        return Bipartition(self.bottom, self.top)

    def __str__(self) -> str:
        return "[{}|{}]".format(",".join(map(str, self.top)),
                                ",".join(map(str, self.bottom)))


def partition_size(b: Bipartition) -> int:
    return len(b)


def normalize(s: Symbol) -> Symbol:
    """Fully reduced representative: strip a common zero and shift down while possible."""
    top, bottom = s.top, s.bottom
    k = 0
    while k < len(top) and k < len(bottom) and top[-1 - k] == k and bottom[-1 - k] == k:
        k += 1
    if not k:
        return s
    return Symbol(tuple(a - k for a in top[:len(top) - k]),
                  tuple(b - k for b in bottom[:len(bottom) - k]))


def expand(s: Symbol) -> Symbol:
    return Symbol(tuple(a + 1 for a in s.top) + (0,),
                  tuple(b + 1 for b in s.bottom) + (0,))


def defect(s: Symbol) -> int:
    return len(s.top) - len(s.bottom)


def rank(s: Symbol) -> int:
    m = len(s.top) + len(s.bottom)
    return sum(s.top) + sum(s.bottom) - (m - 1) ** 2 // 4


def defect_quadratic(d: int) -> int:
    """The part of ``rank`` not carried by the bipartition: floor(d^2/4)."""
    return d * d // 4


def rank_u(s: Symbol) -> int:
    d = abs(defect(s))
    return 2 * len(upsilon(s)) + d * (d + 1) // 2


def rank_u_closed(s: Symbol) -> int:
    """The same value as :func:`rank_u`, computed from the entries directly."""
    m = len(s.top) + len(s.bottom)
    twice = 4 * (sum(s.top) + sum(s.bottom)) + abs(defect(s)) - m * (m - 2)
    assert twice % 2 == 0
    return twice // 2


def unitary_core(d: int) -> int:
    """Staircase index of the 2-core carried by defect ``d`` in the unitary setting.

    Unitary families use defects that are even and non-negative or odd and
    negative; each such ``d`` carries the core of size T(|d|).  The other
    defects are read through the admissible defect one step closer to zero.
    """
    if (d >= 0 and d % 2 == 0) or (d < 0 and d % 2 == 1):
        return abs(d)
    return abs(d) - 1


def transpose(s: Symbol) -> Symbol:
    return Symbol(s.bottom, s.top)


def _strip_staircase(row: tuple[int, ...]) -> tuple[int, ...]:
    m = len(row)
    return tuple(x - (m - 1 - i) for i, x in enumerate(row))


def upsilon(s: Symbol) -> Bipartition:
    return Bipartition(_strip_staircase(s.top), _strip_staircase(s.bottom))


def upsilon_inverse(b: Bipartition, d: int) -> Symbol:
    """The reduced symbol of defect ``d`` whose bipartition is ``b``."""
    m2 = max(len(b.bottom), len(b.top) - d, -d, 0)
    m1 = m2 + d
    top = b.top + (0,) * (m1 - len(b.top))
    bottom = b.bottom + (0,) * (m2 - len(b.bottom))
    return Symbol(tuple(x + m1 - 1 - i for i, x in enumerate(top)),
                  tuple(x + m2 - 1 - i for i, x in enumerate(bottom)))


def equivalent(s1: Symbol, s2: Symbol) -> bool:
    return normalize(s1) == normalize(s2)
