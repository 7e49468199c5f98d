"""
Exhaustive desk-scale checks, one suite per statement.

Each suite runs over a finite, declared domain and returns a ``SuiteReport``;
a report passes when its failure list is empty.  ``run_suite("all", n)``
runs them in a fixed order.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .branching import (datum_successors, distinguished_successor, induced_set,
                        min_theta_over_induced, step, successor_count, successors,
                        symbol_successors)
from .correspondence import (PairCase, brute_min_source_dimension, calibrated_sign,
                             case_tower, group_dimension, min_source_dimension,
                             underline_theta_full, underline_theta_rank)
from .datum import (DatumError, OrthoSympDatum, UnitaryDatum, embed_unipotent, theta_rank_datum,
                    theta_rank_so, theta_rank_u, twist_chi, twist_sgn)
from .families import (BoundError, FamilyError, GroupFamily, Kind, UnipotentChar,
                       bipartition_count, enumerate_symbols, enumerate_unipotent,
                       is_self_transpose, max_rank, member, partitions)
from .symbols import (Bipartition, Symbol, defect, defect_quadratic, expand, normalize, rank,
                      rank_u, rank_u_closed, transpose, upsilon, upsilon_inverse)
from .theta import (TOWERS, World, cuspidal_characters, first_occurrence,
                    steinberg_characters, theta_rank_char, theta_rank_symbol, trivial_symbol,
                    world_of)
from .witnesses import WITNESS_EXCEPTIONS, admissible_theta_ranks, witness_symbol

__all__ = ["SuiteReport", "SUITES", "run_suite", "run_all", "counting_oracle",
           "brute_force_symbols", "orthosymp_data", "unitary_data", "random_symbols"]

ALL_KINDS = (Kind.SP, Kind.OPLUS, Kind.OMINUS, Kind.OODD, Kind.U)
SPO_KINDS = (Kind.SP, Kind.OPLUS, Kind.OMINUS, Kind.OODD)
RANDOM_SEED = 20240917


@dataclass
class SuiteReport:
    name: str
    bounds: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.cases > 0

    def check(self, ok: bool, inp, expected, got) -> None:
        self.cases += 1
        if not ok:
            self.failures.append((str(inp), _plain(expected), _plain(got)))

    def to_dict(self) -> dict:
        return {"suite": self.name, "bounds": self.bounds, "cases": self.cases,
                "passed": self.passed, "failures": [list(f) for f in self.failures[:50]],
                "failure_count": len(self.failures), "wall_time": round(self.wall_time, 4),
                "notes": self.notes}


def _plain(x):
    if isinstance(x, (int, bool, str)) or x is None:
        return x
    if isinstance(x, (list, tuple, set)):
        return [_plain(v) for v in x]
    return str(x)


# -- shared domains -----------------------------------------------------------

def _chars(kinds, max_n: int):
    for kind in kinds:
        for n in range(max_n + 1):
            yield from enumerate_unipotent(GroupFamily(kind, n))


def counting_oracle(family: GroupFamily) -> int:
    """Number of unipotent symbols, from p2 and a defect scan of its own."""
    n = family.n
    total = 0
    for d in range(-2 * n - 3, 2 * n + 4):
        if family.kind is Kind.U:
            if not ((d >= 0 and d % 2 == 0) or (d < 0 and d % 2 == 1)):
                continue
            core = abs(d) * (abs(d) + 1) // 2
            if core <= n and (n - core) % 2 == 0:
                total += bipartition_count((n - core) // 2)
        else:
            want = {Kind.OPLUS: 0, Kind.SP: 1, Kind.OMINUS: 2, Kind.OODD: 3}[family.kind]
            if d % 4 == want and d * d // 4 <= n:
                total += bipartition_count(n - d * d // 4)
    return total


def brute_force_symbols(family: GroupFamily) -> set[Symbol]:
    """Reduced symbols of the family, by scanning all pairs of small β-sets."""
    n = family.n
    top_entry = 2 * n + 2
    rows = [()]
    for size in range(1, top_entry + 2):
        rows.extend(tuple(sorted(c, reverse=True))
                    for c in itertools.combinations(range(top_entry + 1), size))
    out = set()
    for a in rows:
        for b in rows:
            if a and b and a[-1] == 0 and b[-1] == 0:
                continue
            s = Symbol(a, b)
            if member(family, s):
                out.add(s)
    return out


def random_symbols(count: int, seed: int = RANDOM_SEED, max_entry: int = 40,
                   max_row: int = 12) -> list[Symbol]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rows = []
        for _ in range(2):
            size = rng.randint(0, max_row)
            rows.append(tuple(sorted(rng.sample(range(max_entry + 1), size), reverse=True)))
        out.append(Symbol(*rows))
    return out


def _symbols_for(kinds, n: int) -> list[Symbol]:
    out = []
    for kind in kinds:
        if kind is Kind.OMINUS and n == 0:
            continue
        out.extend(enumerate_symbols(GroupFamily(kind, n)))
    return out


def orthosymp_data(kind: Kind, n: int):
    """Every datum of the family at rank n (with any slack n⁰)."""
    minus_kinds = (Kind.SP,) if kind is Kind.OODD else (Kind.OPLUS, Kind.OMINUS)
    plus_kinds = (Kind.SP,) if kind in (Kind.SP, Kind.OODD) else (Kind.OPLUS, Kind.OMINUS)
    flags = (False, True) if kind is Kind.OODD else (False,)
    for nm in range(n + 1):
        for np_ in range(n - nm + 1):
            for lm in _symbols_for(minus_kinds, nm):
                for lp in _symbols_for(plus_kinds, np_):
                    for flag in flags:
                        try:
                            yield OrthoSympDatum(kind, n, nm, np_, lm, lp, flag)
                        except DatumError:
                            continue


def unitary_data(n: int):
    """Every slot list for U_n, slots listed by weakly decreasing (dimension, symbol)."""
    pieces = [(m, s) for m in range(1, n + 1) for s in enumerate_symbols(GroupFamily(Kind.U, m))]
    pieces.sort(key=lambda p: (p[0], str(p[1])), reverse=True)

    def build(start: int, room: int):
        yield ()
        for i in range(start, len(pieces)):
            m, s = pieces[i]
            if m <= room:
                for rest in build(i, room - m):
                    yield ((m, s),) + rest

    for slots in build(0, n):
        yield UnitaryDatum(n, slots, n - sum(m for m, _ in slots))


# -- suites -------------------------------------------------------------------

def suite_rank_identities(r: SuiteReport, max_n: int) -> None:
    pool = [s for c in _chars(ALL_KINDS, max_n) for s in [c.symbol]]
    pool += random_symbols(10_000)
    r.bounds["random"] = {"count": 10_000, "seed": RANDOM_SEED, "max_entry": 40, "max_row": 12}
    for s in pool:
        d = defect(s)
        b = upsilon(s)
        r.check(rank(s) == len(b) + defect_quadratic(d), s, "rank = |Υ| + quad(def)", rank(s))
        r.check(rank_u(s) == rank_u_closed(s), s, rank_u(s), rank_u_closed(s))
        r.check(upsilon_inverse(b, d) == normalize(s), s, normalize(s), upsilon_inverse(b, d))
        r.check(upsilon(upsilon_inverse(b, d)) == b, s, b, upsilon(upsilon_inverse(b, d)))
        t = transpose(s)
        r.check(rank(t) == rank(s) and defect(t) == -d and transpose(t) == s,
                s, "transpose laws", str(t))
        e = s
        for _ in range(3):
            e = expand(e)
            same = (defect(e), rank(e), rank_u(e), upsilon(e)) == (d, rank(s), rank_u(s), b)
            r.check(same and normalize(e) == normalize(s), f"{s} ~ {e}", "invariant", "changed")


def suite_counting(r: SuiteReport, max_n: int) -> None:
    brute_n = min(max_n, 3)
    r.bounds["brute_force_n"] = brute_n
    for kind in ALL_KINDS:
        for n in range(max_n + 1):
            fam = GroupFamily(kind, n)
            got = len(enumerate_symbols(fam))
            r.check(got == counting_oracle(fam), fam, counting_oracle(fam), got)
            if n <= brute_n:
                brute = brute_force_symbols(fam)
                r.check(set(enumerate_symbols(fam)) == brute, fam, sorted(map(str, brute)),
                        sorted(map(str, enumerate_symbols(fam))))
    r.check(len(enumerate_symbols(GroupFamily(Kind.SP, 2))) == 6, "sp:2", 6,
            len(enumerate_symbols(GroupFamily(Kind.SP, 2))))


def suite_family_closure(r: SuiteReport, max_n: int) -> None:
    for kind in ALL_KINDS:
        for n in range(max_n + 1):
            fam = GroupFamily(kind, n)
            syms = enumerate_symbols(fam)
            r.check(len(set(syms)) == len(syms), fam, "no duplicates", len(syms) - len(set(syms)))
            for s in syms:
                r.check(member(fam, s) and normalize(s) == s, s, "reduced member", False)
                if kind.is_even_orthogonal:
                    r.check(transpose(s) in set(syms), s, "transpose in family", str(transpose(s)))
            self_t = sum(1 for s in syms if is_self_transpose(s))
            if kind is Kind.OMINUS:
                r.check(self_t == 0, fam, 0, self_t)


def suite_theta_class_invariance(r: SuiteReport, max_n: int) -> None:
    for c in _chars(ALL_KINDS, max_n):
        world = world_of(c.family.kind)
        base = theta_rank_symbol(world, c.symbol)
        e = c.symbol
        for _ in range(3):
            e = expand(e)
            r.check(theta_rank_symbol(world, e) == base, e, base, theta_rank_symbol(world, e))
        if world is World.SPO:
            t = transpose(c.symbol)
            r.check(theta_rank_symbol(world, t) == base, t, base, theta_rank_symbol(world, t))


def suite_parity(r: SuiteReport, max_n: int) -> None:
    for c in _chars(SPO_KINDS, max_n):
        t = theta_rank_char(c)
        r.check(t % 2 == 0, c, "even", t)


def suite_range(r: SuiteReport, max_n: int) -> None:
    for c in _chars(SPO_KINDS, max_n):
        t = theta_rank_char(c)
        r.check(0 <= t <= 2 * c.family.n, c, f"[0, {2 * c.family.n}]", t)
    u_max = max(max_n, 10) if max_n >= 7 else max_n
    r.bounds["u_max_n"] = u_max
    for c in _chars((Kind.U,), u_max):
        t = theta_rank_char(c)
        r.check(0 <= t <= c.family.n, c, f"[0, {c.family.n}]", t)


def suite_odd_orthogonal_twins(r: SuiteReport, max_n: int) -> None:
    for n in range(max_n + 1):
        fam = GroupFamily(Kind.OODD, n)
        for s in enumerate_symbols(fam):
            plain = theta_rank_char(UnipotentChar(fam, s))
            twisted = theta_rank_char(UnipotentChar(fam, s, True))
            sp = theta_rank_char(UnipotentChar(GroupFamily(Kind.SP, n), transpose(s)))
            r.check(plain == twisted == sp, s, [sp, sp, sp], [plain, twisted, sp])


def suite_max_rank_classification(r: SuiteReport, max_n: int) -> None:
    for kind in SPO_KINDS:
        for n in range(max_n + 1):
            if kind is Kind.OMINUS and n == 0:
                continue
            top = [c for c in enumerate_unipotent(GroupFamily(kind, n)) if theta_rank_char(c) == 2 * n]
            if kind in (Kind.SP, Kind.OODD):
                want = steinberg_characters(kind, n) if n >= 1 or kind is Kind.SP else \
                    [UnipotentChar(GroupFamily(kind, 0), trivial_symbol(kind, 0), f) for f in (False, True)]
                r.check(sorted(map(str, top)) == sorted(map(str, want)), f"{kind.value}:{n}",
                        sorted(map(str, want)), sorted(map(str, top)))
            elif kind is Kind.OPLUS:
                r.check(bool(top) == (n == 0), f"o+:{n}", "only n = 0", sorted(map(str, top)))
            else:
                r.check(not top, f"o-:{n}", [], sorted(map(str, top)))


def suite_unitary_max_rank(r: SuiteReport, max_n: int) -> None:
    u_max = max(max_n, 10) if max_n >= 6 else max_n
    r.bounds["u_max_n"] = u_max
    for n in range(1, u_max + 1):
        hits = [c for c in enumerate_unipotent(GroupFamily(Kind.U, n)) if theta_rank_char(c) == n]
        r.check(not hits, f"u:{n}", [], sorted(map(str, hits)))


def suite_tower_min(r: SuiteReport, max_n: int) -> None:
    for c in _chars(ALL_KINDS, max_n):
        kind = c.family.kind
        values = [first_occurrence(c, t) for t in TOWERS[kind]]
        if kind.is_even_orthogonal:
            twin = UnipotentChar(c.family, transpose(c.symbol))
            values += [first_occurrence(twin, t) for t in TOWERS[kind]]
        if kind is Kind.OODD:
            twin = UnipotentChar(c.family, c.symbol, not c.sgn_flag)
            values += [first_occurrence(twin, t) for t in TOWERS[kind]]
        want = theta_rank_symbol(world_of(kind), c.symbol)
        r.check(min(values) == want, c, want, values)


def suite_tower_sum(r: SuiteReport, max_n: int) -> None:
    for c in _chars((Kind.SP,), max_n):
        towers = TOWERS[Kind.SP]
        total = sum(first_occurrence(c, t) for t in towers)
        r.check(total <= 4 * c.family.n + 2, c, f"<= {4 * c.family.n + 2}", total)


def suite_steinberg(r: SuiteReport, max_n: int) -> None:
    hi = max(max_n, 20)
    r.bounds["n"] = [1, hi]
    for n in range(1, hi + 1):
        for kind in ALL_KINDS:
            want = {Kind.SP: 2 * n, Kind.OPLUS: 2 * n - 2, Kind.OMINUS: 2 * n - 2,
                    Kind.OODD: 2 * n, Kind.U: n - 1}[kind]
            for c in steinberg_characters(kind, n):
                r.check(theta_rank_char(c) == want, c, want, theta_rank_char(c))


def suite_cuspidal(r: SuiteReport, max_n: int) -> None:
    r.bounds["d"] = [0, 5]
    for d in range(0, 6):
        for kind in (Kind.SP, Kind.OODD):
            for c in cuspidal_characters(kind, d):
                r.check(theta_rank_char(c) == 2 * d * d, c, 2 * d * d, theta_rank_char(c))
                r.check(upsilon(c.symbol) == Bipartition(), c, "empty Υ", str(upsilon(c.symbol)))
        for c in cuspidal_characters(Kind.U, d):
            want = d * (d - 1) // 2
            r.check(theta_rank_char(c) == want, c, want, theta_rank_char(c))
        if d >= 1:
            kind = Kind.OPLUS if d % 2 == 0 else Kind.OMINUS
            for c in cuspidal_characters(kind, d):
                want = 2 * d * (d - 1)
                r.check(theta_rank_char(c) == want, c, want, theta_rank_char(c))


def suite_existence_witness(r: SuiteReport, max_n: int) -> None:
    r.notes.extend(WITNESS_EXCEPTIONS)
    for kind in ALL_KINDS:
        for n in range(max_n + 1):
            allowed = admissible_theta_ranks(kind, n)
            for k in allowed:
                w = witness_symbol(kind, n, k)
                got = theta_rank_char(w) if isinstance(w, UnipotentChar) else theta_rank_datum(w)
                r.check(got == k, f"{kind.value}:{n} k={k}", k, got)
            if kind is Kind.OMINUS and n == 0:
                continue
            seen = {theta_rank_char(c) for c in enumerate_unipotent(GroupFamily(kind, n))}
            r.check(seen <= set(allowed), f"{kind.value}:{n} unipotent", allowed, sorted(seen))
            for bad in (-1, 2 * n + 1 if kind is not Kind.U else n + 1):
                try:
                    witness_symbol(kind, n, bad)
                    r.check(False, f"{kind.value}:{n} k={bad}", "rejected", "accepted")
                except FamilyError:
                    r.check(True, None, None, None)


def suite_pseudo_unipotent(r: SuiteReport, max_n: int) -> None:
    for n in range(1, max_n + 1):
        for kind in (Kind.OPLUS, Kind.OMINUS):
            for lm in enumerate_symbols(GroupFamily(kind, n)):
                d = OrthoSympDatum(Kind.SP, n, n, 0, lm, Symbol((0,), ()))
                got = theta_rank_so(d)
                want = theta_rank_symbol(World.SPO, lm) + 1
                r.check(got == want and got % 2 == 1, d, want, got)
    hi = max(max_n, 20)
    r.bounds["degree_datum_n"] = [1, hi]
    for n in range(1, hi + 1):
        d = OrthoSympDatum(Kind.SP, n, n, 0, Symbol((n,), (0,)), Symbol((0,), ()))
        r.check(theta_rank_so(d) == 1, d, 1, theta_rank_so(d))


def suite_unitary_datum_max(r: SuiteReport, max_n: int) -> None:
    hi = min(max_n, 7)
    r.bounds["n"] = [0, hi]
    for n in range(hi + 1):
        for d in unitary_data(n):
            t = theta_rank_u(d)
            r.check(0 <= t <= n, d, f"[0, {n}]", t)
            r.check((t == n) == (not d.slots), d, "Θ = n iff no slots", t)


def suite_twist_invariance(r: SuiteReport, max_n: int) -> None:
    hi = min(max_n, 5)
    r.bounds["n"] = [0, hi]
    for kind in (Kind.OPLUS, Kind.OMINUS, Kind.OODD):
        for n in range(hi + 1):
            for d in orthosymp_data(kind, n):
                t = theta_rank_so(d)
                r.check(0 <= t <= 2 * n, d, f"[0, {2 * n}]", t)
                for twist in (twist_sgn, twist_chi):
                    e = twist(d)
                    r.check(theta_rank_so(e) == t and twist(e) == d, d, t, theta_rank_so(e))
    for n in range(hi + 1):
        for d in orthosymp_data(Kind.SP, n):
            t = theta_rank_so(d)
            r.check(0 <= t <= 2 * n, d, f"[0, {2 * n}]", t)


def suite_embed_consistency(r: SuiteReport, max_n: int) -> None:
    for c in _chars(ALL_KINDS, max_n):
        got = theta_rank_datum(embed_unipotent(c))
        want = theta_rank_char(c)
        r.check(got == want, c, want, got)


def suite_induced_min(r: SuiteReport, max_n: int) -> None:
    hi = max(max_n - 1, 0)
    r.bounds["source_n"] = [0, hi]
    r.bounds["steps"] = 3
    for c in _chars(ALL_KINDS, hi):
        t = theta_rank_char(c)
        st = step(c.family.kind)
        for k in range(4):
            m = c.family.n + k * st
            got = min_theta_over_induced(c, m)
            r.check(got == t, f"{c} -> {m}", t, got)


def _jumps(r: SuiteReport, kinds, max_n: int, allowed: set[int]) -> list[int]:
    seen = []
    for c in _chars(kinds, max_n):
        t = theta_rank_char(c)
        for s in successors(c):
            j = theta_rank_char(s) - t
            seen.append(j)
            r.check(j in allowed, f"{c} -> {s.symbol}", sorted(allowed), j)
    return seen


def suite_jump(r: SuiteReport, max_n: int) -> None:
    _jumps(r, SPO_KINDS, max_n, {0, 2})


def suite_unitary_jump(r: SuiteReport, max_n: int) -> None:
    seen = _jumps(r, (Kind.U,), max_n, {0, 1, 2})
    ones = seen.count(1)
    r.notes.append(
        f"{ones} unitary successor(s) raise the Θ-rank by exactly 1, so the "
        "{0, 2} jump law holds only for Sp and O; unitary jumps lie in {0, 1, 2}.")


def suite_distinguished_successor(r: SuiteReport, max_n: int) -> None:
    for c in _chars(ALL_KINDS, max_n):
        t = theta_rank_char(c)
        s = distinguished_successor(c)
        r.check(theta_rank_char(s) == t, f"{c} -> {s.symbol}", t, theta_rank_char(s))
        r.check(s.symbol in {x.symbol for x in successors(c)}, c, "a successor", str(s.symbol))


def suite_successor_count(r: SuiteReport, max_n: int) -> None:
    for c in _chars(ALL_KINDS, max_n):
        succ = symbol_successors(c.symbol)
        r.check(len(succ) == successor_count(c.symbol), c, successor_count(c.symbol), len(succ))
        # brute force: scan the next family for one-box extensions at the same defect
        nxt = GroupFamily(c.family.kind, c.family.n + step(c.family.kind))
        b = upsilon(c.symbol)
        brute = []
        for s in enumerate_symbols(nxt):
            if defect(s) != defect(c.symbol):
                continue
            e = upsilon(s)
            if _contains(e.top, b.top) and _contains(e.bottom, b.bottom) and len(e) == len(b) + 1:
                brute.append(s)
        r.check(set(brute) == set(succ), c, sorted(map(str, brute)), sorted(map(str, succ)))


def _contains(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    if len(small) > len(big):
        return False
    return all(x >= y for x, y in zip(big, small))


def suite_datum_induction(r: SuiteReport, max_n: int) -> None:
    hi = min(max_n, 4)
    r.bounds["n"] = [0, hi]
    r.notes.append(
        "For Sp data of odd Θ-rank the equality needs the new GL_1 factor at "
        "eigenvalue -1 (part='minus'); Sp has no linear twist to move it.")
    for kind in SPO_KINDS:
        for n in range(hi + 1):
            for d in orthosymp_data(kind, n):
                t = theta_rank_so(d)
                for part in ("plus", "minus"):
                    for e in datum_successors(d, part):
                        r.check(theta_rank_so(e) >= t, f"{d} -> {e}", f">= {t}", theta_rank_so(e))
                # the part and twist that keep the minimum
                if kind is Kind.SP:
                    part = "plus" if t % 2 == 0 else "minus"
                    best = min(theta_rank_so(e) for e in datum_successors(d, part))
                else:
                    best = min(theta_rank_so(e) for base in (d, twist_chi(d))
                               for e in datum_successors(base, "plus"))
                r.check(best == t, d, t, best)
    for n in range(0, 2 * hi + 1):
        for d in unitary_data(n):
            t = theta_rank_u(d)
            for j in range(len(d.slots) + 1):
                for e in datum_successors(d, j):
                    r.check(theta_rank_u(e) >= t, f"{d} -> {e}", f">= {t}", theta_rank_u(e))
            best = min(theta_rank_u(e) for e in datum_successors(d))
            r.check(best == t, d, t, best)


def _case_targets(case: PairCase) -> list[Kind]:
    if case is PairCase.I:
        return [Kind.SP, Kind.OPLUS]
    if case is PairCase.II:
        return [Kind.SP, Kind.OMINUS]
    return [Kind.U]


def suite_calibration(r: SuiteReport, max_n: int) -> None:
    hi = min(max_n, 5)
    r.bounds["n"] = [0, hi]
    for case in PairCase:
        sign = calibrated_sign(case)
        r.notes.append(f"case {case.value}: sign {sign:+d}")
        for t_kind in _case_targets(case):
            tower = case_tower(case, t_kind)
            for n in range(hi + 1):
                if t_kind is Kind.OMINUS and n == 0:
                    continue
                fam = GroupFamily(t_kind, n)
                for s in enumerate_symbols(fam):
                    want = first_occurrence(UnipotentChar(fam, s), tower)
                    fast = min_source_dimension(case, s)
                    slow = brute_min_source_dimension(case, s, sign)
                    r.check(fast == slow == want, f"case {case.value} target {s}", want, [fast, slow])
            # into the tower: the smallest admissible target has tau = 0
            s_kind = Kind.SP if t_kind is not Kind.SP and not case.unitary else \
                (Kind.U if case.unitary else (Kind.OPLUS if case is PairCase.I else Kind.OMINUS))
            for n in range(hi + 1):
                if s_kind is Kind.OMINUS and n == 0:
                    continue
                for src in enumerate_symbols(GroupFamily(s_kind, n)):
                    first = None
                    for size in range(0, 4 * hi + 8):
                        try:
                            img = underline_theta_full(case, src, size)
                        except FamilyError:
                            continue
                        first = (size, img)
                        break
                    r.check(first is not None and first[1].tau == 0, f"case {case.value} source {src}",
                            "tau 0", None if first is None else first[1].tau)
    for c in _chars(ALL_KINDS, hi):
        got = underline_theta_rank(c.symbol, c.family.kind, c.sgn_flag)
        want = theta_rank_char(c)
        r.check(got == want, c, want, got)
    cusp_o = Symbol((), (3, 2, 1, 0))
    img = underline_theta_full(PairCase.I, cusp_o, 6)
    r.check(img.symbol == Symbol((4, 3, 2, 1, 0), ()) and img.tau == 0,
            "case I [|3,2,1,0] -> Sp rank 6", "[4,3,2,1,0|] tau 0", f"{img.symbol} tau {img.tau}")
    sp12 = UnipotentChar(GroupFamily(Kind.SP, 6), Symbol((4, 3, 2, 1, 0), ()))
    r.check(min_source_dimension(PairCase.I, sp12.symbol) == 8
            == first_occurrence(sp12, TOWERS[Kind.SP][0]), "cuspidal Sp12 in the O+ tower", 8,
            min_source_dimension(PairCase.I, sp12.symbol))


def suite_correspondence_bookkeeping(r: SuiteReport, max_n: int) -> None:
    hi = min(max_n, 5)
    r.bounds["n"] = [0, hi]
    for case in PairCase:
        for t_kind in _case_targets(case):
            s_kind = Kind.U if case.unitary else (
                Kind.SP if t_kind is not Kind.SP else (Kind.OPLUS if case is PairCase.I else Kind.OMINUS))
            for size in range(0, 2 * hi + 3):
                images = {}
                for n in range(hi + 1):
                    if s_kind is Kind.OMINUS and n == 0:
                        continue
                    for src in enumerate_symbols(GroupFamily(s_kind, n)):
                        try:
                            img = underline_theta_full(case, src, size)
                        except FamilyError:
                            continue
                        tgt = img.symbol
                        r.check(len(upsilon(tgt)) - len(upsilon(src)) == img.tau, (case.value, src, size),
                                img.tau, len(upsilon(tgt)) - len(upsilon(src)))
                        fam = GroupFamily(t_kind, size)
                        r.check(member(fam, tgt), (case.value, src, size), str(fam), str(tgt))
                        if not case.unitary:
                            d_o, d_sp = (defect(src), defect(tgt)) if s_kind is not Kind.SP else \
                                (defect(tgt), defect(src))
                            want = 1 if case is PairCase.I else -1
                            r.check(d_o + d_sp == want, (case.value, src, tgt), want, d_o + d_sp)
                            r.check(abs(d_sp - want) == abs(d_o), (case.value, src, tgt), abs(d_o),
                                    abs(d_sp - want))
                        images.setdefault(tgt, []).append(src)
                for tgt, srcs in images.items():
                    # injective among sources of one size
                    by_size = {}
                    for src in srcs:
                        by_size.setdefault(group_dimension(s_kind, src), []).append(src)
                    for group in by_size.values():
                        r.check(len(group) == 1, (case.value, tgt), 1, [str(s) for s in group])


SUITES: dict[str, tuple[Callable[[SuiteReport, int], None], int]] = {
    # name: (function, default max_n)
    "rank-identities": (suite_rank_identities, 6),
    "counting": (suite_counting, 8),
    "family-closure": (suite_family_closure, 8),
    "theta-class-invariance": (suite_theta_class_invariance, 6),
    "parity": (suite_parity, 7),
    "range": (suite_range, 7),
    "odd-orthogonal-twins": (suite_odd_orthogonal_twins, 7),
    "max-rank-classification": (suite_max_rank_classification, 6),
    "unitary-max-rank": (suite_unitary_max_rank, 10),
    "tower-min": (suite_tower_min, 6),
    "tower-sum": (suite_tower_sum, 7),
    "steinberg": (suite_steinberg, 20),
    "cuspidal": (suite_cuspidal, 5),
    "existence-witness": (suite_existence_witness, 8),
    "pseudo-unipotent": (suite_pseudo_unipotent, 6),
    "unitary-datum-max": (suite_unitary_datum_max, 6),
    "twist-invariance": (suite_twist_invariance, 4),
    "embed-consistency": (suite_embed_consistency, 6),
    "induced-min": (suite_induced_min, 6),
    "jump": (suite_jump, 6),
    "unitary-jump": (suite_unitary_jump, 6),
    "distinguished-successor": (suite_distinguished_successor, 6),
    "successor-count": (suite_successor_count, 6),
    "datum-induction": (suite_datum_induction, 3),
    "calibration": (suite_calibration, 5),
    "correspondence-bookkeeping": (suite_correspondence_bookkeeping, 4),
}


def run_suite(name: str, max_n: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    fn, default = SUITES[name]
    if max_n is None:
        max_n = default
    ceiling = max_rank()
    if max_n < 0 or max_n > ceiling:
        raise BoundError(f"max_n {max_n} outside [0, {ceiling}]")
    report = SuiteReport(name, {"max_n": max_n})
    start = time.perf_counter()
    fn(report, max_n)
    report.wall_time = time.perf_counter() - start
    return report


def run_all(max_n: int | None = None) -> list[SuiteReport]:
    return [run_suite(name, max_n) for name in SUITES]
