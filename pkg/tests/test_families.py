import pytest

from thetarank import (BoundError, FamilyError, GroupFamily, Kind, SymbolError, UnipotentChar,
                       WittKind, bipartition_count, enumerate_symbols, enumerate_unipotent,
                       family_of, member, parse_family, partitions, witt_family)
from thetarank.families import max_rank
from thetarank.verify import counting_oracle

from conftest import P


def test_member_examples():
    assert member(GroupFamily(Kind.SP, 2), P("[2,1,0|2,1]"))
    assert member(GroupFamily(Kind.U, 1), P("[|0]"))
    assert not member(GroupFamily(Kind.U, 1), P("[0|]"))
    assert member(GroupFamily(Kind.OPLUS, 4), P("[|3,2,1,0]"))


def test_enumerate_examples():
    assert len(enumerate_symbols(GroupFamily(Kind.SP, 2))) == 6
    assert set(enumerate_symbols(GroupFamily(Kind.OPLUS, 1))) == {P("[1|0]"), P("[0|1]")}
    # [0|2,0] reduces to [|1]
    assert set(enumerate_symbols(GroupFamily(Kind.U, 3))) == {P("[1,0|]"), P("[1|1,0]"), P("[|1]")}


@pytest.mark.parametrize("kind, counts", [
    (Kind.SP, [1, 2, 6, 12, 25, 46, 86, 148]),
    (Kind.OPLUS, [1, 2, 5, 10, 22]),
    (Kind.OMINUS, [0, 2, 4, 10]),
    (Kind.U, [1, 1, 2, 3, 5, 7, 11, 15]),
])
def test_counts(kind, counts):
    got = [len(enumerate_symbols(GroupFamily(kind, n))) for n in range(len(counts))]
    assert got == counts


def test_counting_oracle_examples():
    assert counting_oracle(GroupFamily(Kind.SP, 2)) == 6
    assert counting_oracle(GroupFamily(Kind.U, 3)) == 3
    for kind in (Kind.SP, Kind.OPLUS, Kind.OODD, Kind.U):
        assert counting_oracle(GroupFamily(kind, 0)) == 1
    # defect 2 mod 4 costs at least one unit of rank
    assert counting_oracle(GroupFamily(Kind.OMINUS, 0)) == 0


def test_enumerate_unipotent_examples():
    assert len(enumerate_unipotent(GroupFamily(Kind.OODD, 1))) == 4
    assert len(enumerate_unipotent(GroupFamily(Kind.SP, 0))) == 1
    o2 = enumerate_unipotent(WittKind.OMINUS, 0)
    assert {c.symbol for c in o2} == {P("[1,0|]"), P("[|1,0]")}
    assert witt_family(WittKind.OMINUS, 0) == GroupFamily(Kind.OMINUS, 1)


def test_enumeration_is_sorted_and_reduced():
    syms = enumerate_symbols(GroupFamily(Kind.SP, 4))
    assert syms == list(dict.fromkeys(syms))
    assert [str(s) for s in enumerate_symbols(GroupFamily(Kind.U, 3))] == ["[|1]", "[1|1,0]", "[1,0|]"]


def test_partitions_and_bipartitions():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [bipartition_count(n) for n in range(6)] == [1, 2, 5, 10, 20, 36]


def test_parse_family():
    assert parse_family("sp:2") == GroupFamily(Kind.SP, 2)
    assert parse_family(" o-:3 ") == GroupFamily(Kind.OMINUS, 3)
    for bad in ("spx:2", "sp", "sp:-1", "u:a"):
        with pytest.raises(SymbolError):
            parse_family(bad)


def test_family_of():
    assert family_of(P("[2,1,0|2,1]")) == GroupFamily(Kind.SP, 2)
    assert family_of(P("[0|1]"), unitary=True) == GroupFamily(Kind.U, 2)


def test_unipotent_char_validation():
    with pytest.raises(FamilyError):
        UnipotentChar(GroupFamily(Kind.SP, 2), P("[1|]"))
    with pytest.raises(FamilyError):
        UnipotentChar(GroupFamily(Kind.SP, 1), P("[1|]"), True)
    c = UnipotentChar(GroupFamily(Kind.SP, 1), P("[2,0|0]"))
    assert c.symbol == P("[1|]")


def test_max_rank_ceiling(monkeypatch):
    monkeypatch.setenv("THETA_MAX_RANK", "5")
    assert max_rank() == 5
    with pytest.raises(BoundError):
        enumerate_symbols(GroupFamily(Kind.SP, 6))
