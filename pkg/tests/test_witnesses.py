import pytest

from thetarank import (FamilyError, GroupFamily, Kind, member, OrthoSympDatum, UnipotentChar, UnitaryDatum,
                       admissible_theta_ranks, four_case_unitary_witness, theta_rank_char,
                       theta_rank_datum, witness_symbol)
from thetarank.witnesses import WITNESS_EXCEPTIONS

from conftest import P


def _theta(w):
    return theta_rank_char(w) if isinstance(w, UnipotentChar) else theta_rank_datum(w)


def test_examples():
    w = witness_symbol(Kind.OMINUS, 3, 2)
    assert w.symbol == P("[2,1|]") and _theta(w) == 2
    w = witness_symbol(Kind.SP, 3, 3)
    assert isinstance(w, OrthoSympDatum) and (w.n_minus, w.n_plus) == (3, 0)
    assert _theta(w) == 3
    w = witness_symbol(Kind.U, 4, 4)
    assert isinstance(w, UnitaryDatum) and not w.slots and _theta(w) == 4


@pytest.mark.parametrize("kind", list(Kind))
def test_every_admissible_rank_up_to_twelve(kind):
    for n in range(13):
        for k in admissible_theta_ranks(kind, n):
            assert _theta(witness_symbol(kind, n, k)) == k


def test_admissible_sets():
    assert admissible_theta_ranks(Kind.SP, 2) == [0, 1, 2, 3, 4]
    assert admissible_theta_ranks(Kind.OPLUS, 2) == [0, 2, 4]
    assert admissible_theta_ranks(Kind.OMINUS, 0) == []
    assert admissible_theta_ranks(Kind.U, 1) == [0]
    assert admissible_theta_ranks(Kind.U, 3) == [0, 1, 2, 3]


def test_inadmissible_rejected():
    for kind, n, k in [(Kind.U, 1, 1), (Kind.OPLUS, 3, 3), (Kind.SP, 2, 5), (Kind.OMINUS, 0, 0)]:
        with pytest.raises(FamilyError):
            witness_symbol(kind, n, k)


def test_four_case_unitary_construction_even_dimension():
    # right for even n; for odd n it misses the family
    for n in range(2, 13, 2):
        for k in range(n):
            s = four_case_unitary_witness(n, k)
            assert s is not None
            assert theta_rank_char(UnipotentChar(GroupFamily(Kind.U, n), s)) == k
    assert any(four_case_unitary_witness(n, k) is None or not member(GroupFamily(Kind.U, n),
                                                                 four_case_unitary_witness(n, k))
               for n in (3, 5, 7) for k in range(n))


def test_exception_is_documented():
    assert any("O+_2(3)" in text for text in WITNESS_EXCEPTIONS)
