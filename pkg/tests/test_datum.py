import json

import pytest

from thetarank import (DatumError, GroupFamily, Kind, OrthoSympDatum, Symbol, SymbolError,
                       UnipotentChar, UnitaryDatum, datum_from_json, datum_to_json, embed_unipotent,
                       steinberg_symbol, theta_rank_char, theta_rank_datum, theta_rank_so,
                       theta_rank_u, trivial_symbol, twist_chi, twist_sgn)

from conftest import P

SP0 = P("[0|]")


@pytest.mark.parametrize("n", range(1, 21))
def test_degree_half_datum(n):
    d = OrthoSympDatum(Kind.SP, n, n, 0, P(f"[{n}|0]"), SP0)
    assert theta_rank_so(d) == 1


def test_unipotent_reduction():
    st = steinberg_symbol(Kind.SP, 3).symbol
    assert theta_rank_so(OrthoSympDatum(Kind.SP, 3, 0, 3, Symbol(), st)) == 6


@pytest.mark.parametrize("kind, n", [(Kind.OPLUS, 1), (Kind.OPLUS, 3), (Kind.OMINUS, 2), (Kind.OMINUS, 4)])
def test_torus_datum(kind, n):
    assert theta_rank_so(OrthoSympDatum(kind, n, 0, 0, Symbol(), Symbol())) == 2 * n


def test_theta_rank_u_examples():
    assert theta_rank_u(UnitaryDatum(5, (), 5)) == 5
    assert theta_rank_u(UnitaryDatum(3, ((3, P("[1|1,0]")),), 0)) == 2
    assert theta_rank_u(UnitaryDatum(5, ((2, P("[0|1]")), (2, P("[1|0]"))), 1)) == 3


def test_twist_sgn():
    d = OrthoSympDatum(Kind.OPLUS, 2, 1, 0, P("[1|0]"), Symbol())
    e = twist_sgn(d)
    assert (e.lambda_minus, e.lambda_plus) == (P("[0|1]"), Symbol())
    o = OrthoSympDatum(Kind.OODD, 1, 0, 1, SP0, P("[1|]"))
    assert twist_sgn(o).sgn_flag and twist_sgn(twist_sgn(o)) == o
    with pytest.raises(DatumError):
        twist_sgn(OrthoSympDatum(Kind.SP, 0, 0, 0, Symbol(), SP0))


def test_twist_chi():
    d = OrthoSympDatum(Kind.OPLUS, 2, 2, 0, P("[2|0]"), Symbol())
    e = twist_chi(d)
    assert (e.n_minus, e.n_plus, e.lambda_plus) == (0, 2, P("[2|0]"))
    lam = P("[2|]")
    o = OrthoSympDatum(Kind.OODD, 2, 0, 2, SP0, lam)
    f = twist_chi(o)
    assert (f.n_minus, f.lambda_minus, f.n_plus) == (2, lam, 0)
    assert theta_rank_so(f) == theta_rank_so(o)


def test_embed_unipotent():
    st = steinberg_symbol(Kind.SP, 2)
    d = embed_unipotent(st)
    assert d.lambda_plus == P("[2,1,0|2,1]")
    assert theta_rank_datum(d) == theta_rank_char(st) == 4
    fam = GroupFamily(Kind.OODD, 2)
    c = UnipotentChar(fam, P("[2,1|2,1,0]"))
    assert embed_unipotent(c).lambda_plus == P("[2,1,0|2,1]")
    for kind in (Kind.SP, Kind.OPLUS, Kind.OMINUS, Kind.OODD, Kind.U):
        c = UnipotentChar(GroupFamily(kind, 3), trivial_symbol(kind, 3))
        assert theta_rank_datum(embed_unipotent(c)) == 0


def test_validation():
    with pytest.raises(DatumError):
        OrthoSympDatum(Kind.SP, 2, 2, 1, P("[2|0]"), P("[1|]"))      # n- + n+ > n
    with pytest.raises(DatumError):
        OrthoSympDatum(Kind.SP, 2, 2, 0, P("[1|0]"), SP0)            # rank mismatch
    with pytest.raises(DatumError):
        OrthoSympDatum(Kind.SP, 1, 0, 1, Symbol(), P("[1|0]"))       # λ+ must be symplectic
    with pytest.raises(DatumError):
        OrthoSympDatum(Kind.OPLUS, 1, 0, 1, Symbol(), P("[1,0|]"))   # O- piece filling O+
    with pytest.raises(DatumError):
        UnitaryDatum(3, ((2, P("[0|1]")),), 0)
    with pytest.raises(DatumError):
        UnitaryDatum(1, ((1, P("[0|]")),), 0)                         # defect 1 is not unitary


def test_json_examples():
    d = datum_from_json('{"family":"sp","n":3,"nMinus":3,"nPlus":0,'
                        '"lambdaMinus":"[3|0]","lambdaPlus":"[|]","sgn":false}')
    assert d.lambda_plus == SP0
    assert theta_rank_datum(d) == 1
    u = datum_from_json('{"family":"u","n":5,"slots":[{"n":2,"lambda":"[0|1]"}],"rest":3}')
    assert theta_rank_datum(u) == 4
    for x in (d, u):
        assert datum_from_json(json.dumps(datum_to_json(x))) == x


def test_json_errors():
    with pytest.raises(SymbolError):
        datum_from_json('{"family":"sq","n":1}')
    with pytest.raises(SymbolError) as info:
        datum_from_json('{"family":"sp","n":1,"nMinus":0,"nPlus":1,"lambdaMinus":"[|]","lambdaPlus":"[1,y|]"}')
    assert info.value.token == "y"
    with pytest.raises(SymbolError):
        datum_from_json('{"family":"sp","n":1,"nMinus":0,"lambdaMinus":"[|]","lambdaPlus":"[1|]"}')
