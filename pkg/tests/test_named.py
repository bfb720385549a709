import pytest

from blocktrans.errors import ValidationError
from blocktrans.named import (build_action, mathieu, parse_gens_file,
                              format_gens_file)


def test_mathieu_loads_with_validation():
    for name, order in (("M11", 7920), ("M12", 95040), ("M22", 443520),
                        ("M22:2", 887040), ("M23", 10200960),
                        ("M24", 244823040)):
        g = mathieu(name)
        assert g.order() == order


def test_mathieu_transitivity():
    assert mathieu("M11").transitivity_degree() == 4
    assert mathieu("M12").transitivity_degree() == 5
    assert mathieu("M24").transitivity_degree() == 5


def test_m12_point_stabilizer_is_m11():
    m12 = mathieu("M12")
    st = m12.stabilizer(0)
    assert st.order() == 7920


def test_gens_file_round_trip():
    text = format_gens_file("X", 3, 6, 1, [(1, 2, 0), (1, 0, 2)])
    name, deg, order, trans, gens = parse_gens_file(text)
    assert (name, deg, order, trans) == ("X", 3, 6, 1)
    assert gens == [(1, 2, 0), (1, 0, 2)]


def test_derived_actions():
    for name, degree, order in (("M11@12", 12, 7920),
                                ("PSL2(11)@11", 11, 660),
                                ("Alt(7)@15", 15, 2520),
                                ("PGammaL2(8)@28", 28, 1512),
                                ("M10", 10, 720)):
        na = build_action(name)
        assert na.degree == degree
        assert na.group.order() == order
        assert na.group.is_transitive()


def test_projective_actions_by_name():
    na = build_action("PSL3(5)")
    assert na.group.order() == 372000
    assert na.projective is not None
    na = build_action("PGammaL3(4)")
    assert na.group.order() == 120960


def test_unknown_name():
    with pytest.raises(ValidationError):
        build_action("E8(11)")
