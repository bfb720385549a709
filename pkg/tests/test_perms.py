import random

import pytest

from blocktrans.errors import ResourceLimitError, ValidationError
from blocktrans.perms import (Permutation, PermGroup, build_chain,
                              closure_tuples, closure_size_bounded,
                              coset_action, product_covers)


def m11():
    a = Permutation.cycle(11, tuple(range(11)))
    b = Permutation.cycle(11, (2, 6, 10, 7), (3, 9, 4, 5))
    return PermGroup.from_generators(11, [a, b], order_hint=7920)


def test_permutation_validation():
    with pytest.raises(ValidationError):
        Permutation([0, 0, 1])
    p = Permutation.cycle(5, (0, 1, 2))
    assert p.order() == 3
    assert (p * p.inverse()).is_identity()
    assert (p ** -1) == p.inverse()
    assert p ** 3 == Permutation.identity(5)


def test_from_generators_examples():
    g = PermGroup.from_generators(3, [Permutation.cycle(3, (0, 1, 2))])
    assert g.order() == 3
    assert PermGroup.from_generators(4, []).order() == 1
    assert m11().order() == 7920


def test_m11_is_4_transitive():
    assert m11().transitivity_degree() == 4


def test_membership():
    a4 = PermGroup.alternating(4)
    assert not a4.is_member(Permutation.cycle(4, (0, 1)))
    assert a4.is_member(Permutation.cycle(4, (0, 1, 2)))
    g = m11()
    rng = random.Random(3)
    for _ in range(5):
        assert g.is_member(g.random_element(rng))


def test_orbit_examples():
    g = m11()
    assert g.orbit(0) == set(range(11))
    assert PermGroup.trivial(5).orbit(2) == {2}
    h = PermGroup.from_generators(4, [Permutation.cycle(4, (0, 1))])
    assert h.orbit(3) == {3}


def test_stabilizer_examples():
    g = m11()
    st = g.stabilizer(0)
    assert st.order() == 720
    s3 = PermGroup.symmetric(3)
    assert s3.stabilizer(0).order() == 2


def test_orbit_stabilizer_property():
    for g in (PermGroup.symmetric(6), PermGroup.alternating(7), m11()):
        for x in (0, g.degree - 1):
            assert len(g.orbit(x)) * g.stabilizer(x).order() == g.order()


def test_chain_rebase_gives_same_order():
    g = m11()
    o = g.order()
    for base in ((3, 7), (10, 0, 5), ()):
        ch = build_chain(11, g.gen_tuples, base_hint=base)
        assert ch.order() == o


def test_random_subgroup_lagrange():
    g = PermGroup.symmetric(7)
    rng = random.Random(11)
    for _ in range(8):
        gens = [g.random_element(rng) for _ in range(rng.randint(1, 3))]
        h = PermGroup.from_generators(7, gens)
        assert g.order() % h.order() == 0


def test_coset_action_basic():
    s5 = PermGroup.symmetric(5)
    s4 = s5.stabilizer(0)
    cs = coset_action(s5, s4)
    assert cs.index == 5
    assert cs.action.order() == 120
    assert cs.action.stabilizer(0).order() == 24
    # whole group: one point
    cs1 = coset_action(s5, s5)
    assert cs1.index == 1


def test_coset_action_m11_over_a6():
    g = m11()
    a6 = g.stabilizer(0).derived_subgroup()
    assert a6.order() == 360
    cs = coset_action(g, a6)
    assert cs.index == 22
    # faithful: the core of A6 in M11 is trivial
    assert cs.action.order() == g.order()


def test_coset_action_index_bound():
    g = PermGroup.symmetric(7)
    with pytest.raises(ResourceLimitError):
        coset_action(g, PermGroup.trivial(7), max_index=100)


def test_coset_action_rejects_non_subgroup():
    g = PermGroup.alternating(5)
    h = PermGroup.from_generators(5, [Permutation.cycle(5, (0, 1))])
    with pytest.raises(ValidationError):
        coset_action(g, h)


def test_product_covers_examples():
    a4 = PermGroup.alternating(4)
    s = Permutation.cycle(4, (0, 1))
    h = PermGroup.from_generators(4, [Permutation.cycle(4, (0, 1, 2))])
    assert product_covers(a4, s, h) is False
    assert product_covers(a4, Permutation.identity(4), a4) is True


def test_normal_closure_and_derived():
    s4 = PermGroup.symmetric(4)
    d = s4.derived_subgroup()
    assert d.order() == 12
    dd = d.derived_subgroup()
    assert dd.order() == 4
    assert s4.abelianization_order() == 2
    assert PermGroup.alternating(5).is_perfect()


def test_closure_bytes_matches_tuples():
    g = PermGroup.alternating(5)
    s = closure_tuples(5, g.gen_tuples)
    assert len(s) == 60
    assert closure_size_bounded(5, g.gen_tuples) == 60
    assert closure_size_bounded(5, g.gen_tuples, limit=59) is None


def test_with_base_prefix():
    g = m11().with_base((4, 9))
    assert g.chain().base[:2] == [4, 9]
    assert g.order() == 7920
