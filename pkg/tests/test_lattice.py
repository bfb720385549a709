import pytest

from blocktrans.errors import ResourceLimitError, SearchBudgetExceeded
from blocktrans.lattice import (ElementTable, all_subgroups, overgroups_of,
                                random_subgroup_search, sylow_cyclic_subgroup)
from blocktrans.perms import Permutation, PermGroup


def test_subgroup_counts_small_symmetric():
    # counts match the classical subgroup numbers
    assert all_subgroups(PermGroup.symmetric(3)).count() == 6
    assert all_subgroups(PermGroup.symmetric(4)).count() == 30
    assert all_subgroups(PermGroup.symmetric(5)).count() == 156
    assert all_subgroups(PermGroup.alternating(5)).count() == 59


def test_subgroup_count_matches_two_generated_closure():
    from blocktrans.perms import closure_tuples, mul, identity_tuple
    g = PermGroup.symmetric(4)
    els = sorted(g.elements())

    def closure(gens):
        seen = {identity_tuple(4)}
        queue = list(seen)
        while queue:
            c = queue.pop()
            for x in gens:
                y = mul(c, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    subs = {closure([a, b]) for a in els for b in els}
    lat = all_subgroups(g)
    assert set(lat.all_sets()) == \
        {frozenset(lat.table.index[e] for e in s) for s in subs}


def test_class_lengths_consistent():
    lat = all_subgroups(PermGroup.alternating(6))
    assert lat.count() == 501
    for cls in lat.classes:
        assert lat.table.group.order() % (cls.order * cls.length) == 0


def test_perfect_subgroups_found():
    # A5 inside A6 in both actions, plus A6 itself
    lat = all_subgroups(PermGroup.alternating(6))
    perfect_orders = {cls.order for cls in lat.classes
                      if lat.table.subgroup(cls.rep).is_perfect()}
    assert perfect_orders == {60, 360}


def test_element_table_bound():
    with pytest.raises(ResourceLimitError):
        ElementTable(PermGroup.symmetric(8), limit=6000)


def test_overgroups():
    s5 = PermGroup.symmetric(5)
    h = PermGroup.from_generators(
        5, [Permutation.cycle(5, (0, 1, 2, 3, 4))])
    names = sorted(k.order() for k in overgroups_of(s5, h, max_index=30))
    assert names == [5, 10, 20, 60, 120]   # C5 < D10 < F20 < A5 < S5


def test_random_subgroup_search_deterministic():
    a7 = PermGroup.alternating(7)
    s1 = random_subgroup_search(a7, 168, seed=4)
    s2 = random_subgroup_search(a7, 168, seed=4)
    assert s1.gen_tuples == s2.gen_tuples
    assert s1.order() == 168
    with pytest.raises(SearchBudgetExceeded):
        random_subgroup_search(a7, 2519, seed=0, tries=40)


def test_sylow_cyclic_subgroup():
    m11 = __import__("blocktrans.named", fromlist=["mathieu"]).mathieu("M11")
    p11 = sylow_cyclic_subgroup(m11, 11)
    assert p11.order() == 11
