from math import gcd

import pytest

from blocktrans.arith import phi_k
from blocktrans.errors import ResourceLimitError, ValidationError
from blocktrans.metacyclic import (CoverEnumeration, MetacyclicSpec,
                                   check_index2_cyclic, derive_d,
                                   enumerate_covers, enumerate_covers_sets,
                                   generic_all_subgroups, realize,
                                   subgroup_elements, subgroup_params_of_index)

PGL28_SPEC = MetacyclicSpec(N=7, m=3, a=2, rprime=0, k=-2, l=0)
PSL264_SPEC = MetacyclicSpec(N=63, m=3, a=4, rprime=0, k=-2, l=0)


def test_spec_validation():
    with pytest.raises(ValidationError):
        MetacyclicSpec(N=8, m=2, a=2)          # a not a unit
    with pytest.raises(ValidationError):
        MetacyclicSpec(N=7, m=2, a=3)          # a^m != 1
    with pytest.raises(ValidationError):
        MetacyclicSpec(N=8, m=2, a=3, k=1)     # (k+1)^2 != 1
    MetacyclicSpec(N=1, m=5, a=0)              # trivial x-part is fine


def test_realize_relations():
    r = realize(PGL28_SPEC)
    assert r.group.order() == 42               # <= 2 N m, s acts nontrivially
    assert r.x.order() == 7 and r.y.order() == 3 and r.s.order() == 2
    r1 = realize(MetacyclicSpec(N=1, m=5, a=0))
    assert r1.group.order() == 5
    r63 = realize(PSL264_SPEC)
    assert (r63.s * r63.x * r63.s) == r63.x ** (PSL264_SPEC.k + 1)


def test_enumerate_covers_examples():
    ce = enumerate_covers(PSL264_SPEC, 3)
    assert (ce.subgroup_count, ce.class_count) == (2, 2)
    assert phi_k(-2, 3) == 2 and phi_k(-2, gcd(3, 3)) == 2
    assert enumerate_covers(PGL28_SPEC, 7).subgroup_count == 0
    ce1 = enumerate_covers(PSL264_SPEC, 1)
    assert (ce1.subgroup_count, ce1.class_count) == (1, 1)


def test_cover_witness_invariants():
    # every witness has core <x^n, y^n> of index n^2
    spec = PSL264_SPEC
    for n in (1, 3):
        ce = enumerate_covers(spec, n)
        for wit in ce.witnesses:
            assert wit.core_order == spec.order // (n * n)
    # the n = 3 witness core really is <x^3, y^3>
    core = subgroup_elements(spec, 3, 1, 0) & \
        subgroup_elements(spec, 3, 1, 1)
    ce = enumerate_covers(spec, 3)
    h = subgroup_elements(spec, ce.witnesses[0].u, ce.witnesses[0].w,
                          ce.witnesses[0].v)
    from blocktrans.metacyclic import sigma_element
    sh = {sigma_element(spec, e) for e in h}
    expected_core = subgroup_elements(spec, 3, 3, 0)   # <x^3, y^3>
    assert h & sh == expected_core


def test_arithmetic_matches_set_enumeration():
    specs = [PSL264_SPEC, PGL28_SPEC,
             MetacyclicSpec(N=12, m=4, a=5, k=-2, l=0),
             MetacyclicSpec(N=16, m=2, a=7, k=6, l=8),
             MetacyclicSpec(N=12, m=4, a=5, rprime=6, k=-2, l=0)]
    for spec in specs:
        for n in range(1, 13):
            if spec.order % n:
                continue
            a = enumerate_covers(spec, n)
            b = enumerate_covers_sets(spec, n)
            assert (a.subgroup_count, a.class_count) == \
                (b.subgroup_count, b.class_count), (spec, n)


def test_parameterization_matches_generic_enumeration():
    specs = [MetacyclicSpec(N=12, m=4, a=5, k=-2, l=0),
             MetacyclicSpec(N=9, m=3, a=4, k=-2, l=0),
             MetacyclicSpec(N=8, m=2, a=3, k=2, l=4),
             MetacyclicSpec(N=20, m=4, a=3, k=-2, l=0),
             MetacyclicSpec(N=15, m=4, a=2, k=13, l=0)]
    for spec in specs:
        gen_subs = generic_all_subgroups(spec)
        param_subs = set()
        for n in range(1, spec.order + 1):
            if spec.order % n == 0:
                for (u, w, v) in subgroup_params_of_index(spec, n):
                    param_subs.add(frozenset(subgroup_elements(spec, u, w, v)))
        assert gen_subs == param_subs, spec


def test_formula_agreement_sample():
    # a small slice of the full sweep: counts match the totient formulas and
    # nonemptiness matches the divisor criterion
    for N in range(1, 31):
        for m in (1, 2, 3, 4):
            units = [a for a in range(1, max(N, 2)) if gcd(a, N) == 1
                     and pow(a, m, N) == 1] or [0]
            for a in units:
                for k in range(N if N > 1 else 1):
                    if N > 1 and (pow(k + 1, 2, N) - 1) % N:
                        continue
                    spec = None
                    for l in range(N if N > 1 else 1):
                        try:
                            spec = MetacyclicSpec(N, m, a, 0, k, l)
                        except ValidationError:
                            continue
                        _, d = derive_d(spec)
                        for n in (1, 2, 3, 4, 6):
                            if spec.order % n:
                                continue
                            ce = enumerate_covers(spec, n)
                            assert (ce.subgroup_count > 0) == (d % n == 0)
                            if ce.subgroup_count:
                                assert ce.subgroup_count == phi_k(spec.k, n)
                                assert ce.class_count == phi_k(
                                    spec.k, gcd(spec.a - 1, n))


def test_enumerate_covers_bound():
    big = MetacyclicSpec(N=119, m=100, a=1, k=0, l=0)
    with pytest.raises(ResourceLimitError):
        enumerate_covers(big, 7)


def test_check_index2_cyclic_cases():
    # A = C8 with trivial action: coverage exists and A is cyclic
    res = check_index2_cyclic((8,), 8, [(1,)])
    assert res.coverage_found and res.implication_holds
    # A = C4 x C4 under the shear action: no coverage at all
    res = check_index2_cyclic((4, 4), 16, [(1, 1), (0, 1)])
    assert res.vacuous and res.implication_holds
    # A = C2^3: coverage never holds
    res = check_index2_cyclic((2, 2, 2), 8, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])
    assert res.vacuous
