#!/usr/bin/env python3
"""Regenerate the bundled permutation generator files.

The Mathieu groups are derived from PSL2(p) plus a piecewise power map,
found by a deterministic scan and certified by exact order and transitivity
degree; the larger groups then come from stabilizers.  Output is written to
src/blocktrans/data/.  One-time maintenance tool; the package never runs it.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blocktrans.errors import ValidationError
from blocktrans.named import format_gens_file
from blocktrans.perms import PermGroup, Permutation, build_chain, mul, perm_order

DATA = Path(__file__).resolve().parent.parent / "src" / "blocktrans" / "data"

ELEMENT_ORDERS = {
    "M12": {1, 2, 3, 4, 5, 6, 8, 10, 11},
    "M24": {1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15, 21, 23},
}


def psl2_line_gens(p):
    """x+1, multiplication by a square generator, -1/x on P_1(p);
    infinity is the last point."""
    inf = p

    def perm(f):
        return tuple(f(x) for x in range(p + 1))

    add1 = perm(lambda x: inf if x == inf else (x + 1) % p)
    g0 = min(g for g in range(2, p)
             if len({pow(g, k, p) for k in range(p - 1)}) == p - 1)
    sq = pow(g0, 2, p)
    mulsq = perm(lambda x: inf if x == inf else (x * sq) % p)

    def neginv(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, -1, p)) % p

    return [add1, mulsq, perm(neginv)], inf


def piecewise_power_extension(p, target, order_set):
    """First (e1, e2, u1, u2) whose piecewise power map extends PSL2(p) to a
    group of exactly the target order."""
    gens, inf = psl2_line_gens(p)
    qr = {pow(i, 2, p) for i in range(1, p)}
    es = [3] + [e for e in range(1, p - 1, 2) if e != 3]
    for e1 in es:
        for e2 in es:
            for u1 in range(1, p):
                for u2 in range(1, p):
                    img = [0] * (p + 1)
                    img[inf] = inf
                    seen = {inf, 0}
                    ok = True
                    for x in range(1, p):
                        y = ((u1 * pow(x, e1, p)) % p if x in qr
                             else (u2 * pow(x, e2, p)) % p)
                        img[x] = y
                        if y in seen:
                            ok = False
                            break
                        seen.add(y)
                    if not ok:
                        continue
                    d = tuple(img)
                    if perm_order(d) not in order_set:
                        continue
                    probes = (mul(d, gens[0]), mul(d, gens[2]),
                              mul(d, gens[1]), mul(mul(d, gens[0]), gens[2]),
                              mul(mul(d, gens[0]), gens[0]))
                    if any(perm_order(w) not in order_set for w in probes):
                        continue
                    try:
                        ch = build_chain(p + 1, gens + [d],
                                         target_order=target, stall_rounds=40)
                    except ValidationError:
                        continue
                    if ch.order() == target:
                        return gens + [d]
    raise RuntimeError(f"no piecewise extension found for p={p}")


def small_generating_set(group, target_order, max_gens=3, seed=11):
    """A few random elements generating the whole group."""
    from random import Random
    rng = Random(seed)
    for tries in range(200):
        cand = [group.random_element(rng).images for _ in range(2)]
        if PermGroup(group.degree, cand, order_hint=target_order).order() == target_order:
            return cand
        cand.append(group.random_element(rng).images)
        if PermGroup(group.degree, cand, order_hint=target_order).order() == target_order:
            return cand
    raise RuntimeError("no small generating set found")


def restrict(gens, moved):
    moved = sorted(moved)
    index = {x: i for i, x in enumerate(moved)}
    return [tuple(index[g[x]] for x in moved) for g in gens]


def write(name, fname, degree, order, trans, gens):
    g = PermGroup.from_generators(degree, gens, order_hint=order)
    assert g.order() == order, (name, g.order())
    assert g.transitivity_degree() == trans, name
    (DATA / fname).write_text(
        format_gens_file(name, degree, order, trans, gens))
    print(f"{fname}: degree {degree}, order {order}, {len(gens)} generators")


def main():
    # M24 and M12 from the piecewise scans
    m24_gens = piecewise_power_extension(23, 244823040, ELEMENT_ORDERS["M24"])
    write("M24", "m24.gens", 24, 244823040, 5, m24_gens)
    m12_gens = piecewise_power_extension(11, 95040, ELEMENT_ORDERS["M12"])
    write("M12", "m12.gens", 12, 95040, 5, m12_gens)

    m24 = PermGroup.from_generators(24, m24_gens, order_hint=244823040)
    # M23 = stabilizer of the last point, restricted to the moved points
    m23 = m24.stabilizer(23)
    m23_small = small_generating_set(m23, 10200960)
    write("M23", "m23.gens", 23, 10200960, 4, restrict(m23_small, range(23)))

    m22 = m23.stabilizer(22)
    m22_small = small_generating_set(m22, 443520)
    write("M22", "m22.gens", 22, 443520, 3, restrict(m22_small, range(22)))

    # M22:2 = setwise stabilizer of {22, 23} in M24
    swap = None
    ch = m24.chain()
    lv = ch.levels[0]
    # find t in M24 with t(22) = 23 and t(23) = 22
    u1 = lv.u(23, 24) if lv.point != 23 else None
    from random import Random
    rng = Random(2)
    while swap is None:
        t = m24.random_element(rng).images
        if t[22] == 23 and t[23] == 22:
            swap = t
    m22x2_gens = m22_small + [swap]
    write("M22:2", "m22x2.gens", 22, 887040, 3,
          restrict(m22x2_gens, range(22)))

    # M11: classical pair on 11 points
    a = Permutation.cycle(11, tuple(range(11))).images
    b = Permutation.cycle(11, (2, 6, 10, 7), (3, 9, 4, 5)).images
    write("M11", "m11.gens", 11, 7920, 4, [a, b])
    # cross-check: the M12 point stabilizer has the same order
    m12 = PermGroup.from_generators(12, m12_gens, order_hint=95040)
    assert m12.stabilizer(0).order() == 7920


if __name__ == "__main__":
    main()
