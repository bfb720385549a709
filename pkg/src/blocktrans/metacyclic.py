"""Metacyclic groups <x, y> with an involutive twist s, and exhaustive
enumeration of subgroups H with G = sHsH.

The group is G = <x, y | x^N = 1, y x y^-1 = x^a, y^m = x^rprime>, with s
acting by s x s = x^(k+1), s y s = x^l y.  Every subgroup of G has the form
<x^u, x^v y^w> with u | N, w | m, 0 <= v < u (subgroups of metacyclic groups
are metacyclic with cyclic intersection against <x>), which makes the
enumeration exact modular arithmetic; element-set cross checks live alongside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import factorize, is_full_period, phi_k
from .errors import ResourceLimitError, ValidationError
from .perms import PermGroup, Permutation

BRUTE_ORDER_BOUND = 10_000


@dataclass(frozen=True)
class MetacyclicSpec:
    """Presentation data; k and l are the s-twists on x and y."""
    N: int
    m: int
    a: int
    rprime: int = 0
    k: int = 0
    l: int = 0

    def __post_init__(self):
        N, m = self.N, self.m
        if N < 1 or m < 1:
            raise ValidationError("N and m must be positive")
        a = self.a % N
        object.__setattr__(self, "a", a if N > 1 else 0)
        object.__setattr__(self, "rprime", self.rprime % N)
        object.__setattr__(self, "k", self.k % N)
        object.__setattr__(self, "l", self.l % N)
        if N > 1:
            if gcd(self.a, N) != 1:
                raise ValidationError("a must be a unit modulo N")
            if pow(self.a, m, N) != 1:
                raise ValidationError("a^m must be 1 modulo N")
            if (self.a * self.rprime - self.rprime) % N:
                raise ValidationError("a * rprime must equal rprime modulo N")
            if (pow(self.k + 1, 2, N) - 1) % N:
                raise ValidationError("(k+1)^2 must be 1 modulo N (s^2 = 1)")
            if (self.l * (self.k + 2)) % N:
                raise ValidationError("l*(k+2) must be 0 modulo N (s^2 = 1)")
            if (self.l * self.alpha(self.a, m) - self.rprime * self.k) % N:
                raise ValidationError(
                    "l*alpha_a(m) must equal rprime*k modulo N (s respects y^m)")

    @property
    def order(self):
        return self.N * self.m

    def alpha(self, b, j):
        """sum of b^t for t < j, modulo N."""
        s = 0
        x = 1
        for _ in range(j):
            s = (s + x) % self.N
            x = (x * b) % self.N
        return s

    def sigma_params(self, u, w, v):
        """(u, w, v) parameters of the s-image of <x^u, x^v y^w>."""
        vv = ((self.k + 1) * v + self.l * self.alpha(self.a, w)) % u if u > 1 else 0
        return u, w, vv


def derive_d(spec: MetacyclicSpec):
    """(d0, d): the candidate-index bound before and after the full-period
    restriction; the indices n with covering subgroups are the divisors of d."""
    N, m = spec.N, spec.m
    k0 = gcd(spec.k, spec.l)
    g = gcd(m, gcd(spec.rprime, N) if spec.rprime else N)
    d0 = g
    while True:
        t = gcd(d0, k0)
        if t <= 1:
            break
        d0 //= t
    d = 1
    for p, e in factorize(d0) if d0 > 1 else []:
        if p == 2:
            if spec.a % 4 == 1:
                d *= 2 ** e
            elif spec.a % 4 == 3:
                d *= 2
        else:
            if spec.a % p == 1:
                d *= p ** e
    return d0, d


# ---------------------------------------------------------------------------
# subgroup parameterization

def subgroup_params_of_index(spec: MetacyclicSpec, n):
    """All (u, w, v) with <x^u, x^v y^w> of index exactly n."""
    N, m = spec.N, spec.m
    if n < 1 or (N * m) % n:
        return []
    out = []
    for u in range(1, n + 1):
        if n % u or N % u:
            continue
        w = n // u
        if m % w:
            continue
        # (x^v y^w)^(m/w) = x^(v*S + rprime') with S = alpha_{a^w}(m/w);
        # the x-part is exactly <x^u> iff that exponent vanishes mod u
        b = pow(spec.a, w, N) if N > 1 else 0
        S = spec.alpha(b, m // w) % N
        # rprime contribution: y^m = x^rprime
        target = (-spec.rprime) % u if u > 1 else 0
        if u == 1:
            out.append((1, w, 0))
            continue
        g0 = gcd(S % u, u)
        if target % g0:
            continue
        # solve v * S = target (mod u): g0 solutions
        uu = u // g0
        Sg = (S % u) // g0
        tg = target // g0
        v0 = (tg * pow(Sg, -1, uu)) % uu
        for t in range(g0):
            out.append((u, w, v0 + t * uu))
    return out


def subgroup_elements(spec: MetacyclicSpec, u, w, v):
    """Element set of <x^u, x^v y^w> as (i, j) pairs."""
    N, m = spec.N, spec.m
    b = pow(spec.a, w, N) if N > 1 else 0
    out = set()
    exp = 0
    for j in range(m // w):
        base = (v * spec.alpha(b, j)) % N if N > 1 else 0
        for t in range(N // u):
            out.add(((base + u * t) % N, (w * j) % m))
    return out


def sigma_element(spec: MetacyclicSpec, el):
    """Image of x^i y^j under the s-twist."""
    i, j = el
    N = spec.N
    if N == 1:
        return el
    return (((spec.k + 1) * i + spec.l * spec.alpha(spec.a, j)) % N, j)


@dataclass
class CoverWitness:
    u: int
    w: int
    v: int
    core_order: int   # |H ∩ sHs|


@dataclass
class CoverEnumeration:
    n: int
    subgroup_count: int
    class_count: int
    witnesses: list = field(default_factory=list)


def enumerate_covers(spec: MetacyclicSpec, n, brute_bound=BRUTE_ORDER_BOUND):
    """All subgroups H of index n with G = sHsH, with conjugacy class count.

    Exhausts the complete (u, w, v) parameterization of index-n subgroups and
    evaluates |H ∩ sHs| arithmetically layer by layer.
    """
    if spec.order > brute_bound:
        raise ResourceLimitError(
            f"realized order {spec.order} exceeds bound {brute_bound}")
    N, m = spec.N, spec.m
    witnesses = []
    for (u, w, v) in subgroup_params_of_index(spec, n):
        h_order = (N // u) * (m // w)
        if (h_order * h_order) % (N * m):
            continue
        req = h_order * h_order // (N * m)
        if req % (N // u):
            continue
        j_req = req // (N // u)
        _, _, vv = spec.sigma_params(u, w, v)
        b = pow(spec.a, w, N) if N > 1 else 0
        if u == 1:
            j_count = m // w
        else:
            diff = (v - vv) % u
            j_count = sum(1 for j in range(m // w)
                          if (diff * spec.alpha(b, j)) % u == 0)
        if j_count == j_req:
            witnesses.append(CoverWitness(u, w, v,
                                          core_order=(N // u) * j_count))
    # conjugacy classes: x acts by v -> v + (1 - a^w), y by v -> a*v (mod u)
    classes = 0
    by_uw = {}
    for wit in witnesses:
        by_uw.setdefault((wit.u, wit.w), set()).add(wit.v)
    for (u, w), vs in by_uw.items():
        if u == 1:
            classes += 1
            continue
        shift = (1 - pow(spec.a, w, spec.N)) % u
        seen = set()
        for v in vs:
            if v in seen:
                continue
            classes += 1
            orbit = {v}
            queue = [v]
            while queue:
                t = queue.pop()
                for img in ((t + shift) % u, (spec.a * t) % u):
                    if img not in orbit:
                        if img not in vs:
                            raise ValidationError(
                                "conjugation left the witness set")
                        orbit.add(img)
                        queue.append(img)
            seen |= orbit
    return CoverEnumeration(n=n, subgroup_count=len(witnesses),
                            class_count=classes, witnesses=witnesses)


def enumerate_covers_sets(spec: MetacyclicSpec, n, brute_bound=BRUTE_ORDER_BOUND):
    """Element-set reimplementation of enumerate_covers (cross-check oracle)."""
    if spec.order > brute_bound:
        raise ResourceLimitError("order exceeds bound")
    N, m = spec.N, spec.m
    total = N * m
    witnesses = []
    subgroups = []
    for (u, w, v) in subgroup_params_of_index(spec, n):
        H = subgroup_elements(spec, u, w, v)
        assert len(H) * n == total
        sH = {sigma_element(spec, el) for el in H}
        inter = len(H & sH)
        if len(H) ** 2 == total * inter:
            witnesses.append((u, w, v))
            subgroups.append(frozenset(H))
    # conjugacy classes via explicit conjugation on element sets
    def conj_set(H, g):
        gi, gj = g
        out = set()
        for (i, j) in H:
            # g * h * g^-1 computed in the (i, j) normal form
            out.add(_conj_pair(spec, (i, j), g))
        return frozenset(out)

    classes = 0
    left = set(subgroups)
    gens = [(1 % N, 0), (0, 1 % m)]
    while left:
        H = left.pop()
        classes += 1
        queue = [H]
        seen = {H}
        while queue:
            cur = queue.pop()
            for g in gens:
                img = conj_set(cur, g)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
                    left.discard(img)
    return CoverEnumeration(n=n, subgroup_count=len(witnesses),
                            class_count=classes,
                            witnesses=[CoverWitness(u, w, v, 0)
                                       for (u, w, v) in witnesses])


def _mul_pair(spec, e1, e2):
    N, m, a, rp = spec.N, spec.m, spec.a, spec.rprime
    i1, j1 = e1
    i2, j2 = e2
    i = (i1 + pow(a, j1, N) * i2) % N if N > 1 else 0
    j = j1 + j2
    if j >= m:
        j -= m
        i = (i + pow(a, j, N) * rp) % N if N > 1 else 0
    return (i, j)


def _inv_pair(spec, e):
    if e == (0, 0):
        return e
    prev = e
    cur = _mul_pair(spec, e, e)
    while cur != (0, 0):
        prev = cur
        cur = _mul_pair(spec, cur, e)
    return prev


def _conj_pair(spec, h, g):
    """g * h * g^-1 in the (i, j) normal form."""
    return _mul_pair(spec, _mul_pair(spec, g, h), _inv_pair(spec, g))


# ---------------------------------------------------------------------------
# permutation realization

class RealizedMetacyclic:
    """Faithful permutation realization of <x, y, s> on the elements of G."""

    def __init__(self, spec, group, x, y, s):
        self.spec = spec
        self.group = group
        self.x = x
        self.y = y
        self.s = s


def realize(spec: MetacyclicSpec, seed=0):
    """Permutation realization on the N*m elements of G, with s adjoined as
    the twist automorphism; all defining relations are re-verified."""
    N, m = spec.N, spec.m
    deg = N * m

    def idx(el):
        return el[0] * m + el[1]

    elements = [(i, j) for i in range(N) for j in range(m)]
    x_img = [0] * deg
    y_img = [0] * deg
    s_img = [0] * deg
    for el in elements:
        x_img[idx(el)] = idx(_mul_pair(spec, el, (1 % N, 0)))
        y_img[idx(el)] = idx(_mul_pair(spec, el, (0, 1 % m)))
        s_img[idx(el)] = idx(sigma_element(spec, el))
    x = Permutation(x_img)
    y = Permutation(y_img)
    s = Permutation(s_img)
    # relation checks by direct multiplication
    if not (x ** N).is_identity():
        raise ValidationError("x^N != 1 in the realization")
    if (y * x * y.inverse()) != x ** spec.a and N > 1:
        raise ValidationError("y x y^-1 != x^a in the realization")
    if (y ** m) != x ** spec.rprime:
        raise ValidationError("y^m != x^rprime in the realization")
    if not (s * s).is_identity():
        raise ValidationError("s^2 != 1 in the realization")
    if (s * x * s) != x ** (spec.k + 1) and N > 1:
        raise ValidationError("s x s != x^(k+1) in the realization")
    if (s * y * s) != (x ** spec.l) * y and N > 1:
        raise ValidationError("s y s != x^l y in the realization")
    group = PermGroup(deg, [x, y, s], seed=seed)
    return RealizedMetacyclic(spec, group, x, y, s)


# ---------------------------------------------------------------------------
# generic independent subgroup enumeration (cross-check, small orders)

def generic_all_subgroups(spec: MetacyclicSpec, order_bound=400):
    """All subgroups as frozensets of (i, j), via closures of element pairs.

    Valid because every subgroup of a metacyclic group is 2-generated; meant
    as the independent oracle for orders <= order_bound.
    """
    if spec.order > order_bound:
        raise ResourceLimitError("generic enumeration bound exceeded")
    N, m = spec.N, spec.m
    elements = [(i, j) for i in range(N) for j in range(m)]

    def closure(gens):
        seen = {(0, 0)}
        queue = [(0, 0)]
        while queue:
            cur = queue.pop()
            for g in gens:
                nxt = _mul_pair(spec, cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return frozenset(seen)

    subs = {frozenset({(0, 0)})}
    for g1 in elements:
        for g2 in elements:
            subs.add(closure([g1, g2]))
    return subs


# ---------------------------------------------------------------------------
# abelian-by-cyclic coverage checks

@dataclass
class Index2CyclicResult:
    coverage_found: bool
    implication_holds: bool
    vacuous: bool
    witnesses: list


def _invariant_factors(orders):
    primes = {}
    for d in orders:
        for p, e in factorize(d):
            primes.setdefault(p, []).append(e)
    k = max((len(v) for v in primes.values()), default=0)
    factors = [1] * k
    for p, exps in primes.items():
        exps = sorted(exps, reverse=True)
        for i, e in enumerate(exps):
            factors[i] *= p ** e
    return sorted(factors)


def has_cyclic_index2(orders):
    f = _invariant_factors(orders)
    return len(f) <= 1 or (len(f) == 2 and min(f) <= 2)


def check_index2_cyclic(abelian_orders, h_order, action, brute_bound=BRUTE_ORDER_BOUND):
    """For G = A x| <h> with A abelian, sweep all involutive twists s that
    normalize A and all complements H (cyclic, H ∩ A = 1); whenever G = sHsH
    holds, assert A has a cyclic subgroup of index <= 2.

    `action` gives the images of the A-generators under conjugation by h,
    as coefficient vectors.  Returns whether the implication was checked
    nonvacuously.
    """
    orders = tuple(abelian_orders)
    kk = len(orders)
    size_a = 1
    for d in orders:
        size_a *= d
    total = size_a * h_order
    if total > brute_bound:
        raise ResourceLimitError("abelian-by-cyclic sweep exceeds bound")

    def avec_add(u, v):
        return tuple((a + b) % d for a, b, d in zip(u, v, orders))

    def apply_mat(Mrows, u):
        out = [0] * kk
        for j, coeff in enumerate(u):
            if coeff:
                for i in range(kk):
                    out[i] = (out[i] + coeff * Mrows[j][i]) % orders[i]
        return tuple(out)

    X = tuple(tuple(r) for r in action)
    # powers of the action matrix
    Xpows = [tuple(tuple(1 if i == j else 0 for i in range(kk))
                   for j in range(kk))]
    for _ in range(h_order):
        Xpows.append(tuple(apply_mat(X, row) for row in Xpows[-1]))
    if Xpows[h_order] != Xpows[0]:
        raise ValidationError("action must have order dividing h_order")

    def g_mul(e1, e2):
        a1, j1 = e1
        a2, j2 = e2
        return (avec_add(a1, apply_mat(Xpows[j1], a2)), (j1 + j2) % h_order)

    identity = (tuple([0] * kk), 0)
    vecs = [tuple()]
    for d in orders:
        vecs = [v + (i,) for v in vecs for i in range(d)]
    all_avecs = vecs

    # candidate automorphisms s: a -> S a, h -> a0 * h^c
    s_cands = []
    units = [c for c in range(1, h_order) if gcd(c, h_order) == 1
             and (c * c) % h_order == 1]
    gens_a = [tuple(1 if i == j else 0 for i in range(kk)) for j in range(kk)]
    s_mats = []
    for img in _matrix_candidates(orders, kk):
        if _is_automorphism(img, orders, kk) and _mat_square_id(img, orders, kk):
            s_mats.append(img)
    for S in s_mats:
        for c in units:
            for a0 in all_avecs:
                sigma = _build_sigma(S, a0, c, orders, h_order, Xpows,
                                     apply_mat, avec_add)
                if sigma is None:
                    continue
                s_cands.append(sigma)

    # complements: cyclic <(b, j)> of order h_order meeting A trivially
    comps = {}
    for j in range(1, h_order):
        if gcd(j, h_order) != 1:
            continue
        for b in all_avecs:
            el = (b, j)
            cur = el
            elems = {identity, el}
            for _ in range(h_order - 2):
                cur = g_mul(cur, el)
                elems.add(cur)
            cur = g_mul(cur, el)
            if cur != identity:
                continue
            comps.setdefault(frozenset(elems), None)
    comps = list(comps)

    witnesses = []
    for sigma in s_cands:
        for H in comps:
            sH = frozenset(sigma[el] for el in H)
            inter = len(H & sH)
            if len(H) ** 2 == total * inter:
                witnesses.append((sigma, H))
    ok = has_cyclic_index2(orders)
    return Index2CyclicResult(
        coverage_found=bool(witnesses),
        implication_holds=(not witnesses) or ok,
        vacuous=not witnesses,
        witnesses=witnesses)


def _matrix_candidates(orders, kk):
    cols = [tuple()]
    vecs = [tuple()]
    for d in orders:
        vecs = [v + (i,) for v in vecs for i in range(d)]
    mats = [tuple()]
    for _ in range(kk):
        mats = [m + (v,) for m in mats for v in vecs]
    return mats


def _is_automorphism(rows, orders, kk):
    # rows[j] = image of j-th generator; must preserve orders and be bijective
    for j, d in enumerate(orders):
        img = rows[j]
        # order of img must divide d
        acc = tuple([0] * kk)
        el = img
        o = 1
        cur = img
        while cur != tuple([0] * kk):
            cur = tuple((a + b) % dd for a, b, dd in zip(cur, img, orders))
            o += 1
            if o > d:
                return False
        if d % o:
            return False
    # bijectivity: image spans the whole group
    seen = {tuple([0] * kk)}
    queue = [tuple([0] * kk)]
    for row in rows:
        new = set()
        for s in seen:
            cur = s
            for _ in range(max(orders)):
                cur = tuple((a + b) % dd for a, b, dd in zip(cur, row, orders))
                new.add(cur)
        seen |= new
    size = 1
    for d in orders:
        size *= d
    return len(seen) == size


def _mat_square_id(rows, orders, kk):
    def apply(rows_, u):
        out = [0] * kk
        for j, coeff in enumerate(u):
            if coeff:
                for i in range(kk):
                    out[i] = (out[i] + coeff * rows_[j][i]) % orders[i]
        return tuple(out)

    for j in range(kk):
        e = tuple(1 if i == j else 0 for i in range(kk))
        if apply(rows, apply(rows, e)) != e:
            return False
    return True


def _build_sigma(S, a0, c, orders, h_order, Xpows, apply_mat, avec_add):
    """Total map table for sigma, or None when it is not an automorphism of
    order exactly 2."""
    kk = len(orders)
    zero = tuple([0] * kk)

    def S_apply(u):
        out = [0] * kk
        for j, coeff in enumerate(u):
            if coeff:
                for i in range(kk):
                    out[i] = (out[i] + coeff * S[j][i]) % orders[i]
        return tuple(out)

    # sigma(a, j) = (S a + sum_{t<j} X^(c t) a0, c j)
    prefix = [zero]
    for t in range(h_order):
        prefix.append(avec_add(prefix[-1], apply_mat(Xpows[(c * t) % h_order], a0)))
    table = {}
    vecs = [tuple()]
    for d in orders:
        vecs = [v + (i,) for v in vecs for i in range(d)]
    for a in vecs:
        for j in range(h_order):
            table[(a, j)] = (avec_add(S_apply(a), prefix[j]), (c * j) % h_order)
    # homomorphism + involution checks on the full table
    def g_mul(e1, e2):
        a1, j1 = e1
        a2, j2 = e2
        return (avec_add(a1, apply_mat(Xpows[j1], a2)), (j1 + j2) % h_order)

    gens = [((tuple(1 if i == j else 0 for i in range(kk))), 0)
            for j in range(kk)] + [(zero, 1 % h_order)]
    for g in gens:
        for e in table:
            if table[g_mul(g, e)] != g_mul(table[g], table[e]):
                return None
    ident = all(table[e] == e for e in table)
    if ident:
        return None
    for e in table:
        if table[table[e]] != e:
            return None
    return table
