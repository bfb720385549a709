"""Exact permutation group kernel.

Permutations are stored as image tuples over {0, ..., deg-1}.  The product
``p * q`` means "apply p, then q", so ``(p * q)[t] == q[p[t]]``.  Groups carry
a stabilizer chain (base + Schreier vectors) built either deterministically or
by a seeded randomized sifting loop certified against a known target order;
both are deterministic for a fixed seed.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd
from random import Random

from .errors import ResourceLimitError, ValidationError

DEFAULT_DEGREE_BOUND = 1_000_000
DEFAULT_INDEX_BOUND = 100_000


# ---------------------------------------------------------------------------
# tuple-level helpers (hot paths work on raw image tuples)

def identity_tuple(deg):
    return tuple(range(deg))


def mul(p, q):
    """Apply p, then q."""
    return tuple(q[v] for v in p)


def inv(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def conj(p, g):
    """g^-1 * p * g (apply g^-1, then p, then g)."""
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[g[i]] = g[v]
    return tuple(r)


def is_identity(p):
    return all(i == v for i, v in enumerate(p))


def perm_order(p):
    n = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        n = n * length // gcd(n, length)
    return n


def cycles_of(p):
    """Nontrivial cycles, each starting at its minimal point."""
    out = []
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p):
    cyc = cycles_of(p)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def from_cycles(deg, cycles):
    img = list(range(deg))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            img[a] = b
        if cyc:
            img[cyc[-1]] = cyc[0]
    return tuple(img)


class Permutation:
    """A bijection of {0, ..., deg-1}, stored by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError("images are not a bijection on 0..deg-1")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if len(self.images) != len(other.images):
            raise ValidationError("degree mismatch")
        return Permutation(mul(self.images, other.images))

    def inverse(self):
        return Permutation(inv(self.images))

    def __pow__(self, n):
        p = self.images
        if n < 0:
            p = inv(p)
            n = -n
        r = identity_tuple(len(p))
        while n:
            if n & 1:
                r = mul(r, p)
            p = mul(p, p)
            n >>= 1
        return Permutation(r)

    def is_identity(self):
        return is_identity(self.images)

    def order(self):
        return perm_order(self.images)

    def cycles(self):
        return cycles_of(self.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({format_cycles(self.images)}, deg={self.degree})"

    @classmethod
    def identity(cls, deg):
        return cls(identity_tuple(deg))

    @classmethod
    def cycle(cls, deg, *cycles):
        return cls(from_cycles(deg, cycles))


# ---------------------------------------------------------------------------
# stabilizer chain

class _Level:
    __slots__ = ("point", "gens", "orbit", "sv", "transversal")

    def __init__(self, point):
        self.point = point
        self.gens = []           # strong generators fixing all earlier base points
        self.orbit = [point]     # orbit of `point` in BFS order
        self.sv = {point: None}  # Schreier vector: point -> (prev, gen_index)
        self.transversal = None  # point -> full perm, built on demand

    def extend_orbit(self, new_gen_index):
        g = self.gens[new_gen_index]
        for x in list(self.orbit):
            y = g[x]
            if y not in self.sv:
                self.sv[y] = (x, new_gen_index)
                self.orbit.append(y)
        i = 0
        while i < len(self.orbit):
            x = self.orbit[i]
            for k, gg in enumerate(self.gens):
                y = gg[x]
                if y not in self.sv:
                    self.sv[y] = (x, k)
                    self.orbit.append(y)
            i += 1
        self.transversal = None

    def u(self, point, deg):
        """Transversal element mapping the base point to `point`."""
        if self.transversal is None and len(self.orbit) * deg <= 2_000_000:
            self.build_transversal(deg)
        if self.transversal is not None:
            return self.transversal[point]
        path = []
        x = point
        while self.sv[x] is not None:
            prev, k = self.sv[x]
            path.append(k)
            x = prev
        r = identity_tuple(deg)
        for k in reversed(path):
            r = mul(r, self.gens[k])
        return r

    def build_transversal(self, deg):
        if self.transversal is None:
            t = {self.point: identity_tuple(deg)}
            for x in self.orbit:
                if x != self.point:
                    prev, k = self.sv[x]
                    t[x] = mul(t[prev], self.gens[k])
            self.transversal = t


class StabChain:
    """Base and strong generating set with Schreier-vector transversals."""

    def __init__(self, degree, levels):
        self.degree = degree
        self.levels = levels

    @property
    def base(self):
        return [lv.point for lv in self.levels]

    def order(self):
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def sift_from(self, p, start=0):
        """Return (residue, j >= start): residue fixes base[start:j]."""
        deg = self.degree
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            x = p[lv.point]
            if x == lv.point:
                continue
            if x not in lv.sv:
                return p, i
            p = mul(p, inv(lv.u(x, deg)))
        return p, len(self.levels)

    def sift(self, p):
        return self.sift_from(p, 0)

    def contains(self, p):
        r, _ = self.sift(p)
        return is_identity(r)

    def stabilizer_gens(self, depth=1):
        """Strong generators of the pointwise stabilizer of base[:depth]."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)

    def fundamental_orbits(self):
        return [list(lv.orbit) for lv in self.levels]


def _first_moved(p):
    for i, v in enumerate(p):
        if v != i:
            return i
    return None


def _rattle(gens, deg, rng, scramble=30):
    """Seeded product-replacement sampler over a generating set."""
    if not gens:
        return lambda: identity_tuple(deg)
    slots = [identity_tuple(deg)] * 4 + [tuple(g) for g in gens]
    accu = [identity_tuple(deg)]

    def stir():
        i = rng.randrange(1, len(slots))
        p = slots[i]
        if rng.randrange(2):
            p = inv(p)
        slots[0] = mul(slots[0], p)
        accu[0] = mul(accu[0], slots[0])
        return accu[0]

    for _ in range(scramble):
        stir()
    return stir


def build_chain(degree, gens, base_hint=(), target_order=None, seed=0,
                stall_rounds=200):
    """Schreier-Sims.

    With ``target_order`` a seeded randomized sifting loop runs first and the
    chain is certified complete once the product of fundamental orbit lengths
    reaches the target; otherwise (or on a stall) a deterministic Schreier
    generator pass finishes the job.
    """
    gens = [tuple(g) for g in gens if not is_identity(tuple(g))]
    for b in base_hint:
        if not 0 <= b < degree:
            raise ValidationError("base point out of range")
    levels = [_Level(b) for b in dict.fromkeys(base_hint)]
    chain = StabChain(degree, levels)

    def install(p):
        """Add p != id as a strong generator at levels 0..(fixed prefix of p)."""
        j = 0
        while j < len(levels) and p[levels[j].point] == levels[j].point:
            j += 1
        if j == len(levels):
            levels.append(_Level(_first_moved(p)))
        for k in range(j + 1):
            lv = levels[k]
            lv.gens.append(p)
            lv.extend_orbit(len(lv.gens) - 1)

    def insert(p):
        r, _ = chain.sift(p)
        if is_identity(r):
            return False
        install(r)
        return True

    for g in gens:
        install(g)

    if target_order is not None and chain.order() != target_order:
        rng = Random(seed)
        sample = _rattle(gens, degree, rng)
        stall = 0
        while chain.order() != target_order and stall < stall_rounds:
            if insert(sample()):
                stall = 0
            else:
                stall += 1

    if target_order is None or chain.order() != target_order:
        _deterministic_complete(chain)
    if target_order is not None and chain.order() > target_order:
        raise ValidationError("group is larger than the stated target order")
    chain.levels = [lv for lv in chain.levels if len(lv.orbit) > 1]
    return chain


def _deterministic_complete(chain):
    """Classic Schreier generator verification, bottom level upward."""
    deg = chain.degree
    levels = chain.levels

    def install(p):
        j = 0
        while j < len(levels) and p[levels[j].point] == levels[j].point:
            j += 1
        if j == len(levels):
            levels.append(_Level(_first_moved(p)))
        for k in range(j + 1):
            lv = levels[k]
            lv.gens.append(p)
            lv.extend_orbit(len(lv.gens) - 1)
        return j

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        clean = True
        for x in lv.orbit:
            ux = lv.u(x, deg)
            for g in lv.gens:
                y = g[x]
                s = mul(mul(ux, g), inv(lv.u(y, deg)))
                if is_identity(s):
                    continue
                r, _ = chain.sift_from(s, i + 1)
                if is_identity(r):
                    continue
                i = install(r)
                clean = False
                break
            if not clean:
                break
        if clean:
            i -= 1


# ---------------------------------------------------------------------------
# groups

class PermGroup:
    """A finite permutation group with exact order and membership queries.

    Immutable after construction; the stabilizer chain is built lazily (once)
    and shared by all queries.
    """

    def __init__(self, degree, generators, order_hint=None, base_hint=(),
                 seed=0):
        if degree < 0 or degree > DEFAULT_DEGREE_BOUND:
            raise ResourceLimitError(f"degree {degree} outside configured bound")
        gens = []
        for g in generators:
            img = g.images if isinstance(g, Permutation) else tuple(g)
            if len(img) != degree:
                raise ValidationError("generator degree mismatch")
            if sorted(img) != list(range(degree)):
                raise ValidationError("generator images are not a bijection")
            if not is_identity(img):
                gens.append(img)
        self.degree = degree
        self._gens = tuple(gens)
        self._seed = seed
        self._base_hint = tuple(base_hint)
        self._order_hint = order_hint
        self._chain = None
        self._order = None
        self._elements = None
        self._sampler = None

    # -- construction --------------------------------------------------------

    @classmethod
    def from_generators(cls, degree, gens, order_hint=None, base_hint=(),
                        seed=0):
        return cls(degree, gens, order_hint=order_hint, base_hint=base_hint,
                   seed=seed)

    @classmethod
    def trivial(cls, degree):
        return cls(degree, [])

    @classmethod
    def symmetric(cls, degree):
        if degree <= 1:
            return cls.trivial(max(degree, 0))
        gens = [from_cycles(degree, [tuple(range(degree))])]
        if degree > 2:
            gens.append(from_cycles(degree, [(0, 1)]))
        return cls(degree, gens, order_hint=factorial(degree))

    @classmethod
    def alternating(cls, degree):
        if degree <= 2:
            return cls.trivial(max(degree, 0))
        gens = [from_cycles(degree, [(0, 1, 2)])]
        if degree > 3:
            if degree % 2:
                gens.append(from_cycles(degree, [tuple(range(degree))]))
            else:
                gens.append(from_cycles(degree, [tuple(range(1, degree))]))
        return cls(degree, gens, order_hint=factorial(degree) // 2)

    @property
    def generators(self):
        return [Permutation(g) for g in self._gens]

    @property
    def gen_tuples(self):
        return self._gens

    def identity(self):
        return Permutation.identity(self.degree)

    def chain(self):
        if self._chain is None:
            self._chain = build_chain(self.degree, self._gens,
                                      base_hint=self._base_hint,
                                      target_order=self._order_hint,
                                      seed=self._seed)
            self._order = self._chain.order()
        return self._chain

    def with_base(self, base_hint):
        """The same group, chain based at the given prefix."""
        g = PermGroup(self.degree, self._gens, order_hint=self.order(),
                      base_hint=base_hint, seed=self._seed)
        return g

    # -- queries --------------------------------------------------------------

    def order(self):
        if self._order is None:
            self._order = self.chain().order()
        return self._order

    def is_member(self, p):
        img = p.images if isinstance(p, Permutation) else tuple(p)
        if len(img) != self.degree:
            raise ValidationError("degree mismatch")
        return self.chain().contains(img)

    def __contains__(self, p):
        return self.is_member(p)

    def orbit(self, point):
        if not 0 <= point < self.degree:
            raise ValidationError("point out of range")
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self._gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbits(self):
        out = []
        left = set(range(self.degree))
        while left:
            o = self.orbit(min(left))
            out.append(o)
            left -= o
        return out

    def is_transitive(self):
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def stabilizer(self, point):
        """Pointwise stabilizer of `point`, with exact order."""
        if not 0 <= point < self.degree:
            raise ValidationError("point out of range")
        orb = self.orbit(point)
        if len(orb) == 1:
            return PermGroup(self.degree, self._gens, order_hint=self.order(),
                             seed=self._seed)
        ch = build_chain(self.degree, self._gens, base_hint=(point,),
                         target_order=self.order(), seed=self._seed)
        assert ch.levels and ch.levels[0].point == point
        return PermGroup(self.degree, ch.stabilizer_gens(1),
                         order_hint=self.order() // len(orb), seed=self._seed)

    def pointwise_stabilizer(self, points):
        g = self
        for p in points:
            g = g.stabilizer(p)
        return g

    def transitivity_degree(self):
        """Largest k such that the action is k-transitive."""
        if self.degree == 0:
            return 0
        k = 0
        h = self
        fixed = set()
        while True:
            rest = [p for p in range(self.degree) if p not in fixed]
            if not rest:
                return k
            pt = rest[0]
            if len(h.orbit(pt)) != len(rest):
                return k
            k += 1
            fixed.add(pt)
            h = h.stabilizer(pt)

    def random_element(self, rng=None):
        if rng is not None:
            return Permutation(_rattle(self._gens, self.degree, rng)())
        if self._sampler is None:
            self._sampler = _rattle(self._gens, self.degree, Random(self._seed))
        return Permutation(self._sampler())

    def elements(self, limit=None):
        """All elements as a frozenset of tuples (cached)."""
        if self._elements is None:
            self._elements = frozenset(
                closure_tuples(self.degree, self._gens, limit=limit))
        return self._elements

    def conjugate_subgroup(self, g):
        img = g.images if isinstance(g, Permutation) else tuple(g)
        return PermGroup(self.degree, [conj(h, img) for h in self._gens],
                         order_hint=self._order, seed=self._seed)

    def is_subgroup_of(self, other):
        return all(other.is_member(g) for g in self._gens)

    def equals(self, other):
        return self.order() == other.order() and self.is_subgroup_of(other)

    def normal_closure(self, elts):
        """Subgroup generated by all conjugates of `elts` (saturation loop
        with membership pruning, so the generating set stays small)."""
        gens = sorted({e.images if isinstance(e, Permutation) else tuple(e)
                       for e in elts} - {identity_tuple(self.degree)})
        if not gens:
            return PermGroup.trivial(self.degree)
        while True:
            sub = PermGroup(self.degree, gens, seed=self._seed)
            chain = sub.chain()
            new = []
            for n in gens:
                for g in self._gens:
                    c = conj(n, g)
                    if not chain.contains(c):
                        new.append(c)
            if not new:
                return sub
            gens.extend(sorted(set(new)))

    def derived_subgroup(self):
        comms = []
        for a in self._gens:
            for b in self._gens:
                c = mul(mul(inv(a), inv(b)), mul(a, b))
                if not is_identity(c):
                    comms.append(c)
        return self.normal_closure(comms)

    def abelianization_order(self):
        return self.order() // self.derived_subgroup().order()

    def is_perfect(self):
        return self.order() > 1 and self.derived_subgroup().order() == self.order()

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self._gens)})"


def closure_tuples(deg, gens, limit=None):
    """Element set of <gens>; raises ResourceLimitError past `limit`."""
    gens = [tuple(g) for g in gens]
    if deg <= 255:
        out = closure_size_bounded(deg, gens, limit, want_set=True)
        if out is None:
            raise ResourceLimitError("closure exceeds limit")
        return {tuple(b) for b in out}
    seen = {identity_tuple(deg)}
    queue = list(seen)
    for x in queue:
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                if limit is not None and len(seen) >= limit:
                    raise ResourceLimitError("closure exceeds limit")
                seen.add(y)
                queue.append(y)
    return seen


def closure_size_bounded(deg, gens, limit=None, want_set=False):
    """Closure size (or the bytes-element set), None when past the limit.

    Degree <= 255 runs on bytes with C-speed translation."""
    if deg > 255:
        try:
            s = closure_tuples(deg, gens, limit=limit)
        except ResourceLimitError:
            return None
        return s if want_set else len(s)
    pad = bytes(range(256))
    bgens = [bytes(g) + pad[deg:] for g in gens]
    ident = pad
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in bgens:
            y = x.translate(g)
            if y not in seen:
                if limit is not None and len(seen) >= limit:
                    return None
                seen.add(y)
                queue.append(y)
    if want_set:
        return {b[:deg] for b in seen}
    return len(seen)


# ---------------------------------------------------------------------------
# coset actions

class CosetSpace:
    """The action of `parent` on the right cosets of `subgroup`.

    Point 0 is the coset of the identity, so the stabilizer of point 0 in the
    action is the image of `subgroup`.
    """

    def __init__(self, parent, subgroup, index, action, reps, rep_index):
        self.parent = parent
        self.subgroup = subgroup
        self.index = index
        self.action = action          # PermGroup on {0..index-1}
        self.reps = reps              # canonical representative tuples
        self.rep_index = rep_index    # canonical rep tuple -> point index

    def point_of(self, g):
        """Index of the coset subgroup*g."""
        img = g.images if isinstance(g, Permutation) else tuple(g)
        return self.rep_index[canonical_coset_rep(self.subgroup.chain(), img)]

    def image_of(self, g):
        """Permutation induced on the coset space by g (a member of parent)."""
        img = g.images if isinstance(g, Permutation) else tuple(g)
        ch = self.subgroup.chain()
        return Permutation(
            tuple(self.rep_index[canonical_coset_rep(ch, mul(r, img))]
                  for r in self.reps))


def canonical_coset_rep(chain, g):
    """Canonical representative of the right coset L*g, L given by `chain`.

    Minimizes the image tuple of the chain's base lexicographically over the
    coset; the minimizer is unique, so equal outputs mean equal cosets.
    """
    deg = chain.degree
    r = g
    for lv in chain.levels:
        lv.build_transversal(deg)
        best_pt = lv.point
        best = r[lv.point]
        for x in lv.orbit:
            v = r[x]
            if v < best:
                best = v
                best_pt = x
        if best_pt != lv.point:
            r = mul(lv.transversal[best_pt], r)
    return r


def coset_action(G, L, max_index=DEFAULT_INDEX_BOUND):
    """Transitive action of G on the cosets of L; point 0 is the coset L."""
    if G.degree != L.degree:
        raise ValidationError("degree mismatch")
    for g in L.gen_tuples:
        if not G.is_member(g):
            raise ValidationError("L is not a subgroup of G")
    index = G.order() // L.order()
    if index > max_index:
        raise ResourceLimitError(
            f"coset index {index} exceeds the configured bound {max_index}")
    chain = L.chain()
    deg = G.degree
    start = canonical_coset_rep(chain, identity_tuple(deg))
    reps = [start]
    rep_index = {start: 0}
    gens = G.gen_tuples
    images = [[] for _ in gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for k, g in enumerate(gens):
            t = canonical_coset_rep(chain, mul(r, g))
            j = rep_index.get(t)
            if j is None:
                j = len(reps)
                reps.append(t)
                rep_index[t] = j
            images[k].append(j)
        i += 1
    if len(reps) != index:
        raise ValidationError("coset enumeration found %d cosets, expected %d"
                              % (len(reps), index))
    # the action order is |G| / |core(L)|; a core-free L is the normal case,
    # and a wrong hint only costs the stall-fallback to the deterministic pass
    action = PermGroup(index, [tuple(im) for im in images],
                       order_hint=G.order(), seed=G._seed)
    return CosetSpace(G, L, index, action, reps, rep_index)


def product_covers(G, s, H):
    """True iff G = sHsH as a set, via |H|^2 / |H ∩ sHs| = |G|."""
    s_img = s.images if isinstance(s, Permutation) else tuple(s)
    for h in H.gen_tuples:
        if not G.is_member(h):
            raise ValidationError("H is not a subgroup of G")
    if not all(G.is_member(conj(h, s_img)) for h in H.gen_tuples):
        return False
    h_elems = H.elements()
    inter = sum(1 for h in h_elems if conj(h, s_img) in h_elems)
    return Fraction(H.order() ** 2, inter) == G.order()
