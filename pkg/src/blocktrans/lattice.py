"""Exhaustive subgroup enumeration for small groups.

Subgroups are found up to conjugacy by seeding with the perfect subgroups
(every perfect subgroup here is simple, hence generated by an involution
class representative and one further element) and then extending upward by
prime-order cyclic steps inside normalizers; the classic argument that every
subgroup sits above its perfect residual through a chain of prime-index
normal steps makes the combination exhaustive.  Everything works on element
index sets, so the practical bound is a few thousand elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .errors import ResourceLimitError, SearchBudgetExceeded, ValidationError
from .perms import (PermGroup, closure_tuples, conj, identity_tuple, inv,
                    is_identity, mul, perm_order)

LATTICE_ORDER_BOUND = 6000


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class ElementTable:
    """All elements of a small group, indexed, with index-level arithmetic."""

    def __init__(self, group: PermGroup, limit=LATTICE_ORDER_BOUND):
        if group.order() > limit:
            raise ResourceLimitError(
                f"group order {group.order()} exceeds table bound {limit}")
        self.group = group
        self.elements = sorted(group.elements())
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.id_idx = self.index[identity_tuple(group.degree)]
        self.gen_idx = [self.index[g] for g in group.gen_tuples]
        self._orders = None

    def __len__(self):
        return len(self.elements)

    def mul_idx(self, i, j):
        return self.index[mul(self.elements[i], self.elements[j])]

    def inv_idx(self, i):
        return self.index[inv(self.elements[i])]

    def conj_idx(self, i, j):
        """index of elements[j]^-1 * elements[i] * elements[j]."""
        return self.index[conj(self.elements[i], self.elements[j])]

    def order_of(self, i):
        if self._orders is None:
            self._orders = [perm_order(e) for e in self.elements]
        return self._orders[i]

    def closure_idx(self, gens, abort_above=None):
        """Subgroup generated by element indices `gens`."""
        seen = {self.id_idx}
        queue = [self.id_idx]
        while queue:
            cur = queue.pop()
            for g in gens:
                nxt = self.mul_idx(cur, g)
                if nxt not in seen:
                    if abort_above is not None and len(seen) >= abort_above:
                        return None
                    seen.add(nxt)
                    queue.append(nxt)
        return frozenset(seen)

    def generating_indices(self, subset):
        """A small generating set for the subgroup given as an index set."""
        gens = []
        have = {self.id_idx}
        for x in sorted(subset, key=self.order_of, reverse=True):
            if x not in have:
                gens.append(x)
                have = self.closure_idx(gens)
                if len(have) == len(subset):
                    break
        return gens

    def conj_set(self, subset, g):
        return frozenset(self.conj_idx(x, g) for x in subset)

    def subgroup(self, subset):
        """The subgroup as a PermGroup."""
        gens = [self.elements[i] for i in self.generating_indices(subset)]
        return PermGroup(self.group.degree, gens, order_hint=len(subset),
                         seed=self.group._seed)

    def element_classes(self):
        """Conjugacy classes of elements (lists of indices)."""
        seen = set()
        classes = []
        for i in range(len(self.elements)):
            if i in seen:
                continue
            orb = {i}
            queue = [i]
            while queue:
                cur = queue.pop()
                for g in self.gen_idx:
                    img = self.conj_idx(cur, g)
                    if img not in orb:
                        orb.add(img)
                        queue.append(img)
            seen |= orb
            classes.append(sorted(orb))
        return classes

    def derived_of(self, subset, gens=None):
        """Derived subgroup of the subgroup given as an index set."""
        gens = gens if gens is not None else self.generating_indices(subset)
        comms = set()
        for a in gens:
            for b in gens:
                c = self.mul_idx(self.mul_idx(self.inv_idx(a), self.inv_idx(b)),
                                 self.mul_idx(a, b))
                comms.add(c)
        comms.discard(self.id_idx)
        # normal closure within the subgroup, then group closure
        clo = set(comms)
        queue = list(comms)
        while queue:
            cur = queue.pop()
            for g in gens:
                img = self.conj_idx(cur, g)
                if img not in clo:
                    clo.add(img)
                    queue.append(img)
        return self.closure_idx(sorted(clo)) if clo else frozenset({self.id_idx})


@dataclass
class SubgroupClass:
    rep: frozenset
    conjugates: list = field(default_factory=list)

    @property
    def order(self):
        return len(self.rep)

    @property
    def length(self):
        return len(self.conjugates)


class SubgroupLattice:
    def __init__(self, table, classes):
        self.table = table
        self.classes = classes

    def all_sets(self):
        for cls in self.classes:
            yield from cls.conjugates

    def count(self):
        return sum(cls.length for cls in self.classes)

    def class_reps(self):
        return [cls.rep for cls in self.classes]


def _perfect_seed_sets(table):
    """All perfect subgroups, via involution-rep x element closures."""
    n = len(table)
    out = set()
    half = len(table) // 2
    invol_reps = [cls[0] for cls in table.element_classes()
                  if table.order_of(cls[0]) == 2]
    for t in invol_reps:
        cent = [g for g in range(n) if table.conj_idx(t, g) == t]
        cent_gens = table.generating_indices(frozenset(cent))
        seen = set()
        for b in range(n):
            if b in seen:
                continue
            orb = {b}
            queue = [b]
            while queue:
                cur = queue.pop()
                for g in cent_gens:
                    img = table.conj_idx(cur, g)
                    if img not in orb:
                        orb.add(img)
                        queue.append(img)
            seen |= orb
            J = table.closure_idx([t, b], abort_above=half + 1)
            if J is None or len(J) == len(table):
                continue
            if len(J) > 1 and table.derived_of(J, gens=[t, b]) == J:
                out.add(J)
    return out


def all_subgroups(group: PermGroup, limit=LATTICE_ORDER_BOUND):
    """The full subgroup lattice of a small group, organized by conjugacy."""
    table = ElementTable(group, limit=limit)
    registry = {}
    classes = []

    def register(J):
        if J in registry:
            return False
        cid = len(classes)
        orbit = {J}
        queue = [J]
        while queue:
            cur = queue.pop()
            for g in table.gen_idx:
                img = table.conj_set(cur, g)
                if img not in orbit:
                    orbit.add(img)
                    queue.append(img)
        for s in orbit:
            registry[s] = cid
        classes.append(SubgroupClass(rep=J, conjugates=sorted(orbit, key=sorted)))
        return True

    trivial = frozenset({table.id_idx})
    register(trivial)
    queue = [trivial]
    for J in sorted(_perfect_seed_sets(table), key=len):
        if register(J):
            queue.append(J)
    # the whole group is its own perfect seed when perfect; register it anyway
    register(frozenset(range(len(table))))

    n = len(table)
    while queue:
        H = queue.pop()
        Hgens = table.generating_indices(H)
        norm = [g for g in range(n)
                if all(table.conj_idx(h, g) in H for h in Hgens)]
        covered = set(H)
        for g in norm:
            if g in covered:
                continue
            t = 1
            x = g
            while x not in H:
                x = table.mul_idx(x, g)
                t += 1
            if not _is_prime(t):
                covered.add(g)
                continue
            coset = {self_mul for self_mul in (table.mul_idx(h, g) for h in H)}
            J = set(H)
            cur = coset
            for _ in range(t - 1):
                J |= cur
                cur = {table.mul_idx(x, g) for x in cur}
            J = frozenset(J)
            covered |= J
            if register(J):
                queue.append(J)
    classes.sort(key=lambda c: (c.order, sorted(c.rep)))
    return SubgroupLattice(table, classes)


# ---------------------------------------------------------------------------
# overgroups through a small coset action

def overgroups_of(G: PermGroup, H: PermGroup, max_index=400):
    """All subgroups K with H <= K <= G, via blocks of the coset action."""
    from .blocks import all_minimal_systems, join_systems
    from .perms import coset_action

    cs = coset_action(G, H, max_index=max_index)
    act = cs.action
    if cs.index == 1:
        return [G]
    systems = set()
    minimal = all_minimal_systems(act)
    queue = list(minimal)
    systems.update(minimal)
    while queue:
        cur = queue.pop()
        for m in minimal:
            j = join_systems(cur, m)
            if j.block_count > 1 and j not in systems:
                systems.add(j)
                queue.append(j)
    out = [H, G]
    for sys in systems:
        blk = [i for i in range(cs.index) if sys.block_of[i] == sys.block_of[0]]
        if len(blk) in (1, cs.index):
            continue
        gens = list(H.gen_tuples) + [cs.reps[i] for i in blk]
        out.append(PermGroup(G.degree, gens,
                             order_hint=H.order() * len(blk), seed=G._seed))
    return out


# ---------------------------------------------------------------------------
# randomized subgroup search

def random_subgroup_search(G: PermGroup, target_order, predicate=None,
                           seed=0, tries=3000, ngens=2):
    """Seeded search for a subgroup of the given order: closures of small
    random generator tuples, aborted as soon as they exceed the target."""
    rng = Random(seed)
    for _ in range(tries):
        gens = [G.random_element(rng).images for _ in range(ngens)]
        try:
            elems = closure_tuples(G.degree, gens, limit=target_order)
        except ResourceLimitError:
            continue
        if len(elems) != target_order:
            continue
        sub = PermGroup(G.degree, gens, order_hint=target_order, seed=seed)
        if predicate is None or predicate(sub):
            return sub
    raise SearchBudgetExceeded(
        f"no subgroup of order {target_order} found in {tries} tries")


def sylow_cyclic_subgroup(G: PermGroup, p, rng=None):
    """A subgroup of order p^k = full p-part, for cyclic Sylow subgroups.

    Only valid when the Sylow p-subgroup is cyclic (p^k || |G| with a p^k
    element); found by random sampling of element orders."""
    order = G.order()
    pk = 1
    while order % (pk * p) == 0:
        pk *= p
    rng = rng or Random(0)
    for _ in range(20000):
        g = G.random_element(rng)
        o = g.order()
        if o % pk == 0:
            return PermGroup(G.degree, [(g ** (o // pk)).images],
                             order_hint=pk, seed=G._seed)
    raise SearchBudgetExceeded(f"no element of order {pk} found")
