"""Block systems, distant tuples, and block-transitivity tests.

A block system is a group-invariant partition of the permuted set into parts
of equal size.  A k-tuple of points is "distant" when no two entries share a
block; the group is k-by-block-transitive when it is transitive on distant
k-tuples and there are at least k blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbiguousBlocksError, ValidationError
from .perms import PermGroup

SMALL_ORACLE_DEGREE = 60


class BlockSystem:
    """Partition of {0..degree-1} into equal-size blocks."""

    def __init__(self, block_of):
        block_of = tuple(block_of)
        degree = len(block_of)
        count = max(block_of) + 1 if block_of else 0
        sizes = [0] * count
        for b in block_of:
            if not 0 <= b < count:
                raise ValidationError("block indices must be 0..count-1")
            sizes[b] += 1
        if count and len(set(sizes)) != 1:
            raise ValidationError("blocks must have equal size")
        self.block_of = block_of
        self.degree = degree
        self.block_count = count
        self.block_size = sizes[0] if count else 0

    @classmethod
    def from_blocks(cls, degree, blocks):
        block_of = [None] * degree
        for i, blk in enumerate(blocks):
            for x in blk:
                block_of[x] = i
        if any(b is None for b in block_of):
            raise ValidationError("blocks do not cover the domain")
        return cls(block_of)

    @classmethod
    def singletons(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_fibers(cls, degree, fiber_size):
        """Points i*fiber_size..(i+1)*fiber_size-1 form block i."""
        return cls([x // fiber_size for x in range(degree)])

    def block(self, index):
        return frozenset(x for x in range(self.degree)
                         if self.block_of[x] == index)

    def blocks(self):
        out = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return [frozenset(b) for b in out]

    def is_invariant_under(self, gens):
        for g in gens:
            img = {}
            for x in range(self.degree):
                b = self.block_of[x]
                t = self.block_of[g[x]]
                if img.setdefault(b, t) != t:
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, BlockSystem):
            return NotImplemented
        return _normalized(self.block_of) == _normalized(other.block_of)

    def __hash__(self):
        return hash(_normalized(self.block_of))

    def __repr__(self):
        return (f"BlockSystem({self.block_count} blocks of "
                f"size {self.block_size})")


def _normalized(block_of):
    relabel = {}
    out = []
    for b in block_of:
        out.append(relabel.setdefault(b, len(relabel)))
    return tuple(out)


class ImprimitiveAction:
    """A permutation group together with an invariant block system."""

    def __init__(self, group: PermGroup, blocks: BlockSystem):
        if group.degree != blocks.degree:
            raise ValidationError("degree mismatch between group and blocks")
        if not blocks.is_invariant_under(group.gen_tuples):
            raise ValidationError("blocks are not invariant under the group")
        self.group = group
        self.blocks = blocks
        self._block_kernel_order = None
        self._block_image_order = None

    def block_action_group(self):
        """Image of the group acting on the set of blocks."""
        bof = self.blocks.block_of
        count = self.blocks.block_count
        reps = [None] * count
        for x in range(self.blocks.degree - 1, -1, -1):
            reps[bof[x]] = x
        gens = []
        for g in self.group.gen_tuples:
            gens.append(tuple(bof[g[reps[b]]] for b in range(count)))
        return PermGroup(count, gens, seed=self.group._seed)

    @property
    def block_kernel_order(self):
        if self._block_kernel_order is None:
            img = self.block_action_group().order()
            self._block_image_order = img
            self._block_kernel_order = self.group.order() // img
        return self._block_kernel_order

    def is_block_faithful(self):
        return self.block_kernel_order == 1

    def __repr__(self):
        return f"ImprimitiveAction({self.group!r}, {self.blocks!r})"


@dataclass
class TripleOrbitReport:
    orbit_count: int
    orbit_sizes: list
    c: int | None
    n: int


# ---------------------------------------------------------------------------
# counting

def distant_tuple_count(blocks: BlockSystem, k: int):
    """|set of k-tuples with no two entries in a common block|."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    if blocks.block_count < k:
        return 0
    n = 1
    for i in range(k):
        n *= blocks.degree - i * blocks.block_size
    return n


def pair_stabilizer_order(order_g, order_point, order_block):
    """|G(w)|^2 / (|G| - |G([w])|) as an exact rational.

    Integrality of the result is a necessary condition for the action with
    these orders to be 2-by-block-transitive; the caller checks it.
    """
    if not (0 < order_point <= order_block < order_g):
        raise ValidationError("need 0 < point <= block < group order")
    return Fraction(order_point ** 2, order_g - order_block)


def admissible_subgroup_orders(order_g, order_block_stab):
    """Divisors d of the block stabilizer order with (order_g - stab) | d^2."""
    if order_g % order_block_stab:
        raise ValidationError("block stabilizer order must divide group order")
    diff = order_g - order_block_stab
    out = []
    d = 1
    while d * d <= order_block_stab:
        if order_block_stab % d == 0:
            for e in {d, order_block_stab // d}:
                if (e * e) % diff == 0:
                    out.append(e)
        d += 1
    return sorted(set(out))


# ---------------------------------------------------------------------------
# transitivity tests

def _restricted_action(group: PermGroup, keep):
    """Action of `group` on the invariant subset `keep` (reindexed)."""
    keep = sorted(keep)
    index = {x: i for i, x in enumerate(keep)}
    gens = []
    for g in group.gen_tuples:
        gens.append(tuple(index[g[x]] for x in keep))
    return PermGroup(len(keep), gens, seed=group._seed), index


def is_k_by_block_transitive(act: ImprimitiveAction, k: int):
    """Transitivity on distant k-tuples, tested through point stabilizers."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    if not act.blocks.is_invariant_under(act.group.gen_tuples):
        raise ValidationError("blocks are not invariant")
    return _kbbt(act.group, act.blocks, k)


def _kbbt(group, blocks, k):
    if blocks.block_count < k:
        return False
    if group.degree == 0:
        return False
    if not group.is_transitive():
        return False
    if k == 1:
        return True
    w = 0
    stab = group.stabilizer(w)
    keep = [x for x in range(group.degree)
            if blocks.block_of[x] != blocks.block_of[w]]
    sub, index = _restricted_action(stab, keep)
    sub_blocks = BlockSystem(_normalized([blocks.block_of[x] for x in sorted(keep)]))
    return _kbbt(sub, sub_blocks, k - 1)


def is_sharply_2bbt(act: ImprimitiveAction):
    """Regular on distant pairs: 2-by-block-transitive with |G| = |distant pairs|."""
    return (is_k_by_block_transitive(act, 2)
            and act.group.order() == distant_tuple_count(act.blocks, 2))


def distant_triple_orbits(act: ImprimitiveAction):
    """Orbit count of the group on distant triples.

    Counts orbits of a distant-pair stabilizer on the points outside the two
    fixed blocks; each such orbit O corresponds to a triple orbit of size
    |distant pairs| * |O|.
    """
    blocks = act.blocks
    if blocks.block_count < 3:
        raise ValidationError("need at least 3 blocks")
    if not is_k_by_block_transitive(act, 2):
        raise ValidationError("action is not 2-by-block-transitive")
    g = act.group
    w1 = 0
    w2 = next(x for x in range(g.degree)
              if blocks.block_of[x] != blocks.block_of[w1])
    pair_stab = g.pointwise_stabilizer([w1, w2])
    outside = [x for x in range(g.degree)
               if blocks.block_of[x] not in (blocks.block_of[w1],
                                             blocks.block_of[w2])]
    # orbits of the pair stabilizer on the remaining points
    parent = {x: x for x in outside}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in pair_stab.gen_tuples:
        for x in outside:
            a, b = find(x), find(gen[x])
            if a != b:
                parent[a] = b
    sizes = {}
    for x in outside:
        sizes[find(x)] = sizes.get(find(x), 0) + 1
    npairs = distant_tuple_count(blocks, 2)
    orbit_sizes = sorted(npairs * s for s in sizes.values())
    count = len(orbit_sizes)
    n = blocks.block_size
    c = count // (n * n) if n and count % (n * n) == 0 and count // (n * n) in (1, 2) else None
    report = TripleOrbitReport(orbit_count=count, orbit_sizes=orbit_sizes,
                               c=c, n=n)
    if sum(orbit_sizes) != distant_tuple_count(blocks, 3):
        raise ValidationError("triple orbit sizes do not sum to |distant triples|")
    return report


# ---------------------------------------------------------------------------
# invariant block systems

def minimal_block_system(group: PermGroup, a, b):
    """Finest invariant partition in which a ~ b (union-find algorithm)."""
    deg = group.degree
    parent = list(range(deg))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(a, b)]
    parent[find(b)] = find(a)
    while queue:
        x, y = queue.pop()
        for g in group.gen_tuples:
            u, v = find(g[x]), find(g[y])
            if u != v:
                parent[u] = v
                queue.append((g[x], g[y]))
    reps = {}
    block_of = [0] * deg
    for x in range(deg):
        block_of[x] = reps.setdefault(find(x), len(reps))
    return BlockSystem(_normalized(block_of))


def join_systems(s1: BlockSystem, s2: BlockSystem):
    """Finest common coarsening of two partitions."""
    deg = s1.degree
    parent = list(range(deg))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sys in (s1, s2):
        firsts = {}
        for x in range(deg):
            b = sys.block_of[x]
            if b in firsts:
                u, v = find(firsts[b]), find(x)
                if u != v:
                    parent[u] = v
            else:
                firsts[b] = x
    reps = {}
    block_of = [0] * deg
    for x in range(deg):
        block_of[x] = reps.setdefault(find(x), len(reps))
    return BlockSystem(_normalized(block_of))


def all_minimal_systems(group: PermGroup):
    """Distinct minimal (finest nontrivial) invariant systems, one per suborbit."""
    if not group.is_transitive():
        raise ValidationError("group must be transitive")
    stab = group.stabilizer(0)
    seen_reps = set()
    systems = []
    reps = []
    for orb in stab.orbits():
        d = min(orb)
        if d == 0:
            continue
        reps.append(d)
    for d in sorted(reps):
        sys = minimal_block_system(group, 0, d)
        if sys.block_count > 1 and sys not in seen_reps:
            seen_reps.add(sys)
            systems.append(sys)
    return systems


def coarsest_invariant_blocks(group: PermGroup):
    """The unique coarsest nonuniversal invariant block system.

    Singleton blocks for a primitive action.  When several maximal systems
    exist the choice is ambiguous and an AmbiguousBlocksError is raised.
    """
    if not group.is_transitive():
        raise ValidationError("group must be transitive")
    if group.degree < 2:
        raise ValidationError("degree must be at least 2")
    minimal = all_minimal_systems(group)
    if not minimal:
        return BlockSystem.singletons(group.degree)

    def coarsen(start):
        cur = start
        changed = True
        while changed:
            changed = False
            for other in minimal:
                if other is cur:
                    continue
                j = join_systems(cur, other)
                if j.block_count > 1 and j != cur:
                    cur = j
                    changed = True
        return cur

    results = []
    for m in minimal:
        c = coarsen(m)
        if c not in results:
            results.append(c)
    if len(results) > 1:
        raise AmbiguousBlocksError(
            f"{len(results)} maximal invariant block systems found")
    return results[0]


# ---------------------------------------------------------------------------
# small-degree brute-force oracle

def distant_tuples(blocks: BlockSystem, k: int):
    """All distant k-tuples (small degrees only)."""
    pts = range(blocks.degree)
    bof = blocks.block_of

    def rec(prefix, used_blocks):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for x in pts:
            if bof[x] not in used_blocks:
                yield from rec(prefix + [x], used_blocks | {bof[x]})

    yield from rec([], frozenset())


def kbbt_oracle(act: ImprimitiveAction, k: int):
    """Direct orbit computation on distant k-tuples (degree <= 60)."""
    if act.group.degree > SMALL_ORACLE_DEGREE:
        raise ValidationError("oracle restricted to small degree")
    total = distant_tuple_count(act.blocks, k)
    if total == 0:
        return False
    start = next(distant_tuples(act.blocks, k))
    seen = {start}
    queue = [start]
    for t in queue:
        for g in act.group.gen_tuples:
            img = tuple(g[x] for x in t)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen) == total


def triple_orbits_oracle(act: ImprimitiveAction):
    """Direct orbit partition of distant triples (degree <= 60)."""
    if act.group.degree > SMALL_ORACLE_DEGREE:
        raise ValidationError("oracle restricted to small degree")
    todo = set(distant_tuples(act.blocks, 3))
    sizes = []
    while todo:
        start = todo.pop()
        seen = {start}
        queue = [start]
        for t in queue:
            for g in act.group.gen_tuples:
                img = tuple(g[x] for x in t)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        todo -= seen
        sizes.append(len(seen))
    return sorted(sizes)
