"""Matrix groups over GF(q) and their projective permutation actions.

Groups between SL_{n+1}(q) and GammaL_{n+1}(q) are converted to permutation
groups on the projective space P_n(q) immediately; all stabilizer-chain work
happens at the permutation level.  The point enumeration is lexicographic by
normalized homogeneous coordinates (leading coefficient 1), which together
with the fixed field polynomials keeps certificates stable across builds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import gf
from .errors import ResourceLimitError, UnsupportedError, ValidationError
from .perms import DEFAULT_DEGREE_BOUND, PermGroup, Permutation

FAMILIES = ("SL", "GL", "SigmaL", "GammaL", "ZSL")


def gl_order(m, q):
    n = 1
    qm = q ** m
    for i in range(m):
        n *= qm - q ** i
    return n


def sl_order(m, q):
    return gl_order(m, q) // (q - 1)


def pgl_order(m, q):
    return gl_order(m, q) // (q - 1)


def psl_order(m, q):
    return sl_order(m, q) // gcd(m, q - 1)


def projective_point_count(n, q):
    return (q ** (n + 1) - 1) // (q - 1)


def _normalize(F, v):
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise ValidationError("zero vector has no projective point")


def _projective_points(F, n):
    """All normalized vectors of F^(n+1), lexicographic by encoding."""
    pts = []
    q = F.q

    def rec(prefix):
        if len(prefix) == n + 1:
            if any(prefix):
                pts.append(tuple(prefix))
            return
        for x in range(q):
            rec(prefix + [x])

    rec([])
    seen = set()
    out = []
    for v in pts:
        w = _normalize(F, v)
        if w not in seen:
            seen.add(w)
            out.append(v if v == w else None)
    # keep only normalized representatives, in lexicographic order
    out = [v for v in pts if _normalize(F, v) == v]
    return tuple(out)


@dataclass
class PdetData:
    """Order data for the projective determinant of a linear group."""
    q: int
    n: int
    g: int            # gcd(n+1, q-1)
    c: int            # det of the linear part is <mu^c>
    pdet_order: int   # g // c


class ProjectiveAction:
    """A matrix/semilinear group acting on the points of P_n(q)."""

    def __init__(self, family, n, field, group, points, point_index):
        self.family = family
        self.n = n
        self.field = field
        self.group = group
        self.points = points
        self.point_index = point_index
        self.alpha = [self.point_of_vector(tuple(1 if j == i else 0
                                                 for j in range(n + 1)))
                      for i in range(n + 1)]

    @property
    def degree(self):
        return len(self.points)

    def point_of_vector(self, v):
        return self.point_index[_normalize(self.field, v)]

    def perm_of_matrix(self, M, frob_power=0):
        """Permutation of P_n(q) induced by v -> M * v^(p^frob_power)."""
        F = self.field
        img = []
        for v in self.points:
            w = v if frob_power == 0 else tuple(F.frobenius(x, frob_power)
                                                for x in v)
            img.append(self.point_index[_normalize(F, gf.mat_vec(F, M, w))])
        return Permutation(img)

    def subgroup_from_matrices(self, mats, order_hint=None, semilinear=(),
                               seed=0):
        gens = [self.perm_of_matrix(M) for M in mats]
        gens += [self.perm_of_matrix(M, fp) for (M, fp) in semilinear]
        return PermGroup(self.degree, gens, order_hint=order_hint, seed=seed)

    def __repr__(self):
        return (f"ProjectiveAction({self.family}, n={self.n}, "
                f"q={self.field.q}, degree={self.degree})")


def _sl_generators(F, m):
    """Chevalley generators: adjacent transvections over a basis of F."""
    gens = []
    for i in range(m - 1):
        for a in range(F.e):
            val = F.pow(F.mu, a) if F.q > 2 else 1
            gens.append(gf.elementary(F, m, i, i + 1, val))
            gens.append(gf.elementary(F, m, i + 1, i, val))
    return gens


def projective_image_order(family, n, field):
    q, e = field.q, field.e
    m = n + 1
    if family in ("SL", "ZSL"):
        return psl_order(m, q)
    if family == "GL":
        return pgl_order(m, q)
    if family == "SigmaL":
        return psl_order(m, q) * e
    if family == "GammaL":
        return pgl_order(m, q) * e
    raise ValidationError(f"unknown family {family!r}")


def projective_group(family, n, field, seed=0):
    """The permutation action of the chosen group on P_n(q)."""
    if family not in FAMILIES:
        raise ValidationError(f"family must be one of {FAMILIES}")
    if n < 1:
        raise ValidationError("n must be >= 1")
    F = field if isinstance(field, gf.FiniteField) else gf.GF(field)
    count = projective_point_count(n, F.q)
    if count > DEFAULT_DEGREE_BOUND:
        raise ResourceLimitError(f"P_{n}({F.q}) has {count} points")
    points = _projective_points(F, n)
    assert len(points) == count
    point_index = {v: i for i, v in enumerate(points)}
    m = n + 1
    mats = _sl_generators(F, m)
    if family in ("GL", "GammaL"):
        mats.append(_diag_mu(F, m))
    if family == "ZSL":
        mats.append(gf.scalar_matrix(F, m, F.mu))
    act = ProjectiveAction(family, n, F, None, points, point_index)
    gens = [act.perm_of_matrix(M) for M in mats]
    if family in ("SigmaL", "GammaL") and F.e > 1:
        gens.append(act.perm_of_matrix(gf.mat_identity(F, m), frob_power=1))
    order = projective_image_order(family, n, F)
    act.group = PermGroup(count, gens, order_hint=order, seed=seed)
    return act


def _diag_mu(F, m):
    rows = [list(r) for r in gf.mat_identity(F, m)]
    rows[0][0] = F.mu
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# named subgroups of the point stabilizer (n >= 2)

def special_subgroups(act: ProjectiveAction, seed=0):
    """The subgroups W, M, Z and the swap element s of the block stabilizer.

    W fixes alpha_0 and V/alpha_0 pointwise (elementary abelian of order q^n);
    M = W . ZSL_n(q); s swaps v_0 and v_1 and negates v_2.  All are returned
    in the projective permutation action, where Z is trivial.
    """
    n, F = act.n, act.field
    if n < 2:
        raise UnsupportedError("special subgroups need n >= 2")
    m = n + 1
    q = F.q
    w_mats = [gf.elementary(F, m, 0, j, F.pow(F.mu, a) if q > 2 else 1)
              for j in range(1, m) for a in range(F.e)]
    W = act.subgroup_from_matrices(w_mats, order_hint=q ** n, seed=seed)
    sl_mats = []
    for i in range(1, m - 1):
        for a in range(F.e):
            val = F.pow(F.mu, a) if q > 2 else 1
            sl_mats.append(gf.elementary(F, m, i, i + 1, val))
            sl_mats.append(gf.elementary(F, m, i + 1, i, val))
    m_order = (q ** n) * sl_order(n, q) * (q - 1) // gcd_z_cap(n, q)
    M = act.subgroup_from_matrices(w_mats + sl_mats +
                                   [gf.scalar_matrix(F, m, F.mu)],
                                   order_hint=None, seed=seed)
    Z = act.subgroup_from_matrices([gf.scalar_matrix(F, m, F.mu)], seed=seed)
    s_rows = [[0] * m for _ in range(m)]
    s_rows[0][1] = 1
    s_rows[1][0] = 1
    for i in range(2, m):
        s_rows[i][i] = F.neg(1) if i == 2 else 1
    s = act.perm_of_matrix(tuple(tuple(r) for r in s_rows))
    block_stab = act.group.stabilizer(act.alpha[0])
    pair_stab = block_stab.stabilizer(act.alpha[1])
    return {
        "W": W,
        "M": M,
        "Z": Z,
        "s": s,
        "block_stab": block_stab,
        "pair_stab": pair_stab,
    }


def gcd_z_cap(n, q):
    """|Z ∩ (W . ZSL_n)| correction is trivial projectively; kept for clarity."""
    return 1


def pdet_order(family, n, field):
    """Order of the projective determinant group of the linear part."""
    F = field if isinstance(field, gf.FiniteField) else gf.GF(field)
    if family not in FAMILIES:
        raise ValidationError(f"family must be one of {FAMILIES}")
    g = gcd(n + 1, F.q - 1)
    c = 1 if family in ("GL", "GammaL") else g
    return PdetData(q=F.q, n=n, g=g, c=c, pdet_order=g // c)


def frobenius(act: ProjectiveAction, power):
    """The permutation induced by the field automorphism x -> x^(p^power)."""
    F = act.field
    if F.e == 1:
        raise UnsupportedError("prime field has no nontrivial Frobenius")
    if power % F.e == 0:
        raise ValidationError("power must be nonzero modulo e")
    return act.perm_of_matrix(gf.mat_identity(F, act.n + 1),
                              frob_power=power % F.e)


# ---------------------------------------------------------------------------
# Singer cycles

def singer_matrix(F):
    """A 2x2 matrix over F of multiplicative order q^2 - 1.

    Companion matrix of an irreducible quadratic chosen deterministically
    (smallest (t, s) in lexicographic order with the order requirement).
    """
    q = F.q
    target = q * q - 1
    for t in range(q):
        for s in range(q):
            C = ((0, s), (1, t))
            if gf.mat_det(F, C) == 0:
                continue
            if _matrix_order(F, C, target) == target:
                return C
    raise ValidationError("no Singer cycle found (field broken?)")


def _matrix_order(F, A, bound):
    I = gf.mat_identity(F, len(A))
    M = A
    for k in range(1, bound + 1):
        if M == I:
            return k
        M = gf.mat_mul(F, M, A)
    return bound + 1


def plane_frobenius_matrix(F, C):
    """The involution Y in GL_2(q) with Y C Y^-1 = C^q and Y^2 = 1.

    In the basis (1, theta) of F_{q^2} over F_q with theta the companion root,
    Y is the q-power Frobenius of the quadratic extension, which is F-linear.
    """
    q = F.q
    P = gf.mat_pow(F, C, q)
    beta = P[1][0]
    alpha = P[0][0]
    Y = ((1, alpha), (0, beta))
    if gf.mat_mul(F, Y, Y) != gf.mat_identity(F, 2):
        raise ValidationError("plane Frobenius is not an involution")
    if gf.mat_mul(F, Y, C) != gf.mat_mul(F, P, Y):
        raise ValidationError("plane Frobenius does not twist the Singer cycle")
    return Y


def embed_plane(F, A2, m):
    """Embed a 2x2 matrix as the block on <v_1, v_2>, fixing v_0 and the rest."""
    rows = [list(r) for r in gf.mat_identity(F, m)]
    for i in range(2):
        for j in range(2):
            rows[1 + i][1 + j] = A2[i][j]
    return tuple(tuple(r) for r in rows)


def singer_subgroup(act: ProjectiveAction, seed=0):
    """Image of a Singer cycle of GL_2(q), acting on the q^2-1 nonzero
    vectors of the plane <v_1, v_2> (a regular cyclic action)."""
    if act.n != 2:
        raise UnsupportedError("Singer subgroup construction needs n = 2")
    F = act.field
    C = singer_matrix(F)
    vectors = [(a, b) for a in range(F.q) for b in range(F.q)
               if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}
    img = [index[tuple(gf.mat_vec(F, C, v))] for v in vectors]
    return PermGroup(len(vectors), [img], order_hint=F.q ** 2 - 1, seed=seed)
