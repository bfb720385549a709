"""Construction of the catalog's 2-transitive actions by name.

Projective families are built from matrices; the Mathieu groups load from
bundled generator files that are re-validated on every load (degree, exact
order through the stabilizer chain, transitivity degree).  Derived actions
(coset spaces like the 11-point PSL2(11) action) are produced by seeded
subgroup searches, so they are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd

from . import matgrp
from .errors import ValidationError
from .gf import GF
from .lattice import random_subgroup_search
from .perms import PermGroup, Permutation, coset_action
from .classify import normalize_name, resolve_group

MATHIEU_META = {
    "M11": (11, 7920, 4),
    "M12": (12, 95040, 5),
    "M22": (22, 443520, 3),
    "M22:2": (22, 887040, 3),
    "M23": (23, 10200960, 4),
    "M24": (24, 244823040, 5),
}

_FILE_OF = {"M11": "m11.gens", "M12": "m12.gens", "M22": "m22.gens",
            "M22:2": "m22x2.gens", "M23": "m23.gens", "M24": "m24.gens"}


@dataclass
class NamedAction:
    """A 2-transitive permutation action from the catalog.

    `group` acts on {0..degree-1}; the block stabilizer of the classification
    is the stabilizer of `base_point`.
    """
    name: str
    group: PermGroup
    base_point: int = 0
    projective: "matgrp.ProjectiveAction | None" = None

    @property
    def degree(self):
        return self.group.degree

    def block_stabilizer(self):
        return self.group.stabilizer(self.base_point)


def parse_gens_file(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    header = dict(kv.split("=") for kv in lines[0].split())
    degree = int(header["degree"])
    order = int(header["order"])
    trans = int(header.get("transitivity", 0))
    gens = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    for g in gens:
        if len(g) != degree:
            raise ValidationError("generator line has wrong length")
    return header.get("group", "?"), degree, order, trans, gens


def format_gens_file(name, degree, order, transitivity, gens):
    out = [f"group={name} degree={degree} order={order} "
           f"transitivity={transitivity}"]
    for g in gens:
        out.append(" ".join(str(x) for x in g))
    return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def mathieu(name):
    """A bundled Mathieu group, fully re-validated at load."""
    if name not in MATHIEU_META:
        raise ValidationError(f"not a bundled group: {name}")
    degree, order, trans = MATHIEU_META[name]
    text = resources.files("blocktrans").joinpath(
        "data/" + _FILE_OF[name]).read_text()
    gname, fdeg, forder, ftrans, gens = parse_gens_file(text)
    if (fdeg, forder, ftrans) != (degree, order, trans):
        raise ValidationError(f"{name} data header mismatch")
    g = PermGroup.from_generators(degree, gens, order_hint=order)
    if g.order() != order:
        raise ValidationError(f"{name} generator data has wrong order")
    if g.transitivity_degree() != trans:
        raise ValidationError(f"{name} generator data has wrong transitivity")
    return g


def psl2_action(family, q, extra_frobenius_power=None, seed=0):
    """Permutation action on the projective line P_1(q), with the standard
    point order (infinity first, then the field elements)."""
    act = matgrp.projective_group(family, 1, GF(q), seed=seed)
    return act


@lru_cache(maxsize=None)
def build_action(name, seed=0):
    """NamedAction for a catalog name."""
    name = normalize_name(name)
    if name in MATHIEU_META:
        return NamedAction(name, mathieu(name))
    if name == "M10":
        act = matgrp.projective_group("GL", 1, GF(9), seed=seed)
        f = matgrp.frobenius(act, 1)
        mu_mat = ((GF(9).mu, 0), (0, 1))
        delta = act.perm_of_matrix(mu_mat)
        sl = matgrp.projective_group("SL", 1, GF(9), seed=seed)
        gens = list(sl.group.generators) + [delta * Permutation(f.images)]
        g = PermGroup(10, gens, order_hint=720, seed=seed)
        if g.order() != 720:
            raise ValidationError("M10 construction failed")
        return NamedAction("M10", g)
    if name == "M11@12":
        m11 = mathieu("M11")
        sub = random_subgroup_search(m11, 660, seed=7)
        cs = coset_action(m11, sub)
        return NamedAction(name, cs.action)
    if name == "PSL2(11)@11":
        act = matgrp.projective_group("SL", 1, GF(11), seed=seed)
        sub = random_subgroup_search(act.group, 60, seed=3)
        cs = coset_action(act.group, sub)
        return NamedAction(name, cs.action)
    if name == "Alt(7)@15":
        a7 = PermGroup.alternating(7)
        sub = random_subgroup_search(a7, 168, seed=5)
        cs = coset_action(a7, sub)
        return NamedAction(name, cs.action)
    if name == "PGammaL2(8)@28":
        act = matgrp.projective_group("GammaL", 1, GF(8), seed=seed)
        sub = random_subgroup_search(act.group, 54, seed=1)
        cs = coset_action(act.group, sub)
        return NamedAction(name, cs.action)
    if name.startswith(("Alt(", "Sym(")):
        d = int(name[4:-1])
        g = (PermGroup.alternating if name.startswith("Alt") else
             PermGroup.symmetric)(d)
        return NamedAction(name, g)
    canon, kind, params = resolve_group(name)
    if kind.startswith("psl"):
        n = int(kind[3:])
        fam = {"ZSL": "SL", "GL": "GL"}[params.family]
        if params.e_G > 1:
            fam = {"SL": "SigmaL", "GL": "GammaL"}[fam]
        act = matgrp.projective_group(fam, n, GF(params.q), seed=seed)
        return NamedAction(canon, act.group, base_point=act.alpha[0],
                           projective=act)
    if kind == "rank1" and params is not None and params.family == "PSL2":
        famname = {"PSL": "SL", "PGL": "GL", "PSigmaL": "SigmaL",
                   "PGammaL": "GammaL"}
        for pref, fam in famname.items():
            if name.startswith(pref + "2"):
                act = matgrp.projective_group(fam, 1, GF(params.q), seed=seed)
                return NamedAction(canon, act.group, projective=act)
    raise ValidationError(f"no construction for {name!r}")


def rank1_extension_action(q, e_G, block_size, seed=0):
    """The block-size-n extension of PSL2(q) x| <field automorphism of order
    e_G> (q even, t_G = 1): the coset action over P<x^n, x y>, with the block
    fibration over the projective line."""
    if q % 2:
        raise ValidationError("only the even-q construction is bundled")
    p, e = _split(q)
    act = matgrp.projective_group("SL", 1, GF(q), seed=seed)
    F = GF(q)
    frob_power = e // e_G
    f = matgrp.frobenius(act, frob_power)
    x0 = act.perm_of_matrix(((F.mu, 0), (0, 1)))
    G = PermGroup(act.degree, list(act.group.generators) + [f],
                  order_hint=act.group.order() * e_G, seed=seed)
    inf = act.point_of_vector((1, 0))
    zero = act.point_of_vector((0, 1))
    # unipotent part: z -> z + c
    P_mats = [((1, 0), (F.pow(F.mu, a), 1)) for a in range(F.e)]
    n = block_size
    gens = [act.perm_of_matrix(M) for M in P_mats]
    gens += [x0 ** n, x0 * f]
    L = PermGroup(act.degree, gens, seed=seed)
    return G, L, act


def _split(q):
    for pp in range(2, q + 1):
        if q % pp == 0:
            e = 0
            while q % pp == 0:
                q //= pp
                e += 1
            return pp, e
    raise ValidationError("bad q")
