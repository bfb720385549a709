"""The classification oracle: all proper block-transitive extensions of a
named 2-transitive group, assembled from the determinant criterion, the
plane-field criterion, the rank-1 divisor formulas, and the embedded tables.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import gcd

from . import tables
from .arith import LieParams, RankOneReport, divisors, rank1_classify
from .errors import ValidationError
from .matgrp import pdet_order, pgl_order, psl_order, projective_point_count

K3_VERDICT = "no nontrivial blocks exist"


@dataclass
class Action:
    kind: str               # "PD" | "PF" | "rank1" | "exceptional"
    block_size: int
    classes: int | None     # conjugacy class count where known
    sharp: bool
    pair_order: int | None
    source: str             # "Table1:rowN" | "Table2:rowN" | "formula"
    pf_params: tuple | None = None

    def to_json(self):
        return {
            "type": self.kind,
            "block_size": self.block_size,
            "classes": self.classes,
            "sharp": self.sharp,
            "pair_order": self.pair_order,
            "source": self.source,
            "pf_params": list(self.pf_params) if self.pf_params else None,
        }


@dataclass
class ClassificationReport:
    group: str
    case: str               # "PD" | "PF" | "rank1" | "exceptional" | "mixed" | "none"
    actions: list = field(default_factory=list)
    k3_verdict: str = K3_VERDICT
    eliminated_by: str = ""

    def to_json(self):
        return {
            "group": self.group,
            "case": self.case,
            "k3": self.k3_verdict,
            "eliminated_by": self.eliminated_by or None,
            "actions": [a.to_json() for a in self.actions],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @staticmethod
    def loads(text):
        data = json.loads(text)
        rep = ClassificationReport(group=data["group"], case=data["case"],
                                   k3_verdict=data["k3"],
                                   eliminated_by=data["eliminated_by"] or "")
        for a in data["actions"]:
            rep.actions.append(Action(
                kind=a["type"], block_size=a["block_size"],
                classes=a["classes"], sharp=a["sharp"],
                pair_order=a["pair_order"], source=a["source"],
                pf_params=tuple(a["pf_params"]) if a["pf_params"] else None))
        return rep


def k3_classify():
    """Verdict for k >= 3: finite block-faithful actions have no nontrivial
    blocks; constructive small-instance cross checks live in blockact."""
    return K3_VERDICT


# ---------------------------------------------------------------------------
# PD and PF criteria

def pd_block_sizes(n, family, field):
    """Proper PD block sizes: divisors b > 1 of (q-1)/c coprime to the
    projective determinant order g/c, where det of the linear part is
    <mu^c>."""
    if n < 2:
        raise ValidationError("PD actions need projective dimension >= 2")
    data = pdet_order(family, n, field)
    q = data.q
    top = (q - 1) // data.c
    return [b for b in divisors(top)
            if b > 1 and gcd(b, data.pdet_order) == 1]


@dataclass
class PslParams:
    """Catalog parameters for a group with socle PSL3(q) (n = 2)."""
    q: int
    p: int
    e: int
    family: str      # linear part: SL-type or GL-type ("ZSL" | "GL")
    t_G: int
    e_G: int
    r_G: int = 0

    @property
    def t(self):
        return 3 if (self.q - 1) % 3 == 0 else 1


def pf_candidates(params: PslParams):
    """Plane-field candidates (d_x, d_y, block_size, pair_order, sharp).

    d_x = d_y = 1 when the induced field automorphism order is even; d_x = 1
    in characteristic 2; for t_G = 3 candidates exist only when r_G != 0,
    3 | e_G and p^(e/e_G) = 1 mod 3.  Block size d_x d_y q(q-1)/2; the pair
    stabilizer order is 4 e_G / (d^2 t_G), and the action is sharp exactly
    when e_G = t_G with d = 2.
    """
    q, p, e_G, t_G = params.q, params.p, params.e_G, params.t_G
    if t_G == 3:
        if not (params.r_G != 0 and e_G % 3 == 0
                and pow(p, params.e // e_G, 3) == 1):
            return []
    cands = [(1, 1), (1, 2), (2, 1)]
    if e_G % 2 == 0:
        cands = [(1, 1)]
    if p == 2:
        cands = [c for c in cands if c[0] == 1]
    out = []
    for (dx, dy) in cands:
        d = dx * dy
        block = d * q * (q - 1) // 2
        if block < 2:
            continue
        num = 4 * e_G
        if num % (d * d * t_G):
            continue
        pair = num // (d * d * t_G)
        sharp = (e_G == t_G and d == 2)
        out.append((dx, dy, block, pair, sharp))
    return out


# ---------------------------------------------------------------------------
# name grammar and the catalog

_NAME_RE = re.compile(
    r"^(?P<fam>P(?:SL|GL|SigmaL|GammaL|SU|GU)|Sz|Ree|Alt|Sym|Sp)"
    r"(?P<dim>\d*)\((?P<q>\d+)\)(?P<sign>[+-]?)(?:@(?P<deg>\d+))?$")

_UNICODE = {"Γ": "Gamma", "Σ": "Sigma"}


def normalize_name(name):
    name = name.strip()
    for u, a in _UNICODE.items():
        name = name.replace(u, a)
    name = name.replace("PGammaL", "PGammaL").replace("PSigmaL", "PSigmaL")
    name = name.replace("M22.2", "M22:2").replace("M22x2", "M22:2")
    m = _NAME_RE.match(name)
    if m and m.group("fam") in ("PGL", "PGammaL"):
        # over a prime field the semilinear and linear groups coincide
        dim, q = m.group("dim"), int(m.group("q"))
        p, e = _prime_power(q)
        if e == 1 and m.group("fam") == "PGammaL":
            name = f"PGL{dim}({q})" + (f"@{m.group('deg')}" if m.group("deg") else "")
    return name


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0 and q > 1:
                q //= p
                e += 1
            if q != 1:
                raise ValidationError("q must be a prime power")
            return p, e
    raise ValidationError("q must be a prime power")


def _canonical_table_name(fam, dim, q):
    # collapse coincidences: PSL = PGL when gcd(dim, q-1) = 1, and the
    # semilinear decorations vanish over a prime field
    p, e = _prime_power(q)
    g = gcd(dim, q - 1)
    if e == 1 and fam == "PGammaL":
        fam = "PGL"
    if e == 1 and fam == "PSigmaL":
        fam = "PSL"
    if g == 1:
        if fam == "PGL":
            fam = "PSL"
        elif fam == "PSigmaL":
            fam = "PGammaL"
    return f"{fam}{dim}({q})"


def resolve_group(name):
    """Parse a catalog name into a structured description."""
    name = normalize_name(name)
    plain = {"M10": ("rank1", LieParams("PSL2", 3, 2, t_G=2, e_G=2, r_G=1)),
             "M11": ("m11", None),
             "M11@12": ("none", None), "M12": ("none", None),
             "M22": ("none", None), "M22:2": ("none", None),
             "M23": ("none", None), "M24": ("none", None),
             "HS": ("none", None), "Co3": ("none", None)}
    if name in plain:
        return name, plain[name][0], plain[name][1]
    m = _NAME_RE.match(name)
    if not m:
        raise ValidationError(f"unrecognized group name {name!r}")
    fam = m.group("fam")
    dim = int(m.group("dim")) if m.group("dim") else 0
    q = int(m.group("q"))
    deg = int(m.group("deg")) if m.group("deg") else None
    if fam in ("Alt", "Sym"):
        d = q
        if deg is not None and deg != d:
            return name, "none", None      # e.g. Alt(7)@15
        return name, "none", None
    if fam == "Sp":
        return name, "none", None
    p, e = _prime_power(q)
    if fam in ("Sz", "Ree"):
        lp = LieParams(fam, p, e, t_G=1, e_G=1, r_G=0)
        return name, "rank1", lp
    if fam in ("PSU", "PGU"):
        if dim != 3:
            raise ValidationError("only PSU3/PGU3 are in the catalog")
        t = 3 if (q + 1) % 3 == 0 else 1
        t_G = t if fam == "PSU" else 1
        lp = LieParams("PSU3", p, e, t_G=t_G, e_G=1, r_G=0)
        return name, "rank1", lp
    if dim == 2:
        if deg is not None:
            return name, "none", None      # PSL2(11)@11
        t = 2 if q % 2 else 1
        t_G = {"PSL": t, "PGL": 1, "PSigmaL": t, "PGammaL": 1}[fam]
        e_G = {"PSL": 1, "PGL": 1, "PSigmaL": e, "PGammaL": e}[fam]
        lp = LieParams("PSL2", p, e, t_G=t_G, e_G=e_G, r_G=0)
        return name, "rank1", lp
    if dim >= 3:
        family = {"PSL": "ZSL", "PGL": "GL", "PSigmaL": "ZSL",
                  "PGammaL": "GL"}[fam]
        e_G = e if fam in ("PSigmaL", "PGammaL") else 1
        t_full = 3 if (q - 1) % 3 == 0 else 1
        t_G = t_full if family == "ZSL" else 1
        params = PslParams(q=q, p=p, e=e, family=family, t_G=t_G, e_G=e_G)
        return _canonical_table_name(fam, dim, q), f"psl{dim - 1}", params
    raise ValidationError(f"unrecognized group name {name!r}")


def exceptional_lookup(name):
    """Rows of the embedded tables matching a catalog name (possibly empty)."""
    try:
        name, _, _ = resolve_group(name)
    except ValidationError:
        return []
    return tables.table1_rows(name) + [r for r in tables.table2_rows(name)
                                       if r.kind == "exceptional"
                                       and not tables.table1_rows(name)]


def rank1_report(params: LieParams):
    rep = rank1_classify(params)
    if rep.sharp:
        raise ValidationError("rank-1 extensions are never sharp")
    return rep


# ---------------------------------------------------------------------------
# the oracle

def full_classify(spec):
    """ClassificationReport for a catalog name or a LieParams bundle."""
    if isinstance(spec, LieParams):
        if spec.family == "PSL3":
            raise ValidationError("use the catalog name for PSL3-socle groups")
        return _rank1_case(f"{spec.family}(q={spec.q})"
                           + (f".{spec.e_G}" if spec.e_G > 1 else ""), spec)
    name, kind, params = resolve_group(spec)
    if kind == "none":
        entry = tables.nonexistence_entry(name)
        if entry is None and name.startswith(("Alt", "Sym")):
            return ClassificationReport(
                group=name, case="none",
                eliminated_by="natural symmetric/alternating action: "
                              "no covering subgroup exists")
        if entry is None:
            raise ValidationError(f"{name} is not in the catalog")
        return ClassificationReport(group=name, case="none",
                                    eliminated_by=f"{entry.route}: {entry.note}")
    if kind == "m11":
        row = tables.table1_rows("M11")[0]
        return ClassificationReport(group="M11", case="exceptional", actions=[
            Action("exceptional", row.block_size, 1, row.sharp,
                   row.pair_order, row.ref)])
    if kind == "rank1":
        return _rank1_case(name, params)
    if kind.startswith("psl"):
        n = int(kind[3:])
        return _psl_case(name, n, params)
    raise ValidationError(f"unhandled kind {kind}")


def reject_affine(name="affine socle"):
    raise ValidationError(
        f"{name}: a nontrivial abelian normal subgroup is incompatible with "
        f"a block-faithful extension (the normal subgroup criterion)")


def _rank1_case(name, lp: LieParams):
    rep = rank1_report(lp)
    actions = []
    pair_total = lp.torus_order * lp.e_G
    for bs in rep.block_sizes():
        actions.append(Action(
            "rank1", bs, rep.h[bs], False,
            pair_total // (bs * bs), "formula"))
    return ClassificationReport(group=name,
                                case="rank1" if actions else "none",
                                actions=actions,
                                eliminated_by="" if actions else
                                "divisor bound d_G = 1")


def _psl_case(name, n, params: PslParams):
    from .gf import GF
    actions = []
    field = GF(params.q)
    q = params.q
    order_g = _projective_order(params, n)
    stab = order_g // projective_point_count(n, q)
    for b in pd_block_sizes(n, params.family, field) if q > 2 else []:
        if params.e_G != 0:
            pair = (stab // b) ** 2 // (order_g - stab)
            actions.append(Action("PD", b, None, False, pair, "formula"))
    if n == 2:
        for (dx, dy, block, pair, sharp) in pf_candidates(params):
            actions.append(Action("PF", block, None, sharp, pair, "formula",
                                  pf_params=(dx, dy)))
    for row in tables.table1_rows(name):
        actions.append(Action("exceptional", row.block_size, None, row.sharp,
                              row.pair_order, row.ref))
    actions.sort(key=lambda a: (a.kind, a.block_size))
    kinds = {a.kind for a in actions}
    case = ("none" if not actions
            else kinds.pop() if len(kinds) == 1 else "mixed")
    return ClassificationReport(group=name, case=case, actions=actions,
                                eliminated_by="" if actions else
                                "no PD, PF or exceptional action exists")


def _projective_order(params: PslParams, n):
    m = n + 1
    q = params.q
    base = psl_order(m, q) if params.family == "ZSL" else pgl_order(m, q)
    return base * params.e_G


def table2_report(group_name):
    """The Table 2 rows for one group, as (kind, block_size) pairs."""
    name, _, _ = resolve_group(group_name)
    return [(r.kind, r.block_size, r.pf_params) for r in tables.table2_rows(name)]
