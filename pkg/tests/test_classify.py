import pytest

from blocktrans.arith import LieParams
from blocktrans.classify import (Action, ClassificationReport, PslParams,
                                 exceptional_lookup, full_classify,
                                 k3_classify, pd_block_sizes, pf_candidates,
                                 reject_affine, resolve_group)
from blocktrans.errors import ValidationError
from blocktrans.gf import GF
from blocktrans.tables import TABLE1, TABLE2, table2_rows


def test_pd_block_sizes_examples():
    assert pd_block_sizes(2, "ZSL", GF(5)) == [2, 4]
    assert pd_block_sizes(2, "GL", GF(4)) == []
    assert pd_block_sizes(3, "GL", GF(3)) == []
    # the determinant subtlety: no PD sizes at q = 4 for the SL-type family
    assert pd_block_sizes(2, "ZSL", GF(4)) == []


def test_pf_candidates_examples():
    out = pf_candidates(PslParams(q=3, p=3, e=1, family="ZSL", t_G=1, e_G=1))
    assert [(dx, dy, b) for (dx, dy, b, _, _) in out] == \
        [(1, 1, 3), (1, 2, 6), (2, 1, 6)]
    assert pf_candidates(PslParams(q=4, p=2, e=2, family="ZSL",
                                   t_G=3, e_G=1)) == []
    out = pf_candidates(PslParams(q=5, p=5, e=1, family="ZSL", t_G=1, e_G=1))
    assert [(b, pair, sharp) for (_, _, b, pair, sharp) in out] == \
        [(10, 4, False), (20, 1, True), (20, 1, True)]


def test_full_classify_matches_table2():
    for gname in ("PSL3(2)", "PSL3(3)", "PSL3(4)", "PSigmaL3(4)", "PGL3(4)",
                  "PGammaL3(4)", "PSL3(5)", "PGammaL3(5)"):
        rep = full_classify(gname)
        got = sorted((a.kind, a.block_size, a.pf_params) for a in rep.actions)
        want = sorted((r.kind, r.block_size, r.pf_params)
                      for r in table2_rows(rep.group))
        assert got == want, gname


def test_full_classify_rank1():
    rep = full_classify("M10")
    assert rep.case == "rank1"
    assert [(a.block_size, a.classes) for a in rep.actions] == [(2, 2)]
    assert full_classify("PGammaL2(8)").case == "none"
    assert full_classify("PGammaL2(9)").case == "none"
    rep = full_classify(LieParams("PSL2", 2, 6, t_G=1, e_G=3))
    assert [(a.block_size, a.classes) for a in rep.actions] == [(3, 2)]
    rep = full_classify(LieParams("PSU3", 2, 21, t_G=1, e_G=14))
    assert [(a.block_size, a.classes) for a in rep.actions] == [(7, 6)]


def test_full_classify_nonexistence_cases():
    for name in ("Sym(9)", "Alt(11)", "Sp8(2)+", "M12", "M22", "M23", "M24",
                 "HS", "Co3", "PSL2(11)@11", "Alt(7)@15", "PGammaL2(8)@28"):
        assert full_classify(name).case == "none", name


def test_full_classify_m11():
    rep = full_classify("M11")
    assert rep.case == "exceptional"
    assert rep.actions[0].block_size == 2
    assert rep.actions[0].pair_order == 18


def test_full_classify_psl52():
    rep = full_classify("PSL5(2)")
    assert [(a.kind, a.block_size, a.pair_order) for a in rep.actions] == \
        [("exceptional", 8, 168)]


def test_exceptional_lookup():
    rows = exceptional_lookup("M11")
    assert len(rows) == 1 and rows[0].pair_order == 18 and rows[0].omega0 == 11
    rows = exceptional_lookup("PSL3(29)")
    assert sorted(r.block_size for r in rows) == [406, 812]
    assert exceptional_lookup("PSL4(3)") == []
    rows = exceptional_lookup("PGammaL3(19)")
    assert len(rows) == 1 and rows[0].block_size == 114


def test_table1_pair_orders_match_order_formula():
    # |L|^2 / (|G| - |G(a0)|) for every row, exact integer arithmetic
    from blocktrans.matgrp import pgl_order, psl_order
    orders = {
        "M11": (7920, 11), "PSL5(2)": (psl_order(5, 2), 31),
        "PSL3(5)": (psl_order(3, 5), 31), "PSL3(7)": (psl_order(3, 7), 57),
        "PSL3(9)": (psl_order(3, 9), 91),
        "PGammaL3(9)": (2 * psl_order(3, 9), 91),
        "PSL3(11)": (psl_order(3, 11), 133),
        "PGL3(19)": (pgl_order(3, 19), 381),
        "PSL3(23)": (psl_order(3, 23), 553),
        "PSL3(29)": (psl_order(3, 29), 871),
        "PSL3(59)": (psl_order(3, 59), 3541),
    }
    for row in TABLE1:
        order_g, degree = orders[row.group]
        assert order_g % degree == 0
        stab = order_g // degree
        assert stab % row.block_size == 0
        l_order = stab // row.block_size
        num = l_order * l_order
        den = order_g - stab
        assert num % den == 0, row
        assert num // den == row.pair_order, row


def test_sharp_rows():
    sharp_rows = [r for r in TABLE1 if r.sharp]
    assert len(sharp_rows) == 6
    assert all(r.pair_order == 1 for r in sharp_rows)
    assert sorted({r.group for r in sharp_rows}) == \
        ["PSL3(11)", "PSL3(23)", "PSL3(29)", "PSL3(5)", "PSL3(59)"]


def test_k3_verdict():
    assert "no nontrivial blocks" in k3_classify()


def test_reject_affine():
    with pytest.raises(ValidationError):
        reject_affine("AGL1(8)")


def test_report_json_round_trip():
    rep = full_classify("PSL3(5)")
    again = ClassificationReport.loads(rep.dumps())
    assert again.to_json() == rep.to_json()


def test_resolve_group_names():
    assert resolve_group("PGammaL3(19)")[0] == "PGL3(19)"
    assert resolve_group("PSigmaL3(9)")[0] == "PGammaL3(9)"
    assert resolve_group("PGL3(5)")[0] == "PSL3(5)"
    assert resolve_group("PΓL3(9)")[0] == "PGammaL3(9)"
    with pytest.raises(ValidationError):
        resolve_group("XYZ")
