"""Embedded catalog data: the two result tables, the reference list of
almost simple 2-transitive actions this library handles, and the routes by
which families without proper extensions are eliminated.

Each table row carries its verification status: "brute" rows are re-verified
end to end by the bundled certificates, "order" rows by exact arithmetic only.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ExceptionalRow:
    table: str          # "Table1" or "Table2"
    row: int            # 1-based within its table
    group: str          # canonical catalog name
    stab_structure: str
    pair_structure: str
    pair_order: int
    omega0: int
    block_size: int
    kind: str           # "exceptional" | "PD" | "PF"
    pf_params: tuple | None = None
    verification: str = "brute"     # "brute" | "order"
    sharp: bool = False

    @property
    def ref(self):
        return f"{self.table}:row{self.row}"


# The seventeen exceptional actions.  Row 13's pair order is 9 (= C3 x C3):
# the double-coset order formula |L|^2/(|G|-|G(a0)|) = 389880^2/16889601600
# forces it, with every other column cross-checked.
TABLE1 = (
    ExceptionalRow("Table1", 1, "M11", "Alt(6)", "C3^2:C2", 18, 11, 2,
                   "exceptional"),
    ExceptionalRow("Table1", 2, "PSL5(2)", "W:Alt(7)", "PSL3(2)", 168, 31, 8,
                   "exceptional"),
    ExceptionalRow("Table1", 3, "PSL3(5)", "W:(SL2(3):C4)", "C4^2", 16, 31, 5,
                   "exceptional"),
    ExceptionalRow("Table1", 4, "PSL3(5)", "W:(SL2(3):C2)", "C2^2", 4, 31, 10,
                   "exceptional"),
    ExceptionalRow("Table1", 5, "PSL3(5)", "W:SL2(3)", "1", 1, 31, 20,
                   "exceptional", sharp=True),
    ExceptionalRow("Table1", 6, "PSL3(7)", "W:(SL2(3).C2)", "C3", 3, 57, 14,
                   "exceptional"),
    ExceptionalRow("Table1", 7, "PSL3(9)", "W:(SL2(5).C4)", "Sym(3)^2", 36,
                   91, 12, "exceptional"),
    ExceptionalRow("Table1", 8, "PGammaL3(9)", "W:(SL2(5).D8)",
                   "Sym(3)^2 x C2", 72, 91, 12, "exceptional"),
    ExceptionalRow("Table1", 9, "PSL3(11)", "W:(SL2(5) x C5)", "C5^2", 25,
                   133, 22, "exceptional"),
    ExceptionalRow("Table1", 10, "PSL3(11)", "W:SL2(5)", "1", 1, 133, 110,
                   "exceptional", sharp=True),
    ExceptionalRow("Table1", 11, "PSL3(11)", "W:(GL2(3) x C5)", "C2^2", 4,
                   133, 55, "exceptional"),
    ExceptionalRow("Table1", 12, "PSL3(11)", "W:(SL2(3) x C5)", "1", 1, 133,
                   110, "exceptional", sharp=True),
    ExceptionalRow("Table1", 13, "PGL3(19)", "W:(SL2(5) x C9)", "C3^2", 9,
                   381, 114, "exceptional", verification="order"),
    ExceptionalRow("Table1", 14, "PSL3(23)", "W:(SL2(3).C2 x C11)", "1", 1,
                   553, 506, "exceptional", verification="order", sharp=True),
    ExceptionalRow("Table1", 15, "PSL3(29)", "W:((SL2(5):C2) x C7)", "C2^2",
                   4, 871, 406, "exceptional", verification="order"),
    ExceptionalRow("Table1", 16, "PSL3(29)", "W:(SL2(5) x C7)", "1", 1, 871,
                   812, "exceptional", verification="order", sharp=True),
    ExceptionalRow("Table1", 17, "PSL3(59)", "W:(SL2(5) x C29)", "1", 1, 3541,
                   3422, "exceptional", verification="order", sharp=True),
)

# Complete list of proper extensions with socle PSL3(q), 2 <= q <= 5.
# Pair orders here are derived from the double-coset order formula.
TABLE2 = (
    ExceptionalRow("Table2", 1, "PSL3(2)", "W:C3", "", 1, 7, 2, "PF",
                   pf_params=(1, 2), sharp=True),
    ExceptionalRow("Table2", 2, "PSL3(3)", "W:SL2(3)", "", 9, 13, 2, "PD"),
    ExceptionalRow("Table2", 3, "PSL3(3)", "W:GammaL1(9)", "", 4, 13, 3,
                   "PF", pf_params=(1, 1)),
    ExceptionalRow("Table2", 4, "PSL3(3)", "W:C8", "", 1, 13, 6, "PF",
                   pf_params=(1, 2), sharp=True),
    ExceptionalRow("Table2", 5, "PSL3(3)", "W:Q8", "", 1, 13, 6, "PF",
                   pf_params=(2, 1), sharp=True),
    ExceptionalRow("Table2", 6, "PGL3(4)", "W:(C15:C2)", "", 4, 21, 6, "PF",
                   pf_params=(1, 1)),
    ExceptionalRow("Table2", 7, "PGL3(4)", "W:C15", "", 1, 21, 12, "PF",
                   pf_params=(1, 2), sharp=True),
    ExceptionalRow("Table2", 8, "PGammaL3(4)", "W:GammaL1(16)", "", 8,
                   21, 6, "PF", pf_params=(1, 1)),
    ExceptionalRow("Table2", 9, "PSL3(5)", "W:SL2(5).C2", "", 100,
                   31, 2, "PD"),
    ExceptionalRow("Table2", 10, "PSL3(5)", "W:SL2(5)", "", 25, 31, 4,
                   "PD"),
    ExceptionalRow("Table2", 11, "PSL3(5)", "W:GammaL1(25)", "", 4, 31, 10,
                   "PF", pf_params=(1, 1)),
    ExceptionalRow("Table2", 12, "PSL3(5)", "W:C24", "", 1, 31, 20, "PF",
                   pf_params=(1, 2), sharp=True),
    ExceptionalRow("Table2", 13, "PSL3(5)", "W:(C3:C8)", "", 1, 31, 20, "PF",
                   pf_params=(2, 1), sharp=True),
    ExceptionalRow("Table2", 14, "PSL3(5)", "W:(SL2(3):C4)", "C4^2", 16, 31,
                   5, "exceptional"),
    ExceptionalRow("Table2", 15, "PSL3(5)", "W:(SL2(3):C2)", "C2^2", 4, 31,
                   10, "exceptional"),
    ExceptionalRow("Table2", 16, "PSL3(5)", "W:SL2(3)", "1", 1, 31, 20,
                   "exceptional", sharp=True),
)


@dataclass(frozen=True)
class NonexistenceEntry:
    name: str
    degree: int
    order_g: int
    order_stab: int
    route: str      # "symmetric-sweep" | "filter" | "filter+simple" |
                    # "filter+targeted" | "filter+sylow" | "data"
    note: str = ""


def _mathieu_orders():
    return {
        "M11": 7920, "M12": 95040, "M22": 443520, "M22:2": 887040,
        "M23": 10200960, "M24": 244823040,
    }


NONEXISTENCE = (
    NonexistenceEntry("PSL2(11)@11", 11, 660, 60, "filter",
                      "only the improper order survives the filter"),
    NonexistenceEntry("Alt(7)@15", 15, 2520, 168, "filter+simple",
                      "filter forces index <= 2 in a perfect stabilizer"),
    NonexistenceEntry("PGammaL2(8)@28", 28, 1512, 54, "filter",
                      "only the improper order survives the filter"),
    NonexistenceEntry("M11@12", 12, 7920, 660, "filter+simple",
                      "filter forces index <= 2 in a perfect stabilizer"),
    NonexistenceEntry("M12", 12, 95040, 7920, "filter+targeted",
                      "one candidate up to conjugacy; its action fails"),
    NonexistenceEntry("M22", 22, 443520, 20160, "filter+sylow",
                      "no subgroup holds a Sylow 7 and an order 5 element"),
    NonexistenceEntry("M22:2", 22, 887040, 40320, "filter+sylow",
                      "normal-part exclusion plus the M22 sweep"),
    NonexistenceEntry("M23", 23, 10200960, 443520, "filter+sylow",
                      "no subgroup holds a Sylow 11 and the required part"),
    NonexistenceEntry("M24", 24, 244823040, 10200960, "filter+sylow",
                      "no subgroup holds a Sylow 23 and the required part"),
    NonexistenceEntry("HS", 176, 44352000, 252000, "data",
                      "largest non-derived maximal has order 5040; filter"),
    NonexistenceEntry("Co3", 276, 495766656000, 1796256000, "data",
                      "order-11 transitivity obstruction; filter"),
    NonexistenceEntry("Sp6(2)+", 28, 1451520, 51840, "data",
                      "pair stabilizer splits off the swap involution"),
    NonexistenceEntry("Sp6(2)-", 36, 1451520, 40320, "data",
                      "pair stabilizer splits off the swap involution"),
    NonexistenceEntry("Sp8(2)+", 120, 47377612800, 394813440, "data",
                      "pair stabilizer splits off the swap involution"),
    NonexistenceEntry("Sp8(2)-", 136, 47377612800, 348364800, "data",
                      "pair stabilizer splits off the swap involution"),
)


def table1_rows(group=None):
    return [r for r in TABLE1 if group is None or r.group == group]


def table2_rows(group=None):
    return [r for r in TABLE2 if group is None or r.group == group]


def nonexistence_entry(name):
    for e in NONEXISTENCE:
        if e.name == name:
            return e
    return None
