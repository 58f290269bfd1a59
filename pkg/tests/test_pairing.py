import csv
import io
import json
from fractions import Fraction

import pytest

from nctorus import _printed as printed
from nctorus import pairing
from nctorus.cocycles import entry
from nctorus.crossed import CATALOG, build_projection
from nctorus.pairing import (
    GAMMAS, PINNED, TwistNotInGroup, columns, component_power, generate_table, pair0, pair2, pin_convention,
    reconcile,
)
from nctorus.scalar import Coefficient

F = Fraction
TRACE_COLUMN = {
    "z3": [1] + [F(1, 3)] * 6,
    "z4": [1] + [F(1, 4)] * 6 + [F(1, 2)],
    "z6": [1] + [F(1, 6)] * 5 + [F(1, 3)] * 2 + [F(1, 2)],
}

COUNTS = {
    "z3": {"match": 44, "mismatch": 8, "paper-internal-conflict": 4, "derived-only": 0},
    "z4": {"match": 71, "mismatch": 0, "paper-internal-conflict": 1, "derived-only": 0},
    "z6": {"match": 66, "mismatch": 10, "paper-internal-conflict": 5, "derived-only": 9},
}


@pytest.fixture(scope="module")
def tables():
    return {g: generate_table(g) for g in GAMMAS}


@pytest.fixture(scope="module")
def reports(tables):
    return {g: reconcile(g, tables[g]) for g in GAMMAS}


@pytest.mark.parametrize("gamma", GAMMAS)
def test_trace_column(gamma, tables):
    assert tables[gamma].column_values("tau") == [Coefficient.const(x) for x in TRACE_COLUMN[gamma]]


@pytest.mark.parametrize("gamma", GAMMAS)
def test_identity_row(gamma, tables):
    vals = tables[gamma].row_values("1")
    assert vals[0] == Coefficient.one() and all(v.is_zero() for v in vals[1:])


@pytest.mark.parametrize("gamma", GAMMAS)
def test_degree_two_column_vanishes(gamma, tables):
    assert all(v.is_zero() for v in tables[gamma].column_values("phi"))


def test_pair2_is_not_trivially_zero():
    # sanity: the bracket is nonzero on non-projections such as U1 + U2
    from nctorus.crossed import CrossedElement, spec
    from nctorus.torus import TorusElement
    sp = spec("z4")
    x = CrossedElement(sp, {0: TorusElement({(1, 0): 1, (0, 1): 1, (-1, -1): 1})})
    assert not pair2(x, check=False).is_zero()


def test_pair_requires_projection():
    from nctorus.crossed import CrossedElement, spec
    with pytest.raises(ValueError):
        pair0(CrossedElement.t(spec("z3")), entry("tau"))


def test_z4_fixed_cells(tables):
    t = tables["z4"]
    q = F(1, 4)
    i = Coefficient.zeta(3)
    assert [t.cell(p, "D_{0,0}") for p in ("p0", "p1")] == [Coefficient.const(q), Coefficient.const(-q)]
    assert t.cell("p1", "F^i_{0,0}") == i * q and t.cell("p1", "F^-i_{0,0}") == i * (-q)
    assert t.cell("q0", "D_{1,1}") == Coefficient.lam(F(-1, 2), -q)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_pinned_map_is_recomputed(gamma):
    best, scores = pin_convention(gamma)
    assert best == PINNED[gamma]
    assert scores[best][0] == 0


@pytest.mark.parametrize("gamma,powers", [
    ("z3", {"w": 2, "w2": 1}),
    ("z4", {"i": 1, "-i": 3, "-1": 2}),
    ("z6", {"-w": 1, "w2": 2, "-1": 3, "w": 4, "-w2": 5}),
])
def test_component_powers(gamma, powers):
    assert {k: component_power(gamma, k, PINNED[gamma]) for k in powers} == powers


def test_twist_outside_group():
    with pytest.raises(TwistNotInGroup):
        component_power("z3", "i", "conj")


@pytest.mark.parametrize("gamma", GAMMAS)
def test_table_shape_and_determinism(gamma, tables):
    again = generate_table(gamma)
    assert again.cells == tables[gamma].cells
    assert tables[gamma].shape == (len(CATALOG[gamma]), len(columns(gamma)))


@pytest.mark.parametrize("gamma", GAMMAS)
def test_reconcile_counts(gamma, reports):
    assert reports[gamma].counts() == COUNTS[gamma]


@pytest.mark.parametrize("gamma", GAMMAS)
def test_no_strict_failures(gamma, reports):
    assert reports[gamma].strict_failures() == []


@pytest.mark.parametrize("gamma", GAMMAS)
def test_every_printed_disagreement_is_flagged(gamma, reports):
    for c in reports[gamma].cells:
        if c.verdict == "derived-only":
            continue
        if c.proof is not None and c.table is not None and c.proof != c.table:
            assert c.verdict == "paper-internal-conflict"


def test_z3_qr_block_conflicts(reports):
    flagged = {(c.row, c.column) for c in reports["z3"].cells if c.verdict == "paper-internal-conflict"}
    assert flagged == {(r, "E^w_{0,-1}") for r in ("q0", "q1", "r0", "r1")}


def test_z4_p2_conflict_sides_with_list(reports):
    (c,) = [c for c in reports["z4"].cells if c.verdict == "paper-internal-conflict"]
    assert (c.row, c.column) == ("p2", "D_{0,0}")
    assert c.ours == c.proof == Coefficient.const(F(1, 4)) and c.strict_ok


def test_z6_combination_column_is_derived_only(reports):
    col = columns("z6")[2]
    assert col.name == "D_{0,1} + D_{1,0} + (1)*L^(1/2)*D_{1,1}"
    assert all(c.verdict == "derived-only" for c in reports["z6"].cells if c.column == col.name)


def test_unmatched_printed_entries_kept(reports):
    assert reports["z6"].to_json()["unmatched_list_items"] == [{"row": "q2", "column": "tau", "value": "(1/3)"}]


@pytest.mark.parametrize("gamma", GAMMAS)
def test_emitters(gamma, tables):
    t = tables[gamma]
    rows = list(csv.reader(io.StringIO(pairing.to_csv(t))))
    assert len(rows) == t.shape[0] + 1 and len(rows[0]) == t.shape[1] + 1
    data = json.loads(pairing.to_json(t))
    assert [[Coefficient.parse(x) for x in row] for row in data["cells"]] == [t.row_values(r) for r in t.rows]
    assert pairing.to_markdown(t).count("\n") == t.shape[0] + 2


def test_printed_grid_shapes():
    for g in GAMMAS:
        assert len(printed.TABLE[g]) == len(CATALOG[g])
        assert all(len(r) == len(columns(g)) for r in printed.TABLE[g] + printed.PROOF[g])
