from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nctorus.cocycles import (
    ENTRIES, GENERATOR, ConventionError, catalog, dual_action, entry, eval_on, invariant_basis, invariant_dim,
    perturbed, pretty_name, verify_membership,
)
from nctorus.complexes import TWISTS, h0_components
from nctorus.scalar import Coefficient
from nctorus.torus import TorusElement, act, group

L = Coefficient.lam
names = st.sampled_from(sorted(ENTRIES))
mono = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).map(TorusElement.monomial)


@given(names, mono, mono)
def test_twisted_trace_identity(name, x, y):
    # independent oracle: phi(x y) = phi(y (g.x)) checked through the algebra product
    c = ENTRIES[name]
    assert eval_on(c, x * y) == eval_on(c, y * act(c.twist.g, x))


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_membership(name):
    assert verify_membership(ENTRIES[name])


@pytest.mark.parametrize("name", ["E^w_{0,0}", "D_{1,1}", "F^i_{0,1}", "G^-w_{0,0}"])
def test_perturbed_rules_fail(name):
    c = ENTRIES[name]
    bad = perturbed(c, den=c.exponent.den + 1)
    assert not verify_membership(bad)
    hits = [
        eval_on(bad, TorusElement.monomial((a, b)) * TorusElement.monomial((p, q)))
        != eval_on(bad, TorusElement.monomial((p, q)) * act(bad.twist.g, TorusElement.monomial((a, b))))
        for a in range(-2, 3) for b in range(-2, 3) for p in range(-2, 3) for q in range(-2, 3)
    ]
    assert any(hits)


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_normalized_at_base(name):
    c = ENTRIES[name]
    assert c.value(*c.base) == Coefficient.one()


@pytest.mark.parametrize("name", sorted(ENTRIES))
def test_rule_agrees_with_h0_fit(name):
    c = ENTRIES[name]
    if c.name == "tau":
        return
    res = h0_components(c.twist, 6)
    comp = next(k for k in res.surviving if k.base == c.base)
    for p, (k, q) in comp.rel.items():
        assert k == 0 and c.exponent(*p) == q
        assert c.in_support(*p)


def test_catalog_sizes():
    assert [len(catalog(g)) for g in ("z3", "z4", "z6")] == [7, 9, 13]
    with pytest.raises(ValueError):
        catalog("z5")


def test_derived_entries_flagged():
    derived = {n for n, c in ENTRIES.items() if c.provenance == "derived"}
    assert derived == {"E^w2_{0,0}", "E^w2_{0,1}", "E^w2_{0,-1}", "F^-i_{0,0}", "F^-i_{0,1}", "G^-w2_{0,0}"}


def test_quoted_minus_one_rule_on_sublattice():
    # phi_{2n,2m} = L^(2nm) on the even sublattice
    c = entry("D_{0,0}")
    assert all(c.exponent(2 * n, 2 * m) == 2 * n * m for n in range(-3, 4) for m in range(-3, 4))


def _act(gamma, name):
    fam = catalog(gamma)
    s, img = dual_action(group(GENERATOR[gamma]), entry(name), fam)
    return s, img


@pytest.mark.parametrize("name,scalar,image", [
    ("D_{0,1}", L(Fraction(1, 2)), "D_{1,1}"),
    ("D_{1,0}", Coefficient.one(), "D_{0,1}"),
    # the printed action sends D_{1,1} to L D_{1,0}; the computed factor is L^(-1/2)
    ("D_{1,1}", L(Fraction(-1, 2)), "D_{1,0}"),
    ("D_{0,0}", Coefficient.one(), "D_{0,0}"),
    ("E^w_{0,1}", Coefficient.one(), "E^w_{0,-1}"),
    ("G^-w_{0,0}", Coefficient.one(), "G^-w_{0,0}"),
])
def test_z6_dual_action(name, scalar, image):
    assert _act("z6", name) == (scalar, image)


def test_z4_dual_action_swaps_mixed_parity():
    assert _act("z4", "D_{0,1}") == (Coefficient.one(), "D_{1,0}")
    assert _act("z4", "D_{1,1}") == (Coefficient.one(), "D_{1,1}")


@pytest.mark.parametrize("gamma", ["z3", "z4", "z6"])
def test_dual_action_has_group_order(gamma):
    fam = catalog(gamma)
    g = group(GENERATOR[gamma])
    for c in fam:
        x, total = c, Coefficient.one()
        for _ in range(g.order()):
            s, n = dual_action(g, x, fam)
            total, x = total * s, entry(n)
        assert x is c and total == Coefficient.one()


def test_dual_action_outside_family_raises():
    with pytest.raises(ConventionError):
        dual_action(group("-w"), entry("D_{0,1}"), [entry("D_{0,1}")])


@pytest.mark.parametrize("gamma,dims", [
    ("z3", {"w": 3, "w2": 3, "1": 1}),
    ("z4", {"i": 2, "-i": 2, "-1": 3, "1": 1}),
    ("z6", {"-w": 1, "-w2": 1, "w": 2, "w2": 2, "-1": 2, "1": 1}),
])
def test_invariant_dims(gamma, dims):
    assert {k: invariant_dim(gamma, k) for k in dims} == dims


def test_z6_invariant_combination():
    basis = invariant_basis("z6", "-1")
    combo = {c.name: k for k, c in basis[1]}
    assert combo == {"D_{0,1}": Coefficient.one(), "D_{1,0}": Coefficient.one(), "D_{1,1}": L(Fraction(1, 2))}


def test_pretty_names():
    assert pretty_name("E^w2_{0,1}") == "E^ω²_{0,1}"
    assert pretty_name("tau") == "τ"
    assert pretty_name("G^-w_{0,0}") == "G^-ω_{0,0}"


def test_render_and_json():
    c = entry("E^w_{0,1}")
    assert "mod 3" in c.render()
    assert c.to_json()["rule"] == "(m^2+n^2+4mn-1)/6"
