import pytest
from hypothesis import given, strategies as st

from conftest import torus_elements
from nctorus import numeric
from nctorus.crossed import build_projection
from nctorus.pairing import GAMMAS, generate_table
from nctorus.torus import LABELS, act, group


@pytest.fixture(scope="module")
def tables():
    return {g: generate_table(g) for g in GAMMAS}


@pytest.mark.parametrize("gamma", GAMMAS)
@pytest.mark.parametrize("seed", [0, 7])
def test_shadow_agrees_with_exact(gamma, seed, tables):
    cells = numeric.cross_validate(gamma, numeric.sample_theta(seed), tables[gamma])
    assert len(cells) == tables[gamma].shape[0] * tables[gamma].shape[1]
    assert numeric.max_error(cells) <= numeric.TOL


@given(torus_elements(), torus_elements(), st.floats(0.05, 0.95))
def test_float_product_is_evaluation_of_exact(a, b, theta):
    exact = {p: c.to_complex(theta) for p, c in (a * b).items()}
    fa = {p: c.to_complex(theta) for p, c in a.items()}
    fb = {p: c.to_complex(theta) for p, c in b.items()}
    shadow = numeric.f_mul(fa, fb, theta)
    for p in set(exact) | set(shadow):
        assert abs(exact.get(p, 0) - shadow.get(p, 0)) < 1e-9


@given(st.sampled_from(LABELS), torus_elements(), st.floats(0.05, 0.95))
def test_float_action_is_evaluation_of_exact(label, x, theta):
    g = group(label)
    exact = {p: c.to_complex(theta) for p, c in act(g, x).items()}
    shadow = numeric.f_act(g, {p: c.to_complex(theta) for p, c in x.items()}, theta)
    assert set(exact) == set(shadow)
    assert all(abs(exact[p] - shadow[p]) < 1e-9 for p in exact)


def test_shadow_detects_a_wrong_cell(tables):
    from nctorus.scalar import Coefficient
    t = tables["z4"]
    bad = type(t)(t.gamma, t.convention, t.rows, t.columns, dict(t.cells))
    bad.cells[("p1", "D_{0,0}")] = Coefficient.const(1)
    cells = numeric.cross_validate("z4", numeric.sample_theta(0), bad)
    assert [(c.row, c.column) for c in cells if not c.ok] == [("p1", "D_{0,0}")]


def test_sample_theta_is_deterministic():
    assert numeric.sample_theta(3) == numeric.sample_theta(3)
    assert numeric.sample_theta(3) != numeric.sample_theta(4)


def test_float_crossed_pair2_vanishes_on_projection():
    e = numeric.to_float(build_projection("z6", "q0"), 0.3)
    assert abs(numeric.f_pair2(e, "z6", 0.3)) < 1e-12
