"""Closed-form twisted 0-cocycles (twisted traces) and the dual group action."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

from .complexes import PRETTY, QuadraticRule, TWISTS, TwistSpec, derive_relations
from .scalar import Coefficient, Cyclotomic, frac_solve
from .torus import GroupMatrix, TorusElement, act_monomial, group


@dataclass(frozen=True)
class ClosedFormCocycle:
    name: str
    twist: TwistSpec
    # all congruences c1 n + c2 m = r (mod k) must hold; k = 0 means equality
    support: Tuple[Tuple[int, int, int, int], ...]
    exponent: QuadraticRule
    base: Tuple[int, int]
    provenance: str = "printed"

    def in_support(self, n, m) -> bool:
        for c1, c2, r, k in self.support:
            v = c1 * n + c2 * m - r
            if (v != 0) if k == 0 else (v % k != 0):
                return False
        return True

    def value(self, n, m) -> Coefficient:
        if not self.in_support(n, m):
            return Coefficient.zero()
        return Coefficient.lam(self.exponent(n, m))

    def full_rank_support(self) -> bool:
        return all(k != 0 for *_, k in self.support)

    def render(self) -> str:
        conds = []
        for c1, c2, r, k in self.support:
            lhs = _lin(c1, c2)
            conds.append(f"{lhs} = {r}" if k == 0 else f"{lhs} ≡ {r} (mod {k})")
        where = ", ".join(conds) if conds else "all (n,m)"
        return f"{self.name}: phi_(n,m) = L^({self.exponent.render()}) for {where}"

    def to_json(self):
        return {
            "name": self.name,
            "twist": self.twist.label,
            "support": [list(s) for s in self.support],
            "exponent": {
                "a": self.exponent.a, "b": self.exponent.b, "c": self.exponent.c,
                "d": self.exponent.d, "e": self.exponent.e, "f": self.exponent.f,
                "den": self.exponent.den,
            },
            "rule": self.exponent.render(),
            "base": list(self.base),
            "provenance": self.provenance,
        }


def _lin(c1, c2):
    parts = []
    for c, v in ((c1, "n"), (c2, "m")):
        if c:
            parts.append(("" if c == 1 else "-" if c == -1 else str(c)) + v)
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _q(a, b, c, d, e, f, den):
    return QuadraticRule(a, b, c, d, e, f, den)


def _mk(name, tw, support, rule, base, provenance="printed"):
    return ClosedFormCocycle(name, TWISTS[tw], tuple(support), rule, base, provenance)


# exponent rules are in the symbol coordinates (n, m); Q(n,m) = (a n^2 + b m^2 + c nm + d n + e m + f)/den
_ENTRIES = [
    _mk("tau", "1", [(1, 0, 0, 0), (0, 1, 0, 0)], _q(0, 0, 0, 0, 0, 0, 1), (0, 0)),
    _mk("E^w_{0,0}", "w", [(-1, 1, 0, 3)], _q(1, 1, 4, 0, 0, 0, 6), (0, 0)),
    _mk("E^w_{0,1}", "w", [(-1, 1, 1, 3)], _q(1, 1, 4, 0, 0, -1, 6), (0, 1)),
    _mk("E^w_{0,-1}", "w", [(-1, 1, 2, 3)], _q(1, 1, 4, 0, 0, -1, 6), (0, -1)),
    # omega^2 family: not displayed, fitted from the constraint graph
    _mk("E^w2_{0,0}", "w2", [(-1, 1, 0, 3)], _q(-1, -1, 2, 0, 0, 0, 6), (0, 0), "derived"),
    _mk("E^w2_{0,1}", "w2", [(-1, 1, 1, 3)], _q(-1, -1, 2, 0, 0, 1, 6), (0, 1), "derived"),
    _mk("E^w2_{0,-1}", "w2", [(-1, 1, 2, 3)], _q(-1, -1, 2, 0, 0, 1, 6), (0, -1), "derived"),
    # D family: phi_{2n,2m} = L^{2nm} etc., rewritten in (N, M) = (2n+i, 2m+j)
    _mk("D_{0,0}", "-1", [(1, 0, 0, 2), (0, 1, 0, 2)], _q(0, 0, 1, 0, 0, 0, 2), (0, 0)),
    _mk("D_{0,1}", "-1", [(1, 0, 0, 2), (0, 1, 1, 2)], _q(0, 0, 1, 0, 0, 0, 2), (0, 1)),
    _mk("D_{1,0}", "-1", [(1, 0, 1, 2), (0, 1, 0, 2)], _q(0, 0, 1, 0, 0, 0, 2), (1, 0)),
    _mk("D_{1,1}", "-1", [(1, 0, 1, 2), (0, 1, 1, 2)], _q(0, 0, 1, 0, 0, -1, 2), (1, 1)),
    _mk("F^i_{0,0}", "i", [(1, 1, 0, 2)], _q(1, 1, 2, 0, 0, 0, 4), (0, 0)),
    _mk("F^i_{0,1}", "i", [(1, 1, 1, 2)], _q(1, 1, 2, 0, 0, -1, 4), (0, 1)),
    _mk("F^-i_{0,0}", "-i", [(1, 1, 0, 2)], _q(-1, -1, 2, 0, 0, 0, 4), (0, 0), "derived"),
    _mk("F^-i_{0,1}", "-i", [(1, 1, 1, 2)], _q(-1, -1, 2, 0, 0, 1, 4), (0, 1), "derived"),
    _mk("G^-w_{0,0}", "-w", [], _q(-1, -1, 0, 0, 0, 0, 2), (0, 0)),
    _mk("G^-w2_{0,0}", "-w2", [], _q(1, 1, 2, 0, 0, 0, 2), (0, 0), "derived"),
]
ENTRIES: Dict[str, ClosedFormCocycle] = {c.name: c for c in _ENTRIES}

_CATALOG_NAMES = {
    "z3": ["tau", "E^w_{0,0}", "E^w_{0,1}", "E^w_{0,-1}", "E^w2_{0,0}", "E^w2_{0,1}", "E^w2_{0,-1}"],
    "z4": ["tau", "D_{0,0}", "D_{0,1}", "D_{1,0}", "D_{1,1}", "F^i_{0,0}", "F^i_{0,1}", "F^-i_{0,0}", "F^-i_{0,1}"],
    "z6": [
        "tau", "D_{0,0}", "D_{0,1}", "D_{1,0}", "D_{1,1}",
        "E^w_{0,0}", "E^w_{0,1}", "E^w_{0,-1}", "E^w2_{0,0}", "E^w2_{0,1}", "E^w2_{0,-1}",
        "G^-w_{0,0}", "G^-w2_{0,0}",
    ],
}


def catalog(gamma: str) -> List[ClosedFormCocycle]:
    try:
        names = _CATALOG_NAMES[gamma]
    except KeyError:
        raise ValueError(f"unknown group {gamma!r}") from None
    return [ENTRIES[n] for n in names]


def entry(name: str) -> ClosedFormCocycle:
    return ENTRIES[name]


def pretty_name(name: str) -> str:
    for lab in ("-w2", "-w", "w2", "w", "-i", "i"):
        tag = "^" + lab + "_"
        if tag in name:
            return name.replace(tag, "^" + PRETTY[lab] + "_")
    return "τ" if name == "tau" else name


def perturbed(c: ClosedFormCocycle, **changes) -> ClosedFormCocycle:
    return replace(c, exponent=replace(c.exponent, **changes))


# membership


def _shift_poly(coeffs, s):
    """Coefficients of Q(n + s0, m + s1) in the basis n^2, m^2, nm, n, m, 1."""
    a, b, c, d, e, f = coeffs
    x, y = s
    return (
        a,
        b,
        c,
        2 * a * x + c * y + d,
        2 * b * y + c * x + e,
        a * x * x + b * y * y + c * x * y + d * x + e * y + f,
    )


def verify_membership(c: ClosedFormCocycle, window: int = 20) -> bool:
    rels = derive_relations(c.twist)
    one = Coefficient.one()
    for rel in rels:
        if rel.is_self():
            continue
        if not c.full_rank_support():
            continue
        # the step must keep the support coset
        sx, sy = rel.step
        for c1, c2, _, k in c.support:
            if (c1 * sx + c2 * sy) % k:
                return False
        if rel.coef != Cyclotomic.of(1):
            return False
        diff = [p - q for p, q in zip(_shift_poly(c.exponent.coefficients(), rel.lhs),
                                      _shift_poly(c.exponent.coefficients(), rel.rhs))]
        a, b, cc = rel.exp
        if diff != [0, 0, 0, a, b, cc]:
            return False
    for rel in rels:
        for n in range(-window, window + 1):
            for m in range(-window, window + 1):
                p = (n + rel.lhs[0], m + rel.lhs[1])
                q = (n + rel.rhs[0], m + rel.rhs[1])
                w = rel.weight_at((n, m))
                if rel.is_self():
                    if not ((one - w) * c.value(*p)).is_zero():
                        return False
                elif c.value(*p) != w * c.value(*q):
                    return False
    return True


# dual action


class ConventionError(RuntimeError):
    pass


def pushed_value(g: GroupMatrix, c: ClosedFormCocycle, p):
    """Coefficient at p of g pushed forward through c's symbol."""
    src = g.apply_inverse(p)
    v = c.value(*src)
    if v.is_zero():
        return v
    e, img = act_monomial(g, src)
    assert img == tuple(p)
    return v * Coefficient.lam(e)


def dual_action(g: GroupMatrix, c: ClosedFormCocycle, candidates=None, window: int = 8):
    """(scalar, name) with g . c = scalar * catalog[name]."""
    if candidates is None:
        candidates = list(ENTRIES.values())
    pts = [(n, m) for n in range(-window, window + 1) for m in range(-window, window + 1)]
    pushed = {p: pushed_value(g, c, p) for p in pts}
    matches = []
    for cand in candidates:
        if cand.twist.label != c.twist.label:
            continue
        scalar = None
        ok = True
        for p in pts:
            a, b = pushed[p], cand.value(*p)
            if a.is_zero() != b.is_zero():
                ok = False
                break
            if a.is_zero():
                continue
            s = a * b.inverse()
            if scalar is None:
                scalar = s
            elif s != scalar:
                ok = False
                break
        if ok and scalar is not None:
            matches.append((scalar, cand.name))
    if len(matches) != 1:
        raise ConventionError(f"{g.label} . {c.name} matches {len(matches)} catalog entries")
    return matches[0]


def action_matrix(g: GroupMatrix, family: List[ClosedFormCocycle]):
    """M with g . family[j] = sum_i M[i][j] family[i]."""
    names = [c.name for c in family]
    M = [[Coefficient.zero() for _ in family] for _ in family]
    for j, c in enumerate(family):
        s, tgt = dual_action(g, c, family)
        M[names.index(tgt)][j] = s
    return M


def eval_on(c: ClosedFormCocycle, x: TorusElement) -> Coefficient:
    """Identity coefficient of the formal product c . x."""
    out = Coefficient.zero()
    for (a, b), v in x.items():
        cv = c.value(-a, -b)
        if not cv.is_zero():
            out = out + cv * v * Coefficient.lam(-a * b)
    return out


def eval_combination(terms, x: TorusElement) -> Coefficient:
    out = Coefficient.zero()
    for coef, c in terms:
        out = out + coef * eval_on(c, x)
    return out


# invariants under the group generator

# generator acting on each orbifold's twisted traces; for Z_4 this is the
# rotation U1 -> U2^-1, U2 -> U1, i.e. the matrix labelled "-i"
GENERATOR = {"z3": "w", "z4": "-i", "z6": "-w"}


def family(gamma: str, twist_label: str) -> List[ClosedFormCocycle]:
    return [c for c in catalog(gamma) if c.twist.label == twist_label]


def invariant_basis(gamma: str, twist_label: str):
    """Basis of the generator-fixed span of the family, as lists of (coef, cocycle).

    Each vector is scaled so its first nonzero coefficient is 1.
    """
    fam = family(gamma, twist_label)
    if not fam:
        return []
    M = action_matrix(group(GENERATOR[gamma]), fam)
    one = Coefficient.one()
    A = [[M[i][j] - (one if i == j else Coefficient.zero()) for j in range(len(fam))] for i in range(len(fam))]
    out = []
    for v in frac_solve(A).kernel:
        lead = next(x for x in v if not x.is_zero())
        coefs = [(x / lead).to_coefficient() for x in v]
        out.append([(c, f) for c, f in zip(coefs, fam) if not c.is_zero()])
    return out


def invariant_dim(gamma: str, twist_label: str) -> int:
    return len(invariant_basis(gamma, twist_label))
