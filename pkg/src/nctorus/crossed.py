"""Crossed products A x| Z_N and the projection catalog."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping

from .scalar import Coefficient
from .torus import GroupMatrix, TorusElement, act, group, star


@dataclass(frozen=True)
class OrbifoldSpec:
    name: str
    N: int
    conj: GroupMatrix  # t U t^-1 = act(conj, U)

    def sigma(self, x: TorusElement, j: int = 1) -> TorusElement:
        for _ in range(j % self.N):
            x = act(self.conj, x)
        return x


SPECS: Dict[str, OrbifoldSpec] = {
    "z2": OrbifoldSpec("z2", 2, group("-1")),
    # t U1 t^-1 = L^(-1/2) U1^-1 U2,  t U2 t^-1 = U1^-1
    "z3": OrbifoldSpec("z3", 3, group("w2")),
    # t U1 t^-1 = U2,  t U2 t^-1 = U1^-1
    "z4": OrbifoldSpec("z4", 4, group("i")),
    # t U1 t^-1 = U2,  t U2 t^-1 = L^(-1/2) U1^-1 U2
    "z6": OrbifoldSpec("z6", 6, group("-w")),
}


def spec(name: str) -> OrbifoldSpec:
    try:
        return SPECS[name]
    except KeyError:
        raise ValueError(f"unknown group {name!r}; expected one of {sorted(SPECS)}") from None


class CrossedElement:
    """sum_k a_k t^k with a_k in the torus algebra."""

    __slots__ = ("spec", "parts")

    def __init__(self, spec: OrbifoldSpec, parts: Mapping[int, TorusElement] = ()):
        self.spec = spec
        p = {}
        for k, x in dict(parts).items():
            k %= spec.N
            x = TorusElement.of(x)
            if k in p:
                x = p[k] + x
            if x.is_zero():
                p.pop(k, None)
            else:
                p[k] = x
        self.parts = p

    @classmethod
    def t(cls, spec: OrbifoldSpec, k: int = 1, coef=1):
        return cls(spec, {k: TorusElement.scalar(coef)})

    @classmethod
    def of(cls, spec, x):
        if isinstance(x, CrossedElement):
            return x
        return cls(spec, {0: TorusElement.of(x)})

    def part(self, k: int) -> TorusElement:
        return self.parts.get(k % self.spec.N, TorusElement.zero())

    def is_zero(self):
        return not self.parts

    def _check(self, other):
        if other.spec != self.spec:
            raise ValueError(f"spec mismatch: {self.spec.name} vs {other.spec.name}")

    def __eq__(self, other):
        if not isinstance(other, CrossedElement):
            other = CrossedElement.of(self.spec, other)
        return self.spec == other.spec and self.parts == other.parts

    def __hash__(self):
        return hash((self.spec.name, frozenset(self.parts.items())))

    def __add__(self, other):
        other = CrossedElement.of(self.spec, other)
        self._check(other)
        parts = dict(self.parts)
        for k, x in other.parts.items():
            parts[k] = parts[k] + x if k in parts else x
        return CrossedElement(self.spec, parts)

    __radd__ = __add__

    def __neg__(self):
        return CrossedElement(self.spec, {k: -x for k, x in self.parts.items()})

    def __sub__(self, other):
        return self + (-CrossedElement.of(self.spec, other))

    def __rsub__(self, other):
        return CrossedElement.of(self.spec, other) - self

    def scale(self, c):
        return CrossedElement(self.spec, {k: x.scale(c) for k, x in self.parts.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        if isinstance(other, TorusElement):
            other = CrossedElement.of(self.spec, other)
        if not isinstance(other, CrossedElement):
            return NotImplemented
        return cross_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        if isinstance(other, TorusElement):
            return cross_mul(CrossedElement.of(self.spec, other), self)
        return NotImplemented

    def __pow__(self, n: int):
        out = CrossedElement.of(self.spec, 1)
        for _ in range(n):
            out = cross_mul(out, self)
        return out

    def render(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"({self.parts[k].render()})t^{k}" for k in sorted(self.parts))

    def __repr__(self):
        return f"CrossedElement[{self.spec.name}]({self.render()})"

    def to_json(self):
        return {
            "gamma": self.spec.name,
            "parts": [{"k": k, "element": self.parts[k].to_json()} for k in sorted(self.parts)],
        }

    @classmethod
    def from_json(cls, data):
        sp = spec(data["gamma"])
        return cls(sp, {d["k"]: TorusElement.from_json(d["element"]) for d in data["parts"]})


def cross_mul(a: CrossedElement, b: CrossedElement) -> CrossedElement:
    a._check(b)
    sp = a.spec
    out: Dict[int, TorusElement] = {}
    for j, x in a.parts.items():
        for k, y in b.parts.items():
            key = (j + k) % sp.N
            v = x * sp.sigma(y, j)
            out[key] = out[key] + v if key in out else v
    return CrossedElement(sp, out)


def cross_star(a: CrossedElement) -> CrossedElement:
    # (x t^k)* = t^-k x* = sigma^-k(x*) t^-k
    sp = a.spec
    return CrossedElement(sp, {(-k) % sp.N: sp.sigma(star(x), -k) for k, x in a.parts.items()})


def is_projection(a: CrossedElement):
    """(ok, residual): residual holds p^2 - p and p* - p."""
    sq = cross_mul(a, a) - a
    sa = cross_star(a) - a
    ok = sq.is_zero() and sa.is_zero()
    return ok, {"square": sq, "star": sa}


# projection catalog

ZETA = Coefficient.zeta(2)  # exp(2 pi i/6)
IU = Coefficient.zeta(3)
_C6 = Coefficient.zeta(4, Fraction(1, 6))  # exp(2 pi i (2 + theta)/6)


def _geom(sp, x, coeffs, scale):
    """scale * sum_k coeffs[k] * x^k with x^k built by repeated cross_mul."""
    out = CrossedElement(sp)
    power = CrossedElement.of(sp, 1)
    for k, c in enumerate(coeffs):
        if k:
            power = cross_mul(power, x)
        out = out + power.scale(c)
    return out.scale(scale)


def _cyc(sp, x, w, n, scale, phase=None):
    """scale * sum_k (w x)^k: coefficient of x^k is w^k (times phase^k)."""
    base = w if phase is None else w * phase
    return _geom(sp, x, [base ** k for k in range(n)], scale)


def _mono(sp, p, k, c=1):
    return CrossedElement(sp, {k: TorusElement.monomial(p, c)})


CATALOG = {
    "z3": ("1", "p0", "p1", "q0", "q1", "r0", "r1"),
    "z4": ("1", "p0", "p1", "p2", "q0", "q1", "q2", "r"),
    "z6": ("1", "p0", "p1", "p2", "p3", "p4", "q0", "q1", "r"),
}

# entries corrected from their printed form so that they are projections; see README
CORRECTED = {
    ("z3", "r0"): "U1^2 t rescaled by L^(2/3), since (U1^2 t)^3 = L^-2",
    ("z3", "r1"): "U1^2 t rescaled by L^(2/3), since (U1^2 t)^3 = L^-2",
    ("z6", "p2"): "t^4 coefficient -1 replaced by zeta^2 (= zeta^8)",
}


def build_projection(gamma: str, name: str, literal: bool = False) -> CrossedElement:
    """Catalog element `name` of Z_N.  literal=True returns the printed formula where it was corrected."""
    sp = spec(gamma)
    if name not in CATALOG.get(gamma, ()):
        raise ValueError(f"unknown projection {name!r} for {gamma}")
    one = Coefficient.one()
    t = CrossedElement.t(sp)
    third, quarter, sixth, half = Fraction(1, 3), Fraction(1, 4), Fraction(1, 6), Fraction(1, 2)
    if name == "1":
        return CrossedElement.of(sp, 1)
    z2 = ZETA ** 2
    if gamma == "z3":
        if name == "p0":
            return _cyc(sp, t, one, 3, third)
        if name == "p1":
            return _cyc(sp, t, z2, 3, third)
        u1t = _mono(sp, (1, 0), 1)
        if name == "q0":
            return _cyc(sp, u1t, _C6, 3, third)
        if name == "q1":
            return _cyc(sp, u1t, _C6 * z2, 3, third)
        x = _mono(sp, (2, 0), 1, one if literal else Coefficient.lam(Fraction(2, 3)))
        if name == "r0":
            return _cyc(sp, x, one, 3, third)
        if name == "r1":
            return _cyc(sp, x, z2, 3, third)
    if gamma == "z4":
        if name == "p0":
            return _cyc(sp, t, one, 4, quarter)
        if name == "p1":
            return _cyc(sp, t, IU, 4, quarter)
        if name == "p2":
            return _cyc(sp, t, -one, 4, quarter)
        y = _mono(sp, (1, 0), 1, Coefficient.lam(quarter))
        if name == "q0":
            return _cyc(sp, y, IU, 4, quarter)
        if name == "q1":
            return _cyc(sp, y, -one, 4, quarter)
        if name == "q2":
            return _cyc(sp, y, -IU, 4, quarter)
        if name == "r":
            return CrossedElement.of(sp, 1).scale(half) - _mono(sp, (1, 0), 2).scale(half)
    if gamma == "z6":
        if name in ("p0", "p1", "p2", "p3", "p4"):
            j = int(name[1])
            coeffs = [ZETA ** (j * k) for k in range(6)]
            if name == "p2" and literal:
                coeffs[4] = -one
            return _geom(sp, t, coeffs, sixth)
        x = _mono(sp, (1, 0), 2)
        if name == "q0":
            return _cyc(sp, x, _C6, 3, third)
        if name == "q1":
            return _cyc(sp, x, _C6 * z2, 3, third)
        if name == "r":
            return CrossedElement.of(sp, 1).scale(half) - _mono(sp, (1, 0), 3).scale(half)
    raise AssertionError("unreachable")


def catalog(gamma: str):
    return {name: build_projection(gamma, name) for name in CATALOG[gamma]}
