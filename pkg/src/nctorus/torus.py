"""The algebraic noncommutative torus: U2 U1 = L U1 U2, with the SL(2,Z) action."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .scalar import Coefficient

LatticePoint = Tuple[int, int]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GroupMatrix:
    label: str
    g11: int
    g12: int
    g21: int
    g22: int

    @property
    def rows(self):
        return ((self.g11, self.g12), (self.g21, self.g22))

    def __matmul__(self, other: "GroupMatrix") -> Tuple[int, int, int, int]:
        a, b = self.rows, other.rows
        return (
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )

    def det(self) -> int:
        return self.g11 * self.g22 - self.g12 * self.g21

    def apply(self, p: LatticePoint) -> LatticePoint:
        n, m = p
        return (self.g11 * n + self.g12 * m, self.g21 * n + self.g22 * m)

    def apply_inverse(self, p: LatticePoint) -> LatticePoint:
        n, m = p
        return (self.g22 * n - self.g12 * m, -self.g21 * n + self.g11 * m)

    def power(self, k: int) -> "GroupMatrix":
        ent = (1, 0, 0, 1)
        for _ in range(k):
            ent = _mat_mul(ent, (self.g11, self.g12, self.g21, self.g22))
        return by_entries(ent)

    def inverse(self) -> "GroupMatrix":
        return by_entries((self.g22, -self.g12, -self.g21, self.g11))

    def order(self) -> int:
        for k in range(1, 13):
            if self.power(k).label == "1":
                return k
        raise ValueError("infinite order")

    def __str__(self):
        return self.label


def _mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


_OMEGA = (0, 1, -1, -1)
_I = (0, -1, 1, 0)
_ENTRIES = {
    "1": (1, 0, 0, 1),
    "-1": (-1, 0, 0, -1),
    "w": _OMEGA,
    "w2": _mat_mul(_OMEGA, _OMEGA),
    "i": _I,
    "-i": tuple(-x for x in _I),
    "-w": tuple(-x for x in _OMEGA),
    "-w2": tuple(-x for x in _mat_mul(_OMEGA, _OMEGA)),
}
GROUP: Dict[str, GroupMatrix] = {k: GroupMatrix(k, *v) for k, v in _ENTRIES.items()}
_BY_ENTRIES = {v: GROUP[k] for k, v in _ENTRIES.items()}
LABELS = tuple(GROUP)


def group(label: str) -> GroupMatrix:
    try:
        return GROUP[label]
    except KeyError:
        raise ValueError(f"unknown group label {label!r}") from None


def by_entries(ent) -> GroupMatrix:
    try:
        return _BY_ENTRIES[tuple(ent)]
    except KeyError:
        raise ValueError(f"matrix {ent} is not one of the eight labeled elements") from None


class TorusElement:
    """Finitely supported sum of c * U1^n U2^m.  Immutable."""

    __slots__ = ("s",)

    def __init__(self, support: Mapping | Iterable = ()):
        items = support.items() if isinstance(support, Mapping) else support
        s = {}
        for p, c in items:
            p = (int(p[0]), int(p[1]))
            c = Coefficient.of(c)
            if p in s:
                c = s[p] + c
            if c.is_zero():
                s.pop(p, None)
            else:
                s[p] = c
        self.s = s

    @classmethod
    def _raw(cls, s):
        obj = cls.__new__(cls)
        obj.s = s
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls.monomial((0, 0))

    @classmethod
    def monomial(cls, p: LatticePoint, c=1):
        c = Coefficient.of(c)
        return cls._raw({} if c.is_zero() else {(int(p[0]), int(p[1])): c})

    @classmethod
    def scalar(cls, c):
        return cls.monomial((0, 0), c)

    @classmethod
    def of(cls, x):
        return x if isinstance(x, TorusElement) else cls.scalar(x)

    def is_zero(self):
        return not self.s

    def __bool__(self):
        return bool(self.s)

    def __getitem__(self, p) -> Coefficient:
        return self.s.get(p, Coefficient.zero())

    def items(self):
        return sorted(self.s.items())

    def support(self):
        return sorted(self.s)

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            other = TorusElement.of(other)
        return self.s == other.s

    def __hash__(self):
        return hash(frozenset(self.s.items()))

    def __add__(self, other):
        other = TorusElement.of(other)
        s = dict(self.s)
        for p, c in other.s.items():
            v = s[p] + c if p in s else c
            if v.is_zero():
                del s[p]
            else:
                s[p] = v
        return TorusElement._raw(s)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement._raw({p: -c for p, c in self.s.items()})

    def __sub__(self, other):
        return self + (-TorusElement.of(other))

    def __rsub__(self, other):
        return TorusElement.of(other) - self

    def scale(self, c) -> "TorusElement":
        c = Coefficient.of(c)
        return TorusElement({p: v * c for p, v in self.s.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        if not isinstance(other, TorusElement):
            return NotImplemented
        return elem_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = TorusElement.one()
        for _ in range(k):
            out = out * self
        return out

    def render(self) -> str:
        if not self.s:
            return "0"
        return " + ".join(f"{{{c.render()}}}U^({n},{m})" for (n, m), c in self.items())

    def __repr__(self):
        return f"TorusElement({self.render()})"

    def to_json(self) -> list:
        return [{"n": n, "m": m, "coef": c.render()} for (n, m), c in self.items()]

    @classmethod
    def from_json(cls, data) -> "TorusElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(d["n"], d["m"]): Coefficient.parse(d["coef"]) for d in data})


U1 = TorusElement.monomial((1, 0))
U2 = TorusElement.monomial((0, 1))


def mono_phase(p: LatticePoint, q: LatticePoint) -> Fraction:
    """L-exponent in U^p U^q = L^e U^(p+q)."""
    return Fraction(p[1] * q[0])


def elem_mul(a: TorusElement, b: TorusElement) -> TorusElement:
    out: Dict[LatticePoint, Coefficient] = {}
    for (n, m), c in a.s.items():
        for (p, q), d in b.s.items():
            key = (n + p, m + q)
            v = c * d
            if m * p:
                v = v * Coefficient.lam(m * p)
            out[key] = out[key] + v if key in out else v
    return TorusElement._raw({k: v for k, v in out.items() if not v.is_zero()})


def act_monomial(g: GroupMatrix, p: LatticePoint) -> Tuple[Fraction, LatticePoint]:
    """g . U1^n U2^m = L^e U^(g p); returns (e, g p).

    (g.U1)^n (g.U2)^m with g.U1 = L^(ab/2) U^(a,b) and g.U2 = L^(cd/2) U^(c,d)
    collapses to e = (ab n^2 + cd m^2 + 2bc nm)/2.
    """
    n, m = p
    a, b, c, d = g.g11, g.g21, g.g12, g.g22
    e = Fraction(a * b * n * n + c * d * m * m + 2 * b * c * n * m, 2)
    return e, g.apply(p)


def act(g: GroupMatrix, x: TorusElement) -> TorusElement:
    out = {}
    for p, c in x.s.items():
        e, q = act_monomial(g, p)
        out[q] = c * Coefficient.lam(e) if e else c
    return TorusElement._raw(out)


def star(x: TorusElement) -> TorusElement:
    return TorusElement._raw(
        {(-n, -m): (c.conj() * Coefficient.lam(n * m) if n * m else c.conj()) for (n, m), c in x.s.items()}
    )


def generator_image(g: GroupMatrix, j: int) -> TorusElement:
    """g . U_j via the defining phases L^(g1j g2j / 2)."""
    a, b = (g.g11, g.g21) if j == 1 else (g.g12, g.g22)
    return TorusElement.monomial((a, b), Coefficient.lam(Fraction(a * b, 2)))


def normal_power(x: TorusElement, n: int) -> TorusElement:
    """(c U^(a,b))^n = c^n L^(ab n(n-1)/2) U^(na,nb), any integer n."""
    (p, c), = x.s.items()
    a, b = p
    return TorusElement.monomial((n * a, n * b), (c ** n) * Coefficient.lam(Fraction(a * b * n * (n - 1), 2)))
