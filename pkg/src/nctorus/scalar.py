"""Exact scalars: Q(z) with z a primitive 12th root of unity, adjoined formal powers L^q.

L stands for lambda = exp(2 pi i theta) with theta irrational, so L^q = 1 only for q = 0.
"""
from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _times_z(c):
    # z * (c0 + c1 z + c2 z^2 + c3 z^3), using z^4 = z^2 - 1
    c0, c1, c2, c3 = c
    return (-c3, c0, c1 + c3, c2)


_ZPOW = []
_v = (_ONE, _ZERO, _ZERO, _ZERO)
for _ in range(12):
    _ZPOW.append(_v)
    _v = _times_z(_v)
del _v


class Cyclotomic:
    """Element of Q(z), z = exp(i pi/6), stored in the basis 1, z, z^2, z^3."""

    __slots__ = ("c", "_hash")

    def __init__(self, coords: Sequence = (0, 0, 0, 0)):
        if len(coords) != 4:
            raise ValueError("need four coordinates")
        self.c = tuple(rational(x) for x in coords)
        self._hash = None

    @classmethod
    def zeta(cls, k: int) -> "Cyclotomic":
        return cls(_ZPOW[k % 12])

    @classmethod
    def of(cls, x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        return cls((x, 0, 0, 0))

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.of(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("cyc",) + self.c)
        return self._hash

    def __add__(self, other):
        other = Cyclotomic.of(other)
        return Cyclotomic(tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(tuple(-a for a in self.c))

    def __sub__(self, other):
        return self + (-Cyclotomic.of(other))

    def __rsub__(self, other):
        return Cyclotomic.of(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            o = rational(other)
            return Cyclotomic(tuple(a * o for a in self.c))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self.c, other.c
        p = [_ZERO] * 7
        for i in range(4):
            if a[i]:
                for j in range(4):
                    if b[j]:
                        p[i + j] += a[i] * b[j]
        # z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
        p[0] -= p[6]
        p[3] += p[5]
        p[1] -= p[5]
        p[2] += p[4]
        p[0] -= p[4]
        return Cyclotomic(p[:4])

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the field automorphism z -> z^k (k coprime to 12)."""
        if math.gcd(k, 12) != 1:
            raise ValueError("k must be a unit mod 12")
        out = Cyclotomic()
        for j, x in enumerate(self.c):
            if x:
                out = out + Cyclotomic.zeta(j * k) * x
        return out

    def conj(self) -> "Cyclotomic":
        return self.galois(11)

    def norm(self) -> Fraction:
        n = self * self.galois(5) * self.galois(7) * self.galois(11)
        assert not any(n.c[1:]), "norm must be rational"
        return n.c[0]

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("zero cyclotomic")
        rest = self.galois(5) * self.galois(7) * self.galois(11)
        return rest * (1 / (self * rest).c[0])

    def root_index(self):
        """k if self == z^k, else None."""
        for k in range(12):
            if self.c == _ZPOW[k]:
                return k
        return None

    def to_complex(self) -> complex:
        return sum(float(x) * cmath.exp(1j * math.pi * j / 6) for j, x in enumerate(self.c))

    def render(self) -> str:
        atoms = []
        for j, x in enumerate(self.c):
            if x:
                atoms.append(f"({x})" if j == 0 else f"({x})*z^{j}")
        if not atoms:
            return "0"
        if len(atoms) == 1:
            return atoms[0]
        return "[" + " + ".join(atoms) + "]"

    def __repr__(self):
        return f"Cyclotomic({self.render()})"


_CYC_ZERO = Cyclotomic()
_CYC_ONE = Cyclotomic.of(1)


class Coefficient:
    """Finite sum of cyclotomic multiples of rational powers of L.  Immutable."""

    __slots__ = ("t", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t = {}
        for q, c in items:
            q = rational(q)
            c = Cyclotomic.of(c)
            if q in t:
                c = t[q] + c
            if c.is_zero():
                t.pop(q, None)
            else:
                t[q] = c
        self.t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj.t = t
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({_ZERO: _CYC_ONE})

    @classmethod
    def const(cls, x):
        c = Cyclotomic.of(x)
        return cls._raw({} if c.is_zero() else {_ZERO: c})

    @classmethod
    def lam(cls, q, c=1):
        """c * L^q."""
        return cls({rational(q): Cyclotomic.of(c)})

    @classmethod
    def zeta(cls, k: int, q=0):
        return cls._raw({rational(q): Cyclotomic.zeta(k)})

    @classmethod
    def of(cls, x):
        if isinstance(x, Coefficient):
            return x
        return cls.const(x)

    # structure
    def is_zero(self) -> bool:
        return not self.t

    def __bool__(self):
        return bool(self.t)

    def is_monomial(self) -> bool:
        return len(self.t) == 1

    def monomial(self):
        """(cyclotomic, exponent) for a single-term coefficient."""
        if len(self.t) != 1:
            raise ValueError("not a monomial")
        ((q, c),) = self.t.items()
        return c, q

    def exponents(self):
        return sorted(self.t)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = Coefficient.const(other)
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self.t == other.t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.t.items()))
        return self._hash

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Fraction, Cyclotomic)):
                other = Coefficient.const(other)
            else:
                return NotImplemented
        if not other.t:
            return self
        if not self.t:
            return other
        t = dict(self.t)
        for q, c in other.t.items():
            s = t[q] + c if q in t else c
            if s.is_zero():
                del t[q]
            else:
                t[q] = s
        return Coefficient._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient._raw({q: -c for q, c in self.t.items()})

    def __sub__(self, other):
        return self + (-Coefficient.of(other))

    def __rsub__(self, other):
        return Coefficient.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, Coefficient):
            if isinstance(other, (int, Fraction, Cyclotomic)):
                other = Coefficient.const(other)
            else:
                return NotImplemented
        t = {}
        for q1, c1 in self.t.items():
            for q2, c2 in other.t.items():
                q = q1 + q2
                p = c1 * c2
                if q in t:
                    p = t[q] + p
                t[q] = p
        return Coefficient._raw({q: c for q, c in t.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Coefficient.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "Coefficient":
        return Coefficient._raw({-q: c.conj() for q, c in self.t.items()})

    def inverse(self) -> "Coefficient":
        c, q = self.monomial()
        return Coefficient._raw({-q: c.inverse()})

    def __truediv__(self, other):
        return self.divexact(Coefficient.of(other))

    def divexact(self, other: "Coefficient") -> "Coefficient":
        """Exact quotient self/other as Laurent polynomials in L^(1/D); raises if not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero coefficient")
        if other.is_monomial():
            return self * other.inverse()
        lo_bound = min(self.t) - min(other.t) if self.t else 0
        dq = max(other.t)
        dlead_inv = other.t[dq].inverse()
        rem = self
        quot = {}
        while rem.t:
            top = max(rem.t)
            k = top - dq
            if k < lo_bound:
                raise ArithmeticError(f"{self.render()} is not divisible by {other.render()}")
            c = rem.t[top] * dlead_inv
            quot[k] = c
            rem = rem - Coefficient._raw({k: c}) * other
        return Coefficient(quot)

    # output
    def to_complex(self, theta: float) -> complex:
        return sum(c.to_complex() * cmath.exp(2j * math.pi * theta * float(q)) for q, c in self.t.items())

    def render(self) -> str:
        if not self.t:
            return "0"
        parts = []
        for q in sorted(self.t):
            s = self.t[q].render()
            if q != 0:
                s += f"*L^({q})"
            parts.append(s)
        return " + ".join(parts)

    __str__ = render

    def __repr__(self):
        return f"Coefficient({self.render()})"

    @classmethod
    def parse(cls, text: str) -> "Coefficient":
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms = {}
        for tok in _split_top(text):
            m = _TERM.fullmatch(tok)
            if not m:
                raise ValueError(f"cannot parse term {tok!r}")
            body, q = m.group(1), m.group(2)
            q = Fraction(q) if q is not None else _ZERO
            if body.startswith("["):
                body = body[1:-1]
            cyc = Cyclotomic()
            for atom in body.split(" + "):
                a = _ATOM.fullmatch(atom.strip())
                if not a:
                    raise ValueError(f"cannot parse atom {atom!r}")
                j = int(a.group(2)) if a.group(2) else 0
                cyc = cyc + Cyclotomic.zeta(j) * Fraction(a.group(1))
            terms[q] = terms.get(q, Cyclotomic()) + cyc
        return cls(terms)


_TERM = re.compile(r"(\[.*\]|\([^()]*\)(?:\*z\^\d+)?)(?:\*L\^\(([^()]*)\))?")
_ATOM = re.compile(r"\(([^()]*)\)(?:\*z\^(\d+))?")


def _split_top(text):
    out, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            out.append(text[start:i])
            i += 3
            start = i
            continue
        i += 1
    out.append(text[start:])
    return out


def coef_mul(a: Coefficient, b: Coefficient) -> Coefficient:
    return a * b


def coef_add(a: Coefficient, b: Coefficient) -> Coefficient:
    return a + b


def coef_conj(a: Coefficient) -> Coefficient:
    return a.conj()


# common constants
ZETA6 = Coefficient.zeta(2)  # exp(2 pi i/6)
I = Coefficient.zeta(3)


def lam(q, c=1) -> Coefficient:
    return Coefficient.lam(q, c)


class CoefficientFraction:
    """num/den over the coefficient ring, reduced lazily."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Coefficient.of(num)
        den = Coefficient.one() if den is None else Coefficient.of(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_monomial() and not (den.t.get(_ZERO) == _CYC_ONE and len(den.t) == 1):
            # monomial denominators are cheap to clear
            num, den = num * den.inverse(), Coefficient.one()
        self.num, self.den = num, den

    @classmethod
    def of(cls, x):
        return x if isinstance(x, CoefficientFraction) else cls(x)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        other = CoefficientFraction.of(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("CoefficientFraction is unhashable (no canonical form)")

    def __add__(self, other):
        other = CoefficientFraction.of(other)
        if self.den == other.den:
            return CoefficientFraction(self.num + other.num, self.den)
        return CoefficientFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CoefficientFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-CoefficientFraction.of(other))

    def __mul__(self, other):
        other = CoefficientFraction.of(other)
        return CoefficientFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = CoefficientFraction.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        return CoefficientFraction(self.num * other.den, self.den * other.num)

    def to_coefficient(self) -> Coefficient:
        return self.num.divexact(self.den)

    def to_complex(self, theta):
        return self.num.to_complex(theta) / self.den.to_complex(theta)

    def render(self):
        if self.den == Coefficient.one():
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self):
        return f"CoefficientFraction({self.render()})"


class InconsistentSystem(ArithmeticError):
    pass


class SolutionSpace:
    def __init__(self, particular, kernel, pivots):
        self.particular = particular
        self.kernel = kernel
        self.pivots = pivots

    @property
    def dim(self):
        return len(self.kernel)


def frac_solve(matrix, rhs=None) -> SolutionSpace:
    """Solve matrix . x = rhs exactly over the fraction field.

    Kernel vectors come from the reduced row echelon form: each has a 1 in its
    free column and 0 in the other free columns.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows > 8 or cols > 8:
        raise ValueError("frac_solve is limited to 8x8 systems")
    F = CoefficientFraction.of
    a = [[F(x) for x in row] + [F(rhs[i] if rhs is not None else 0)] for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and not a[i][col].is_zero():
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if not a[i][cols].is_zero():
            raise InconsistentSystem(f"row {i} reduces to 0 = {a[i][cols].render()}")
    particular = [F(0)] * cols
    for i, col in enumerate(pivots):
        particular[col] = a[i][cols]
    kernel = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [F(0)] * cols
        v[free] = F(1)
        for i, col in enumerate(pivots):
            v[col] = -a[i][free]
        kernel.append(v)
    return SolutionSpace(particular, kernel, pivots)
