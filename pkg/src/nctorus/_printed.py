"""Printed index values, encoded as data: the summary tables and the itemised lists.

Values are stored row-major in the printed column order.  `None` marks a cell
the itemised list does not mention.
"""
from fractions import Fraction as F

from .scalar import Coefficient

_Z = Coefficient.zeta(2)  # exp(2 pi i / 6)
_I = Coefficient.zeta(3)


def v(r, zk=0, q=0, ik=0):
    """r * zeta^zk * i^ik * L^q."""
    out = Coefficient.lam(F(q)) * F(r)
    if zk:
        out = out * _Z ** zk
    if ik:
        out = out * _I ** ik
    return out


_0 = v(0)
_3, _4, _6 = F(1, 3), F(1, 4), F(1, 6)

TABLE = {
    "z3": [
        [v(1), _0, _0, _0, _0, _0, _0, _0],
        [v(_3), v(_3), v(_3), _0, _0, _0, _0, _0],
        [v(_3), v(_3, 2), v(_3, 4), _0, _0, _0, _0, _0],
        [v(_3), _0, _0, _0, v(_3, 2, F(-2, 3)), _0, _0, _0],
        [v(_3), _0, _0, _0, v(_3, 0, F(-2, 3)), _0, _0, _0],
        [v(_3), _0, _0, _0, _0, v(_3, 2, _6), _0, _0],
        [v(_3), _0, _0, _0, _0, v(_3, 4, _6), _0, _0],
    ],
    "z4": [
        [v(1), _0, _0, _0, _0, _0, _0, _0, _0],
        [v(_4), _0, v(_4), _0, v(_4), _0, v(_4), _0, _0],
        [v(_4), _0, v(-_4), _0, v(_4, ik=1), _0, v(-_4, ik=1), _0, _0],
        [v(_4), _0, v(-_4), _0, v(-_4), _0, v(-_4), _0, _0],
        [v(_4), v(-_4, 0, F(-1, 2)), _0, _0, _0, v(_4, 0, _4, 1), _0, v(-_4, 0, -_4, 1), _0],
        [v(_4), v(_4, 0, F(-1, 2)), _0, _0, _0, v(-_4, 0, _4), _0, v(-_4, 0, -_4), _0],
        [v(_4), v(-_4, 0, F(-1, 2)), _0, _0, _0, v(-_4, 0, _4, 1), _0, v(_4, 0, -_4, 1), _0],
        [v(F(1, 2)), _0, _0, v(F(-1, 2)), _0, _0, _0, _0, _0],
    ],
    "z6": [
        [v(1), _0, _0, _0, _0, _0, _0, _0, _0, _0],
        [v(_6), v(_6), _0, _0, v(_6), _0, v(_6), v(_6), v(_6), _0],
        [v(_6), v(_6), _0, _0, v(_3, 2), _0, v(-_6, 1), v(_6, 1), v(-_6, 2), _0],
        [v(_6), v(-_6), _0, _0, v(-_3, 1), _0, v(-_6), v(_6, 2), v(-_6, 1), _0],
        [v(_6), v(_6), _0, _0, v(_6), _0, v(_6), v(-_6), v(-_6), _0],
        [v(_6), _0, _0, _0, v(_6, 2), _0, v(-_6, 1), v(-_6, 1), v(_6, 2), _0],
        [v(_3), _0, _0, v(_3, 1), _0, v(_3, 2, -_6), _0, _0, _0, _0],
        [v(_3), _0, _0, v(-_3), _0, v(-_3, 1, -_6), _0, _0, _0, _0],
        [v(F(1, 2)), _0, v(F(-1, 2), 0, F(3, 2)), _0, _0, _0, _0, _0, _0, _0],
    ],
}

_ = None

PROOF = {
    "z3": [
        [v(1), _0, _0, _0, _0, _0, _0, _0],
        [v(_3), v(_3), v(_3), _0, _0, _0, _0, _0],
        [v(_3), v(_3, 2), v(_3, 4), _0, _0, _0, _0, _0],
        [v(_3), _0, _0, _0, v(_3, 2, F(-2, 3)), v(_3, 1, _6), _0, _0],
        [v(_3), _0, _0, _0, v(_3, 0, F(-2, 3)), v(-_3, 0, _6), _0, _0],
        [v(_3), _0, _0, _0, _0, _0, _0, _0],
        [v(_3), _0, _0, _0, _0, _0, _0, _0],
    ],
    "z4": [
        [v(1), _0, _0, _0, _0, _0, _0, _0, _0],
        [v(_4), _0, v(_4), _0, v(_4), _0, v(_4), _0, _0],
        [v(_4), _0, v(-_4), _0, v(_4, ik=1), _0, v(-_4, ik=1), _0, _0],
        [v(_4), _0, v(_4), _0, v(-_4), _0, v(-_4), _0, _0],
        [v(_4), v(-_4, 0, F(-1, 2)), _0, _0, _0, v(_4, 0, _4, 1), _0, v(-_4, 0, -_4, 1), _0],
        [v(_4), v(_4, 0, F(-1, 2)), _0, _0, _0, v(-_4, 0, _4), _0, v(-_4, 0, -_4), _0],
        [v(_4), v(-_4, 0, F(-1, 2)), _0, _0, _0, v(-_4, 0, _4, 1), _0, v(_4, 0, -_4, 1), _0],
        [v(F(1, 2)), _0, _0, v(F(-1, 2)), _0, _0, _0, _0, _0],
    ],
    # trace list skips p3, p4 and names a q2 that the row labels lack;
    # the combined-D list repeats q0 and omits q1
    "z6": [
        [v(1), _0, _0, _0, _0, _0, _0, _0, _0, _0],
        [v(_6), v(_6), _0, _0, v(_6), _0, v(_6), v(_6), v(_6), _0],
        [v(_6), v(-_6), _0, _0, v(_3, 2), _0, v(-_6, 1), v(_6, 1), v(-_6, 2), _0],
        [v(_6), v(_6), _0, _0, v(-_3, 1), _0, v(-_6), v(_6, 2), v(-_6, 1), _0],
        [_, v(-_6), _0, _0, v(_6), _0, v(_6), v(-_6), v(-_6), _0],
        [_, v(_6), _0, _0, v(_6, 2), _0, v(-_6, 1), v(-_6, 1), v(_6, 2), _0],
        [v(_6), _0, _0, v(_3, 1), _0, v(_3, 2, -_6), _0, _0, _0, _0],
        [v(_3), _0, _, v(-_3), _0, v(-_3, 1, -_6), _0, _0, _0, _0],
        [v(F(1, 2)), _0, v(F(-1, 2), 0, F(3, 2)), _0, _0, _0, _0, _0, _0, _0],
    ],
}

# itemised entries naming a row the table does not have
UNMATCHED = {"z6": [("q2", "tau", v(_3))]}
