"""Bivariate truncated Taylor series in the chart parameters (u, v).

A :class:`Jet2` holds the Taylor coefficients ``c[a, b] = d^{a+b} f / du^a dv^b / (a! b!)``
of a scalar function for all ``a + b <= 3``.  Coefficients may be scalars or
numpy arrays of a common batch shape, so one jet evaluates a whole sampling
grid at once.

Differentiating a jet (:meth:`Jet2.d_u`, :meth:`Jet2.d_v`) lowers the number of
trustworthy orders by one; ``order`` tracks that and every operation truncates
to the smaller order of its operands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from rotsurf.errors import DivisionNearZero, OrderTooHigh, SqrtDomain

MAX_ORDER = 3
GUARD = 1e-12

# (a, b) slots in increasing total degree
_SLOTS = [(a, d - a) for d in range(MAX_ORDER + 1) for a in range(d, -1, -1)]


def _lift(x):
    """Give a batch-shaped array two leading unit axes so it broadcasts over c."""
    x = np.asarray(x)
    return x[None, None, ...] if x.ndim else x


def _align(x: np.ndarray, y: np.ndarray):
    """Pad the batch axes of two coefficient blocks so numpy broadcasting lines them up."""
    dx, dy = x.ndim, y.ndim
    if dx < dy:
        x = x.reshape(x.shape[:2] + (1,) * (dy - dx) + x.shape[2:])
    elif dy < dx:
        y = y.reshape(y.shape[:2] + (1,) * (dx - dy) + y.shape[2:])
    return x, y


def _slots(order: int):
    return [(a, b) for a, b in _SLOTS if a + b <= order]


class Jet2:
    """Degree-3 bivariate jet.  Immutable by convention."""

    __slots__ = ("c", "order")
    __array_ufunc__ = None  # make ndarray <op> Jet2 defer to the jet

    def __init__(self, coeffs, order: int = MAX_ORDER):
        c = np.asarray(coeffs, dtype=float)
        if c.shape[:2] != (MAX_ORDER + 1, MAX_ORDER + 1):
            raise ValueError(f"coefficient block must be 4x4xbatch, got {c.shape}")
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"order must be in [0, {MAX_ORDER}]")
        self.c = c
        self.order = order

    # -- construction -------------------------------------------------------
    @classmethod
    def _zeros(cls, shape, order=MAX_ORDER) -> Jet2:
        return cls(np.zeros((MAX_ORDER + 1, MAX_ORDER + 1) + tuple(shape)), order)

    @classmethod
    def constant(cls, value, order: int = MAX_ORDER) -> Jet2:
        value = np.asarray(value, dtype=float)
        out = cls._zeros(value.shape, order)
        out.c[0, 0] = value
        return out

    @property
    def shape(self) -> tuple:
        return self.c.shape[2:]

    @property
    def value(self):
        v = self.c[0, 0]
        return float(v) if v.ndim == 0 else v.copy()

    def coeff(self, a: int, b: int):
        v = self.c[a, b]
        return float(v) if v.ndim == 0 else v

    def partial(self, ord_u: int, ord_v: int):
        """True mixed partial derivative d^{ord_u + ord_v} / du^ord_u dv^ord_v."""
        if ord_u < 0 or ord_v < 0:
            raise ValueError("derivative orders must be non-negative")
        if ord_u + ord_v > self.order:
            raise OrderTooHigh(
                f"partial of total order {ord_u + ord_v} exceeds jet order {self.order}"
            )
        return math.factorial(ord_u) * math.factorial(ord_v) * self.coeff(ord_u, ord_v)

    def d_u(self) -> Jet2:
        if self.order == 0:
            raise OrderTooHigh("cannot differentiate an order-0 jet")
        out = Jet2._zeros(self.shape, self.order - 1)
        for a, b in _slots(self.order - 1):
            out.c[a, b] = (a + 1) * self.c[a + 1, b]
        return out

    def d_v(self) -> Jet2:
        if self.order == 0:
            raise OrderTooHigh("cannot differentiate an order-0 jet")
        out = Jet2._zeros(self.shape, self.order - 1)
        for a, b in _slots(self.order - 1):
            out.c[a, b] = (b + 1) * self.c[a, b + 1]
        return out

    def truncate(self, order: int) -> Jet2:
        out = Jet2(self.c.copy(), min(order, self.order))
        for a, b in _SLOTS:
            if a + b > out.order:
                out.c[a, b] = 0.0
        return out

    def select(self, mask, other: Jet2) -> Jet2:
        """Entrywise ``where(mask, self, other)`` over the batch axes."""
        order = min(self.order, other.order)
        x, y = _align(self.c, other.c)
        return Jet2(np.where(_lift(mask), x, y), order).truncate(order)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> Jet2:
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(other, self.order)

    def __add__(self, other) -> Jet2:
        other = self._coerce(other)
        x, y = _align(self.c, other.c)
        return Jet2(x + y, MAX_ORDER).truncate(min(self.order, other.order))

    __radd__ = __add__

    def __sub__(self, other) -> Jet2:
        other = self._coerce(other)
        x, y = _align(self.c, other.c)
        return Jet2(x - y, MAX_ORDER).truncate(min(self.order, other.order))

    def __rsub__(self, other) -> Jet2:
        return self._coerce(other) - self

    def __neg__(self) -> Jet2:
        return Jet2(-self.c, self.order)

    def __pos__(self) -> Jet2:
        return self

    def __mul__(self, other) -> Jet2:
        if not isinstance(other, Jet2):
            return Jet2(self.c * _lift(other), self.order)
        order = min(self.order, other.order)
        x, y = _align(self.c, other.c)
        out = np.zeros(np.broadcast_shapes(x.shape, y.shape))
        for a, b in _slots(order):
            acc = 0.0
            for i in range(a + 1):
                for j in range(b + 1):
                    acc = acc + x[i, j] * y[a - i, b - j]
            out[a, b] = acc
        return Jet2(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Jet2:
        if not isinstance(other, Jet2):
            k = _lift(other)
            if np.any(np.abs(k) <= GUARD):
                raise DivisionNearZero("division by a near-zero scalar")
            return Jet2(self.c / k, self.order)
        return self * reciprocal(other)

    def __rtruediv__(self, other) -> Jet2:
        return reciprocal(self) * other

    def __pow__(self, n: int) -> Jet2:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = Jet2.constant(np.ones(self.shape), self.order)
        for _ in range(n):
            out = out * self
        return out

    def __abs__(self) -> Jet2:
        sign = np.where(self.c[0, 0] < 0, -1.0, 1.0)
        return self * sign

    def __repr__(self) -> str:
        if self.shape:
            return f"Jet2(shape={self.shape}, order={self.order})"
        terms = ", ".join(f"c{a}{b}={self.c[a, b]:.6g}" for a, b in _slots(self.order))
        return f"Jet2({terms})"


@dataclass(frozen=True)
class JVec3:
    """Jet-valued 3-vector."""

    x1: Jet2
    x2: Jet2
    x3: Jet2

    @classmethod
    def from_components(cls, a, b, c) -> JVec3:
        return cls(a, b, c)

    def __getitem__(self, i: int) -> Jet2:
        return (self.x1, self.x2, self.x3)[i]

    def __iter__(self):
        yield from (self.x1, self.x2, self.x3)

    def __len__(self) -> int:
        return 3

    def __add__(self, other) -> JVec3:
        return JVec3(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other) -> JVec3:
        return JVec3(*(a - b for a, b in zip(self, other)))

    def __mul__(self, k) -> JVec3:
        return JVec3(*(a * k for a in self))

    __rmul__ = __mul__

    def __truediv__(self, k) -> JVec3:
        inv = reciprocal(k) if isinstance(k, Jet2) else 1.0 / np.asarray(k, dtype=float)
        return JVec3(*(a * inv for a in self))

    def d_u(self) -> JVec3:
        return JVec3(*(a.d_u() for a in self))

    def d_v(self) -> JVec3:
        return JVec3(*(a.d_v() for a in self))

    def value(self) -> np.ndarray:
        return np.stack([a.c[0, 0] for a in self])

    def partial(self, ord_u: int, ord_v: int) -> np.ndarray:
        return np.stack([np.asarray(a.partial(ord_u, ord_v)) for a in self])


def seed_u(u0, order: int = MAX_ORDER) -> Jet2:
    out = Jet2.constant(u0, order)
    out.c[1, 0] = 1.0
    return out


def seed_v(v0, order: int = MAX_ORDER) -> Jet2:
    out = Jet2.constant(v0, order)
    out.c[0, 1] = 1.0
    return out


def constant(value, order: int = MAX_ORDER) -> Jet2:
    return Jet2.constant(value, order)


def _compose(x: Jet2, derivs) -> Jet2:
    """Taylor composition f(x) given ``derivs[k] = f^(k)(x0) / k!``."""
    delta = Jet2(x.c.copy(), x.order)
    delta.c[0, 0] = 0.0
    out = Jet2.constant(derivs[x.order], x.order)
    for k in range(x.order - 1, -1, -1):
        out = out * delta
        out.c[0, 0] = out.c[0, 0] + derivs[k]
    return out


def reciprocal(x: Jet2) -> Jet2:
    x0 = x.c[0, 0]
    if np.any(np.abs(x0) <= GUARD):
        raise DivisionNearZero("jet denominator value within guard of zero")
    inv = 1.0 / x0
    return _compose(x, [inv, -inv**2, inv**3, -inv**4])


def sqrt(x):
    if not isinstance(x, Jet2):
        return np.sqrt(x)
    x0 = x.c[0, 0]
    if np.any(x0 <= GUARD):
        raise SqrtDomain("jet sqrt argument not positive")
    r = np.sqrt(x0)
    return _compose(x, [r, 0.5 / r, -0.125 / (r * x0), 0.0625 / (r * x0 * x0)])


def sin(x):
    if not isinstance(x, Jet2):
        return np.sin(x)
    s, c = np.sin(x.c[0, 0]), np.cos(x.c[0, 0])
    return _compose(x, [s, c, -s / 2.0, -c / 6.0])


def cos(x):
    if not isinstance(x, Jet2):
        return np.cos(x)
    s, c = np.sin(x.c[0, 0]), np.cos(x.c[0, 0])
    return _compose(x, [c, -s, -c / 2.0, s / 6.0])


def asinh(x):
    if not isinstance(x, Jet2):
        return np.arcsinh(x)
    x0 = x.c[0, 0]
    w = 1.0 + x0 * x0
    r = np.sqrt(w)
    d1 = 1.0 / r
    d2 = -x0 / (w * r)
    d3 = (2.0 * x0 * x0 - 1.0) / (w * w * r)
    return _compose(x, [np.arcsinh(x0), d1, d2 / 2.0, d3 / 6.0])


def value(x):
    """Value slot of a jet; plain numbers pass through."""
    return x.value if isinstance(x, Jet2) else x
