"""Vector algebra of Lorentz-Minkowski 3-space with signature (+, +, -).

The functions here are written against the component protocol ``p[0], p[1],
p[2]`` so the same code serves :class:`LVec3`, jet-valued vectors and numpy
arrays whose leading axis has length 3.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

EPSILON = np.diag([1.0, 1.0, -1.0])
AXIS = (0.0, 0.0, 1.0)


@dataclass(frozen=True)
class LVec3:
    """A point or tangent vector of L^3."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self) -> None:
        for name in ("x1", "x2", "x3"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ValueError(f"LVec3.{name} must be finite, got {val!r}")
            object.__setattr__(self, name, val)

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2
        yield self.x3

    def __getitem__(self, i: int) -> float:
        return (self.x1, self.x2, self.x3)[i]

    def __len__(self) -> int:
        return 3

    def __add__(self, other: LVec3) -> LVec3:
        return LVec3(self.x1 + other[0], self.x2 + other[1], self.x3 + other[2])

    def __sub__(self, other: LVec3) -> LVec3:
        return LVec3(self.x1 - other[0], self.x2 - other[1], self.x3 - other[2])

    def __mul__(self, k: float) -> LVec3:
        return LVec3(k * self.x1, k * self.x2, k * self.x3)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> LVec3:
        return LVec3(self.x1 / k, self.x2 / k, self.x3 / k)

    def __neg__(self) -> LVec3:
        return LVec3(-self.x1, -self.x2, -self.x3)

    def to_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    @classmethod
    def from_seq(cls, seq) -> LVec3:
        a, b, c = seq
        return cls(float(a), float(b), float(c))


@dataclass(frozen=True)
class LMat3:
    """Dense 3x3 matrix acting on L^3 column vectors."""

    rows: tuple[tuple[float, float, float], ...]

    def __post_init__(self) -> None:
        arr = np.asarray(self.rows, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"LMat3 needs a 3x3 array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("LMat3 entries must be finite")
        object.__setattr__(self, "rows", tuple(tuple(float(x) for x in r) for r in arr))

    @classmethod
    def from_array(cls, arr) -> LMat3:
        return cls(tuple(map(tuple, np.asarray(arr, dtype=float))))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows)

    def __matmul__(self, other):
        if isinstance(other, LMat3):
            return LMat3.from_array(self.to_array() @ other.to_array())
        return apply(self, other)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def _wrap(template: Any, comps):
    if isinstance(template, LVec3):
        return LVec3(*comps)
    if isinstance(template, np.ndarray):
        return np.stack(comps)
    maker = getattr(type(template), "from_components", None)
    if maker is not None:
        return maker(*comps)
    return tuple(comps)


def inner(p, q):
    """Indefinite product p1 q1 + p2 q2 - p3 q3."""
    return p[0] * q[0] + p[1] * q[1] - p[2] * q[2]


def cross(p, q):
    """Lorentzian vector product, component order as (p2q3 - q2p3, q1p3 - p1q3, q1p2 - p1q2)."""
    comps = (
        p[1] * q[2] - q[1] * p[2],
        q[0] * p[2] - p[0] * q[2],
        q[0] * p[1] - p[0] * q[1],
    )
    return _wrap(p, comps)


def norm(p):
    return np.sqrt(np.abs(inner(p, p)))


def causal_character(p, tol: float = 1e-12) -> CausalCharacter:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    x = np.array([float(c) for c in p])
    q = float(inner(x, x))
    if not np.any(x):
        return CausalCharacter.SPACELIKE
    band = tol * (1.0 + float(x @ x))
    if abs(q) <= band:
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if q > 0 else CausalCharacter.TIMELIKE


def rotation_timelike(v: float) -> LMat3:
    """Rotation about the timelike axis (0, 0, 1) by angle ``v``."""
    c, s = math.cos(v), math.sin(v)
    return LMat3(((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)))


def rotate_about_axis(v, p):
    """Apply T(v) to ``p`` symbolically; ``v`` and the components may be jets or arrays."""
    from rotsurf import jets

    c, s = jets.cos(v), jets.sin(v)
    return _wrap(p, (c * p[0] - s * p[1], s * p[0] + c * p[1], p[2]))


def apply(m: LMat3, p):
    a = m.rows
    comps = tuple(a[i][0] * p[0] + a[i][1] * p[1] + a[i][2] * p[2] for i in range(3))
    return _wrap(p, comps)


def is_lorentz_rotation(m: LMat3, tol: float = 1e-12) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = m.to_array()
    gram_err = np.max(np.abs(a.T @ EPSILON @ a - EPSILON))
    det_err = abs(np.linalg.det(a) - 1.0)
    axis_err = np.max(np.abs(a @ np.array(AXIS) - np.array(AXIS)))
    return bool(gram_err <= tol and det_err <= tol and axis_err <= tol)
