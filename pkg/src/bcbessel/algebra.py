"""Bicomplex and hyperbolic arithmetic in idempotent coordinates.

A bicomplex number is stored as its idempotent pair ``(e1, e2)``: two
independent complex components.  Every ring operation acts componentwise,
which is what makes the rest of the library (gamma, Bessel, transforms)
reduce to pairs of classical complex computations.

Canonical coordinates (lambda1, lambda2)  with  Z = lambda1 + j*lambda2
relate to the idempotent pair by

    z1 = lambda1 - i*lambda2,   z2 = lambda1 + i*lambda2,
    lambda1 = (z1 + z2)/2,      lambda2 = i*(z1 - z2)/2.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from .errors import BranchError, ZeroDivisorError

__all__ = [
    "BicomplexNumber",
    "HyperbolicNumber",
    "Ordering",
    "compare_h",
    "leq_h",
    "lt_h",
    "bc",
    "exp_bc",
    "ZERO",
    "ONE",
    "E1",
    "E2",
    "I_UNIT",
    "J_UNIT",
    "K_UNIT",
]


def _is_integer_valued(w: complex) -> bool:
    return w.imag == 0.0 and w.real == round(w.real)


def _component_pow(z: complex, v: complex) -> complex:
    """Principal-branch z**v for one idempotent component."""
    if z == 0:
        if v == 0:
            return 1.0 + 0.0j
        if v.real > 0:
            return 0.0 + 0.0j
        raise ZeroDivisorError("0**v undefined for Re(v) <= 0")
    if z.imag == 0.0 and z.real < 0.0 and not _is_integer_valued(v):
        raise BranchError(
            f"{z}**{v}: nonpositive-real base with non-integer exponent "
            "sits on the principal branch cut"
        )
    return cmath.exp(v * cmath.log(z))


@dataclass(frozen=True)
class HyperbolicNumber:
    """Element of D: real e1/e2 coefficients, carrying the partial order."""

    e1: float
    e2: float

    def __post_init__(self):
        object.__setattr__(self, "e1", float(self.e1))
        object.__setattr__(self, "e2", float(self.e2))

    # D+ / D- membership
    @property
    def is_nonnegative(self) -> bool:
        return self.e1 >= 0.0 and self.e2 >= 0.0

    @property
    def is_nonpositive(self) -> bool:
        return self.e1 <= 0.0 and self.e2 <= 0.0

    def __add__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        other = _as_hyperbolic(other)
        return HyperbolicNumber(self.e1 + other.e1, self.e2 + other.e2)

    def __sub__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        other = _as_hyperbolic(other)
        return HyperbolicNumber(self.e1 - other.e1, self.e2 - other.e2)

    def __mul__(self, other):
        other = _as_hyperbolic(other)
        return HyperbolicNumber(self.e1 * other.e1, self.e2 * other.e2)

    __rmul__ = __mul__

    def __neg__(self) -> "HyperbolicNumber":
        return HyperbolicNumber(-self.e1, -self.e2)

    def max_component(self) -> float:
        return max(self.e1, self.e2)

    def to_bicomplex(self) -> "BicomplexNumber":
        return BicomplexNumber(complex(self.e1), complex(self.e2))

    def to_json(self) -> dict:
        return {"e1": self.e1, "e2": self.e2}

    @classmethod
    def from_json(cls, obj: dict) -> "HyperbolicNumber":
        return cls(float(obj["e1"]), float(obj["e2"]))


def _as_hyperbolic(x) -> HyperbolicNumber:
    if isinstance(x, HyperbolicNumber):
        return x
    if isinstance(x, (int, float)):
        return HyperbolicNumber(float(x), float(x))
    raise TypeError(f"cannot interpret {x!r} as a hyperbolic number")


class Ordering(enum.Enum):
    """Outcome of comparing two hyperbolic numbers under <_h."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def compare_h(a: HyperbolicNumber, b: HyperbolicNumber) -> Ordering:
    """Compare a, b in the componentwise partial order of D.

    LESS/GREATER mean comparable and unequal; EQUAL is the reflexive case,
    so "less-or-equal" is LESS or EQUAL.  Mixed-sign differences are
    INCOMPARABLE.
    """
    d1 = b.e1 - a.e1
    d2 = b.e2 - a.e2
    if d1 == 0.0 and d2 == 0.0:
        return Ordering.EQUAL
    if d1 >= 0.0 and d2 >= 0.0:
        return Ordering.LESS
    if d1 <= 0.0 and d2 <= 0.0:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def leq_h(a: HyperbolicNumber, b: HyperbolicNumber) -> bool:
    """a <=_h b, i.e. b - a lies in D+."""
    return b.e1 - a.e1 >= 0.0 and b.e2 - a.e2 >= 0.0


def lt_h(a: HyperbolicNumber, b: HyperbolicNumber) -> bool:
    """Strict variant: both component inequalities strict."""
    return b.e1 - a.e1 > 0.0 and b.e2 - a.e2 > 0.0


@dataclass(frozen=True)
class BicomplexNumber:
    """Bicomplex scalar held as the idempotent component pair (e1, e2)."""

    e1: complex
    e2: complex

    def __post_init__(self):
        object.__setattr__(self, "e1", complex(self.e1))
        object.__setattr__(self, "e2", complex(self.e2))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_canonical(cls, lam1: complex, lam2: complex) -> "BicomplexNumber":
        """Build Z = lam1 + j*lam2 from canonical coordinates."""
        lam1 = complex(lam1)
        lam2 = complex(lam2)
        return cls(lam1 - 1j * lam2, lam1 + 1j * lam2)

    @classmethod
    def from_real(cls, x: float) -> "BicomplexNumber":
        return cls(complex(x), complex(x))

    # -- canonical accessors -----------------------------------------------

    @property
    def lambda1(self) -> complex:
        return (self.e1 + self.e2) / 2

    @property
    def lambda2(self) -> complex:
        return 1j * (self.e1 - self.e2) / 2

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.e1 == 0 and self.e2 == 0

    @property
    def is_zero_divisor(self) -> bool:
        """Nonzero with exactly one vanishing component (membership of O_2)."""
        return (self.e1 == 0) != (self.e2 == 0)

    @property
    def is_invertible(self) -> bool:
        return self.e1 != 0 and self.e2 != 0

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BicomplexNumber):
            return other
        if isinstance(other, HyperbolicNumber):
            return other.to_bicomplex()
        if isinstance(other, (int, float, complex)):
            return BicomplexNumber(complex(other), complex(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BicomplexNumber(self.e1 + other.e1, self.e2 + other.e2)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BicomplexNumber(self.e1 - other.e1, self.e2 - other.e2)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BicomplexNumber(other.e1 - self.e1, other.e2 - self.e2)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BicomplexNumber(self.e1 * other.e1, self.e2 * other.e2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.e1 == 0 or other.e2 == 0:
            raise ZeroDivisorError(
                f"division by {other!r}: divisor lies in O_2 or is zero"
            )
        return BicomplexNumber(self.e1 / other.e1, self.e2 / other.e2)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self) -> "BicomplexNumber":
        return BicomplexNumber(-self.e1, -self.e2)

    def __pow__(self, v) -> "BicomplexNumber":
        v = self._coerce(v)
        if v is None:
            return NotImplemented
        return BicomplexNumber(
            _component_pow(self.e1, v.e1), _component_pow(self.e2, v.e2)
        )

    # -- conjugations, norms --------------------------------------------------

    def conj_bar(self) -> "BicomplexNumber":
        """bar(Z) = conj(lambda1) + j*conj(lambda2); swaps and conjugates components."""
        return BicomplexNumber(self.e2.conjugate(), self.e1.conjugate())

    def conj_tilde(self) -> "BicomplexNumber":
        """tilde(Z) = lambda1 - j*lambda2; swaps the idempotent components."""
        return BicomplexNumber(self.e2, self.e1)

    def conj_star(self) -> "BicomplexNumber":
        """Z* = conj(lambda1) - j*conj(lambda2); conjugates each component."""
        return BicomplexNumber(self.e1.conjugate(), self.e2.conjugate())

    def conjugates(self) -> tuple:
        """All three conjugations (bar, tilde, star)."""
        return (self.conj_bar(), self.conj_tilde(), self.conj_star())

    def hyperbolic_norm(self) -> HyperbolicNumber:
        return HyperbolicNumber(abs(self.e1), abs(self.e2))

    # -- misc ------------------------------------------------------------------

    def isclose(self, other: "BicomplexNumber", tol: float = 1e-12) -> bool:
        """Tolerance equality: |self-other|_h <_h (tol, tol) scaled by magnitude."""
        other = self._coerce(other)
        scale = 1.0 + max(
            self.hyperbolic_norm().max_component(),
            other.hyperbolic_norm().max_component(),
        )
        d = self - other
        return abs(d.e1) <= tol * scale and abs(d.e2) <= tol * scale

    def to_json(self) -> dict:
        return {
            "e1": [self.e1.real, self.e1.imag],
            "e2": [self.e2.real, self.e2.imag],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BicomplexNumber":
        re1, im1 = obj["e1"]
        re2, im2 = obj["e2"]
        return cls(complex(re1, im1), complex(re2, im2))

    def __repr__(self):
        return f"BicomplexNumber({self.e1!r}, {self.e2!r})"


def bc(e1, e2=None) -> BicomplexNumber:
    """Shorthand constructor; ``bc(x)`` gives equal components."""
    if e2 is None:
        e2 = e1
    return BicomplexNumber(complex(e1), complex(e2))


def exp_bc(z: BicomplexNumber) -> BicomplexNumber:
    """Componentwise complex exponential."""
    return BicomplexNumber(cmath.exp(z.e1), cmath.exp(z.e2))


ZERO = BicomplexNumber(0, 0)
ONE = BicomplexNumber(1, 1)
E1 = BicomplexNumber(1, 0)
E2 = BicomplexNumber(0, 1)
I_UNIT = BicomplexNumber(1j, 1j)
J_UNIT = BicomplexNumber(-1j, 1j)
K_UNIT = BicomplexNumber(1, -1)
