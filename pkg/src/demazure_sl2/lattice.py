"""Weight-lattice coordinates for the rank-2 affine Cartan matrix ((2,-2),(-2,2)).

A dominant integral weight Lambda = m*L0 + n*L1 of level m+n determines the
affine lattice of weights Lambda - a*alpha0 - b*alpha1, indexed here by the
integer pair (a, b).  Everything downstream works in these coordinates:

* pairing with coroot 0:   <alpha0^, lambda> = m - 2*(a - b)
* pairing with coroot 1:   <alpha1^, lambda> = n + 2*(a - b)
* degree (pairing with -d, the grading by delta-steps): a
* finite weight: the coroot-1 pairing, i.e. the weight seen by the
  underlying finite sl2.

Sign convention.  The finite weight is taken with the Cartan-pairing sign
n + 2*(a - b); under it the degree/finite-weight covariance of a
parity-mismatched Demazure word is +N/2.  Some sources flip this sign
(equivalent up to the finite Weyl reflection); only the off-diagonal
covariance entries are affected.

The module also provides Functional, an exact polynomial algebra in the
coordinates a and b over the rationals.  Moments of weight distributions
are always expectations of such functionals, so keeping them symbolic and
exact (int / fractions.Fraction coefficients, no floats) is what makes
every identity in this package checkable as literal equality of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class HighestWeight:
    """Dominant integral weight m*L0 + n*L1 (zero delta-component)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("highest weight coefficients must be integers")
        if self.m < 0 or self.n < 0:
            raise ValueError("highest weight must be dominant: m, n >= 0")
        if self.m + self.n < 1:
            raise ValueError("level m + n must be at least 1")

    @property
    def level(self) -> int:
        return self.m + self.n

    @classmethod
    def fundamental(cls, j: int) -> "HighestWeight":
        """The fundamental weight L_j, j in {0, 1}."""
        if j == 0:
            return cls(1, 0)
        if j == 1:
            return cls(0, 1)
        raise ValueError("generator index must be 0 or 1")


class LatticePoint(NamedTuple):
    """Coordinates (a, b) of the weight Lambda - a*alpha0 - b*alpha1."""

    a: int
    b: int


def step(p: LatticePoint, j: int, i: int) -> LatticePoint:
    """The point of p - i*alpha_j, i.e. one string-step along alpha_j."""
    if j == 0:
        return LatticePoint(p[0] + i, p[1])
    if j == 1:
        return LatticePoint(p[0], p[1] + i)
    raise ValueError("generator index must be 0 or 1")


def coroot_pairing(j: int, hw: HighestWeight, p: LatticePoint) -> int:
    """<alpha_j^, lambda> for lambda = hw - a*alpha0 - b*alpha1."""
    d = p[0] - p[1]
    if j == 0:
        return hw.m - 2 * d
    if j == 1:
        return hw.n + 2 * d
    raise ValueError("generator index must be 0 or 1")


def degree(p: LatticePoint) -> int:
    """Number of alpha0-steps below the highest weight; always the a-coordinate."""
    return p[0]


def finite_weight(hw: HighestWeight, p: LatticePoint) -> int:
    """The sl2-weight of the point, n + 2*(a - b).  See the sign note above."""
    return hw.n + 2 * (p[0] - p[1])


def _norm_coeff(c: Scalar) -> Scalar:
    # keep integral coefficients as plain ints so integer functionals
    # evaluate in pure int arithmetic
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Functional:
    """Exact polynomial in the lattice coordinates a and b.

    Terms are stored as {(i, j): coefficient} for the monomial a^i * b^j
    with int or Fraction coefficients.  Supports +, -, *, ** and scalar
    multiplication; total degree is unbounded (moment identities here use
    up to degree 4).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        data: dict[tuple[int, int], Scalar] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("monomial exponents must be nonnegative")
                c = _norm_coeff(c)
                if c:
                    data[(i, j)] = c
        self._terms = data

    @classmethod
    def constant(cls, c: Scalar) -> "Functional":
        return cls({(0, 0): c})

    def terms(self) -> Iterator[tuple[tuple[int, int], Scalar]]:
        return iter(sorted(self._terms.items()))

    @property
    def total_degree(self) -> int:
        """Largest i + j over the support; 0 for the zero functional."""
        return max((i + j for i, j in self._terms), default=0)

    def evaluate(self, p: LatticePoint) -> Scalar:
        a, b = p[0], p[1]
        acc: Scalar = 0
        for (i, j), c in self._terms.items():
            acc += c * a**i * b**j
        return acc

    def __add__(self, other: "Functional | Scalar") -> "Functional":
        other = _as_functional(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = _norm_coeff(s)
            else:
                out.pop(key, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Functional":
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Functional | Scalar") -> "Functional":
        return self + (-_as_functional(other))

    def __rsub__(self, other: "Functional | Scalar") -> "Functional":
        return _as_functional(other) + (-self)

    def __mul__(self, other: "Functional | Scalar") -> "Functional":
        if isinstance(other, (int, Fraction)):
            other = _norm_coeff(other)
            if not other:
                return _raw({})
            return _raw({k: _norm_coeff(c * other) for k, c in self._terms.items()})
        if not isinstance(other, Functional):
            return NotImplemented
        out: dict[tuple[int, int], Scalar] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = _norm_coeff(s)
                else:
                    out.pop(key, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Functional":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Functional.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _as_functional(other)
        if not isinstance(other, Functional):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Functional(0)"
        bits = []
        for (i, j), c in sorted(self._terms.items()):
            mono = "a" * bool(i) + (f"^{i}" if i > 1 else "")
            mono += "b" * bool(j) + (f"^{j}" if j > 1 else "")
            bits.append(f"{c}*{mono}" if mono else f"{c}")
        return "Functional(" + " + ".join(bits) + ")"


def _raw(terms: dict[tuple[int, int], Scalar]) -> Functional:
    f = Functional()
    f._terms = terms
    return f


def _as_functional(x: "Functional | Scalar") -> Functional:
    if isinstance(x, Functional):
        return x
    return Functional.constant(x)


#: the coordinate functionals themselves
A = Functional({(1, 0): 1})
B = Functional({(0, 1): 1})


def degree_functional() -> Functional:
    return A


def finite_weight_functional(hw: HighestWeight) -> Functional:
    return Functional({(0, 0): hw.n, (1, 0): 2, (0, 1): -2})


def coroot_functional(j: int, hw: HighestWeight) -> Functional:
    if j == 0:
        return Functional({(0, 0): hw.m, (1, 0): -2, (0, 1): 2})
    if j == 1:
        return finite_weight_functional(hw)
    raise ValueError("generator index must be 0 or 1")
