"""Demazure operators on finitely supported measures over the weight lattice.

The operator D_j acts on a point mass at lambda with k = <alpha_j^, lambda> by

    D_j delta_lambda = delta_lambda + delta_{lambda - alpha_j} + ... + delta_{lambda - k*alpha_j}   (k >= 0)
    D_j delta_lambda = 0                                                                            (k = -1)
    D_j delta_lambda = -(delta_{lambda - (k+1)*alpha_j} + ... + delta_{lambda + alpha_j})           (k <= -2)

extended linearly to signed integer combinations.  Iterating the operators
along an alternating word starting from the point mass at the highest
weight yields the weight multiplicity distribution of the corresponding
Demazure module; for genuine words all intermediate measures stay
nonnegative.

Implementation note: D_j is applied string-by-string.  Points sharing the
coordinate not moved by alpha_j lie on one alpha_j-string, where the
pairing is k(x) = C - 2x for a per-string constant C.  The operator output
at position y on the string is

    sum of masses at x <= min(y, C - y)  minus  sum of masses at x >= max(y, C - y) + 1,

which is symmetric under y <-> C - y, so one pass with a prefix pointer
(dominant side) and a suffix pointer (antidominant side) over the half
interval produces the whole string in O(input + output).  The definitional
per-point expansion is kept in the test suite as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .lattice import Functional, HighestWeight, LatticePoint, Scalar


@dataclass(frozen=True)
class WeylWord:
    """Alternating word in the two affine generators.

    ``first`` is the index of the rightmost letter, the one applied first;
    a word of length N therefore ends (leftmost letter) with ``first`` when
    N is odd and with ``1 - first`` when N is even.
    """

    length: int
    first: int

    def __post_init__(self) -> None:
        if not isinstance(self.length, int) or self.length < 0:
            raise ValueError("word length must be a nonnegative integer")
        if self.first not in (0, 1):
            raise ValueError("first letter must be generator 0 or 1")

    def letters(self) -> Iterator[int]:
        """Generator indices in application order (rightmost first)."""
        for i in range(self.length):
            yield self.first if i % 2 == 0 else 1 - self.first


class WeightDistribution:
    """Finitely supported integer measure on the (a, b) lattice.

    Entries with value 0 are never stored.  For genuine Demazure words all
    entries are positive multiplicities; signed values are permitted so the
    operators can be probed on arbitrary inputs.
    """

    __slots__ = ("hw", "_data")

    def __init__(self, hw: HighestWeight, entries: Mapping[tuple[int, int], int] | None = None):
        self.hw = hw
        data: dict[LatticePoint, int] = {}
        if entries:
            for key, c in entries.items():
                if c:
                    data[LatticePoint(*key)] = c
        self._data = data

    @classmethod
    def delta(cls, hw: HighestWeight) -> "WeightDistribution":
        """Point mass at the highest weight itself, (a, b) = (0, 0)."""
        return cls(hw, {(0, 0): 1})

    @classmethod
    def _from_raw(cls, hw: HighestWeight, data: dict[LatticePoint, int]) -> "WeightDistribution":
        # internal: caller guarantees no zero entries and LatticePoint keys
        mu = cls.__new__(cls)
        mu.hw = hw
        mu._data = data
        return mu

    def mass(self, p: tuple[int, int]) -> int:
        return self._data.get(LatticePoint(*p), 0)

    def items(self) -> Iterator[tuple[LatticePoint, int]]:
        return iter(self._data.items())

    def sorted_items(self) -> list[tuple[LatticePoint, int]]:
        """Entries ordered by (a, b); the canonical export order."""
        return sorted(self._data.items())

    def string_items(self) -> list[tuple[LatticePoint, int]]:
        """Entries ordered by (a - b, a): delta strings come out contiguous."""
        return sorted(self._data.items(), key=lambda kv: (kv[0][0] - kv[0][1], kv[0][0]))

    def as_dict(self) -> dict[LatticePoint, int]:
        return dict(self._data)

    @property
    def support_size(self) -> int:
        return len(self._data)

    def total_mass(self) -> int:
        return sum(self._data.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._data.values())

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.hw == other.hw and self._data == other._data

    def __repr__(self) -> str:
        return f"WeightDistribution(hw={self.hw}, support={len(self._data)}, mass={self.total_mass()})"


def _fold_string(C: int, items: list[tuple[int, int]], emit) -> None:
    """Apply the one-string operator with pairing k(x) = C - 2x.

    ``items`` is a list of (position, mass); ``emit(y, value)`` receives the
    nonzero output masses.  Positions with k = -1 (2x = C + 1) contribute
    nothing and output is symmetric under y <-> C - y.
    """
    items.sort()
    doms = [(x, c) for x, c in items if 2 * x <= C]
    antis = [(x, c) for x, c in items if 2 * x >= C + 2]
    if not doms and not antis:
        return
    lo_candidates = []
    if doms:
        lo_candidates.append(doms[0][0])
    if antis:
        lo_candidates.append(C - antis[-1][0] + 1)
    lo = min(lo_candidates)
    di, ai = 0, len(antis)
    psum = asum = 0
    for y in range(lo, C // 2 + 1):
        while di < len(doms) and doms[di][0] <= y:
            psum += doms[di][1]
            di += 1
        while ai > 0 and antis[ai - 1][0] >= C - y + 1:
            asum += antis[ai - 1][1]
            ai -= 1
        v = psum - asum
        if v:
            emit(y, v)
            mirror = C - y
            if mirror != y:
                emit(mirror, v)


def apply_demazure(j: int, mu: WeightDistribution) -> WeightDistribution:
    """One application of D_j; input is not modified."""
    if j not in (0, 1):
        raise ValueError("generator index must be 0 or 1")
    hw = mu.hw
    const = hw.m if j == 0 else hw.n
    strings: dict[int, list[tuple[int, int]]] = {}
    if j == 0:
        # alpha0 moves a; a string is a fixed b, with k(a) = (m + 2b) - 2a
        for (a, b), c in mu._data.items():
            strings.setdefault(b, []).append((a, c))
    else:
        # alpha1 moves b; a string is a fixed a, with k(b) = (n + 2a) - 2b
        for (a, b), c in mu._data.items():
            strings.setdefault(a, []).append((b, c))
    out: dict[LatticePoint, int] = {}
    for fixed, items in strings.items():
        C = const + 2 * fixed
        if j == 0:
            _fold_string(C, items, lambda y, v: out.__setitem__(LatticePoint(y, fixed), v))
        else:
            _fold_string(C, items, lambda y, v: out.__setitem__(LatticePoint(fixed, y), v))
    return WeightDistribution._from_raw(hw, out)


def weight_distribution(hw: HighestWeight, word: WeylWord) -> WeightDistribution:
    """Weight multiplicity distribution of the Demazure module for ``word``."""
    mu = WeightDistribution.delta(hw)
    for j in word.letters():
        mu = apply_demazure(j, mu)
    return mu


def distribution_chain(hw: HighestWeight, word: WeylWord) -> Iterator[tuple[int, WeightDistribution]]:
    """Yield (t, mu_t) for every prefix length t = 0..len(word).

    Each mu_t is the distribution of the length-t prefix of ``word``
    (applied rightmost-first), so one pass serves every length at the cost
    of the longest.
    """
    mu = WeightDistribution.delta(hw)
    yield 0, mu
    for t, j in enumerate(word.letters(), start=1):
        mu = apply_demazure(j, mu)
        yield t, mu


def total_mass(mu: WeightDistribution) -> int:
    """Sum of all entries; the dimension when mu is a module's distribution."""
    return mu.total_mass()


def marginal(mu: WeightDistribution, f: Functional) -> dict[Scalar, int]:
    """Pushforward of mu along a scalar functional: value -> total mass."""
    out: dict[Scalar, int] = {}
    for p, c in mu._data.items():
        v = f.evaluate(p)
        s = out.get(v, 0) + c
        if s:
            out[v] = s
        else:
            out.pop(v, None)
    return out
