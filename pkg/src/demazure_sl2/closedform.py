"""Closed form for level-1 weight distributions via Gaussian binomial columns.

For the fundamental weight L0 and the even alternating word of length N
(first letter 0), the multiplicity at (a, b) equals the number of monotone
lattice paths from (0, 0) to (k, N - k) with area i, where the string index
k and the depth i are read off the coordinates by

    i = N*N//4 - a,      k = (a - b) + N//2.

Those path counts are exactly the coefficients of the Gaussian binomial
[N choose k]_q, generated here by the q-Pascal recurrence

    [N k]_q = [N-1 k-1]_q + q^k [N-1 k]_q .

Odd words extend the even closed form by one more Demazure step.  The
string-reflection shift and its palindromicity check live here too: the
level-1 distribution restricted to a column of fixed a - b (a delta
string) is a palindrome, mirrored by (a, b) -> (a + S, b + S) with

    S = N*N/4       + (a-b)^2           - 2a    (N even)
    S = (N*N - 1)/4 + (a-b)^2 - (a-b) - 2b      (N odd)

derived from the string midpoints a = (N^2/4 + (a-b)^2) / 2 for even N and
b = ((N^2-1)/4 + (a-b)^2 - (a-b)) / 2 for odd N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .demazure import WeightDistribution, apply_demazure
from .lattice import HighestWeight, LatticePoint


class QPolynomial:
    """Dense nonnegative-integer coefficient vector in the formal variable q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(int(c) for c in coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        if any(c < 0 for c in cs):
            raise ValueError("coefficients must be nonnegative")
        self.coeffs = cs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_sum(self) -> int:
        """Evaluation at q = 1."""
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"


# rows of q-Pascal triangle actually requested by callers; building a row
# starts from the largest cached index below it, so ascending sweeps
# (the common access pattern) pay each row once without caching the
# intermediate rows of one long jump forever
_row_cache: dict[int, tuple[tuple[int, ...], ...]] = {0: ((1,),)}


def _pascal_row(N: int) -> tuple[tuple[int, ...], ...]:
    if N in _row_cache:
        return _row_cache[N]
    base = max(i for i in _row_cache if i < N)
    row = [list(cs) for cs in _row_cache[base]]
    for n in range(base + 1, N + 1):
        new: list[list[int]] = [[1]]
        for k in range(1, n):
            left = row[k - 1]
            right = row[k]
            # [n k] = [n-1 k-1] + q^k [n-1 k]; length k*(n-k)+1
            cs = [0] * (k * (n - k) + 1)
            cs[: len(left)] = left
            for i, c in enumerate(right):
                cs[k + i] += c
            new.append(cs)
        new.append([1])
        row = new
    result = tuple(tuple(cs) for cs in row)
    _row_cache[N] = result
    return result


def gaussian_binomial(N: int, k: int) -> QPolynomial:
    """[N choose k]_q as a dense coefficient vector, exact integers."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if k < 0 or k > N:
        return QPolynomial(())
    row = _pascal_row(N)
    q = QPolynomial.__new__(QPolynomial)
    q.coeffs = row[k]
    return q


def level1_distribution(N: int) -> WeightDistribution:
    """Closed-form distribution for hw = L0 and the word (N, first=0).

    Even N is assembled directly from the Gaussian binomial columns; odd N
    applies one more D_0 to the closed form at N - 1.  No operator
    recursion from the highest weight is involved for even N, which is what
    makes this an independent cross-check of the recursion.
    """
    if N < 0:
        raise ValueError("word length must be nonnegative")
    hw = HighestWeight.fundamental(0)
    if N == 0:
        return WeightDistribution.delta(hw)
    if N % 2:
        return apply_demazure(0, level1_distribution(N - 1))
    row = _pascal_row(N)
    peak = N * N // 4
    half = N // 2
    entries: dict[LatticePoint, int] = {}
    for k in range(N + 1):
        for i, c in enumerate(row[k]):
            a = peak - i
            entries[LatticePoint(a, a - k + half)] = c
    return WeightDistribution._from_raw(hw, entries)


def string_symmetry_shift(N: int, p: LatticePoint) -> int:
    """Shift S with mass(a, b) = mass(a + S, b + S) on level-1 delta strings."""
    if N < 0:
        raise ValueError("word length must be nonnegative")
    a, b = p[0], p[1]
    d = a - b
    if N % 2 == 0:
        return N * N // 4 + d * d - 2 * a
    return (N * N - 1) // 4 + d * d - d - 2 * b


@dataclass(frozen=True)
class PalindromeResult:
    """Outcome of a string-palindromicity scan; witness is a failing point."""

    ok: bool
    witness: LatticePoint | None = None

    def __bool__(self) -> bool:
        return self.ok


def palindromicity_check(mu: WeightDistribution, N: int) -> PalindromeResult:
    """Check every support point against its shifted mirror partner.

    Expects mu to be the level-1 distribution for the word (N, first=0);
    on such input the scan succeeds, and the first point whose mirror
    carries a different mass is reported otherwise.
    """
    for p, c in mu.string_items():
        s = string_symmetry_shift(N, p)
        if mu.mass((p[0] + s, p[1] + s)) != c:
            return PalindromeResult(False, p)
    return PalindromeResult(True)
