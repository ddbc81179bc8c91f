"""Independent dense verification path and seedable system generator.

The dense solver is deliberately unrelated to the banded recurrences: it
clears denominators row by row and runs fraction-free (Bareiss) elimination
with partial pivoting over plain integers, finishing with an exact
back substitution. O(n^3) is accepted; it only ever sees test-sized n.

The generator's PRNG is splitmix64, fixed so the same seed produces the
same system on every platform. Entries in [-m, m] are drawn as
``next_u64() % (2m+1) - m`` (modulo bias is negligible for the tiny
ranges used here and keeps the mapping trivially portable).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import RationalFunction
from .solver import factor_symbolic
from .systems import BackwardPentaSystem, densify, new_system, reverse_rows

_MASK64 = (1 << 64) - 1


class Singular(ArithmeticError):
    """The dense matrix has no pivot in some column: no unique solution."""


class SplitMix64:
    """splitmix64 stream (Steele/Lea/Flood finalizer), 64-bit state."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform_int(self, m: int) -> int:
        """Uniform draw from [-m, m]."""
        return self.next_u64() % (2 * m + 1) - m


def _integer_rows(matrix, rhs=None):
    # Clear denominators per row; returns integer rows (augmented when rhs
    # is given) and the product of the row scale factors.
    n = len(matrix)
    rows = []
    scale = 1
    for i in range(n):
        row = [Fraction(v) for v in matrix[i]]
        if rhs is not None:
            row.append(Fraction(rhs[i]))
        mult = 1
        for v in row:
            mult = mult * v.denominator // _gcd(mult, v.denominator)
        rows.append([int(v * mult) for v in row])
        scale *= mult
    return rows, scale


def _bareiss(rows, width):
    # Fraction-free elimination with partial pivoting on |entry|.
    # Returns (rows upper-triangular in the first n columns, sign) or
    # None in place of sign when a column has no pivot.
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(rows[r][k]))
        if rows[piv][k] == 0:
            return rows, None
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            head = ri[k]
            for j in range(k + 1, width):
                ri[j] = (pivot * ri[j] - head * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return rows, sign


def dense_solve(matrix, rhs) -> tuple:
    """Exact solution of a dense square system; raises Singular."""
    n = len(matrix)
    if len(rhs) != n:
        raise ValueError("rhs length must match matrix size")
    rows, _ = _integer_rows(matrix, rhs)
    rows, sign = _bareiss(rows, n + 1)
    if sign is None:
        raise Singular("no pivot available; matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return tuple(x)


def dense_det(matrix) -> Fraction:
    """Exact determinant (0 for singular matrices)."""
    n = len(matrix)
    rows, scale = _integer_rows(matrix)
    rows, sign = _bareiss(rows, n)
    if sign is None:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1], scale)


_BAND_LENGTHS = {"aa": -2, "a": -1, "d": 0, "b": -1, "bb": -2}
_BAND_FIELDS = {"aa": "a_tilde", "a": "a", "d": "d", "b": "b", "bb": "b_tilde"}
_BAND_BASE = {"aa": 1, "a": 1, "d": 1, "b": 2, "bb": 3}


def _band_slot(pos: str, n: int):
    """Parse a band position like 'd_n', 'd_3' or 'bb_4' to (field, index).

    Band names: aa (a_tilde), a, d, b, bb (b_tilde); the index is the
    conventional 1-based subscript or the letter n.
    """
    try:
        band, idx = pos.rsplit("_", 1)
        length = n + _BAND_LENGTHS[band]
    except (ValueError, KeyError):
        raise ValueError(f"bad band position {pos!r}") from None
    first = _BAND_BASE[band]
    i = n if idx == "n" else int(idx)
    if not first <= i <= first + length - 1:
        raise ValueError(f"band position {pos!r} out of range for n={n}")
    return _BAND_FIELDS[band], i - first


@dataclass(frozen=True)
class GeneratorConfig:
    """Deterministic random-system recipe.

    force_zero_pivots lists band positions (see _band_slot) zeroed after
    generation, e.g. ("d_n",) to knock out the leading pivot. With
    known_solution the rhs is built as A times a small integer vector, so
    the expected solution is known in advance.
    """

    seed: int
    n: int
    entry_range: int = 9
    force_zero_pivots: tuple = ()
    known_solution: bool = True

    def __post_init__(self):
        if self.n < 5:
            raise ValueError("n must be >= 5")
        if self.entry_range < 1:
            raise ValueError("entry_range must be >= 1")


def generate(config: GeneratorConfig) -> BackwardPentaSystem:
    """Produce the system determined by the config (same seed, same system)."""
    rng = SplitMix64(config.seed)
    n, m = config.n, config.entry_range
    draw = lambda k: [rng.uniform_int(m) for _ in range(k)]
    bands = {
        "a_tilde": draw(n - 2),
        "a": draw(n - 1),
        "d": draw(n),
        "b": draw(n - 1),
        "b_tilde": draw(n - 2),
    }
    for pos in config.force_zero_pivots:
        fld, idx = _band_slot(pos, n)
        bands[fld][idx] = 0
    if config.known_solution:
        sol = [rng.uniform_int(3) for _ in range(n)]
        probe = new_system(bands["a_tilde"], bands["a"], bands["d"],
                           bands["b"], bands["b_tilde"], [0] * n)
        y = [sum(row[j] * sol[j] for j in range(n)) for row in densify(probe)]
    else:
        y = draw(n)
    return new_system(bands["a_tilde"], bands["a"], bands["d"],
                      bands["b"], bands["b_tilde"], y)


def force_interior_zero_pivot(system: BackwardPentaSystem, i: int):
    """Adjust one anti-diagonal entry so pivot beta_i becomes exactly zero.

    beta_i depends on d_(n-i+1) only through an additive term, and the
    pivots before i do not read that entry, so shifting it by -beta_i
    zeroes the pivot without disturbing beta_1..beta_(i-1). Returns the
    modified system, or None when beta_i is not a constant (an earlier
    pivot was already zero, so the system already exercises the rescue
    path).
    """
    n = system.n
    if not 2 <= i <= n:
        raise ValueError("interior pivot index must be in 2..n")
    exact = system.map_scalars(Fraction)
    lifted = exact.map_scalars(RationalFunction.constant)
    lu = factor_symbolic(reverse_rows(lifted))
    beta_i = lu.beta[i - 1]
    if beta_i.num.degree > 0 or beta_i.den.degree > 0:
        return None
    shift = beta_i.eval_at_zero()
    d = list(exact.d)
    d[n - i] -= shift  # d_(n-i+1)
    return new_system(exact.a_tilde, exact.a, d, exact.b, exact.b_tilde, exact.y)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
