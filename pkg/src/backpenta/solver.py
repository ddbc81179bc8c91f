"""Linear-time LU solve of backward pentadiagonal systems.

Two modes share one set of recurrences, written once over whatever scalar
type the system carries:

* numeric/exact: fails fast on a zero pivot beta_i;
* symbolic rescue: every identically-zero pivot is replaced by a single
  placeholder symbol, all downstream quantities become rational functions
  of it, and the finished solution and determinant are evaluated at
  placeholder = 0.

All pivot/band indices in errors and reports are 1-based, matching the
conventional subscripts (beta_1 .. beta_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ratfunc import PoleAtZero, RationalFunction
from .systems import BackwardPentaSystem, PentaSystem, reverse_rows


class ZeroPivot(ArithmeticError):
    """A pivot beta_i is zero: the factorization cannot continue.

    In float/exact mode the caller may retry with solve_symbolic.
    """

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"zero pivot beta[{index}]")


class IdenticallySingular(PoleAtZero):
    """The last pivot beta_n is identically zero and the placeholder
    substitution yields no finite solution: the system is singular."""


@dataclass(frozen=True)
class LUFactors:
    """Vectors of the factorization A1 = L U.

    alpha[i-1] = alpha_i (i = 1..n-1): first superdiagonal of U.
    beta[i-1]  = beta_i  (i = 1..n):   diagonal of U (the pivots).
    gamma[i-2] = gamma_i (i = 2..n):   first subdiagonal of L.
    The second superdiagonal of U is the b_tilde band and the second
    subdiagonal of L is a_tilde_(n-i+1)/beta_(i-2); neither needs storage.
    """

    n: int
    alpha: tuple
    beta: tuple
    gamma: tuple

    replacements: tuple = ()  # 1-based pivot indices replaced by the symbol


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a solve: solution in original order x_1..x_n plus
    diagnostics."""

    x: tuple
    det: object
    mode: str
    pivot_replacements: tuple = ()
    x_presub: Optional[tuple] = None  # symbolic mode: pre-substitution solution
    z: tuple = ()


def _zero_test(tol):
    if tol is None:
        return lambda s: not s
    return lambda s: not s or abs(s) < tol


def factor(system: PentaSystem, tol=None) -> LUFactors:
    """LU-factor A1; raises ZeroPivot(i) at the first zero pivot.

    With tol set (float mode), pivots smaller than tol in magnitude also
    count as zero. No row exchanges are ever performed.
    """
    is_zero = _zero_test(tol)

    def fail(i):
        raise ZeroPivot(i)

    return _factor(system, is_zero, fail)


def factor_symbolic(system: PentaSystem) -> LUFactors:
    """Factor over the rational-function field, substituting the
    placeholder symbol for each identically zero pivot as it appears."""
    sym = RationalFunction.x()
    hits = []

    def replace(i):
        hits.append(i)
        return sym

    lu = _factor(system, lambda s: not s, replace)
    return LUFactors(lu.n, lu.alpha, lu.beta, lu.gamma, tuple(hits))


def _factor(sys: PentaSystem, is_zero, on_zero) -> LUFactors:
    n = sys.n
    at, a, d, b, bt = sys.a_tilde, sys.a, sys.d, sys.b, sys.b_tilde
    alpha = [None] * (n - 1)
    beta = [None] * n
    gamma = [None] * (n - 1)  # gamma[i-2] = gamma_i

    def checked(i, value):
        return on_zero(i) if is_zero(value) else value

    beta[0] = checked(1, d[n - 1])
    gamma[0] = a[n - 2] / beta[0]
    alpha[0] = b[n - 2]
    beta[1] = checked(2, d[n - 2] - alpha[0] * gamma[0])
    alpha[1] = b[n - 3] - gamma[0] * bt[n - 3]
    for i in range(3, n):
        mult = at[n - i] / beta[i - 3]  # a~_(n-i+1) / beta_(i-2)
        g = (a[n - i] - mult * alpha[i - 3]) / beta[i - 2]
        gamma[i - 2] = g
        alpha[i - 1] = b[n - i - 1] - g * bt[n - i - 1]
        beta[i - 1] = checked(i, d[n - i] - mult * bt[n - i] - alpha[i - 2] * g)
    mult = at[0] / beta[n - 3]
    gamma[n - 2] = (a[0] - mult * alpha[n - 3]) / beta[n - 2]
    beta[n - 1] = checked(n, d[0] - mult * bt[0] - alpha[n - 2] * gamma[n - 2])

    return LUFactors(n, tuple(alpha), tuple(beta), tuple(gamma))


def forward_sweep(system: PentaSystem, lu: LUFactors) -> tuple:
    """Solve L z = Y1 (unit lower-triangular sweep)."""
    n, y1 = system.n, system.y1
    at, beta, gamma = system.a_tilde, lu.beta, lu.gamma
    z = [None] * n
    z[0] = y1[0]
    z[1] = y1[1] - gamma[0] * z[0]
    for i in range(3, n + 1):
        z[i - 1] = (y1[i - 1] - (at[n - i] / beta[i - 3]) * z[i - 3]
                    - gamma[i - 2] * z[i - 2])
    return tuple(z)


def back_substitute(system: PentaSystem, lu: LUFactors, z) -> tuple:
    """Solve U x = z; the result is already in original order x_1..x_n."""
    n = system.n
    bt, alpha, beta = system.b_tilde, lu.alpha, lu.beta
    x = [None] * n
    x[n - 1] = z[n - 1] / beta[n - 1]
    x[n - 2] = (z[n - 2] - alpha[n - 2] * x[n - 1]) / beta[n - 2]
    for i in range(n - 2, 0, -1):
        x[i - 1] = (z[i - 1] - alpha[i - 1] * x[i]
                    - bt[n - i - 2] * x[i + 1]) / beta[i - 1]
    return tuple(x)


def determinant(lu: LUFactors):
    """det(A1) as the product of the pivots; in symbolic mode the product
    is evaluated at placeholder = 0 before reporting."""
    det = lu.beta[0]
    for b in lu.beta[1:]:
        det = det * b
    if isinstance(det, RationalFunction):
        det = det.eval_at_zero()
    return det


def det_original(lu: LUFactors):
    """det(A) = (-1)^floor(n/2) det(A1): parity of the row reversal."""
    det = determinant(lu)
    return -det if (lu.n // 2) % 2 else det


def solve(system: BackwardPentaSystem, mode: str = "exact",
          tol: Optional[float] = None) -> SolveReport:
    """Solve AX=Y by LU factorization of the row-reversed system.

    mode "exact" lifts all scalars to Fraction; mode "float" to float.
    Raises ZeroPivot(i) when a pivot is zero (with tol, in float mode,
    also when |beta_i| < tol); the symbolic solver handles those cases.
    """
    if mode == "float":
        lifted = system.map_scalars(float)
    elif mode == "exact":
        lifted = system.map_scalars(Fraction)
        tol = None
    else:
        raise ValueError(f"unknown mode {mode!r}; use solve_symbolic for symbolic")
    p = reverse_rows(lifted)
    lu = factor(p, tol=tol)
    z = forward_sweep(p, lu)
    x = back_substitute(p, lu, z)
    return SolveReport(x=x, det=determinant(lu), mode=mode, z=z)


def solve_symbolic(system: BackwardPentaSystem) -> SolveReport:
    """Solve AX=Y over the rational-function field, rescuing zero pivots.

    Each identically-zero pivot becomes the placeholder symbol; the
    solution components and the determinant are then evaluated at
    placeholder = 0. Raises PoleAtZero when that substitution hits a pole
    (IdenticallySingular when the failing pivot is beta_n itself).
    """
    lifted = system.map_scalars(lambda v: RationalFunction.constant(Fraction(v)))
    p = reverse_rows(lifted)
    lu = factor_symbolic(p)
    replaced = lu.replacements
    z = forward_sweep(p, lu)
    x_presub = back_substitute(p, lu, z)
    try:
        x = tuple(xi.eval_at_zero() for xi in x_presub)
        det = determinant(lu)
    except PoleAtZero:
        if lu.n in replaced:
            raise IdenticallySingular(
                f"beta[{lu.n}] is identically zero; no finite solution") from None
        raise
    return SolveReport(x=x, det=det, mode="symbolic",
                       pivot_replacements=replaced, x_presub=x_presub, z=z)
