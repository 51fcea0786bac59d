"""Closure properties of model subspaces.

Two exact decisions and one numerical verification:

* Lie closure: every commutator of generators stays in the span.
* Matrix-algebra closure: every plain product of generators stays in the
  span (strictly stronger; algebra closure implies Lie closure).
* Multiplicative closure: sampled products of substitution matrices
  e^{Q1 t1} e^{Q2 t2} are pushed through the matrix logarithm and the
  result is checked against the span numerically.

The first two run on exact rational matrices.  Floating point enters the
package only here, in expm/logm and the sampled verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .linalg import Matrix, Scalar
from .modelgen import ModelSubspace, contains

EXPM_TERM_TOL = 1e-18
EXPM_SCALE_LIMIT = 0.5
LOGM_SERIES_RADIUS = 0.25
LOGM_MAX_SQRT_DEPTH = 40


class LogmConvergenceError(ArithmeticError):
    """Principal matrix logarithm did not converge for this input."""


@dataclass(frozen=True)
class ClosureWitness:
    """Offending generator pair and the matrix that escapes the span."""

    i: int
    j: int
    matrix: Matrix


@dataclass(frozen=True)
class ClosureCheck:
    closed: bool
    witness: ClosureWitness | None


@dataclass(frozen=True)
class ClosureReport:
    lie_closed: bool
    lie_witness: ClosureWitness | None
    algebra_closed: bool
    algebra_witness: ClosureWitness | None
    numeric_trials: int
    discarded_trials: int
    max_residual: float
    tolerance: float
    status: str  # "pass" | "fail" | "inconclusive"


def commutator(
    a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]
) -> Matrix:
    """The Lie bracket AB - BA, exact; preserves zero column sums."""
    a = linalg.mat(a)
    b = linalg.mat(b)
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return linalg.mat_sub(linalg.mat_mul(a, b), linalg.mat_mul(b, a))


def check_lie_closed(m: ModelSubspace) -> ClosureCheck:
    """Exact test of commutator closure over all generator pairs."""
    gens = m.basis
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            br = commutator(gens[i], gens[j])
            if contains(m, br) is None:
                return ClosureCheck(False, ClosureWitness(i, j, br))
    return ClosureCheck(True, None)


def check_algebra_closed(m: ModelSubspace) -> ClosureCheck:
    """Exact test of product closure over all ordered generator pairs.

    Semigroup-derived generators satisfy L_i L_j = -L_i - L_j + L_k with
    a_i a_j = a_k, so derived models always pass; fixture models may not.
    Cross products are tested before squares, so the witness of a failure
    is the first escaping product of two distinct generators when one
    exists.
    """
    gens = m.basis
    n = len(gens)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    pairs += [(i, i) for i in range(n)]
    for i, j in pairs:
        prod = linalg.mat_mul(gens[i], gens[j])
        if contains(m, prod) is None:
            return ClosureCheck(False, ClosureWitness(i, j, prod))
    return ClosureCheck(True, None)


def _norm1(a: np.ndarray) -> float:
    """Maximum absolute column sum."""
    return float(np.abs(a).sum(axis=0).max(initial=0.0))


def expm(q: Sequence[Sequence[float]], t: float = 1.0) -> np.ndarray:
    """Matrix exponential e^{Qt} by scaling and squaring.

    The scaled matrix has 1-norm <= 0.5 and the Taylor series is summed
    until the term norm drops below 1e-18.  For a rate matrix Q and
    t >= 0 the result is column-stochastic to high accuracy.
    """
    a = np.asarray(q, dtype=float) * float(t)
    k = a.shape[0]
    norm = _norm1(a)
    s = 0
    while norm > EXPM_SCALE_LIMIT:
        norm /= 2.0
        s += 1
    x = a / (2.0**s)
    result = np.eye(k)
    term = np.eye(k)
    n = 1
    while True:
        term = term @ x / n
        result = result + term
        if _norm1(term) < EXPM_TERM_TOL or n > 60:
            break
        n += 1
    for _ in range(s):
        result = result @ result
    return result


def _sqrtm_principal(a: np.ndarray) -> np.ndarray:
    """Principal square root by the Denman-Beavers iteration."""
    y = a
    z = np.eye(a.shape[0])
    for _ in range(64):
        try:
            y_next = 0.5 * (y + np.linalg.inv(z))
            z_next = 0.5 * (z + np.linalg.inv(y))
        except np.linalg.LinAlgError as exc:
            raise LogmConvergenceError(f"singular iterate: {exc}") from None
        delta = _norm1(y_next - y)
        y, z = y_next, z_next
        if delta <= 1e-15 * max(1.0, _norm1(y)):
            return y
    raise LogmConvergenceError("square-root iteration did not converge")


def logm(p: Sequence[Sequence[float]]) -> np.ndarray:
    """Principal matrix logarithm by inverse scaling and squaring.

    Repeated principal square roots bring the argument within 1-norm
    0.25 of the identity, where the alternating power series converges
    fast; the series sum is then scaled back up.  Products of
    substitution matrices can sit far from the identity, hence the
    square-root stage; depth is capped at 40.
    """
    a = np.asarray(p, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("logm needs a square matrix")
    k = a.shape[0]
    ident = np.eye(k)
    depth = 0
    while _norm1(a - ident) >= LOGM_SERIES_RADIUS:
        if depth >= LOGM_MAX_SQRT_DEPTH:
            raise LogmConvergenceError(
                f"still outside series radius after {depth} square roots"
            )
        a = _sqrtm_principal(a)
        depth += 1
    x = a - ident
    total = np.zeros_like(a)
    power = ident
    for n in range(1, 200):
        power = power @ x
        term = power / n
        total = total + (term if n % 2 else -term)
        if _norm1(term) < EXPM_TERM_TOL:
            break
    return total * (2.0**depth)


def _span_projector(m: ModelSubspace) -> np.ndarray | None:
    if m.dim == 0:
        return None
    rows = np.array([[float(x) for x in row] for row in m.rref])
    return rows.T  # k^2 x dim


def verify_multiplicative_closure(
    m: ModelSubspace,
    trials: int = 100,
    tol: float = 1e-6,
    seed: int = 0,
    t_max: float = 1.0,
    retry_budget: int = 5,
) -> ClosureReport:
    """Sampled numerical check that log(e^{Q1 t1} e^{Q2 t2}) stays in the span.

    Each trial draws Q1, Q2 as random positive combinations of the
    generators (coefficients uniform in (0, 1]) and times in (0, t_max],
    multiplies the two substitution matrices, takes the principal log,
    and measures the max-abs residual against the least-squares
    projection onto the span.  Membership of a subspace is scale
    invariant, so the unnormalized log is tested.

    Per-trial RNG streams are derived from (seed, trial) so runs are
    reproducible and order-independent.  A trial whose logarithm fails to
    converge is resampled up to ``retry_budget`` times; if any trial
    exhausts the budget the verdict is "inconclusive" rather than a
    pass or fail.
    """
    if m.dim < 1:
        raise ValueError("degenerate model: dimension 0")
    gens = np.array(
        [[[float(x) for x in row] for row in g] for g in m.basis]
    )
    proj = _span_projector(m)
    max_residual = 0.0
    discarded = 0
    exhausted = False
    for trial in range(trials):
        done = False
        for attempt in range(retry_budget):
            rng = np.random.default_rng([seed, trial, attempt])
            c1 = 1.0 - rng.random(len(gens))
            c2 = 1.0 - rng.random(len(gens))
            t1 = (1.0 - rng.random()) * t_max
            t2 = (1.0 - rng.random()) * t_max
            q1 = np.tensordot(c1, gens, axes=1)
            q2 = np.tensordot(c2, gens, axes=1)
            prod = expm(q1, t1) @ expm(q2, t2)
            try:
                x = logm(prod)
            except LogmConvergenceError:
                discarded += 1
                continue
            v = x.reshape(-1)
            coeffs, *_ = np.linalg.lstsq(proj, v, rcond=None)
            residual = float(np.abs(v - proj @ coeffs).max())
            max_residual = max(max_residual, residual)
            done = True
            break
        if not done:
            exhausted = True
    lie = check_lie_closed(m)
    algebra = check_algebra_closed(m)
    if exhausted:
        status = "inconclusive"
    else:
        status = "pass" if max_residual < tol else "fail"
    return ClosureReport(
        lie_closed=lie.closed,
        lie_witness=lie.witness,
        algebra_closed=algebra.closed,
        algebra_witness=algebra.witness,
        numeric_trials=trials,
        discarded_trials=discarded,
        max_residual=max_residual,
        tolerance=tol,
        status=status,
    )
