"""System parameters and initial states for two coupled oscillators in a bath.

The model consists of two harmonic oscillators with frequencies
``omega1 = omega*sqrt(1 + epsilon)`` and ``omega2 = omega*sqrt(1 - epsilon)``,
coupled through their positions with strength ``nu`` and damped at rate
``lambda_`` by a thermal bath of temperature ``temperature``. Natural units
(hbar = m = k_B = 1) are used everywhere, so the vacuum covariance matrix is
the 4x4 identity. Phase-space ordering is (x1, p1, x2, p2) throughout the
package; no other ordering or normalization is supported.

All types are immutable and all functions are pure, so everything here is
safe to use from concurrent code without coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameters

__all__ = [
    "SystemParams",
    "ValidationResult",
    "validate",
    "require_valid",
    "mode_frequencies",
    "initial_squeezed_vacuum",
    "check_covariance",
]


@dataclass(frozen=True)
class SystemParams:
    """Full parameter tuple of the model, in natural units.

    Attributes:
        omega: base angular frequency, > 0.
        epsilon: frequency asymmetry, 0 <= epsilon < 1 (0 means identical
            oscillators).
        nu: position-position coupling constant; negative values attract,
            positive repel. Physical only for |nu| <= omega1*omega2.
        lambda_: dissipation rate, >= 0.
        temperature: bath temperature, >= 0.
        r: squeezing of the initial two-mode squeezed vacuum, >= 0.
    """

    omega: float
    epsilon: float
    nu: float
    lambda_: float
    temperature: float
    r: float


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of :func:`validate`: violations are fatal, warnings are not."""

    ok: bool
    violations: tuple[str, ...]
    warnings: tuple[str, ...]


def validate(params: SystemParams) -> ValidationResult:
    """Check every parameter constraint and report all failures at once.

    Marginal sets (|nu| exactly at the omega1*omega2 bound, or lambda = 0)
    are accepted but flagged with a warning, because the closed-form
    propagation needs a strictly stable drift and will reject them.
    """
    violations = []
    warnings = []
    p = params

    if not p.omega > 0:
        violations.append(f"omega must be > 0 (got {p.omega})")
    if not 0.0 <= p.epsilon < 1.0:
        violations.append(f"epsilon must satisfy 0 <= epsilon < 1 (got {p.epsilon})")
    if not p.lambda_ >= 0:
        violations.append(f"lambda must be >= 0 (got {p.lambda_})")
    if not p.temperature >= 0:
        violations.append(f"temperature must be >= 0 (got {p.temperature})")
    if not p.r >= 0:
        violations.append(f"r must be >= 0 (got {p.r})")

    if p.omega > 0 and 0.0 <= p.epsilon < 1.0:
        w1 = p.omega * math.sqrt(1.0 + p.epsilon)
        w2 = p.omega * math.sqrt(1.0 - p.epsilon)
        bound = w1 * w2
        if not abs(p.nu) <= bound:
            violations.append(
                f"|nu| <= omega1*omega2 violated (|{p.nu}| > {bound:.12g})"
            )
        elif abs(p.nu) == bound:
            warnings.append(
                "marginal coupling |nu| = omega1*omega2: steady state "
                "unavailable, use the rk4 integrator"
            )

    if p.lambda_ == 0:
        warnings.append(
            "lambda = 0: no dissipation, steady state unavailable, "
            "use the rk4 integrator"
        )

    return ValidationResult(
        ok=not violations,
        violations=tuple(violations),
        warnings=tuple(warnings),
    )


def require_valid(params: SystemParams) -> None:
    """Raise :class:`InvalidParameters` listing every violated constraint."""
    result = validate(params)
    if not result.ok:
        raise InvalidParameters("; ".join(result.violations))


def mode_frequencies(params: SystemParams) -> tuple[float, float]:
    """Return (omega1, omega2) = omega*(sqrt(1+epsilon), sqrt(1-epsilon)).

    omega1 >= omega2 > 0 for any valid parameter set.
    """
    p = params
    if not (p.omega > 0 and 0.0 <= p.epsilon < 1.0):
        raise InvalidParameters(
            f"mode frequencies need omega > 0 and 0 <= epsilon < 1 "
            f"(got omega={p.omega}, epsilon={p.epsilon})"
        )
    return p.omega * math.sqrt(1.0 + p.epsilon), p.omega * math.sqrt(1.0 - p.epsilon)


def initial_squeezed_vacuum(r: float) -> np.ndarray:
    """Covariance matrix of a two-mode squeezed vacuum with squeezing r >= 0.

    Diagonal entries are cosh(2r); the (x1, x2) correlations are +sinh(2r)
    and the (p1, p2) correlations are -sinh(2r). The state is pure:
    det(sigma) = 1 and both symplectic eigenvalues equal 1. r = 0 gives the
    vacuum (identity matrix).
    """
    if not r >= 0:
        raise InvalidParameters(f"squeezing r must be >= 0 (got {r})")
    ch = math.cosh(2.0 * r)
    sh = math.sinh(2.0 * r)
    return np.array(
        [
            [ch, 0.0, sh, 0.0],
            [0.0, ch, 0.0, -sh],
            [sh, 0.0, ch, 0.0],
            [0.0, -sh, 0.0, ch],
        ]
    )


def check_covariance(sigma, atol: float = 1e-12) -> np.ndarray:
    """Validate a covariance matrix and return it as a fresh float array.

    Requires a real, finite 4x4 matrix that is symmetric within ``atol``
    in max-abs. Positive definiteness is not enforced here; sub-vacuum and
    outright non-physical matrices are diagnosed by the measures module.
    """
    arr = np.array(sigma, dtype=float)
    if arr.shape != (4, 4):
        raise ValueError(f"covariance matrix must be 4x4 (got shape {arr.shape})")
    if not np.all(np.isfinite(arr)):
        raise ValueError("covariance matrix entries must be finite")
    asym = np.abs(arr - arr.T).max()
    if asym > atol:
        raise ValueError(
            f"covariance matrix must be symmetric within {atol:g} "
            f"(max asymmetry {asym:g})"
        )
    return arr
