"""Covariance-matrix dynamics: drift, diffusion, propagation, steady state.

Under Markovian damping the covariance matrix obeys the linear flow

    d(sigma)/dt = M sigma + sigma M^T + 2 D,

with drift matrix M (harmonic motion, position coupling, uniform damping
-lambda on the diagonal) and diagonal diffusion matrix D carrying the
thermal occupation factors coth(omega_i / 2T). When M is strictly stable
the solution has the closed form

    sigma(t) = e^{Mt} (sigma(0) - sigma_inf) (e^{Mt})^T + sigma_inf,

where sigma_inf is the unique solution of M S + S M^T = -2 D. Both the
closed form and an independent fixed-step Runge-Kutta integrator of the
differential form are provided; the integrator also covers the marginal
cases (lambda = 0 or |nu| = omega1*omega2) where no steady state exists.

All functions are pure; different time points or parameter sets may be
evaluated concurrently with no shared state.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import SteadyStateUnavailable
from .model import SystemParams, check_covariance, mode_frequencies, require_valid

__all__ = [
    "thermal_coth",
    "build_drift",
    "build_diffusion",
    "mat_exp",
    "steady_state",
    "steady_state_available",
    "propagate",
    "ode_oracle",
]


def thermal_coth(omega_i: float, temperature: float) -> float:
    """Thermal occupation factor coth(omega_i / (2*T)) = 2*nbar + 1.

    Returns exactly 1.0 at T = 0 (and whenever the argument is large enough
    to underflow); computed as 1 + 2/(e^{omega/T} - 1), which is
    overflow-free and accurate for small arguments as well.
    """
    if not omega_i > 0:
        raise ValueError(f"omega_i must be > 0 (got {omega_i})")
    if not temperature >= 0:
        raise ValueError(f"temperature must be >= 0 (got {temperature})")
    if temperature == 0.0:
        return 1.0
    x = omega_i / temperature
    if x > 700.0:
        return 1.0
    return 1.0 + 2.0 / math.expm1(x)


def build_drift(params: SystemParams) -> np.ndarray:
    """Drift matrix M of the covariance flow, in (x1, p1, x2, p2) ordering.

    Rows are (-lambda, 1, 0, 0), (-omega1^2, -lambda, -nu, 0),
    (0, 0, -lambda, 1), (-nu, 0, -omega2^2, -lambda). Strictly stable
    (all eigenvalue real parts equal to -lambda) whenever lambda > 0 and
    |nu| < omega1*omega2.
    """
    require_valid(params)
    w1, w2 = mode_frequencies(params)
    lam = params.lambda_
    nu = params.nu
    return np.array(
        [
            [-lam, 1.0, 0.0, 0.0],
            [-w1 * w1, -lam, -nu, 0.0],
            [0.0, 0.0, -lam, 1.0],
            [-nu, 0.0, -w2 * w2, -lam],
        ]
    )


def build_diffusion(params: SystemParams) -> np.ndarray:
    """Diagonal of the diffusion matrix D as a length-4 vector.

    Entries are (lambda/omega1 * c1, lambda*omega1 * c1,
    lambda/omega2 * c2, lambda*omega2 * c2) with c_i = coth(omega_i / 2T);
    all nonnegative, and exactly zero when lambda = 0.
    """
    require_valid(params)
    w1, w2 = mode_frequencies(params)
    lam = params.lambda_
    c1 = thermal_coth(w1, params.temperature)
    c2 = thermal_coth(w2, params.temperature)
    return np.array([lam / w1 * c1, lam * w1 * c1, lam / w2 * c2, lam * w2 * c2])


# Pade-13 numerator coefficients and the largest scaled norm for which the
# approximant stays at double-precision accuracy.
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
)
_THETA13 = 5.371920351148152


def mat_exp(m: np.ndarray, t: float = 1.0) -> np.ndarray:
    """Matrix exponential e^{m*t} by scaling and squaring.

    m*t is scaled by a power of two chosen from its 1-norm so that the
    order-13 diagonal rational (Pade) approximant is at full double
    precision, then the result is squared back up. Relative accuracy is
    around 1e-14 for the well-conditioned 4x4 drift matrices used here.
    """
    a = np.asarray(m, dtype=float) * float(t)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square (got shape {a.shape})")
    norm = np.linalg.norm(a, 1)
    if norm == 0.0:
        return np.eye(a.shape[0])
    squarings = 0
    if norm > _THETA13:
        squarings = int(math.ceil(math.log2(norm / _THETA13)))
        a = a / (2.0 ** squarings)
    b = _PADE13
    ident = np.eye(a.shape[0])
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a2 @ a4
    u = a @ (
        a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
        + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident
    )
    v = (
        a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
        + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident
    )
    result = np.linalg.solve(v - u, v + u)
    for _ in range(squarings):
        result = result @ result
    return result


def steady_state_available(params: SystemParams) -> bool:
    """True iff the asymptotic covariance solve is accepted for ``params``.

    Requires lambda > 0 and |nu| strictly below omega1*omega2; marginal
    sets are rejected by :func:`steady_state` and :func:`propagate`.
    """
    w1, w2 = mode_frequencies(params)
    return params.lambda_ > 0.0 and abs(params.nu) < w1 * w2


_RESIDUAL_TOL = 1e-10


def steady_state(params: SystemParams) -> np.ndarray:
    """Asymptotic covariance matrix: the solution S of M S + S M^T = -2 D.

    The equation is vectorized to the 16x16 Kronecker-sum system
    (kron(M, I) + kron(I, M)) vec(S) = -2 vec(D) and solved by dense LU
    with partial pivoting; the result is symmetrized and its residual is
    verified to be below 1e-10 in max-abs.

    Raises :class:`SteadyStateUnavailable` for marginal parameter sets
    (lambda = 0 or |nu| = omega1*omega2) and whenever the linear system is
    singular or too ill-conditioned to meet the residual bound.
    """
    require_valid(params)
    if not steady_state_available(params):
        raise SteadyStateUnavailable(
            "steady state requires lambda > 0 and |nu| < omega1*omega2; "
            f"got lambda={params.lambda_}, nu={params.nu}"
        )
    m = build_drift(params)
    d = np.diag(build_diffusion(params))
    ident = np.eye(4)
    kron_sum = np.kron(m, ident) + np.kron(ident, m)
    try:
        vec = np.linalg.solve(kron_sum, -2.0 * d.reshape(-1))
    except np.linalg.LinAlgError as exc:
        raise SteadyStateUnavailable(
            f"steady-state linear system is singular: {exc}"
        ) from exc
    s = vec.reshape(4, 4)
    s = 0.5 * (s + s.T)
    residual = np.abs(m @ s + s @ m.T + 2.0 * d).max()
    if residual > _RESIDUAL_TOL:
        raise SteadyStateUnavailable(
            f"steady-state residual {residual:g} exceeds {_RESIDUAL_TOL:g} "
            "(system near-singular)"
        )
    return s


def propagate(sigma0, params: SystemParams, t: float) -> np.ndarray:
    """Closed-form covariance at time t >= 0 from initial state ``sigma0``.

    Evaluates e^{Mt} (sigma0 - sigma_inf) (e^{Mt})^T + sigma_inf and
    symmetrizes the result to suppress roundoff asymmetry. Requires a
    steady state to exist; marginal parameter sets raise
    :class:`SteadyStateUnavailable` and must use :func:`ode_oracle`.
    """
    if not t >= 0:
        raise ValueError(f"time must be >= 0 (got {t})")
    sigma0 = check_covariance(sigma0)
    s_inf = steady_state(params)
    e = mat_exp(build_drift(params), t)
    s = e @ (sigma0 - s_inf) @ e.T + s_inf
    return 0.5 * (s + s.T)


def ode_oracle(sigma0, params: SystemParams, t: float, dt: float = 1e-3) -> np.ndarray:
    """Integrate d(sigma)/dt = M sigma + sigma M^T + 2 D by classical RK4.

    Fixed-step fourth-order Runge-Kutta with global error O(dt^4).
    Deliberately independent of the closed form (no matrix exponential, no
    steady state), so the two routes cross-check each other; unlike
    :func:`propagate` it is valid for every parameter set, including
    lambda = 0 and marginal coupling.

    t must be >= 0 and dt in (0, t] (any t is fine when it is an integer
    multiple of dt; otherwise a final shorter step covers the remainder).
    """
    if not t >= 0:
        raise ValueError(f"time must be >= 0 (got {t})")
    sigma0 = check_covariance(sigma0)
    require_valid(params)
    if t == 0.0:
        return sigma0
    if not 0.0 < dt <= t:
        raise ValueError(f"dt must be in (0, t] (got dt={dt}, t={t})")

    m = build_drift(params)
    mt = m.T
    d2 = 2.0 * np.diag(build_diffusion(params))

    def rhs(s):
        return m @ s + s @ mt + d2

    n_steps = int(math.floor(t / dt + 1e-9))
    remainder = t - n_steps * dt
    if remainder < 1e-12 * max(t, 1.0):
        remainder = 0.0

    s = sigma0
    for step in range(n_steps + 1):
        h = dt if step < n_steps else remainder
        if h == 0.0:
            break
        k1 = rhs(s)
        k2 = rhs(s + (0.5 * h) * k1)
        k3 = rhs(s + (0.5 * h) * k2)
        k4 = rhs(s + h * k3)
        s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        s = 0.5 * (s + s.T)
    return s
