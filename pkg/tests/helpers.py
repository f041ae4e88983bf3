"""Shared test utilities: random physical states and caption parameter sets."""

from __future__ import annotations

import math

import numpy as np

from oscbath import SystemParams

# Parameter sets fixed by the four figure captions (omega = 1 throughout).
# Panels that sweep the temperature leave it free; 0.2 is the value the
# companion panels fix, and is used wherever a concrete set is needed.
FIG1A = SystemParams(omega=1.0, epsilon=0.0, nu=0.8, lambda_=0.6,
                     temperature=0.2, r=1.0)
FIG2A = SystemParams(omega=1.0, epsilon=0.0, nu=0.8, lambda_=0.6,
                     temperature=0.2, r=2.0)
FIG4 = SystemParams(omega=1.0, epsilon=0.5, nu=0.6, lambda_=0.6,
                    temperature=0.2, r=2.0)


def single_mode_rotations(theta1: float, theta2: float) -> np.ndarray:
    """Block-diagonal symplectic rotation of each mode in its (x, p) plane."""
    out = np.zeros((4, 4))
    for block, theta in ((0, theta1), (2, theta2)):
        c, s = math.cos(theta), math.sin(theta)
        out[block, block] = c
        out[block, block + 1] = s
        out[block + 1, block] = -s
        out[block + 1, block + 1] = c
    return out


def single_mode_squeezes(r1: float, r2: float) -> np.ndarray:
    return np.diag([math.exp(r1), math.exp(-r1), math.exp(r2), math.exp(-r2)])


def mode_mixer(theta: float) -> np.ndarray:
    """Orthogonal symplectic mixing of the two modes (beam-splitter-like)."""
    c, s = math.cos(theta), math.sin(theta)
    eye2 = np.eye(2)
    return np.block([[c * eye2, s * eye2], [-s * eye2, c * eye2]])


def random_symplectic(rng: np.random.Generator, max_squeeze: float = 1.0) -> np.ndarray:
    s = single_mode_rotations(rng.uniform(0, 2 * math.pi),
                              rng.uniform(0, 2 * math.pi))
    s = s @ single_mode_squeezes(rng.uniform(-max_squeeze, max_squeeze),
                                 rng.uniform(-max_squeeze, max_squeeze))
    s = s @ mode_mixer(rng.uniform(0, 2 * math.pi))
    s = s @ single_mode_rotations(rng.uniform(0, 2 * math.pi),
                                  rng.uniform(0, 2 * math.pi))
    return s


def random_physical_cov(rng: np.random.Generator,
                        max_squeeze: float = 1.0) -> np.ndarray:
    """Random physical covariance matrix S T S^T in Williamson form.

    T = diag(a, a, b, b) with a, b >= 1 are the symplectic eigenvalues;
    with probability ~0.2 a mode sits exactly at the pure-state boundary,
    exercising the degenerate code paths.
    """
    a = 1.0 if rng.random() < 0.2 else 1.0 + rng.exponential(0.5)
    b = 1.0 if rng.random() < 0.2 else 1.0 + rng.exponential(0.5)
    s = random_symplectic(rng, max_squeeze=max_squeeze)
    sigma = s @ np.diag([a, a, b, b]) @ s.T
    return 0.5 * (sigma + sigma.T)


def random_valid_params(rng: np.random.Generator) -> SystemParams:
    """Random parameter set with lambda > 0 and |nu| strictly inside the bound."""
    omega = rng.uniform(0.5, 2.0)
    epsilon = rng.uniform(0.0, 0.9)
    bound = omega * omega * math.sqrt(1.0 - epsilon * epsilon)
    return SystemParams(
        omega=omega,
        epsilon=epsilon,
        nu=rng.uniform(-0.95, 0.95) * bound,
        lambda_=rng.uniform(0.1, 1.5),
        temperature=0.0 if rng.random() < 0.15 else rng.uniform(0.0, 2.0),
        r=rng.uniform(0.0, 2.0),
    )


def parse_csv(text: str):
    """Split CSV text into (metadata lines, header fields, data rows)."""
    meta, header, rows = [], None, []
    for line in text.splitlines():
        if line.startswith("#"):
            meta.append(line)
        elif header is None:
            header = line.split(",")
        elif line:
            rows.append(dict(zip(header, line.split(","))))
    return meta, header, rows
