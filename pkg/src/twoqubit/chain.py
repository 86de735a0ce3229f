"""Entanglement transfer down a chain of noisy swaps.

Each hop swaps the carrier qubit with the next node and applies
depolarizing noise of strength epsilon, so after n hops an initial pure
state with invariant q = |ad - bc| has

    lambda_min(n) = (1/4) [1 - (1 - eps)^n (1 + 4 q)]

as the smallest partial-transpose eigenvalue. Entanglement survives while
this is negative, which bounds the transfer distance and, for a wanted
distance, the tolerable noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .separability import TAU_SEP


@dataclass(frozen=True)
class ChainParams:
    epsilon: float
    n: int
    q: float

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if not 0.0 <= self.q <= 0.5:
            raise ValueError(f"q must lie in [0, 1/2], got {self.q}")


def swap_gate() -> np.ndarray:
    """Two-qubit swap, S|ab> = |ba>."""
    s = np.zeros((4, 4))
    s[0, 0] = s[3, 3] = 1.0
    s[1, 2] = s[2, 1] = 1.0
    return s


def depolarize(rho, epsilon: float) -> np.ndarray:
    """One noisy hop: rho -> (1 - eps) rho + eps I/4."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    rho = np.asarray(rho, dtype=complex)
    return (1.0 - epsilon) * rho + epsilon * np.eye(4) / 4.0


def evolve_chain(rho0, epsilon: float, n: int) -> np.ndarray:
    """n applications of the depolarizing hop, applied step by step.

    The closed form (1-eps)^n rho0 + (1 - (1-eps)^n) I/4 is what the tests
    compare against; this function deliberately iterates so it stays an
    independent simulation.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    rho = np.asarray(rho0, dtype=complex)
    for _ in range(n):
        rho = depolarize(rho, epsilon)
    return rho


def chain_lambda_min(q: float, epsilon: float, n: int) -> float:
    """Smallest PT eigenvalue after n hops, in closed form."""
    return 0.25 * (1.0 - (1.0 - epsilon) ** n * (1.0 + 4.0 * q))


def max_transfer_distance(q: float, epsilon: float) -> int | float:
    """Largest hop count n with chain_lambda_min(q, eps, n) < -TAU_SEP.

    The log-ratio estimate floor(-log(1+4q)/log(1-eps)) is refined by
    direct evaluation at the neighbouring integers, so a floating-point
    wobble at the boundary cannot shift the answer. Exact zero counts as
    separable. q = 0 gives 0; eps = 0 with q > 0 never disentangles and
    returns math.inf.
    """
    if not 0.0 <= q <= 0.5:
        raise ValueError(f"q must lie in [0, 1/2], got {q}")
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")
    if q <= TAU_SEP:
        return 0
    if epsilon == 0.0:
        return math.inf
    if epsilon >= 1.0:
        return 0

    n = math.floor(-math.log1p(4.0 * q) / math.log1p(-epsilon))
    n = max(n, 0)
    while chain_lambda_min(q, epsilon, n + 1) < -TAU_SEP:
        n += 1
    while n > 0 and chain_lambda_min(q, epsilon, n) >= -TAU_SEP:
        n -= 1
    return n


def critical_noise(q: float, n: int) -> float:
    """Largest noise strength that still leaves entanglement after n hops:

        eps* = 1 - (1 + 4q)^(-1/n)

    with lambda_min exactly zero there. Computed through expm1/log1p so
    the boundary stays exact to machine precision.
    """
    if not 0.0 < q <= 0.5:
        raise ValueError(f"q must lie in (0, 1/2], got {q}")
    if n < 1 or n != int(n):
        raise ValueError(f"n must be a positive integer, got {n}")
    return -math.expm1(-math.log1p(4.0 * q) / n)


@dataclass(frozen=True)
class ChainReport:
    lambda_min_per_step: tuple[float, ...]
    n_max: int | float
    epsilon_critical: float | None


def chain_report(q: float, epsilon: float, n: int | None = None) -> ChainReport:
    """Per-step lambda_min table plus the distance and noise thresholds.

    Rows cover steps 0..n when n is given, otherwise 0..n_max+1 so the
    first separable step is visible. epsilon_critical refers to the
    requested n (or to n_max when n is omitted); it is None when that
    distance is 0. An unbounded n_max with no explicit n is an error since
    the table would never end.
    """
    if not 0.0 <= q <= 0.5:
        raise ValueError(f"q must lie in [0, 1/2], got {q}")
    n_max = max_transfer_distance(q, epsilon)
    if n is None:
        if n_max is math.inf:
            raise ValueError("n is required when the transfer distance is unbounded")
        last = int(n_max) + 1
        crit_n = int(n_max)
    else:
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        last = int(n)
        crit_n = int(n)
    steps = tuple(chain_lambda_min(q, epsilon, k) for k in range(last + 1))
    crit = critical_noise(q, crit_n) if (crit_n >= 1 and q > 0.0) else None
    return ChainReport(
        lambda_min_per_step=steps,
        n_max=n_max,
        epsilon_critical=crit,
    )
