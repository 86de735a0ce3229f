"""Closed-form Peres partial-transpose separability test.

A two-qubit state is separable exactly when its partial transpose is
positive semidefinite. The partial transpose changes the characteristic
coefficients in a simple closed way (the purity is untouched), so the PT
spectrum, and with it the verdict, comes out of the same quartic solver
with no matrix diagonalization anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bloch import partial_transpose_bloch, to_bloch, validate_density_matrix
from .errors import InternalInconsistencyError
from .spectrum import (
    SQRT3,
    SQRT6,
    TAU_BRANCH,
    CharCoeffs,
    _DEGEN_COEFF_TOL,
    _clamped_sqrt,
    _det3,
    coeffs_from_bloch,
    coeffs_from_traces,
    cubic_coeffs,
    cubic_eigs,
    quartic_eigs,
    rank2_eigs,
    trig_params,
)

# A PT eigenvalue this close to zero no longer carries a reliable sign.
TAU_SEP = 1e-10


@dataclass(frozen=True)
class SeparabilityReport:
    separable: bool
    lambda_min_pt: float
    branch: str
    marginal: bool
    pt_coeffs: CharCoeffs
    # Whether the explicit inequality form of the criterion agrees with the
    # sign of lambda_min_pt; None on branches where it is not evaluated.
    inequality_agrees: bool | None = None


def pt_coeffs(c: CharCoeffs, t) -> CharCoeffs:
    """Characteristic coefficients of the partial transpose.

    Only b0 and b1 move:

        b0' = b0 - [((tr A)^2 - tr(A^2)) xi_a.xi_b + 2 xi_b.A^2.xi_a
                    - 2 tr A xi_b.A.xi_a] / 32 + det(A) / 16
        b1' = b1 - det(A) / 4

    with A the correlation block of the Bloch tensor t. The result is
    cross-checked against re-deriving the coefficients from the
    column-flipped tensor; disagreement raises InternalInconsistencyError.
    """
    t = np.asarray(t, dtype=float)
    xi_a = t[1:, 0]
    xi_b = t[0, 1:]
    corr = t[1:, 1:]

    tr_corr = float(corr[0, 0] + corr[1, 1] + corr[2, 2])
    tr_corr_sq = float((corr * corr.T).sum())
    det_corr = _det3(corr)
    quad = float(xi_b @ corr @ (corr @ xi_a))
    bilin_rev = float(xi_b @ corr @ xi_a)

    correction = (
        (tr_corr * tr_corr - tr_corr_sq) * float(xi_a @ xi_b)
        + 2.0 * quad
        - 2.0 * tr_corr * bilin_rev
    )
    out = CharCoeffs(
        b0=c.b0 - correction / 32.0 + det_corr / 16.0,
        b1=c.b1 - det_corr / 4.0,
        b2=c.b2,
        tr2=c.tr2,
    )

    check = coeffs_from_bloch(partial_transpose_bloch(t))
    drift = max(
        abs(out.b0 - check.b0),
        abs(out.b1 - check.b1),
        abs(out.b2 - check.b2),
        abs(out.tr2 - check.tr2),
    )
    if drift > 1e-9:
        raise InternalInconsistencyError(
            f"PT coefficient map drifted {drift:.3e} from the Bloch route "
            f"(input coefficients {c})"
        )
    return out


def inequality_rhs(c: CharCoeffs) -> float | None:
    """Right side of the explicit separability inequality, which must not
    exceed 1 for a separable state. Algebraically this is 1 - 4 lambda_min
    of the quartic with coefficients c; it is only defined away from the
    doubly degenerate branches, so those return None."""
    tp = trig_params(c)
    if tp.phi is None:
        return None
    cphi = math.cos(tp.phi)
    x = 4.0 * c.tr2 - 1.0 + 8.0 * tp.c1 * cphi
    if x <= 1e-12:
        return None
    sx = math.sqrt(x)
    u = 4.0 * c.tr2 - 1.0 - 4.0 * tp.c1 * cphi
    w = 3.0 * SQRT3 * (1.0 + 8.0 * c.b1 - 2.0 * c.tr2) / sx
    inner = _clamped_sqrt(u + w, "inequality inner", flush=30.0 * _DEGEN_COEFF_TOL)
    return sx / SQRT3 + 2.0 * inner / SQRT6


def peres_test(rho, check: bool = True) -> SeparabilityReport:
    """Separability verdict for a two-qubit density matrix.

    The partial-transpose spectrum is computed in closed form; the state is
    separable iff its smallest eigenvalue is >= -TAU_SEP, and flagged
    marginal when |lambda_min| <= TAU_SEP. Set ``check=False`` to skip the
    (oracle-backed) density matrix validation for inputs known to be valid.
    """
    rho = np.asarray(rho, dtype=complex)
    if check:
        validate_density_matrix(rho)
    t = to_bloch(rho)
    c = coeffs_from_traces(rho)
    cp = pt_coeffs(c, t)
    spec = quartic_eigs(cp)
    lam_min = spec.eigenvalues[-1]
    separable = lam_min >= -TAU_SEP
    marginal = abs(lam_min) <= TAU_SEP

    rhs = inequality_rhs(cp)
    agrees = None if rhs is None else (rhs <= 1.0 + 4.0 * TAU_SEP) == separable
    return SeparabilityReport(
        separable=separable,
        lambda_min_pt=lam_min,
        branch=spec.branch.value,
        marginal=marginal,
        pt_coeffs=cp,
        inequality_agrees=agrees,
    )


def pure_pt_spectrum(state):
    """PT eigenvalues of a pure state a|00> + b|01> + c|10> + d|11>.

    With q = |ad - bc| they are (1 + s)/2, q, (1 - s)/2, -q where
    s = sqrt(1 - 4 q^2); already in descending order since q <= 1/2.
    """
    a, b, c, d = (complex(x) for x in np.asarray(state).ravel())
    norm = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized (norm^2 = {norm})")
    q = abs(a * d - b * c)
    s = math.sqrt(max(1.0 - 4.0 * q * q, 0.0))
    return ((1.0 + s) / 2.0, q, (1.0 - s) / 2.0, -q)


def pure_separable(state, tol: float = TAU_SEP) -> bool:
    """A pure two-qubit state is a product state iff ad - bc = 0."""
    a, b, c, d = (complex(x) for x in np.asarray(state).ravel())
    return abs(a * d - b * c) <= tol


def rank_shortcut(rho, check: bool = True) -> SeparabilityReport | None:
    """Rank-based fast path for states whose partial transpose is singular.

    Two or more vanishing PT eigenvalues force separability outright: the
    remaining pair (1 +/- sqrt(2 tr2 - 1))/2 is nonnegative whenever the
    purity is at most one, which it always is. Exactly one vanishing PT
    eigenvalue reduces the verdict to positivity of the residual cubic:
    sqrt(6 tr2 - 2) cos(phi - pi/3) <= 1, or tr2 <= 5/9 in the d = 0
    subcase. Returns None when neither applies; the verdict must then come
    from peres_test. This path is advisory: it must always agree with
    peres_test where both apply, and the test suite enforces that.
    """
    rho = np.asarray(rho, dtype=complex)
    if check:
        validate_density_matrix(rho)
    t = to_bloch(rho)
    c = coeffs_from_traces(rho)
    cp = pt_coeffs(c, t)
    if abs(cp.b0) > TAU_BRANCH:
        return None

    if abs(cp.b1) <= TAU_BRANCH:
        pair = rank2_eigs(cp.tr2)
        lam_min = min(0.0, pair[1])
        separable = True
        branch = "RankTwoPT"
    else:
        cc = cubic_coeffs(cp, b0_tol=TAU_BRANCH)
        eigs, _ = cubic_eigs(cc)
        lam_min = min(0.0, eigs[-1])
        if abs(cc.d) <= TAU_BRANCH:
            separable = cp.tr2 <= 5.0 / 9.0 + 1e-10
        else:
            shifted = 1.0 - 3.0 * cc.b2
            amp = math.sqrt(max(6.0 * cp.tr2 - 2.0, 0.0))
            ratio = cc.d / (2.0 * max(shifted, 1e-300) ** 1.5)
            ratio = min(1.0, max(-1.0, ratio))
            phi = math.acos(ratio) / 3.0
            separable = amp * math.cos(phi - math.pi / 3.0) <= 1.0 + 3.0 * TAU_SEP
        branch = "OneZeroPT"

    return SeparabilityReport(
        separable=separable,
        lambda_min_pt=lam_min,
        branch=branch,
        marginal=abs(lam_min) <= TAU_SEP,
        pt_coeffs=cp,
        inequality_agrees=None,
    )
