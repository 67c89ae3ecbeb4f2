"""Displacement operators and coherent states on a truncated Fock space.

Everything here comes in two independent routes that the tests play against
each other: matrix exponentials of the truncated generator on one side, and
closed forms (Laguerre-polynomial matrix elements, the regularized trace, the
composition phase) on the other.  The quadrature-based operations --
resolution of unity and the reconstruction of an operator from its
displacement-operator expansion -- consume the polar grids from
`quadrature`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .fock import (
    TruncatedSpace,
    UnitaryResult,
    build_ladder,
    default_safe_sector,
    exp_antihermitian,
)
from .quadrature import PlaneGrid
from .specialfn import assoc_laguerre, log_factorial

_CHUNK = 8192  # grid nodes per block in matrix-valued quadratures


@dataclass(frozen=True)
class Displacement:
    """exp(z a^dag - conj(z) a) on a truncated space, with its unitarity defect."""

    z: complex
    space: TruncatedSpace
    matrix: UnitaryResult


@dataclass(frozen=True)
class CoherentState:
    """Normalized coherent amplitudes <n|z> on a truncated space."""

    z: complex
    amplitudes: np.ndarray


def displacement(space: TruncatedSpace, z: complex) -> Displacement:
    """Displacement unitary built from the truncated ladder pair.

    Rejects amplitudes with |z|^2 beyond the cutoff: those displace the
    vacuum's photon distribution past the end of the basis, where the
    truncated exponential no longer resembles the operator it truncates.
    """
    if space.kind != "single-mode":
        raise ValueError("displacement requires a single-mode space")
    if abs(z) ** 2 > space.cutoff:
        raise ValueError(
            f"|z|^2 = {abs(z) ** 2:.3g} exceeds the cutoff {space.cutoff}; "
            "the displaced state would live beyond the truncation"
        )
    a, adag, _ = build_ladder(space)
    return Displacement(complex(z), space, exp_antihermitian(z * adag - np.conj(z) * a))


def coherent_state(space: TruncatedSpace, z: complex, method: str = "series") -> CoherentState:
    """Coherent state |z> as explicit amplitudes.

    method="series" evaluates e^{-|z|^2/2} z^n / sqrt(n!) through logs;
    method="displaced-vacuum" takes column 0 of the exponentiated generator.
    Agreement of the two is the numerical witness that displacing the vacuum
    produces the eigenstate series.
    """
    if space.kind != "single-mode":
        raise ValueError("coherent_state requires a single-mode space")
    if abs(z) ** 2 > space.cutoff / 4.0:
        raise ValueError(
            f"|z|^2 = {abs(z) ** 2:.3g} too large for cutoff {space.cutoff}; need |z|^2 <= N/4"
        )
    if method == "series":
        amp = _coherent_columns(np.array([z]), space.cutoff)[:, 0]
    elif method == "displaced-vacuum":
        amp = displacement(space, z).matrix.matrix[:, 0].copy()
    else:
        raise ValueError(f"unknown method {method!r}; expected 'series' or 'displaced-vacuum'")
    return CoherentState(complex(z), amp)


def _coherent_columns(z: np.ndarray, cutoff: int) -> np.ndarray:
    """Matrix whose columns are the coherent series amplitudes for each z."""
    n = np.arange(cutoff)
    lf = log_factorial(n)
    az = np.abs(z)
    out = np.zeros((cutoff, z.size), dtype=complex)
    zero = az == 0.0
    if np.any(zero):
        out[0, zero] = 1.0
    live = ~zero
    if np.any(live):
        mag = np.exp(
            -0.5 * az[live][None, :] ** 2
            + n[:, None] * np.log(az[live])[None, :]
            - 0.5 * lf[:, None]
        )
        out[:, live] = mag * np.exp(1j * n[:, None] * np.angle(z[live])[None, :])
    return out


def u_element_closed(n: int, m: int, z: complex) -> complex:
    """<n|e^{z a^dag - conj(z) a}|m> in closed Laguerre form."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    x = abs(z) ** 2
    if n <= m:
        ratio = 0.5 * (log_factorial(n) - log_factorial(m))
        return complex(
            np.exp(-0.5 * x + ratio) * (-np.conj(z)) ** (m - n) * assoc_laguerre(n, m - n, x)
        )
    ratio = 0.5 * (log_factorial(m) - log_factorial(n))
    return complex(np.exp(-0.5 * x + ratio) * z ** (n - m) * assoc_laguerre(m, n - m, x))


def composition_phase(z: complex, w: complex) -> complex:
    """Phase e^{-(z conj(w) - conj(z) w)/2} relating U(z)U(w) to U(z+w).

    The exponent is purely imaginary, so the result has unit modulus.
    """
    return complex(np.exp(-(z * np.conj(w) - np.conj(z) * w) / 2.0))


def resolution_identity_coherent(space: TruncatedSpace, grid: PlaneGrid) -> np.ndarray:
    """Quadrature of |z><z| d2z/pi over the grid, for comparison with identity."""
    if space.kind != "single-mode":
        raise ValueError("resolution_identity_coherent requires a single-mode space")
    if grid.radius**2 > space.cutoff / 2.0:
        raise ValueError(
            f"grid radius {grid.radius:g} too large for cutoff {space.cutoff}; need R^2 <= N/2"
        )
    z, w = grid.nodes()
    out = np.zeros((space.cutoff, space.cutoff), dtype=complex)
    for lo in range(0, z.size, _CHUNK):
        cols = _coherent_columns(z[lo : lo + _CHUNK], space.cutoff)
        out += (cols * w[lo : lo + _CHUNK]) @ cols.conj().T
    return out


def regularized_trace_u_closed(z, t: float):
    """Closed form of sum_n t^n <n|U(z)|n>: e^{-|z|^2/2} e^{-|z|^2 t/(1-t)} / (1-t).

    Vectorized over z, so it can be fed straight into plane quadrature.
    """
    x = np.abs(z) ** 2
    return np.exp(-0.5 * x - x * t / (1.0 - t)) / (1.0 - t)


def regularized_trace_u(z: complex, t: float):
    """The t-regularized trace of U(z), as (partial sum, closed form).

    The partial sum sum_n t^n e^{-|z|^2/2} L_n(|z|^2) cancels from O(1) terms
    down to e^{-|z|^2 t/(1-t)}, so it is accumulated in working precision
    sized to the cancellation, with the term count set by the |L_n(x)| <=
    e^{x/2} envelope.  Pointwise the t -> 1 limit diverges at z = 0 and
    vanishes elsewhere; the delta-function content lives in the plane
    integral of the closed form, 2/(1+t) -> 1.
    """
    if not 0.0 <= t < 1.0:
        raise ValueError("t must lie in [0, 1)")
    x = abs(z) ** 2
    closed = complex(regularized_trace_u_closed(z, t))
    if t == 0.0:
        return complex(np.exp(-0.5 * x)), closed
    cancel_digits = (0.5 * x + x * t / (1.0 - t)) / math.log(10.0)
    if cancel_digits > 300:
        raise ValueError(
            "partial summation infeasible: the regularized trace at this (z, t) sits "
            f"~1e{int(cancel_digits)} below the leading terms; use the closed form"
        )
    dps = 30 + int(math.ceil(cancel_digits))
    with mp.workdps(dps):
        tt = mp.mpf(t)
        xx = mp.mpf(x)
        # tail past n is bounded by t^{n+1}/(1-t) before the e^{-x/2} prefactor
        n_terms = int((-(dps - 5) * math.log(10.0)) / math.log(t)) + 2
        lk_prev = mp.mpf(1)  # L_0
        lk = 1 - xx  # L_1
        total = mp.mpf(1) + tt * lk
        power = tt
        for k in range(1, n_terms):
            lk_prev, lk = lk, ((2 * k + 1 - xx) * lk - k * lk_prev) / (k + 1)
            power *= tt
            total += power * lk
        numeric = complex(mp.e ** (-xx / 2) * total)
    return numeric, closed


def glauber_reconstruct(A: np.ndarray, space: TruncatedSpace, grid: PlaneGrid) -> np.ndarray:
    """Reconstruct A from its displacement-operator expansion.

    Evaluates the quadrature of (1/pi) Tr[A U^dag(z)] U(z) d2z.  A must be
    supported inside the safe sector (trace-class in effect): operators with
    weight near the cutoff -- the identity being the extreme case -- make the
    integral divergent, not merely inaccurate.

    The polar grid is evaluated without building U at every node: one
    eigendecomposition gives U(r) for all radii, and U(r e^{i theta}) differs
    only by number-operator phases, so the uniform angular sum collapses to
    an exact selection of phase differences mod angular_nodes.  Comparisons
    therefore belong inside the safe sector, where index differences stay
    far below that modulus.
    """
    if space.kind != "single-mode":
        raise ValueError("glauber_reconstruct requires a single-mode space")
    cutoff = space.cutoff
    A = np.asarray(A, dtype=complex)
    if A.shape != (cutoff, cutoff):
        raise ValueError(f"A must be {cutoff} x {cutoff} to match the space")
    if grid.radius**2 > cutoff / 2.0:
        raise ValueError(
            f"grid radius {grid.radius:g} too large for cutoff {cutoff}; need R^2 <= N/2"
        )
    sector = default_safe_sector(space).rank
    peak = np.max(np.abs(A))
    if peak == 0.0:
        return np.zeros_like(A)
    outside = A.copy()
    outside[:sector, :sector] = 0.0
    if np.max(np.abs(outside)) > 1e-12 * peak:
        raise ValueError(
            "A must be supported inside the safe sector for the expansion to converge; "
            "operators like the identity are not admissible"
        )

    a, adag, _ = build_ladder(space)
    evals, q = np.linalg.eigh(1j * (adag - a))
    qh = q.conj().T
    r, wr = grid.radial()
    m_angle = grid.angular_nodes
    rows, cols = np.nonzero(np.abs(A) > 0)
    avals = A[rows, cols]
    dvals = (rows - cols) % m_angle
    dmat = (np.arange(cutoff)[:, None] - np.arange(cutoff)[None, :]) % m_angle
    out = np.zeros((cutoff, cutoff), dtype=complex)
    for i in range(r.size):
        u_r = (q * np.exp(-1j * r[i] * evals)) @ qh
        c = np.zeros(m_angle, dtype=complex)
        np.add.at(c, dvals, avals * np.conj(u_r[rows, cols]))
        out += (2.0 * r[i] * wr[i]) * c[dmat] * u_r
    return out
