"""Generalized coherent operators V(z) = exp(zK+ - conj(z)K-) for spin weight K.

The positive discrete-series representations admit closed forms for every
object the package checks: Perelomov states over the unit disk, the Gaussian
disentangling of V(z), its matrix elements as finite alternating sums, the
trace as a geometric series, a decomposition through a fixed pi/4 Hermitian
rotation, and a resolution of unity against the hyperbolic measure
(2K-1)/pi * d2zeta/(1-|zeta|^2)^2.  The one identity that *fails* — on
purpose — is the analogue of Glauber's reconstruction formula, and the
quadrature here exhibits the failure concretely.

Matrix elements are evaluated in the disk variable zeta = tanh|z| z/|z|,
where the closed form is a finite alternating sum over paths through the
disentangled product e^{zeta K+} lambda^{K3} e^{-conj(zeta) K-} with
lambda = 1 - |zeta|^2.  Float64 with exact compensated summation covers
indices up to 40; residual checks against exponentiated matrices run the
same sums in arbitrary precision, where cancellation is a non-issue.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from scipy.special import gammaln

from .fock import (
    build_spin_k,
    default_safe_sector,
    exp_antihermitian,
    operator_norm,
)
from .schwinger import squeeze
from .specialfn import log_factorial, log_pochhammer

AMPLITUDE_ENVELOPE = 1.5
ELEMENT_ENVELOPE = 40


@dataclass(frozen=True)
class SpinWeight:
    """A positive discrete-series weight, stored as the value 2K."""

    two_k: float

    def __post_init__(self):
        object.__setattr__(self, "two_k", float(self.two_k))
        if not self.two_k > 0:
            raise ValueError("spin weight 2K must be positive")


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk (the classical phase space)."""

    zeta: complex

    def __post_init__(self):
        object.__setattr__(self, "zeta", complex(self.zeta))
        if not abs(self.zeta) < 1.0:
            raise ValueError("|zeta| must be strictly below 1")


@dataclass(frozen=True)
class Kappa:
    """The half-plane coordinate kappa = sinh(|z|) z/|z| = cosh(|z|) zeta."""

    kappa: complex

    def __post_init__(self):
        object.__setattr__(self, "kappa", complex(self.kappa))


@dataclass(frozen=True)
class Chi:
    """The trace variable chi = tanh(|z|) z/|z|; coincides with zeta."""

    chi: complex

    def __post_init__(self):
        object.__setattr__(self, "chi", complex(self.chi))
        if not abs(self.chi) < 1.0:
            raise ValueError("|chi| must be strictly below 1")


@dataclass(frozen=True)
class DefiningRep:
    """The non-unitary 2x2 matrices generating the group action on the disk."""

    k_plus: np.ndarray
    k_minus: np.ndarray
    k3: np.ndarray


class TraceDivergence(ValueError):
    """The trace of V(z) diverges as z -> 0 (delta-like limit).

    The closed form carries a 1/|chi| prefactor; the z = 0 operator is the
    identity, whose trace is the (infinite) dimension.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.limit = math.inf


def defining_rep() -> DefiningRep:
    k_plus = np.array([[0.0, 1.0], [0.0, 0.0]])
    k_minus = np.array([[0.0, 0.0], [-1.0, 0.0]])
    k3 = np.diag([0.5, -0.5])
    return DefiningRep(k_plus, k_minus, k3)


def _weight(k) -> float:
    """The value 2K from a SpinWeight or a bare positive real."""
    two_k = k.two_k if isinstance(k, SpinWeight) else float(k)
    if not two_k > 0:
        raise ValueError("spin weight 2K must be positive")
    return two_k


def _require_spin_space(space, two_k):
    if space.kind != "spin-K":
        raise ValueError("operation requires a spin-K space")
    if abs(space.spin - two_k) > 1e-12:
        raise ValueError(
            f"space carries weight 2K = {space.spin} but the operation "
            f"was asked for 2K = {two_k}"
        )


def map_z(z):
    """The three coordinates (zeta, kappa, chi) of an amplitude z.

    zeta = tanh(|z|) z/|z| lands in the unit disk; kappa = sinh(|z|) z/|z| =
    cosh(|z|) zeta is the unbounded variant; chi coincides with zeta.  z = 0
    maps to the origin of all three by continuity.
    """
    z = complex(z)
    if z == 0:
        return DiskPoint(0.0), Kappa(0.0), Chi(0.0)
    unit = z / abs(z)
    zeta = math.tanh(abs(z)) * unit
    return DiskPoint(zeta), Kappa(math.sinh(abs(z)) * unit), Chi(zeta)


# ---------------------------------------------------------------------------
# states


def _log_state_weights(two_k, cutoff):
    # log sqrt((2K)_n / n!) for n = 0..cutoff-1
    n = np.arange(cutoff)
    return 0.5 * (gammaln(two_k + n) - gammaln(two_k) - log_factorial(n))


def _coefficient_tail(two_k, abs_zeta, cutoff):
    """Geometric bound on the squared-coefficient mass beyond the cutoff."""
    if abs_zeta == 0.0:
        return 0.0
    ratio = abs_zeta ** 2 * max(1.0, (cutoff + two_k) / (cutoff + 1.0))
    if ratio >= 1.0:
        return math.inf
    log_term = (
        gammaln(two_k + cutoff)
        - gammaln(two_k)
        - log_factorial(cutoff)
        + 2.0 * cutoff * math.log(abs_zeta)
        + two_k * math.log1p(-(abs_zeta ** 2))
    )
    return math.exp(log_term) / (1.0 - ratio)


def perelomov_state(k, zeta, space):
    """Normalized coefficients (1-|zeta|^2)^K sqrt((2K)_n/n!) zeta^n.

    Raises when the coefficient tail beyond the cutoff exceeds 1e-10, i.e.
    when |zeta| sits too close to the boundary for the space to hold the
    state.
    """
    two_k = _weight(k)
    _require_spin_space(space, two_k)
    point = zeta if isinstance(zeta, DiskPoint) else DiskPoint(zeta)
    zeta = point.zeta
    tail = _coefficient_tail(two_k, abs(zeta), space.cutoff)
    if not tail < 1e-10:
        raise ValueError(
            f"|zeta| = {abs(zeta):.4f} is too close to 1 for cutoff "
            f"{space.cutoff} (coefficient tail {tail:.1e})"
        )
    n = np.arange(space.cutoff)
    log_mag = _log_state_weights(two_k, space.cutoff)
    return np.exp(
        log_mag + (two_k / 2.0) * math.log1p(-abs(zeta) ** 2)
    ) * np.power(complex(zeta), n)


def generalized_coherent_state(k, z, space):
    """Column exp(zK+ - conj(z)K-)|K,0>, the displaced highest-weight state.

    Numerically witnesses the first factorization of the disentangling
    formula: the result agrees with perelomov_state at zeta(z).
    """
    two_k = _weight(k)
    _require_spin_space(space, two_k)
    z = complex(z)
    if z == 0:
        out = np.zeros(space.cutoff, dtype=complex)
        out[0] = 1.0
        return out
    tail = _coefficient_tail(two_k, math.tanh(abs(z)), space.cutoff)
    if not tail < 1e-10:
        raise ValueError(
            f"|z| = {abs(z):.4f} spreads beyond cutoff {space.cutoff} "
            f"(coefficient tail {tail:.1e})"
        )
    kp, km, _ = build_spin_k(space)
    return exp_antihermitian(z * kp - np.conj(z) * km).matrix[:, 0]


# ---------------------------------------------------------------------------
# closed-form matrix elements


def _element_total_mp(two_k, n, m, az, dps):
    # the signed magnitude sum of the element at |z| = az, at dps digits;
    # the caller applies the phase
    with mp.workdps(dps):
        azm = mp.mpf(az)
        logt = mp.log(mp.tanh(azm))
        loglam = -2 * mp.log(mp.cosh(azm))
        two_k_mp = mp.mpf(two_k)
        top = max(n, m)
        lgf = [mp.mpf(0)] * (top + 1)
        lgp = [mp.mpf(0)] * (top + 1)
        for i in range(1, top + 1):
            lgf[i] = lgf[i - 1] + mp.log(i)
            lgp[i] = lgp[i - 1] + mp.log(two_k_mp + i - 1)
        acc = mp.mpf(0)
        for j in range(min(n, m) + 1):
            log_mag = (
                0.5 * (lgf[n] - lgf[j] + lgp[n] - lgp[j])
                + 0.5 * (lgf[m] - lgf[j] + lgp[m] - lgp[j])
                - lgf[n - j]
                - lgf[m - j]
                + (n + m - 2 * j) * logt
                + (two_k_mp / 2 + j) * loglam
            )
            term = mp.e ** log_mag
            acc += -term if (m - j) % 2 else term
        return float(acc)


def _v_element(two_k, n, m, z):
    # finite alternating sum over the disentangled product; exact signed
    # summation in float64, escalating to scaled working precision whenever
    # rounding at the peak term threatens the cancelled result
    z = complex(z)
    if z == 0:
        return complex(1.0 if n == m else 0.0)
    az = abs(z)
    t = math.tanh(az)
    logt = math.log(t)
    loglam = -2.0 * (az + math.log1p(math.exp(-2.0 * az)) - math.log(2.0))
    phase = z / az
    j = np.arange(min(n, m) + 1)
    lgf_j = log_factorial(j)
    lgp_j = gammaln(two_k + j) - gammaln(two_k)
    half_n = 0.5 * (log_factorial(n) - lgf_j + log_pochhammer(two_k, n) - lgp_j)
    half_m = 0.5 * (log_factorial(m) - lgf_j + log_pochhammer(two_k, m) - lgp_j)
    log_mag = (
        half_n
        + half_m
        - log_factorial(n - j)
        - log_factorial(m - j)
        + (n + m - 2 * j) * logt
        + (two_k / 2.0 + j) * loglam
    )
    signs = np.where((m - j) % 2, -1.0, 1.0)
    total = math.fsum(signs * np.exp(log_mag))
    peak = float(np.max(log_mag))
    noise = math.exp(min(peak, 700.0)) * 1e-13
    if noise > max(1e-14, abs(total) * 1e-11):
        peak_digits = peak / math.log(10.0)
        floor_digits = math.log10(max(abs(total), 1e-300))
        dps = int(peak_digits - min(floor_digits, 0.0)) + 25
        for _ in range(3):
            total = _element_total_mp(two_k, n, m, az, dps)
            if total != 0.0 and peak_digits - math.log10(abs(total)) < dps - 12:
                break
            dps = int(peak_digits - (math.log10(abs(total)) if total else -dps)) + 25
    return phase ** (n - m) * total


def v_element_closed(k, n, m, z):
    """<K,n| V(z) |K,m> in closed form.

    Weight symbols are gamma-function ratios, so non-integer 2K works the
    same way.  Indices above 40 run outside the cancellation envelope
    validated against exponentiated matrices and trigger a warning.
    """
    two_k = _weight(k)
    if n < 0 or m < 0:
        raise ValueError("matrix element indices must be nonnegative")
    if n > ELEMENT_ENVELOPE or m > ELEMENT_ENVELOPE:
        warnings.warn(
            f"element ({n},{m}) is outside the validated index envelope "
            f"(<= {ELEMENT_ENVELOPE}); cancellation may erode float64",
            stacklevel=2,
        )
    return _v_element(two_k, n, m, z)


def _block_dps(two_k, az, rank):
    # working digits sized to the corner element, where the alternating sum
    # peaks highest above the e^{-2|z|(K+n)} scale it cancels down to
    n = rank - 1
    if n <= 0 or az == 0.0:
        return 40
    j = np.arange(n + 1)
    lgf_j = log_factorial(j)
    lgp_j = gammaln(two_k + j) - gammaln(two_k)
    log_mag = (
        log_factorial(n)
        - lgf_j
        + log_pochhammer(two_k, n)
        - lgp_j
        - 2.0 * log_factorial(n - j)
        + (2 * n - 2 * j) * math.log(math.tanh(az))
        - (two_k / 2.0 + j) * 2.0 * math.log(math.cosh(az))
    )
    peak = float(np.max(log_mag))
    floor = -2.0 * az * (two_k / 2.0 + n)
    return max(40, int((peak - min(floor, 0.0)) / math.log(10.0)) + 25)


def _v_block_mp(two_k, z, rank, dps=None):
    """rank x rank block of closed-form elements at scaled working precision."""
    if dps is None:
        dps = _block_dps(two_k, abs(complex(z)), rank)
    with mp.workdps(dps):
        zc = mp.mpc(z)
        az = abs(zc)
        t = mp.tanh(az)
        logt = mp.log(t)
        loglam = mp.log(1 - t * t)
        phase = zc / az
        two_k_mp = mp.mpf(two_k)
        lgf = [mp.mpf(0)] * rank
        lgp = [mp.mpf(0)] * rank
        for i in range(1, rank):
            lgf[i] = lgf[i - 1] + mp.log(i)
            lgp[i] = lgp[i - 1] + mp.log(two_k_mp + i - 1)
        out = np.empty((rank, rank), dtype=complex)
        for n in range(rank):
            for m in range(n, rank):
                acc = mp.mpf(0)
                for j in range(min(n, m) + 1):
                    log_mag = (
                        0.5 * (lgf[n] - lgf[j] + lgp[n] - lgp[j])
                        + 0.5 * (lgf[m] - lgf[j] + lgp[m] - lgp[j])
                        - lgf[n - j]
                        - lgf[m - j]
                        + (n + m - 2 * j) * logt
                        + (two_k_mp / 2 + j) * loglam
                    )
                    term = mp.e ** log_mag
                    acc += -term if (m - j) % 2 else term
                out[n, m] = complex(phase ** (n - m) * acc)
                out[m, n] = complex(phase ** (m - n) * acc) * (-1.0) ** (m - n)
        return out


def _v_block_reversed_mp(two_k, z, rank, dps=None):
    """The reversed Gaussian ordering e^{-conj(zeta)K-} lambda^{-K3} e^{zeta K+}.

    An infinite series converging only for sinh|z| < 1.  The geometric rate
    sinh^2|z| carries a polynomial factor ~ j^{n+m+2K-1} that pushes the
    largest terms far past the first ones, so both the working precision and
    the truncation index are read off a float64 scan of the corner element's
    term magnitudes rather than guessed from the rate alone.
    """
    rate = math.sinh(abs(complex(z))) ** 2
    if rate >= 1.0:
        raise ValueError("the reversed-ordering series diverges for sinh|z| >= 1")
    tf = math.tanh(abs(complex(z)))
    lamf = 1.0 - tf * tf
    corner = rank - 1
    jf = np.arange(corner, 3000, dtype=float)
    scan = (
        gammaln(jf + 1.0)
        + gammaln(two_k + jf)
        - gammaln(two_k)
        - gammaln(corner + 1.0)
        - (gammaln(two_k + corner) - gammaln(two_k))
        - 2.0 * gammaln(jf - corner + 1.0)
        + 2.0 * (jf - corner) * math.log(tf)
        - (two_k / 2.0 + jf) * math.log(lamf)
    )
    floor = (two_k / 2.0 + rank) * math.log(lamf)
    if dps is None:
        dps = max(40, int((float(scan.max()) - min(floor, 0.0)) / math.log(10.0)) + 25)
    settled = np.nonzero(scan < min(floor, 0.0) - 30.0 * math.log(10.0))[0]
    if settled.size == 0:
        raise ValueError("reversed-ordering series converges too slowly at this amplitude")
    jmax = corner + int(settled[0])
    with mp.workdps(dps):
        zc = mp.mpc(z)
        az = abs(zc)
        t = mp.tanh(az)
        logt = mp.log(t)
        loglam = mp.log(1 - t * t)
        phase = zc / az
        two_k_mp = mp.mpf(two_k)
        lgf = [mp.mpf(0)] * (jmax + 1)
        lgp = [mp.mpf(0)] * (jmax + 1)
        for i in range(1, jmax + 1):
            lgf[i] = lgf[i - 1] + mp.log(i)
            lgp[i] = lgp[i - 1] + mp.log(two_k_mp + i - 1)
        out = np.empty((rank, rank), dtype=complex)
        for n in range(rank):
            for m in range(n, rank):
                acc = mp.mpf(0)
                for j in range(max(n, m), jmax + 1):
                    log_mag = (
                        lgf[j]
                        + lgp[j]
                        - 0.5 * (lgf[n] + lgp[n] + lgf[m] + lgp[m])
                        - lgf[j - n]
                        - lgf[j - m]
                        + (2 * j - n - m) * logt
                        - (two_k_mp / 2 + j) * loglam
                    )
                    term = mp.e ** log_mag
                    acc += -term if (j - n) % 2 else term
                out[n, m] = complex(phase ** (n - m) * acc)
                out[m, n] = complex(phase ** (m - n) * acc) * (-1.0) ** (m - n)
        return out


# ---------------------------------------------------------------------------
# traces


def trace_v_closed(k, z):
    """(1+|chi|)/(2|chi|) * ((1-|chi|)/(1+|chi|))^K with |chi| = tanh|z|.

    Algebraically equal to the geometric sum over the diagonal,
    e^{-2|z|K}/(1 - e^{-2|z|}); diverges as z -> 0.
    """
    two_k = _weight(k)
    if two_k < 1:
        raise ValueError("the closed trace requires weight 2K >= 1")
    az = abs(complex(z))
    if az == 0:
        raise TraceDivergence("the trace of V diverges as z -> 0")
    chi = math.tanh(az)
    return float((1.0 + chi) / (2.0 * chi) * ((1.0 - chi) / (1.0 + chi)) ** (two_k / 2.0))


def trace_v_numeric(k, z, n_max=60, tol=1e-8):
    """The diagonal sum of V in its convergent, exchanged-summation form.

    The raw sum over <n|V|n> converges only conditionally: partial sums
    oscillate with slowly decaying amplitude (V is a hyperbolic group
    element, so its character is a distributional limit).  Each diagonal
    element is itself a finite sum over an internal index j; exchanging the
    two summations turns the double sum into

        sum_j (1-tanh^2|z|)^{K+j} 2F1(j+1, 2K+j; 1; -tanh^2|z|),

    whose terms carry a geometric envelope, making the series rapidly and
    absolutely summable.  Returns the n_max-term partial sum together with a
    tail bound from the measured envelope (gross term mass when n_max is too
    small to measure decay); raises when the bound is not below tol relative
    to the partial sum.
    """
    two_k = _weight(k)
    if two_k < 1:
        raise ValueError("the diagonal closed form requires weight 2K >= 1")
    z = complex(z)
    if abs(z) == 0:
        raise TraceDivergence("the trace of V diverges as z -> 0")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    az = abs(z)
    with mp.workdps(30):
        t = mp.tanh(az)
        x = -t * t
        lam = 1 - t * t
        terms = [
            lam ** (mp.mpf(two_k) / 2 + j) * mp.hyp2f1(j + 1, two_k + j, 1, x)
            for j in range(n_max + 1)
        ]
        partial = float(mp.fsum(terms))
        mags = [float(abs(term)) for term in terms]
    window = 8
    if n_max <= window:
        tail_bound = math.fsum(mags)
    elif mags[-1 - window] == 0.0:
        tail_bound = 0.0
    else:
        rate = (mags[-1] / mags[-1 - window]) ** (1.0 / window)
        if rate >= 1.0:
            raise ValueError(
                f"series envelope is not decaying over the last {window} "
                f"terms; increase n_max beyond {n_max}"
            )
        tail_bound = 4.0 * max(mags[-1 - window :]) * rate / (1.0 - rate)
    if tail_bound > tol * abs(partial):
        raise ValueError(
            f"tail bound {tail_bound:.2e} exceeds tol*|partial|; "
            f"increase n_max beyond {n_max}"
        )
    return partial, tail_bound


# ---------------------------------------------------------------------------
# disentangling and decomposition residuals


def disentangle_cutoff(sector_rank, z):
    """Power-of-two cutoff at which the sector block of V(z) is faithful.

    Population started below sector_rank spreads by a factor cosh^2|z|;
    2.5x headroom on top of that and a floor of 256 reproduce the measured
    convergence scales.
    """
    need = 2.5 * sector_rank * math.cosh(abs(complex(z))) ** 2
    return 1 << math.ceil(math.log2(max(256.0, need)))


def disentangle_residual(k, z, space, sector):
    """Deviation of exp(zK+ - conj(z)K-) from its Gaussian factorization.

    The left side is exponentiated in float64 on the given space; the right
    side e^{zeta K+} lambda^{K3} e^{-conj(zeta) K-} is summed element-wise in
    arbitrary precision, because its factors cancel far beyond float64 on
    their own.  The reversed ordering (lambda^{-K3} between the flipped
    exponentials) is an infinite series converging only for sinh|z| < 1 and
    is checked on a sub-block whenever the amplitude allows.

    On a spin-K space the weight must match the space; on a single-mode
    space the weights 1/2 and 3/2 are realized by the squeezer's even and
    odd parity sectors, and the sector rank counts basis states of the
    parity block.
    """
    two_k = _weight(k)
    z = complex(z)
    if abs(z) > AMPLITUDE_ENVELOPE:
        raise ValueError(f"|z| = {abs(z):.3g} exceeds the amplitude envelope")
    if space.kind == "spin-K":
        _require_spin_space(space, two_k)
        if z == 0:
            return 0.0
        if sector.rank > space.cutoff:
            raise ValueError("sector rank exceeds the cutoff")
        kp, km, _ = build_spin_k(space)
        lhs = exp_antihermitian(z * kp - np.conj(z) * km).matrix
        block = lhs[: sector.rank, : sector.rank]
    elif space.kind == "single-mode":
        if two_k not in (0.5, 1.5):
            raise ValueError(
                "a single mode realizes only the weights 2K = 1/2 (even "
                "parity) and 2K = 3/2 (odd parity)"
            )
        if z == 0:
            return 0.0
        parity = 0 if two_k == 0.5 else 1
        rank = max(1, sector.rank // 2)
        matrix = squeeze(space, z).matrix
        block = matrix[parity::2, parity::2][:rank, :rank]
    else:
        raise ValueError("disentangle_residual requires a spin-K or single-mode space")
    rank = block.shape[0]
    residual = operator_norm(block - _v_block_mp(two_k, z, rank))
    if math.sinh(abs(z)) < 0.9:
        sub = min(24, rank)
        reversed_block = _v_block_reversed_mp(two_k, z, sub)
        residual = max(residual, operator_norm(block[:sub, :sub] - reversed_block))
    return float(residual)


def decomposition_residual(k, z, space, sector):
    """Deviation of V(z) from e^{X} e^{-2|z|K3} e^{-X}, X the pi/4 rotation.

    X = (pi/4)(e^{i arg z} K+ + e^{-i arg z} K3-phase conjugate) is Hermitian;
    its exponential has the exact Gaussian factorization e^{K+} 2^{K3} e^{K-}
    whose coefficients are all positive, so the only alternating sum is the
    final contraction against the e^{-2|z|(K+n)} diagonal — carried out in
    arbitrary precision with the k-sum truncated at the space cutoff.
    Residuals are element-wise on indices n, m <= 10; doubling the cutoff
    extends the k-sum and drives the residual down.
    """
    two_k = _weight(k)
    if two_k < 1:
        raise ValueError("the decomposition requires weight 2K >= 1")
    z = complex(z)
    if z == 0:
        raise ValueError("the decomposition requires z != 0")
    _require_spin_space(space, two_k)
    block = min(sector.rank, 11)
    kmax = space.cutoff
    lhs = _v_block_mp(two_k, z, block)
    az = abs(z)
    phase = z / az
    with mp.workdps(40):
        two_k_mp = mp.mpf(two_k)
        log2 = mp.log(2)
        lgf = [mp.mpf(0)] * (kmax + 1)
        lgp = [mp.mpf(0)] * (kmax + 1)
        for i in range(1, kmax + 1):
            lgf[i] = lgf[i - 1] + mp.log(i)
            lgp[i] = lgp[i - 1] + mp.log(two_k_mp + i - 1)

        def half_weight(n, j):
            return 0.5 * (lgf[n] - lgf[j] + lgp[n] - lgp[j])

        # E[n][q] = <n| e^{K+} 2^{K3} e^{K-} |q>: every term positive
        table = [
            [
                mp.fsum(
                    mp.e
                    ** (
                        half_weight(n, j)
                        + half_weight(q, j)
                        + (two_k_mp / 2 + j) * log2
                        - lgf[n - j]
                        - lgf[q - j]
                    )
                    for j in range(min(n, q) + 1)
                )
                for q in range(kmax)
            ]
            for n in range(block)
        ]
        rhs = np.empty((block, block), dtype=complex)
        for n in range(block):
            for m in range(block):
                acc = mp.mpf(0)
                for q in range(kmax):
                    term = table[n][q] * table[m][q] * mp.e ** (-2 * az * (two_k_mp / 2 + q))
                    acc += -term if (q + m) % 2 else term
                rhs[n, m] = complex(mp.mpc(phase) ** (n - m) * acc)
    return float(np.max(np.abs(lhs - rhs)))


# ---------------------------------------------------------------------------
# hyperbolic-disk quadratures


def _v_blocks_real_axis(two_k, s, block):
    """Closed-form blocks of V at zeta = tanh(s), stacked over the radial nodes.

    Elements at real zeta are real; a point at angle theta differs only by
    the phase e^{i theta (n-m)}, which the quadrature engines apply exactly.
    """
    t = np.tanh(s)
    logt = np.log(t)
    loglam = -2.0 * np.log(np.cosh(s))
    out = np.empty((s.size, block, block))
    for n in range(block):
        for m in range(n, block):
            j = np.arange(min(n, m) + 1)
            lgf_j = log_factorial(j)
            lgp_j = gammaln(two_k + j) - gammaln(two_k)
            half_n = 0.5 * (log_factorial(n) - lgf_j + log_pochhammer(two_k, n) - lgp_j)
            half_m = 0.5 * (log_factorial(m) - lgf_j + log_pochhammer(two_k, m) - lgp_j)
            base = half_n + half_m - log_factorial(n - j) - log_factorial(m - j)
            signs = np.where((m - j) % 2, -1.0, 1.0)
            mags = np.exp(
                base[None, :]
                + logt[:, None] * (n + m - 2 * j)[None, :]
                + loglam[:, None] * (two_k / 2.0 + j)[None, :]
            )
            vals = mags @ signs
            out[:, n, m] = vals
            out[:, m, n] = vals * (-1.0) ** (m - n)
    return out


def glauber_su11_reconstruct(A, k, grid, space):
    """Quadrature of the would-be reconstruction integral for the operator A.

    Integrates Tr(A V(zeta)') V(zeta) against the hyperbolic measure
    (2K-1)/pi d2zeta/(1-|zeta|^2)^2 and returns the reconstructed block —
    which does NOT reproduce A: the diagonal-weight integrals differ from
    the delta-normalization Glauber's single-mode formula enjoys.  The
    returned matrix covers indices up to min(safe sector, index envelope);
    A must be supported there.
    """
    two_k = _weight(k)
    if two_k <= 1:
        raise ValueError("the hyperbolic measure weight 2K - 1 must be positive, so 2K > 1")
    _require_spin_space(space, two_k)
    A = np.asarray(A, dtype=complex)
    if A.shape != (space.cutoff, space.cutoff):
        raise ValueError("operator shape must match the space cutoff")
    block = min(default_safe_sector(space).rank, ELEMENT_ENVELOPE)
    peak = float(np.max(np.abs(A)))
    out = np.zeros((block, block), dtype=complex)
    if peak == 0.0:
        return out
    interior = A.copy()
    interior[:block, :block] = 0.0
    if np.max(np.abs(interior)) > 1e-12 * peak:
        raise ValueError(
            "operator has support outside the reconstructable block; the "
            "integral transform is only trace-class against compact support"
        )
    rows, cols = np.nonzero(np.abs(A[:block, :block]) > 0.0)
    values = A[rows, cols]
    m_angle = grid.angular_nodes
    offsets = (rows - cols) % m_angle
    offset_matrix = (np.arange(block)[:, None] - np.arange(block)[None, :]) % m_angle
    s, ws = grid.radial()
    blocks = _v_blocks_real_axis(two_k, s, block)
    prefactor = (two_k - 1.0) * np.sinh(2.0 * s) * ws
    for i in range(s.size):
        vt = blocks[i]
        binned = np.zeros(m_angle, dtype=complex)
        np.add.at(binned, offsets, values * vt[rows, cols])
        out += prefactor[i] * binned[offset_matrix] * vt
    return out


def resolution_identity_su11(k, grid, space):
    """Quadrature of (2K-1) |zeta><zeta| against the hyperbolic measure.

    Converges to the identity — the resolution of unity that V(z) retains
    even though the reconstruction formula fails.  Boundary nodes carry the
    suppression (1-|zeta|^2)^{2K}, so truncated state columns integrate
    accurately despite their tails being cut.
    """
    two_k = _weight(k)
    if two_k <= 1:
        raise ValueError("the hyperbolic measure weight 2K - 1 must be positive, so 2K > 1")
    _require_spin_space(space, two_k)
    zeta, weights = grid.nodes()
    cutoff = space.cutoff
    n = np.arange(cutoff)
    log_mag = _log_state_weights(two_k, cutoff)
    out = np.zeros((cutoff, cutoff), dtype=complex)
    chunk = 8192
    for start in range(0, zeta.size, chunk):
        zc = zeta[start : start + chunk]
        wc = weights[start : start + chunk]
        lam = 1.0 - np.abs(zc) ** 2
        keep = lam > 0.0
        zc, wc, lam = zc[keep], wc[keep], lam[keep]
        if zc.size == 0:
            continue
        columns = np.exp(
            log_mag[:, None] + (two_k / 2.0) * np.log(lam)[None, :]
        ) * np.power(zc[None, :], n[:, None])
        out += (columns * ((two_k - 1.0) * wc)[None, :]) @ columns.conj().T
    return out
