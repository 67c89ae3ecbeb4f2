"""Truncated Fock spaces, ladder/spin-K generators, and controlled matrix exponentials.

Everything here works with dense complex numpy matrices over a finite basis
|0>, ..., |N-1> standing in for an infinite Fock space.  Operator identities
on the untruncated space only hold approximately after truncation, and only
away from the cutoff boundary — the SafeSector type carries the rank of the
leading block on which identities are actually asserted.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

KINDS = ("single-mode", "spin-K", "two-mode")


class OverflowInfeasible(OverflowError):
    """Matrix exponential left the representable range.

    Signals that the requested cutoff/parameter combination is numerically
    infeasible (e.g. a Hermitian generator whose top eigenvalue exceeds
    ~709 in magnitude), rather than a bug.
    """


@dataclass(frozen=True)
class TruncatedSpace:
    """A finite orthonormal basis indexed 0..cutoff-1.

    kind is one of "single-mode", "spin-K", "two-mode".  spin holds the value
    2K for spin-K spaces; per_mode_cutoff is set for two-mode spaces, whose
    total dimension is per_mode_cutoff**2 with row-major index pairing
    (n1, n2) -> n1*per_mode_cutoff + n2.
    """

    kind: str
    cutoff: int
    spin: float | None = None
    per_mode_cutoff: int | None = None


@dataclass(frozen=True)
class SafeSector:
    """Projector rank: identities are asserted on the leading rank x rank block."""

    rank: int


@dataclass(frozen=True)
class UnitaryResult:
    matrix: np.ndarray
    unitarity_defect: float


def make_space(kind, cutoff=None, spin=None, per_mode_cutoff=None):
    if kind not in KINDS:
        raise ValueError(f"unknown space kind {kind!r}; expected one of {KINDS}")
    if kind == "two-mode":
        if per_mode_cutoff is None:
            raise ValueError("two-mode space requires per_mode_cutoff")
        if per_mode_cutoff < 2:
            raise ValueError("per_mode_cutoff must be at least 2")
        total = per_mode_cutoff * per_mode_cutoff
        if cutoff is not None and cutoff != total:
            raise ValueError("two-mode cutoff must equal per_mode_cutoff**2")
        if spin is not None:
            raise ValueError("spin is only meaningful for spin-K spaces")
        return TruncatedSpace(kind, total, None, per_mode_cutoff)
    if cutoff is None or cutoff < 4:
        raise ValueError("cutoff must be an integer >= 4")
    if kind == "spin-K":
        if spin is None:
            raise ValueError("spin-K space requires the weight 2K via spin=")
        if spin <= 0:
            raise ValueError("spin weight 2K must be positive")
        return TruncatedSpace(kind, int(cutoff), float(spin), None)
    if spin is not None:
        raise ValueError("spin is only meaningful for spin-K spaces")
    return TruncatedSpace(kind, int(cutoff), None, None)


def build_ladder(space):
    """Annihilation, creation, and number matrices for a single-mode space."""
    if space.kind != "single-mode":
        raise ValueError("build_ladder requires a single-mode space")
    n = space.cutoff
    a = np.diag(np.sqrt(np.arange(1, n, dtype=float)), 1).astype(complex)
    adag = a.conj().T
    num = np.diag(np.arange(n, dtype=float)).astype(complex)
    return a, adag, num


def build_spin_k(space):
    """Raising/lowering/diagonal generators of the discrete-series action.

    K+ carries sqrt((n+1)(2K+n)) at entry (n+1, n); K- is its adjoint;
    K3 is diagonal with entries K+n.
    """
    if space.kind != "spin-K":
        raise ValueError("build_spin_k requires a spin-K space")
    two_k = space.spin
    n = np.arange(space.cutoff - 1, dtype=float)
    kp = np.diag(np.sqrt((n + 1.0) * (two_k + n)), -1).astype(complex)
    km = kp.conj().T
    k3 = np.diag(two_k / 2.0 + np.arange(space.cutoff, dtype=float)).astype(complex)
    return kp, km, k3


def tensor_product(a, b):
    """Kronecker product with row-major pairing (n1, n2) -> n1*dim2 + n2."""
    return np.kron(a, b)


def exp_antihermitian(g):
    """exp(G) for anti-Hermitian G through the spectral factorization of iG.

    The result is unitary by construction up to rounding; the achieved
    ||M'M - I|| is returned alongside the matrix.
    """
    norm = np.linalg.norm(g, 2)
    if np.linalg.norm(g + g.conj().T, 2) > 1e-12 * max(norm, 1.0):
        raise ValueError("generator is not anti-Hermitian")
    h = 1j * g
    w, q = np.linalg.eigh(h)
    m = (q * np.exp(-1j * w)) @ q.conj().T
    defect = np.linalg.norm(m.conj().T @ m - np.eye(g.shape[0]), 2)
    return UnitaryResult(m, float(defect))


def exp_general(g, tol=1e-13):
    """exp(G) by scaling-and-squaring with a truncated Taylor series.

    Entries of exp(G) that leave the representable floating range raise
    OverflowInfeasible instead of propagating NaN/inf silently.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    g = np.asarray(g, dtype=complex)
    norm1 = np.linalg.norm(g, 1)
    if not np.isfinite(norm1):
        raise OverflowInfeasible("generator contains non-finite entries")
    s = max(0, int(np.ceil(np.log2(norm1 / 0.5)))) if norm1 > 0.5 else 0
    gs = g / (2.0 ** s)
    n = g.shape[0]
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 60):
        term = term @ gs / k
        result += term
        if np.linalg.norm(term, 1) <= tol * np.linalg.norm(result, 1):
            break
    for _ in range(s):
        with np.errstate(over="ignore", invalid="ignore"):
            result = result @ result
        if not np.all(np.isfinite(result)):
            raise OverflowInfeasible(
                "exp(G) exceeded the representable range during squaring; "
                "the cutoff/parameter combination is infeasible in float64"
            )
    if not np.all(np.isfinite(result)):
        raise OverflowInfeasible("exp(G) exceeded the representable range")
    return result


def project_safe(m, sector):
    """Leading rank x rank block of a matrix."""
    if sector.rank > m.shape[0]:
        raise ValueError("safe-sector rank exceeds matrix dimension")
    return m[: sector.rank, : sector.rank]


def operator_norm(m):
    """Largest singular value (exact residual norm for modest dimensions)."""
    return float(np.linalg.norm(m, 2))


def default_safe_sector(space):
    """Default discipline: quarter of the cutoff."""
    return SafeSector(rank=max(1, space.cutoff // 4))
