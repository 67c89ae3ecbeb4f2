"""Boson realizations: single-mode squeezer and two-mode pair/exchange operators.

Quadratic combinations of ladder operators furnish concrete su(1,1) and su(2)
actions on Fock spaces.  A single mode carries spin 1/4 (even states) plus
3/4 (odd states) through K+ = (a+)^2/2; a pair of modes carries the exchange
triple J (su(2)) and the pair-creation triple K (su(1,1)) simultaneously.
The rotated-product identity connecting two opposite single-mode squeezers
with the two-mode pair operator V(z) is exposed as a residual.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import (
    SafeSector,
    UnitaryResult,
    build_ladder,
    exp_antihermitian,
    make_space,
    operator_norm,
    tensor_product,
)

AMPLITUDE_ENVELOPE = 1.5


@dataclass(frozen=True)
class TwoModeOperators:
    """The ten bilinear matrices on a two-mode space.

    j_plus = a1+ a2 exchanges quanta (su(2), conserves n1+n2); k_plus = a1+ a2+
    creates pairs (su(1,1), conserves n1-n2); j3 and k3 are the corresponding
    half-difference and half-sum-plus-half diagonals.
    """

    a1: np.ndarray
    a1_dagger: np.ndarray
    a2: np.ndarray
    a2_dagger: np.ndarray
    j_plus: np.ndarray
    j_minus: np.ndarray
    j3: np.ndarray
    k_plus: np.ndarray
    k_minus: np.ndarray
    k3: np.ndarray


def _small_ladder(dim):
    a = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)
    return a, a.conj().T, np.diag(np.arange(dim, dtype=float)).astype(complex)


def single_mode_su11(space):
    """K+ = (a+)^2/2, K- = a^2/2, K3 = (a+a + 1/2)/2 on a single mode.

    The even-index subspace carries spin weight 2K = 1/2 and the odd-index
    subspace 2K = 3/2 under this action.
    """
    if space.kind != "single-mode":
        raise ValueError("single_mode_su11 requires a single-mode space")
    a, adag, num = build_ladder(space)
    k_plus = 0.5 * (adag @ adag)
    k_minus = 0.5 * (a @ a)
    k3 = 0.5 * (num + 0.5 * np.eye(space.cutoff))
    return k_plus, k_minus, k3


def squeeze(space, z):
    """exp((z(a+)^2 - conj(z)a^2)/2), the single-mode squeezer."""
    if space.kind != "single-mode":
        raise ValueError("squeeze requires a single-mode space")
    z = complex(z)
    if abs(z) > AMPLITUDE_ENVELOPE:
        raise ValueError(
            f"|z| = {abs(z):.3g} exceeds the squeezer amplitude envelope "
            f"{AMPLITUDE_ENVELOPE}; truncation error is uncontrolled beyond it"
        )
    a, adag, _ = build_ladder(space)
    g = 0.5 * (z * (adag @ adag) - np.conj(z) * (a @ a))
    return exp_antihermitian(g)


def two_mode_operators(space):
    """All ten bilinears with the row-major pairing (n1, n2) -> n1*d + n2."""
    if space.kind != "two-mode":
        raise ValueError("two_mode_operators requires a two-mode space")
    d = space.per_mode_cutoff
    a, adag, num = _small_ladder(d)
    eye = np.eye(d, dtype=complex)
    n1 = tensor_product(num, eye)
    n2 = tensor_product(eye, num)
    j_plus = tensor_product(adag, a)
    k_plus = tensor_product(adag, adag)
    return TwoModeOperators(
        a1=tensor_product(a, eye),
        a1_dagger=tensor_product(adag, eye),
        a2=tensor_product(eye, a),
        a2_dagger=tensor_product(eye, adag),
        j_plus=j_plus,
        j_minus=j_plus.conj().T,
        j3=0.5 * (n1 - n2),
        k_plus=k_plus,
        k_minus=k_plus.conj().T,
        k3=0.5 * (n1 + n2 + np.eye(d * d)),
    )


def total_quanta_indices(space, max_quanta):
    """Basis indices of a two-mode space with n1 + n2 <= max_quanta.

    Two-mode safe sectors are cut by total quanta rather than leading index,
    because the pair operators move probability along diagonals of the
    (n1, n2) lattice.
    """
    if space.kind != "two-mode":
        raise ValueError("total_quanta_indices requires a two-mode space")
    if max_quanta < 0:
        raise ValueError("max_quanta must be nonnegative")
    n1, n2 = np.divmod(np.arange(space.cutoff), space.per_mode_cutoff)
    return np.nonzero(n1 + n2 <= max_quanta)[0]


def _exp_conserving(g, labels):
    # exp of an anti-Hermitian generator that is exactly block-diagonal over
    # the given integer labels; factorizing per block keeps the cost at the
    # block sizes instead of the full dimension.
    out = np.zeros_like(g)
    defect = 0.0
    for lab in np.unique(labels):
        idx = np.nonzero(labels == lab)[0]
        piece = exp_antihermitian(g[np.ix_(idx, idx)])
        out[np.ix_(idx, idx)] = piece.matrix
        defect = max(defect, piece.unitarity_defect)
    return UnitaryResult(out, float(defect))


def _pair_generator(space, z, exchange):
    d = space.per_mode_cutoff
    a, adag, _ = _small_ladder(d)
    raising = tensor_product(adag, a if exchange else adag)
    g = z * raising
    g -= np.conj(z) * raising.conj().T
    n1, n2 = np.divmod(np.arange(space.cutoff), d)
    labels = (n1 + n2) if exchange else (n1 - n2)
    return g, labels


def two_mode_v(space, z):
    """exp(z K+ - conj(z) K-), the two-mode pair-creation operator."""
    if space.kind != "two-mode":
        raise ValueError("two_mode_v requires a two-mode space")
    z = complex(z)
    if abs(z) > AMPLITUDE_ENVELOPE:
        raise ValueError(f"|z| = {abs(z):.3g} exceeds the amplitude envelope")
    g, labels = _pair_generator(space, z, exchange=False)
    return _exp_conserving(g, labels)


def two_mode_w(space, z):
    """exp(z J+ - conj(z) J-), the two-mode exchange rotation."""
    if space.kind != "two-mode":
        raise ValueError("two_mode_w requires a two-mode space")
    z = complex(z)
    if abs(z) > AMPLITUDE_ENVELOPE:
        raise ValueError(f"|z| = {abs(z):.3g} exceeds the amplitude envelope")
    g, labels = _pair_generator(space, z, exchange=True)
    return _exp_conserving(g, labels)


def paris_residual(space, z, sector=None):
    """Norm of W(-pi/4) S1(z) S2(-z) W(-pi/4)^{-1} - V(z) on a quanta sector.

    S1, S2 are single-mode squeezers embedded by tensoring with the identity;
    the rotation angle convention is fixed so that the inverse is W(pi/4).
    sector.rank bounds the total quanta n1 + n2 of the block the residual is
    measured on (default 12).
    """
    if space.kind != "two-mode":
        raise ValueError("paris_residual requires a two-mode space")
    z = complex(z)
    if abs(z) > 1.0:
        raise ValueError("|z| must be at most 1 for the rotated-squeezer check")
    if sector is None:
        sector = SafeSector(rank=12)
    d = space.per_mode_cutoff
    idx = total_quanta_indices(space, sector.rank)
    single = make_space("single-mode", d)
    s1 = squeeze(single, z).matrix
    s2 = squeeze(single, -z).matrix
    w = two_mode_w(space, -np.pi / 4.0).matrix
    v = two_mode_v(space, z).matrix
    # Columns of the product restricted to the sector: the Kronecker factors
    # act on the reshaped (mode1, mode2, column) stack without ever forming
    # the d^2 x d^2 embedded squeezers.
    y = w[idx, :].conj().T
    stack = y.reshape(d, d, idx.size)
    stack = np.einsum("ab,nbk->nak", s2, stack)
    stack = np.einsum("nm,mak->nak", s1, stack)
    y = w @ stack.reshape(d * d, idx.size)
    return operator_norm(y[idx, :] - v[np.ix_(idx, idx)])
