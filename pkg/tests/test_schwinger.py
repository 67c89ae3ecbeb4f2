import numpy as np
import pytest
from numpy.testing import assert_allclose

from fockbench.fock import (
    SafeSector,
    build_spin_k,
    exp_antihermitian,
    exp_general,
    make_space,
)
from fockbench.schwinger import (
    paris_residual,
    single_mode_su11,
    squeeze,
    total_quanta_indices,
    two_mode_operators,
    two_mode_v,
    two_mode_w,
)

SINGLE = make_space("single-mode", 64)
PAIR = make_space("two-mode", per_mode_cutoff=16)


def sector_block(m, idx):
    return m[np.ix_(idx, idx)]


# ---------------------------------------------------------------- single-mode realization


def test_single_mode_k3_diagonal_starts_quarter_three_quarter():
    _, _, k3 = single_mode_su11(SINGLE)
    assert k3[0, 0] == 0.25
    assert k3[1, 1] == 0.75
    assert_allclose(np.diag(k3), 0.25 + 0.5 * np.arange(64), atol=0)


def test_single_mode_commutator_kp_km():
    kp, km, k3 = single_mode_su11(SINGLE)
    comm = kp @ km - km @ kp
    block = (comm + 2.0 * k3)[:16, :16]
    assert np.max(np.abs(block)) <= 1e-13


def test_single_mode_commutator_k3_kp():
    kp, _, k3 = single_mode_su11(SINGLE)
    comm = k3 @ kp - kp @ k3
    assert np.max(np.abs((comm - kp)[:16, :16])) <= 1e-13


def test_single_mode_even_sector_is_spin_one_half_weight():
    # (a+)^2/2 restricted to even indices carries the 2K = 1/2 ladder.
    kp, _, _ = single_mode_su11(SINGLE)
    even = kp[::2, ::2]
    spin = make_space("spin-K", 32, spin=0.5)
    kp_spin, _, _ = build_spin_k(spin)
    assert_allclose(even, kp_spin, atol=1e-13)


def test_single_mode_odd_sector_is_spin_three_half_weight():
    kp, _, _ = single_mode_su11(SINGLE)
    odd = kp[1::2, 1::2]
    spin = make_space("spin-K", 32, spin=1.5)
    kp_spin, _, _ = build_spin_k(spin)
    assert_allclose(odd, kp_spin, atol=1e-13)


def test_single_mode_rejects_wrong_space():
    with pytest.raises(ValueError):
        single_mode_su11(PAIR)


# ---------------------------------------------------------------- squeezer


def test_squeeze_at_zero_is_identity():
    s = squeeze(SINGLE, 0.0)
    assert_allclose(s.matrix, np.eye(64), atol=1e-14)


def test_squeeze_vacuum_element():
    space = make_space("single-mode", 128)
    for z in (0.5, 0.5 + 0.3j, 1.2j):
        s = squeeze(space, z)
        assert abs(s.matrix[0, 0] - np.cosh(abs(z)) ** -0.5) < 1e-10


def test_squeeze_unitarity():
    assert squeeze(SINGLE, 0.7 - 0.2j).unitarity_defect <= 1e-12


def test_squeeze_inverse():
    u = squeeze(SINGLE, 0.6 + 0.1j).matrix
    v = squeeze(SINGLE, -0.6 - 0.1j).matrix
    block = (u @ v)[:16, :16]
    assert np.linalg.norm(block - np.eye(16), 2) < 1e-10


def test_squeeze_preserves_parity():
    s = squeeze(SINGLE, 0.9 + 0.4j).matrix
    even_to_odd = s[1::2, ::2]
    odd_to_even = s[::2, 1::2]
    assert np.max(np.abs(even_to_odd)) <= 1e-14
    assert np.max(np.abs(odd_to_even)) <= 1e-14


def test_squeeze_even_block_matches_spin_exponential():
    z = 0.8 - 0.5j
    s = squeeze(SINGLE, z).matrix
    spin = make_space("spin-K", 32, spin=0.5)
    kp, km, _ = build_spin_k(spin)
    ref = exp_antihermitian(z * kp - np.conj(z) * km).matrix
    assert np.max(np.abs(s[::2, ::2][:16, :16] - ref[:16, :16])) < 1e-10


def test_squeeze_rejects_large_amplitude():
    with pytest.raises(ValueError):
        squeeze(SINGLE, 2.0)


def test_squeeze_rejects_wrong_space():
    with pytest.raises(ValueError):
        squeeze(PAIR, 0.5)


# ---------------------------------------------------------------- two-mode operators


def test_two_mode_k3_on_joint_vacuum():
    ops = two_mode_operators(PAIR)
    e00 = np.zeros(PAIR.cutoff)
    e00[0] = 1.0
    assert_allclose(ops.k3 @ e00, 0.5 * e00, atol=0)


def test_two_mode_ladder_products_match_bilinears():
    ops = two_mode_operators(PAIR)
    assert_allclose(ops.j_plus, ops.a1_dagger @ ops.a2, atol=0)
    assert_allclose(ops.k_plus, ops.a1_dagger @ ops.a2_dagger, atol=0)
    assert_allclose(ops.k_minus, ops.a2 @ ops.a1, atol=0)


def test_two_mode_canonical_relations_on_sector():
    ops = two_mode_operators(PAIR)
    idx = total_quanta_indices(PAIR, 10)
    eye = np.eye(PAIR.cutoff)
    for left, right, want in (
        (ops.a1, ops.a1_dagger, eye),
        (ops.a2, ops.a2_dagger, eye),
        (ops.a1, ops.a2_dagger, 0.0 * eye),
        (ops.a1, ops.a2, 0.0 * eye),
    ):
        comm = left @ right - right @ left
        assert np.max(np.abs(sector_block(comm - want, idx))) <= 1e-13


def test_two_mode_su2_su11_commutators_on_sector():
    ops = two_mode_operators(PAIR)
    idx = total_quanta_indices(PAIR, 10)
    checks = (
        (ops.j_plus @ ops.j_minus - ops.j_minus @ ops.j_plus, 2.0 * ops.j3),
        (ops.j3 @ ops.j_plus - ops.j_plus @ ops.j3, ops.j_plus),
        (ops.k_plus @ ops.k_minus - ops.k_minus @ ops.k_plus, -2.0 * ops.k3),
        (ops.k3 @ ops.k_plus - ops.k_plus @ ops.k3, ops.k_plus),
    )
    for got, want in checks:
        assert np.max(np.abs(sector_block(got - want, idx))) <= 1e-13


def test_two_mode_k_plus_walks_the_diagonal_ladder():
    ops = two_mode_operators(PAIR)
    d = PAIR.per_mode_cutoff
    for n in range(5):
        col = np.zeros(PAIR.cutoff)
        col[n * d + n] = 1.0
        out = ops.k_plus @ col
        want = np.zeros(PAIR.cutoff)
        want[(n + 1) * d + (n + 1)] = n + 1.0
        assert_allclose(out, want, atol=1e-13)


def test_two_mode_rejects_wrong_space():
    with pytest.raises(ValueError):
        two_mode_operators(SINGLE)


def test_total_quanta_indices_small_case():
    space = make_space("two-mode", per_mode_cutoff=3)
    idx = total_quanta_indices(space, 1)
    # (0,0), (0,1), (1,0) in row-major order.
    assert idx.tolist() == [0, 1, 3]


# ---------------------------------------------------------------- two-mode exponentials


def test_two_mode_v_vacuum_element():
    space = make_space("two-mode", per_mode_cutoff=32)
    v = two_mode_v(space, 0.6).matrix
    assert abs(v[0, 0] - 1.0 / np.cosh(0.6)) < 1e-12


def test_two_mode_v_diagonal_ladder_amplitudes():
    # V(z)|0,0> lives on |n,n> with geometric amplitudes tanh^n / cosh.
    space = make_space("two-mode", per_mode_cutoff=32)
    z = 0.4 * np.exp(0.7j)
    v = two_mode_v(space, z).matrix
    d = space.per_mode_cutoff
    col = v[:, 0]
    phase = z / abs(z)
    for n in range(6):
        want = (np.tanh(abs(z)) * phase) ** n / np.cosh(abs(z))
        assert abs(col[n * d + n] - want) < 1e-12
    off = col.copy()
    off[np.arange(d) * d + np.arange(d)] = 0.0
    assert np.max(np.abs(off)) <= 1e-14


def test_two_mode_v_matches_dense_exponential():
    space = make_space("two-mode", per_mode_cutoff=8)
    z = 0.3 + 0.2j
    ops = two_mode_operators(space)
    dense = exp_general(z * ops.k_plus - np.conj(z) * ops.k_minus)
    assert np.max(np.abs(two_mode_v(space, z).matrix - dense)) < 1e-12


def test_two_mode_w_matches_dense_exponential():
    space = make_space("two-mode", per_mode_cutoff=8)
    z = -0.25 + 0.45j
    ops = two_mode_operators(space)
    dense = exp_general(z * ops.j_plus - np.conj(z) * ops.j_minus)
    assert np.max(np.abs(two_mode_w(space, z).matrix - dense)) < 1e-12


def test_two_mode_w_preserves_total_quanta():
    w = two_mode_w(PAIR, 0.8).matrix
    n1, n2 = np.divmod(np.arange(PAIR.cutoff), PAIR.per_mode_cutoff)
    quanta = n1 + n2
    mask = quanta[:, None] != quanta[None, :]
    assert np.max(np.abs(w[mask])) == 0.0


def test_two_mode_v_preserves_quanta_difference():
    v = two_mode_v(PAIR, 0.8j).matrix
    n1, n2 = np.divmod(np.arange(PAIR.cutoff), PAIR.per_mode_cutoff)
    diff = n1 - n2
    mask = diff[:, None] != diff[None, :]
    assert np.max(np.abs(v[mask])) == 0.0


def test_two_mode_exponentials_are_unitary():
    assert two_mode_v(PAIR, 0.7 + 0.1j).unitarity_defect <= 1e-12
    assert two_mode_w(PAIR, 0.7 + 0.1j).unitarity_defect <= 1e-12


def test_two_mode_exponentials_reject_large_amplitude():
    with pytest.raises(ValueError):
        two_mode_v(PAIR, 1.8)
    with pytest.raises(ValueError):
        two_mode_w(PAIR, 1.8)


# ---------------------------------------------------------------- rotated-squeezer identity


def test_paris_residual_zero_at_origin():
    assert paris_residual(PAIR, 0.0, SafeSector(rank=8)) <= 1e-12


def test_paris_residual_small_inside_sector():
    space = make_space("two-mode", per_mode_cutoff=24)
    assert paris_residual(space, 0.3, SafeSector(rank=6)) < 1e-8


def test_paris_residual_shrinks_with_cutoff():
    sector = SafeSector(rank=6)
    coarse = paris_residual(make_space("two-mode", per_mode_cutoff=12), 0.5, sector)
    fine = paris_residual(make_space("two-mode", per_mode_cutoff=24), 0.5, sector)
    assert fine < coarse


def test_paris_vacuum_element_both_routes():
    # The rotated squeezer product and V(z) agree with 1/cosh on the vacuum.
    z = 0.5
    space = make_space("two-mode", per_mode_cutoff=32)
    w = two_mode_w(space, -np.pi / 4).matrix
    s1 = squeeze(make_space("single-mode", space.per_mode_cutoff), z).matrix
    s2 = squeeze(make_space("single-mode", space.per_mode_cutoff), -z).matrix
    product = w @ np.kron(s1, s2) @ w.conj().T
    assert abs(product[0, 0] - 1.0 / np.cosh(z)) < 1e-9
    assert abs(two_mode_v(space, z).matrix[0, 0] - 1.0 / np.cosh(z)) < 1e-12


def test_paris_residual_rejects_large_amplitude():
    with pytest.raises(ValueError):
        paris_residual(PAIR, 1.2)


def test_paris_residual_rejects_wrong_space():
    with pytest.raises(ValueError):
        paris_residual(SINGLE, 0.5)
