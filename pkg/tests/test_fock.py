"""Truncated-space construction, ladder/spin generators, matrix exponentials."""
import numpy as np
import pytest
import scipy.linalg
import scipy.special

from fockbench.fock import (
    SafeSector,
    build_ladder,
    build_spin_k,
    exp_antihermitian,
    exp_general,
    make_space,
    project_safe,
    tensor_product,
)


def test_make_space_kinds():
    s = make_space("single-mode", 64)
    assert s.cutoff == 64 and s.kind == "single-mode"
    s = make_space("spin-K", 64, spin=2.0)
    assert s.spin == 2.0
    s = make_space("two-mode", per_mode_cutoff=8)
    assert s.cutoff == 64 and s.per_mode_cutoff == 8


def test_make_space_rejects_bad_input():
    with pytest.raises(ValueError):
        make_space("single-mode", 3)          # cutoff too small
    with pytest.raises(ValueError):
        make_space("spin-K", 64)              # missing spin
    with pytest.raises(ValueError):
        make_space("spin-K", 64, spin=-1.0)   # spin <= 0
    with pytest.raises(ValueError):
        make_space("single-mode", 64, spin=2.0)  # spin on wrong kind


def test_ladder_action():
    space = make_space("single-mode", 16)
    a, adag, num = build_ladder(space)
    # a|1> = |0>
    assert a[0, 1] == 1.0
    # a|0> = 0
    assert np.all(a[:, 0] == 0)
    assert np.allclose(adag, a.conj().T)
    assert np.allclose(num, adag @ a)
    assert np.allclose(np.diag(num), np.arange(16))


def test_ladder_commutator_truncation_structure():
    # [a, a+] = I everywhere except the (N-1, N-1) corner, which reads -(N-1)
    space = make_space("single-mode", 12)
    a, adag, _ = build_ladder(space)
    comm = a @ adag - adag @ a
    expected = np.eye(12, dtype=complex)
    expected[11, 11] = -11.0
    assert np.allclose(comm, expected, atol=1e-13)


def test_spin_k_action():
    space = make_space("spin-K", 16, spin=2.0)
    kp, km, k3 = build_spin_k(space)
    # K+|K,0> = sqrt(2K)|K,1>
    assert np.isclose(kp[1, 0], np.sqrt(2.0))
    # K-|K,0> = 0
    assert np.all(km[:, 0] == 0)
    assert np.allclose(km, kp.conj().T)
    assert np.allclose(np.diag(k3), 1.0 + np.arange(16))
    assert np.count_nonzero(k3 - np.diag(np.diag(k3))) == 0


@pytest.mark.parametrize("two_k", [0.5, 1.0, 2.0, 2.5])
def test_spin_k_commutators_on_safe_sector(two_k):
    space = make_space("spin-K", 32, spin=two_k)
    kp, km, k3 = build_spin_k(space)
    ns = 8
    for lhs, rhs in [
        (k3 @ kp - kp @ k3, kp),
        (k3 @ km - km @ k3, -km),
        (kp @ km - km @ kp, -2.0 * k3),
    ]:
        assert np.allclose(lhs[:ns, :ns], rhs[:ns, :ns], atol=1e-13)


def test_tensor_product_conventions():
    assert np.allclose(tensor_product(np.eye(2), np.eye(2)), np.eye(4))
    space = make_space("two-mode", per_mode_cutoff=4)
    single = make_space("single-mode", 4)
    a, adag, _ = build_ladder(single)
    a1 = tensor_product(a, np.eye(4))
    a2 = tensor_product(np.eye(4), a)
    # row-major pairing: |n1, n2> at index n1*4 + n2, so a1|1,0> = |0,0>
    v = np.zeros(16)
    v[1 * 4 + 0] = 1.0
    out = a1 @ v
    assert np.isclose(out[0], 1.0) and np.isclose(np.linalg.norm(out), 1.0)
    # different modes commute exactly
    assert np.all(a1 @ a2.conj().T - a2.conj().T @ a1 == 0)
    assert space.cutoff == 16


def test_exp_antihermitian_identity_and_unitarity():
    res = exp_antihermitian(np.zeros((8, 8), dtype=complex))
    assert np.allclose(res.matrix, np.eye(8))
    assert res.unitarity_defect <= 1e-12

    space = make_space("single-mode", 64)
    a, adag, _ = build_ladder(space)
    z = 0.7 + 0.3j
    res = exp_antihermitian(z * adag - np.conj(z) * a)
    assert res.unitarity_defect <= 1e-12
    # column 0 is the coherent-amplitude series
    n = np.arange(64)
    ref = np.exp(-abs(z) ** 2 / 2) * z ** n / np.sqrt(scipy.special.factorial(n))
    assert np.allclose(res.matrix[:, 0], ref, atol=1e-12)


def test_exp_antihermitian_rejects_nonantihermitian():
    with pytest.raises(ValueError):
        exp_antihermitian(np.eye(4, dtype=complex))


def test_exp_general_against_scipy():
    rng = np.random.default_rng(7)
    g = rng.normal(size=(24, 24)) + 1j * rng.normal(size=(24, 24))
    g *= 0.3
    ours = exp_general(g, tol=1e-13)
    ref = scipy.linalg.expm(g)
    assert np.linalg.norm(ours - ref, 2) <= 1e-10 * np.linalg.norm(ref, 2)


def test_exp_general_diagonal_and_inverse():
    d = np.diag(np.array([0.1, -2.0, 3.0, 0.0]))
    assert np.allclose(exp_general(d.astype(complex), tol=1e-13), np.diag(np.exp(np.diag(d))))
    rng = np.random.default_rng(11)
    g = 0.5 * (rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
    prod = exp_general(g, tol=1e-13) @ exp_general(-g, tol=1e-13)
    assert np.linalg.norm(prod - np.eye(16), 2) <= 1e-11


def test_exp_general_overflow_is_structured():
    from fockbench.fock import OverflowInfeasible
    g = np.diag(np.full(4, 2000.0)).astype(complex)
    with pytest.raises(OverflowInfeasible):
        exp_general(g, tol=1e-13)


def test_project_safe():
    m = np.arange(36, dtype=complex).reshape(6, 6)
    s = SafeSector(rank=3)
    block = project_safe(m, s)
    assert block.shape == (3, 3)
    assert np.allclose(block, m[:3, :3])
    assert np.allclose(project_safe(np.eye(6, dtype=complex), SafeSector(rank=4)), np.eye(4))
    with pytest.raises(ValueError):
        project_safe(m, SafeSector(rank=7))
