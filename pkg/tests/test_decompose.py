import numpy as np
import pytest

from gpbent import zn
from gpbent.analysis import NotGPB, analyze, autocorrelation, satisfies_t_condition
from gpbent.corpus import make_affine, make_example_2_1, make_product_bent, make_quadratic, random_function
from gpbent.decompose import (
    Decomposition,
    PureInput,
    build_peel_matrices,
    decompose,
    decompose_step,
    is_prime,
    prime_case_check,
    reconstruct,
    verify_decomposition,
)
from gpbent.transforms import LogicFunction, linear_substitute

from oracles import stack_affine


def test_peel_matrices_example():
    A1, A2 = build_peel_matrices((3, 1), 1, 4)
    assert A1 == ((1, 0), (3, 1))
    assert zn.mat_inverse(A1, 4) == ((1, 0), (1, 1))
    assert A2 == ((0, 1), (1, 0))
    assert zn.mat_mul(A2, zn.mat_transpose(A2), 4) == zn.identity(2)
    with pytest.raises(ValueError):
        build_peel_matrices((3, 2), 1, 4)


@pytest.mark.parametrize("N,n", [(2, 3), (3, 3), (4, 2), (6, 3)])
def test_peel_matrices_invertible(N, n):
    rng = np.random.default_rng(N * 10 + n)
    for _ in range(20):
        i = int(rng.integers(n))
        alpha = [int(a) for a in rng.integers(0, N, n)]
        alpha[i] = 1
        A1, A2 = build_peel_matrices(alpha, i, N)
        A = zn.mat_mul(A2, A1, N)
        assert zn.is_invertible(A, N)
        # first row of A is alpha
        assert A[0] == tuple(alpha)


def test_step_linear_plus_bent_boolean():
    f = LogicFunction.from_callable(2, 3, lambda v: v[0] + v[1] * v[2])
    A, g, tp = decompose_step(f)
    for y in zn.all_vectors(2, 3).tolist():
        y1 = zn.vec_add(y, (1, 0, 0), 2)
        assert g(y1) == (g(tuple(y)) - tp[0]) % 2
    D = decompose(f)
    assert D.m == 1 and D.affine_coeffs == (1,) and D.constant == 0
    assert D.residual == LogicFunction(2, 2, [0, 0, 0, 1])
    assert verify_decomposition(f, D)


def test_step_ternary_square():
    f = LogicFunction.from_callable(3, 2, lambda v: v[0] + v[1] ** 2)
    D = decompose(f)
    assert D.m == 1 and D.affine_coeffs == (1,)
    assert D.residual == LogicFunction(3, 1, [0, 1, 1])
    assert verify_decomposition(f, D) and prime_case_check(D)


def test_decompose_affine():
    f = make_affine(2, 2, (1, 1), 1)
    D = decompose(f)
    assert D.m == 2 and D.residual.n == 0 and D.constant == 1
    assert D.affine_coeffs == (1, 1)
    assert verify_decomposition(f, D)


@pytest.mark.parametrize("N,n", [(2, 3), (3, 2), (4, 2), (5, 1)])
def test_decompose_constant(N, n):
    f = LogicFunction(N, n, [N - 1] * N**n)
    D = decompose(f)
    assert D.m == n and D.affine_coeffs == (0,) * n and D.constant == N - 1
    assert verify_decomposition(f, D)


def test_decompose_pure_inputs():
    for f in (make_example_2_1(), make_product_bent(3, 2)):
        D = decompose(f)
        assert D.m == 0 and D.A_total == zn.identity(2) and D.residual == f
        assert verify_decomposition(f, D)
        with pytest.raises(PureInput):
            decompose_step(f)


def test_decompose_rejects_non_gpb():
    f = LogicFunction.from_callable(2, 3, lambda v: v[0] * v[1] * v[2])
    with pytest.raises(NotGPB):
        decompose(f)
    with pytest.raises(NotGPB):
        decompose_step(f)


def test_verify_rejects_mutations():
    f = LogicFunction.from_callable(3, 3, lambda v: 2 * v[0] + v[1] * v[2] + 1)
    D = decompose(f)
    assert verify_decomposition(f, D)
    bad = [
        Decomposition(D.N, D.n, D.A_total, D.m, D.affine_coeffs, D.residual, (D.constant + 1) % 3),
        Decomposition(D.N, D.n, D.A_total, D.m, ((D.affine_coeffs[0] + 1) % 3,), D.residual, D.constant),
        Decomposition(D.N, D.n, ((1, 0, 0), (0, 0, 0), (0, 0, 1)), D.m, D.affine_coeffs, D.residual, D.constant),
        Decomposition(D.N, D.n, D.A_total, 2, D.affine_coeffs, D.residual, D.constant),
    ]
    for B in bad:
        assert not verify_decomposition(f, B)
    # a valid identity whose residual is not pure is also rejected
    g = make_affine(3, 2, (1, 2), 0)
    H = Decomposition(3, 2, zn.identity(2), 0, (), g, 0)
    assert linear_substitute(g, H.A_total) == reconstruct(H)
    assert not verify_decomposition(g, H)


def test_verify_hand_built():
    # f(xB) = x1 + x2 x3 with B chosen by hand, so f = (y B^-1)_1 + ...
    core = stack_affine(LogicFunction(2, 2, [0, 0, 0, 1]), (1,))
    B = ((1, 1, 0), (0, 1, 0), (1, 0, 1))
    f = linear_substitute(core, zn.mat_inverse(B, 2))
    D = Decomposition(2, 3, B, 1, (1,), LogicFunction(2, 2, [0, 0, 0, 1]), 0)
    assert verify_decomposition(f, D)
    assert verify_decomposition(f, decompose(f))


def test_prime_case_check():
    D = decompose(make_product_bent(5, 2))
    assert prime_case_check(D)
    with pytest.raises(ValueError):
        prime_case_check(decompose(make_example_2_1()))
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


CORES = [
    LogicFunction(2, 2, [0, 0, 0, 1]),
    make_product_bent(3, 2),
    make_quadratic(3, 1, [[1]]),
    make_example_2_1(),
    make_quadratic(5, 1, [[2]]),
    LogicFunction(4, 0, [3]),
]


@pytest.mark.parametrize("core", CORES, ids=lambda c: f"N{c.N}n{c.n}")
@pytest.mark.parametrize("k", [1, 2])
def test_constructed_round_trip(core, k):
    N = core.N
    rng = np.random.default_rng(17 * N + k)
    for _ in range(3):
        coeffs = tuple(int(a) for a in rng.integers(0, N, k))
        h = stack_affine(core, coeffs, int(rng.integers(N)))
        B = zn.random_invertible(N, h.n, rng)
        f = linear_substitute(h, B)
        D = decompose(f)
        assert D.m == k
        assert verify_decomposition(f, D)
        if D.residual.n:
            assert decompose(D.residual, "naive").m == 0
        if is_prime(N) and D.residual.n:
            assert prime_case_check(D)


def test_step_equivariance_and_restriction():
    rng = np.random.default_rng(3)
    for N, core in [(3, make_product_bent(3, 2)), (4, make_example_2_1()), (2, make_product_bent(2, 2))]:
        h = stack_affine(core, (1,), 2)
        f = linear_substitute(h, zn.random_invertible(N, h.n, rng))
        r = analyze(f)
        A, g, tp = decompose_step(f, r)
        assert tp == zn.mat_apply(r.t, zn.mat_transpose(A), N)
        assert satisfies_t_condition(autocorrelation(g), tp)
        e1 = (1,) + (0,) * (f.n - 1)
        for y in zn.all_vectors(N, f.n).tolist():
            assert g(zn.vec_add(y, e1, N)) == (g(tuple(y)) - tp[0]) % N


def test_full_boolean_sweep():
    from gpbent.corpus import enumerate_all

    for f in enumerate_all(2, 3):
        r = analyze(f)
        if not r.is_gpb:
            continue
        D = decompose(f)
        assert verify_decomposition(f, D)
        assert prime_case_check(D)
        assert D.m == 3 - D.residual.n


def test_random_gpb_decompositions():
    hits = 0
    for seed in range(400):
        f = random_function(3, 2, seed)
        if analyze(f).is_gpb:
            hits += 1
            assert verify_decomposition(f, decompose(f))
    assert hits > 0
