import itertools

import pytest

from gpbent import zn
from gpbent.analysis import is_generalized_bent, is_generalized_partially_bent
from gpbent.corpus import (
    CapExceeded,
    GeneratorSpec,
    census,
    enumerate_all,
    function_count,
    is_affine,
    make_affine,
    make_example_2_1,
    make_product_bent,
    make_quadratic,
    random_function,
    splitmix64,
)
from gpbent.transforms import LogicFunction

from oracles import spectrum_ref


def test_splitmix_reference_values():
    # published first outputs of SplitMix64 seeded with 0
    g = splitmix64(0)
    assert [next(g) for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_random_function_deterministic():
    a, b = random_function(5, 3, 42), random_function(5, 3, 42)
    assert a == b
    assert a != random_function(5, 3, 43)
    g = splitmix64(42)
    assert a.table.tolist() == [next(g) % 5 for _ in range(125)]


def test_example_fixture_values():
    f = make_example_2_1()
    assert (f.N, f.n) == (4, 2)
    assert f((0, 2)) == 2 and f((0, 1)) == 2 and f((0, 3)) == 0 and f((1, 1)) == 0
    assert f.table.tolist() == [0, 2, 2, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 2, 2, 0]


@pytest.mark.parametrize("N,n,count", [(2, 1, 4), (2, 2, 16), (3, 1, 27)])
def test_enumerate_counts(N, n, count):
    fs = list(enumerate_all(N, n))
    assert len(fs) == count == function_count(N, n)
    assert len(set(fs)) == count
    assert fs[0].table.tolist() == [0] * N**n
    assert fs[1].table.tolist() == [0] * (N**n - 1) + [1]


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_all(4, 3))
    with pytest.raises(CapExceeded):
        next(enumerate_all(2, 2, cap=15))


def test_is_affine():
    assert is_affine(make_affine(6, 2, (5, 3), 4))
    assert not is_affine(make_example_2_1())
    assert sum(is_affine(f) for f in enumerate_all(3, 1)) == 9


def brute_census(N, n):
    out = dict(total=0, gbent=0, affine=0)
    for table in itertools.product(range(N), repeat=N**n):
        f = LogicFunction(N, n, table)
        S = spectrum_ref(f)
        out["total"] += 1
        out["gbent"] += all(z.norm_sq() == N**n for z in S)
        V = zn.all_vectors(N, n).tolist()
        out["affine"] += any(
            all(table[k] == (zn.inner_product(a, v, N) + c) % N for k, v in enumerate(V))
            for a in itertools.product(range(N), repeat=n) for c in range(N))
    return out


@pytest.mark.parametrize("N,n", [(2, 1), (2, 2), (3, 1)])
def test_census_against_brute_force(N, n):
    c = census(N, n)
    ref = brute_census(N, n)
    assert (c.total, c.gbent, c.affine) == (ref["total"], ref["gbent"], ref["affine"])
    assert c.inequality_violations == 0
    assert c.gpb + c.other == c.total


def test_census_small_values():
    c = census(2, 2)
    assert c.as_dict() == {"N": 2, "n": 2, "total": 16, "gbent": 8, "gpb": 16, "pure_gpb": 8,
                           "affine": 8, "other": 0, "inequality_violations": 0}
    assert census(2, 1).affine == 4


def test_constructions_are_bent():
    for N in (2, 3, 4, 5, 6, 7):
        assert is_generalized_bent(make_product_bent(N, 2))
    assert is_generalized_bent(make_product_bent(2, 4))
    assert is_generalized_bent(make_product_bent(3, 4))
    for N in (3, 5, 7):
        assert is_generalized_bent(make_quadratic(N, 1, [[1]]))
    # x^2 is not bent over Z_4 but is still partially bent there
    q = make_quadratic(4, 1, [[1]])
    assert not is_generalized_bent(q)
    with pytest.raises(ValueError):
        make_product_bent(3, 3)


def test_quadratic_with_linear_part():
    f = make_quadratic(5, 2, [[1, 2], [9, 0]], t=(1, 1), c=3)
    for x, y in zn.all_vectors(5, 2).tolist():
        assert f((x, y)) == (x * x + 2 * x * y + x + y + 3) % 5


def test_generator_spec():
    assert GeneratorSpec("example_2_1", 4, 2).build() == make_example_2_1()
    assert GeneratorSpec("affine", 3, 2, {"t": [1, 2], "c": 1}).build() == make_affine(3, 2, (1, 2), 1)
    assert GeneratorSpec("random", 2, 3, {"seed": 9}).build() == random_function(2, 3, 9)
    assert is_generalized_partially_bent(GeneratorSpec("product_bent", 4, 2).build())
    for bad in [("bogus", 2, 2, {}), ("random", 1, 2, {}), ("affine", 2, -1, {})]:
        with pytest.raises(ValueError):
            GeneratorSpec(*bad)
    with pytest.raises(ValueError):
        GeneratorSpec("random", 2, 2).build()
    with pytest.raises(ValueError):
        GeneratorSpec("example_2_1", 3, 2).build()
    with pytest.raises(ValueError):
        GeneratorSpec("exhaustive", 2, 2).build()
