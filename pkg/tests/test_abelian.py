import itertools
import random

import pytest

from cubereps.abelian import (
    FiniteAbelianGroup,
    OracleBoundExceeded,
    invariant_factors,
    mdim_complex_abelian,
    mdim_real_abelian,
    oracle_min_faithful,
    subgroup_factor_check,
    subgroup_invariant_factors,
    zk0m,
)


def test_invariant_factors_examples():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([2] * 11 + [3] * 7) == (2, 2, 2, 2, 6, 6, 6, 6, 6, 6, 6)
    assert invariant_factors([2, 2, 3, 3]) == (6, 6)
    assert invariant_factors([4, 6]) == (2, 12)
    assert invariant_factors([]) == ()


def test_invariant_factors_chain_and_product():
    rng = random.Random(0)
    for _ in range(200):
        orders = [rng.choice([2, 3, 4, 5, 6, 8, 9, 12]) for _ in range(rng.randrange(1, 5))]
        chain = invariant_factors(orders)
        for a, b in zip(chain, chain[1:]):
            assert b % a == 0
        product = 1
        for d in chain:
            product *= d
        expected = 1
        for n in orders:
            expected *= n
        assert product == expected


def test_invariant_factors_rejects_small_orders():
    with pytest.raises(ValueError):
        invariant_factors([1, 2])


def test_zk0m():
    g, basis = zk0m(3, 8)
    assert g.cyclic_orders == (3,) * 7
    assert len(basis) == 7
    assert all(sum(v) % 3 == 0 for v in basis)
    g2, basis2 = zk0m(2, 12)
    assert g2.cyclic_orders == (2,) * 11
    assert g2.order == 2**11
    trivial, empty = zk0m(5, 1)
    assert trivial.cyclic_orders == () and empty == []
    with pytest.raises(ValueError):
        zk0m(1, 3)


def test_mdim_formulas():
    z37 = FiniteAbelianGroup.of(*[3] * 7)
    assert mdim_complex_abelian(z37) == 7
    assert mdim_real_abelian(z37) == 14
    both = FiniteAbelianGroup(tuple([2] * 11 + [3] * 7))
    assert mdim_complex_abelian(both) == 11
    assert mdim_real_abelian(both) == 4 + 2 * 7
    assert mdim_real_abelian(FiniteAbelianGroup.of(2, 2, 2)) == 3  # a=k, b=0
    trivial = FiniteAbelianGroup(())
    assert mdim_complex_abelian(trivial) == 0
    assert mdim_real_abelian(trivial) == 0


def test_mdim_real_vs_complex():
    rng = random.Random(1)
    for _ in range(100):
        orders = tuple(rng.choice([2, 3, 4, 6, 8]) for _ in range(rng.randrange(1, 4)))
        g = FiniteAbelianGroup(orders)
        assert mdim_real_abelian(g) >= mdim_complex_abelian(g)
        assert (mdim_real_abelian(g) == mdim_complex_abelian(g)) == (
            g.large_count == 0
        )


def test_oracle_examples():
    assert oracle_min_faithful(FiniteAbelianGroup.of(2, 2), "complex") == 2
    assert oracle_min_faithful(FiniteAbelianGroup.of(4), "complex") == 1
    assert oracle_min_faithful(FiniteAbelianGroup.of(3, 3), "real") == 4
    assert oracle_min_faithful(FiniteAbelianGroup(()), "complex") == 0


def test_oracle_bound_and_field_validation():
    big = FiniteAbelianGroup.of(*[2] * 10)
    with pytest.raises(OracleBoundExceeded):
        oracle_min_faithful(big, "complex")
    with pytest.raises(ValueError):
        oracle_min_faithful(FiniteAbelianGroup.of(2), "rational")


def test_formula_equals_oracle_small():
    def partitions(n, mx=None):
        if n == 0:
            yield ()
            return
        if mx is None:
            mx = n
        for first in range(min(n, mx), 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest

    count = 0
    for n in range(2, 73):
        factors = {}
        m, d = n, 2
        while d * d <= m:
            while m % d == 0:
                factors[d] = factors.get(d, 0) + 1
                m //= d
            d += 1
        if m > 1:
            factors[m] = factors.get(m, 0) + 1
        per_prime = [
            [tuple(p**i for i in part) for part in partitions(e)]
            for p, e in factors.items()
        ]
        for combo in itertools.product(*per_prime):
            g = FiniteAbelianGroup(tuple(x for grp in combo for x in grp))
            assert oracle_min_faithful(g, "complex") == mdim_complex_abelian(g), g
            assert oracle_min_faithful(g, "real") == mdim_real_abelian(g), g
            count += 1
    assert count > 100


def test_subgroup_invariant_factors():
    g = FiniteAbelianGroup.of(2, 8)
    assert subgroup_invariant_factors(g, [(0, 2)]) == (4,)
    assert subgroup_invariant_factors(g, [(1, 0), (0, 4)]) == (2, 2)
    assert subgroup_invariant_factors(g, []) == ()
    assert subgroup_invariant_factors(g, [(1, 1)]) == (8,)
    g2 = FiniteAbelianGroup.of(3, 3, 9)
    assert subgroup_invariant_factors(g2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == (
        3,
        3,
        9,
    )


def test_subgroup_factor_check():
    rng = random.Random(2)
    for g in [
        FiniteAbelianGroup.of(2, 2, 8),
        FiniteAbelianGroup.of(4, 6),
        FiniteAbelianGroup.of(3, 9),
        FiniteAbelianGroup.of(2, 2, 2, 2),
    ]:
        assert subgroup_factor_check(g, 250, rng) == []
    with pytest.raises(OracleBoundExceeded):
        subgroup_factor_check(FiniteAbelianGroup.of(*[2] * 10), 1, rng)


def test_group_properties():
    g = FiniteAbelianGroup.of(6, 2, 2)
    assert g.cyclic_orders == (2, 2, 6)
    assert g.order == 24
    assert g.invariant_factors == (2, 2, 6)
    assert g.two_count == 2 and g.large_count == 1
    assert g.exponent == 6
    assert str(g) == "Z2 x Z2 x Z6"
    assert str(FiniteAbelianGroup(())) == "1"
    with pytest.raises(ValueError):
        FiniteAbelianGroup.of(1)
