"""Finite abelian groups: invariant factors and minimal faithful dimensions.

The minimal dimension of a faithful complex representation of a finite
abelian group is its number of invariant factors; over the reals, factors
of order two contribute one dimension and larger factors two.  A brute
force search over character kernels confirms the formulas.

Run:  python demos/03_invariant_factors.py
"""

from cubereps import (
    FiniteAbelianGroup,
    invariant_factors,
    mdim_complex_abelian,
    mdim_real_abelian,
    oracle_min_faithful,
    zk0m,
)

print("Invariant factor chains (d_1 | d_2 | ... | d_s):")
for orders in [(2, 3), (2, 2, 3, 3), (4, 6), (2, 8, 3)]:
    print(f"  {orders} -> {invariant_factors(orders)}")

print("\nThe twist group of the 2x2 cube: sum-zero vectors in Z_3^8.")
corner_group, basis = zk0m(3, 8)
print("  isomorphic to", corner_group, "with basis", basis[:2], "...")
print("  mdim over C:", mdim_complex_abelian(corner_group))
print("  mdim over R:", mdim_real_abelian(corner_group))

print("\nThe full rotation group of the 3x3 (flips and twists):")
both = FiniteAbelianGroup(tuple([2] * 11 + [3] * 7))
print("  invariant factors:", both.invariant_factors)
print("  mdim over C:", mdim_complex_abelian(both), " over R:", mdim_real_abelian(both))

print("\nBrute force agrees with the formulas on small groups:")
for orders in [(2, 2), (4,), (3, 3), (2, 4, 3), (2, 2, 2, 2)]:
    g = FiniteAbelianGroup(orders)
    oc = oracle_min_faithful(g, "complex")
    orr = oracle_min_faithful(g, "real")
    print(
        f"  {str(g):<18} oracle ({oc}, {orr})  formula"
        f" ({mdim_complex_abelian(g)}, {mdim_real_abelian(g)})"
    )
