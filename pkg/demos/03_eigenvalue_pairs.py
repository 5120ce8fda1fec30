#!/usr/bin/env python3
"""Which eigenvalue PAIRS (lambda2, lambda3) can a 3x3 monotone matrix have?

Knowing each eigenvalue lies in [-1/2, 1] is not the whole story: the pair
(1, -1/2) has both coordinates in range yet is impossible, because the
product lambda2*lambda3 = det D(M) >= -1/4.  The attainable pair region is
star-convex and bounded by five curves (C1..C5); each boundary curve has an
explicit one-parameter realising family, and interior pairs follow by
scaling a boundary realiser toward an equal-rows matrix.
"""

import numpy as np

from monospec import (
    FamilyId,
    dominance_of,
    eigenpair_3x3,
    equal_rows_matrix,
    family_matrix,
    family_parameter_inverse,
    realise_pair,
    spectrum_of_stochastic,
    xi3_boundary,
    xi3_pair_member,
)

np.set_printoptions(precision=6, suppress=True)

print("pair verdicts:")
for pair in ((0.5, 0.25), (0.5, -0.5), (1.0, -0.5), (0.9, -0.25), (0.2, 0.6)):
    print(f"  {pair}: {xi3_pair_member(pair)}")

# the boundary, ray by ray: the exit curve depends on the ray slope
print("\nboundary points on rays (lambda3 = k * lambda2):")
for k in (1.0, 0.5, 0.0, -0.2, -0.5, -1.0):
    point, curve = xi3_boundary(k)
    print(f"  k={k:+.2f}: exits through {curve} at "
          f"({point.lambda2:.6f}, {point.lambda3:.6f})")

# each boundary family traces its curve equation exactly
print("\nC4 family: lambda2 * lambda3 pinned to -1/4 across the range")
for alpha in (0.0, 0.2, 0.4, 0.5):
    p = eigenpair_3x3(dominance_of(family_matrix(FamilyId("c4", alpha))))
    print(f"  alpha={alpha:.1f}: pair ({p.lambda2:+.6f}, {p.lambda3:+.6f}), "
          f"product {p.lambda2 * p.lambda3:+.6f}")

# parameter recovery: a pair on a curve maps back to its family parameter
p = eigenpair_3x3(dominance_of(family_matrix(FamilyId("c5", 0.3))))
print(f"\nC5 at alpha=0.3 gives {p}; inverse recovers "
      f"alpha={family_parameter_inverse('c5', p):.12f}")

# interior realisation by star-convex scaling: combining a realiser with an
# equal-rows matrix scales the dominance matrix (hence the pair) linearly
target = (0.3, -0.22)
M = realise_pair(target)
print(f"\nrealiser for interior pair {target}:")
print(M.entries)
print("spectrum:", np.round(np.real(spectrum_of_stochastic(M).values), 9))

E = equal_rows_matrix([0.0, 1.0, 0.0])
print("\nscaling check: D(0.5*M + 0.5*E) = 0.5 * D(M):",
      np.allclose(dominance_of(realise_pair((0.15, -0.11))).entries,
                  0.5 * dominance_of(M).entries, atol=1e-9))
