#!/usr/bin/env python3
"""The dominance matrix of a monotone stochastic matrix, and its inverse problem.

A monotone matrix has each row stochastically dominated by the next.  Its
dominance matrix D(M) (consecutive prefix-sum differences) is one order
lower, non-negative, and carries exactly the nontrivial eigenvalues.  This
walk-through shows the transform, the structural constraints a 2x2
dominance matrix must satisfy, and the explicit lift back to a 3x3
monotone matrix.
"""

import numpy as np

from monospec import (
    LiftWitness,
    check_lemma1,
    check_liftable,
    dominance_of,
    eigenpair_3x3,
    lift,
    spectrum_of_stochastic,
    validate_monotone,
)

np.set_printoptions(precision=6, suppress=True)

# Two different monotone matrices...
M1 = validate_monotone([[0.3, 0.7, 0.0], [0.2, 0.7, 0.1], [0.1, 0.7, 0.2]])
M2 = validate_monotone([[0.4, 0.6, 0.0], [0.3, 0.6, 0.1], [0.2, 0.6, 0.2]])

print("M1 =\n", M1.entries)
print("M2 =\n", M2.entries)

# ... with the same dominance matrix: the transform is many-to-one.
D1, D2 = dominance_of(M1), dominance_of(M2)
print("\nD(M1) =\n", D1.entries)
print("D(M2) =\n", D2.entries)
print("identical:", np.allclose(D1.entries, D2.entries, atol=1e-15))

# The nontrivial eigenvalues live in D(M); the trivial eigenvalue 1 does not.
print("\nspectrum of M1:   ", np.round(spectrum_of_stochastic(M1).values, 9))
print("eigenpair of D(M1):", eigenpair_3x3(D1))

# Not every non-negative 2x2 matrix arises as a dominance matrix.  Eight
# inequalities are necessary; here they all hold with room to spare.
print("\nstructural constraints for D(M1):")
for c in check_lemma1(D1):
    print(f"  {c.name:<11} satisfied={c.satisfied}  slack={c.slack:+.3f}")

# An antidiagonal permutation-like candidate fails them badly.
bad = [[0.0, 1.0], [1.0, 0.0]]
print("\nviolations for [[0,1],[1,0]]:",
      [c.name for c in check_lemma1(bad) if not c.satisfied])

# Feasibility is decided by a closed-form minimal witness (m11, m33).
print("\nliftability of D(M1):", check_liftable(D1))
print("liftability of [[0,1],[1,0]]:", check_liftable(bad))

# The lift is explicit.  The minimal witness gives one monotone matrix;
# the witness (0.3, 0.2) reproduces M1 itself.
L_min = lift(D1, check_liftable(D1))
L_m1 = lift(D1, LiftWitness(0.3, 0.2))
print("\nlift with minimal witness:\n", L_min.entries)
print("lift with witness (0.3, 0.2):\n", L_m1.entries)
print("reproduces M1:", np.allclose(L_m1.entries, M1.entries, atol=1e-12))
print("both have dominance D(M1):",
      np.allclose(dominance_of(L_min).entries, D1.entries, atol=1e-12))
