#!/usr/bin/env python3
"""Eigenvalue regions of monotone matrices, order by order.

For n = 1, 2, 3 the attainable eigenvalues form {1}, [0, 1] and [-1/2, 1].
Each region is strictly smaller than the corresponding region for plain
stochastic matrices (Theta_2 = [-1, 1]; Theta_3 additionally has complex
points).  Every value in the monotone region is realised by an explicit
matrix from one of two families.
"""

import numpy as np

from monospec import (
    realise_eigenvalue,
    spectrum_of_stochastic,
    theta_member,
    xi_n_member,
)

np.set_printoptions(precision=6, suppress=True)

print("membership of a few values, order by order:")
for lam in (1.0, 0.5, 0.0, -0.3, -0.5, -0.6):
    row = [f"lambda={lam:+.2f}"]
    for n in (1, 2, 3):
        row.append(f"Xi_{n}: {'yes' if xi_n_member(lam, n).member else 'no '}")
    print("  " + "   ".join(row))

# -0.5 is attainable for monotone 3x3 matrices but nothing below it.
print("\nXi_3 lower endpoint:", xi_n_member(-0.5, 3))
print("just below:          ", xi_n_member(-0.5000001, 3))

# realising matrices: type 1 covers [0, 1], type 2 covers [-1/2, 0]
print("\nrealising a sweep of eigenvalues:")
for lam in (-0.5, -0.25, 0.0, 0.4, 1.0):
    M = realise_eigenvalue(lam)
    spectrum = np.round(np.real(spectrum_of_stochastic(M).values), 6)
    print(f"  lambda={lam:+.2f} -> spectrum {spectrum}")

print("\nexample realiser for lambda = -0.5 (type 2 at its extreme):")
print(realise_eigenvalue(-0.5).entries)

# Contrast with stochastic matrices: Theta_3 reaches -1 on the real axis
# and contains complex points; the monotone region does neither.
print("\ncomparison with Theta_3:")
for z in (-1.0, -0.75, complex(0.2, 0.4), complex(-0.8, 0.3)):
    t = theta_member(z, 3)
    x = xi_n_member(z.real, 3) if abs(complex(z).imag) < 1e-12 else None
    xi_text = "yes" if (x and x.member) else "no"
    print(f"  z={z}: Theta_3 {'yes' if t.member else 'no'}, Xi_3 {xi_text}")
