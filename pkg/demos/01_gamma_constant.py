#!/usr/bin/env python3
"""The density constant.

For a graph with no independent triple, the constructed half-order minor
keeps at least a gamma fraction of all possible edges (asymptotically).
gamma comes from a one-dimensional optimisation: the worst-case missing
fraction f(z) over the scaled clique density z in [0, 1/4].

This script traces f on a grid, locates its interior maximum, and prints
the resulting constant.
"""

import numpy as np

from minorforge.bounds import (
    gamma_optimize,
    missing_fraction,
    missing_fraction_extremal,
    zeta_monotonicity_check,
)

print("=== worst-case missing fraction on [0, 1/4] ===")
for z in np.linspace(0.0, 0.25, 11):
    bar = "#" * int(missing_fraction_extremal(z) * 4000)
    print(f"  f({z:5.3f}) = {missing_fraction_extremal(z):.6f} {bar}")

z_star, gamma = gamma_optimize(1e-7)
print(f"\nmaximum at z* = {z_star:.6f}, value {1 - gamma:.6f}")
print(f"gamma = 1 - max f = {gamma:.6f}")
assert abs(gamma - 0.986882) < 1e-5

print("\n=== the two-variable fraction is monotone in zeta ===")
print("nondecreasing on the grid:", zeta_monotonicity_check(300))
print("so the extremal zeta is z^2, and f(z) = g(z, z^2):")
for z in (0.1, 0.19, 0.24):
    print(
        f"  z={z}: g(z, z^2) = {missing_fraction(z, z * z):.9f}"
        f"  vs f(z) = {missing_fraction_extremal(z):.9f}"
    )

print("\nevery half-order minor built here misses at most ~1.31% of its edges")
print("(in expectation, asymptotically); the pipeline demos make that concrete.")
