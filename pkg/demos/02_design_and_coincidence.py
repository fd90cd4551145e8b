"""Equidistance, the conical 2-design identity, and the index of coincidence.

Within each frame the operators are pairwise equidistant in the Frobenius
norm; when the squared distance S is the same number for every frame the
whole measurement satisfies two strong identities:

  sum P (x) P        = kappa_+ I (x) I + kappa_- FLIP     (a conical 2-design)
  sum |Tr(P rho)|^2  = S (Tr rho^2 - 1/d) + mu_N          (purity line)

and the partial sums over the first L frames obey an exact upper bound
that closes at L = N.
"""

import numpy as np

from geamkit import (coincidence_bound, coincidence_index, conical_design_check,
                     equidistance, qubit_mub, qubit_two_group,
                     random_density_matrix, random_trace_one_operator)

rng = np.random.default_rng(0)

geam = qubit_mub()
eq = equidistance(geam)
print(f"qubit fixture: equidistant = {eq.equidistant}, S = {eq.s:.6f}")
print(f"  (distances across frames are smaller: {eq.cross_group_range})")

bad_eq = equidistance(qubit_two_group(b1=0.8, b2=0.7))
print(f"two-group layout with mismatched b: S per group = "
      f"{np.round(bad_eq.s_per_group, 4)} -> equidistant = {bad_eq.equidistant}")
print()

design = conical_design_check(geam)
print(f"conical 2-design: kappa_+ = {design.kappa_plus:.6f}, "
      f"kappa_- = {design.kappa_minus:.6f}, residual = {design.residual:.2e}")
print("  (for this fixture both kappas are exactly 1/9)")
print()

# purity line: the full index of coincidence is affine in Tr rho^2
print("index of coincidence vs purity for random states:")
s, mu_n = eq.s, geam.derived.mu(3)
for _ in range(4):
    rho = random_density_matrix(2, rng, rank=rng.integers(1, 3))
    c = coincidence_index(geam, rho, 3)
    purity = np.trace(rho @ rho).real
    print(f"  purity {purity:.4f}: C = {c:.6f}, "
          f"S(purity - 1/d) + mu_N = {s * (purity - 0.5) + mu_n:.6f}")
print()

# partial sums: bounded for L < N, exact at L = N
x = random_trace_one_operator(2, rng)
print("partial coincidence sums for one random unit-trace operator:")
for l in (1, 2, 3):
    got = coincidence_index(geam, x, l)
    bound = coincidence_bound(geam, x, l)
    tag = "equality" if abs(bound - got) < 1e-12 else f"slack {bound - got:.4f}"
    print(f"  L = {l}: sum = {got:.6f}, bound = {bound:.6f}  ({tag})")
