"""Certifying k-positivity numerically: see-saw, random search, purity ratios.

A map is k-positive exactly when its Choi matrix is nonnegative on all
pure states of Schmidt rank <= k. The see-saw minimizer (projected power
iteration with rank-k truncation) hunts for violations; a plain random
search serves as the independent cross-check, and at k = d the problem
reduces to an eigenvalue computation the result must match.
"""

import numpy as np

from geamkit import (brute_force_oracle, build_witness, flip_operator,
                     mehta_ratio, min_schmidt_k, phi_k, qubit_mub, qutrit_mub,
                     rotation_set)
from geamkit.linalg import min_eigenvalue

# --- the flip operator: the classic split between k = 1 and k = 2 -------------
flip = flip_operator(2)
for k in (1, 2):
    rep = min_schmidt_k(flip, k, seed=0)
    oracle = brute_force_oracle(flip, k, samples=50_000, seed=0)
    print(f"flip operator, rank {k}: see-saw min = {rep.min_value:+.6f} "
          f"({rep.verdict}), random-search min = {oracle:+.6f}")
print("  (on product states the flip evaluates to |<psi|phi>|^2 >= 0;")
print("   the antisymmetric rank-2 state reaches its -1 eigenvalue)")
print()

# --- fixture witnesses ----------------------------------------------------------
for geam, name in ((qubit_mub(), "qubit"), (qutrit_mub(), "qutrit")):
    d, n = geam.d, geam.n_groups
    rots = rotation_set(geam, 0)
    w = build_witness(geam, rots, d, 1, n)
    rep = min_schmidt_k(w, d, seed=1)
    print(f"{name} fixture, k = d = {d}: see-saw min = {rep.min_value:+.8f}, "
          f"eigensolver min = {min_eigenvalue(w.w):+.8f}")
print()

# --- a genuine violation ---------------------------------------------------------
geam = qubit_mub()
I2 = np.eye(2)
w_bad = build_witness(geam, [I2, I2, I2], 2, 1, 3)
rep = min_schmidt_k(w_bad, 2, seed=0)
print(f"identity-pattern qubit witness at k = 2: verdict = {rep.verdict}, "
      f"min = {rep.min_value:+.6f}")
print(f"  minimizer Schmidt coefficients: "
      f"{np.round(rep.argmin.schmidt_coefficients(), 4)}")
print()

# --- purity ratios ---------------------------------------------------------------
print("sampled purity ratio Tr(A^2)/(Tr A)^2 of extended-map outputs:")
print("(A = (id x map) applied to a Schmidt-rank-k entangled projector)")
for geam, name in ((qubit_mub(), "qubit"), (qutrit_mub(), "qutrit")):
    d, n = geam.d, geam.n_groups
    rots = rotation_set(geam, 0)
    for k in range(1, d + 1):
        phi = phi_k(geam, rots, k, 1, n)
        rep = mehta_ratio(phi, k, samples=300, seed=2)
        print(f"  {name}, k={k}, full range: max ratio = {rep.max_ratio:.9f}  "
              f"[1/(d-1) = {1 / (d - 1):.4f}, 1/(d^2-1) = {1 / (d * d - 1):.4f}]")
print("at full range the ratio is the same for every sampled projector and")
print("saturates the output-dimension threshold 1/(d-1) at k = 1; the")
print("extended-dimension threshold 1/(d^2-1) is exceeded throughout.")
