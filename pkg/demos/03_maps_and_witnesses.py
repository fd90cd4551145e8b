"""From measurements to linear maps and Choi-matrix witnesses.

Each frame defines a map X -> sum O_kl P_k Tr(X P_l) through an orthogonal
rotation O fixing the all-ones vector. A weighted depolarizing term plus
added frames minus subtracted frames gives the candidate k-positive map;
its Choi matrix is the Schmidt-number witness. Two independent assembly
routes must agree: column-by-column Choi of the superoperator, and the
direct frame sum with conjugated left factors.

The closing section shows that complete positivity of the k = d map is
NOT automatic: at the qubit fixture it holds for exactly half of the
possible rotation patterns.
"""

import itertools

import numpy as np

from geamkit import (a_coefficient, build_witness, choi_matrix, choi_witness,
                     frame_witness, phi_alpha, phi_k, qubit_mub,
                     random_rotation, rotation_set)
from geamkit.linalg import min_eigenvalue, random_operator

rng = np.random.default_rng(1)
geam = qubit_mub()

# --- single-frame maps --------------------------------------------------------
swap = random_rotation(2, 1)  # for M = 2 the rotations are identity or swap
print("rotation drawn for M = 2:")
print(swap)
phi1 = phi_alpha(geam, 0, swap)
x = random_operator(2, rng)
print(f"trace rescaling: Tr(map[X]) / Tr(X) = "
      f"{np.trace(phi1.apply(x)) / np.trace(x):.6f} (a * gamma = 1/9)")
print(f"identity rotation gives a completely positive map: "
      f"Choi min eigenvalue = "
      f"{min_eigenvalue(choi_matrix(phi_alpha(geam, 0, np.eye(2)))):+.4f}")
print()

# --- the assembled map and its closed-form weight ------------------------------
k, l, kk = 2, 1, 3
a_k = a_coefficient(geam, k, l, kk)
print(f"depolarizing weight for k={k}, L={l}, K={kk}: A = {a_k:.8f} "
      f"(analytically (sqrt(5) - 1)/9 = {(np.sqrt(5) - 1) / 9:.8f})")
rots = rotation_set(geam, 0)
phi = phi_k(geam, rots, k, l, kk)
w1 = choi_witness(phi).w
w2 = frame_witness(geam, rots, k, l, kk)
print(f"dual-route agreement: max entry gap = {np.abs(w1 - w2).max():.2e}")
print()

# --- rotation parity decides complete positivity at the qubit fixture ----------
print("k = d = 2, L = 1, K = 3: Choi minimum eigenvalue per rotation pattern")
I2, SW = np.eye(2), np.array([[0.0, 1.0], [1.0, 0.0]])
for pattern in itertools.product("IS", repeat=3):
    rot = [I2 if c == "I" else SW for c in pattern]
    w = build_witness(geam, rot, 2, 1, 3)
    low = min_eigenvalue(w.w)
    print(f"  pattern {''.join(pattern)}: min eig = {low:+.6f} "
          f"{'PSD' if low >= -1e-12 else 'NOT PSD'}")
print("  -> PSD exactly when the swap count is odd; the two values are")
print(f"     (sqrt5-1)/18 = {(np.sqrt(5) - 1) / 18:+.6f} and "
      f"(sqrt5-3)/18 = {(np.sqrt(5) - 3) / 18:+.6f}")
print()
print("with a smaller common distance (b <= 5/7) the corner closes:")
from geamkit import GeamParams, build_geam, gell_mann_hermitian_basis

for b in (5 / 7, 0.73):
    params = GeamParams(d=2, m=(2, 2, 2), gamma=(1 / 3,) * 3, b=(b,) * 3,
                        tau_sign=(1, 1, 1))
    g = build_geam(gell_mann_hermitian_basis(2, params.m), params)
    low = min_eigenvalue(build_witness(g, [I2, I2, I2], 2, 1, 3).w)
    print(f"  b = {b:.4f}: identity-pattern min eig = {low:+.6f}")
