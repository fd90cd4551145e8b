"""Build generalized equiangular measurements and check their defining
symmetries.

A GEAM is a union of N equiangular tight frames on C^d with d^2 + N - 1
elements in total. Group alpha holds M_alpha PSD operators summing to
gamma_alpha * I, with every Hilbert-Schmidt overlap pinned by four
parameters (a, b, c, f). This script builds the bundled fixtures, runs
the full validation report, and probes where positivity caps the purity
parameter b for the generic Gell-Mann realization.
"""

import numpy as np

from geamkit import (GeamParams, PositivityError, build_geam,
                     gell_mann_hermitian_basis, qubit_mub, qutrit_mub,
                     qutrit_single_frame, save_geam, validate_geam)

np.set_printoptions(precision=5, suppress=True, linewidth=120)

# --- the qubit fixture: three frames of two elements, b = 1 -----------------
geam = qubit_mub()
print("qubit MUB-type GEAM, d=2, M=(2,2,2), b=1")
print(validate_geam(geam).summary())
print("first operator of the third frame (a rescaled projector):")
print(geam.ops[2][0].real)
print()

# --- the qutrit fixtures -----------------------------------------------------
for name, make in [("qutrit MUB-type, M=(3,3,3,3), b=0.5", qutrit_mub),
                   ("qutrit single frame, M=(9,), b=0.4", qutrit_single_frame)]:
    geam = make()
    report = validate_geam(geam)
    print(f"{name}: all checks pass = {report.passed}, "
          f"max deviation = {report.max_deviation:.2e}")
print()

# --- positivity caps b below the algebraic bound ----------------------------
# the trace conditions allow b up to min(d, M)/d, but whether the concrete
# operators stay PSD depends on the basis realization
print("scanning admissible b for the qutrit MUB layout (tau = +1):")
basis = gell_mann_hermitian_basis(3, (3, 3, 3, 3))
for b in (0.40, 0.50, 0.55, 0.56, 0.60):
    params = GeamParams(d=3, m=(3, 3, 3, 3), gamma=(0.25,) * 4, b=(b,) * 4,
                        tau_sign=(1,) * 4)
    try:
        build_geam(basis, params)
        print(f"  b = {b:.2f}: ok")
    except PositivityError as exc:
        print(f"  b = {b:.2f}: fails, operator ({exc.group},{exc.element}) "
              f"has min eigenvalue {exc.min_eigenvalue:.4f}")
print()

# --- serialization round trip ------------------------------------------------
fp = save_geam(qubit_mub(), "/tmp/qubit_geam.json", timestamp=False)
print(f"saved the qubit fixture to /tmp/qubit_geam.json (fingerprint {fp})")
