"""Where familiar gates live: canonical interaction vectors and spectra.

Every two-qubit unitary factors into single-qubit rotations around a core
W[d] = exp(-i (vx XX + vy YY + vz ZZ)).  The triple d = (vx, vy, vz) is the
only part that matters for distinguishability, and this script locates the
usual suspects in that coordinate system.
"""

import numpy as np

from unidisc import canonical_decompose, eigenphases_from_d, interaction_unitary, named_gate

GATES = ["identity", "cnot", "cz", "swap", "iswap", "sqrt_swap"]

print("gate        d / pi                     eigenphases / pi")
print("-" * 72)
for name in GATES:
    form = canonical_decompose(named_gate(name))
    lam = eigenphases_from_d(form.d)
    d_str = np.array2string(form.d / np.pi, precision=4, suppress_small=True)
    l_str = np.array2string(lam / np.pi, precision=4, suppress_small=True)
    print(f"{name:<10}  {d_str:<25}  {l_str}")

print()
print("CNOT and CZ share the point (pi/4, 0, 0): they differ only by local")
print("rotations, so no input, entangled or not, can tell them apart better.")
print()

# the reconstruction is exact, not approximate: rebuild CNOT from its parts
form = canonical_decompose(named_gate("cnot"))
err = np.abs(form.reconstruct() - named_gate("cnot")).max()
print(f"rebuilt CNOT from (ua x ub) W[d] (va x vb)^+ e^(i phase): error {err:.2e}")

# conjugate classes genuinely need a signed vz; the fold never hides it
d = np.array([0.7, 0.5, -0.3])
form = canonical_decompose(interaction_unitary(d))
print(f"class with vz < 0 comes back as d = {np.round(form.d, 10)} (sign kept)")
