"""A pair with no interaction at all, where entanglement wins outright.

U1 = identity and U2 = diag(1, i) x diag(1, i) differ only by single-qubit
phases.  Each qubit alone sees eigenvalues {1, i}, whose chord misses the
origin by 1/sqrt(2); two independent qubits multiply those misses to 1/2.
But the joint spectrum {1, i, i, -1} straddles the origin, so one entangled
input separates the two perfectly.  Input entanglement is a genuine resource
here even though neither unitary can create any.
"""

import numpy as np

from unidisc import (
    BELL_BASIS,
    IDENTITY,
    OracleConfig,
    brute_fidelity_global,
    brute_fidelity_product,
    local_phase,
    local_unitary_fidelity,
)

u2 = local_phase(np.pi / 2, np.pi / 2)
half = np.diag([1.0, 1j]).astype(complex)

# exact route: per-qubit eigenvalue chords
f_chord, wit = local_unitary_fidelity(half, half)
print(f"product inputs, exact chord formula:  F_L = {f_chord:.12f}")
joint = wit.joint()
print(f"   achieved by {np.round(wit.alice, 4)} x {np.round(wit.bob, 4)}:"
      f"  |overlap| = {abs(np.vdot(joint, u2 @ joint)):.12f}")

# brute force agrees on both scenarios
cfg = OracleConfig(seed=2, coarse_samples=8000)
res_l = brute_fidelity_product(u2, cfg)
res_g = brute_fidelity_global(u2, cfg)
print(f"product inputs, brute force:          F_L = {res_l.value:.12f}")
print(f"all inputs, brute force:              F   = {res_g.value:.2e}")
print()

# the perfect entangled witness, analytically: the first Bell state
phi1 = BELL_BASIS[:, 0]
print("witness Phi1 = (|00> + |11>)/sqrt(2):")
print(f"   <Phi1| U1' U2 |Phi1> = {np.vdot(phi1, u2 @ phi1):.2e}")
print()
print("product inputs top out at success probability"
      f" {(1 + np.sqrt(1 - f_chord**2)) / 2:.6f};")
print("the Bell-state input reaches 1 in a single shot.")
