"""How well can one use of a CNOT-class gate be told from doing nothing?

The pair to study is U1 = identity, U2 = W[(pi/4, 0, 0)], the interaction
core shared by CNOT and CZ.  Apply the unknown gate once to an input of our
choosing, measure anything we like: the best error probability is set by
F = min |<psi|U2|psi>|, and the geometry below computes it exactly.
"""

import numpy as np

from unidisc import (
    IDENTITY,
    Priors,
    bell_diagonal_phases,
    full_report,
    interaction_unitary,
    spectrum_points,
)

u2 = interaction_unitary(np.array([np.pi / 4, 0.0, 0.0]))
rep = full_report(IDENTITY, u2, priors=Priors())

phase, lam = bell_diagonal_phases(u2)
print("eigenphases / pi:        ", np.round(lam / np.pi, 6))
print("spectrum on unit circle: ", np.round(spectrum_points(lam), 6))
print()
print(f"F  (any input):          {rep.fidelity_global:.12f}   (= cos(pi/4))")
print(f"F_L (product inputs):    {rep.fidelity_local:.12f}")
print(f"success probability:     {rep.success_global:.12f}")
print()

# the optimizing inputs themselves
print("best entangled-scenario input:", np.round(rep.input_global, 6))
print("best product input:            ",
      np.round(rep.input_local.alice, 6), "x", np.round(rep.input_local.bob, 6))
ov = abs(np.vdot(rep.input_global, u2 @ rep.input_global))
print(f"that input really achieves    |<psi|U2|psi>| = {ov:.12f}")
print()

# one use cannot reach zero, two parallel uses can: the doubled eigenphases
# put e^(-i pi/2) and e^(+i pi/2) on opposite sides of the origin
print(f"perfect in one shot?   {rep.perfect_global}")
print(f"uses needed for perfect discrimination: {rep.min_repetitions}")
