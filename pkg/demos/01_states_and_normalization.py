"""Build a displaced squeezed excitation and look at its Fock content.

The states are kept unnormalized by convention (that is what makes the
family biorthogonal); the closed-form constant N_n(|zeta|) turns any of
them into a unit vector. Below, the same inverse-square norm is computed
three independent ways.
"""

from sqstates import StateLabel, fock_coefficients, normalization, oracle
from sqstates.states import norm_inverse_square_series

state = StateLabel(beta=1.0 + 0.5j, n=2, zeta=0.3j)
print(f"state: beta={state.beta}, n={state.n}, zeta={state.zeta}\n")

fc = fock_coefficients(state, cutoff=14, normalize=True)
print("first Fock probabilities |<m|state>|^2 (normalized):")
for m, c in enumerate(fc.coeffs):
    bar = "#" * int(60 * abs(c) ** 2)
    print(f"  m={m:2d}  {abs(c)**2:9.6f}  {bar}")
print(f"tail beyond cutoff: {fc.tail_mass:.2e}\n")

nn = normalization(state.n, abs(state.zeta))
closed = nn**-2
series = norm_inverse_square_series(state.n, abs(state.zeta))
dense = oracle.build_state(state, 256).norm_squared()
print("inverse squared norm <state|state>:")
print(f"  closed Legendre form : {closed:.15f}")
print(f"  excitation series    : {series:.15f}")
print(f"  dense Fock oracle    : {dense:.15f}")
