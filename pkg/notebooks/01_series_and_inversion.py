# %% [markdown]
# # Truncated series, inversion and Hankel determinants
#
# Coefficients through z^4 are all the bound ever needs.

# %%
import numpy as np
from bihankel import TruncatedSeries, compose, invert_coefficients, hankel, fekete_szego
from bihankel.series import inverse_series

# %% z/(1-z) has inverse w/(1+w)
f = TruncatedSeries.from_coeffs([0, 1, 1, 1, 1])
print("inverse coefficients:", invert_coefficients(1, 1, 1))
print("f(g(w)) =", np.round(compose(f, inverse_series(f)).coeffs.real, 15))

# %% -log(1-z) = z + z^2/2 + z^3/3 + ...; inverse 1 - exp(-w)
a2, a3, a4 = 1 / 2, 1 / 3, 1 / 4
print("A2, A3, A4 =", invert_coefficients(a2, a3, a4), "expected", (-1 / 2, 1 / 6, -1 / 24))

# %% Hankel determinants of the same function
coeffs = [1, a2, a3, a4]
print("H_2(1) =", hankel(coeffs, 2, 1), "  H_2(2) =", hankel(coeffs, 2, 2), " (1/72 =", 1 / 72, ")")
print("a3 - 2 a2^2 =", fekete_szego(a2, a3, 2.0))
