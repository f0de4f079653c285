# %% [markdown]
# # Schwarz parameters to coefficients, and the residual check
#
# The closed forms for a2, a3, a4 satisfy four combinations of the six
# coefficient equations for any admissible tuple.  The other two hold only on
# the constrained set produced by `constrained_completion`.

# %%
import numpy as np
from bihankel import ClassParams, resolve_phi, SchwarzTuple, coefficients_from_schwarz, second_hankel
from bihankel.coeffs import pipeline_residuals, solvable_residuals, constrained_completion

params, phi = ClassParams(1, 1, 0), resolve_phi("caratheodory")
s = SchwarzTuple(c1=0.5, x=0.5, xi=1, y=0, eta=0)
t = coefficients_from_schwarz(params, phi, s)
print("a2, a3, a4 =", t.a2.real, t.a3.real, t.a4.real, " (55/128 =", 55 / 128, ")")
print("|H2(2)| =", second_hankel(t), " (19/256 =", 19 / 256, ")")

# %%
res = pipeline_residuals(params, phi, s, t)
print("all six residuals:", np.round(np.abs(res), 6))
print("solvable combinations:", np.abs(solvable_residuals(res)))

# %% genuine solutions of the full system
rng = np.random.default_rng(0)
n = 10000
c1 = rng.random(n)
x = np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
xi = np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
y, eta, ok = constrained_completion(params, phi, c1, x, xi)
sc = SchwarzTuple(c1[ok], x[ok], xi[ok], y[ok], eta[ok])
tc = coefficients_from_schwarz(params, phi, sc)
print(f"accepted {ok.sum()} of {n}; max residual {np.abs(pipeline_residuals(params, phi, sc, tc)).max():.2e}")
