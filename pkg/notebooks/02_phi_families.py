# %% [markdown]
# # Ma-Minda functions and the class operator

# %%
from bihankel import resolve_phi, parse_phi, ClassParams, operator_weight, apply_operator, TruncatedSeries

# %%
for text in ["caratheodory", "order_beta:0.25", "janowski:0.5,-0.5", "power:0.5", "custom:2.0,1.0,0.5"]:
    phi = parse_phi(text)
    print(f"{text:<22} B1={phi.B1:.6g}  B2={phi.B2:.6g}  B3={phi.B3:.6g}")

# %% order beta is the Janowski function with A = 1 - 2 beta, B = -1
print(resolve_phi("order_beta", 0.3).coefficients, resolve_phi("janowski", 0.4, -1).coefficients)

# %% operator weights (1 + (n-1)(lambda + n delta)) / tau
p = ClassParams(tau=2, lam=1, delta=1)
print([operator_weight(p, n) for n in (2, 3, 4)])
f = TruncatedSeries.from_coeffs([0, 1, 0.1, 0.2, 0.3])
print(apply_operator(ClassParams(), f).coeffs.real)
