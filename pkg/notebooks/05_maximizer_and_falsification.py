# %% [markdown]
# # Does the bound hold, and how tight is it?
#
# The maximizer checks that the majorant F peaks at (1, 1) for every c; the
# sampler looks for tuples that beat the bound.

# %%
from bihankel import ClassParams, parse_phi, verify_max_structure, FalsifyConfig, falsify

params, phi = ClassParams(0.5 + 0.5j, 2, 0.5), parse_phi("janowski:0.5,-0.5")
rep = verify_max_structure(params, phi, c_steps=11)
for r in rep.records:
    print(f"c={r.c:.1f} argmax={r.argmax} max={r.max:.5f} corner={r.corner:.5f} "
          f"T3+T4={r.t3_plus_t4:+.4f} flagged={r.flagged}")

# %%
for mode in ("relaxed", "constrained"):
    out = falsify(FalsifyConfig(params, phi, samples=100_000, seed=42, mode=mode))
    print(f"{mode:<11} max |H2(2)| = {out.max_observed:.5f}  bound = {out.bound:.5f}  "
          f"ratio = {out.ratio:.4f}  rejected = {out.samples_rejected}  violations = {out.n_violations}")

# %% boundary-biased sampling pushes |x| = |y| = 1 half of the time
out = falsify(FalsifyConfig(params, phi, samples=100_000, seed=42, boundary_bias=True, complex_c1=True))
print(f"boundary-biased ratio = {out.ratio:.4f}")
