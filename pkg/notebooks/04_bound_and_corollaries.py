# %% [markdown]
# # The bound B1 |tau|^2 (P + Q + R) and its special cases

# %%
import numpy as np
from bihankel import ClassParams, resolve_phi, theorem_bound, corollary_bound, corollary_specialization, t_terms

bd = theorem_bound(ClassParams(1, 1, 0), resolve_phi("caratheodory"))
print(f"P={bd.p:.6f} Q={bd.q:.6f} R={bd.r:.6f} bound={bd.bound:.12f} (107/18 = {107 / 18:.12f})")
print("Corollary 4 at alpha=1:", corollary_bound(4, alpha=1.0))
print("Corollary 7 at alpha=0:", corollary_bound(7, alpha=0.0))

# %% T-terms across c
for t in bd.profile:
    print(f"c={t.c:.1f}  T1={t.t1:.4f} T2={t.t2:.4f} T3={t.t3:+.4f} T4={t.t4:.4f}  F(1,1)={t.corner:.4f}")

# %% corollaries 3 and 6 as typeset versus the general bound
for cid, kw in [(3, dict(alpha=0.5, beta=0.5)), (6, dict(alpha=0.25, delta=0.5))]:
    thm = theorem_bound(*corollary_specialization(cid, **kw), c_steps=0).bound
    print(f"Corollary {cid}: general {thm:.6f}, corrected {corollary_bound(cid, **kw):.6f}, "
          f"typeset {corollary_bound(cid, printed=True, **kw):.6f}")
