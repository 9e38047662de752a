"""
Axes, minimal laws and Miyamoto maps in 2B(alpha)
=================================================

The two-dimensional algebra 2B(alpha) has axes ``a0`` and ``a1`` with
``a0 a1 = alpha (a0 + a1)``.  We check both axes symbolically, look at the
law each axis really obeys, and see for which ``alpha`` that law is graded.
"""

# %%
# Symbolic axis check
# -------------------
# Everything is exact over Q(a).  The certificate lists the polynomials that
# must stay nonzero for the symbolic answer to hold at a specialization.
from axial import catalog as cat
from axial.algebra import check_axis

entry = cat.alg_2B()
print(entry.algebra.format_products())
for i, ax in enumerate(entry.axes):
    rep = check_axis(entry.algebra, ax, entry.law)
    print(f"a{i}: passed={rep.passed}, certificate={sorted(map(str, rep.certificate))}")

# %%
# When is the minimal law graded?
# -------------------------------
# Square the alpha-eigenvector ``v`` of ``a0`` (scaled to ``a1``-coordinate 1).
# Its alpha-part is a rational function of ``a``; where it vanishes the product
# ``alpha * alpha`` loses ``alpha`` and a grading can appear.
coeffs = cat.square_coefficients_2B()
print("1-part:", coeffs["one"])
print("alpha-part:", coeffs["alpha"])

from axial.algebra import minimal_fusion_law
from axial.fusion import grading_group

for al in ("-1", "1/2", "1/3", "2"):
    e = cat.alg_2B(al)
    law = minimal_fusion_law(e.algebra, e.axes[0], e.law.labels)
    print(f"alpha={al:>4}: {grading_group(law).describe()}")

# %%
# At ``alpha = 1/2`` both parts vanish, so ``alpha * alpha`` is empty and the
# universal grading group is Z rather than C2.  C2 is still a quotient, so the
# algebra admits a C2-grading.
#
# Plotting the alpha-part shows the two zeros.
import matplotlib.pyplot as plt
import numpy as np

ts = np.linspace(-2.5, 0.9, 400)
vals = [float(coeffs["alpha"].evaluate({"a": t})) for t in map(lambda v: round(v, 6), ts)]
fig, ax = plt.subplots(figsize=(5, 3))
ax.plot(ts, vals)
ax.axhline(0, color="grey", lw=0.5)
ax.scatter([-1, 0.5], [0, 0], color="C3", zorder=3)
ax.set_xlabel("alpha")
ax.set_ylabel("alpha-part of v v")
fig.tight_layout()

# %%
# Miyamoto maps at alpha = -1
# ---------------------------
# The sign character of C2 gives an involutive automorphism per axis; the two
# of them generate a group of order 6.
from axial.algebra import check_map, eigendecompose, miyamoto, miyamoto_group_order
from axial.fusion import characters

e = cat.alg_2B(-1)
taus = []
for ax in e.axes:
    law = minimal_fusion_law(e.algebra, ax, e.law.labels)
    g = grading_group(law)
    dec = eigendecompose(e.algebra, ax, law.labels)
    chi = next(c for c in characters(g) if not c.is_trivial())
    tau = miyamoto(e.algebra, ax, dec, g, chi)
    print(tau.matrix, "automorphism:", check_map(e.algebra, tau)[0])
    taus.append(tau)
print("group order:", miyamoto_group_order(taus))

if __name__ == "__main__":
    plt.show()
