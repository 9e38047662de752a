"""
Which square of a0a1 obeys law (d)?
===================================

Two formulas circulate for ``(a0a1)^2`` in the law-(d) algebra with one
eigenvalue equal to 1/2.  Running the axis test on both settles it.
"""

# %%
from axial import catalog as cat

verdict = cat.adjudicate_square(points=("1/4", "3", "-2"))
for form in ("graded", "tabulated"):
    print(form, verdict[form])
print("survivor:", verdict["survivor"])

# %%
# The losing formula fails through concrete fusion violations:
from axial.algebra import check_axis

bad = cat.alg_3dim_D("beta-half", "a", "tabulated")
rep = check_axis(bad.algebra, bad.axes[0], bad.law)
for lam, mu, nu, vec in rep.violations[:3]:
    print(f"{lam} * {mu} has a {nu}-part {bad.algebra.format_vector(vec)}")

# %%
# C3 and the omega-character
# --------------------------
# Law (d) is C3-graded, so over Q(omega) each axis gives an automorphism of
# order 3.
from axial.algebra import check_map, eigendecompose, map_order, miyamoto
from axial.fusion import characters, grading_group

good = cat.alg_3dim_D("beta-half")
alg = good.algebra.to_extended()
g = grading_group(good.law)
print(g.describe())
dec = eigendecompose(alg, alg.e(0), [l.to_extended() for l in good.law.labels])
for chi in characters(g, extended=True):
    tau = miyamoto(alg, alg.e(0), dec, g, chi)
    print(chi, "automorphism:", check_map(alg, tau)[0], "order:", map_order(tau))
