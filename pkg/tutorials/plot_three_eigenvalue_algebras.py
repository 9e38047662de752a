"""
The three-dimensional algebras and their ideals
===============================================

For law (a) the 2-generated algebras are quotients of a 3-dimensional algebra
on ``a0, a1, a0a1`` with parameters ``alpha, beta`` and ``x``.  Either
``beta = 1/2`` and ``x`` is free, or ``x = (alpha+beta)/(2(1-alpha))``.
"""

# %%
# Both branches pass the axis test symbolically
# ---------------------------------------------
from axial import catalog as cat
from axial.algebra import check_axis

for entry in (cat.alg_3dim_A("a", "1/2", "x"), cat.alg_3dim_A("a", "b")):
    ok = all(check_axis(entry.algebra, ax, entry.law).passed for ax in entry.axes)
    print(entry.name, "passes:", ok)

# %%
# Identity suite
# --------------
# The listed product formulas are checked as exact equalities.  Four of them
# only hold in corrected form; the ``-corrected`` checks hold exactly.
for entry in (cat.alg_3dim_A("a", "1/2", "x"), cat.alg_3dim_A("a", "b"), cat.alg_3dim_D()):
    for r in cat.identity_suite(entry):
        if r.status != "skipped":
            print(f"{entry.name:<32} {r.name:<14} {r.status}")

# %%
# Ideals and quotients
# --------------------
# At ``beta = -1, x = -1/2`` the alpha-eigenvector spans an ideal and the
# quotient is 2B(-1) with the axes marked.
from axial.algebra import ideal_closure, marked_iso, quotient

e = cat.alg_3dim_A("a", -1, "-1/2")
va, vb = cat.eigvecs(e)
ideal = ideal_closure(e.algebra, [va])
q, proj = quotient(e.algebra, ideal)
print(q.format_products())
target = cat.alg_2B(-1)
print("marked isomorphism:",
      marked_iso(q, [proj(a) for a in e.axes], target.algebra, list(target.axes)) is not None)

# %%
# The whole table, with readings that fix the rows failing as printed:
table = cat.verify_ideal_table("3A")
for r in table["rows"] + table["adjudications"]:
    tag = "" if r["as_printed"] else "  (alternative reading)"
    print(f"{r['status']:<4} {r['row']}{tag}")
