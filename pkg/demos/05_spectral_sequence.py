#!/usr/bin/env python3
"""The spectral sequence of the filtered total complex, and its collapse.

Filtering the total complex of the cylinder by the vertical degree gives a
spectral sequence converging to the cyclic homology of the crossed product.
When the Hopf algebra is semisimple (a normalized right integral exists),
the first page is concentrated in the coinvariant row and the sequence
collapses; over F2 the same group algebra is NOT semisimple and higher rows
survive.  Everything below is an exact rank computation.
"""

from hopfcyclic import (
    AlgebraCylinder, Field, coinvariant_cyclic_module, crossed_product_algebra,
    cyclic_dims, cyclic_group_table, cyclic_module_of_algebra,
    ez_compare_hochschild, find_right_integral, group_algebra, mixed_complex,
    regular_comodule_algebra, semisimple_homotopy_check, spectral_pages,
    total_complex_algebra, total_homology_dims, trivial_comodule_algebra,
    trivial_module_action,
)
from hopfcyclic.errors import NotSemisimple

QQ = Field.rationals()
F2 = Field.prime(2)

h = group_algebra(cyclic_group_table(2), QQ, ["e", "g"])
print("== semisimplicity via the right integral ==")
t = find_right_integral(h)
print("right integral of k[C2] over Q:",
      " + ".join("%s %s" % (QQ.to_str(v), h.basis_names[k])
                 for k, v in sorted(t.items())))
print("homotopy contracts positive degrees:",
      all(ok for _, ok in semisimple_homotopy_check(
          h, t, trivial_module_action(h), 3)))

print()
print("== pages of the filtered total complex (A = k[C2], self-coaction) ==")
a = regular_comodule_algebra(h)
fc = total_complex_algebra(AlgebraCylinder(a), N=3)
pages = spectral_pages(fc, 2, (2, 2))
for pg in pages:
    rows = {}
    for (i, j), v in sorted(pg.table.items()):
        rows.setdefault(j, []).append(v)
    print("page %d (rows = bar degree, columns = filtration):" % pg.r)
    for j in sorted(rows, reverse=True):
        print("   row %d: %s" % (j, rows[j]))

print()
print("== collapse: cyclic homology agrees with the coinvariant model ==")
r = crossed_product_algebra(a)
lhs = cyclic_dims(mixed_complex(cyclic_module_of_algebra(r, N=3)), 2)
ops, _ = coinvariant_cyclic_module(a, N=3)
rhs = cyclic_dims(mixed_complex(ops), 2)
print("HC(crossed product) =", lhs)
print("HC(coinvariants)    =", rhs)

print()
print("== the F2 negative control ==")
h2 = group_algebra(cyclic_group_table(2), F2)
try:
    find_right_integral(h2)
except NotSemisimple as e:
    print("k[C2] over F2:", e)
a2 = trivial_comodule_algebra(h2)
pages2 = spectral_pages(total_complex_algebra(AlgebraCylinder(a2), N=3),
                        1, (2, 2))
surviving = {k: v for k, v in sorted(pages2[1].table.items()) if v and k[1] > 0}
print("first-page entries above the coinvariant row:", surviving)

print()
print("== Eilenberg-Zilber at the Hochschild level ==")
for n, tot, diag, eq in ez_compare_hochschild(AlgebraCylinder(a), 2):
    print("degree %d: total %d vs diagonal %d -> %s"
          % (n, tot, diag, "equal" if eq else "DIFFER"))
