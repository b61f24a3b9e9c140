#!/usr/bin/env python3
"""Crossed products and their cyclic/cocyclic modules.

The crossed product algebra twists the tensor product by the coaction; with
the trivial coaction it degenerates to the plain tensor product algebra, and
the construction is verified associative/unital on every input.  The same
story dually for the crossed product coalgebra.
"""

from hopfcyclic import (
    Field, check_cocyclic_ops, check_cyclic_ops,
    cocyclic_module_of_coalgebra, crossed_product_algebra,
    crossed_product_coalgebra, cyclic_group_table, cyclic_module_of_algebra,
    group_algebra, hochschild_dims, mixed_complex, cochain_mixed_complex,
    cyclic_dims, regular_comodule_algebra, regular_module_coalgebra,
    sweedler_hopf,
)

QQ = Field.rationals()
F2 = Field.prime(2)

h = group_algebra(cyclic_group_table(2), QQ, ["e", "g"])
a = regular_comodule_algebra(h)
r = crossed_product_algebra(a)
print("crossed product of k[C2] with itself: dim", r.dim)
print("basis:", r.basis_names)

print()
print("== the cyclic module of an algebra ==")
ops = cyclic_module_of_algebra(r, N=3)
rep = check_cyclic_ops(ops)
print("simplicial + cyclic relations (incl. t^(n+1) = id):", rep.ok)

mc = mixed_complex(ops)
print("Hochschild dims of the crossed product:", hochschild_dims(mc, 2))
print("cyclic dims of the crossed product:   ", cyclic_dims(mc, 2))

print()
print("== nontrivial twisting: the four-dimensional Hopf algebra ==")
h4 = sweedler_hopf(QQ)
r4 = crossed_product_algebra(regular_comodule_algebra(h4))
mc4 = mixed_complex(cyclic_module_of_algebra(r4, N=3))
print("crossed product dim:", r4.dim)
print("HH dims:", hochschild_dims(mc4, 2))
print("HC dims:", cyclic_dims(mc4, 2))

print()
print("== coalgebra side ==")
c = regular_module_coalgebra(h)
cc = crossed_product_coalgebra(c)
cops = cocyclic_module_of_coalgebra(cc, N=3)
print("cocyclic relations:", check_cocyclic_ops(cops).ok)
mcc = cochain_mixed_complex(cops)
print("HH^ dims:", hochschild_dims(mcc, 2))
print("HC^ dims:", cyclic_dims(mcc, 2))

print()
print("== characteristic matters: k[C2] over F2 is not separable ==")
hf = group_algebra(cyclic_group_table(2), F2)
mcf = mixed_complex(cyclic_module_of_algebra(hf.as_algebra(), N=4))
print("HH dims over F2:", hochschild_dims(mcf, 3), "(nonvanishing)")
