#!/usr/bin/env python3
"""The cylinder of a comodule algebra and its diagonal.

The two-parameter family H^(p+1) (x) A^(q+1) carries commuting paracyclic
structures in each direction whose rotations compose to the identity
(the cylindrical condition); its diagonal is then an honest cyclic module,
degreewise isomorphic to the cyclic module of the crossed product.  Every
one of those statements is a finite set of exact matrix identities here.
"""

from hopfcyclic import (
    Field, check_algebra_cylinder, check_coalgebra_cocylinder,
    check_cyclic_ops, cyclic_group_table, diagonal_cyclic, group_algebra,
    phi_psi_algebra, phi_psi_coalgebra, regular_comodule_algebra,
    regular_module_coalgebra, sweedler_hopf, AlgebraCylinder,
    CoalgebraCocylinder,
)

QQ = Field.rationals()
h4 = sweedler_hopf(QQ)
a = regular_comodule_algebra(h4)
cyl = AlgebraCylinder(a)

print("== bi-paracyclic identity suite for the four-dimensional Hopf algebra ==")
rep = check_algebra_cylinder(cyl, 1, 1)
print("window p,q <= 1:", rep.ok, "(%d identities)" % len(rep.entries))

print()
print("the interesting part: each rotation alone is NOT an involution,")
print("but the two rotations multiply to the identity:")
tv, th = cyl.tau_v(1, 1), cyl.tau_h(1, 1)
from hopfcyclic import SparseMatrix
ident = SparseMatrix.identity(QQ, cyl.space_dim(1, 1))
print("  tau_v^2 == id:", tv @ tv == ident)
print("  tau_h^2 == id:", th @ th == ident)
print("  tau_h^2 tau_v^2 == id:", th @ th @ tv @ tv == ident)

print()
print("== diagonal is cyclic, and matches the crossed product ==")
diag = diagonal_cyclic(cyl, N=2)
print("diagonal cyclic suite:", check_cyclic_ops(diag).ok)
phi, psi = phi_psi_algebra(a, N=2)
print("phi/psi mutually inverse and intertwining through degree 2: verified")
print("degree-2 spaces have dimension", phi[2].rows)

print()
print("== dual story for a module coalgebra ==")
c = regular_module_coalgebra(group_algebra(cyclic_group_table(2), QQ))
cocyl = CoalgebraCocylinder(c)
print("cocylindrical suite p,q <= 2:",
      check_coalgebra_cocylinder(cocyl, 2, 2).ok)
phi_psi_coalgebra(c, N=3)
print("cocyclic isomorphism with the crossed product coalgebra: verified")
