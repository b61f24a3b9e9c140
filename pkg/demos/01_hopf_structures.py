#!/usr/bin/env python3
"""Building finite-dimensional Hopf algebras and checking every axiom.

Structure constants go in, a pass/fail report per axiom comes out.  All
arithmetic is exact (rationals or a prime field), so a PASS is a proof on
the given data, not a numerical statement.
"""

from hopfcyclic import (
    Field, check_comodule_algebra, check_hopf, check_module_coalgebra,
    cyclic_group_table, group_algebra, regular_comodule_algebra,
    regular_module_coalgebra, sweedler_hopf, symmetric_group_table,
)

QQ = Field.rationals()
F2 = Field.prime(2)

print("== group algebras ==")
for name, table in [("C2", cyclic_group_table(2)),
                    ("C3", cyclic_group_table(3)),
                    ("S3", symmetric_group_table(3))]:
    h = group_algebra(table, QQ)
    rep = check_hopf(h)
    print("k[%s]: dim %d, %d axioms, all pass: %s"
          % (name, h.dim, len(rep.entries), rep.ok))

print()
print("== the four-dimensional Hopf algebra (basis 1, g, x, gx) ==")
h4 = sweedler_hopf(QQ)
rep = check_hopf(h4)
print("axioms all pass:", rep.ok)
s2 = h4.antipode @ h4.antipode
s4 = s2 @ s2
from hopfcyclic import SparseMatrix
print("S^2 == id:", s2 == SparseMatrix.identity(QQ, 4))
print("S^4 == id:", s4 == SparseMatrix.identity(QQ, 4))

print()
print("== comodule algebras and module coalgebras ==")
a = regular_comodule_algebra(h4)   # H coacting on itself by comultiplication
c = regular_module_coalgebra(h4)   # H acting on itself by multiplication
print("self-coaction is a comodule algebra:", check_comodule_algebra(a).ok)
print("self-action is a module coalgebra:  ", check_module_coalgebra(c).ok)

print()
print("== deliberate corruption is caught and located ==")
from hopfcyclic import HopfAlgebra
bad = HopfAlgebra(QQ, 4, h4.mult, h4.unit, h4.comult, h4.counit,
                  SparseMatrix.identity(QQ, 4))
rep = check_hopf(bad)
for name, ok, detail in rep.entries:
    if not ok:
        print("FAILED axiom: %s (%s)" % (name, detail))
