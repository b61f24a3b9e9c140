"""Acceptance gate: every structural theorem as an executable, exact check.

Each test prints one pass/fail line.  All comparisons are exact (tolerance
zero); the whole module is sized to finish in well under two minutes.
"""

import json
import os
import subprocess
import sys

import pytest

from hopfcyclic.errors import NotCosemisimple, NotSemisimple
from hopfcyclic.fields import Field
from hopfcyclic.hopf import (
    HopfAlgebra, check_hopf, cyclic_group_table, group_algebra,
    regular_comodule_algebra, regular_module_coalgebra, sweedler_hopf,
    symmetric_group_table, trivial_comodule_algebra, trivial_hopf,
    trivial_module_coalgebra,
)
from hopfcyclic.crossed import (
    check_cocyclic_ops, check_cyclic_ops, cocyclic_module_of_coalgebra,
    crossed_product_algebra, crossed_product_coalgebra,
    cyclic_module_of_algebra,
)
from hopfcyclic.cylinder import (
    AlgebraCylinder, AlgebraModuleForm, CoalgebraCocylinder,
    CoalgebraModuleForm, check_algebra_cylinder, check_coalgebra_cocylinder,
    coinvariant_cocyclic_module, coinvariant_cyclic_module, phi_psi_algebra,
    phi_psi_coalgebra,
)
from hopfcyclic.homology import (
    cochain_mixed_complex, cosemisimple_homotopy_check, cyclic_dims,
    ez_compare_hochschild, find_dual_left_integral, find_right_integral,
    hopf_module_homology, mixed_complex, semisimple_homotopy_check,
    spectral_pages, total_complex_algebra, trivial_comodule_coaction,
    trivial_module_action,
)

QQ = Field.rationals()
F2 = Field.prime(2)
DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def kc2(field=QQ):
    return group_algebra(cyclic_group_table(2), field)


def _line(name, ok):
    print("%s: %s" % (name, "PASS" if ok else "FAIL"))
    assert ok, name


def test_criterion_01_hopf_axiom_suite():
    ok = True
    for make in (lambda: trivial_hopf(QQ),
                 lambda: kc2(),
                 lambda: group_algebra(cyclic_group_table(3), QQ),
                 lambda: group_algebra(symmetric_group_table(3), QQ),
                 lambda: sweedler_hopf(QQ)):
        ok = ok and check_hopf(make()).ok
    h = sweedler_hopf(QQ)
    from hopfcyclic.linalg import SparseMatrix
    corrupt = HopfAlgebra(QQ, 4, h.mult, h.unit, h.comult, h.counit,
                          SparseMatrix.identity(QQ, 4))
    rep = check_hopf(corrupt)
    named = [n for n, okk, _ in rep.entries if not okk]
    ok = ok and not rep.ok and named and all("antipode" in n for n in named)
    _line("criterion 1 (Hopf axiom suite + corrupted antipode named)", ok)


def test_criterion_02_cylindrical_suites():
    ok = True
    for a, P, Q in [
        (regular_comodule_algebra(kc2()), 2, 2),
        (regular_comodule_algebra(sweedler_hopf(QQ)), 2, 2),
        (trivial_comodule_algebra(kc2(F2)), 2, 2),
    ]:
        ok = ok and check_algebra_cylinder(AlgebraCylinder(a), P, Q).ok
    for c, P, Q in [
        (regular_module_coalgebra(kc2()), 1, 1),
        (regular_module_coalgebra(sweedler_hopf(QQ)), 1, 1),
    ]:
        ok = ok and check_coalgebra_cocylinder(CoalgebraCocylinder(c), P, Q).ok
    _line("criterion 2 (cylindrical + cocylindrical identity suites)", ok)


def test_criterion_03_isomorphism_theorems():
    phi_psi_algebra(regular_comodule_algebra(kc2()), N=3)
    phi_psi_algebra(regular_comodule_algebra(sweedler_hopf(QQ)), N=2)
    phi_psi_coalgebra(regular_module_coalgebra(kc2()), N=3)
    phi_psi_coalgebra(regular_module_coalgebra(sweedler_hopf(QQ)), N=2)
    _line("criterion 3 (crossed-product isomorphisms, inverse + intertwining)",
          True)


def test_criterion_04_transform_consistency():
    rep1 = AlgebraModuleForm(
        AlgebraCylinder(regular_comodule_algebra(kc2()))).check(2, 2)
    rep2 = CoalgebraModuleForm(
        CoalgebraCocylinder(regular_module_coalgebra(kc2()))).check(2, 2)
    _line("criterion 4 (transform inverses + boundary = module (co)boundary)",
          rep1.ok and rep2.ok)


def test_criterion_05_mixed_complex_identities():
    # chain-side roster: shipped algebras plus the small crossed product;
    # identities checked through degree 4 (b/B built to truncation 5)
    algebras = [
        trivial_hopf(QQ).as_algebra(),
        kc2().as_algebra(),
        kc2(F2).as_algebra(),
        group_algebra(cyclic_group_table(3), QQ).as_algebra(),
        sweedler_hopf(QQ).as_algebra(),
        group_algebra(symmetric_group_table(3), QQ).as_algebra(),
        crossed_product_algebra(regular_comodule_algebra(kc2())),
    ]
    for alg in algebras:
        mixed_complex(cyclic_module_of_algebra(alg, N=5))  # raises on failure
    coalgebras = [
        trivial_hopf(QQ).as_coalgebra(),
        kc2().as_coalgebra(),
        kc2(F2).as_coalgebra(),
        group_algebra(cyclic_group_table(3), QQ).as_coalgebra(),
        sweedler_hopf(QQ).as_coalgebra(),
        crossed_product_coalgebra(regular_module_coalgebra(kc2())),
    ]
    for coalg in coalgebras:
        cochain_mixed_complex(cocyclic_module_of_coalgebra(coalg, N=5))
    mc = mixed_complex(cyclic_module_of_algebra(trivial_hopf(QQ).as_algebra(),
                                                N=5))
    ok = cyclic_dims(mc, 4) == [1, 0, 1, 0, 1]
    _line("criterion 5 (b/B identities n<=4 on shipped modules; HC(k))", ok)


def test_criterion_06_eilenberg_zilber():
    rep1 = ez_compare_hochschild(
        AlgebraCylinder(regular_comodule_algebra(kc2())), 2)
    rep2 = ez_compare_hochschild(
        AlgebraCylinder(regular_comodule_algebra(sweedler_hopf(QQ))), 1)
    ok = all(eq for *_, eq in rep1) and all(eq for *_, eq in rep2)
    _line("criterion 6 (Eilenberg-Zilber dims, total vs diagonal)", ok)


def test_criterion_07_semisimple_collapse():
    h = kc2()
    t = find_right_integral(h)
    ok = t == {0: QQ.parse("1/2"), 1: QQ.parse("1/2")}
    rep = semisimple_homotopy_check(h, t, trivial_module_action(h), 3)
    ok = ok and all(o for _, o in rep)
    a = regular_comodule_algebra(h)
    fc = total_complex_algebra(AlgebraCylinder(a), N=3)
    e1 = spectral_pages(fc, 1, (2, 2))[1]
    ok = ok and all(v == 0 for (i, j), v in e1.table.items() if j > 0)
    r = crossed_product_algebra(a)
    lhs = cyclic_dims(mixed_complex(cyclic_module_of_algebra(r, N=3)), 2)
    ops, _ = coinvariant_cyclic_module(a, N=3)
    rhs = cyclic_dims(mixed_complex(ops), 2)
    ok = ok and lhs == rhs
    # negative control over F2
    with pytest.raises(NotSemisimple):
        find_right_integral(kc2(F2))
    fc2 = total_complex_algebra(
        AlgebraCylinder(trivial_comodule_algebra(kc2(F2))), N=3)
    e1n = spectral_pages(fc2, 1, (2, 2))[1]
    ok = ok and any(v for (i, j), v in e1n.table.items() if j > 0)
    _line("criterion 7 (semisimple collapse + F2 negative control)", ok)


def test_criterion_08_cosemisimple_collapse():
    h = kc2()
    x = find_dual_left_integral(h)
    ok = x == {0: QQ.one()}
    rep = cosemisimple_homotopy_check(h, x, trivial_comodule_coaction(h), 3)
    ok = ok and all(o for _, o in rep)
    c = regular_module_coalgebra(h)
    cc = crossed_product_coalgebra(c)
    lhs = cyclic_dims(cochain_mixed_complex(
        cocyclic_module_of_coalgebra(cc, N=3)), 2)
    cops, _ = coinvariant_cocyclic_module(c, N=3)
    rhs = cyclic_dims(cochain_mixed_complex(cops), 2)
    ok = ok and lhs == rhs
    with pytest.raises(NotCosemisimple):
        find_dual_left_integral(sweedler_hopf(QQ))
    _line("criterion 8 (cosemisimple collapse + H4 negative control)", ok)


def test_criterion_09_group_homology_cross_check():
    h2 = kc2(F2)
    ok = hopf_module_homology(h2, trivial_module_action(h2), 3) == [1, 1, 1, 1]
    h = kc2()
    ok = ok and hopf_module_homology(h, trivial_module_action(h), 3) \
        == [1, 0, 0, 0]
    _line("criterion 9 (group homology over F2 and Q)", ok)


def test_criterion_10_determinism():
    commands = [
        ("verify", "hopf", "-i", os.path.join(DATA, "c2_Q.json")),
        ("verify", "cylindrical", "-i", os.path.join(DATA, "c2_Q.json"),
         "--pmax", "2", "--qmax", "2"),
        ("compute", "hc", "-i", os.path.join(DATA, "ground_field_Q.json"),
         "--nmax", "3"),
        ("compute", "hopf-homology", "-i", os.path.join(DATA, "c2_F2.json"),
         "--qmax", "3"),
        ("compute", "ss-pages", "-i", os.path.join(DATA, "c2_Q.json"),
         "--rmax", "1", "--pmax", "2", "--qmax", "2"),
        ("compare", "collapse-algebra", "-i", os.path.join(DATA, "c2_Q.json"),
         "--nmax", "2"),
        ("compare", "collapse-coalgebra", "-i",
         os.path.join(DATA, "c2_Q.json"), "--nmax", "2"),
        ("compare", "ez-hochschild", "-i", os.path.join(DATA, "c2_Q.json"),
         "--nmax", "2"),
    ]
    ok = True
    for cmd in commands:
        outs = []
        for _ in range(2):
            proc = subprocess.run([sys.executable, "-m", "hopfcyclic", *cmd],
                                  capture_output=True)
            outs.append((proc.returncode, proc.stdout))
        ok = ok and outs[0] == outs[1] and outs[0][0] == 0
    _line("criterion 10 (byte-identical reports across runs)", ok)
