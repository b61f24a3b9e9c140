"""Crossed products and standard (co)cyclic modules."""

import pytest

from hopfcyclic.fields import Field
from hopfcyclic.hopf import (
    check_algebra, check_coalgebra, cyclic_group_table, group_algebra,
    regular_comodule_algebra, regular_module_coalgebra, sweedler_hopf,
    symmetric_group_table, trivial_comodule_algebra, trivial_hopf,
    trivial_module_coalgebra,
)
from hopfcyclic.crossed import (
    check_cocyclic_ops, check_cyclic_ops, cocyclic_module_of_coalgebra,
    crossed_product_algebra, crossed_product_coalgebra,
    cyclic_module_of_algebra,
)
from hopfcyclic.linalg import SparseMatrix
from hopfcyclic.tensor import perm_matrix

QQ = Field.rationals()
F2 = Field.prime(2)


def kc2(field=QQ):
    return group_algebra(cyclic_group_table(2), field)


def test_crossed_algebra_group_case():
    a = regular_comodule_algebra(kc2())
    r = crossed_product_algebra(a)
    assert r.dim == 4
    assert check_algebra(r).ok
    # (g x g)(g x 1) = 1 x g ; index a*2+h
    col = r.mult.column(3 * 4 + 2)
    assert col == {1: QQ.one()}


def test_crossed_algebra_unit_absorbs():
    a = regular_comodule_algebra(sweedler_hopf(QQ))
    r = crossed_product_algebra(a)
    i = SparseMatrix.identity(QQ, r.dim)
    assert r.mult @ r.unit.kron(i) == i
    assert r.mult @ i.kron(r.unit) == i


def test_crossed_algebra_trivial_coaction_is_tensor_algebra():
    h = sweedler_hopf(QQ)
    a = trivial_comodule_algebra(h, h.as_algebra())
    r = crossed_product_algebra(a)
    d = h.dim
    swap = perm_matrix(QQ, [d, d, d, d], (0, 2, 1, 3))
    tensor_mult = h.mult.kron(h.mult) @ swap
    assert r.mult == tensor_mult


def test_crossed_algebra_trivial_hopf_degenerates():
    h2 = kc2()
    triv = trivial_hopf(QQ)
    a = trivial_comodule_algebra(triv, h2.as_algebra())
    r = crossed_product_algebra(a)
    assert r.dim == 2
    assert r.mult == h2.mult and r.unit == h2.unit


def test_crossed_coalgebra_group_case():
    c = regular_module_coalgebra(kc2())
    cc = crossed_product_coalgebra(c)
    assert check_coalgebra(cc).ok
    # group-likes stay group-like: Delta(a x g) = (a x g) x (a x g)
    for idx in range(4):
        assert cc.comult.column(idx) == {idx * 4 + idx: QQ.one()}
    # counit is the tensor counit
    assert cc.counit == c.counit.kron(c.hopf.counit)


def test_crossed_coalgebra_trivial_action_is_tensor_coalgebra():
    h = sweedler_hopf(QQ)
    c = trivial_module_coalgebra(h, h.as_coalgebra())
    cc = crossed_product_coalgebra(c)
    d = h.dim
    swap = perm_matrix(QQ, [d, d, d, d], (0, 2, 1, 3))
    tensor_comult = swap @ h.comult.kron(h.comult)
    assert cc.comult == tensor_comult


def test_crossed_coalgebra_trivial_hopf_degenerates():
    h2 = kc2()
    triv = trivial_hopf(QQ)
    c = trivial_module_coalgebra(triv, h2.as_coalgebra())
    cc = crossed_product_coalgebra(c)
    assert cc.dim == 2
    assert cc.comult == h2.comult and cc.counit == h2.counit


def test_cyclic_module_ground_field():
    f = QQ
    triv = trivial_hopf(f)
    ops = cyclic_module_of_algebra(triv.as_algebra(), N=3)
    for n in range(1, 4):
        for i in range(n + 1):
            assert ops.face(n, i) == SparseMatrix.identity(f, 1)
        assert ops.t(n) == SparseMatrix.identity(f, 1)
    assert check_cyclic_ops(ops).ok


@pytest.mark.parametrize("field", [QQ, F2])
def test_cyclic_module_kc2_suite(field):
    ops = cyclic_module_of_algebra(kc2(field).as_algebra(), N=3)
    rep = check_cyclic_ops(ops)
    assert rep.ok, rep.failures()
    # d_1(g x g) = g.g = 1 (wrap face)
    assert ops.face(1, 1).column(1 * 2 + 1) == {0: field.one()}


def test_cyclic_module_s3_suite():
    ops = cyclic_module_of_algebra(
        group_algebra(symmetric_group_table(3), QQ).as_algebra(), N=2)
    assert check_cyclic_ops(ops).ok


def test_cyclic_module_sweedler_suite():
    ops = cyclic_module_of_algebra(sweedler_hopf(QQ).as_algebra(), N=3)
    assert check_cyclic_ops(ops).ok


def test_cocyclic_module_ground_field():
    triv = trivial_hopf(QQ)
    ops = cocyclic_module_of_coalgebra(triv.as_coalgebra(), N=3)
    for n in range(3):
        for i in range(n + 2):
            assert ops.coface(n, i) == SparseMatrix.identity(QQ, 1)
    assert check_cocyclic_ops(ops).ok


@pytest.mark.parametrize("make", [
    lambda: kc2().as_coalgebra(),
    lambda: sweedler_hopf(QQ).as_coalgebra(),
])
def test_cocyclic_module_suites(make):
    ops = cocyclic_module_of_coalgebra(make(), N=3)
    rep = check_cocyclic_ops(ops)
    assert rep.ok, rep.failures()


def test_cocyclic_coface_on_group_like():
    ops = cocyclic_module_of_coalgebra(kc2().as_coalgebra(), N=2)
    # del^0(a) = (a, a) for group-like a at degree 0
    assert ops.coface(0, 0).column(1) == {1 * 2 + 1: QQ.one()}
    # del^1 at degree 0 is the wrap coface; same on group-likes
    assert ops.coface(0, 1).column(1) == {1 * 2 + 1: QQ.one()}


def test_crossed_modules_over_crossed_products_pass_suites():
    r = crossed_product_algebra(regular_comodule_algebra(kc2()))
    assert check_cyclic_ops(cyclic_module_of_algebra(r, N=2)).ok
    cc = crossed_product_coalgebra(regular_module_coalgebra(kc2()))
    assert check_cocyclic_ops(cocyclic_module_of_coalgebra(cc, N=2)).ok
