"""Total complexes, filtrations, spectral pages, EZ comparison, collapse."""

import pytest

from hopfcyclic.errors import FiltrationViolation
from hopfcyclic.fields import Field
from hopfcyclic.hopf import (
    cyclic_group_table, group_algebra, regular_comodule_algebra,
    regular_module_coalgebra, sweedler_hopf, trivial_comodule_algebra,
    trivial_hopf,
)
from hopfcyclic.crossed import (
    cocyclic_module_of_coalgebra, crossed_product_algebra,
    crossed_product_coalgebra, cyclic_module_of_algebra,
)
from hopfcyclic.cylinder import (
    AlgebraCylinder, CoalgebraCocylinder, coinvariant_cocyclic_module,
    coinvariant_cyclic_module,
)
from hopfcyclic.homology import (
    cochain_mixed_complex, cyclic_dims, ez_compare_hochschild, mixed_complex,
    page_zero_matches_horizontal_boundary, spectral_pages,
    total_complex_algebra, total_complex_coalgebra, total_homology_dims,
)

QQ = Field.rationals()
F2 = Field.prime(2)


def kc2(field=QQ):
    return group_algebra(cyclic_group_table(2), field)


def make_cyl(field=QQ):
    return AlgebraCylinder(regular_comodule_algebra(kc2(field)))


def test_total_complex_square_zero_and_filtration():
    fc = total_complex_algebra(make_cyl(), N=3)
    assert fc.dims == [4, 16, 48, 128]
    # d-stability, nesting, exhaustion all checked in the constructor


def test_total_complex_trivial_hopf_is_hochschild_of_a():
    h = kc2()
    a = trivial_comodule_algebra(trivial_hopf(QQ), h.as_algebra())
    cyl = AlgebraCylinder(a)
    fc = total_complex_algebra(cyl, N=3)
    tot = total_homology_dims(fc, 2)
    mc = mixed_complex(cyclic_module_of_algebra(h.as_algebra(), N=3))
    from hopfcyclic.homology import hochschild_dims
    # every row is the Hochschild complex of A; only row q=0 survives in
    # total homology through the horizontal contraction
    assert tot[0] == hochschild_dims(mc, 0)[0]


def test_page_zero_differential_is_horizontal_boundary():
    cyl = make_cyl()
    fc = total_complex_algebra(cyl, N=3)
    for n in range(1, 4):
        for q in range(n):
            p = n - q
            assert page_zero_matches_horizontal_boundary(fc, cyl, n, p, q)


def test_semisimple_first_page_vanishes_above_row_zero():
    fc = total_complex_algebra(make_cyl(), N=3)
    pages = spectral_pages(fc, 2, (2, 2))
    e1 = pages[1]
    assert all(v == 0 for (i, j), v in e1.table.items() if j > 0)
    # row zero is the coinvariant complex
    a = regular_comodule_algebra(kc2())
    _, pres = coinvariant_cyclic_module(a, N=2)
    assert [e1.dim(i, 0) for i in range(3)] == [p.dim for p in pres]


def test_f2_negative_control_nonvanishing():
    a = trivial_comodule_algebra(kc2(F2))
    fc = total_complex_algebra(AlgebraCylinder(a), N=3)
    pages = spectral_pages(fc, 1, (2, 2))
    assert any(v for (i, j), v in pages[1].table.items() if j > 0)


def test_pages_weakly_decrease():
    for field in (QQ, F2):
        a = regular_comodule_algebra(kc2(field))
        fc = total_complex_algebra(AlgebraCylinder(a), N=3)
        pages = spectral_pages(fc, 3, (2, 2))
        for r in range(3):
            for key, v in pages[r + 1].table.items():
                assert v <= pages[r].table[key]


def test_convergence_to_total_homology():
    fc = total_complex_algebra(make_cyl(), N=3)
    tot = total_homology_dims(fc, 2)
    stab = spectral_pages(fc, 4, (2, 2))[-1]
    for n in range(3):
        assert sum(stab.dim(i, n - i) for i in range(n + 1)) == tot[n]


def test_differential_ranks_explain_page_drop():
    fc = total_complex_algebra(make_cyl(F2), N=3)
    pages = spectral_pages(fc, 2, (2, 2))
    for r in range(2):
        cur, nxt = pages[r], pages[r + 1]
        for (i, j), v in nxt.table.items():
            out_rank = cur.diff_ranks.get((i, j), 0)
            in_rank = cur.diff_ranks.get((i + r, j - r + 1), 0)
            if (i + r, j - r + 1) in cur.table and i + j <= fc.N - 2:
                assert v == cur.table[(i, j)] - out_rank - in_rank


def test_ez_hochschild_kc2():
    rep = ez_compare_hochschild(make_cyl(), 2)
    assert all(eq for _, _, _, eq in rep)
    assert rep[0][1] == 4


def test_ez_hochschild_sweedler_degree_one():
    cyl = AlgebraCylinder(regular_comodule_algebra(sweedler_hopf(QQ)))
    rep = ez_compare_hochschild(cyl, 1)
    assert all(eq for _, _, _, eq in rep)


def test_ez_cochain_side_kc2():
    cocyl = CoalgebraCocylinder(regular_module_coalgebra(kc2()))
    rep = ez_compare_hochschild(cocyl, 2, cochain=True)
    assert all(eq for _, _, _, eq in rep)


def test_cochain_total_complex_and_pages():
    cocyl = CoalgebraCocylinder(regular_module_coalgebra(kc2()))
    fc = total_complex_coalgebra(cocyl, N=3)
    pages = spectral_pages(fc, 2, (2, 2))
    e1 = pages[1]
    # cosemisimple: entries away from the coinvariant column vanish;
    # with the q >= i filtration that is complementary degree > 0
    assert all(v == 0 for (i, j), v in e1.table.items() if j > 0)


def test_collapse_algebra_side():
    a = regular_comodule_algebra(kc2())
    r = crossed_product_algebra(a)
    lhs = cyclic_dims(mixed_complex(cyclic_module_of_algebra(r, N=3)), 2)
    ops, _ = coinvariant_cyclic_module(a, N=3)
    rhs = cyclic_dims(mixed_complex(ops), 2)
    assert lhs == rhs == [4, 0, 4]


def test_collapse_coalgebra_side():
    c = regular_module_coalgebra(kc2())
    cc = crossed_product_coalgebra(c)
    lhs = cyclic_dims(cochain_mixed_complex(
        cocyclic_module_of_coalgebra(cc, N=3)), 2)
    cops, _ = coinvariant_cocyclic_module(c, N=3)
    rhs = cyclic_dims(cochain_mixed_complex(cops), 2)
    assert lhs == rhs == [4, 0, 4]
