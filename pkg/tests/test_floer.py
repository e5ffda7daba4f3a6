from __future__ import annotations

import random

import pytest

from corpus import mixed_corpus, random_reducible
from floerzeta.exact_algebra import IntMatrix
from floerzeta.fixed_points import NotIterableError, lefschetz_number, nielsen_number, pa_index_list
from floerzeta.floer import (
    GradedDimension,
    ReducibleAssemblyError,
    c_component_relative_dims,
    floer_dimension,
    hf_euler,
    hf_finite_type,
    hf_iterates,
    hf_periodic,
    hf_pseudo_anosov,
    hf_reducible,
    hf_torus_anosov,
    identity_hf,
)
from floerzeta.surface import (
    MINUS_TWIST,
    PLUS_TWIST,
    CompactSurface,
    FiniteTypeClassDesc,
    FixedComponent,
    FixedPointDatum,
    PaAdjacent,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    PseudoAnosovPiece,
    ReducibleClassDesc,
    TorusAutoDesc,
    absolute_homology_dims,
)

CAT = IntMatrix([[2, 1], [1, 1]])
HYPER = PeriodicClassDesc(2, 2, {1: 6})
Z3 = PeriodicClassDesc(2, 3, {1: 4})
S3 = FixedPointDatum.singular(3)
R1, RM1 = FixedPointDatum.regular(1), FixedPointDatum.regular(-1)


def test_graded_dimension_basics():
    gd = GradedDimension(1, 2)
    assert gd.total == 3 and gd.euler == -1
    assert gd + GradedDimension(3, 0) == GradedDimension(4, 2)
    assert GradedDimension.from_betti((1, 4, 1)) == GradedDimension(2, 4)
    with pytest.raises(ValueError):
        GradedDimension(-1, 0)
    assert [hf_euler(GradedDimension(*x)) for x in [(6, 0), (0, 1), (1, 2)]] == [6, -1, -1]


def test_periodic_examples():
    assert hf_periodic(HYPER, 1) == GradedDimension(6, 0)
    assert hf_periodic(HYPER, 2) == GradedDimension(2, 4)
    assert hf_periodic(Z3, 2) == GradedDimension(4, 0)


def test_periodic_identity_iterate_is_ordinary_homology():
    for g in range(1, 6):
        for m in range(2, 7):
            desc = PeriodicClassDesc(g, m, {1: 1})
            for k in (1, 2, 3):
                expect = GradedDimension.from_betti(absolute_homology_dims(CompactSurface(g)))
                assert hf_periodic(desc, k * m) == expect


def test_finite_type_examples():
    one_holed = FiniteTypeClassDesc(2, (FixedComponent(1, (PLUS_TWIST,)),))
    assert hf_finite_type(one_holed) == GradedDimension(1, 2)
    assert hf_finite_type(FiniteTypeClassDesc(2, periodic_part_fixed_points=5)) == GradedDimension(5, 0)
    assert hf_finite_type(FiniteTypeClassDesc(2, (FixedComponent(2, ()),))) == GradedDimension(2, 4)


def test_torus_examples():
    assert hf_torus_anosov(CAT) == GradedDimension(0, 1)
    assert hf_torus_anosov(CAT ** 2) == GradedDimension(0, 5)
    assert hf_torus_anosov(IntMatrix([[-2, -1], [-1, -1]])) == GradedDimension(5, 0)
    with pytest.raises(ValueError):
        hf_torus_anosov(IntMatrix([[1, 1], [0, 1]]))


def test_pseudo_anosov_examples():
    assert hf_pseudo_anosov([S3, R1]) == GradedDimension(1, 2)
    assert hf_pseudo_anosov([]) == GradedDimension(0, 0)
    assert hf_pseudo_anosov([RM1] * 3) == GradedDimension(0, 3)
    assert hf_pseudo_anosov([FixedPointDatum.singular(5, rotated=True)]) == GradedDimension(1, 0)


def test_pa_total_is_abs_index_sum():
    rng = random.Random(1)
    for _ in range(300):
        pts = [
            FixedPointDatum.regular(rng.choice([1, -1]))
            if rng.random() < 0.5
            else FixedPointDatum.singular(rng.randint(3, 8), rng.random() < 0.3)
            for _ in range(rng.randint(0, 8))
        ]
        # independent path: count from the raw data, not through the index list
        expect = 0
        for fp in pts:
            if fp.kind == "regular" or fp.rotated:
                expect += 1
            else:
                expect += fp.prongs - 1
        assert hf_pseudo_anosov(pts).total == expect == sum(abs(i) for i in pa_index_list(pts))


def test_reducible_examples():
    periodic_only = ReducibleClassDesc(2, periodic_components=(3, 4))
    assert hf_reducible(periodic_only) == GradedDimension(7, 0)
    b3 = ReducibleClassDesc(2, (FixedComponent(1, (PaAdjacent(3, 0),)),), pa_components=(PseudoAnosovPiece(),))
    assert hf_reducible(b3) == GradedDimension(0, 4)
    # Euler bookkeeping: chi(one-holed torus) - 1 (puncture) - (3 - 1) = -4
    assert hf_reducible(b3).euler == -1 - 1 - 2 == lefschetz_number(b3)
    assert hf_reducible(ReducibleClassDesc(2)) == GradedDimension(0, 0)


def test_reducible_unmatched_adjacency():
    bad = ReducibleClassDesc(2, (FixedComponent(1, (PaAdjacent(3, 2),)),), pa_components=(PseudoAnosovPiece(),))
    with pytest.raises(ReducibleAssemblyError):
        hf_reducible(bad)


def test_c_component_assignment_does_not_matter():
    for h in range(3):
        for twists in ([], [PLUS_TWIST], [MINUS_TWIST], [PLUS_TWIST, MINUS_TWIST]):
            for k in range(2, 6):
                comp = FixedComponent(h, tuple(twists) + tuple(PaAdjacent(2) for _ in range(k)))
                dims = {c_component_relative_dims(comp, j) for j in range(1, k)}
                assert len(dims) == 1
                with pytest.raises(ReducibleAssemblyError):
                    c_component_relative_dims(comp, 0)
                with pytest.raises(ReducibleAssemblyError):
                    c_component_relative_dims(comp, k)


def _concat(a: ReducibleClassDesc, b: ReducibleClassDesc) -> ReducibleClassDesc:
    shift = len(a.pa_components)
    moved = []
    for comp in b.fixed_components:
        labels = tuple(
            PaAdjacent(lab.prongs, lab.component + shift) if isinstance(lab, PaAdjacent) else lab
            for lab in comp.boundary
        )
        moved.append(FixedComponent(comp.genus, labels))
    return ReducibleClassDesc(
        a.genus + b.genus,
        a.fixed_components + tuple(moved),
        a.periodic_components + b.periodic_components,
        a.pa_components + b.pa_components,
    )


def test_reducible_additive_under_disjoint_union():
    rng = random.Random(9)
    for _ in range(200):
        a, b = random_reducible(rng), random_reducible(rng)
        assert hf_reducible(_concat(a, b)) == hf_reducible(a) + hf_reducible(b)


def test_euler_equals_lefschetz_on_corpus():
    for desc in mixed_corpus(500, seed=21):
        gd = floer_dimension(desc)
        assert hf_euler(gd) == lefschetz_number(desc), desc
        assert gd.total >= nielsen_number(desc), desc


def test_iterates():
    assert list(hf_iterates(HYPER, 4)) == [6, 6, 6, 6]
    assert list(hf_iterates(TorusAutoDesc(CAT), 5)) == [1, 5, 16, 45, 121]
    assert list(hf_iterates(Z3, 3)) == [4, 4, 6]
    with pytest.raises(NotIterableError):
        hf_iterates(PseudoAnosovClassDesc(2, (R1,)), 3)
    with pytest.raises(NotIterableError):
        floer_dimension(PseudoAnosovClassDesc(2, (R1,)), 2)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_identity_class(g):
    assert identity_hf(g) == GradedDimension(2, 2 * g)
    assert hf_finite_type(FiniteTypeClassDesc(g, (FixedComponent(g, ()),))) == GradedDimension(2, 2 * g)
