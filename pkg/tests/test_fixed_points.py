from __future__ import annotations

import cmath
import math
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import periodic_corpus, random_anosov
from floerzeta.exact_algebra import IntMatrix, divisors
from floerzeta.fixed_points import (
    InvalidActionError,
    IterateSequence,
    NotIterableError,
    component_index,
    identity_action,
    lefschetz_from_indices,
    lefschetz_number,
    lefschetz_zeta_input,
    nielsen_number,
    nielsen_sequence,
    pa_index_list,
    pa_nielsen,
    periodic_fix_count,
    periodic_lefschetz,
    periodic_nielsen,
    torus_action,
    torus_lefschetz,
    torus_nielsen,
)
from floerzeta.surface import (
    FixedComponent,
    FixedPointDatum,
    PaAdjacent,
    PeriodicClassDesc,
    PseudoAnosovClassDesc,
    TorusAutoDesc,
)

CAT = IntMatrix([[2, 1], [1, 1]])
HYPER = PeriodicClassDesc(2, 2, {1: 6})
Z3 = PeriodicClassDesc(2, 3, {1: 4})


# -- local model of a prong singularity ------------------------------------


def prong_map(p: int, shift: int, lam: float = 2.0):
    """Pseudo-Anosov germ at a p-prong singularity, prongs rotated by ``shift``.

    Each sector of angle 2*pi/p is opened to the upper half plane by
    z -> z**(p/2), pushed by the hyperbolic map (u, v) -> (lam*u, v/lam),
    then folded back into the sector ``shift`` places further round.
    """

    def f(z: complex) -> complex:
        theta = cmath.phase(z) % (2 * math.pi)
        k = min(int(theta * p / (2 * math.pi)), p - 1)
        local = z * cmath.exp(-2j * math.pi * k / p)
        r, a = abs(local), cmath.phase(local) % (2 * math.pi)
        w = cmath.rect(r ** (p / 2), a * p / 2)
        w = complex(lam * w.real, w.imag / lam)
        r2, a2 = abs(w), cmath.phase(w) % (2 * math.pi)
        back = cmath.rect(r2 ** (2 / p), a2 * 2 / p)
        return back * cmath.exp(2j * math.pi * ((k + shift) % p) / p)

    return f


def winding_index(f, radius: float = 0.5, samples: int = 20000) -> int:
    total = 0.0
    prev = None
    for i in range(samples + 1):
        z = cmath.rect(radius, 2 * math.pi * i / samples)
        ang = cmath.phase(z - f(z))
        if prev is not None:
            d = ang - prev
            d -= 2 * math.pi * round(d / (2 * math.pi))
            total += d
        prev = ang
    return round(total / (2 * math.pi))


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_unrotated_prong_index_by_winding(p):
    assert winding_index(prong_map(p, 0)) == 1 - p
    assert pa_index_list([FixedPointDatum.singular(p)]) == [1 - p]


@pytest.mark.parametrize("p, shift", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 3), (6, 1)])
def test_rotated_prong_index_by_winding(p, shift):
    assert winding_index(prong_map(p, shift)) == 1
    assert pa_index_list([FixedPointDatum.singular(p, rotated=True)]) == [1]


def test_winding_oracle_on_regular_points():
    # two prongs is a regular saddle; rotating them flips both eigenvalues
    assert winding_index(prong_map(2, 0)) == -1
    assert winding_index(prong_map(2, 1)) == 1


# -- torus ----------------------------------------------------------------


def test_torus_examples():
    assert torus_lefschetz(CAT, 1) == -1
    assert torus_lefschetz(CAT, 2) == -5
    assert torus_lefschetz(IntMatrix.identity(2), 1) == 0
    assert [torus_nielsen(CAT, n) for n in (1, 3, 5)] == [1, 16, 121]
    with pytest.raises(ValueError):
        torus_lefschetz(CAT, 0)
    with pytest.raises(ValueError):
        torus_nielsen(IntMatrix([[1, 1], [0, 1]]), 1)


def test_torus_nielsen_is_abs_lefschetz():
    seen = set()
    rng = random.Random(5)
    while len(seen) < 40:
        seen.add(random_anosov(rng))
    for A in seen:
        for n in range(1, 11):
            L = torus_lefschetz(A, n)
            assert torus_nielsen(A, n) == abs(L)
            # second code path: the trace formula on the homology action
            assert torus_action(A).lefschetz(n) == L == 2 - (A ** n).trace()


def test_cat_nielsen_sequence():
    seq = nielsen_sequence(TorusAutoDesc(CAT), 5)
    assert list(seq) == [1, 5, 16, 45, 121]
    assert [abs(2 - (CAT ** n).trace()) for n in range(1, 6)] == list(seq)


# -- periodic -------------------------------------------------------------


def test_periodic_examples():
    assert periodic_fix_count(HYPER, 1) == 6
    assert periodic_fix_count(Z3, 2) == 4
    assert periodic_fix_count(PeriodicClassDesc(2, 4, {1: 2, 2: 4}), 2) == 6
    assert periodic_nielsen(HYPER, 2) == 1
    assert periodic_nielsen(HYPER, 1) == 6
    assert periodic_nielsen(Z3, 3) == 1
    assert periodic_lefschetz(HYPER, 2) == -2
    with pytest.raises(ValueError):
        periodic_fix_count(HYPER, 4)


def test_identity_nielsen_on_torus():
    # chi = 0: the single fixed point class is inessential
    assert periodic_nielsen(PeriodicClassDesc(1, 2, {1: 4}), 2) == 0


def test_fix_count_depends_on_gcd_only():
    for desc in periodic_corpus(60, seed=2):
        m = desc.period
        by_gcd: dict[int, int] = {}
        for n in range(1, 4 * m + 1):
            if n % m == 0:
                continue
            val = periodic_fix_count(desc, n)
            assert by_gcd.setdefault(gcd(n, m), val) == val


def test_fix_count_against_orbit_oracle():
    # build an explicit permutation with the stated orbit structure
    for desc in periodic_corpus(40, seed=8):
        points = []
        for d, c in desc.least_period_counts.items():
            for orbit in range(c // d):
                points.extend((d, orbit, j) for j in range(d))

        def step(pt, n):
            d, orbit, j = pt
            return (d, orbit, (j + n) % d)

        for n in range(1, 2 * desc.period + 1):
            if n % desc.period:
                fixed = sum(1 for pt in points if step(pt, n) == pt)
                assert periodic_fix_count(desc, n) == fixed


def test_periodic_indices_sum_to_fix_count():
    for desc in periodic_corpus(40, seed=4):
        for n in range(1, desc.period):
            k = periodic_fix_count(desc, n)
            assert lefschetz_from_indices([1] * k) == k == periodic_lefschetz(desc, n)


# -- pseudo-Anosov ----------------------------------------------------------


def test_pa_examples():
    s3, r1 = FixedPointDatum.singular(3), FixedPointDatum.regular(1)
    assert pa_index_list([s3]) == [-2]
    assert pa_index_list([r1, FixedPointDatum.regular(-1)]) == [1, -1]
    assert pa_index_list([FixedPointDatum.singular(4, rotated=True)]) == [1]
    assert lefschetz_from_indices([-2, 1]) == -1
    assert lefschetz_from_indices([]) == 0
    assert lefschetz_from_indices([1] * 6) == 6
    assert pa_nielsen([s3, r1]) == 2
    assert pa_nielsen([]) == 0
    assert pa_nielsen([FixedPointDatum.regular(-1)] * 5) == 5


fixed_point = st.one_of(
    st.sampled_from([1, -1]).map(FixedPointDatum.regular),
    st.builds(FixedPointDatum.singular, st.integers(3, 9), st.booleans()),
)


@settings(max_examples=300, deadline=None)
@given(st.lists(fixed_point, max_size=12))
def test_pa_nielsen_at_most_abs_index_sum(points):
    idx = pa_index_list(points)
    total = sum(abs(i) for i in idx)
    assert pa_nielsen(points) <= total
    assert (pa_nielsen(points) == total) == all(abs(i) == 1 for i in idx)


# -- components and dispatch --------------------------------------------------


def test_component_index():
    assert component_index(FixedComponent(1, ("plus_twist",))) == -1
    assert component_index(FixedComponent(0, ("plus_twist", "minus_twist"))) == 0
    # b-type: chi - 1 - (p - 1)
    assert component_index(FixedComponent(1, (PaAdjacent(3),))) == -4
    # c-type: chi - q
    assert component_index(FixedComponent(0, (PaAdjacent(1), PaAdjacent(2)))) == -3


def test_dispatch_rejects_noniterable():
    pa = PseudoAnosovClassDesc(2, (FixedPointDatum.regular(1),))
    assert lefschetz_number(pa) == 1 and nielsen_number(pa) == 1
    with pytest.raises(NotIterableError):
        lefschetz_number(pa, 2)
    with pytest.raises(NotIterableError):
        nielsen_number(pa, 3)


def test_iterate_sequence():
    seq = IterateSequence("N", (1, 5, 16))
    assert seq[1] == 1 and seq[3] == 16 and seq.n_max == 3
    with pytest.raises((IndexError, ValueError)):
        seq[4]
    with pytest.raises((IndexError, ValueError)):
        seq[0]
    with pytest.raises(ValueError):
        seq.require(5)


# -- homology actions -------------------------------------------------------


def test_action_examples():
    assert torus_action(CAT).lefschetz(1) == -1
    ident = identity_action(2)
    assert [ident.lefschetz(n) for n in range(1, 6)] == [-2] * 5
    flip = lefschetz_zeta_input([[[1]], [[-1, 0], [0, -1]], [[1]]])
    assert flip.lefschetz(1) == 4
    assert flip.genus == 1


def test_action_rejects_bad_shapes():
    with pytest.raises(InvalidActionError):
        lefschetz_zeta_input([[[2]], [[1, 0], [0, 1]], [[1]]])
    with pytest.raises(InvalidActionError):
        lefschetz_zeta_input([[[1]], [[1, 0], [0, 1]], [[-1]]])
    with pytest.raises(InvalidActionError):
        lefschetz_zeta_input([[[1]], [[1]], [[1]]])
    with pytest.raises(InvalidActionError):
        lefschetz_zeta_input([[[1]], [[1, 0], [0, 1]]])


def test_divisor_sum_of_fix_counts():
    # sum_{d | n} d * (orbits of least period d) recovers fix counts
    for desc in periodic_corpus(30, seed=6):
        for n in range(1, desc.period):
            expect = sum(desc.count(d) for d in divisors(n) if desc.period % d == 0)
            assert periodic_fix_count(desc, n) == expect
