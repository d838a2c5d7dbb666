from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxkit.coxring import (
    GradingData,
    TorsionClassGroupError,
    anticanonical_class,
    class_degree,
    effective_cone,
    fan_from_bunch,
    grading_from_fan,
    is_ample,
    lefschetz_codim_check,
    mov_cone,
    nef_cone,
)
from coxkit.fan import Fan, anticanonical_degree, dual_variety, irrelevant_ideal, is_complete, is_fano, is_smooth
from coxkit.fixtures import FANO_NAMES, FIXTURE_NAMES, fano_grading, fixture, nonnef_grading
from coxkit.linalg import IntegerMatrix, row_lattice_hnf
from coxkit.models import BlowupModel, blowup_grading, z1_grading
from coxkit.polyhedral import RationalCone

P2 = Fan(2, [(1, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}])


def cone(*gens):
    return RationalCone(len(gens[0]), generators=gens)


def in_cone_2d(w, gens):
    """Brute force: w is a nonnegative combination of at most two of gens."""
    from fractions import Fraction

    if not any(w):
        return True
    for g in gens:
        if g[0] * w[1] - g[1] * w[0] == 0 and g[0] * w[0] + g[1] * w[1] > 0:
            return True
    for a, b in combinations(gens, 2):
        det = a[0] * b[1] - a[1] * b[0]
        if det == 0:
            continue
        s = Fraction(w[0] * b[1] - w[1] * b[0], det)
        t = Fraction(a[0] * w[1] - a[1] * w[0], det)
        if s >= 0 and t >= 0:
            return True
    return False


def test_grading_p4():
    g = grading_from_fan(fixture("p4"))
    assert g.degree_matrix.tolist() == [[1, 1, 1, 1, 1]]
    assert set(g.irrelevant.generators) == {frozenset({i}) for i in range(5)}


def test_grading_fano44():
    g = grading_from_fan(fixture("fano44"))
    assert g.hnf().tolist() == [[1, 1, 0, -2, 1, 0], [0, 0, 1, 1, 0, 1]]
    assert g.same_grading(fano_grading("fano44"))


def test_grading_p1xp1():
    g = grading_from_fan(fixture("p1xp1"))
    assert g.hnf() == row_lattice_hnf(IntegerMatrix.from_rows([[1, 1, 0, 0], [0, 0, 1, 1]]))


def test_torsion_refused():
    with pytest.raises(TorsionClassGroupError):
        grading_from_fan(dual_variety(P2))


def test_fan_from_bunch_p4():
    g = GradingData.from_primes([[1, 1, 1, 1, 1]], [set(range(5))])
    f = fan_from_bunch(g)
    assert is_smooth(f) and is_complete(f) and is_fano(f)
    assert anticanonical_degree(f) == 625
    assert grading_from_fan(f).same_grading(g)


def test_fan_from_bunch_fano44():
    f = fan_from_bunch(fano_grading("fano44"))
    assert is_smooth(f) and is_complete(f) and is_fano(f)
    assert anticanonical_degree(f) == 594


def test_fan_from_bunch_nonnef():
    f = fan_from_bunch(nonnef_grading())
    assert f.dim == 4
    assert is_smooth(f) and is_complete(f)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_gale_roundtrip(name):
    fan = fixture(name)
    g = grading_from_fan(fan)
    back = fan_from_bunch(g)
    assert irrelevant_ideal(back) == irrelevant_ideal(fan)
    assert grading_from_fan(back).same_grading(g)
    assert is_smooth(back) == is_smooth(fan)


def test_nonnef_cones():
    g = nonnef_grading()
    assert mov_cone(g) == cone((1, 0), (-1, 1))
    assert nef_cone(g) == cone((1, 0), (1, 1))
    assert nef_cone(g, fixture("nonnef")) == nef_cone(g)
    deg_f = class_degree(g, [1, 1, 0, 0, 2, 0])
    assert deg_f == (0, 2)
    assert class_degree(g, [0, 0, 1, 1, 0, 0]) == (0, 2)
    assert class_degree(g, [0, 0, 0, 0, 0, 2]) == (0, 2)
    assert class_degree(g, [0] * 6) == (0, 0)
    assert not is_ample(g, deg_f)


def test_rank_one_cones():
    g = grading_from_fan(fixture("p4"))
    assert mov_cone(g) == cone((1,))
    assert is_ample(g, (1,))
    assert nef_cone(grading_from_fan(P2)) == cone((1,))


@pytest.mark.parametrize("name", FANO_NAMES)
def test_anticanonical_ample(name):
    g = fano_grading(name)
    assert is_ample(g, anticanonical_class(g))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_blowup_mov_by_sampling(n):
    g = blowup_grading(BlowupModel(n, 3))
    mov = mov_cone(g)
    degs = g.degrees
    for w in product(range(-4, 5), repeat=2):
        brute = all(in_cone_2d(w, [d for j, d in enumerate(degs) if j != i]) for i in range(len(degs)))
        assert mov.contains(w) == brute


@pytest.mark.parametrize(
    "g",
    [fano_grading(n) for n in FANO_NAMES]
    + [nonnef_grading()]
    + [blowup_grading(BlowupModel(n, 3)) for n in (3, 4)]
    + [z1_grading(BlowupModel(3, d)) for d in (3, 4, 5)],
)
def test_cone_chain(g):
    nef, mov, eff = nef_cone(g), mov_cone(g), effective_cone(g)
    assert mov.contains_cone(nef)
    assert eff.contains_cone(mov)


def test_lefschetz_examples():
    for name in FANO_NAMES:
        assert lefschetz_codim_check(fano_grading(name))[1]
    assert lefschetz_codim_check(blowup_grading(BlowupModel(3, 3))) == (2, False)
    assert lefschetz_codim_check(z1_grading(BlowupModel(3, 3))) == (4, True)


@given(st.data(), st.sampled_from(FANO_NAMES + ("nonnef",)))
def test_permutation_invariance(data, name):
    g = nonnef_grading() if name == "nonnef" else fano_grading(name)
    perm = data.draw(st.permutations(range(g.num_gens)))
    h = g.permuted(perm)
    assert set(h.primes()) == {frozenset(perm[i] for i in p) for p in g.primes()}
    assert lefschetz_codim_check(h) == lefschetz_codim_check(g)
    assert mov_cone(h) == mov_cone(g)
    assert nef_cone(h) == nef_cone(g)
    assert h.degrees[perm[0]] == g.degrees[0]


def test_bad_permutation():
    with pytest.raises(ValueError):
        fano_grading("fano147").permuted(range(6))
