import pytest

from coxkit.fan import (
    Fan,
    anticanonical_degree,
    anticanonical_polytope,
    dual_variety,
    irrelevant_ideal,
    is_complete,
    is_fano,
    is_smooth,
    validate_fan,
)
from coxkit.fixtures import FANO_NAMES, FIXTURE_NAMES, fixture, hirzebruch, weighted_p112
from coxkit.monomial import vanishing_codim

P2 = Fan(2, [(1, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}])


def test_p2_valid_and_invalid():
    assert validate_fan(P2)
    bad = Fan(2, [(1, 0), (0, 1), (-1, -1)], [{0, 1}, {0, 1, 2}])
    assert not validate_fan(bad).ok


def test_non_primitive_ray_message():
    v = validate_fan(Fan(2, [(2, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}]))
    assert "ray 1 not primitive" in v.violations


def test_overlapping_cones_rejected():
    f = Fan(2, [(1, 0), (0, 1), (1, 1)], [{0, 1}, {0, 2}])
    assert not validate_fan(f)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_validate(name):
    assert validate_fan(fixture(name)).ok


def test_smoothness():
    assert is_smooth(fixture("p4"))
    assert not is_smooth(weighted_p112())
    assert is_smooth(fixture("fano44"))


def test_completeness():
    assert is_complete(P2)
    assert not is_complete(Fan(2, P2.rays, [{0, 1}, {1, 2}]))
    for name in FANO_NAMES:
        assert is_complete(fixture(name))


def test_anticanonical_polytopes():
    assert set(anticanonical_polytope(P2).vertices) == {(-1, -1), (2, -1), (-1, 2)}
    assert anticanonical_degree(P2) == 9
    assert anticanonical_degree(fixture("p4")) == 625
    assert anticanonical_degree(fixture("fano44")) == 594


def test_fano_flags():
    assert is_fano(P2)
    assert not is_fano(hirzebruch(2))
    assert is_fano(hirzebruch(1))
    for name in FANO_NAMES:
        assert is_fano(fixture(name))


def test_dual_variety():
    d = dual_variety(fixture("p4"))
    assert d.num_rays == 5
    assert vanishing_codim(irrelevant_ideal(d)) == 5
    dp2 = dual_variety(P2)
    assert set(dp2.rays) == {(-1, -1), (2, -1), (-1, 2)}
    assert vanishing_codim(irrelevant_ideal(dual_variety(fixture("fano44")))) == 3


def test_double_dual_degree():
    for f in (P2, fixture("fano70")):
        d = dual_variety(f)
        assert is_fano(d)
        assert anticanonical_degree(dual_variety(d)) == anticanonical_degree(f)


def test_irrelevant_ideal():
    p4 = irrelevant_ideal(fixture("p4"))
    assert set(p4.generators) == {frozenset({i}) for i in range(5)}
    primes = set(irrelevant_ideal(fixture("fano44")).minimal_primes())
    assert primes == {frozenset({0, 1, 4}), frozenset({2, 3, 5})}
    affine = Fan(2, [(1, 0), (0, 1)], [{0, 1}])
    assert irrelevant_ideal(affine).is_unit
