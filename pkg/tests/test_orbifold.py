import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from orbikit.errors import InternalInconsistency, NotNonHyperbolic
from orbikit.orbifold import (
    INFINITY,
    NON_HYPERBOLIC_CASES,
    check_exactness,
    classify,
    classify_signature,
    detect_exceptional,
    dichotomy_report,
    divides,
    euler_characteristic,
    format_signature,
    out_of_scope_report,
    ramification_by_sweeps,
    ramification_function,
)
from orbikit.portrait import make_portrait, postcritical_set

from strategies import portraits

CORPUS = [
    "z2", "swap", "z2m2", "lattes2222", "lattes244", "lattes236", "lattes333",
    "hyperbolic5", "basilica", "rabbit",
]


def brute_force_minimal_nu(p, bound):
    """Smallest valid weights on P_f by exhaustive search over {1..bound, ∞}."""
    post = sorted(postcritical_set(p))
    choices = list(range(1, bound + 1)) + [INFINITY]
    valid = []
    for combo in itertools.product(choices, repeat=len(post)):
        nu = dict(zip(post, combo))
        if all(
            divides(nu.get(y.id, 1) * y.local_degree, nu[x])
            for x in post
            for y in p.preimages(x)
        ):
            valid.append(nu)
    minimal = [
        nu for nu in valid
        if not any(other != nu and all(other[x] <= nu[x] for x in post) for other in valid)
    ]
    assert len(minimal) == 1, "the minimal valid weight function is unique"
    return minimal[0]


def test_nu_z2(load):
    nu = ramification_function(load("z2"))
    assert nu["p"] is INFINITY and nu["q"] is INFINITY


def test_nu_z2m2(load):
    nu = ramification_function(load("z2m2"))
    assert (nu["m2"], nu["p2"], nu["cinf"]) == (2, 2, INFINITY)


def test_nu_lattes2222(load):
    nu = ramification_function(load("lattes2222"))
    assert nu.signature() == (2, 2, 2, 2)
    assert nu["c1"] == 1


@pytest.mark.parametrize("name", CORPUS)
def test_nu_matches_exhaustive_oracle(load, name):
    p = load(name)
    bound = 12 if len(postcritical_set(p)) <= 4 else 6
    expected = brute_force_minimal_nu(p, bound)
    assert dict(ramification_function(p).values) == expected


@pytest.mark.parametrize("name", CORPUS)
def test_nu_matches_sweeps(load, name):
    p = load(name)
    assert ramification_function(p) == ramification_by_sweeps(p)


@pytest.mark.parametrize(
    "sig, chi",
    [
        ((INFINITY, INFINITY), Fraction(0)),
        ((2, 4, 4), Fraction(0)),
        ((2, 3, 7), Fraction(-1, 42)),
        ((2, 2, 2), Fraction(1, 2)),
        ((), Fraction(2)),
    ],
)
def test_euler_characteristic(sig, chi):
    assert euler_characteristic(sig) == chi


def test_six_cases_are_exactly_the_zero_chi_signatures():
    # every sorted signature of length <= 4 over {2..8, ∞} with χ = 0
    weights = list(range(2, 9)) + [INFINITY]
    zero = set()
    for k in range(1, 5):
        for sig in itertools.combinations_with_replacement(weights, k):
            if euler_characteristic(sig) == 0:
                zero.add(tuple(sorted(sig)))
    assert zero == set(NON_HYPERBOLIC_CASES.values())


def test_classify_signature_spherical():
    cls = classify_signature((2, 2, 2))
    assert cls.kind == "Spherical" and cls.chi == Fraction(1, 2)


def test_classify_corpus(load):
    expected = {
        "z2": "ii", "swap": "ii", "z2m2": "22i", "lattes2222": "2222",
        "lattes244": "244", "lattes236": "236", "lattes333": "333",
    }
    for name in CORPUS:
        cls = classify(load(name))
        if name in expected:
            assert cls.kind == "NonHyperbolic" and cls.case == expected[name] and cls.chi == 0
        else:
            assert cls.kind == "Hyperbolic" and cls.chi < 0


@pytest.mark.parametrize("name", CORPUS)
def test_exactness_iff_non_hyperbolic(load, name):
    p = load(name)
    assert check_exactness(p) == classify(p).non_hyperbolic


def test_exceptional_examples(load):
    assert detect_exceptional(load("z2"))
    assert not detect_exceptional(load("z2m2"))
    assert not detect_exceptional(load("swap"))


def test_dichotomy_reports(load):
    assert dichotomy_report(load("z2")).verdict == "EXCEPTIONAL"
    r = dichotomy_report(load("z2m2"))
    assert r.verdict == "RATE CERTIFIED" and r.mechanism == "annulus two-fold lift"
    r = dichotomy_report(load("lattes2222"))
    assert r.mechanism.startswith("torus lift certificate")
    assert dichotomy_report(load("swap")).mechanism == "end-exchange annulus theorem"
    with pytest.raises(NotNonHyperbolic):
        dichotomy_report(load("basilica"))
    assert out_of_scope_report(load("basilica")).verdict == "OUT_OF_SCOPE"


def test_report_text_and_json(load):
    r = dichotomy_report(load("z2"))
    assert r.to_text().startswith("signature (∞,∞); NonHyperbolic; verdict EXCEPTIONAL")
    assert r.to_json() == {
        "signature": ["inf", "inf"],
        "chi": "0/1",
        "kind": "NonHyperbolic",
        "case": "ii",
        "verdict": "EXCEPTIONAL",
        "mechanism": None,
    }
    assert format_signature((2, 3, 6)) == "(2,3,6)"


def test_zero_chi_outside_list_is_inconsistent():
    # (2,2,2,2) with one extra weight cannot be zero, so go through the guard directly
    with pytest.raises(InternalInconsistency):
        from orbikit import orbifold

        saved = dict(orbifold._TAG_BY_SIGNATURE)
        orbifold._TAG_BY_SIGNATURE.pop((3, 3, 3))
        try:
            classify_signature((3, 3, 3))
        finally:
            orbifold._TAG_BY_SIGNATURE.update(saved)


def test_infinity_arithmetic():
    assert 2 * INFINITY is INFINITY and INFINITY * 3 is INFINITY
    assert divides(4, INFINITY) and not divides(INFINITY, 4) and divides(INFINITY, INFINITY)
    assert sorted([INFINITY, 2, 7]) == [2, 7, INFINITY]


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_nu_divisibility(p):
    nu = ramification_function(p)
    for x in postcritical_set(p):
        assert nu[x] != 1
        for y in p.preimages(x):
            assert divides(nu[y.id] * y.local_degree, nu[x])


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_structural_nu_agrees_with_sweeps(p):
    assert ramification_function(p) == ramification_by_sweeps(p)


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_no_portrait_is_spherical(p):
    assert classify(p).kind != "Spherical"


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_exactness_iff_zero_chi(p):
    assert check_exactness(p) == (classify(p).chi == 0)


@settings(max_examples=300, deadline=None)
@given(portraits())
def test_exceptional_implies_ii(p):
    if detect_exceptional(p):
        assert classify(p).case == "ii"


@settings(max_examples=50, deadline=None)
@given(portraits(max_degree=2, max_extra=3))
def test_nu_minimal_on_random_portraits(p):
    assert dict(ramification_function(p).values) == brute_force_minimal_nu(p, 8)
