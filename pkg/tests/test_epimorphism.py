import random
from collections import Counter
from fractions import Fraction

import pytest

from bridgecensus.counting import ek_census, genfun
from bridgecensus.epimorphism import (
    OrsExpansion,
    _connector_options,
    admits_epimorphism,
    enumerate_expansions,
    expansion_cf,
    expansion_count,
    expansion_crossing,
    find_witness,
    psi,
    psi_bar,
    reduced_costs,
    sources,
    targets,
)
from bridgecensus.errors import BudgetExceeded, OutOfRange
from bridgecensus.knot import (
    canonicalize,
    enumerate_knots,
    escf_length,
    knot_of_cf,
)
from bridgecensus.rational_cf import (
    cf_eval,
    remove_negatives,
    sign_change_crossing,
    standardize,
)


def K(q: int, p: int):
    return canonicalize(Fraction(q, p))


def trefoil_expansion(*c: int, eps=(1, 1, 1)) -> OrsExpansion:
    return OrsExpansion(base=(3,), n=1, eps=eps, c=c)


# ---------------------------------------------------------------------------
# Single expansions
# ---------------------------------------------------------------------------

def test_expansion_cf_examples():
    assert expansion_cf(trefoil_expansion(0, 0)) == (3, 0, 3, 0, 3)
    assert expansion_cf(trefoil_expansion(-1, -1)) == (3, -2, 3, -2, 3)
    assert expansion_cf(trefoil_expansion(0, -1)) == (3, 0, 3, -2, 3)


def test_expansion_cf_reverses_odd_blocks():
    e = OrsExpansion(base=(2, 3), n=1, eps=(1, -1, 1), c=(1, 1))
    assert expansion_cf(e) == (2, 3, 2, -3, -2, 2, 2, 3)
    assert len(expansion_cf(e)) == e.type * 2 + 2 * e.n


def test_expansion_validation():
    with pytest.raises(OutOfRange):
        OrsExpansion(base=(3,), n=1, eps=(-1, 1, 1), c=(0, 0))
    with pytest.raises(OutOfRange):
        OrsExpansion(base=(3,), n=1, eps=(1, -1, 1), c=(0, 1))
    with pytest.raises(OutOfRange):
        OrsExpansion(base=(1, 3), n=1, eps=(1, 1, 1), c=(0, 0))
    with pytest.raises(OutOfRange):
        OrsExpansion(base=(3,), n=0, eps=(1,), c=())


def test_indicators():
    e = trefoil_expansion(-1, 2, eps=(1, 1, -1))
    assert psi(e, 1) == 1
    assert psi_bar(e, 1) == 1
    assert psi_bar(e, 2) == 1
    assert psi(e, 2) == 0
    zero = trefoil_expansion(0, 0)
    assert psi(zero, 1) == psi_bar(zero, 1) == 0


def test_reduced_costs():
    assert reduced_costs(trefoil_expansion(0, 0)) == (0, 0)
    assert reduced_costs(trefoil_expansion(-1, -1)) == (0, 0)
    assert reduced_costs(trefoil_expansion(1, 0)) == (2, 0)


def test_expansion_crossing_examples():
    assert expansion_crossing(trefoil_expansion(0, -1)) == 9
    assert expansion_crossing(trefoil_expansion(0, 0)) == 9
    e = OrsExpansion(base=(2, 3), n=1, eps=(1, 1, 1), c=(0, 0))
    assert expansion_crossing(e) == 15
    assert sum(standardize(expansion_cf(e))) == 15


def test_connector_options_realize_cost():
    for j in range(6):
        for c, eps_next in _connector_options(j, 1):
            e = trefoil_expansion(c, 0, eps=(1, eps_next, eps_next))
            assert reduced_costs(e)[0] == j
        # eps_2 = -1 needs a nonzero first connector
        for c, eps_next in _connector_options(j, -1):
            e = trefoil_expansion(-1, c, eps=(1, -1, eps_next))
            assert reduced_costs(e)[1] == j


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def test_enumerate_trefoil_floor(trefoil):
    assert len(list(enumerate_expansions(trefoil, 9))) == 4
    assert list(enumerate_expansions(trefoil, 8)) == []


def test_expansion_count_matches_enumeration(trefoil, figure_eight):
    for target in (trefoil, figure_eight, K(3, 7)):
        for top in range(3 * target.crossing, 20):
            assert expansion_count(target.crossing, top) == len(
                list(enumerate_expansions(target, top))
            )
            assert expansion_count(target.crossing, top, exact=True) == len(
                list(enumerate_expansions(target, top, exact=True))
            )


def test_enumeration_is_duplicate_free(trefoil):
    seen = list(enumerate_expansions(trefoil, 16))
    assert len(seen) == len(set(seen))
    for e in seen:
        assert len(expansion_cf(e)) == e.type + 2 * e.n
        assert sum(reduced_costs(e)) + e.type * 3 == expansion_crossing(e)


def test_sources_examples(trefoil):
    found = sources(trefoil, 9)
    assert set(found) == {K(1, 9), K(5, 27), K(19, 45)}
    assert sum(len(w) for w in found.values()) == 4

    found = sources(trefoil, 10)
    by_crossing = [k.crossing for k in found]
    assert by_crossing.count(9) == 3
    assert by_crossing.count(10) == 4
    assert by_crossing == sorted(by_crossing)

    assert sources(K(1, 5), 14) == {}
    assert len(sources(K(3, 7), 15)) == 4


def test_sources_budget(trefoil):
    with pytest.raises(BudgetExceeded):
        sources(trefoil, 12, budget=10)


def test_witnesses_define_their_source(trefoil):
    for source, witnesses in sources(trefoil, 13).items():
        for e in witnesses:
            assert knot_of_cf(expansion_cf(e)) == source
            assert e.base == trefoil.std_cf


def test_sources_match_generating_function(trefoil, figure_eight):
    for target in (trefoil, figure_eight, K(3, 7), K(5, 27)):
        found = sources(target, 27)
        series = genfun(target, 27)
        for c in range(3, 28):
            count = sum(1 for k in found if k.crossing == c)
            assert count == series.coefficient(c), (target, c)


def test_crossing_formula_on_every_small_expansion():
    coverage: Counter = Counter()
    checked = 0
    for crossing in range(3, 8):
        for target in enumerate_knots(crossing):
            for e in enumerate_expansions(target, 21):
                cf = expansion_cf(e)
                expected = expansion_crossing(e)
                assert sum(standardize(cf)) == expected, e
                assert sign_change_crossing(cf) == expected, e
                assert knot_of_cf(cf).crossing == expected, e
                remove_negatives(cf, coverage)
                checked += 1
    assert checked == sum(
        expansion_count(crossing, 21) * len(enumerate_knots(crossing))
        for crossing in range(3, 8)
    )
    assert coverage["euclid_fallback"] == 0


def test_crossing_formula_fuzz_campaign():
    rng = random.Random(1729)
    bases = [
        base
        for crossing in range(3, 8)
        for k in sorted(enumerate_knots(crossing))
        for base in sorted({k.std_cf, k.std_cf[::-1]})
    ]
    checked = 0
    while checked < 10_000:
        base = rng.choice(bases)
        floor = sum(base)
        types = [n for n in range(1, 5) if (2 * n + 1) * floor <= 25]
        if not types:
            continue
        n = rng.choice(types)
        k = rng.randint(0, 25 - (2 * n + 1) * floor)

        costs = [0] * (2 * n)
        for _ in range(k):
            costs[rng.randrange(2 * n)] += 1
        eps, c = [1], []
        for j in costs:
            ci, eps_next = rng.choice(_connector_options(j, eps[-1]))
            c.append(ci)
            eps.append(eps_next)

        e = OrsExpansion(base=base, n=n, eps=tuple(eps), c=tuple(c))
        cf = expansion_cf(e)
        expected = expansion_crossing(e)
        assert expected == floor * (2 * n + 1) + k
        assert sum(standardize(cf)) == expected
        assert sign_change_crossing(cf) == expected
        assert cf_eval(cf) == cf_eval(standardize(cf))
        checked += 1


# ---------------------------------------------------------------------------
# Epimorphism decisions
# ---------------------------------------------------------------------------

def test_find_witness_examples(trefoil):
    witness = find_witness(K(5, 27), trefoil)
    assert witness.c == (0, -1)
    assert find_witness(K(19, 45), trefoil).c == (-1, -1)


def test_admits_epimorphism_examples(trefoil, figure_eight):
    assert admits_epimorphism(K(5, 27), trefoil)
    assert admits_epimorphism(K(1, 45), K(1, 15))
    assert not admits_epimorphism(K(1, 9), figure_eight)
    assert not admits_epimorphism(figure_eight, trefoil)
    assert not admits_epimorphism(trefoil, trefoil)


def test_1_45_maps_onto_four_torus_knots():
    source = K(1, 45)
    for p in (3, 5, 9, 15):
        witness = find_witness(source, K(1, p))
        assert witness is not None
        assert set(witness.c) == {0}


def test_transitivity(trefoil):
    assert admits_epimorphism(K(1, 45), K(1, 15))
    assert admits_epimorphism(K(1, 15), trefoil)
    assert admits_epimorphism(K(1, 45), trefoil)


def test_targets_examples(trefoil):
    assert set(targets(K(1, 9))) == {trefoil}
    found = targets(K(5, 27))
    assert list(found) == [trefoil]
    assert found[trefoil].c == (0, -1)


def test_knots_up_to_8_crossings_are_minimal():
    for n in range(3, 9):
        for k in enumerate_knots(n):
            assert targets(k) == {}


def test_targets_agree_with_census():
    census = ek_census(15)
    for source, found in list(census.items())[:25]:
        assert set(targets(source)) == set(found)


def test_distinct_targets_have_distinct_escf_lengths():
    for n in range(9, 19):
        for source, found in ek_census(n).items():
            lengths = [escf_length(t) for t in found]
            assert len(lengths) == len(set(lengths)), source
