"""Tests for the brute-force census."""

import math

import pytest

from trivalent.census import (
    CENSUS_CAP_GENERAL,
    CENSUS_CAP_TRIVALENT,
    count_transitive_pairs,
    enumerate_normal,
    enumerate_size,
    pointed_structures,
)
from trivalent.diagram import (
    Diagram,
    automorphism_order,
    automorphisms,
    canonical_code,
    is_normal,
    parse_diagram_text,
)

# pointed and unpointed class counts per size, from the exhaustive tables
TRIVALENT_POINTED = [1, 1, 4, 8, 5, 22, 42, 40, 120]
TRIVALENT_UNPOINTED = [1, 1, 2, 2, 1, 8, 6, 7, 14]


def test_trivalent_counts_to_size_9():
    for n in range(1, 10):
        report = enumerate_size(n)
        assert report.pointed_classes == TRIVALENT_POINTED[n - 1]
        assert report.unpointed_classes == TRIVALENT_UNPOINTED[n - 1]
        assert report.labelled_connected == report.pointed_classes * math.factorial(n - 1)


def test_labelled_counts_match_naive_mode():
    # the naive mode is the independent oracle for the backtracking enumerator
    for n in range(1, 7):
        assert count_transitive_pairs(n) == enumerate_size(n).labelled_connected


def test_general_labelled_counts_match_naive_mode():
    for n in range(1, 6):
        assert count_transitive_pairs(n, trivalent=False) == \
            enumerate_size(n, trivalent=False).labelled_connected


def test_general_counts_small():
    # frozen from the naive oracle (previous test covers the derivation)
    pointed = [enumerate_size(n, trivalent=False).pointed_classes for n in range(1, 7)]
    unpointed = [enumerate_size(n, trivalent=False).unpointed_classes for n in range(1, 7)]
    assert pointed == [1, 3, 7, 23, 71, 255]
    assert unpointed == [1, 3, 3, 10, 15, 56]


def test_exponential_formula_reproduces_disconnected_counts():
    # exp of the connected EGF reconstructed from the census equals the
    # closed-form disconnected EGF
    from fractions import Fraction

    from trivalent.counting import disconnected_egf
    from trivalent.series import TruncSeries

    order = 8
    connected = [Fraction(0)] + [
        Fraction(enumerate_size(n).labelled_connected, math.factorial(n))
        for n in range(1, order + 1)
    ]
    assert TruncSeries(order, connected).exp() == disconnected_egf(order)


def test_structures_are_canonically_labeled_and_distinct():
    for n in range(1, 8):
        seen = set()
        for rot, inv in pointed_structures(n):
            assert (rot, inv) not in seen
            seen.add((rot, inv))
            d = Diagram(rot, inv, require_trivalent=True)
            assert d.is_connected()
            # labels must equal breadth-first discovery order from arc 0
            from trivalent.diagram import _relabeling_from

            assert _relabeling_from(d, 0) == list(range(n))


def test_representatives_properties():
    for n in range(1, 8):
        report = enumerate_size(n)
        codes = set()
        for d in report.class_representatives:
            assert d.n == n
            assert d.is_connected()
            assert d.trivalent
            codes.add(canonical_code(d))
            parsed, base = parse_diagram_text(d.to_text())
            assert parsed == d and base is None
        assert len(codes) == report.unpointed_classes


def test_representatives_sorted_by_code():
    reps = enumerate_size(6).class_representatives
    codes = [canonical_code(d) for d in reps]
    assert codes == sorted(codes)


def test_general_flavor_representative_properties():
    for n in range(1, 6):
        report = enumerate_size(n, trivalent=False)
        for d in report.class_representatives:
            assert d.is_connected()
            for a in range(d.n):
                assert d.inv[d.inv[a]] == a


def test_size4_is_two_classes_of_four_pointings():
    report = enumerate_size(4)
    assert report.pointed_classes == 8
    assert report.unpointed_classes == 2
    # 8 subgroups in two classes of four: both representatives are rigid,
    # so each class carries size/|Aut| = 4 pointings
    for d in report.class_representatives:
        assert automorphism_order(d) == 1


def test_orbit_stabilizer_invariants_on_all_small_representatives():
    for n in range(1, 8):
        for d in enumerate_size(n).class_representatives:
            order = automorphism_order(d)
            assert n % order == 0
            assert is_normal(d) == (order == n)


def test_pointings_per_class_sum_to_pointed_count():
    # size/|Aut| pointings per class, summed over classes, gives the
    # pointed class count
    for n in range(1, 9):
        report = enumerate_size(n)
        total = sum(n // automorphism_order(d) for d in report.class_representatives)
        assert total == report.pointed_classes


def test_normal_counts():
    assert len(enumerate_normal(3)) == 1
    assert len(enumerate_normal(5)) == 0
    assert len(enumerate_normal(6)) == 2


def test_normal_size6_structure():
    normals = enumerate_normal(6)
    assert sorted(automorphism_order(d) for d in normals) == [6, 6]
    abelian = []
    for d in normals:
        maps = automorphisms(d)
        assert len(maps) == 6
        abelian.append(
            all(
                tuple(f[g[i]] for i in range(6)) == tuple(g[f[i]] for i in range(6))
                for f in maps
                for g in maps
            )
        )
    assert sorted(abelian) == [False, True]


def test_normal_representatives_pass_is_normal():
    for n in range(1, 8):
        report = enumerate_size(n)
        expected = [d for d in report.class_representatives if is_normal(d)]
        assert enumerate_normal(n) == expected


def test_cap_enforced():
    with pytest.raises(ValueError):
        enumerate_size(CENSUS_CAP_TRIVALENT + 1)
    with pytest.raises(ValueError):
        enumerate_size(CENSUS_CAP_GENERAL + 1, trivalent=False)
    # explicit cap override works
    report = enumerate_size(2, cap=2)
    assert report.pointed_classes == 1


def test_size_validation():
    with pytest.raises(ValueError):
        enumerate_size(0)
    with pytest.raises(ValueError):
        count_transitive_pairs(0)


def test_larger_sizes_match_series():
    from trivalent.counting import conjugacy_class_series, subgroup_series

    pointed = subgroup_series(12).integer_coefficients()
    classes = conjugacy_class_series(12).integer_coefficients()
    for n in (10, 11, 12):
        report = enumerate_size(n)
        assert report.pointed_classes == pointed[n]
        assert report.unpointed_classes == classes[n]
