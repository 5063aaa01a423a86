import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordenum.diagram import (
    CIRCULAR,
    CYCLIC,
    DIHEDRAL,
    LINEAR,
    Diagram,
    act,
    canonical_code,
    classify,
    classify_pairing,
    edge_reflection,
    enumerate_invariant_pairings,
    enumerate_matchings,
    enumerate_pairings,
    format_diagram,
    gap_flags,
    group_elements,
    offset_code,
    parse_diagram,
    rotation,
    sectored,
    vertex_reflection,
)


def double_fact(m):
    return math.prod(range(m, 0, -2)) if m > 0 else 1


# ---------------------------------------------------------------------------
# construction and validation


def test_rejects_odd_point_count():
    with pytest.raises(ValueError):
        Diagram((0,) * 1)


def test_rejects_fixed_points_and_non_involutions():
    with pytest.raises(ValueError):
        Diagram((0, 1))  # fixed points
    with pytest.raises(ValueError):
        Diagram((1, 0, 3, 3))


def test_rejects_bad_sector_count():
    with pytest.raises(ValueError):
        Diagram((1, 0, 3, 2), sectored(3))


def test_from_chords_round_trip():
    d = Diagram.from_chords([(1, 3), (2, 4)], LINEAR)
    assert d.pairing == (2, 3, 0, 1)
    assert d.chords() == [(1, 3), (2, 4)]


def test_text_form_round_trip():
    for topology in (CIRCULAR, LINEAR, sectored(2), sectored(3)):
        for d in enumerate_matchings(3, topology):
            assert parse_diagram(format_diagram(d)) == d


def test_text_form_example():
    d = Diagram.from_chords([(1, 3), (2, 4)])
    assert format_diagram(d) == "n=2;circular;1-3,2-4"


# ---------------------------------------------------------------------------
# adjacency and classification


def test_gap_flags_topologies():
    assert gap_flags(6, CIRCULAR) == (True,) * 6
    assert gap_flags(6, LINEAR) == (True,) * 5 + (False,)
    assert gap_flags(6, sectored(3)) == (True, False, True, False, True, False)
    assert gap_flags(6, sectored(6)) == (False,) * 6


def test_sectored_one_equals_linear():
    for m in (2, 4, 6, 8):
        assert gap_flags(m, sectored(1)) == gap_flags(m, LINEAR)


def test_classify_examples():
    assert classify(Diagram.from_chords([(1, 3), (2, 4)], CIRCULAR)) == (0, 0)
    assert classify(Diagram.from_chords([(1, 4), (2, 3)], LINEAR)) == (1, 1)
    assert classify(Diagram.from_chords([(1, 2), (3, 4)], CIRCULAR)) == (2, 1)


def test_loop_monotonicity_across_topologies():
    # circular adjacency contains linear contains sectored
    for n in range(1, 5):
        flag_sets = [gap_flags(2 * n, CIRCULAR), gap_flags(2 * n, LINEAR)]
        flag_sets += [gap_flags(2 * n, sectored(d)) for d in range(2, 2 * n + 1) if (2 * n) % d == 0]
        for p in enumerate_pairings(2 * n):
            loops = [classify_pairing(p, flags)[0] for flags in flag_sets]
            assert loops[0] >= loops[1]
            assert all(loops[1] >= l for l in loops[2:])


# ---------------------------------------------------------------------------
# group actions


def test_act_rejects_non_circular():
    d = Diagram.from_chords([(1, 3), (2, 4)], LINEAR)
    with pytest.raises(ValueError):
        act(d, rotation(4, 1))
    with pytest.raises(ValueError):
        canonical_code(d, CYCLIC)


def test_act_examples():
    d = Diagram.from_chords([(1, 3), (2, 4)])
    assert act(d, rotation(4, 1)).chords() == [(1, 3), (2, 4)]
    assert act(d, rotation(4, 0)) == d
    d2 = Diagram.from_chords([(1, 2), (3, 4)])
    assert act(d2, rotation(4, 1)).chords() == [(1, 4), (2, 3)]


def test_act_is_a_group_action():
    elements = group_elements(DIHEDRAL, 8)
    for d in list(enumerate_matchings(4))[::7]:
        assert act(d, rotation(8, 0)) == d
        for g in elements[::3]:
            for h in elements[::5]:
                composed = tuple(g[h[i]] for i in range(8))
                assert act(act(d, h), g) == act(d, composed)


def test_classify_invariant_under_action():
    for n in (2, 3, 4):
        elements = group_elements(DIHEDRAL, 2 * n)
        for d in enumerate_matchings(n):
            reference = classify(d)
            for g in elements:
                assert classify(act(d, g)) == reference


def test_group_sizes():
    assert len(group_elements(CYCLIC, 8)) == 8
    assert len(group_elements(DIHEDRAL, 8)) == 16
    with pytest.raises(ValueError):
        group_elements("frieze", 8)


# ---------------------------------------------------------------------------
# canonical codes


def test_canonical_code_examples():
    assert canonical_code(Diagram.from_chords([(1, 2), (3, 4)]), CYCLIC) == (1, 3, 1, 3)
    assert canonical_code(Diagram.from_chords([(1, 3), (2, 4)]), CYCLIC) == (2, 2, 2, 2)
    # rotation by one maps {1,4},{2,3} to {1,2},{3,4}: equal codes
    a = canonical_code(Diagram.from_chords([(1, 4), (2, 3)]), DIHEDRAL)
    b = canonical_code(Diagram.from_chords([(1, 2), (3, 4)]), DIHEDRAL)
    assert a == b


def naive_canonical_code(d, kind):
    images = [act(d, g) for g in group_elements(kind, d.point_count)]
    return min(offset_code(im.pairing) for im in images)


def test_canonical_code_matches_definition():
    for n in (1, 2, 3, 4):
        for d in enumerate_matchings(n):
            for kind in (CYCLIC, DIHEDRAL):
                assert canonical_code(d, kind) == naive_canonical_code(d, kind)


def test_canonical_code_separates_orbits_exactly():
    # equal codes iff same orbit, checked exhaustively
    for n in range(6):
        for kind in (CYCLIC, DIHEDRAL):
            by_code = {}
            for d in enumerate_matchings(n):
                by_code.setdefault(canonical_code(d, kind), set()).add(d.pairing)
            for code, members in by_code.items():
                seed = next(iter(members))
                orbit = {
                    act(Diagram(seed), g).pairing
                    for g in group_elements(kind, 2 * n)
                }
                assert members == orbit


# ---------------------------------------------------------------------------
# enumeration


def test_matching_counts_are_double_factorials():
    for n in range(8):
        count = sum(1 for _ in enumerate_pairings(2 * n))
        assert count == double_fact(2 * n - 1)


def test_enumeration_order_is_fixed():
    first = [d.chords() for d in enumerate_matchings(3)]
    assert first[0] == [(1, 2), (3, 4), (5, 6)]
    assert first[1] == [(1, 2), (3, 5), (4, 6)]
    assert first[-1] == [(1, 6), (2, 5), (3, 4)]


def test_stream_partition_by_first_partner():
    full = sorted(enumerate_pairings(8))
    parts = []
    for fp in range(1, 8):
        parts.extend(enumerate_pairings(8, first_partner=fp))
    assert sorted(parts) == full


def test_invariant_enumeration_matches_filtering():
    for n in range(5):
        m = 2 * n
        elements = group_elements(DIHEDRAL, m) if m else [()]
        everything = list(enumerate_pairings(m))
        for g in elements[:: max(1, len(elements) // 6)]:
            fixed = sorted(
                p for p in everything if all(p[g[i]] == g[j] for i, j in enumerate(p))
            )
            assert sorted(enumerate_invariant_pairings(m, g)) == fixed


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.data())
def test_offsets_shift_under_rotation(n, data):
    # property behind the fast canonical code
    everything = list(enumerate_pairings(2 * n))
    p = data.draw(st.sampled_from(everything))
    s = data.draw(st.integers(min_value=0, max_value=2 * n - 1))
    rotated = act(Diagram(p), rotation(2 * n, s)).pairing
    o = offset_code(p)
    expected = tuple(o[(i - s) % (2 * n)] for i in range(2 * n))
    assert offset_code(rotated) == expected


def test_reflection_formulas_fix_expected_points():
    sigma = vertex_reflection(8, 0)
    assert sigma[0] == 0 and sigma[4] == 4
    tau = edge_reflection(8, 7)
    assert tau[7] == 0 and tau[3] == 4
