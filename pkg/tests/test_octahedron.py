import math

import pytest

from chordenum.diagram import DIHEDRAL, Diagram, canonical_code, classify, enumerate_matchings
from chordenum.labelled import loopless_chord
from chordenum.octahedron import (
    HamCycle,
    OctahedronGraph,
    count_cycles,
    cycle_to_diagram,
    diagram_to_cycle,
    hamiltonian_cycles,
)
from chordenum.reflection import loopless_dihedral


def test_graph_shape():
    g = OctahedronGraph(3)
    for v in range(1, 7):
        degree = sum(1 for u in range(1, 7) if g.adjacent(v, u))
        assert degree == 4  # 2n - 2
    non_edges = [
        (u, v) for u in range(1, 7) for v in range(u + 1, 7) if not g.adjacent(u, v)
    ]
    assert non_edges == [(1, 2), (3, 4), (5, 6)]


def test_unique_cycle_on_two_pairs():
    cycles = list(hamiltonian_cycles(2))
    assert len(cycles) == 1
    assert cycles[0].vertices == (1, 3, 2, 4)
    assert cycle_to_diagram(cycles[0]).chords() == [(1, 3), (2, 4)]


def test_no_cycles_on_one_pair():
    assert count_cycles(1) == (0, 0)


def test_counts_and_identity():
    b = loopless_chord(4)
    ct = loopless_dihedral(4)
    for n in range(1, 5):
        labelled, orbit = count_cycles(n)
        assert labelled * 4 * n == b[n] * 2**n * math.factorial(n)
        assert orbit == ct[n]
    assert count_cycles(3) == (16, 2)


def test_every_cycle_gives_a_loopless_diagram():
    for cycle in hamiltonian_cycles(3):
        loops, _ = classify(cycle_to_diagram(cycle))
        assert loops == 0


def test_cycle_round_trip_preserves_canonical_forms():
    for n in (2, 3, 4):
        for cycle in hamiltonian_cycles(n):
            diagram = cycle_to_diagram(cycle)
            back, labels = diagram_to_cycle(diagram)
            assert cycle_to_diagram(back) == diagram
            assert canonical_code(cycle_to_diagram(back), DIHEDRAL) == canonical_code(
                diagram, DIHEDRAL
            )
            assert sorted(labels) == list(range(1, 2 * n + 1))


def test_diagram_round_trip_is_identity():
    for n in (2, 3, 4):
        for diagram in enumerate_matchings(n):
            if classify(diagram)[0]:
                continue
            cycle, _ = diagram_to_cycle(diagram)
            assert cycle_to_diagram(cycle) == diagram


def test_loops_are_rejected():
    with pytest.raises(ValueError):
        diagram_to_cycle(Diagram.from_chords([(1, 2), (3, 4)]))


def test_cap_is_enforced():
    with pytest.raises(ValueError):
        count_cycles(7)


def test_canonical_cycle_storage():
    c = HamCycle.canonical((3, 1, 4, 2))
    assert c.vertices == (1, 3, 2, 4)
    assert HamCycle.canonical((1, 4, 2, 3)).vertices == (1, 3, 2, 4)
