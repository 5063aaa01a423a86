"""Loopless chord diagrams as Hamiltonian cycles of cocktail-party graphs.

The n-dimensional octahedron (cocktail-party graph) has vertices 1..2n in
antipodal pairs (2i-1, 2i) and every edge except within pairs.  Drawing a
Hamiltonian cycle as a circle and joining the antipodal pairs by chords
yields a loopless chord diagram; the construction inverts exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import CIRCULAR, DIHEDRAL, Diagram, canonical_code, classify

CYCLE_CAP = 6


@dataclass(frozen=True)
class OctahedronGraph:
    n: int

    def antipode(self, v: int) -> int:
        return v + 1 if v % 2 else v - 1

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and self.antipode(u) != v

    @property
    def vertex_count(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class HamCycle:
    """A Hamiltonian cycle stored as its least rotation/direction."""

    vertices: tuple[int, ...]

    @classmethod
    def canonical(cls, seq) -> "HamCycle":
        seq = tuple(seq)
        m = len(seq)
        doubled = seq + seq
        candidates = [tuple(doubled[s:s + m]) for s in range(m)]
        rev = tuple(reversed(seq))
        doubled = rev + rev
        candidates += [tuple(doubled[s:s + m]) for s in range(m)]
        return cls(min(candidates))

    def __len__(self) -> int:
        return len(self.vertices)


def hamiltonian_cycles(n: int):
    """Yield each undirected Hamiltonian cycle exactly once.

    The search starts every cycle at vertex 1 and keeps the orientation
    with the smaller second vertex, so none of the 4n sequence forms of a
    cycle is produced twice.
    """
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    graph = OctahedronGraph(n)
    m = 2 * n
    path = [1]
    used = [False] * (m + 1)
    used[1] = True

    def extend():
        if len(path) == m:
            if graph.adjacent(path[-1], 1) and path[1] < path[-1]:
                yield HamCycle.canonical(path)
            return
        last = path[-1]
        for v in range(2, m + 1):
            if not used[v] and graph.adjacent(last, v):
                used[v] = True
                path.append(v)
                yield from extend()
                path.pop()
                used[v] = False

    yield from extend()


def cycle_to_diagram(cycle: HamCycle) -> Diagram:
    """Chords join the positions of each antipodal pair along the cycle."""
    seq = cycle.vertices
    m = len(seq)
    position = {v: i for i, v in enumerate(seq)}
    pairing = [0] * m
    for i in range(1, m, 2):
        a, b = position[i], position[i + 1]
        pairing[a], pairing[b] = b, a
    diagram = Diagram(tuple(pairing), CIRCULAR)
    loops, _ = classify(diagram)
    if loops:
        raise AssertionError("antipodal vertices were adjacent on the cycle")
    return diagram


def diagram_to_cycle(diagram: Diagram) -> tuple[HamCycle, dict[int, int]]:
    """Invert the construction: the circle walk on a relabelled octahedron.

    The j-th chord (ordered by smaller endpoint) becomes the antipodal pair
    (2j-1, 2j), with the odd vertex on the smaller endpoint.  Returns the
    cycle and the induced labelling position -> vertex (1-based).
    """
    if diagram.topology != CIRCULAR:
        raise ValueError("only circular diagrams correspond to cycles")
    loops, _ = classify(diagram)
    if loops:
        raise ValueError("diagrams with loops have no corresponding cycle")
    labels = {}
    for j, (a, b) in enumerate(diagram.chords(), start=1):
        labels[a] = 2 * j - 1
        labels[b] = 2 * j
    seq = tuple(labels[i] for i in range(1, diagram.point_count + 1))
    return HamCycle.canonical(seq), labels


def count_cycles(n: int, cap: int = CYCLE_CAP) -> tuple[int, int]:
    """(labelled cycle count, orbit count under graph automorphisms).

    Orbits are counted through the bijection: two cycles are isomorphic
    exactly when their diagrams share a dihedral canonical code.
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds the cycle enumeration cap {cap}")
    labelled = 0
    codes = set()
    for cycle in hamiltonian_cycles(n):
        labelled += 1
        codes.add(canonical_code(cycle_to_diagram(cycle), DIHEDRAL))
    return labelled, len(codes)
