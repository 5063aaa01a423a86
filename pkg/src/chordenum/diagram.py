"""Chord and linear diagrams as fixed-point-free involutions.

A diagram on 2n points is stored as a partner table ``pairing`` indexed
0..2n-1 (``pairing[i]`` is the partner of point ``i``).  Points are
numbered 1..2n in all text I/O; the 0-based table is an internal detail.

The ``topology`` decides which consecutive points count as neighbours:

* ``CIRCULAR`` -- every gap, including the one between points 2n and 1;
* ``LINEAR``   -- the circular gaps minus (2n, 1);
* ``sectored(d)`` -- the circle cut into d sectors of m = 2n/d points
  each; every seam (jm, jm+1) is cut, including (2n, 1).

``sectored(1)`` therefore coincides with ``LINEAR``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

CIRCULAR = "circular"
LINEAR = "linear"

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"


def sectored(d: int):
    """Topology value for a diagram cut into d equal sectors."""
    if d < 1:
        raise ValueError(f"sector count must be positive, got {d}")
    return ("sectored", d)


def topology_name(topology) -> str:
    if topology == CIRCULAR or topology == LINEAR:
        return topology
    kind, d = topology
    return f"sectored({d})"


def parse_topology(text: str):
    if text in (CIRCULAR, LINEAR):
        return text
    m = re.fullmatch(r"sectored\((\d+)\)", text)
    if m is None:
        raise ValueError(f"unknown topology {text!r}")
    return sectored(int(m.group(1)))


def gap_flags(point_count: int, topology) -> tuple[bool, ...]:
    """Whether points i and i+1 (cyclically, 0-based) are neighbours."""
    flags = [True] * point_count
    if point_count == 0:
        return ()
    if topology == CIRCULAR:
        pass
    elif topology == LINEAR:
        flags[point_count - 1] = False
    else:
        kind, d = topology
        if kind != "sectored":
            raise ValueError(f"unknown topology {topology!r}")
        if point_count % d != 0:
            raise ValueError(f"{d} sectors do not divide {point_count} points")
        m = point_count // d
        for j in range(1, d + 1):
            flags[j * m - 1] = False
    return tuple(flags)


@dataclass(frozen=True)
class Diagram:
    """An immutable perfect matching on 2n points with a topology flag."""

    pairing: tuple[int, ...]
    topology: object = CIRCULAR

    def __post_init__(self):
        p = self.pairing
        m = len(p)
        if m % 2 != 0:
            raise ValueError(f"point count must be even, got {m}")
        for i, j in enumerate(p):
            if not 0 <= j < m or j == i or p[j] != i:
                raise ValueError("pairing is not a fixed-point-free involution")
        gap_flags(m, self.topology)  # validates sector divisibility

    @property
    def point_count(self) -> int:
        return len(self.pairing)

    @property
    def chord_count(self) -> int:
        return len(self.pairing) // 2

    @classmethod
    def from_chords(cls, chords, topology=CIRCULAR, point_count=None) -> "Diagram":
        """Build a diagram from 1-based chord pairs such as [(1, 3), (2, 4)]."""
        chords = list(chords)
        if point_count is None:
            point_count = 2 * len(chords)
        p = [-1] * point_count
        for a, b in chords:
            if not (1 <= a <= point_count and 1 <= b <= point_count):
                raise ValueError(f"chord ({a},{b}) out of range 1..{point_count}")
            p[a - 1], p[b - 1] = b - 1, a - 1
        if -1 in p:
            raise ValueError("chords do not cover every point")
        return cls(tuple(p), topology)

    def chords(self) -> list[tuple[int, int]]:
        """1-based chords, smaller endpoint first, sorted by smaller endpoint."""
        return [(i + 1, j + 1) for i, j in enumerate(self.pairing) if i < j]


def format_diagram(diagram: Diagram) -> str:
    body = ",".join(f"{a}-{b}" for a, b in diagram.chords())
    return f"n={diagram.chord_count};{topology_name(diagram.topology)};{body}"


def parse_diagram(text: str) -> Diagram:
    head, topo, body = text.split(";")
    n = int(head.removeprefix("n="))
    chords = []
    if body:
        for part in body.split(","):
            a, b = part.split("-")
            chords.append((int(a), int(b)))
    if len(chords) != n:
        raise ValueError(f"expected {n} chords, found {len(chords)}")
    return Diagram.from_chords(chords, parse_topology(topo), point_count=2 * n)


# ---------------------------------------------------------------------------
# Loop / parallel classification


def _chords_cross(a: int, b: int, c: int, d: int) -> bool:
    # endpoints sorted within each chord; standard interleaving test
    return (a < c < b < d) or (c < a < d < b)


def classify_pairing(pairing, flags) -> tuple[int, int]:
    """(loop count, parallel pair count) of a partner table under gap flags."""
    m = len(pairing)
    chords = [(i, j) for i, j in enumerate(pairing) if i < j]

    def adjacent(a, b):  # a < b
        return (b == a + 1 and flags[a]) or (a == 0 and b == m - 1 and flags[m - 1])

    loops = sum(1 for a, b in chords if adjacent(a, b))
    parallels = 0
    for idx, (a, b) in enumerate(chords):
        for c, d in chords[idx + 1:]:
            if _chords_cross(a, b, c, d):
                continue
            if (adjacent(*sorted((a, c))) and adjacent(*sorted((b, d)))) or (
                adjacent(*sorted((a, d))) and adjacent(*sorted((b, c)))
            ):
                parallels += 1
    return loops, parallels


def classify(diagram: Diagram) -> tuple[int, int]:
    """Count loops and unordered parallel chord pairs of a diagram.

    A loop is a chord joining neighbouring points.  Two chords are a
    parallel pair when they do not cross and their endpoints are
    neighbours on both sides; a pair qualifying on both sides at once
    (possible only on 4 points) still counts once.  Pairs involving a
    loop are counted.
    """
    return classify_pairing(diagram.pairing, gap_flags(diagram.point_count, diagram.topology))


# ---------------------------------------------------------------------------
# Group actions and canonical codes


def rotation(point_count: int, shift: int) -> tuple[int, ...]:
    return tuple((i + shift) % point_count for i in range(point_count))


def vertex_reflection(point_count: int, axis_point: int = 0) -> tuple[int, ...]:
    """Reflection fixing ``axis_point`` and the opposite point."""
    return tuple((2 * axis_point - i) % point_count for i in range(point_count))


def edge_reflection(point_count: int, gap: int = 0) -> tuple[int, ...]:
    """Reflection through the midpoints of gap (gap, gap+1) and its opposite."""
    return tuple((2 * gap + 1 - i) % point_count for i in range(point_count))


def group_elements(kind: str, point_count: int) -> list[tuple[int, ...]]:
    """All elements of the cyclic (2n) or dihedral (4n) group as point maps.

    On 0 points both groups degenerate to the trivial group.
    """
    if kind not in (CYCLIC, DIHEDRAL):
        raise ValueError(f"unknown group kind {kind!r}")
    if point_count == 0:
        return [()]
    elements = [rotation(point_count, s) for s in range(point_count)]
    if kind == DIHEDRAL:
        half = point_count // 2
        elements += [vertex_reflection(point_count, p) for p in range(half)]
        elements += [edge_reflection(point_count, p) for p in range(half)]
    return elements


def act(diagram: Diagram, element: tuple[int, ...]) -> Diagram:
    """Relabel the points of a circular diagram by a group element."""
    if diagram.topology != CIRCULAR:
        raise ValueError("group actions are defined on circular diagrams only")
    p = diagram.pairing
    new = [0] * len(p)
    for i, j in enumerate(p):
        new[element[i]] = element[j]
    return Diagram(tuple(new), CIRCULAR)


def offset_code(pairing) -> tuple[int, ...]:
    m = len(pairing)
    return tuple((pairing[i] - i) % m for i in range(m))


def _min_cyclic_shift(seq: tuple[int, ...]) -> tuple[int, ...]:
    m = len(seq)
    if m == 0:
        return seq
    doubled = seq + seq
    return min(tuple(doubled[s:s + m]) for s in range(m))


def canonical_pairing_code(pairing, kind: str) -> tuple[int, ...]:
    """Lexicographically least offset sequence over all group images.

    Rotating a diagram cyclically shifts its offset sequence, and
    reflecting it negates and reverses it, so the minimum over group
    images reduces to minima over shifts of two fixed sequences.
    """
    if kind not in (CYCLIC, DIHEDRAL):
        raise ValueError(f"unknown group kind {kind!r}")
    o = offset_code(pairing)
    best = _min_cyclic_shift(o)
    if kind == DIHEDRAL and len(o) > 0:
        m = len(o)
        mirrored = tuple((m - o[-i % m]) % m for i in range(m))
        best = min(best, _min_cyclic_shift(mirrored))
    return best


def canonical_code(diagram: Diagram, kind: str) -> tuple[int, ...]:
    if diagram.topology != CIRCULAR:
        raise ValueError("canonical codes are defined on circular diagrams only")
    return canonical_pairing_code(diagram.pairing, kind)


# ---------------------------------------------------------------------------
# Exhaustive enumeration


def enumerate_pairings(point_count: int, first_partner: int | None = None):
    """Yield every partner table on the given points exactly once.

    The smallest free point is always paired with each larger partner in
    ascending order, which fixes the stream order.  ``first_partner``
    restricts point 0 to a single partner, giving the 2n-1 independent
    branches of the stream.
    """
    if point_count % 2 != 0:
        raise ValueError(f"point count must be even, got {point_count}")
    p = [-1] * point_count

    def fill(start):
        a = start
        while a < point_count and p[a] != -1:
            a += 1
        if a == point_count:
            yield tuple(p)
            return
        for b in range(a + 1, point_count):
            if p[b] == -1:
                p[a], p[b] = b, a
                yield from fill(a + 1)
                p[a], p[b] = -1, -1

    if point_count == 0:
        yield ()
        return
    if first_partner is None:
        yield from fill(0)
    else:
        if not 1 <= first_partner < point_count:
            raise ValueError(f"first partner {first_partner} out of range")
        p[0], p[first_partner] = first_partner, 0
        yield from fill(1)


def enumerate_matchings(n: int, topology=CIRCULAR, first_partner: int | None = None):
    """Yield the (2n-1)!! diagrams with n chords in a fixed order."""
    if n < 0:
        raise ValueError(f"chord count must be nonnegative, got {n}")
    for p in enumerate_pairings(2 * n, first_partner):
        yield Diagram(p, topology)


def enumerate_invariant_pairings(point_count: int, element: tuple[int, ...]):
    """Yield the partner tables fixed by a point permutation.

    Chords are added a whole orbit at a time: the smallest unmatched point
    is joined to a candidate partner and the chord's orbit under the
    permutation is closed, rejecting any overlap.  Equivalent to filtering
    ``enumerate_pairings`` by invariance, but explores only the fixed
    subspace.
    """
    if point_count % 2 != 0:
        raise ValueError(f"point count must be even, got {point_count}")
    p = [-1] * point_count

    def close_orbit(a, b):
        added = []
        x, y = a, b
        while True:
            if p[x] == -1 and p[y] == -1 and x != y:
                p[x], p[y] = y, x
                added.append(x)
            elif p[x] != y:
                for u in added:
                    v = p[u]
                    p[u] = p[v] = -1
                return None
            x, y = element[x], element[y]
            if (x, y) == (a, b) or (x, y) == (b, a):
                return added

    def fill():
        a = 0
        while a < point_count and p[a] != -1:
            a += 1
        if a == point_count:
            yield tuple(p)
            return
        for b in range(a + 1, point_count):
            if p[b] != -1:
                continue
            added = close_orbit(a, b)
            if added is None:
                continue
            yield from fill()
            for u in added:
                v = p[u]
                p[u] = p[v] = -1

    if point_count == 0:
        yield ()
        return
    yield from fill()
