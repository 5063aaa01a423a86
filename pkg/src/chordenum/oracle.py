"""Brute-force ground truth by exhaustive matching enumeration.

Everything here enumerates all (2n-1)!! matchings and filters; no
symmetry shortcuts, no caching.  The recurrence modules are validated
against these counts before their tables are trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagram import (
    CIRCULAR,
    CYCLIC,
    DIHEDRAL,
    canonical_pairing_code,
    classify_pairing,
    edge_reflection,
    enumerate_pairings,
    gap_flags,
    group_elements,
    rotation,
    vertex_reflection,
)

DEFAULT_CAP = 9

FAMILIES = ("all", "loopless", "simple")


class OracleCapError(ValueError):
    """Raised when a request would enumerate more matchings than the cap allows."""


def _check_cap(n: int, cap: int):
    if n < 0:
        raise ValueError(f"chord count must be nonnegative, got {n}")
    if n > cap:
        raise OracleCapError(f"n={n} exceeds the enumeration cap {cap}")


def in_family(family: str, loops: int, parallels: int) -> bool:
    if family == "all":
        return True
    if family == "loopless":
        return loops == 0
    if family == "simple":
        return loops == 0 and parallels == 0
    raise ValueError(f"unknown family {family!r}")


def _is_fixed(pairing, element) -> bool:
    for i, j in enumerate(pairing):
        if pairing[element[i]] != element[j]:
            return False
    return True


def count_labelled(n: int, topology, family: str, cap: int = DEFAULT_CAP) -> int:
    """Number of n-chord matchings in the family under the topology."""
    _check_cap(n, cap)
    flags = gap_flags(2 * n, topology)
    total = 0
    for p in enumerate_pairings(2 * n):
        loops, parallels = classify_pairing(p, flags)
        if in_family(family, loops, parallels):
            total += 1
    return total


def classify_table(c: int, topology, cap: int = DEFAULT_CAP) -> dict[tuple[int, int], int]:
    """Distribution of (loop count, parallel pair count) over all c-chord matchings."""
    _check_cap(c, cap)
    flags = gap_flags(2 * c, topology)
    table: dict[tuple[int, int], int] = {}
    for p in enumerate_pairings(2 * c):
        key = classify_pairing(p, flags)
        table[key] = table.get(key, 0) + 1
    return table


def count_rotation_fixed(n: int, d: int, family: str, cap: int = DEFAULT_CAP) -> int:
    """Circular family diagrams fixed by the rotation of order d."""
    _check_cap(n, cap)
    if n == 0:
        return 1 if d == 1 else 0
    if (2 * n) % d != 0:
        raise ValueError(f"order {d} does not divide {2 * n} points")
    element = rotation(2 * n, 2 * n // d)
    flags = gap_flags(2 * n, CIRCULAR)
    total = 0
    for p in enumerate_pairings(2 * n):
        if _is_fixed(p, element) and in_family(family, *classify_pairing(p, flags)):
            total += 1
    return total


def count_reflection_fixed(n: int, axis_type: str, family: str, cap: int = DEFAULT_CAP) -> int:
    """Circular family diagrams fixed by one representative reflection.

    The vertex axis runs through points 1 and n+1, the edge axis through
    the midpoints of gaps (2n, 1) and (n, n+1); all axes of a type fix
    equally many diagrams, so one representative suffices.
    """
    _check_cap(n, cap)
    if axis_type == "vertex":
        element = vertex_reflection(2 * n, 0)
    elif axis_type == "edge":
        element = edge_reflection(2 * n, 2 * n - 1)
    else:
        raise ValueError(f"unknown axis type {axis_type!r}")
    flags = gap_flags(2 * n, CIRCULAR)
    total = 0
    for p in enumerate_pairings(2 * n):
        if _is_fixed(p, element) and in_family(family, *classify_pairing(p, flags)):
            total += 1
    return total


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True)
class OrbitReport:
    """Orbit count of a family under a group, counted two independent ways."""

    n: int
    group: str
    family: str
    orbit_count: int
    fixed_counts: dict
    group_order: int

    @property
    def fixed_total(self) -> int:
        return sum(self.fixed_counts.values())

    @property
    def burnside_average(self) -> int:
        if self.fixed_total % self.group_order:
            raise ArithmeticError(
                f"fixed-point total {self.fixed_total} is not divisible by {self.group_order}"
            )
        return self.fixed_total // self.group_order

    def check_burnside(self):
        if self.orbit_count * self.group_order != self.fixed_total:
            raise AssertionError(
                f"Burnside identity fails for n={self.n} {self.group} {self.family}: "
                f"{self.orbit_count} * {self.group_order} != {self.fixed_total}"
            )


def count_orbits(n: int, group: str, family: str, cap: int = DEFAULT_CAP) -> OrbitReport:
    """Count family orbits by canonical codes and by averaging fixed counts.

    ``fixed_counts`` maps element classes to totals over the class:
    ("rotation", d) covers the phi(d) rotations of order d, and
    ("reflection", axis type) covers the n axes of that type.  The
    Burnside identity orbit_count * |G| = sum(fixed_counts) is asserted.
    """
    _check_cap(n, cap)
    if group not in (CYCLIC, DIHEDRAL):
        raise ValueError(f"unknown group kind {group!r}")
    m = 2 * n
    flags = gap_flags(m, CIRCULAR)
    elements = group_elements(group, m)

    # class label for each element, in group_elements order
    if m == 0:
        labels = [("rotation", 1)]
    else:
        labels = [("rotation", m // math.gcd(s, m) if s else 1) for s in range(m)]
        if group == DIHEDRAL:
            labels += [("reflection", "vertex")] * n + [("reflection", "edge")] * n

    codes = set()
    fixed = {label: 0 for label in labels}
    for p in enumerate_pairings(m):
        if not in_family(family, *classify_pairing(p, flags)):
            continue
        codes.add(canonical_pairing_code(p, group))
        for element, label in zip(elements, labels):
            if _is_fixed(p, element):
                fixed[label] += 1

    report = OrbitReport(
        n=n,
        group=group,
        family=family,
        orbit_count=len(codes),
        fixed_counts=fixed,
        group_order=len(elements),
    )
    report.check_burnside()
    return report


def check_line(name: str, n: int, expected, got) -> tuple[str, bool]:
    """One line of the verification report."""
    ok = expected == got
    status = "OK" if ok else "FAIL"
    return f"CHECK {name} n={n} expected={expected} got={got} {status}", ok


# ---------------------------------------------------------------------------
# One-pass sweep used by the CLI verify command and the acceptance tests.


@dataclass
class SweepResult:
    n: int
    labelled: dict           # (topology name, family) -> count
    tables: dict             # topology name -> {(k, l): count}
    rotation_fixed: dict     # (d, family) -> count
    reflection_fixed: dict   # (axis type, family) -> count
    orbits: dict             # (group, family) -> OrbitReport


def full_sweep(n: int, cap: int = DEFAULT_CAP) -> SweepResult:
    """Everything the verify command compares, from a single enumeration.

    Faithfulness to the one-op-per-call functions above is covered by a
    dedicated test at small n.
    """
    _check_cap(n, cap)
    m = 2 * n
    circ_flags = gap_flags(m, CIRCULAR)
    lin_flags = gap_flags(m, "linear")

    div = divisors(m) if n else [1]
    rot_elements = {d: rotation(m, m // d) for d in div if n}
    vref = vertex_reflection(m, 0) if n else None
    eref = edge_reflection(m, m - 1) if n else None
    all_elements = group_elements(DIHEDRAL, m) if n else []
    labels = []
    if n:
        for s in range(m):
            labels.append(("rotation", m // math.gcd(s, m) if s else 1))
        labels += [("reflection", "vertex")] * n + [("reflection", "edge")] * n

    labelled = {}
    tables = {CIRCULAR: {}, "linear": {}}
    rotation_fixed = {}
    reflection_fixed = {}
    codes = {(g, f): set() for g in (CYCLIC, DIHEDRAL) for f in FAMILIES}
    fixed = {f: {label: 0 for label in labels} for f in FAMILIES}

    def bump(d, key):
        d[key] = d.get(key, 0) + 1

    for p in enumerate_pairings(m):
        circ = classify_pairing(p, circ_flags)
        lin = classify_pairing(p, lin_flags)
        bump(tables[CIRCULAR], circ)
        bump(tables["linear"], lin)
        memberships = {f: in_family(f, *circ) for f in FAMILIES}
        lin_memberships = {f: in_family(f, *lin) for f in FAMILIES}
        for f in FAMILIES:
            if lin_memberships[f]:
                bump(labelled, ("linear", f))
            if not memberships[f]:
                continue
            bump(labelled, (CIRCULAR, f))
            for d, element in rot_elements.items():
                if _is_fixed(p, element):
                    bump(rotation_fixed, (d, f))
            if vref and _is_fixed(p, vref):
                bump(reflection_fixed, ("vertex", f))
            if eref and _is_fixed(p, eref):
                bump(reflection_fixed, ("edge", f))
            codes[(CYCLIC, f)].add(canonical_pairing_code(p, CYCLIC))
            codes[(DIHEDRAL, f)].add(canonical_pairing_code(p, DIHEDRAL))
            counts = fixed[f]
            for element, label in zip(all_elements, labels):
                if _is_fixed(p, element):
                    counts[label] += 1

    orbits = {}
    for g in (CYCLIC, DIHEDRAL):
        order = m if g == CYCLIC else 2 * m
        for f in FAMILIES:
            sub = {
                label: c
                for label, c in fixed[f].items()
                if g == DIHEDRAL or label[0] == "rotation"
            }
            report = OrbitReport(
                n=n,
                group=g,
                family=f,
                orbit_count=len(codes[(g, f)]),
                fixed_counts=sub,
                group_order=order if n else 1,
            )
            if n:
                report.check_burnside()
            orbits[(g, f)] = report

    return SweepResult(
        n=n,
        labelled=labelled,
        tables=tables,
        rotation_fixed=rotation_fixed,
        reflection_fixed=reflection_fixed,
        orbits=orbits,
    )
