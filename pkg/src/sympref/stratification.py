"""Stratification of the representation space by fixed subspaces.

The strata are the intersection closure of the element fixed spaces
(equivalently, all subspaces of the form V^H for subgroups H), ordered
by ascending codimension and then by the canonical subspace key.  The
result is deterministic for a given group, so stratum indices are
stable and can be referenced from external fiber-dimension data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .groups import FiniteMatrixGroup
from .linalg import Subspace, fixed_space


class FiberDataError(ValueError):
    """Malformed fiber-dimension document."""


class MissingFiberData(ValueError):
    """Fiber dimensions were not supplied for some strata."""

    def __init__(self, indices):
        self.indices = tuple(indices)
        super().__init__(
            "missing fiber dimensions for strata %s"
            % ", ".join(str(i) for i in self.indices)
        )


@dataclass(frozen=True)
class Stratum:
    subspace: Subspace
    codim: int
    stabilizer_order: int  # elements fixing the subspace pointwise
    covers: tuple[int, ...]  # immediate sub-strata indices


@dataclass(frozen=True)
class StratificationLattice:
    strata: tuple[Stratum, ...]
    orbits: tuple[tuple[int, ...], ...]  # orbits of strata under the group

    def __len__(self):
        return len(self.strata)


def build_lattice(group: FiniteMatrixGroup) -> StratificationLattice:
    """Intersection closure of the element fixed spaces."""
    element_fixed = [fixed_space(g) for g in group.elements]
    spaces: dict = {}
    for s in element_fixed:
        spaces.setdefault(s.key(), s)
    worklist = list(spaces.values())
    while worklist:
        s = worklist.pop()
        for t in list(spaces.values()):
            cap = s.intersect(t)
            if cap.key() not in spaces:
                spaces[cap.key()] = cap
                worklist.append(cap)

    ordered = sorted(spaces.values(), key=lambda s: (s.codim, s.key()))
    index_by_key = {s.key(): i for i, s in enumerate(ordered)}

    stabilizer_orders = [
        sum(1 for fs in element_fixed if s.is_subspace_of(fs))
        for s in ordered
    ]

    n = len(ordered)
    below = [[False] * n for _ in range(n)]
    for i, si in enumerate(ordered):
        for j, sj in enumerate(ordered):
            if i != j and sj.dim < si.dim and sj.is_subspace_of(si):
                below[i][j] = True
    covers = []
    for i in range(n):
        immediate = [
            j for j in range(n)
            if below[i][j]
            and not any(below[i][k] and below[k][j] for k in range(n))
        ]
        covers.append(tuple(immediate))

    assigned = [False] * n
    orbits = []
    gens = [group.element(i) for i in group.generator_indices()]
    for start in range(n):
        if assigned[start]:
            continue
        orbit = {start}
        frontier = [start]
        assigned[start] = True
        while frontier:
            i = frontier.pop()
            space = ordered[i]
            for g in gens:
                moved = Subspace.from_spanning(
                    space.ambient_dim,
                    [g.apply(vec) for vec in space.basis],
                    group.conductor,
                )
                j = index_by_key[moved.key()]  # lattice is group-stable
                if j not in orbit:
                    orbit.add(j)
                    assigned[j] = True
                    frontier.append(j)
        orbits.append(tuple(sorted(orbit)))

    strata = tuple(
        Stratum(
            subspace=s,
            codim=s.codim,
            stabilizer_order=stab,
            covers=cov,
        )
        for s, stab, cov in zip(ordered, stabilizer_orders, covers)
    )
    return StratificationLattice(strata=strata, orbits=tuple(orbits))


def parse_fiber_data(document) -> dict[int, int]:
    """Fiber dimensions per stratum index, from a JSON document of the
    form {"fibers": {"<stratum index>": dimension, ...}}."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FiberDataError("invalid JSON: %s" % exc) from None
    if not isinstance(document, dict):
        raise FiberDataError("fiber document must be a JSON object")
    if "fibers" not in document:
        raise FiberDataError('fiber document needs a "fibers" key')
    raw = document["fibers"]
    if not isinstance(raw, dict):
        raise FiberDataError('"fibers" must map stratum indices to dimensions')
    fibers = {}
    for key, value in raw.items():
        try:
            idx = int(key)
        except (TypeError, ValueError):
            raise FiberDataError("stratum index %r is not an integer" % key) from None
        if idx < 0:
            raise FiberDataError("stratum index %d is negative" % idx)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise FiberDataError(
                "fiber dimension for stratum %d must be a nonnegative integer" % idx
            )
        fibers[idx] = value
    return fibers


@dataclass(frozen=True)
class StratumCheck:
    stratum_index: int
    codim: int
    fiber_dim: int
    ok: bool


@dataclass(frozen=True)
class SemismallReport:
    checks: tuple[StratumCheck, ...]
    passed: bool


def semismall_check(
    lattice: StratificationLattice, fibers: dict[int, int]
) -> SemismallReport:
    """Whether a map with the given fiber dimensions over each stratum
    is semismall: every fiber dimension is at most half the stratum
    codimension.  Every stratum must come with a fiber dimension."""
    missing = [
        i for i in range(len(lattice.strata)) if i not in fibers
    ]
    if missing:
        raise MissingFiberData(missing)
    checks = []
    for i, stratum in enumerate(lattice.strata):
        fiber = fibers[i]
        checks.append(
            StratumCheck(
                stratum_index=i,
                codim=stratum.codim,
                fiber_dim=fiber,
                ok=2 * fiber <= stratum.codim,
            )
        )
    return SemismallReport(
        checks=tuple(checks), passed=all(c.ok for c in checks)
    )
