"""Reflection structure of a finite matrix group and what it implies.

An element is a symplectic reflection when its fixed space has
codimension exactly 2, and a complex reflection when the codimension is
1.  The subgroup generated by all symplectic reflections is normal; if
it is proper, the symplectic quotient V/G admits no symplectic
resolution, which is the verdict this module computes.  The positive
branch is only a necessary condition, never a claim that a resolution
exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    FiniteMatrixGroup,
    SubgroupHandle,
    generated_subgroup,
    is_normal,
)
from .linalg import ExactMatrix, fixed_space, pairing_form

VERDICT_OBSTRUCTED = "NoSymplecticResolution"
VERDICT_HOLDS = "NecessaryConditionHolds"

DUVAL_NOTE = (
    "dimension 2: the quotient is a Du Val singularity and a crepant "
    "resolution always exists"
)


@dataclass(frozen=True)
class ReflectionCensus:
    """Fixed-space codimensions per element, and the reflection indices."""

    codims: tuple[int, ...]
    symplectic_reflections: tuple[int, ...]
    complex_reflections: tuple[int, ...]

    @property
    def symplectic_reflection_count(self) -> int:
        return len(self.symplectic_reflections)


def census(group: FiniteMatrixGroup) -> ReflectionCensus:
    """Classify every element by the codimension of its fixed space."""
    codims = tuple(fixed_space(g).codim for g in group.elements)
    return ReflectionCensus(
        codims=codims,
        symplectic_reflections=tuple(
            i for i, c in enumerate(codims) if c == 2
        ),
        complex_reflections=tuple(
            i for i, c in enumerate(codims) if c == 1
        ),
    )


def reflection_subgroup(
    group: FiniteMatrixGroup, cen: ReflectionCensus | None = None
) -> SubgroupHandle:
    """The subgroup generated by all symplectic reflections."""
    if cen is None:
        cen = census(group)
    sub = generated_subgroup(group, cen.symplectic_reflections)
    # conjugation preserves fixed-space codimension, so the generating
    # set is closed under conjugation and the subgroup is normal
    assert is_normal(group, sub), "reflection subgroup must be normal"
    return sub


@dataclass(frozen=True)
class Verdict:
    """Outcome of the symplectic resolution test for V/G."""

    kind: str
    group_order: int
    reflection_subgroup_order: int
    reflection_subgroup_index: int
    duval_note: str | None

    @property
    def obstructed(self) -> bool:
        return self.kind == VERDICT_OBSTRUCTED


def verdict(
    group: FiniteMatrixGroup,
    cen: ReflectionCensus | None = None,
    sub: SubgroupHandle | None = None,
) -> Verdict:
    """Decide whether symplectic reflections generate the whole group.

    When they do not, V/G has no symplectic resolution.  The trivial
    group is generated by the empty set of reflections, so it passes
    vacuously.
    """
    if cen is None:
        cen = census(group)
    if sub is None:
        sub = reflection_subgroup(group, cen)
    index = group.order // sub.order
    kind = VERDICT_HOLDS if index == 1 else VERDICT_OBSTRUCTED
    note = None
    if group.dimension == 2 and kind == VERDICT_HOLDS:
        note = DUVAL_NOTE
    return Verdict(
        kind=kind,
        group_order=group.order,
        reflection_subgroup_order=sub.order,
        reflection_subgroup_index=index,
        duval_note=note,
    )


def complex_reflections_generate(
    group: FiniteMatrixGroup, cen: ReflectionCensus | None = None
) -> bool:
    """Whether complex reflections generate the group; for a linear
    action this is exactly the condition for V/G to be smooth."""
    if cen is None:
        cen = census(group)
    return generated_subgroup(group, cen.complex_reflections).is_whole_group


def z_locus_min_codim(
    group: FiniteMatrixGroup,
    subgroup: SubgroupHandle,
    cen: ReflectionCensus | None = None,
) -> int:
    """Minimal fixed-space codimension over elements outside the
    subgroup.

    When the subgroup is everything there are no such elements and the
    sentinel dimension + 1 is returned.  For the reflection subgroup
    the result is at least 4: codimensions are even, and anything of
    codimension 2 would be a reflection and hence inside.
    """
    if subgroup.parent is not group:
        raise ValueError("subgroup belongs to a different group")
    if subgroup.is_whole_group:
        return group.dimension + 1
    if cen is None:
        cen = census(group)
    return min(
        cen.codims[i] for i in range(group.order) if not subgroup.flags[i]
    )


def doubled_element(g: ExactMatrix) -> ExactMatrix:
    """Block matrix acting as g on W and as the inverse transpose on
    the dual copy, so that the natural pairing is preserved."""
    n = g.rows
    dual = g.inverse().transpose()
    zero = ExactMatrix.zero(n, n, g.conductor)
    top = [list(g.row(i)) + list(zero.row(i)) for i in range(n)]
    bottom = [list(zero.row(i)) + list(dual.row(i)) for i in range(n)]
    return ExactMatrix.from_rows(top + bottom, g.conductor)


def double(group: FiniteMatrixGroup) -> FiniteMatrixGroup:
    """The action on W + W* induced by a linear action on W.

    The image group is isomorphic to the original (the map is a
    faithful homomorphism), preserves the dual pairing form, and is
    symplectic of twice the dimension, so no re-closure is needed.
    """
    from .linalg import is_symplectic

    omega = pairing_form(group.dimension, group.conductor)
    doubled = [doubled_element(g) for g in group.elements]
    gens = [doubled_element(g) for g in group.generators]
    for g in gens:
        assert is_symplectic(g, omega)
    identity = ExactMatrix.identity(2 * group.dimension, group.conductor)
    rest = sorted(
        (m for m in doubled if m.key() != identity.key()),
        key=lambda m: m.key(),
    )
    return FiniteMatrixGroup(
        2 * group.dimension, group.conductor, omega, gens, [identity] + rest
    )
