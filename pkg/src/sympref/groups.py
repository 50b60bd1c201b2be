"""Finite matrix groups over a cyclotomic field.

A group is enumerated once by closure of its generators (Dimino's
algorithm, which fills in whole cosets of the previously generated
subgroup instead of multiplying all pairs) and then frozen: elements
live in a fixed canonical order, with the identity at index 0 and the
rest sorted by their coefficient keys.  Everything downstream works
with element indices into that order, which is what makes reports
deterministic.
"""

from __future__ import annotations

from .linalg import (
    DimensionMismatch,
    ExactMatrix,
    check_form,
    is_symplectic,
)

DEFAULT_MAX_ORDER = 100_000


class OrderBoundExceeded(RuntimeError):
    """Closure grew past max_order; the group may be infinite."""

    def __init__(self, bound, message=None):
        self.bound = bound
        super().__init__(
            message or "group order exceeds the bound %d" % bound
        )


class SingularGenerator(ValueError):
    """A generator is not invertible and so generates no group."""

    def __init__(self, index):
        self.index = index
        super().__init__("generator %d is singular" % index)


class NotSymplectic(ValueError):
    """A generator fails to preserve the declared symplectic form."""

    def __init__(self, index):
        self.index = index
        super().__init__(
            "generator %d does not preserve the symplectic form" % index
        )


class NotAMember(ValueError):
    """A matrix that is not an element of the group."""


def _dimino(identity, generators, multiply, max_size):
    """Enumerate the group generated by `generators` under `multiply`.

    Handles must be hashable.  Returns the elements in discovery order,
    identity first.  Elements are added one coset of the previously
    closed subgroup at a time.
    """
    elements = [identity]
    seen = {identity}

    def append_coset(rep, subgroup_size):
        # the coset (subgroup so far) * rep; elements[:subgroup_size]
        # is that subgroup, and its first entry is the identity
        for i in range(subgroup_size):
            t = multiply(elements[i], rep)
            if t not in seen:
                seen.add(t)
                elements.append(t)
                if len(elements) > max_size:
                    raise OrderBoundExceeded(max_size)

    for i, g in enumerate(generators):
        if g in seen:
            continue
        subgroup_size = len(elements)
        frontier = [g]
        seen.add(g)
        elements.append(g)
        if len(elements) > max_size:
            raise OrderBoundExceeded(max_size)
        append_coset(g, subgroup_size)
        while frontier:
            rep = frontier.pop()
            for s in generators[: i + 1]:
                t = multiply(rep, s)
                if t not in seen:
                    seen.add(t)
                    elements.append(t)
                    if len(elements) > max_size:
                        raise OrderBoundExceeded(max_size)
                    append_coset(t, subgroup_size)
                    frontier.append(t)
    return elements


class FiniteMatrixGroup:
    """A finite group of exact matrices, fully enumerated.

    omega is the preserved symplectic form, or None for a plain linear
    action (no form checked or stored).
    """

    __slots__ = (
        "dimension", "conductor", "omega", "generators", "elements",
        "_index", "_inverse_cache", "_generator_indices",
    )

    def __init__(self, dimension, conductor, omega, generators, elements):
        self.dimension = dimension
        self.conductor = conductor
        self.omega = omega
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index = {m.key(): i for i, m in enumerate(self.elements)}
        self._inverse_cache = {}
        self._generator_indices = None

    @classmethod
    def closure(
        cls,
        dimension: int,
        conductor: int,
        omega: ExactMatrix | None,
        generators,
        max_order: int = DEFAULT_MAX_ORDER,
    ) -> "FiniteMatrixGroup":
        gens = []
        for i, g in enumerate(generators):
            if not isinstance(g, ExactMatrix):
                g = ExactMatrix.from_rows(g, conductor)
            if g.rows != dimension or g.cols != dimension:
                raise DimensionMismatch(
                    "generator %d is %dx%d, expected %dx%d"
                    % (i, g.rows, g.cols, dimension, dimension)
                )
            g = g.promote(conductor)
            if g.rank() < dimension:
                raise SingularGenerator(i)
            gens.append(g)
        if omega is not None:
            if not isinstance(omega, ExactMatrix):
                omega = ExactMatrix.from_rows(omega, conductor)
            omega = omega.promote(conductor)
            if omega.rows != dimension:
                raise DimensionMismatch("form has wrong dimension")
            check_form(omega)
            for i, g in enumerate(gens):
                if not is_symplectic(g, omega):
                    raise NotSymplectic(i)

        matrices = {g.key(): g for g in gens}
        identity = ExactMatrix.identity(dimension, conductor)
        matrices.setdefault(identity.key(), identity)

        def multiply(k1, k2):
            prod = matrices[k1] * matrices[k2]
            key = prod.key()
            matrices.setdefault(key, prod)
            return key

        keys = _dimino(
            identity.key(), [g.key() for g in gens], multiply, max_order
        )
        ordered = sorted(k for k in keys if k != identity.key())
        elements = [identity] + [matrices[k] for k in ordered]
        return cls(dimension, conductor, omega, gens, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def element(self, index: int) -> ExactMatrix:
        return self.elements[index]

    def is_member(self, mat: ExactMatrix) -> bool:
        try:
            self.index_of(mat)
        except NotAMember:
            return False
        return True

    def index_of(self, mat: ExactMatrix) -> int:
        if mat.rows != self.dimension or mat.cols != self.dimension:
            raise NotAMember("matrix has the wrong shape for this group")
        if mat.conductor != self.conductor:
            if self.conductor % mat.conductor == 0:
                mat = mat.promote(self.conductor)
            else:
                # incompatible conductor tag; fall back to a scan, since
                # the entries may still lie in a common subfield
                for i, e in enumerate(self.elements):
                    if e == mat:
                        return i
                raise NotAMember("matrix is not an element of this group")
        try:
            return self._index[mat.key()]
        except KeyError:
            raise NotAMember("matrix is not an element of this group") from None

    def product_index(self, i: int, j: int) -> int:
        return self._index[(self.elements[i] * self.elements[j]).key()]

    def inverse_index(self, i: int) -> int:
        cached = self._inverse_cache.get(i)
        if cached is None:
            cached = self._index[self.elements[i].inverse().key()]
            self._inverse_cache[i] = cached
            self._inverse_cache[cached] = i
        return cached

    def generator_indices(self) -> tuple[int, ...]:
        if self._generator_indices is None:
            seen = []
            for g in self.generators:
                idx = self.index_of(g)
                if idx not in seen:
                    seen.append(idx)
            self._generator_indices = tuple(seen)
        return self._generator_indices

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        kind = "symplectic" if self.omega is not None else "linear"
        return "FiniteMatrixGroup(order %d, dim %d, conductor %d, %s)" % (
            self.order, self.dimension, self.conductor, kind,
        )


class SubgroupHandle:
    """A subgroup of an enumerated group, stored as membership flags."""

    __slots__ = ("parent", "flags")

    def __init__(self, parent: FiniteMatrixGroup, flags):
        self.parent = parent
        self.flags = tuple(flags)
        if len(self.flags) != parent.order:
            raise ValueError("flag vector length must match the group order")

    @property
    def order(self) -> int:
        return sum(1 for f in self.flags if f)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.flags) if f)

    def contains_index(self, i: int) -> bool:
        return self.flags[i]

    @property
    def is_whole_group(self) -> bool:
        return all(self.flags)

    def index_in_parent(self) -> int:
        return self.parent.order // self.order

    def __repr__(self):
        return "SubgroupHandle(order %d of %d)" % (
            self.order, self.parent.order,
        )


def element_order(group: FiniteMatrixGroup, element) -> int:
    """Multiplicative order of an element (index or matrix)."""
    idx = element if isinstance(element, int) else group.index_of(element)
    if not 0 <= idx < group.order:
        raise NotAMember("element index out of range")
    n = 1
    cur = idx
    while cur != group.identity_index:
        cur = group.product_index(cur, idx)
        n += 1
    return n


def generated_subgroup(group: FiniteMatrixGroup, seeds) -> SubgroupHandle:
    """The subgroup generated by the given elements (indices or matrices)."""
    seed_indices = sorted(
        {s if isinstance(s, int) else group.index_of(s) for s in seeds}
    )
    for s in seed_indices:
        if not 0 <= s < group.order:
            raise NotAMember("seed index out of range")

    members = [group.identity_index]
    seen = {group.identity_index}

    def append_coset(rep, subgroup_size):
        for i in range(subgroup_size):
            t = group.product_index(members[i], rep)
            if t not in seen:
                seen.add(t)
                members.append(t)

    for i, s in enumerate(seed_indices):
        if s in seen:
            continue
        if len(members) == group.order:
            break
        subgroup_size = len(members)
        frontier = [s]
        seen.add(s)
        members.append(s)
        append_coset(s, subgroup_size)
        while frontier:
            rep = frontier.pop()
            for t_seed in seed_indices[: i + 1]:
                t = group.product_index(rep, t_seed)
                if t not in seen:
                    seen.add(t)
                    members.append(t)
                    append_coset(t, subgroup_size)
                    frontier.append(t)

    flags = [False] * group.order
    for m in seen:
        flags[m] = True
    return SubgroupHandle(group, flags)


def is_normal(group: FiniteMatrixGroup, subgroup: SubgroupHandle) -> bool:
    """Whether the subgroup is normal, checked by conjugating each
    member with each group generator."""
    if subgroup.parent is not group:
        raise ValueError("subgroup belongs to a different group")
    for g in group.generator_indices():
        g_inv = group.inverse_index(g)
        for h in subgroup.indices():
            conj = group.product_index(group.product_index(g, h), g_inv)
            if not subgroup.flags[conj]:
                return False
    return True


def conjugacy_classes(group: FiniteMatrixGroup) -> tuple[tuple[int, ...], ...]:
    """Conjugacy classes as sorted index tuples, ordered by their
    smallest member (so the identity class comes first).

    Each class is the orbit of an element under conjugation by the
    generators; generator conjugations already reach the whole class
    because conjugation by a product composes them.
    """
    gen_pairs = [
        (g, group.inverse_index(g)) for g in group.generator_indices()
    ]
    assigned = [False] * group.order
    classes = []
    for start in range(group.order):
        if assigned[start]:
            continue
        orbit = {start}
        frontier = [start]
        assigned[start] = True
        while frontier:
            x = frontier.pop()
            for g, g_inv in gen_pairs:
                y = group.product_index(group.product_index(g, x), g_inv)
                if y not in orbit:
                    orbit.add(y)
                    assigned[y] = True
                    frontier.append(y)
        classes.append(tuple(sorted(orbit)))
    return tuple(classes)
