"""Exact linear algebra over cyclotomic fields.

Matrices are dense and immutable, with entries in a single Q(zeta_m).
Elimination uses the first nonzero entry in a column as the pivot; over
an exact field any nonzero pivot is as good as any other, and the fixed
choice makes every reduced echelon form (and hence every Subspace)
canonical: two subspaces are equal iff their stored bases are identical.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, euler_phi


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class SingularMatrix(ArithmeticError):
    """Inversion of a matrix without full rank."""


class BadForm(ValueError):
    """A claimed symplectic form is not antisymmetric or not invertible."""


def _coerce_entry(value, conductor):
    if isinstance(value, CyclotomicNumber):
        return value.promote(conductor)
    return CyclotomicNumber.rational(Fraction(value), conductor)


class ExactMatrix:
    """Immutable matrix over Q(zeta_m), stored row-major."""

    __slots__ = ("rows", "cols", "conductor", "entries", "_key")

    def __init__(self, rows, cols, conductor, entries):
        self.rows = rows
        self.cols = cols
        self.conductor = conductor
        self.entries = tuple(entries)
        if len(self.entries) != rows * cols:
            raise DimensionMismatch(
                "expected %d entries, got %d" % (rows * cols, len(self.entries))
            )
        self._key = None

    @classmethod
    def from_rows(cls, row_lists, conductor: int = 1) -> "ExactMatrix":
        """Build from nested lists; entries may be ints, Fractions, or
        cyclotomic values, all promoted to one common conductor."""
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        target = conductor
        for row in row_lists:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows")
            for v in row:
                if isinstance(v, CyclotomicNumber):
                    target = math.lcm(target, v.conductor)
        entries = [
            _coerce_entry(v, target) for row in row_lists for v in row
        ]
        return cls(rows, cols, target, entries)

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> "ExactMatrix":
        one = CyclotomicNumber.one(conductor)
        zero = CyclotomicNumber.zero(conductor)
        return cls(
            n, n, conductor,
            [one if i == j else zero for i in range(n) for j in range(n)],
        )

    @classmethod
    def zero(cls, rows: int, cols: int, conductor: int = 1) -> "ExactMatrix":
        z = CyclotomicNumber.zero(conductor)
        return cls(rows, cols, conductor, [z] * (rows * cols))

    @classmethod
    def from_columns(cls, column_vectors, conductor: int = 1) -> "ExactMatrix":
        cols = len(column_vectors)
        rows = len(column_vectors[0]) if cols else 0
        return cls.from_rows(
            [[column_vectors[j][i] for j in range(cols)] for i in range(rows)],
            conductor,
        )

    def entry(self, i: int, j: int) -> CyclotomicNumber:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list[list[CyclotomicNumber]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def promote(self, conductor: int) -> "ExactMatrix":
        if conductor == self.conductor:
            return self
        return ExactMatrix(
            self.rows, self.cols, conductor,
            [e.promote(conductor) for e in self.entries],
        )

    def _common(self, other: "ExactMatrix"):
        m = math.lcm(self.conductor, other.conductor)
        return self.promote(m), other.promote(m)

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        a, b = self._common(other)
        n, k, m = a.rows, a.cols, b.cols
        ae, be = a.entries, b.entries
        zero = CyclotomicNumber.zero(a.conductor)
        out = []
        for i in range(n):
            arow = ae[i * k : (i + 1) * k]
            for j in range(m):
                acc = zero
                for t in range(k):
                    x = arow[t]
                    if x:
                        y = be[t * m + j]
                        if y:
                            acc = acc + x * y
                out.append(acc)
        return ExactMatrix(n, m, a.conductor, out)

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        a, b = self._common(other)
        return ExactMatrix(
            a.rows, a.cols, a.conductor,
            [x + y for x, y in zip(a.entries, b.entries)],
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ExactMatrix(
            self.rows, self.cols, self.conductor,
            [-e for e in self.entries],
        )

    def scale(self, scalar) -> "ExactMatrix":
        s = _coerce_entry(scalar, self.conductor) if not isinstance(
            scalar, CyclotomicNumber
        ) else scalar
        m = math.lcm(self.conductor, s.conductor)
        s = s.promote(m)
        a = self.promote(m)
        return ExactMatrix(
            a.rows, a.cols, m, [s * e for e in a.entries]
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, self.conductor,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def apply(self, vector) -> tuple:
        """Matrix times a coordinate tuple."""
        if len(vector) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        vec = [_coerce_entry(v, self.conductor) for v in vector]
        zero = CyclotomicNumber.zero(self.conductor)
        out = []
        for i in range(self.rows):
            acc = zero
            for j, v in enumerate(vec):
                if v:
                    e = self.entry(i, j)
                    if e:
                        acc = acc + e * v
            out.append(acc)
        return tuple(out)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                e = self.entry(i, j)
                if i == j:
                    if e.rational_value() != 1:
                        return False
                elif e:
                    return False
        return True

    def is_antisymmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i, self.cols):
                if self.entry(i, j) != -self.entry(j, i):
                    return False
        return True

    def rank(self) -> int:
        work = self.row_lists()
        return len(_row_reduce(work))

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices invert")
        n = self.rows
        ident = ExactMatrix.identity(n, self.conductor)
        work = [
            list(self.row(i)) + list(ident.row(i)) for i in range(n)
        ]
        pivots = _row_reduce(work, limit=n)
        if len(pivots) < n:
            raise SingularMatrix("matrix has rank %d < %d" % (len(pivots), n))
        return ExactMatrix(
            n, n, self.conductor,
            [work[i][n + j] for i in range(n) for j in range(n)],
        )

    def kernel(self) -> "Subspace":
        """Right kernel, returned as a canonical subspace of the
        coordinate space of dimension self.cols."""
        work = self.row_lists()
        pivots = _row_reduce(work)
        pivot_set = set(pivots)
        n = self.cols
        zero = CyclotomicNumber.zero(self.conductor)
        one = CyclotomicNumber.one(self.conductor)
        basis = []
        for free in range(n):
            if free in pivot_set:
                continue
            vec = [zero] * n
            vec[free] = one
            for r, p in enumerate(pivots):
                vec[p] = -work[r][free]
            basis.append(vec)
        return Subspace.from_spanning(n, basis, self.conductor)

    def key(self):
        """Canonical hashable key; total order on same-shape matrices
        at a common conductor."""
        if self._key is None:
            self._key = tuple(e.key() for e in self.entries)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.conductor == other.conductor:
            return self.entries == other.entries
        a, b = self._common(other)
        return a.entries == b.entries

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def __str__(self):
        cells = [
            [str(self.entry(i, j)) for j in range(self.cols)]
            for i in range(self.rows)
        ]
        widths = [
            max(len(cells[i][j]) for i in range(self.rows)) if self.rows else 0
            for j in range(self.cols)
        ]
        return "\n".join(
            "[" + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + "]"
            for row in cells
        )

    def __repr__(self):
        return "ExactMatrix(%dx%d over Q(zeta_%d))" % (
            self.rows, self.cols, self.conductor,
        )


def _row_reduce(rows: list[list[CyclotomicNumber]], limit: int | None = None) -> list[int]:
    """In-place reduced row echelon form; returns pivot column indices.

    Pivot selection: first row with a nonzero entry in the current
    column.  Deterministic, so the output is canonical for the input.
    Pivots are only taken from columns below `limit` (for augmented
    matrices), though elimination still updates the full rows.
    """
    if not rows:
        return []
    nrows, ncols = len(rows), len(rows[0])
    if limit is None:
        limit = ncols
    pivots = []
    r = 0
    for c in range(limit):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Subspace:
    """A linear subspace in canonical reduced-echelon form.

    Equal subspaces have identical stored bases, so equality and
    hashing are structural.
    """

    __slots__ = ("ambient_dim", "conductor", "basis", "_pivots", "_key")

    def __init__(self, ambient_dim, conductor, basis, pivots):
        self.ambient_dim = ambient_dim
        self.conductor = conductor
        self.basis = basis  # tuple of coordinate tuples, echelon rows
        self._pivots = pivots
        self._key = None

    @classmethod
    def from_spanning(cls, ambient_dim, vectors, conductor: int = 1) -> "Subspace":
        target = conductor
        for vec in vectors:
            if len(vec) != ambient_dim:
                raise DimensionMismatch("spanning vector of wrong length")
            for v in vec:
                if isinstance(v, CyclotomicNumber):
                    target = math.lcm(target, v.conductor)
        work = [
            [_coerce_entry(v, target) for v in vec] for vec in vectors
        ]
        pivots = _row_reduce(work)
        basis = tuple(tuple(work[i]) for i in range(len(pivots)))
        return cls(ambient_dim, target, basis, tuple(pivots))

    @classmethod
    def full(cls, ambient_dim: int, conductor: int = 1) -> "Subspace":
        ident = ExactMatrix.identity(ambient_dim, conductor)
        return cls.from_spanning(
            ambient_dim, ident.row_lists(), conductor
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.basis)

    def promote(self, conductor: int) -> "Subspace":
        if conductor == self.conductor:
            return self
        return Subspace.from_spanning(
            self.ambient_dim,
            [[v.promote(conductor) for v in vec] for vec in self.basis],
            conductor,
        )

    def contains_vector(self, vector) -> bool:
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch("vector length mismatch")
        m = self.conductor
        for v in vector:
            if isinstance(v, CyclotomicNumber):
                m = math.lcm(m, v.conductor)
        space = self.promote(m)
        residual = [_coerce_entry(v, m) for v in vector]
        for row, p in zip(space.basis, space._pivots):
            f = residual[p]
            if f:
                residual = [a - f * b for a, b in zip(residual, row)]
        return not any(residual)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        if self.dim > other.dim:
            return False
        return all(other.contains_vector(vec) for vec in self.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked basis columns:
        A u + B v = 0 exactly when A u lies in both spans."""
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        m = math.lcm(self.conductor, other.conductor)
        a, b = self.promote(m), other.promote(m)
        if a.dim == 0 or b.dim == 0:
            return Subspace.from_spanning(self.ambient_dim, [], m)
        stacked = ExactMatrix.from_columns(
            [list(v) for v in a.basis] + [list(v) for v in b.basis], m
        )
        combos = stacked.kernel()
        vectors = []
        for coeff in combos.basis:
            vec = [CyclotomicNumber.zero(m)] * self.ambient_dim
            for c, bas in zip(coeff[: a.dim], a.basis):
                if c:
                    vec = [x + c * y for x, y in zip(vec, bas)]
            vectors.append(vec)
        return Subspace.from_spanning(self.ambient_dim, vectors, m)

    def basis_matrix(self) -> ExactMatrix:
        """Basis vectors as the columns of an ambient_dim x dim matrix."""
        return ExactMatrix.from_columns(
            [list(v) for v in self.basis], self.conductor
        )

    def key(self):
        if self._key is None:
            self._key = (
                self.ambient_dim,
                tuple(tuple(v.key() for v in vec) for vec in self.basis),
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.conductor != other.conductor:
            m = math.lcm(self.conductor, other.conductor)
            return self.promote(m) == other.promote(m)
        return self.key() == other.key()

    def __hash__(self):
        # entry hashes are promotion-invariant, and the canonical basis
        # is preserved by promotion, so this agrees with __eq__ across
        # conductors
        return hash((
            self.ambient_dim,
            tuple(tuple(hash(v) for v in vec) for vec in self.basis),
        ))

    def __repr__(self):
        return "Subspace(dim %d of C^%d)" % (self.dim, self.ambient_dim)


def fixed_space(g: ExactMatrix) -> Subspace:
    """The subspace of vectors fixed by g, i.e. ker(g - 1)."""
    if g.rows != g.cols:
        raise DimensionMismatch("fixed spaces need square matrices")
    return (g - ExactMatrix.identity(g.rows, g.conductor)).kernel()


def standard_symplectic_form(dim: int, conductor: int = 1) -> ExactMatrix:
    """Block-diagonal form with 2x2 blocks [[0, 1], [-1, 0]]."""
    if dim % 2:
        raise BadForm("symplectic forms need even dimension")
    one = CyclotomicNumber.one(conductor)
    rows = [[0] * dim for _ in range(dim)]
    for k in range(0, dim, 2):
        rows[k][k + 1] = one
        rows[k + 1][k] = -one
    return ExactMatrix.from_rows(rows, conductor)


def pairing_form(half_dim: int, conductor: int = 1) -> ExactMatrix:
    """The form [[0, I], [-I, 0]] pairing a space with its dual."""
    one = CyclotomicNumber.one(conductor)
    dim = 2 * half_dim
    rows = [[0] * dim for _ in range(dim)]
    for k in range(half_dim):
        rows[k][half_dim + k] = one
        rows[half_dim + k][k] = -one
    return ExactMatrix.from_rows(rows, conductor)


def check_form(omega: ExactMatrix) -> None:
    """Raise BadForm unless omega is antisymmetric and nondegenerate."""
    if omega.rows != omega.cols:
        raise BadForm("form matrix must be square")
    if omega.rows % 2:
        raise BadForm("antisymmetric forms on odd-dimensional spaces are degenerate")
    if not omega.is_antisymmetric():
        raise BadForm("form matrix is not antisymmetric")
    if omega.rank() < omega.rows:
        raise BadForm("form matrix is degenerate")


def is_symplectic(g: ExactMatrix, omega: ExactMatrix) -> bool:
    """Whether g preserves omega, i.e. g^T omega g = omega."""
    if g.rows != g.cols or g.rows != omega.rows:
        raise DimensionMismatch("matrix and form dimensions differ")
    return g.transpose() * omega * g == omega


def form_restriction_nondegenerate(omega: ExactMatrix, space: Subspace) -> bool:
    """Whether omega restricted to the subspace is nondegenerate."""
    if omega.rows != space.ambient_dim:
        raise DimensionMismatch("form and subspace ambient dimensions differ")
    if space.dim == 0:
        return True
    basis = space.basis_matrix()
    gram = basis.transpose() * omega * basis
    return gram.rank() == space.dim
