"""Dense exact matrices and subspaces over any supported field.

Matrices are immutable row-major grids of canonical scalars.  A subspace of
k^n is stored as its unique reduced row echelon basis, so subspace equality
is literal equality of the stored rows.  Tensor products use one fixed
basis-ordering convention throughout the package: the left factor is the
major index (the slot for the later composition factor comes first).
"""

from __future__ import annotations

from .fields import FieldMismatch


class LinAlgError(Exception):
    pass


class ShapeMismatch(LinAlgError):
    pass


class AmbientMismatch(LinAlgError):
    pass


class NotASubspace(LinAlgError):
    pass


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field, entries):
        self.field = field
        self.entries = tuple(tuple(row) for row in entries)
        self.nrows = len(self.entries)
        self.ncols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.ncols:
                raise ShapeMismatch("ragged rows")

    @classmethod
    def from_rows(cls, field, rows):
        """Build a matrix, coercing plain ints (and rationals) per the field."""
        return cls(field, [[field.coerce(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, field, n):
        zero, one = field.zero(), field.one()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def vstack(cls, mats):
        mats = list(mats)
        if not mats:
            raise ShapeMismatch("nothing to stack")
        ncols = mats[0].ncols
        field = mats[0].field
        rows = []
        for m in mats:
            if m.ncols != ncols:
                raise ShapeMismatch("column counts differ")
            if m.field != field:
                raise FieldMismatch("stacking matrices over different fields")
            rows.extend(m.entries)
        return cls(field, rows)

    def _check_same_shape(self, other):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.field != other.field:
                raise FieldMismatch("matrices over different fields")
            if self.ncols != other.nrows:
                raise ShapeMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
            cols = list(zip(*other.entries)) if other.entries else []
            zero = self.field.zero()
            out = []
            for row in self.entries:
                new = []
                for col in cols:
                    acc = zero
                    for a, b in zip(row, col):
                        acc = acc + a * b
                    new.append(acc)
                out.append(new)
            return Matrix(self.field, out)
        # scalar multiple
        s = self.field.coerce(other)
        return Matrix(self.field, [[a * s for a in row] for row in self.entries])

    def __rmul__(self, other):
        return self * other

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def __pow__(self, k: int):
        if self.nrows != self.ncols:
            raise ShapeMismatch("powers need a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = Matrix.identity(self.field, self.nrows)
        for _ in range(k):
            out = out * self
        return out

    def transpose(self):
        return Matrix(self.field, list(zip(*self.entries)) if self.entries else [])

    def tensor(self, other: "Matrix") -> "Matrix":
        """Kronecker product; the left factor is the major index."""
        if self.field != other.field:
            raise FieldMismatch("tensor of matrices over different fields")
        rows = []
        for arow in self.entries:
            for brow in other.entries:
                rows.append([a * b for a in arow for b in brow])
        if not rows:
            return Matrix.zeros(self.field, self.nrows * other.nrows, self.ncols * other.ncols)
        return Matrix(self.field, rows)

    def rref(self):
        """Gauss-Jordan reduced row echelon form and the pivot columns."""
        a = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, self.nrows):
                if a[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            a[r], a[pr] = a[pr], a[r]
            piv = a[r][c]
            if piv != 1:
                a[r] = [x / piv for x in a[r]]
            for i in range(self.nrows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Matrix(self.field, a), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        """Exact inverse via row reduction of the augmented matrix."""
        if self.nrows != self.ncols:
            raise ShapeMismatch("only square matrices can be inverted")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        augmented = Matrix(
            self.field,
            [list(a) + list(b) for a, b in zip(self.entries, ident.entries)],
        )
        red, pivots = augmented.rref()
        if tuple(pivots) != tuple(range(n)):
            raise LinAlgError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in red.entries])

    def kernel(self) -> "Subspace":
        """The right kernel {v : m v = 0}, as a canonical subspace of k^ncols."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        zero, one = self.field.zero(), self.field.one()
        rows = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for i, p in enumerate(pivots):
                v[p] = -red.entries[i][f]
            rows.append(v)
        return Subspace.from_vectors(self.field, self.ncols, rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def tensor_vector(u, v):
    """Coordinates of u (x) v in the left-major lexicographic tensor basis."""
    return tuple(a * b for a in u for b in v)


class Subspace:
    """A subspace of k^n held as its reduced row echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        # callers go through from_vectors(), which canonicalizes
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in k^{ambient_dim}")
        if not vectors:
            return cls(field, ambient_dim, (), ())
        red, pivots = Matrix(field, vectors).rref()
        rows = red.entries[: len(pivots)]
        return cls(field, ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, field, ambient_dim) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field, ambient_dim) -> "Subspace":
        ident = Matrix.identity(field, ambient_dim)
        return cls(field, ambient_dim, ident.entries, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis)

    def _check_compatible(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"k^{self.ambient_dim} vs k^{other.ambient_dim}")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def annihilator(self) -> "Subspace":
        """All functionals (as coordinate vectors) vanishing on this subspace."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient_dim)
        return self.basis_matrix().kernel()

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def reduce(self, vector):
        """Remainder of a vector after elimination against the basis."""
        w = list(vector)
        if len(w) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(w)} in k^{self.ambient_dim}")
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                w = [wi - c * ri for wi, ri in zip(w, row)]
        return w

    def contains(self, vector) -> bool:
        return all(x == 0 for x in self.reduce(vector))

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(other.contains(row) for row in self.basis)

    def complement_in(self, whole: "Subspace") -> "Subspace":
        """A canonical complement c with self (+) c = whole.

        Rows of `whole`'s echelon basis are kept when their pivot position,
        in the coordinates `whole` induces, is not a pivot of `self`
        re-expressed in those coordinates (pivot extension).
        """
        self._check_compatible(whole)
        if not self.is_subspace_of(whole):
            raise NotASubspace("complement_in: first space is not inside the second")
        if self.dim == 0:
            return Subspace(whole.field, whole.ambient_dim, whole.basis, whole.pivots)
        coords = [[row[p] for p in whole.pivots] for row in self.basis]
        _, inner_pivots = Matrix(self.field, coords).rref()
        used = set(inner_pivots)
        keep = [whole.basis[j] for j in range(whole.dim) if j not in used]
        return Subspace.from_vectors(self.field, self.ambient_dim, keep)

    def tensor(self, other: "Subspace") -> "Subspace":
        """Span of all pairwise tensors of basis vectors, left factor major."""
        if self.field != other.field:
            raise FieldMismatch("tensor of subspaces over different fields")
        ambient = self.ambient_dim * other.ambient_dim
        rows = [tensor_vector(u, v) for u in self.basis for v in other.basis]
        return Subspace.from_vectors(self.field, ambient, rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"
