"""Dense exact linear algebra over the scalar ring.

Matrices act on coordinate columns, and composition f∘g is the product F·G.
Tensor legs use the flat-index convention: the basis vector e_i⊗e_j of V⊗W
(dim V = n, dim W = m) has index i·m + j, and triple products nest the same
way, so e_i⊗e_j⊗e_k of V⊗W⊗U sits at (i·m + j)·p + k with p = dim U.

Dimensions in this package stay tiny (tensor cubes cap out at 64×64), but the
multiply below still walks only nonzero entries: the operators produced by the
constructions are extremely sparse and the exact full-symbolic checks benefit.
"""

from __future__ import annotations

from typing import Callable, Iterator, Mapping, Sequence

from .errors import DimensionError, ParamMismatchError
from .scalar import Fraction, ParamSet, Scalar

Vector = tuple[Scalar, ...]


class Matrix:
    """Rectangular dense matrix of Scalars sharing one ParamSet."""

    __slots__ = ("rows", "cols", "params", "data")

    def __init__(self, rows: int, cols: int, params: ParamSet, data: Sequence[Scalar]):
        if rows <= 0 or cols <= 0:
            raise DimensionError(f"matrix dimensions must be positive, got {rows}x{cols}")
        data = list(data)
        if len(data) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}"
            )
        for entry in data:
            if entry.params != params:
                raise ParamMismatchError("matrix entries must share the matrix ParamSet")
        self.rows = rows
        self.cols = cols
        self.params = params
        self.data = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, params: ParamSet, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        flat: list[Scalar] = []
        for row in rows:
            if len(row) != c:
                raise DimensionError("ragged rows in matrix literal")
            flat.extend(row)
        return cls(r, c, params, flat)

    @classmethod
    def identity(cls, n: int, params: ParamSet) -> "Matrix":
        zero = Scalar.zero(params)
        one = Scalar.one(params)
        data = [zero] * (n * n)
        for i in range(n):
            data[i * n + i] = one
        return cls(n, n, params, data)

    @classmethod
    def zeros(cls, rows: int, cols: int, params: ParamSet) -> "Matrix":
        return cls(rows, cols, params, [Scalar.zero(params)] * (rows * cols))

    @classmethod
    def from_cols(cls, params: ParamSet, cols: Sequence[Sequence[Scalar]]) -> "Matrix":
        c = len(cols)
        r = len(cols[0])
        zero = Scalar.zero(params)
        data = [zero] * (r * c)
        for j, col in enumerate(cols):
            if len(col) != r:
                raise DimensionError("ragged columns in matrix literal")
            for i, entry in enumerate(col):
                data[i * c + j] = entry
        return cls(r, c, params, data)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.data[i * self.cols + j]

    def column(self, j: int) -> Vector:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def nonzero(self) -> Iterator[tuple[int, int, Scalar]]:
        """Nonzero entries in row-major order."""
        cols = self.cols
        for idx, entry in enumerate(self.data):
            if entry.terms:
                yield idx // cols, idx % cols, entry

    def is_zero(self) -> bool:
        return all(not entry.terms for entry in self.data)

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "Matrix", same_shape: bool) -> None:
        if self.params != other.params:
            raise ParamMismatchError("matrices over different parameter sets")
        if same_shape and (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other, same_shape=True)
        return Matrix(
            self.rows, self.cols, self.params,
            [a + b for a, b in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other, same_shape=True)
        return Matrix(
            self.rows, self.cols, self.params,
            [a - b for a, b in zip(self.data, other.data)],
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, self.params, [-a for a in self.data])

    def scale(self, c: Scalar | int | Fraction) -> "Matrix":
        if not isinstance(c, Scalar):
            c = Scalar.constant(self.params, c)
        elif c.params != self.params:
            raise ParamMismatchError("scaling factor over a different parameter set")
        return Matrix(self.rows, self.cols, self.params, [c * a for a in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = Scalar.zero(self.params)
        out = [zero] * (self.rows * other.cols)
        ocols = other.cols
        # row-compressed view of `other`, skipping zero entries
        brows: list[list[tuple[int, Scalar]]] = []
        for k in range(other.rows):
            base = k * ocols
            brows.append(
                [(j, other.data[base + j]) for j in range(ocols) if other.data[base + j].terms]
            )
        for i in range(self.rows):
            abase = i * self.cols
            obase = i * ocols
            for k in range(self.cols):
                a = self.data[abase + k]
                if not a.terms:
                    continue
                for j, b in brows[k]:
                    out[obase + j] = out[obase + j] + a * b
        return Matrix(self.rows, other.cols, self.params, out)

    def apply(self, vec: Sequence[Scalar]) -> Vector:
        """Matrix-vector product on a coordinate column."""
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} against {self.cols} columns")
        out = [Scalar.zero(self.params)] * self.rows
        for i in range(self.rows):
            base = i * self.cols
            acc = out[i]
            for j, v in enumerate(vec):
                if v.terms and self.data[base + j].terms:
                    acc = acc + self.data[base + j] * v
            out[i] = acc
        return tuple(out)

    # -- entrywise maps ----------------------------------------------------------

    def map(self, fn: Callable[[Scalar], Scalar], params: ParamSet | None = None) -> "Matrix":
        return Matrix(self.rows, self.cols, params or self.params, [fn(a) for a in self.data])

    def substitute(self, assignment: Mapping[str, Fraction | int]) -> "Matrix":
        return self.map(lambda s: s.substitute(assignment))

    def extend(self, params: ParamSet) -> "Matrix":
        return self.map(lambda s: s.extend(params), params=params)

    # -- comparison / debug --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            (self.rows, self.cols) == (other.rows, other.cols)
            and self.params == other.params
            and self.data == other.data
        )

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(self[i, j]) for j in range(self.cols)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


# -- tensor helpers -------------------------------------------------------------


def pair_index(i: int, j: int, dim_second: int) -> int:
    """Flat index of e_i⊗e_j when the second factor has the given dimension."""
    return i * dim_second + j


def triple_index(i: int, j: int, k: int, dim_second: int, dim_third: int) -> int:
    """Flat index of e_i⊗e_j⊗e_k under the nested pair convention."""
    return (i * dim_second + j) * dim_third + k


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product realizing f⊗g under the flat-index convention.

    kron(A,B)[(i·m+k), (j·m+l)] = A[i,j]·B[k,l]; satisfies the mixed-product
    law kron(A,B)·kron(C,D) = kron(A·C, B·D).
    """
    if a.params != b.params:
        raise ParamMismatchError("kron factors over different parameter sets")
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    zero = Scalar.zero(a.params)
    data = [zero] * (rows * cols)
    for i, j, av in a.nonzero():
        roff = i * b.rows
        coff = j * b.cols
        for k, l, bv in b.nonzero():
            data[(roff + k) * cols + (coff + l)] = av * bv
    return Matrix(rows, cols, a.params, data)


def flip(n: int, m: int, params: ParamSet) -> Matrix:
    """The tensor swap V⊗W → W⊗V on coordinates: e_i⊗e_j ↦ e_j⊗e_i."""
    size = n * m
    zero = Scalar.zero(params)
    one = Scalar.one(params)
    data = [zero] * (size * size)
    for i in range(n):
        for j in range(m):
            data[(j * n + i) * size + (i * m + j)] = one
    return Matrix(size, size, params, data)


def leg12(r: Matrix, alpha_third: Matrix) -> Matrix:
    """Embed an operator on V⊗V' as legs 1,2 of V⊗V'⊗V'', twisting leg 3 by alpha."""
    return kron(r, alpha_third)


def leg23(t: Matrix, alpha_first: Matrix) -> Matrix:
    """Embed an operator on V'⊗V'' as legs 2,3 of V⊗V'⊗V'', twisting leg 1 by alpha."""
    return kron(alpha_first, t)


def leg13(s: Matrix, alpha_mid: Matrix, dim_first: int, dim_third: int) -> Matrix:
    """Embed an operator on V⊗V'' as legs 1,3, twisting the middle leg by alpha.

    Realized as (τ⊗id) ∘ (alpha_mid⊗S) ∘ (τ⊗id) with τ the tensor swap of the
    first two legs.
    """
    if s.rows != s.cols or s.rows != dim_first * dim_third:
        raise DimensionError(
            f"leg13 operator must be square of size {dim_first}*{dim_third}, got {s.rows}x{s.cols}"
        )
    params = s.params
    mid = alpha_mid.rows
    ident3 = Matrix.identity(dim_third, params)
    swap_in = kron(flip(dim_first, mid, params), ident3)
    swap_out = kron(flip(mid, dim_first, params), ident3)
    return swap_out @ kron(alpha_mid, s) @ swap_in


# -- coordinate-vector helpers ----------------------------------------------------


def zero_vector(n: int, params: ParamSet) -> Vector:
    return (Scalar.zero(params),) * n


def basis_vector(n: int, i: int, params: ParamSet) -> Vector:
    vec = [Scalar.zero(params)] * n
    vec[i] = Scalar.one(params)
    return tuple(vec)


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in u)


def vec_is_zero(u: Sequence[Scalar]) -> bool:
    return all(not a.terms for a in u)


def tensor2(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Coordinates of u⊗v: entry p·len(v)+q is u_p·v_q."""
    out = []
    for a in u:
        for b in v:
            out.append(a * b)
    return tuple(out)
