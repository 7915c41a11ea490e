"""Dense linear algebra over F2 on bit-packed rows.

Rows are stored as little-endian bit strings packed into ``uint64`` words:
column ``j`` of a row lives in word ``j // 64`` at bit ``j % 64``.  Padding
bits past the last column are always zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

WORD = 64


def _nwords(cols: int) -> int:
    return (cols + WORD - 1) // WORD


def pack_bits(dense: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into uint64 words along the last axis."""
    dense = np.ascontiguousarray(dense, dtype=np.uint8)
    rows, cols = dense.shape
    words = _nwords(cols)
    padded = np.zeros((rows, words * WORD), dtype=np.uint8)
    padded[:, :cols] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(np.uint64).reshape(rows, words).copy()


def unpack_bits(data: np.ndarray, cols: int) -> np.ndarray:
    rows = data.shape[0]
    if rows == 0 or data.size == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    raw = np.ascontiguousarray(data).view(np.uint8).reshape(rows, -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols]


class BitMatrix:
    """A rows x cols matrix over F2 with packed rows.

    Treated as immutable by callers; methods return new matrices.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = np.zeros((rows, _nwords(cols)), dtype=np.uint64)
        if data.shape != (rows, _nwords(cols)) or data.dtype != np.uint64:
            raise ValueError(f"bad packed shape {data.shape} for {rows}x{cols}")
        self.data = data

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        arr = np.asarray(dense, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls(arr.shape[0], arr.shape[1], pack_bits(arr))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls.from_dense(np.array(rows, dtype=np.uint8).reshape(len(rows), -1))

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        return cls.from_dense([[int(c) for c in ln] for ln in lines])

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator, density: float = 0.5) -> "BitMatrix":
        return cls.from_dense(rng.random((rows, cols)) < density)

    # views ----------------------------------------------------------------
    def to_dense(self) -> np.ndarray:
        return unpack_bits(self.data, self.cols)

    def to_text(self) -> str:
        """Debug dump as a grid of '0'/'1' characters."""
        return "\n".join("".join(map(str, row)) for row in self.to_dense())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int((int(self.data[i, j // WORD]) >> (j % WORD)) & 1)

    def row(self, i: int) -> np.ndarray:
        return self.to_dense_rows([i])[0]

    def to_dense_rows(self, idx) -> np.ndarray:
        return unpack_bits(self.data[idx], self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, self.data.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return not self.data.any()

    # algebra --------------------------------------------------------------
    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return BitMatrix(self.rows, self.cols, self.data ^ other.data)

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = np.zeros((self.rows, other.data.shape[1]), dtype=np.uint64)
        left = self.to_dense()
        # accumulate row k of `other` into every output row whose column k is set
        for k in np.flatnonzero(left.any(axis=0)):
            sel = left[:, k].astype(bool)
            out[sel] ^= other.data[k]
        return BitMatrix(self.rows, other.cols, out)

    def select_rows(self, idx) -> "BitMatrix":
        idx = np.asarray(idx, dtype=np.intp)
        return BitMatrix(len(idx), self.cols, self.data[idx].copy())

    def select_cols(self, idx) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense()[:, np.asarray(idx, dtype=np.intp)])

    def nonzero_rows(self) -> "BitMatrix":
        return self.select_rows(np.flatnonzero(self.data.any(axis=1)))


def vstack(mats: Sequence[BitMatrix], cols: int | None = None) -> BitMatrix:
    if not mats:
        return BitMatrix.zeros(0, cols or 0)
    ncols = mats[0].cols
    if any(m.cols != ncols for m in mats):
        raise ValueError("column mismatch in vstack")
    data = np.concatenate([m.data for m in mats], axis=0)
    return BitMatrix(data.shape[0], ncols, data)


def hstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("row mismatch in hstack")
    return BitMatrix.from_dense(np.concatenate([m.to_dense() for m in mats], axis=1))


def _eliminate(data: np.ndarray, cols: int, pivot_limit: int | None = None) -> list[int]:
    """In-place reduced row-echelon form of packed rows; returns pivot columns.

    Pivots are searched left to right and only among the first
    ``pivot_limit`` columns; row operations act on the whole row.
    """
    nrows = data.shape[0]
    limit = cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for col in range(limit):
        if r == nrows:
            break
        w, b = divmod(col, WORD)
        mask = np.uint64(1) << np.uint64(b)
        hits = np.flatnonzero(data[r:, w] & mask)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            data[[r, p]] = data[[p, r]]
        # every row with this bit set, except the pivot itself
        others = np.flatnonzero(data[:, w] & mask)
        others = others[others != r]
        if others.size:
            data[others, w:] ^= data[r, w:]
        pivots.append(col)
        r += 1
    return pivots


def rref(m: BitMatrix) -> tuple[int, BitMatrix]:
    """Reduced row-echelon form; returns (rank, matrix with zero rows dropped)."""
    data = m.data.copy()
    pivots = _eliminate(data, m.cols)
    rank = len(pivots)
    return rank, BitMatrix(rank, m.cols, data[:rank].copy())


def rref_with_pivots(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    data = m.data.copy()
    pivots = _eliminate(data, m.cols)
    return BitMatrix(len(pivots), m.cols, data[: len(pivots)].copy()), pivots


def rank(m: BitMatrix) -> int:
    return rref(m)[0]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F2^ambient held as a reduced row-echelon basis."""

    basis: BitMatrix
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, m: BitMatrix) -> "Subspace":
        basis, pivots = rref_with_pivots(m)
        return cls(basis, tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(BitMatrix.zeros(0, ambient), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(BitMatrix.identity(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def ambient(self) -> int:
        return self.basis.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def vectors(self) -> np.ndarray:
        return self.basis.to_dense()

    def coordinates(self, vecs: BitMatrix) -> tuple[BitMatrix, BitMatrix]:
        """Split packed row vectors into basis coordinates and residue.

        Because the basis is reduced, the coordinate on basis row ``i`` is the
        vector's bit at ``pivots[i]`` and the residue is zero iff the vector
        lies in the subspace.
        """
        if vecs.cols != self.ambient:
            raise ValueError("ambient dimension mismatch")
        dense = vecs.to_dense()
        coords = dense[:, list(self.pivots)] if self.pivots else np.zeros((vecs.rows, 0), np.uint8)
        coord_m = BitMatrix.from_dense(coords)
        residue = vecs + (coord_m @ self.basis) if self.dim else vecs
        return coord_m, residue

    def contains(self, vecs: BitMatrix) -> bool:
        return self.coordinates(vecs)[1].is_zero()

    def reduce(self, vecs: BitMatrix) -> BitMatrix:
        """Residues of the given rows modulo this subspace."""
        return self.coordinates(vecs)[1]


def kernel(m: BitMatrix) -> Subspace:
    """Basis of {v : m v = 0}, echelonized."""
    basis, pivots = rref_with_pivots(m)
    n = m.cols
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    if not free:
        return Subspace.zero(n)
    dense = basis.to_dense()
    vecs = np.zeros((len(free), n), dtype=np.uint8)
    vecs[np.arange(len(free)), free] = 1
    if pivots:
        # v_j = e_j + sum of the pivot columns whose row has a 1 in column j
        vecs[:, pivots] = dense[:, free].T
    return Subspace.span(BitMatrix.from_dense(vecs))


def left_kernel(m: BitMatrix) -> Subspace:
    """Basis of {c : c m = 0}, i.e. linear dependencies among the rows of m."""
    return kernel(m.transpose())


def join(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch {a.ambient} vs {b.ambient}")
    return Subspace.span(vstack([a.basis, b.basis]))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b by the Zassenhaus trick on [A | A ; B | 0]."""
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch {a.ambient} vs {b.ambient}")
    n = a.ambient
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    A, B = a.vectors(), b.vectors()
    top = np.concatenate([A, A], axis=1)
    bottom = np.concatenate([B, np.zeros_like(B)], axis=1)
    red, pivots = rref_with_pivots(BitMatrix.from_dense(np.concatenate([top, bottom])))
    rows = [i for i, p in enumerate(pivots) if p >= n]
    if not rows:
        return Subspace.zero(n)
    return Subspace.span(BitMatrix.from_dense(red.to_dense_rows(rows)[:, n:]))


class ComplexError(ValueError):
    """Raised when a composite of consecutive maps is not zero."""

    def __init__(self, column: int):
        super().__init__(f"g*f != 0: first offending column of f is {column}")
        self.column = column


def homology_dim(f: BitMatrix, g: BitMatrix) -> int:
    """dim ker(g) - rank(f) for maps f: V0 -> V1, g: V1 -> V2.

    Matrices act on column vectors (f is dim V1 x dim V0).
    """
    if f.rows != g.cols:
        raise ValueError(f"incompatible maps {f.shape} then {g.shape}")
    if f.cols and g.rows:
        gf = (g @ f).to_dense()
        bad = np.flatnonzero(gf.any(axis=0))
        if bad.size:
            raise ComplexError(int(bad[0]))
    return (g.cols - rank(g)) - rank(f)


def concat_columns(blocks: Iterable[BitMatrix]) -> BitMatrix:
    return hstack(list(blocks))
