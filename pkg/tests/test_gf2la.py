import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from f2workbench.gf2la import (
    BitMatrix,
    ComplexError,
    Subspace,
    homology_dim,
    hstack,
    intersect,
    join,
    kernel,
    left_kernel,
    pack_bits,
    rank,
    rref,
    unpack_bits,
    vstack,
)
from strategies import bit_matrices


def as_ints(m: BitMatrix) -> list[int]:
    return [int("".join(map(str, row[::-1])) or "0", 2) for row in m.to_dense()]


def test_pack_roundtrip_across_word_boundary():
    rng = np.random.default_rng(3)
    dense = (rng.random((5, 130)) < 0.5).astype(np.uint8)
    assert np.array_equal(unpack_bits(pack_bits(dense), 130), dense)


def test_empty_matrices():
    assert rank(BitMatrix.zeros(0, 7)) == 0
    assert BitMatrix.zeros(0, 7).to_dense().shape == (0, 7)
    assert kernel(BitMatrix.zeros(0, 4)).dim == 4
    assert left_kernel(BitMatrix.zeros(3, 0)).dim == 3


def test_small_rank_and_rref():
    m = BitMatrix.from_text("110\n011\n101")
    r, red = rref(m)
    assert r == 2
    assert red.to_text() == "101\n011"


def test_identity_and_product():
    m = BitMatrix.from_text("10\n11")
    assert m @ m == BitMatrix.identity(2)
    assert m + m == BitMatrix.zeros(2, 2)


def test_subspace_membership_and_reduce():
    s = Subspace.span(BitMatrix.from_text("1100\n0110"))
    assert s.contains(BitMatrix.from_text("1010"))
    assert not s.contains(BitMatrix.from_text("0001"))
    assert s.reduce(BitMatrix.from_text("1011")).to_text() == "0001"


def test_join_and_intersect_dimensions():
    a = Subspace.span(BitMatrix.from_text("1000\n0100"))
    b = Subspace.span(BitMatrix.from_text("0100\n0010"))
    assert join(a, b).dim == 3
    assert intersect(a, b) == Subspace.span(BitMatrix.from_text("0100"))


def test_homology_of_a_short_complex():
    # F2 -> F2^2 -> F2 with f = (1,1)^T, g = (1 1)
    f = BitMatrix.from_text("1\n1")
    g = BitMatrix.from_text("11")
    assert homology_dim(f, g) == 0
    with pytest.raises(ComplexError):
        homology_dim(BitMatrix.from_text("1\n0"), g)


def test_stack_shapes():
    a = BitMatrix.identity(3)
    assert vstack([a, a]).shape == (6, 3)
    assert hstack([a, a]).shape == (3, 6)


@given(bit_matrices())
def test_rank_matches_xor_basis(m):
    assert rank(m) == oracles.rank(as_ints(m))


@given(bit_matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel(m).dim == m.cols


@given(bit_matrices())
def test_rref_idempotent(m):
    r, red = rref(m)
    r2, red2 = rref(red)
    assert r == r2 and red == red2


@given(bit_matrices())
def test_kernel_vectors_are_killed(m):
    k = kernel(m)
    if k.dim and m.rows:
        assert (m @ k.basis.transpose()).is_zero()


@given(bit_matrices(max_rows=20, max_cols=20))
def test_transpose_rank_and_left_kernel(m):
    assert rank(m.transpose()) == rank(m)
    assert left_kernel(m).dim == m.rows - rank(m)


@given(bit_matrices(max_rows=15, max_cols=30), bit_matrices(max_rows=15, max_cols=30))
def test_intersection_formula(a, b):
    if a.cols != b.cols:
        b = BitMatrix.from_dense(np.resize(b.to_dense(), (b.rows, a.cols)))
    sa, sb = Subspace.span(a), Subspace.span(b)
    assert intersect(sa, sb).dim == sa.dim + sb.dim - join(sa, sb).dim
    if intersect(sa, sb).dim:
        assert sa.contains(intersect(sa, sb).basis) and sb.contains(intersect(sa, sb).basis)


@given(st.integers(1, 70), st.integers(0, 2**32 - 1))
def test_product_matches_dense(n, seed):
    rng = np.random.default_rng(seed)
    a = BitMatrix.random(n % 9 + 1, n, rng)
    b = BitMatrix.random(n, 5, rng)
    assert np.array_equal((a @ b).to_dense(), (a.to_dense().astype(int) @ b.to_dense().astype(int)) % 2)
