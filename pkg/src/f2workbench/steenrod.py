"""Steenrod squares on algebras generated in degree 1.

Polynomial generators carry the total square x -> x + x^2 and exterior
(square-zero) generators are fixed by it.  Everything is extended by the
Cartan formula, computed termwise: Sq^k(x^a) collects the monomials
x^(a+k) over vectors k with k_i a bitwise subset of a_i (Lucas) and
|k| = k.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from .f2alg import AlgebraSpec, Element, NotHomogeneous, basis_index, monomial_basis
from .gf2la import BitMatrix, Subspace, rank


class UnsupportedAlgebra(ValueError):
    pass


def _check(alg: AlgebraSpec) -> None:
    bad = [g.name for g in alg.generators if g.degree != 1]
    if bad:
        raise UnsupportedAlgebra(f"Steenrod squares need degree-1 generators; got {bad}")


@lru_cache(maxsize=None)
def _submasks(a: int) -> tuple[int, ...]:
    out = []
    k = a
    while True:
        out.append(k)
        if k == 0:
            break
        k = (k - 1) & a
    return tuple(sorted(out))


def _spread(m: tuple, exterior: tuple, k: int | None) -> Iterator[tuple]:
    """Monomials m + kvec with kvec_i a submask of m_i (exterior: kvec_i = 0)."""
    n = len(m)

    def rec(i: int, rem, prefix: list):
        if i == n:
            if rem is None or rem == 0:
                yield tuple(prefix)
            return
        choices = (0,) if exterior[i] else _submasks(m[i])
        for c in choices:
            if rem is not None and c > rem:
                break
            prefix.append(m[i] + c)
            yield from rec(i + 1, None if rem is None else rem - c, prefix)
            prefix.pop()

    yield from rec(0, k, [])


def total_sq(a: Element) -> Element:
    """Sq = Sq^0 + Sq^1 + ... applied to a (inhomogeneous result)."""
    _check(a.alg)
    ext = a.alg.exterior
    acc: set = set()
    for m in a.terms:
        for t in _spread(m, ext, None):
            acc ^= {t}
    return a.alg.element(acc)


def sq(k: int, a: Element) -> Element:
    """Sq^k of a homogeneous element."""
    _check(a.alg)
    if k < 0:
        raise ValueError("k must be non-negative")
    if not a:
        return a
    if not a.is_homogeneous():
        raise NotHomogeneous("sq needs a homogeneous element")
    if k > a.degree:
        return a.alg.zero()
    ext = a.alg.exterior
    acc: set = set()
    for m in a.terms:
        for t in _spread(m, ext, k):
            acc ^= {t}
    return a.alg.element(acc)


def sq1(a: Element) -> Element:
    return sq(1, a)


# ---------------------------------------------------------------------------
# Sq^1 as a linear map between degrees


@lru_cache(maxsize=128)
def _sq1_index(alg: AlgebraSpec, d: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Per variable i: (sources in degree d with odd exponent, targets in d+1)."""
    basis = monomial_basis(alg, d)
    target = basis_index(alg, d + 1)
    out = []
    if not basis:
        return out
    exps = np.array(basis, dtype=np.int64)
    for i in range(alg.ngens):
        if alg.exterior[i]:
            continue
        src = np.flatnonzero(exps[:, i] & 1)
        tgt = []
        for s in src:
            m = list(basis[s])
            m[i] += 1
            tgt.append(target[tuple(m)])
        out.append((src, np.array(tgt, dtype=np.int64)))
    return out


def sq1_rows(alg: AlgebraSpec, rows: np.ndarray, d: int) -> np.ndarray:
    """Apply Sq^1 to dense 0/1 row vectors over monomial_basis(d)."""
    _check(alg)
    rows = np.atleast_2d(np.asarray(rows, dtype=np.uint8))
    out = np.zeros((rows.shape[0], len(monomial_basis(alg, d + 1))), dtype=np.uint8)
    for src, tgt in _sq1_index(alg, d):
        # for fixed i the map m -> m + e_i is injective, so plain fancy XOR is safe
        out[:, tgt] ^= rows[:, src]
    return out


def sq1_matrix(alg: AlgebraSpec, d: int) -> BitMatrix:
    """Sq^1 from degree d to d+1, column convention (column m = Sq^1 of m)."""
    n = len(monomial_basis(alg, d))
    return BitMatrix.from_dense(sq1_rows(alg, np.eye(n, dtype=np.uint8), d).T)


def sq1_linear_map(space: Subspace, alg: AlgebraSpec, d: int) -> BitMatrix:
    """Sq^1 on the basis of a degree-d subspace.

    Row i is Sq^1 of the i-th basis vector, over monomial_basis(d + 1).
    """
    if space.ambient != len(monomial_basis(alg, d)):
        raise ValueError("subspace does not live in degree d")
    return BitMatrix.from_dense(sq1_rows(alg, space.vectors(), d))


def sq1_rank(space: Subspace, alg: AlgebraSpec, d: int) -> int:
    if space.dim == 0:
        return 0
    return rank(sq1_linear_map(space, alg, d))
