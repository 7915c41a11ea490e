"""Homogeneous polynomials in F2[x_1..x_n] packed into Python integers.

A degree-d monomial x^a is stored at bit ``sum(a_i * S**(n-2-i) for i < n-1)``
with ``S = max_degree + 1``; the last exponent is implied by the degree.
Multiplying by x_i is then a left shift (by zero for the last variable),
so products with short polynomials are a handful of big-integer XORs.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .f2alg import AlgebraSpec, Element, monomial_basis
from .gf2la import BitMatrix, pack_bits


class PackedRing:
    def __init__(self, alg: AlgebraSpec, max_degree: int):
        if any(alg.exterior) or any(d != 1 for d in alg.degrees):
            raise ValueError("packed polynomials need a polynomial algebra on degree-1 generators")
        self.alg = alg
        self.n = alg.ngens
        self.max_degree = max_degree
        self.S = max_degree + 1
        n = self.n
        self.strides = tuple(self.S ** (n - 2 - i) for i in range(n - 1)) + (0,)
        self.size = self.S ** (n - 1)

    def bit(self, m) -> int:
        return sum(a * s for a, s in zip(m, self.strides))

    @lru_cache(maxsize=None)
    def positions(self, d: int) -> np.ndarray:
        """Bit positions of ``monomial_basis(alg, d)`` in basis order."""
        if d > self.max_degree:
            raise ValueError(f"degree {d} exceeds packed ring capacity {self.max_degree}")
        basis = monomial_basis(self.alg, d)
        strides = np.array(self.strides[:-1], dtype=np.int64)
        if not basis:
            return np.zeros(0, dtype=np.int64)
        exps = np.array(basis, dtype=np.int64)[:, :-1]
        return exps @ strides if self.n > 1 else np.zeros(len(basis), dtype=np.int64)

    # conversion -------------------------------------------------------------
    def from_element(self, a: Element) -> int:
        out = 0
        for m in a.terms:
            out ^= 1 << self.bit(m)
        return out

    def to_bits(self, values: list[int], d: int) -> np.ndarray:
        """Dense 0/1 rows over ``monomial_basis(alg, d)`` for packed polynomials."""
        pos = self.positions(d)
        nbytes = (self.size + 7) // 8
        out = np.zeros((len(values), len(pos)), dtype=np.uint8)
        for start in range(0, len(values), 256):
            chunk = values[start : start + 256]
            raw = np.frombuffer(b"".join(v.to_bytes(nbytes, "little") for v in chunk), dtype=np.uint8)
            bits = np.unpackbits(raw.reshape(len(chunk), nbytes), axis=1, bitorder="little")
            out[start : start + len(chunk)] = bits[:, pos]
        return out

    def to_bitmatrix(self, values: list[int], d: int) -> BitMatrix:
        dense = self.to_bits(values, d)
        return BitMatrix(dense.shape[0], dense.shape[1], pack_bits(dense))

    def to_element(self, value: int, d: int) -> Element:
        from .f2alg import devectorize

        return devectorize(self.alg, self.to_bits([value], d)[0], d)

    def from_bits(self, rows: np.ndarray, d: int) -> list[int]:
        pos = self.positions(d)
        out = []
        for row in np.atleast_2d(rows):
            full = np.zeros(self.size, dtype=np.uint8)
            full[pos[np.flatnonzero(row)]] = 1
            out.append(int.from_bytes(np.packbits(full, bitorder="little").tobytes(), "little"))
        return out

    # arithmetic -------------------------------------------------------------
    def mul_linear(self, p: int, coeffs, power_of_two: int = 1) -> int:
        """p * (sum_i coeffs[i] x_i) ** power_of_two (Frobenius for 2^k)."""
        out = 0
        for c, s in zip(coeffs, self.strides):
            if c:
                out ^= p << (s * power_of_two)
        return out

    def mul_linear_power(self, p: int, coeffs, k: int) -> int:
        bit = 1
        while k:
            if k & 1:
                p = self.mul_linear(p, coeffs, bit)
            k >>= 1
            bit <<= 1
        return p

    def mul(self, p: int, q: int) -> int:
        """General product; iterates over the set bits of the sparser factor."""
        if p.bit_count() < q.bit_count():
            p, q = q, p
        out = 0
        while q:
            low = q & -q
            out ^= p << (low.bit_length() - 1)
            q ^= low
        return out

    def images(self, columns, d: int) -> list[int]:
        """Images of every degree-d monomial (basis order) under x_j -> columns[j]."""
        n = self.n
        out: list[int] = []

        def rec(j: int, p: int, remaining: int) -> None:
            if j == n - 1:
                out.append(self.mul_linear_power(p, columns[j], remaining))
                return
            powers = [p]
            for _ in range(remaining):
                powers.append(self.mul_linear(powers[-1], columns[j]))
            for a in range(remaining, -1, -1):
                rec(j + 1, powers[a], remaining - a)

        rec(0, 1, d)
        return out
