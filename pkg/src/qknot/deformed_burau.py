"""Deformed Burau blocks S±, the braid representation ρ(γ) and its reduction.

Crossing j of sign ε contributes the block matrix A_j = I ⊕ S_{ε,j} ⊕ I with

    S₊ = [[a_j, b_j],      S₋ = [[0,   c_j],
          [c_j, 0  ]]            [b_j, a_j]]

and ρ(γ) = A_1 A_2 … A_k over the generator algebra.  ρ′ drops the first row
and column.  Both matrices are right-quantum, which is what makes the quantum
determinant of I − qρ′ well-defined; under the evaluation map E the blocks
specialize to the transpose Burau matrix and its inverse.
"""
from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .exactpoly import LaurentPoly, PolyMatrix
from .qweyl import AlgebraElement, StrandSigns, eval_E, normal_order_product


@dataclass(frozen=True)
class QuantumMatrix:
    """Square matrix of AlgebraElements over a shared sign vector."""

    dim: int
    entries: tuple[tuple[AlgebraElement, ...], ...]
    signs: StrandSigns

    def __post_init__(self):
        if len(self.entries) != self.dim or any(len(row) != self.dim for row in self.entries):
            raise ValueError("entries must form a dim×dim square")

    @classmethod
    def identity(cls, dim: int, signs: StrandSigns) -> "QuantumMatrix":
        rows = tuple(
            tuple(AlgebraElement.one() if i == j else AlgebraElement.zero() for j in range(dim))
            for i in range(dim)
        )
        return cls(dim, rows, signs)

    @classmethod
    def from_rows(cls, rows, signs: StrandSigns) -> "QuantumMatrix":
        t = tuple(tuple(row) for row in rows)
        return cls(len(t), t, signs)

    def entry(self, i: int, j: int) -> AlgebraElement:
        """1-based access, matching the row/column conventions in the text."""
        return self.entries[i - 1][j - 1]

    def matmul(self, other: "QuantumMatrix") -> "QuantumMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = AlgebraElement.zero()
                for t in range(n):
                    x, y = self.entries[i][t], other.entries[t][j]
                    if x and y:
                        acc = acc + normal_order_product(x, y, self.signs)
                row.append(acc)
            rows.append(tuple(row))
        return QuantumMatrix(n, tuple(rows), self.signs)

    def scale(self, c: LaurentPoly) -> "QuantumMatrix":
        """Entrywise multiplication by a central scalar (a power of q)."""
        rows = tuple(tuple(e.scale(c) for e in row) for row in self.entries)
        return QuantumMatrix(self.dim, rows, self.signs)


def s_matrix(sign: int, j: int, signs: StrandSigns | None = None) -> QuantumMatrix:
    """The 2×2 block in the generators of crossing j.

    A sign vector is synthesized when none is supplied; only position j of it
    is ever consulted by products of this block's entries.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be ±1")
    if signs is None:
        signs = StrandSigns((1,) * (j - 1) + (sign,))
    elif signs.sign(j) != sign:
        raise ValueError(f"sign vector has {signs.sign(j)} at crossing {j}, block wants {sign}")
    a = AlgebraElement.generator("a", j)
    b = AlgebraElement.generator("b", j)
    c = AlgebraElement.generator("c", j)
    zero = AlgebraElement.zero()
    if sign == 1:
        rows = ((a, b), (c, zero))
    else:
        rows = ((zero, c), (b, a))
    return QuantumMatrix(2, rows, signs)


def _block_matrix(block: QuantumMatrix, position: int, dim: int) -> QuantumMatrix:
    """I_{position-1} ⊕ block ⊕ I_{dim-position-1} (1-based strand position)."""
    out = [
        [AlgebraElement.one() if i == j else AlgebraElement.zero() for j in range(dim)]
        for i in range(dim)
    ]
    p = position - 1
    for di in range(2):
        for dj in range(2):
            out[p + di][p + dj] = block.entries[di][dj]
    return QuantumMatrix.from_rows(out, block.signs)


def rho(b: BraidWord) -> QuantumMatrix:
    """ρ(γ) = A_1 A_2 … A_k, products taken left to right in word order."""
    signs = StrandSigns(b.signs)
    m = b.strands
    result = QuantumMatrix.identity(m, signs)
    for j, (i, eps) in enumerate(b.word, start=1):
        block = s_matrix(eps, j, signs)
        result = result.matmul(_block_matrix(block, i, m))
    return result


def rho_prime(M: QuantumMatrix) -> QuantumMatrix:
    """Remove the first row and column."""
    if M.dim < 2:
        raise ValueError("need dimension at least 2 to reduce")
    rows = tuple(row[1:] for row in M.entries[1:])
    return QuantumMatrix(M.dim - 1, rows, M.signs)


def check_right_quantum(M: QuantumMatrix) -> list[tuple[int, int, int, int, str]]:
    """All 2×2 submatrix relations; empty list means right-quantum.

    For rows i<i′, columns j<j′ with a=M[i,j], b=M[i,j′], c=M[i′,j], d=M[i′,j′]:
        ac = qca,   bd = qdb,   ad = da + qcb − q^{-1}bc.
    """
    q = LaurentPoly.q_power(1)
    qinv = LaurentPoly.q_power(-1)
    signs = M.signs
    violations = []
    for i in range(1, M.dim + 1):
        for i2 in range(i + 1, M.dim + 1):
            for j in range(1, M.dim + 1):
                for j2 in range(j + 1, M.dim + 1):
                    a, b = M.entry(i, j), M.entry(i, j2)
                    c, d = M.entry(i2, j), M.entry(i2, j2)
                    if normal_order_product(a, c, signs) != normal_order_product(c, a, signs).scale(q):
                        violations.append((i, i2, j, j2, "ac=qca"))
                    if normal_order_product(b, d, signs) != normal_order_product(d, b, signs).scale(q):
                        violations.append((i, i2, j, j2, "bd=qdb"))
                    lhs = normal_order_product(a, d, signs)
                    rhs = (
                        normal_order_product(d, a, signs)
                        + normal_order_product(c, b, signs).scale(q)
                        - normal_order_product(b, c, signs).scale(qinv)
                    )
                    if lhs != rhs:
                        violations.append((i, i2, j, j2, "ad=da+qcb-q^-1bc"))
    return violations


def classical_specialization(M: QuantumMatrix) -> PolyMatrix:
    """Entrywise evaluation map E; entries land in the commutative ring."""
    return [[eval_E(e, M.signs) for e in row] for row in M.entries]
