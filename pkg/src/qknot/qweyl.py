"""The quasi-commutative algebra of deformed-Burau generators.

One generator triple (a_j, b_j, c_j) lives at each crossing index j; triples
at distinct indices commute, and within one index the relations depend on the
crossing sign:

    ε = +1:  a b = b a,      a c = q c a,   b c = q² c b
    ε = −1:  a b = q² b a,   c a = q a c,   c b = q² b c

Every element is stored in the canonical normal order b^s c^r a^d per index.
The evaluation map E sends a normal monomial to a Laurent polynomial in q, z
(independently of the b-exponents); E_N further substitutes z = q^{N-1}.
A literal q-difference-operator realization of the generators acts as an
independent oracle for E.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exactpoly import LaurentPoly, QExponent, Q_UNIT, q_pochhammer


@dataclass(frozen=True)
class StrandSigns:
    """Crossing signs ε_j, one per crossing index j = 1..k."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be ±1")

    def sign(self, j: int) -> int:
        if not 1 <= j <= len(self.signs):
            raise ValueError(f"crossing index {j} out of range")
        return self.signs[j - 1]

    def __len__(self) -> int:
        return len(self.signs)


@dataclass(frozen=True)
class NormalMonomial:
    """Product ∏_j b_j^{s_j} c_j^{r_j} a_j^{d_j} in canonical order.

    entries holds (j, s_j, r_j, d_j) sorted by j; indices with all-zero
    exponents are omitted, so the empty tuple is the unit monomial.
    """

    entries: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def unit(cls) -> "NormalMonomial":
        return cls(())

    @classmethod
    def from_map(cls, exps: dict[int, tuple[int, int, int]]) -> "NormalMonomial":
        items = []
        for j in sorted(exps):
            s, r, d = exps[j]
            if min(s, r, d) < 0:
                raise ValueError("exponents must be nonnegative")
            if (s, r, d) != (0, 0, 0):
                items.append((j, s, r, d))
        return cls(tuple(items))

    @classmethod
    def generator(cls, kind: str, j: int) -> "NormalMonomial":
        s, r, d = {"b": (1, 0, 0), "c": (0, 1, 0), "a": (0, 0, 1)}[kind]
        return cls(((j, s, r, d),))

    def exponents(self, j: int) -> tuple[int, int, int]:
        for jj, s, r, d in self.entries:
            if jj == j:
                return (s, r, d)
        return (0, 0, 0)

    def a_degree(self) -> int:
        return sum(d for _, _, _, d in self.entries)

    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else 0


def reorder_exponent(eps: int, r1: int, d1: int, s2: int, r2: int) -> int:
    """Whole-q power picked up when b^{s1}c^{r1}a^{d1} · b^{s2}c^{r2}a^{d2}
    (same index, sign eps) is brought back to canonical order.

    Only (r1, d1) of the left factor and (s2, r2) of the right factor enter.
    """
    if eps == 1:
        return d1 * r2 - 2 * r1 * s2
    return 2 * d1 * s2 + 2 * r1 * s2 - d1 * r2


def _merge_monomials(
    mx: NormalMonomial, my: NormalMonomial, signs: StrandSigns
) -> tuple[NormalMonomial, int]:
    """Merged monomial of mx·my plus the accumulated whole-q exponent."""
    exps: dict[int, list[int]] = {j: [s, r, d] for j, s, r, d in mx.entries}
    q_shift = 0
    for j, s2, r2, d2 in my.entries:
        if j in exps:
            s1, r1, d1 = exps[j]
            q_shift += reorder_exponent(signs.sign(j), r1, d1, s2, r2)
            exps[j] = [s1 + s2, r1 + r2, d1 + d2]
        else:
            exps[j] = [s2, r2, d2]
    merged = NormalMonomial(tuple((j, *exps[j]) for j in sorted(exps)))
    return merged, q_shift


class AlgebraElement:
    """Finite Z[q^{±1}]-linear combination of normal monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[NormalMonomial, LaurentPoly] | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):  # pragma: no cover - immutability guard
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({NormalMonomial.unit(): LaurentPoly.one()})

    @classmethod
    def monomial(cls, mono: NormalMonomial, coeff: LaurentPoly | int = 1) -> "AlgebraElement":
        c = LaurentPoly.const(coeff) if isinstance(coeff, int) else coeff
        return cls({mono: c})

    @classmethod
    def generator(cls, kind: str, j: int) -> "AlgebraElement":
        return cls.monomial(NormalMonomial.generator(kind, j))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        d = dict(self.terms)
        for m, c in other.terms.items():
            nc = d.get(m, LaurentPoly.zero()) + c
            if nc:
                d[m] = nc
            elif m in d:
                del d[m]
        return AlgebraElement(d)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(LaurentPoly.const(-1))

    def __neg__(self) -> "AlgebraElement":
        return self.scale(LaurentPoly.const(-1))

    def scale(self, c: LaurentPoly) -> "AlgebraElement":
        if c.is_zero():
            return AlgebraElement()
        return AlgebraElement({m: coeff * c for m, coeff in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def ideal_degree(self) -> float:
        """ι = min over monomials of Σ_j d_j (math.inf for the zero element)."""
        if not self.terms:
            return math.inf
        return min(m.a_degree() for m in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElement(0)"
        bits = []
        for m in sorted(self.terms, key=lambda m: m.entries):
            word = "·".join(
                f"b{j}^{s}" * (s > 0) + f"c{j}^{r}" * (r > 0) + f"a{j}^{d}" * (d > 0)
                for j, s, r, d in m.entries
            ) or "1"
            bits.append(f"({self.terms[m]!r})·{word}")
        return "AlgebraElement(" + " + ".join(bits) + ")"


def normal_order_product(x: AlgebraElement, y: AlgebraElement, signs: StrandSigns) -> AlgebraElement:
    """Product of two elements, renormalized to b^s c^r a^d order per index."""
    out: dict[NormalMonomial, LaurentPoly] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            merged, q_shift = _merge_monomials(mx, my, signs)
            coeff = (cx * cy).shift(QExponent.of_q(q_shift))
            acc = out.get(merged)
            nc = coeff if acc is None else acc + coeff
            if nc:
                out[merged] = nc
            elif merged in out:
                del out[merged]
    return AlgebraElement(out)


@lru_cache(maxsize=None)
def _eval_factor(eps: int, r: int, d: int) -> LaurentPoly:
    """E of the single-index monomial b^s c^r a^d (independent of s).

    ε=+1: q^{-rd} z^r ∏_{i=0}^{d-1} (1 − z q^{-r-i})
    ε=−1: z^{-r}    ∏_{i=0}^{d-1} (1 − z^{-1} q^{r+i})
    """
    if eps == 1:
        poch = q_pochhammer(QExponent.of_q(-r), -1, d, 1)
        return poch.shift(QExponent.of_q(-r * d), r)
    poch = q_pochhammer(QExponent.of_q(r), 1, d, -1)
    return poch.shift(QExponent.of_q(0), -r)


def eval_E(x: AlgebraElement, signs: StrandSigns) -> LaurentPoly:
    """The evaluation map into Z[q^{±1}, z^{±1}] (s-exponents never matter)."""
    total = LaurentPoly.zero()
    for mono, coeff in x.terms.items():
        val = coeff
        for j, _s, r, d in mono.entries:
            val = val * _eval_factor(signs.sign(j), r, d)
        total = total + val
    return total


def eval_EN(x: AlgebraElement, signs: StrandSigns, N: int) -> LaurentPoly:
    """eval_E followed by z ↦ q^{N-1}; N may be any integer (N = 0 included)."""
    return eval_E(x, signs).subst_z_to_qpower(N - 1)


# ---------------------------------------------------------------------------
# literal operator realization (the oracle for eval_E)
# ---------------------------------------------------------------------------

_State = dict[tuple[int, int, int], LaurentPoly]


def _apply_generator(state: _State, kind: str, eps: int) -> _State:
    """One application of the q-difference operator for a, b or c.

    Monomial x^α y^β u^γ is the key (α, β, γ); shifts τ_x^{±1} multiply the
    coefficient by q^{±α}, hat operators shift the exponents.
    """
    out: _State = {}

    def put(key, coeff):
        acc = out.get(key)
        nc = coeff if acc is None else acc + coeff
        if nc:
            out[key] = nc
        elif key in out:
            del out[key]

    for (ax, ay, au), c in state.items():
        if kind == "b":
            # û² for both signs
            put((ax, ay, au + 2), c)
        elif eps == 1 and kind == "a":
            # (û − ŷ τ_x^{-1}) τ_y^{-1}
            base = c.shift(QExponent.of_q(-ay))
            put((ax, ay, au + 1), base)
            put((ax, ay + 1, au), base.shift(QExponent.of_q(-ax)).scale(-1))
        elif eps == 1 and kind == "c":
            # x̂ τ_y^{-2} τ_u^{-1}
            put((ax + 1, ay, au), c.shift(QExponent.of_q(-2 * ay - au)))
        elif eps == -1 and kind == "a":
            # (τ_y − x̂^{-1}) τ_x^{-1} τ_u
            base = c.shift(QExponent.of_q(au - ax))
            put((ax, ay, au), base.shift(QExponent.of_q(ay)))
            put((ax - 1, ay, au), base.scale(-1))
        elif eps == -1 and kind == "c":
            # ŷ^{-1} τ_x^{-1} τ_u
            put((ax, ay - 1, au), c.shift(QExponent.of_q(au - ax)))
        else:  # pragma: no cover - guarded by callers
            raise ValueError(f"unknown generator {kind!r}")
    return out


def operator_action_oracle(mono: NormalMonomial, signs: StrandSigns) -> LaurentPoly:
    """Apply the literal operators for ∏_j b_j^{s_j} c_j^{r_j} a_j^{d_j} to the
    constant function 1 (rightmost factor first), then set u = 1, x = y = z.

    Distinct indices act on distinct variable triples, so the result is the
    product over indices of single-index computations.
    """
    result = LaurentPoly.one()
    for j, s, r, d in mono.entries:
        eps = signs.sign(j)
        state: _State = {(0, 0, 0): LaurentPoly.one()}
        for _ in range(d):
            state = _apply_generator(state, "a", eps)
        for _ in range(r):
            state = _apply_generator(state, "c", eps)
        for _ in range(s):
            state = _apply_generator(state, "b", eps)
        value = LaurentPoly.zero()
        for (ax, ay, _au), c in state.items():
            value = value + c.shift(QExponent.of_q(0), ax + ay)
        result = result * value
    return result
