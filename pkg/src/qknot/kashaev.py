"""Kashaev invariants, the cyclotomic series, and volume-rate estimation.

The z = q^{-1} evaluation of the determinant inverse series yields a series
of integer Laurent polynomials whose n-th term is divisible by
(1−q)(1−q²)⋯(1−q^{⌊n/k⌋}); it therefore evaluates at every root of unity,
where only finitely many terms survive.  With the writhe prefactor
q^{(m−w−1)/2}, the value at q = exp(2πi/N) is the order-N Kashaev invariant
of the closure.  A complex floating-point state sum provides the production
path for growth-rate sequences 2π·ln|⟨K⟩_N|/N, whose conjectured limit is
the hyperbolic volume; independent volume references come from ideal
triangulations evaluated with the Lobachevsky/dilogarithm functions.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import mpmath
import numpy as np

from .braid import BraidWord, closure_is_knot
from .deformed_burau import rho, rho_prime
from .exactpoly import (
    CyclotomicInt,
    LaurentPoly,
    Q_UNIT,
    QExponent,
    cyclotomic_reduce,
    embed_complex,
)
from .mcmahon import c_sum, fermionic_terms
from .qweyl import StrandSigns
from .verma_oracle import numeric_state_sum


@dataclass(frozen=True)
class HabiroTruncation:
    """Leading terms t_n of the z = q^{-1} series, prefactor kept separate.

    The full invariant is q^{prefactor_exponent} Σ_n t_n; t_n is divisible by
    (1−q)(1−q²)⋯(1−q^{⌊n/k⌋}) for a k-crossing braid, which makes the series
    summable at every root of unity.
    """

    terms: tuple[LaurentPoly, ...]
    prefactor_exponent: int


@dataclass(frozen=True)
class KashaevValue:
    """Order-N value: exact residue mod Φ_N (when computed exactly) plus its
    complex embedding at q = exp(2πi/N)."""

    N: int
    exact: CyclotomicInt | None
    approx: complex


def _poly_from_whole_powers(d: dict[int, int]) -> LaurentPoly:
    return LaurentPoly({(Q_UNIT * e, 0): c for e, c in d.items()})


def _series_inputs(b: BraidWord):
    signs = StrandSigns(b.signs)
    Mq = rho_prime(rho(b)).scale(LaurentPoly.q_power(1))
    return signs, c_sum(Mq)


def _prefactor_exponent(b: BraidWord) -> int:
    e = b.strands - b.writhe - 1
    if e % 2:
        raise AssertionError("prefactor exponent is not an integer")
    return e // 2


def kashaev_series(b: BraidWord, depth: int) -> HabiroTruncation:
    """Terms t_n for n = 0..depth of the z = q^{-1} evaluation of the
    inverse-determinant series, zero-padded if the series stops early."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if not closure_is_knot(b):
        raise ValueError("closure is not a knot")
    signs, C = _series_inputs(b)
    terms = [
        _poly_from_whole_powers(value)
        for value in fermionic_terms(C, signs, z_pow=-1, max_n=depth)
    ]
    while len(terms) < depth + 1:
        terms.append(LaurentPoly.zero())
    return HabiroTruncation(tuple(terms[: depth + 1]), _prefactor_exponent(b))


def kashaev_value(b: BraidWord, N: int, mode: str = "exact") -> KashaevValue:
    """⟨K⟩_N of the braid closure.

    exact: sum the z = q^{-1} series in ℤ[q]/Φ_N (terms with n > k·N vanish
    there, so the sum is finite) and apply q^{(m−w−1)/2}.
    float: evaluate the R-matrix state sum at q = exp(2πi/N).
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    if not closure_is_knot(b):
        raise ValueError("closure is not a knot")
    if mode == "float":
        return KashaevValue(N, None, numeric_state_sum(b, N))
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    signs, C = _series_inputs(b)
    k = max(b.length, 1)
    total: dict[int, int] = {}
    for value in fermionic_terms(C, signs, z_pow=-1, fold=N, max_n=k * N):
        for e, c in value.items():
            nc = total.get(e, 0) + c
            if nc:
                total[e] = nc
            elif e in total:
                del total[e]
    poly = _poly_from_whole_powers(total).shift(QExponent.of_q(_prefactor_exponent(b)))
    exact = cyclotomic_reduce(poly, N)
    return KashaevValue(N, exact, complex(embed_complex(exact)))


def kz_series(N: int) -> KashaevValue:
    """q Σ_n (1−q)(1−q²)⋯(1−qⁿ) at q = exp(2πi/N); terms with n ≥ N vanish.
    Equals the order-N value of the left trefoil."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    total = LaurentPoly.zero()
    partial = LaurentPoly.one()
    for n in range(N):
        if n > 0:
            partial = partial * (LaurentPoly.one() - LaurentPoly.q_power(n))
        total = total + partial
    exact = cyclotomic_reduce(total.shift(QExponent.of_q(1)), N)
    return KashaevValue(N, exact, complex(embed_complex(exact)))


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("QKNOT_WORKERS", "")
    if env.strip():
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ValueError(f"QKNOT_WORKERS must be an integer: {env!r}") from exc
    return os.cpu_count() or 1


def volume_sequence(
    b: BraidWord, N_values: list[int], workers: int | None = None
) -> list[tuple[int, float, float | None]]:
    """(N, |⟨K⟩_N|, 2π·ln|⟨K⟩_N|/N) by the float path for each requested N; an
    exactly zero magnitude yields rate None.  Orders are computed on a thread
    pool (size from `workers`, else QKNOT_WORKERS, else cpu count); each order
    is evaluated independently with a fixed summation order, so results are
    bit-identical regardless of pool size."""
    if any(N < 2 for N in N_values):
        raise ValueError("all N must be ≥ 2")

    def one(N: int) -> tuple[int, float, float | None]:
        mag = abs(numeric_state_sum(b, N))
        return N, mag, (2 * math.pi * math.log(mag) / N if mag > 0 else None)

    count = min(_worker_count(workers), max(1, len(N_values)))
    if count == 1 or len(N_values) <= 1:
        return [one(N) for N in N_values]
    with ThreadPoolExecutor(max_workers=count) as pool:
        return list(pool.map(one, N_values))


def volume_rate(
    b: BraidWord, N_values: list[int], workers: int | None = None
) -> list[tuple[int, float | None]]:
    """Growth-rate estimates v_N = 2π·ln|⟨K⟩_N|/N by the float path; an
    exactly zero magnitude yields None for that N."""
    return [(N, rate) for N, _, rate in volume_sequence(b, N_values, workers)]


def mahler_measure(delta: LaurentPoly) -> float:
    """|leading coefficient| · ∏ max(1, |root|) of a univariate-z polynomial,
    roots by companion matrix plus Newton refinement to 1e−9 residual."""
    terms = delta.z_terms()
    if not terms:
        raise ValueError("Mahler measure of the zero polynomial is undefined")
    lo, hi = min(terms), max(terms)
    coeffs = [terms.get(e, 0) for e in range(lo, hi + 1)]
    if len(coeffs) == 1:
        return float(abs(coeffs[0]))
    roots = np.roots(list(reversed(coeffs)))
    scale = sum(abs(c) for c in coeffs)

    def horner(x: complex) -> tuple[complex, complex]:
        val, der = 0j, 0j
        for c in reversed(coeffs):
            der = der * x + val
            val = val * x + c
        return val, der

    measure = float(abs(coeffs[-1]))
    for r in roots:
        x = complex(r)
        for _ in range(50):
            val, der = horner(x)
            bound = scale * max(1.0, abs(x)) ** (len(coeffs) - 1)
            if abs(val) <= 1e-12 * bound or der == 0:
                break
            x -= val / der
        val, _ = horner(x)
        bound = scale * max(1.0, abs(x)) ** (len(coeffs) - 1)
        if abs(val) > 1e-9 * bound:
            raise RuntimeError(f"root refinement did not converge at {x!r}")
        measure *= max(1.0, abs(x))
    return measure


def lobachevsky(theta: float) -> float:
    """Λ(θ) = ½ Σ_{n≥1} sin(2nθ)/n² = ½ Im Li₂(e^{2iθ})."""
    with mpmath.workdps(30):
        val = mpmath.polylog(2, mpmath.exp(2j * mpmath.mpf(theta)))
        return float(mpmath.im(val)) / 2


def bloch_wigner(z: complex) -> float:
    """D(z) = Im Li₂(z) + arg(1−z)·ln|z|: the ideal-tetrahedron volume with
    shape parameter z."""
    with mpmath.workdps(30):
        zz = mpmath.mpc(z)
        val = mpmath.im(mpmath.polylog(2, zz)) + mpmath.arg(1 - zz) * mpmath.ln(abs(zz))
        return float(val)


def reference_volumes() -> dict[str, float]:
    """Hyperbolic volumes of the corpus knots with hyperbolic complement,
    from ideal triangulations: the figure-eight complement is two regular
    ideal tetrahedra; the 5_2 complement is three congruent tetrahedra whose
    shape is the upper root of z³ − z² + 1."""
    shape = None
    for r in np.roots([1, -1, 0, 1]):
        if r.imag > 0:
            shape = complex(r)
    if shape is None:
        raise RuntimeError("shape cubic has no complex root")
    for _ in range(60):
        val = shape**3 - shape**2 + 1
        der = 3 * shape**2 - 2 * shape
        if abs(val) < 1e-15:
            break
        shape -= val / der
    return {
        "figure_eight": 6 * lobachevsky(math.pi / 3),
        "5_2": 3 * bloch_wigner(shape),
    }
