"""Exact sparse Laurent polynomials, q-binomials and cyclotomic integers.

Every invariant computed by this package reduces to arithmetic in
Z[q^{±1/4}, z^{±1}] or in Z[q]/Φ_N(q).  Exponents of q live on a
quarter-integer lattice stored as plain integers (q ↔ 4, v = q^{1/2} ↔ 2,
v^{1/2} ↔ 1) so intermediate square roots of q stay exact; coefficients are
arbitrary-precision integers throughout.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import mpmath

Q_UNIT = 4  # quarter-lattice units per whole power of q


@dataclass(frozen=True)
class QExponent:
    """Exponent of q counted in quarter units.

    value ≡ 0 (mod 4) for elements of Z[q^{±1}]; mod 2 for powers of v.
    """

    value: int

    @classmethod
    def of_q(cls, e: int) -> "QExponent":
        return cls(Q_UNIT * e)

    @classmethod
    def of_v(cls, e: int) -> "QExponent":
        return cls(2 * e)

    @classmethod
    def of_v_half(cls, e: int) -> "QExponent":
        return cls(e)

    def __add__(self, other: "QExponent") -> "QExponent":
        return QExponent(self.value + other.value)

    def __sub__(self, other: "QExponent") -> "QExponent":
        return QExponent(self.value - other.value)

    def __neg__(self) -> "QExponent":
        return QExponent(-self.value)

    def __mul__(self, k: int) -> "QExponent":
        return QExponent(self.value * k)

    __rmul__ = __mul__

    def is_integer_q(self) -> bool:
        return self.value % Q_UNIT == 0

    def as_q_power(self) -> int:
        """The exponent as a whole power of q; error off the integer sublattice."""
        if not self.is_integer_q():
            raise ValueError(f"exponent {Fraction(self.value, Q_UNIT)} is not an integer power of q")
        return self.value // Q_UNIT

    def __repr__(self) -> str:
        return f"QExponent(q^{Fraction(self.value, Q_UNIT)})"


def _as_quarter(e) -> int:
    """Accept a QExponent or a raw quarter-unit integer."""
    if isinstance(e, QExponent):
        return e.value
    return int(e)


class LaurentPoly:
    """Sparse Laurent polynomial in q (quarter-lattice exponents) and z.

    Terms map (q_exponent_in_quarters, z_exponent) -> integer coefficient.
    Instances are immutable; all operations return new values.  Zero
    coefficients are never stored, so dict equality is canonical equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {k: v for k, v in (terms or {}).items() if v}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):  # pragma: no cover - immutability guard
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): int(c)})

    @classmethod
    def term(cls, coeff: int, q_exp=0, z_exp: int = 0) -> "LaurentPoly":
        return cls({(_as_quarter(q_exp), z_exp): int(coeff)})

    @classmethod
    def q_power(cls, e) -> "LaurentPoly":
        """q^e with e a whole power (int) or a QExponent."""
        qq = e.value if isinstance(e, QExponent) else Q_UNIT * int(e)
        return cls({(qq, 0): 1})

    @classmethod
    def z_power(cls, e: int) -> "LaurentPoly":
        return cls({(0, int(e)): 1})

    # -- ring structure ----------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self.terms)
        for k, v in other.terms.items():
            nv = d.get(k, 0) + v
            if nv:
                d[k] = nv
            elif k in d:
                del d[k]
        return LaurentPoly(d)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self.terms)
        for k, v in other.terms.items():
            nv = d.get(k, 0) - v
            if nv:
                d[k] = nv
            elif k in d:
                del d[k]
        return LaurentPoly(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        d: dict[tuple[int, int], int] = {}
        for (qa, za), ca in a.items():
            for (qb, zb), cb in b.items():
                k = (qa + qb, za + zb)
                nv = d.get(k, 0) + ca * cb
                if nv:
                    d[k] = nv
                elif k in d:
                    del d[k]
        return LaurentPoly(d)

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly()
        return LaurentPoly({k: c * v for k, v in self.terms.items()})

    def shift(self, q_exp=0, z_exp: int = 0) -> "LaurentPoly":
        """Multiply by the monomial q^{q_exp} z^{z_exp}."""
        dq = _as_quarter(q_exp)
        return LaurentPoly({(qq + dq, ze + z_exp): v for (qq, ze), v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- substitutions -----------------------------------------------------
    def subst_z_to_qpower(self, e: int) -> "LaurentPoly":
        """z ↦ q^e (whole power): realizes the z = q^{N-1} evaluations."""
        d: dict[tuple[int, int], int] = {}
        for (qq, ze), v in self.terms.items():
            k = (qq + Q_UNIT * e * ze, 0)
            nv = d.get(k, 0) + v
            if nv:
                d[k] = nv
            elif k in d:
                del d[k]
        return LaurentPoly(d)

    def subst_q_inverse(self) -> "LaurentPoly":
        return LaurentPoly({(-qq, ze): v for (qq, ze), v in self.terms.items()})

    def subst_z_inverse(self) -> "LaurentPoly":
        return LaurentPoly({(qq, -ze): v for (qq, ze), v in self.terms.items()})

    # -- inspection --------------------------------------------------------
    def is_univariate_q(self) -> bool:
        return all(ze == 0 for (_, ze) in self.terms)

    def is_univariate_z(self) -> bool:
        return all(qq == 0 for (qq, _) in self.terms)

    def has_integer_q_powers(self) -> bool:
        return all(qq % Q_UNIT == 0 for (qq, _) in self.terms)

    def q_terms(self) -> dict[int, int]:
        """As a map whole-q-exponent -> coefficient; errors if not in Z[q^{±1}]."""
        if not self.is_univariate_q():
            raise ValueError("polynomial involves z")
        out: dict[int, int] = {}
        for (qq, _), v in self.terms.items():
            if qq % Q_UNIT:
                raise ValueError("polynomial has fractional q-exponents")
            out[qq // Q_UNIT] = v
        return out

    def z_terms(self) -> dict[int, int]:
        if not self.is_univariate_z():
            raise ValueError("polynomial involves q")
        return {ze: v for (_, ze), v in self.terms.items()}

    def as_int(self) -> int:
        """The value of a constant polynomial."""
        if not self.terms:
            return 0
        if set(self.terms) != {(0, 0)}:
            raise ValueError("polynomial is not constant")
        return self.terms[(0, 0)]

    def evaluate_root_of_unity(self, N: int, z_value: complex | None = None) -> complex:
        """Numeric value at q = exp(2πi/N), with q^{1/4} := exp(πi/(2N)).

        Quarter-lattice exponents are resolved through the exponent integer,
        not through complex powers, so the branch is unambiguous.
        """
        total = 0j
        for (qq, ze), v in self.terms.items():
            val = complex(mpmath.expjpi(Fraction(qq, 2 * N)))
            if ze:
                if z_value is None:
                    raise ValueError("z present but no z value given")
                val *= z_value ** ze
            total += v * val
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for (qq, ze) in sorted(self.terms):
            c = self.terms[(qq, ze)]
            s = f"{c}"
            if qq:
                s += f"*q^({Fraction(qq, Q_UNIT)})"
            if ze:
                s += f"*z^{ze}"
            bits.append(s)
        return "LaurentPoly(" + " + ".join(bits) + ")"


def poly_arith(p: LaurentPoly, r: LaurentPoly, op: str) -> LaurentPoly:
    """Ring operation dispatcher: op in {"add", "sub", "mul"}."""
    if op == "add":
        return p + r
    if op == "sub":
        return p - r
    if op == "mul":
        return p * r
    raise ValueError(f"unknown op {op!r}")


def q_pochhammer(base_exp, step: int, d: int, z_degree: int) -> LaurentPoly:
    """∏_{i=0}^{d-1} (1 − z^{z_degree} · q^{base_exp + step·i}).

    base_exp is a QExponent or a raw quarter-unit integer; step ∈ {+1, −1}
    counts whole powers of q.  d = 0 gives 1.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if step not in (1, -1):
        raise ValueError("step must be +1 or -1")
    base = _as_quarter(base_exp)
    out = LaurentPoly.one()
    for i in range(d):
        factor = LaurentPoly.one() - LaurentPoly.term(1, base + Q_UNIT * step * i, z_degree)
        out = out * factor
    return out


@lru_cache(maxsize=None)
def _gauss_binom_std(n: int, l: int) -> LaurentPoly:
    """Standard Gaussian binomial [n choose l] in q with nonnegative powers."""
    if l < 0 or l > n:
        return LaurentPoly.zero()
    if l == 0 or l == n:
        return LaurentPoly.one()
    # Pascal recurrence: [n,l] = [n-1,l-1] + q^l [n-1,l]
    return _gauss_binom_std(n - 1, l - 1) + _gauss_binom_std(n - 1, l).shift(QExponent.of_q(l))


def q_int_binom(n: int, l: int, sign: int) -> LaurentPoly:
    """q-binomial built from (n)_q = 1 + q^{-1} + … + q^{-(n-1)}.

    sign=+1: the binomial in q (negative powers, equals q^{-l(n-l)}·[n,l]_std);
    sign=−1: the binomial in q^{-1} (equals the standard nonnegative-power
    Gaussian binomial).  l outside [0, n] returns 0 by convention.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if l < 0 or l > n:
        return LaurentPoly.zero()
    std = _gauss_binom_std(n, l)
    if sign == -1:
        return std
    return std.shift(QExponent.of_q(-l * (n - l)))


def laurent_divmod(p: LaurentPoly, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division p = quot·d + rem for univariate-q integer-lattice polynomials.

    The divisor's highest-degree coefficient must be ±1 so the division stays
    in integer coefficients; rem is zero exactly when d divides p in ℤ[q^{±1}].
    """
    dn = d.q_terms()
    if not dn:
        raise ZeroDivisionError("division by the zero polynomial")
    pn = p.q_terms()
    if not pn:
        return LaurentPoly.zero(), LaurentPoly.zero()
    plo, phi = min(pn), max(pn)
    dlo, dhi = min(dn), max(dn)
    num = [pn.get(e, 0) for e in range(plo, phi + 1)]
    den = [dn.get(e, 0) for e in range(dlo, dhi + 1)]
    lead = den[-1]
    if lead not in (1, -1):
        raise ValueError("divisor leading coefficient must be ±1")
    deg = len(den) - 1
    rem = list(num)
    quot = [0] * max(0, len(rem) - deg)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i] * lead
        if c:
            quot[i - deg] = c
            for j, dj in enumerate(den):
                rem[i - deg + j] -= c * dj
    qpoly = LaurentPoly({(Q_UNIT * (plo - dlo + i), 0): c for i, c in enumerate(quot) if c})
    rpoly = LaurentPoly({(Q_UNIT * (plo + i), 0): c for i, c in enumerate(rem) if c})
    return qpoly, rpoly


# ---------------------------------------------------------------------------
# cyclotomic arithmetic
# ---------------------------------------------------------------------------

def _polydivmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials (ascending coefficients), den monic."""
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    quot = [0] * max(0, len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                rem[i - dd + j] -= c * dj
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_coeffs(N: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the N-th cyclotomic polynomial Φ_N."""
    if N < 1:
        raise ValueError("N must be positive")
    if N == 1:
        return (-1, 1)
    poly = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    for d in range(1, N):
        if N % d == 0:
            quot, rem = _polydivmod(poly, list(cyclotomic_coeffs(d)))
            if rem:
                raise AssertionError("cyclotomic division not exact")
            poly = quot
    return tuple(poly)


@dataclass(frozen=True)
class CyclotomicInt:
    """Element of Z[q]/Φ_N(q): coeffs has length φ(N) = deg Φ_N."""

    N: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_coeff_list(cls, N: int, coeffs: Iterable[int]) -> "CyclotomicInt":
        phi = cyclotomic_coeffs(N)
        deg = len(phi) - 1
        vec = list(coeffs)
        _, rem = _polydivmod(vec, list(phi))
        rem = rem + [0] * (deg - len(rem))
        return cls(N, tuple(rem))

    @classmethod
    def from_int(cls, N: int, value: int) -> "CyclotomicInt":
        return cls.from_coeff_list(N, [value])

    @classmethod
    def q_power(cls, N: int, e: int) -> "CyclotomicInt":
        vec = [0] * (e % N) + [1]
        return cls.from_coeff_list(N, vec)

    def _check(self, other: "CyclotomicInt") -> None:
        if self.N != other.N:
            raise ValueError("mixed root-of-unity orders")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        return CyclotomicInt(self.N, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.N, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.N, tuple(-x for x in self.coeffs))

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        conv = [0] * (len(a) + len(b) - 1) if a and b else [0]
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CyclotomicInt.from_coeff_list(self.N, conv)

    def __pow__(self, e: int) -> "CyclotomicInt":
        if e < 0:
            raise ValueError("negative powers are not defined for general elements")
        out = CyclotomicInt.from_int(self.N, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational_int(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational_int():
            raise ValueError("not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly({(Q_UNIT * j, 0): c for j, c in enumerate(self.coeffs) if c})


def cyclotomic_reduce(p: LaurentPoly, N: int) -> CyclotomicInt:
    """Exact residue of p (integer q-powers, no z) modulo Φ_N.

    Negative powers are folded via q^N ≡ 1 before the modular reduction.
    """
    if N < 1:
        raise ValueError("N must be positive")
    vec = [0] * N
    for (qq, ze), c in p.terms.items():
        if ze:
            raise ValueError("cyclotomic_reduce needs a polynomial in q alone")
        if qq % Q_UNIT:
            raise ValueError("fractional q-power reached cyclotomic evaluation; upstream convention bug")
        vec[(qq // Q_UNIT) % N] += c
    return CyclotomicInt.from_coeff_list(N, vec)


def embed_complex(c: CyclotomicInt) -> complex:
    """Value of c at q = exp(2πi/N)."""
    with mpmath.workdps(40):
        total = mpmath.mpc(0)
        for j, a in enumerate(c.coeffs):
            if a:
                total += a * mpmath.expjpi(mpmath.mpf(2 * j) / c.N)
        return complex(total)


# ---------------------------------------------------------------------------
# small commutative matrix helpers over LaurentPoly
# ---------------------------------------------------------------------------

PolyMatrix = list[list[LaurentPoly]]


def poly_mat_identity(n: int) -> PolyMatrix:
    return [[LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)] for i in range(n)]


def poly_mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n, mid, m = len(a), len(b), len(b[0])
    out = [[LaurentPoly.zero() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for k in range(mid):
            aik = a[i][k]
            if aik.is_zero():
                continue
            for j in range(m):
                if b[k][j]:
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def poly_mat_sub(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def poly_mat_det(a: PolyMatrix) -> LaurentPoly:
    """Leibniz-expansion determinant (dimensions here are tiny)."""
    n = len(a)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return a[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * poly_mat_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


# ---------------------------------------------------------------------------
# string form used by the CLI (ascending exponents, bit-exact)
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*)?([a-z])(?:\^(-?\d+))?$|^(\d+)$")


def format_univariate(p: LaurentPoly, var: str) -> str:
    """Render with ascending exponents: terms "c*v^e" with unit coefficients
    and exponents 0/1 abbreviated, joined by " + " / " - "."""
    if var == "q":
        terms = p.q_terms()
    elif var == "z":
        terms = p.z_terms()
    else:
        raise ValueError("var must be 'q' or 'z'")
    if not terms:
        return "0"
    out: list[str] = []
    for e in sorted(terms):
        c = terms[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            pow_s = var if e == 1 else f"{var}^{e}"
            body = pow_s if mag == 1 else f"{mag}*{pow_s}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def parse_univariate(text: str, var: str) -> LaurentPoly:
    """Inverse of format_univariate (also accepts leading sign on each chunk)."""
    if var not in ("q", "z"):
        raise ValueError("var must be 'q' or 'z'")
    s = text.strip()
    if s == "0":
        return LaurentPoly.zero()
    chunks = re.split(r"\s+(?=[+-]\s)", s if s[0] in "+-" else "+ " + s)
    result: dict[int, int] = {}
    for chunk in chunks:
        chunk = chunk.strip()
        if chunk[0] in "+-":
            sign = 1 if chunk[0] == "+" else -1
            body = chunk[1:].strip()
        else:
            sign, body = 1, chunk
        m = _TERM_RE.match(body)
        if not m:
            raise ValueError(f"cannot parse term {body!r}")
        if m.group(4) is not None:
            coeff, e = int(m.group(4)), 0
        else:
            if m.group(2) != var:
                raise ValueError(f"unexpected variable {m.group(2)!r}, want {var!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(3)) if m.group(3) else 1
        result[e] = result.get(e, 0) + sign * coeff
    if var == "q":
        return LaurentPoly({(Q_UNIT * e, 0): c for e, c in result.items() if c})
    return LaurentPoly({(0, e): c for e, c in result.items() if c})
