"""Exact scalar arithmetic: Z[q, q^-1], its fraction field, truncated
formal series in z, and cyclotomic quotients for root-of-unity work.

Every value is immutable; every operation is a pure function.  These
scalars are the coefficients of all module actions downstream, so
equality and zero-tests must be exact (no floats on the main path).
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import lru_cache
from math import gcd


class ExpansionError(ValueError):
    """A series expansion was requested in a direction where the
    denominator has no invertible leading term."""


class SpecializationError(ValueError):
    """A denominator vanishes at the requested root of unity."""


# ---------------------------------------------------------------------------
# Laurent polynomials over Z
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients.

    Stored as {exponent: coefficient} with no zero coefficients.
    """

    __slots__ = ("terms", "_key")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                if c:
                    t[int(k)] = int(c)
        self.terms = t
        self._key = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_int(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def q_power(k: int, c: int = 1) -> "LaurentPoly":
        return LaurentPoly({k: c})

    # -- structure ----------------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self):
        return max(self.terms) if self.terms else None

    def valuation(self):
        return min(self.terms) if self.terms else None

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def lowest_coeff(self) -> int:
        return self.terms[self.valuation()] if self.terms else 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = t
        r._key = None
        return r

    def __neg__(self) -> "LaurentPoly":
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {k: -c for k, c in self.terms.items()}
        r._key = None
        return r

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) == 1:
            ((k, c),) = a.items()
            r = LaurentPoly.__new__(LaurentPoly)
            r.terms = {k + j: c * d for j, d in b.items()}
            r._key = None
            return r
        if len(b) == 1:
            return other * self
        t = {}
        for k, c in a.items():
            for j, d in b.items():
                e = k + j
                s = t.get(e, 0) + c * d
                if s:
                    t[e] = s
                else:
                    del t[e]
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = t
        r._key = None
        return r

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a LaurentPoly")
        r = ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return ZERO
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {k: c * v for k, v in self.terms.items()}
        r._key = None
        return r

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if k == 0:
            return self
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e + k: c for e, c in self.terms.items()}
        r._key = None
        return r

    def q_inverted(self) -> "LaurentPoly":
        """Substitute q -> q^-1."""
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when the division has a
        remainder or a non-integer quotient."""
        if other.is_zero():
            raise ZeroDivisionError("LaurentPoly division by zero")
        if self.is_zero():
            return ZERO
        va, vb = self.valuation(), other.valuation()
        num = {k - va: Fraction(c) for k, c in self.terms.items()}
        den = {k - vb: Fraction(c) for k, c in other.terms.items()}
        quot = _frac_poly_divmod(num, den)
        if quot is None:
            raise ValueError("inexact LaurentPoly division")
        out = {}
        for k, c in quot.items():
            if c.denominator != 1:
                raise ValueError("non-integer quotient in divexact")
            if c:
                out[k + va - vb] = int(c)
        return LaurentPoly(out)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, x):
        return sum(c * x ** k for k, c in self.terms.items())

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                body = str(abs(c))
            else:
                v = "q" if k == 1 else f"q^{k}"
                body = v if abs(c) == 1 else f"{abs(c)}*{v}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def _frac_poly_divmod(num: dict, den: dict):
    """Divide polynomials with Fraction coefficients (keys >= 0).

    Returns the quotient dict when the remainder is zero, else None.
    """
    dd = max(den)
    lead = den[dd]
    rem = dict(num)
    quot = {}
    while rem:
        dr = max(rem)
        if dr < dd:
            return None
        f = rem[dr] / lead
        quot[dr - dd] = f
        for k, c in den.items():
            e = dr - dd + k
            s = rem.get(e, 0) - f * c
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return quot


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of two nonzero integer Laurent polynomials, as a primitive
    polynomial times the gcd of contents, with valuation 0 and positive
    leading coefficient."""
    ca, cb = abs(a.content()), abs(b.content())
    fa = {k - a.valuation(): Fraction(c) for k, c in a.terms.items()}
    fb = {k - b.valuation(): Fraction(c) for k, c in b.terms.items()}
    while fb:
        fa, fb = fb, _frac_poly_mod(fa, fb)
    # fa is the gcd up to a rational unit; make it primitive over Z
    den_lcm = 1
    for c in fa.values():
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    ints = {k: int(c * den_lcm) for k, c in fa.items()}
    cont = 0
    for c in ints.values():
        cont = gcd(cont, c)
    ints = {k: c // cont for k, c in ints.items()}
    if ints[max(ints)] < 0:
        ints = {k: -c for k, c in ints.items()}
    g = gcd(ca, cb)
    return LaurentPoly({k: c * g for k, c in ints.items()})


def _frac_poly_mod(a: dict, b: dict) -> dict:
    db = max(b)
    lead = b[db]
    rem = dict(a)
    while rem and max(rem) >= db:
        dr = max(rem)
        f = rem[dr] / lead
        for k, c in b.items():
            e = dr - db + k
            s = rem.get(e, 0) - f * c
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return rem


# ---------------------------------------------------------------------------
# quantum integers
# ---------------------------------------------------------------------------

def qint(l: int) -> LaurentPoly:
    """[l]_q = (q^l - q^-l)/(q - q^-1).  Odd in l."""
    if l == 0:
        return ZERO
    s = 1 if l > 0 else -1
    a = abs(l)
    p = LaurentPoly({a - 1 - 2 * t: 1 for t in range(a)})
    return p if s > 0 else -p


def qfact(r: int) -> LaurentPoly:
    if r < 0:
        raise ValueError("qfact of a negative integer")
    out = ONE
    for t in range(1, r + 1):
        out = out * qint(t)
    return out


def qbinom(m: int, k: int) -> LaurentPoly:
    """Quantum binomial coefficient; exact Laurent polynomial."""
    if not 0 <= k <= m:
        raise ValueError(f"qbinom out of range: m={m}, k={k}")
    num = ONE
    for t in range(k):
        num = num * qint(m - t)
    return num.divexact(qfact(k))


# ---------------------------------------------------------------------------
# fraction field Q(q), normalized lazily
# ---------------------------------------------------------------------------

class RationalQ:
    """Quotient of Laurent polynomials.  Arithmetic keeps fractions
    unreduced (cheap); canonical() produces the gcd-reduced form with
    denominator of valuation 0 and positive lowest coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE):
        if den.is_zero():
            raise ZeroDivisionError("RationalQ with zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def from_int(c: int) -> "RationalQ":
        return RationalQ(LaurentPoly.from_int(c))

    @staticmethod
    def from_fraction(f: Fraction) -> "RationalQ":
        return RationalQ(LaurentPoly.from_int(f.numerator),
                         LaurentPoly.from_int(f.denominator))

    @staticmethod
    def q_power(k: int) -> "RationalQ":
        return RationalQ(LaurentPoly.q_power(k))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalQ") -> "RationalQ":
        if self.den is ONE and other.den is ONE:
            return RationalQ(self.num + other.num)
        if self.den == other.den:
            return RationalQ(self.num + other.num, self.den)
        return RationalQ(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    def __neg__(self) -> "RationalQ":
        return RationalQ(-self.num, self.den)

    def __sub__(self, other: "RationalQ") -> "RationalQ":
        return self + (-other)

    def __mul__(self, other: "RationalQ") -> "RationalQ":
        if self.den is ONE and other.den is ONE:
            return RationalQ(self.num * other.num)
        return RationalQ(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalQ") -> "RationalQ":
        if other.is_zero():
            raise ZeroDivisionError("RationalQ division by zero")
        return RationalQ(self.num * other.den, self.den * other.num)

    def mul_qpow(self, k: int) -> "RationalQ":
        return RationalQ(self.num.shifted(k), self.den)

    def __pow__(self, n: int) -> "RationalQ":
        if n < 0:
            return RQ_ONE / (self ** (-n))
        r = RQ_ONE
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        c = self.canonical()
        return hash((c.num.key(), c.den.key()))

    def canonical(self) -> "RationalQ":
        num, den = self.num, self.den
        if num.is_zero():
            return RQ_ZERO
        v = den.valuation()
        if v:
            num, den = num.shifted(-v), den.shifted(-v)
        nv = min(num.valuation(), 0)
        npoly = num.shifted(-nv)
        g = _poly_gcd(npoly, den)
        if not g.is_one():
            npoly = npoly.divexact(g)
            den = den.divexact(g)
        num = npoly.shifted(nv)
        if den.lowest_coeff() < 0:
            num, den = -num, -den
        # clear negative exponents: min(val num, val den) = 0
        shift = min(num.valuation(), den.valuation())
        if shift:
            num, den = num.shifted(-shift), den.shifted(-shift)
        return RationalQ(num, den)

    def evaluate(self, x):
        return self.num.evaluate(x) / self.den.evaluate(x)

    def __str__(self):
        c = self.canonical()
        if c.den.is_one():
            return str(c.num)
        return f"({c.num})/({c.den})"

    def __repr__(self):
        return f"RationalQ('{self}')"


RQ_ZERO = RationalQ(ZERO)
RQ_ONE = RationalQ(ONE)
Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})


# ---------------------------------------------------------------------------
# truncated formal series in z^{+-1}
# ---------------------------------------------------------------------------

class QSeries:
    """Truncated series sum_{s=0..order} c_s z^{direction*s} with
    RationalQ coefficients."""

    __slots__ = ("direction", "coeffs", "order")

    def __init__(self, direction: int, coeffs, order: int):
        if direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = list(coeffs)
        if len(cs) < order + 1:
            cs += [RQ_ZERO] * (order + 1 - len(cs))
        self.direction = direction
        self.coeffs = tuple(cs[: order + 1])
        self.order = order

    def coeff(self, s: int) -> RationalQ:
        return self.coeffs[s]

    def __eq__(self, other):
        return (isinstance(other, QSeries) and self.direction == other.direction
                and self.order == other.order
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __repr__(self):
        var = "z" if self.direction == 1 else "z^-1"
        return f"QSeries({var}; {[str(c) for c in self.coeffs]})"


def _series_mul(a, b, order):
    out = [RQ_ZERO] * (order + 1)
    for i, ca in enumerate(a):
        if i > order or ca.is_zero():
            continue
        for j, cb in enumerate(b):
            if i + j > order:
                break
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return out


def series_of_rational(num: dict, den: dict, direction: int, order: int) -> QSeries:
    """Expand num(z)/den(z) as a truncated series in z (direction +1)
    or z^-1 (direction -1).  num/den map z-exponents to RationalQ."""
    num = {k: c for k, c in num.items() if not c.is_zero()}
    den = {k: c for k, c in den.items() if not c.is_zero()}
    if not den:
        raise ZeroDivisionError("zero denominator")
    if direction == -1:
        dn = max(num) if num else 0
        dd = max(den)
        offset = dd - dn
        if num and offset < 0:
            raise ExpansionError("numerator degree exceeds denominator degree")
        rnum = {dn - k: c for k, c in num.items()}
        rden = {dd - k: c for k, c in den.items()}
        inner = series_of_rational(rnum, rden, 1, order)
        shifted = [RQ_ZERO] * (order + 1)
        for s in range(order + 1 - offset):
            shifted[s + offset] = inner.coeff(s)
        return QSeries(-1, shifted, order)
    c0 = den.get(0, RQ_ZERO)
    if c0.is_zero():
        raise ExpansionError("denominator has no invertible constant term")
    out = []
    for s in range(order + 1):
        acc = num.get(s, RQ_ZERO)
        for j in range(1, s + 1):
            dj = den.get(j)
            if dj is not None:
                acc = acc - dj * out[s - j]
        out.append(acc / c0)
    return QSeries(1, out, order)


def series_log(s: QSeries, order: int | None = None) -> QSeries:
    """Formal logarithm of a series with constant term 1."""
    if order is None:
        order = s.order
    if order > s.order:
        raise ValueError("cannot extend truncation order in series_log")
    if not s.coeff(0) == RQ_ONE:
        raise ValueError("series_log requires constant term 1")
    u = [RQ_ZERO] + list(s.coeffs[1: order + 1])
    out = [RQ_ZERO] * (order + 1)
    power = u
    sign = 1
    for m in range(1, order + 1):
        inv_m = RationalQ.from_fraction(Fraction(sign, m))
        for k in range(m, order + 1):
            out[k] = out[k] + inv_m * power[k]
        power = _series_mul(power, u, order)
        sign = -sign
    return QSeries(s.direction, out, order)


def series_exp(s: QSeries, order: int | None = None) -> QSeries:
    """Formal exponential of a series with constant term 0."""
    if order is None:
        order = s.order
    if not s.coeff(0).is_zero():
        raise ValueError("series_exp requires constant term 0")
    u = [RQ_ZERO] + list(s.coeffs[1: order + 1])
    out = [RQ_ONE] + [RQ_ZERO] * order
    power = [RQ_ONE] + [RQ_ZERO] * order
    fact = 1
    for m in range(1, order + 1):
        fact *= m
        power = _series_mul(power, u, order)
        inv = RationalQ.from_fraction(Fraction(1, fact))
        for k in range(m, order + 1):
            out[k] = out[k] + inv * power[k]
    return QSeries(s.direction, out, order)


# ---------------------------------------------------------------------------
# cyclotomic arithmetic
# ---------------------------------------------------------------------------

def _cyclo_cache_path(n: int):
    root = os.environ.get("TORCRYS_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"cyclotomic_{n}.json")


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, by exact recursive division of
    q^n - 1 by the cyclotomic polynomials of the proper divisors."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    path = _cyclo_cache_path(n)
    if path and os.path.exists(path):
        with open(path) as fh:
            return LaurentPoly({int(k): v for k, v in json.load(fh).items()})
    p = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p = p.divexact(cyclotomic(d))
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            json.dump({str(k): v for k, v in p.terms.items()}, fh)
    return p


class CycloElem:
    """Element of Q[q]/(Phi_N), i.e. the cyclotomic field Q(zeta_N).

    Coefficients are Fractions indexed by powers q^0..q^{deg-1}.
    """

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        phi = cyclotomic(N)
        deg = phi.degree()
        cs = list(coeffs) + [Fraction(0)] * deg
        self.N = N
        self.coeffs = tuple(Fraction(c) for c in cs[:deg])

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(N: int) -> "CycloElem":
        return CycloElem(N, [])

    @staticmethod
    def one(N: int) -> "CycloElem":
        return CycloElem(N, [Fraction(1)])

    @staticmethod
    def q_power(N: int, k: int) -> "CycloElem":
        return CycloElem.from_laurent(N, LaurentPoly.q_power(k % N))

    @staticmethod
    def from_laurent(N: int, p: LaurentPoly) -> "CycloElem":
        # q^N = 1 in the quotient, so exponents reduce mod N first
        dense = {}
        for k, c in p.terms.items():
            e = k % N
            dense[e] = dense.get(e, 0) + c
        phi = cyclotomic(N)
        deg = phi.degree()
        cs = [Fraction(0)] * max(deg, N)
        for e, c in dense.items():
            cs[e] += c
        # reduce mod Phi_N
        lead = phi.terms[deg]
        for e in range(len(cs) - 1, deg - 1, -1):
            if cs[e]:
                f = cs[e] / lead
                for k, c in phi.terms.items():
                    cs[e - deg + k] -= f * c
        return CycloElem(N, cs[:deg])

    @staticmethod
    def from_fraction(N: int, f: Fraction) -> "CycloElem":
        return CycloElem(N, [Fraction(f)])

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "CycloElem") -> "CycloElem":
        return CycloElem(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.N, [-a for a in self.coeffs])

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        return CycloElem(self.N, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "CycloElem") -> "CycloElem":
        deg = len(self.coeffs)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        phi = cyclotomic(self.N)
        lead = phi.terms[deg]
        for e in range(len(conv) - 1, deg - 1, -1):
            if conv[e]:
                f = conv[e] / lead
                for k, c in phi.terms.items():
                    conv[e - deg + k] -= f * c
        return CycloElem(self.N, conv[:deg])

    def scale(self, f: Fraction) -> "CycloElem":
        f = Fraction(f)
        return CycloElem(self.N, [f * a for a in self.coeffs])

    def inv(self) -> "CycloElem":
        """Inverse in the field Q(zeta_N); Phi_N is irreducible over Q."""
        if self.is_zero():
            raise SpecializationError("inverse of zero in cyclotomic field")
        phi = cyclotomic(self.N)
        b = {k: Fraction(c) for k, c in phi.terms.items()}
        a = {i: c for i, c in enumerate(self.coeffs) if c}
        # extended Euclid on (a, b)
        r0, r1 = b, a
        s0, s1 = {}, {0: Fraction(1)}
        while r1:
            q, r = _frac_poly_divmod_full(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        # r0 = gcd = nonzero constant (irreducibility)
        if max(r0) != 0:
            raise SpecializationError("non-invertible cyclotomic element")
        c = r0[0]
        inv = {k: v / c for k, v in s0.items()}
        cs = [Fraction(0)] * len(self.coeffs)
        for k, v in inv.items():
            cs[k] = v
        return CycloElem(self.N, cs)

    def __truediv__(self, other: "CycloElem") -> "CycloElem":
        return self * other.inv()

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, CycloElem) and self.N == other.N
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.N, self.coeffs))

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(complex(c) * z ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                v = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
                parts.append(f"{c}*{v}" if k else f"{c}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CycloElem(N={self.N}, '{self}')"


def _frac_poly_divmod_full(a: dict, b: dict):
    db = max(b)
    lead = b[db]
    rem = dict(a)
    quot = {}
    while rem and max(rem) >= db:
        dr = max(rem)
        f = rem[dr] / lead
        quot[dr - db] = quot.get(dr - db, 0) + f
        for k, c in b.items():
            e = dr - db + k
            s = rem.get(e, 0) - f * c
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return {k: v for k, v in quot.items() if v}, rem


def _frac_poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for i, c in a.items():
        for j, d in b.items():
            s = out.get(i + j, 0) + c * d
            if s:
                out[i + j] = s
            else:
                out.pop(i + j, None)
    return out


def _frac_poly_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def eval_cyclotomic(p: RationalQ, N: int) -> CycloElem:
    """Image of p in Q(zeta_N); raises SpecializationError when the
    denominator vanishes at the primitive N-th root."""
    den = CycloElem.from_laurent(N, p.den)
    if den.is_zero():
        raise SpecializationError(
            f"denominator {p.den} vanishes at a primitive {N}-th root of unity")
    num = CycloElem.from_laurent(N, p.num)
    return num * den.inv()
