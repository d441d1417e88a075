"""Exact rational polynomials, truncated power series, and a decision
procedure for strict positivity on the open unit interval.

Everything here is integer/Fraction arithmetic; no floats are ever
consulted for a verdict.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no sign on any interval."""


class ZeroConstantTermError(ValueError):
    """A power series with f(0) = 0 is not invertible."""


class NoRationalWitnessError(ArithmeticError):
    """Positivity fails only at irrational points of even multiplicity,
    so no rational violation witness exists.  Cannot occur for the
    polynomial families produced elsewhere in this package; raised so the
    caller is never handed a fake witness."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactPoly:
    """Dense polynomial with Fraction coefficients, low degree first.

    The zero polynomial is represented by an empty coefficient tuple.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, cs: Iterable) -> "ExactPoly":
        lst = [_as_fraction(c) for c in cs]
        while lst and lst[-1] == 0:
            lst.pop()
        return cls(tuple(lst))

    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls(())

    @classmethod
    def one(cls) -> "ExactPoly":
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, n: int, c=1) -> "ExactPoly":
        c = _as_fraction(c)
        if c == 0:
            return cls(())
        return cls(tuple([Fraction(0)] * n + [c]))

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly.from_coeffs(out)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return ExactPoly.from_coeffs(out)

    __rmul__ = __mul__

    def scale(self, s) -> "ExactPoly":
        s = _as_fraction(s)
        if s == 0:
            return ExactPoly(())
        return ExactPoly(tuple(c * s for c in self.coeffs))

    def __pow__(self, e: int) -> "ExactPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = ExactPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, t) -> Fraction:
        t = _as_fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "ExactPoly":
        return ExactPoly.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            elif i == 1:
                term = "t" if abs(c) == 1 else f"{abs(c)}*t"
            else:
                term = f"t^{i}" if abs(c) == 1 else f"{abs(c)}*t^{i}"
            if not parts:
                parts.append(term if c > 0 else ("-" + term if i else str(c)))
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def poly_mul(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    """Product of two exact polynomials."""
    return f * g


def eval_rational(f: ExactPoly, t) -> Fraction:
    """Evaluate f at a rational point, exactly."""
    return f(t)


@dataclass(frozen=True)
class TruncSeries:
    """Power series known modulo t^(trunc_degree+1)."""

    coeffs: tuple[Fraction, ...]
    trunc_degree: int

    @classmethod
    def from_coeffs(cls, cs: Iterable, trunc_degree: int) -> "TruncSeries":
        lst = [_as_fraction(c) for c in cs][: trunc_degree + 1]
        while len(lst) < trunc_degree + 1:
            lst.append(Fraction(0))
        return cls(tuple(lst), trunc_degree)

    @classmethod
    def from_poly(cls, f: ExactPoly, trunc_degree: int) -> "TruncSeries":
        return cls.from_coeffs(f.coeffs, trunc_degree)

    def coeff(self, n: int) -> Fraction:
        if n > self.trunc_degree:
            raise IndexError(f"coefficient {n} beyond truncation order")
        return self.coeffs[n]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        d = min(self.trunc_degree, other.trunc_degree)
        return TruncSeries.from_coeffs(
            [self.coeffs[i] + other.coeffs[i] for i in range(d + 1)], d
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        d = min(self.trunc_degree, other.trunc_degree)
        return TruncSeries.from_coeffs(
            [self.coeffs[i] - other.coeffs[i] for i in range(d + 1)], d
        )

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        d = min(self.trunc_degree, other.trunc_degree)
        out = [Fraction(0)] * (d + 1)
        for i, ca in enumerate(self.coeffs[: d + 1]):
            if ca == 0:
                continue
            for j in range(d + 1 - i):
                cb = other.coeffs[j]
                if cb:
                    out[i + j] += ca * cb
        return TruncSeries(tuple(out), d)

    def as_poly(self) -> ExactPoly:
        return ExactPoly.from_coeffs(self.coeffs)


def series_inverse(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of a truncated series with f(0) != 0.

    Computed by back substitution: the defining relation f * g = 1 gives
    g_n = -(1/f_0) * sum_{k=1..n} f_k g_{n-k}.
    """
    if f.coeffs[0] == 0:
        raise ZeroConstantTermError("series has zero constant term")
    d = f.trunc_degree
    inv0 = 1 / f.coeffs[0]
    out = [inv0] + [Fraction(0)] * d
    for n in range(1, d + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if f.coeffs[k]:
                acc += f.coeffs[k] * out[n - k]
        out[n] = -inv0 * acc
    return TruncSeries(tuple(out), d)


# ---------------------------------------------------------------------------
# Positivity on the open interval (0, 1)
# ---------------------------------------------------------------------------


class Verdict(str, enum.Enum):
    HOLDS = "HOLDS"
    VIOLATED = "VIOLATED"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class SturmCertificate:
    """Summary of the exact root count certifying a HOLDS verdict."""

    roots_in_interval: int
    sign_changes_at_zero: int
    sign_changes_at_one: int
    chain_length: int
    stripped_zero_multiplicity: int
    stripped_one_multiplicity: int
    sample_point: Fraction
    sample_value: Fraction


@dataclass(frozen=True)
class PositivityReport:
    verdict: Verdict
    witness: Fraction | None = None
    witness_value: Fraction | None = None
    certificate: SturmCertificate | None = None

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


# Integer polynomial helpers (dense int lists, low degree first, no
# trailing zeros).  The Sturm chain is kept primitive: every element is
# rescaled by a positive rational to coprime integer coefficients, which
# keeps coefficient growth polynomial instead of exponential.

def _itrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive_from_fractions(cs: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return _itrim(ints)


def _ieval(a: Sequence[int], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


def _irem(a: list[int], b: list[int]) -> list[int]:
    """Primitive remainder of a mod b, rescaled by a positive rational."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    while len(r) - 1 >= db and r:
        q = r[-1] / lb
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        while r and r[-1] == 0:
            r.pop()
    return _primitive_from_fractions(r)


def _iderivative(a: Sequence[int]) -> list[int]:
    return _itrim([i * c for i, c in enumerate(a)][1:])


def _igcd_poly(a: list[int], b: list[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _irem(a, b)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _idiv_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact quotient a / b, primitive-normalized.  Asserts divisibility."""
    r = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = Fraction(b[-1])
    while len(r) >= len(b) and r:
        q = r[-1] / lb
        shift = len(r) - len(b)
        out[shift] = q
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ArithmeticError("exact polynomial division left a remainder")
    return _primitive_from_fractions(out)


def _sturm_chain(h: list[int]) -> list[list[int]]:
    chain = [list(h)]
    d = _iderivative(h)
    if d:
        chain.append(d)
        while len(chain[-1]) > 1:
            rem = _irem(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in rem])
    return chain


def _sign_changes(values: Iterable) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _count_roots_01(chain: list[list[int]]) -> tuple[int, int, int]:
    v0 = _sign_changes(p[0] for p in chain)
    v1 = _sign_changes(sum(p) for p in chain)
    return v0 - v1, v0, v1


def _strip_unit_interval_roots(f: ExactPoly) -> tuple[list[int], int, int]:
    """Write f = t^k0 (1-t)^k1 h with h(0) != 0 != h(1); return primitive h."""
    cs = list(f.coeffs)
    k0 = 0
    while cs[0] == 0:
        cs.pop(0)
        k0 += 1
    h = _primitive_from_fractions(cs)
    k1 = 0
    while sum(h) == 0:
        # h = (1-t) q with q_i = sum of h_0..h_i
        q: list[int] = []
        acc = 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = _itrim(q)
        k1 += 1
    return h, k0, k1


def _small_denominator_scan(h: Sequence[int], max_den: int = 24) -> Fraction | None:
    """First rational in (0,1), ordered by denominator, where h <= 0."""
    for q in range(2, max_den + 1):
        for num in range(1, q):
            if gcd(num, q) != 1:
                continue
            t = Fraction(num, q)
            if _ieval(h, t) <= 0:
                return t
    return None


def _isolate_sign_change_roots(
    chain: list[list[int]], lo: Fraction, hi: Fraction, count: int
) -> list[tuple[Fraction, Fraction]]:
    """Split (lo, hi] into subintervals each holding one root of chain[0]."""
    if count == 0:
        return []
    if count == 1:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    vm = _sign_changes(_ieval(p, mid) for p in chain)
    vl = _sign_changes(_ieval(p, lo) for p in chain)
    left = vl - vm
    return _isolate_sign_change_roots(chain, lo, mid, left) + \
        _isolate_sign_change_roots(chain, mid, hi, count - left)


def _rational_roots_in(h_sf: list[int], lo: Fraction, hi: Fraction) -> Fraction | None:
    """Rational root of the primitive polynomial h_sf inside (lo, hi)."""
    a0, alead = h_sf[0], h_sf[-1]

    def divisors(m: int) -> list[int]:
        m = abs(m)
        out = []
        i = 1
        while i * i <= m:
            if m % i == 0:
                out.append(i)
                out.append(m // i)
            i += 1
        return sorted(set(out))

    for den in divisors(alead):
        for num in divisors(a0):
            cand = Fraction(num, den)
            if lo < cand < hi and _ieval(h_sf, cand) == 0:
                return cand
    return None


def _refine_witness(
    h: list[int], lo: Fraction, hi: Fraction, lo_positive: bool, max_iter: int = 400
) -> Fraction:
    """Bisect an interval with a sign change of h to a point with h <= 0.

    lo_positive says which endpoint carries the positive sign; the
    midpoint replaces that endpoint whenever h(mid) > 0, so the interval
    keeps straddling the crossing and some midpoint lands on the
    nonpositive side.
    """
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        if _ieval(h, mid) <= 0:
            return mid
        if lo_positive:
            lo = mid
        else:
            hi = mid
    raise ArithmeticError("witness bisection failed to converge")


def positive_on_open_unit_interval(f: ExactPoly) -> PositivityReport:
    """Decide whether f(t) > 0 for every t in the open interval (0, 1).

    Roots at the endpoints are factored out first (they do not affect the
    open-interval verdict).  A HOLDS verdict carries a Sturm certificate:
    zero roots of the squarefree part inside (0,1) plus a positive interior
    sample.  A VIOLATED verdict carries an exact rational witness with
    f(witness) <= 0; witnesses are searched smallest-denominator first, so
    they stay human-readable.
    """
    if f.is_zero:
        raise ZeroPolynomialError("positivity of the zero polynomial is undefined")

    h, k0, k1 = _strip_unit_interval_roots(f)

    if len(h) == 1:
        if h[0] > 0:
            cert = SturmCertificate(
                roots_in_interval=0, sign_changes_at_zero=0,
                sign_changes_at_one=0, chain_length=1,
                stripped_zero_multiplicity=k0, stripped_one_multiplicity=k1,
                sample_point=Fraction(1, 2), sample_value=f(Fraction(1, 2)),
            )
            return PositivityReport(Verdict.HOLDS, certificate=cert)
        w = Fraction(1, 2)
        return PositivityReport(Verdict.VIOLATED, witness=w, witness_value=f(w))

    w = _small_denominator_scan(h)
    if w is not None:
        return PositivityReport(Verdict.VIOLATED, witness=w, witness_value=f(w))

    g = _igcd_poly(h, _iderivative(h))
    h_sf = _idiv_exact(h, g) if len(g) > 1 else h
    if h_sf[-1] < 0:
        h_sf = [-c for c in h_sf]
    chain = _sturm_chain(h_sf)
    count, v0, v1 = _count_roots_01(chain)

    if count == 0:
        sample = Fraction(1, 2)
        value = f(sample)
        if value <= 0:  # pragma: no cover - the scan above would have hit
            return PositivityReport(Verdict.VIOLATED, witness=sample, witness_value=value)
        cert = SturmCertificate(
            roots_in_interval=0, sign_changes_at_zero=v0,
            sign_changes_at_one=v1, chain_length=len(chain),
            stripped_zero_multiplicity=k0, stripped_one_multiplicity=k1,
            sample_point=sample, sample_value=value,
        )
        return PositivityReport(Verdict.HOLDS, certificate=cert)

    # Interior roots exist, so strict positivity fails; produce a witness.
    intervals = _isolate_sign_change_roots(chain, Fraction(0), Fraction(1), count)
    for lo, hi in intervals:
        vlo, vhi = _ieval(h, lo), _ieval(h, hi)
        if 0 < lo < 1 and vlo <= 0:
            return PositivityReport(Verdict.VIOLATED, witness=lo, witness_value=f(lo))
        if 0 < hi < 1 and vhi <= 0:
            return PositivityReport(Verdict.VIOLATED, witness=hi, witness_value=f(hi))
        if vlo * vhi < 0:
            w = _refine_witness(h, lo, hi, lo_positive=vlo > 0)
            return PositivityReport(Verdict.VIOLATED, witness=w, witness_value=f(w))
        root = _rational_roots_in(h_sf, lo, hi)
        if root is not None:
            return PositivityReport(Verdict.VIOLATED, witness=root, witness_value=f(root))
    raise NoRationalWitnessError(
        "polynomial vanishes in (0,1) only at irrational points of even multiplicity"
    )
