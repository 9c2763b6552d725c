"""Exact coefficient arithmetic: multivariate Laurent polynomials over ℚ and
their fraction field.

The two deformation parameters r and s are carried through half-power
generators: a variable declared with granularity 2 internally stores the
exponent of r^(1/2), so every half-integer power of r or s has an integer
internal exponent.  All coefficients are arbitrary-precision rationals; no
floating point is used anywhere.

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Mapping

Exps = tuple  # integer exponent vector, one slot per ring variable


@dataclass(frozen=True)
class Variable:
    """A ring variable.  ``denom`` is the exponent granularity: an internal
    exponent e prints as name^(e/denom), e.g. r with denom 2 stores half
    powers of r."""

    name: str
    denom: int = 1


class ScalarRing:
    """Context object fixing an ordered variable set.

    All Scalars hold a reference to their ring; mixing rings raises.
    """

    def __init__(self, variables: Iterable[Variable | str]):
        vs = []
        for v in variables:
            vs.append(Variable(v) if isinstance(v, str) else v)
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable name in {names}")
        self.variables: tuple[Variable, ...] = tuple(vs)
        self.names: tuple[str, ...] = tuple(names)
        self.index: dict[str, int] = {n: i for i, n in enumerate(names)}
        self.nvars = len(vs)
        self._zero_exps: Exps = (0,) * self.nvars
        self.zero = Scalar(self, {}, {self._zero_exps: Fraction(1)}, _raw=True)
        self.one = Scalar(
            self,
            {self._zero_exps: Fraction(1)},
            {self._zero_exps: Fraction(1)},
            _raw=True,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, ScalarRing) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"ScalarRing({', '.join(self.names)})"

    # -- constructors ------------------------------------------------------

    def num(self, value) -> Scalar:
        """Constant scalar from an int or Fraction."""
        c = Fraction(value)
        if c == 0:
            return self.zero
        return Scalar(self, {self._zero_exps: c}, {self._zero_exps: Fraction(1)}, _raw=True)

    def mono(self, coeff=1, **powers) -> Scalar:
        """Monomial from printed-unit powers, e.g. ``ring.mono(r=2, s=-1)``.

        Powers may be ints or Fractions; they must land on the variable's
        granularity (r accepts half-integers, z only integers).
        """
        c = Fraction(coeff)
        if c == 0:
            return self.zero
        exps = [0] * self.nvars
        for name, p in powers.items():
            if name not in self.index:
                raise KeyError(f"unknown variable {name!r} in {self.names}")
            i = self.index[name]
            e = Fraction(p) * self.variables[i].denom
            if e.denominator != 1:
                raise ValueError(f"power {p} of {name} is not a multiple of 1/{self.variables[i].denom}")
            exps[i] = int(e)
        t = tuple(exps)
        return Scalar(self, {t: c}, {self._zero_exps: Fraction(1)}, _raw=True)

    def atom(self, name: str, power: int = 1) -> Scalar:
        """Generator at internal granularity: ``atom('r')`` is r^(1/2) when r
        has denom 2."""
        i = self.index[name]
        exps = [0] * self.nvars
        exps[i] = power
        return Scalar(self, {tuple(exps): Fraction(1)}, {self._zero_exps: Fraction(1)}, _raw=True)

    def poly(self, terms: Mapping[Exps, Fraction]) -> Scalar:
        """Scalar from a raw internal-exponent term map (used by parse/JSON)."""
        return _make(self, dict(terms), {self._zero_exps: Fraction(1)})


def ring_create(names: Iterable[Variable | str]) -> ScalarRing:
    """Create a coefficient ring with the given ordered variables."""
    return ScalarRing(names)


def rs_ring(*extra: str) -> ScalarRing:
    """The standard ring in r, s (half-power granularity) plus optional
    plain spectral/evaluation variables."""
    return ScalarRing([Variable("r", 2), Variable("s", 2), *extra])


# ---------------------------------------------------------------------------
# raw Laurent-term-dict helpers (hot path; no zero coefficients stored)
# ---------------------------------------------------------------------------


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        nc = out.get(e, 0) + c
        if nc:
            out[e] = nc
        elif e in out:
            del out[e]
    return out


def _pneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _pscale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {e: cc * c for e, cc in a.items()}


def _pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(sum, zip(ea, eb)))
            nc = out.get(e, 0) + ca * cb
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
    return out


def _ppow(a: dict, n: int, nv: int) -> dict:
    out = {(0,) * nv: Fraction(1)}
    base = a
    while n:
        if n & 1:
            out = _pmul(out, base)
        n >>= 1
        if n:
            base = _pmul(base, base)
    return out


def _pshift(a: dict, shift: Exps) -> dict:
    if not any(shift):
        return dict(a)
    return {tuple(x + y for x, y in zip(e, shift)): c for e, c in a.items()}


def _pminexps(a: dict, nv: int) -> Exps:
    its = iter(a)
    first = next(its)
    m = list(first)
    for e in its:
        for i in range(nv):
            if e[i] < m[i]:
                m[i] = e[i]
    return tuple(m)


def _grlex_key(e: Exps):
    return (sum(e), e)


def _plead(a: dict) -> tuple[Exps, Fraction]:
    e = max(a, key=_grlex_key)
    return e, a[e]


def _is_const(a: dict) -> bool:
    return len(a) == 1 and not any(next(iter(a)))


# ---------------------------------------------------------------------------
# polynomial gcd over ℚ via recursive subresultant PRS
# ---------------------------------------------------------------------------


def _int_normalize(a: dict) -> dict:
    """Scale to integer coefficients, content 1, positive leading coeff."""
    if not a:
        return a
    den_lcm = 1
    for c in a.values():
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in a.values():
        num_gcd = int_gcd(num_gcd, c.numerator * (den_lcm // c.denominator))
    scale = Fraction(den_lcm, num_gcd)
    if a[max(a, key=_grlex_key)] < 0:
        scale = -scale
    return {e: c * scale for e, c in a.items()}


def _degs(a: dict, nv: int) -> list[int]:
    d = [0] * nv
    for e in a:
        for i in range(nv):
            if e[i] > d[i]:
                d[i] = e[i]
    return d


def _deg_in(a: dict, v: int) -> int:
    return max(e[v] for e in a)


def _coeff_of(a: dict, v: int, k: int) -> dict:
    """Coefficient of (main var)^k: full-width dict with slot v zeroed."""
    out = {}
    for e, c in a.items():
        if e[v] == k:
            ez = list(e)
            ez[v] = 0
            out[tuple(ez)] = c
    return out


def _mul_var_pow(a: dict, v: int, k: int) -> dict:
    if k == 0:
        return a
    out = {}
    for e, c in a.items():
        ez = list(e)
        ez[v] += k
        out[tuple(ez)] = c
    return out


def _pdivexact(a: dict, b: dict, nv: int) -> dict:
    """Exact multivariate division a / b; raises ArithmeticError if inexact."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return {}
    if _is_const(b):
        c = next(iter(b.values()))
        return _pscale(a, Fraction(1) / c)
    q: dict = {}
    rem = dict(a)
    eb, cb = _plead(b)
    while rem:
        er, cr = _plead(rem)
        eq = tuple(x - y for x, y in zip(er, eb))
        if any(x < 0 for x in eq):
            raise ArithmeticError("inexact polynomial division")
        cq = cr / cb
        q[eq] = q.get(eq, 0) + cq
        rem = _padd(rem, _pneg(_pmul({eq: cq}, b)))
    return {e: c for e, c in q.items() if c}


def _content_wrt(a: dict, v: int, nv: int) -> dict:
    """gcd of the coefficients of a viewed as a polynomial in variable v."""
    g: dict = {}
    for k in sorted({e[v] for e in a}):
        g = _pgcd(g, _coeff_of(a, v, k), nv)
        if _is_const(g):
            break
    return g


def _prem(a: dict, b: dict, v: int, nv: int) -> dict:
    """Pseudo-remainder of a by b in the main variable v:
    lc(b)^(deg a - deg b + 1) * a  mod  b."""
    db = _deg_in(b, v)
    lb = _coeff_of(b, v, db)
    r = a
    e = _deg_in(a, v) - db + 1
    while r and (dr := _deg_in(r, v)) >= db:
        lr = _coeff_of(r, v, dr)
        r = _padd(_pmul(r, lb), _pneg(_mul_var_pow(_pmul(lr, b), v, dr - db)))
        e -= 1
    if e > 0:
        r = _pmul(r, _ppow(lb, e, nv))
    return r


def _pgcd(a: dict, b: dict, nv: int) -> dict:
    """Multivariate gcd over ℚ (integer-primitive output, positive lead).

    Content/primitive-part recursion over a chosen main variable with a
    subresultant polynomial remainder sequence in between.
    """
    if not a:
        return _int_normalize(b)
    if not b:
        return _int_normalize(a)
    one = {(0,) * nv: Fraction(1)}
    if _is_const(a) or _is_const(b):
        return one
    da, db = _degs(a, nv), _degs(b, nv)
    common = [i for i in range(nv) if da[i] > 0 and db[i] > 0]
    if not common:
        return one
    v = min(common, key=lambda i: min(da[i], db[i]))

    ca = _content_wrt(a, v, nv)
    cb = _content_wrt(b, v, nv)
    f = _pdivexact(a, ca, nv)
    g = _pdivexact(b, cb, nv)
    cont = _pgcd(ca, cb, nv)

    if _deg_in(f, v) < _deg_in(g, v):
        f, g = g, f
    # subresultant PRS bookkeeping (Collins): divisors gpsi keep coefficients small
    gprev = one
    hprev = one
    while True:
        delta = _deg_in(f, v) - _deg_in(g, v)
        r = _prem(f, g, v, nv)
        if not r:
            break
        if _deg_in(r, v) == 0:
            return cont
        divisor = _pmul(gprev, _ppow(hprev, delta, nv))
        f, g = g, _pdivexact(r, divisor, nv)
        gprev = _coeff_of(f, v, _deg_in(f, v))
        if delta == 0:
            # hprev unchanged
            pass
        elif delta == 1:
            hprev = gprev
        else:
            hprev = _pdivexact(_ppow(gprev, delta, nv), _ppow(hprev, delta - 1, nv), nv)
    gc = _content_wrt(g, v, nv)
    return _int_normalize(_pmul(cont, _pdivexact(g, gc, nv)))


# ---------------------------------------------------------------------------
# LaurentPoly / Scalar
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite map from integer exponent vectors to nonzero rationals."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ScalarRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {self.ring._zero_exps: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return _text(self.ring, self.terms)


def _make(ring: ScalarRing, num: dict, den: dict) -> "Scalar":
    """Canonicalize a raw fraction of Laurent term dicts.

    Canonical form: numerator and denominator coprime, denominator a true
    polynomial (no negative exponents, not divisible by any variable) and
    monic under graded lex; all monomial content lives in the numerator.
    """
    if not den:
        raise ZeroDivisionError("zero denominator")
    nv = ring.nvars
    if not num:
        return ring.zero
    # move the denominator's monomial part into the numerator
    mden = _pminexps(den, nv)
    if any(mden):
        den = _pshift(den, tuple(-x for x in mden))
        num = _pshift(num, tuple(-x for x in mden))
    if len(den) == 1:
        c = next(iter(den.values()))
        if c != 1:
            num = _pscale(num, Fraction(1) / c)
        return Scalar(ring, num, {ring._zero_exps: Fraction(1)}, _raw=True)
    # reduce: strip numerator monomial, cancel gcd, re-attach
    mnum = _pminexps(num, nv)
    num0 = _pshift(num, tuple(-x for x in mnum))
    g = _pgcd(num0, den, nv)
    if not _is_const(g):
        num0 = _pdivexact(num0, g, nv)
        den = _pdivexact(den, g, nv)
        if len(den) == 1:
            c = next(iter(den.values()))
            num0 = _pscale(num0, Fraction(1) / c)
            return Scalar(ring, _pshift(num0, mnum), {ring._zero_exps: Fraction(1)}, _raw=True)
    _, lc = _plead(den)
    if lc != 1:
        inv = Fraction(1) / lc
        num0 = _pscale(num0, inv)
        den = _pscale(den, inv)
    return Scalar(ring, _pshift(num0, mnum), den, _raw=True)


class Scalar:
    """Element of the fraction field of the Laurent polynomial ring.

    Always held in canonical form, so ``==`` is a complete zero/equality
    test.  Arithmetic is exact.
    """

    __slots__ = ("ring", "_num", "_den")

    def __init__(self, ring: ScalarRing, num: dict, den: dict, _raw: bool = False):
        if not _raw:
            canon = _make(ring, num, den)
            num, den = canon._num, canon._den
        self.ring = ring
        self._num = num
        self._den = den

    # -- inspection --------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly(self.ring, self._num)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly(self.ring, self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_one(self) -> bool:
        return self._den == {self.ring._zero_exps: Fraction(1)} and self._num == {
            self.ring._zero_exps: Fraction(1)
        }

    def den_is_one(self) -> bool:
        return self._den == {self.ring._zero_exps: Fraction(1)}

    def is_monomial(self) -> bool:
        return self.den_is_one() and len(self._num) == 1

    def monomial_parts(self) -> tuple[Exps, Fraction]:
        if not self.is_monomial():
            raise ValueError(f"not a monomial: {self}")
        ((e, c),) = self._num.items()
        return e, c

    def as_fraction(self) -> Fraction:
        """Constant value; raises if the scalar is not constant."""
        if not self.den_is_one():
            raise ValueError(f"not constant: {self}")
        if not self._num:
            return Fraction(0)
        ((e, c),) = self._num.items()
        if any(e):
            raise ValueError(f"not constant: {self}")
        return c

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.num(other)
        return (
            isinstance(other, Scalar)
            and self.ring == other.ring
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self):
        return hash(
            (self.ring, frozenset(self._num.items()), frozenset(self._den.items()))
        )

    def __bool__(self) -> bool:
        return bool(self._num)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise ValueError("mixing scalars from different rings")
            return other
        return self.ring.num(other)

    def __add__(self, other) -> "Scalar":
        o = self._coerce(other)
        if self._den == o._den:
            return _make(self.ring, _padd(self._num, o._num), self._den)
        return _make(
            self.ring,
            _padd(_pmul(self._num, o._den), _pmul(o._num, self._den)),
            _pmul(self._den, o._den),
        )

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.ring, _pneg(self._num), self._den, _raw=True)

    def __sub__(self, other) -> "Scalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        o = self._coerce(other)
        return _make(
            self.ring, _pmul(self._num, o._num), _pmul(self._den, o._den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        o = self._coerce(other)
        if not o._num:
            raise ZeroDivisionError("scalar division by zero")
        return _make(
            self.ring, _pmul(self._num, o._den), _pmul(self._den, o._num)
        )

    def __rtruediv__(self, other) -> "Scalar":
        return self._coerce(other) / self

    def inv(self) -> "Scalar":
        if not self._num:
            raise ZeroDivisionError("inverting zero scalar")
        return _make(self.ring, self._den, self._num)

    def __pow__(self, n: int) -> "Scalar":
        if n == 0:
            return self.ring.one
        if n < 0:
            return self.inv() ** (-n)
        nv = self.ring.nvars
        return Scalar(
            self.ring, _ppow(self._num, n, nv), _ppow(self._den, n, nv), _raw=True
        )

    # -- structure ----------------------------------------------------------

    def sqrt_monomial(self) -> "Scalar":
        """Square root of a monomial with even internal exponents and a
        rational square coefficient."""
        e, c = self.monomial_parts()
        if any(x % 2 for x in e):
            raise ValueError(f"odd exponent, no square root in this ring: {self}")
        rn = _int_sqrt_exact(c.numerator)
        rd = _int_sqrt_exact(c.denominator)
        if rn is None or rd is None or c < 0:
            raise ValueError(f"coefficient {c} is not a rational square")
        half = tuple(x // 2 for x in e)
        return Scalar(
            self.ring,
            {half: Fraction(rn, rd)},
            {self.ring._zero_exps: Fraction(1)},
            _raw=True,
        )

    def exchange_vars(self, name1: str, name2: str) -> "Scalar":
        """Swap the exponents of two variables (e.g. r <-> s)."""
        i = self.ring.index[name1]
        j = self.ring.index[name2]
        if self.ring.variables[i].denom != self.ring.variables[j].denom:
            raise ValueError("variables have different granularity")

        def sw(terms):
            out = {}
            for e, c in terms.items():
                ez = list(e)
                ez[i], ez[j] = ez[j], ez[i]
                out[tuple(ez)] = c
            return out

        return _make(self.ring, sw(self._num), sw(self._den))

    def z_degree(self, name: str) -> int:
        """Largest exponent of the named variable in the numerator (0 for 0)."""
        if not self._num:
            return 0
        i = self.ring.index[name]
        return max(e[i] for e in self._num)

    def __repr__(self) -> str:
        return text_form(self)


def _int_sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


# ---------------------------------------------------------------------------
# substitution
# ---------------------------------------------------------------------------


def substitute(
    x: Scalar,
    bindings: Mapping[str, Scalar],
    ring: ScalarRing | None = None,
) -> Scalar:
    """Ring homomorphism sending each bound variable's atomic generator
    (r ↦ binding means the image of r^(1/2) when r has granularity 2) to the
    given Scalar; unbound variables map to themselves in the target ring.

    Substituting zero into a variable that occurs with a negative exponent
    raises ZeroDivisionError.
    """
    target = ring if ring is not None else x.ring
    images: list[Scalar] = []
    for v in x.ring.variables:
        if v.name in bindings:
            img = bindings[v.name]
            if img.ring != target:
                raise ValueError(f"binding for {v.name} lives in the wrong ring")
            images.append(img)
        else:
            images.append(target.atom(v.name))

    powcache: list[dict[int, Scalar]] = [dict() for _ in range(x.ring.nvars)]

    def image_pow(i: int, e: int) -> Scalar:
        cache = powcache[i]
        if e not in cache:
            if e < 0 and images[i].is_zero():
                raise ZeroDivisionError(
                    f"substituting zero into negative power of {x.ring.names[i]}"
                )
            cache[e] = images[i] ** e
        return cache[e]

    def eval_terms(terms: dict) -> Scalar:
        acc = target.zero
        for e, c in terms.items():
            t = target.num(c)
            for i, k in enumerate(e):
                if k:
                    t = t * image_pow(i, k)
            acc = acc + t
        return acc

    evn = eval_terms(x._num)
    evd = eval_terms(x._den)
    return evn / evd


def specialize_one_param(x: Scalar, target: ScalarRing, qname: str = "q") -> Scalar:
    """Send r ↦ q and s ↦ q^(-1) (on half powers: r^(1/2) ↦ q^(1/2))."""
    qhalf = target.atom(qname)
    return substitute(x, {"r": qhalf, "s": qhalf.inv()}, ring=target)


# ---------------------------------------------------------------------------
# (r,s)-combinatorics
# ---------------------------------------------------------------------------


def rs_integer(ring: ScalarRing, m: int, d: int = 1) -> Scalar:
    """Two-parameter quantum integer (r_d^m - s_d^m)/(r_d - s_d), r_d = r^d."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    r = ring.mono(r=d)
    s = ring.mono(s=d)
    if m == 0:
        return ring.zero
    return (r**m - s**m) / (r - s)


def rs_factorial(ring: ScalarRing, m: int, d: int = 1) -> Scalar:
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = ring.one
    for k in range(2, m + 1):
        out = out * rs_integer(ring, k, d)
    return out


def rs_binomial(ring: ScalarRing, m: int, k: int, d: int = 1) -> Scalar:
    """Two-parameter Gaussian binomial; always a Laurent polynomial."""
    if not 0 <= k <= m:
        raise ValueError(f"binomial requires 0 <= k <= m, got ({m}, {k})")
    out = rs_factorial(ring, m, d) / (rs_factorial(ring, k, d) * rs_factorial(ring, m - k, d))
    if not out.den_is_one():
        raise ArithmeticError(f"binomial did not reduce to a Laurent polynomial: {out}")
    return out


def q_scalar(ring: ScalarRing, d: int = 1) -> Scalar:
    """q_d = (r^(1/2) s^(-1/2))^d inside an r,s ring."""
    return ring.mono(r=Fraction(d, 2), s=-Fraction(d, 2))


def q_integer(ring: ScalarRing, m: int, d: int = 1) -> Scalar:
    """One-parameter quantum integer [m] at q_d = (r/s)^(d/2)."""
    q = q_scalar(ring, d)
    if m == 0:
        return ring.zero
    return (q**m - q**-m) / (q - q.inv())


def q_factorial(ring: ScalarRing, m: int, d: int = 1) -> Scalar:
    out = ring.one
    for k in range(2, m + 1):
        out = out * q_integer(ring, k, d)
    return out


def q_binomial(ring: ScalarRing, m: int, k: int, d: int = 1) -> Scalar:
    if not 0 <= k <= m:
        raise ValueError(f"binomial requires 0 <= k <= m, got ({m}, {k})")
    out = q_factorial(ring, m, d) / (q_factorial(ring, k, d) * q_factorial(ring, m - k, d))
    if not out.den_is_one():
        raise ArithmeticError(f"q-binomial did not reduce: {out}")
    return out


# ---------------------------------------------------------------------------
# canonical text form (bit-exact round trip) and JSON terms
# ---------------------------------------------------------------------------


def _fmt_exp(e: int, denom: int) -> str:
    f = Fraction(e, denom)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _text(ring: ScalarRing, terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, key=_grlex_key, reverse=True):
        c = terms[e]
        factors = [str(c)]
        for i, k in enumerate(e):
            if k:
                factors.append(f"{ring.names[i]}^{_fmt_exp(k, ring.variables[i].denom)}")
        parts.append(" * ".join(factors))
    return " + ".join(parts)


def text_form(x: Scalar) -> str:
    """Canonical text form; ``parse(ring, text_form(x)) == x`` bit-exactly."""
    if x.den_is_one():
        return _text(x.ring, x._num)
    return f"({_text(x.ring, x._num)}) / ({_text(x.ring, x._den)})"


_TERM_FACTOR = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)\^(-?\d+(?:/\d+)?)$")


def _parse_terms(ring: ScalarRing, s: str) -> dict:
    s = s.strip()
    if s == "0":
        return {}
    terms: dict = {}
    for part in s.split(" + "):
        factors = part.split(" * ")
        c = Fraction(factors[0])
        exps = [0] * ring.nvars
        for fac in factors[1:]:
            m = _TERM_FACTOR.match(fac.strip())
            if not m:
                raise ValueError(f"cannot parse factor {fac!r}")
            name, p = m.group(1), Fraction(m.group(2))
            i = ring.index[name]
            e = p * ring.variables[i].denom
            if e.denominator != 1:
                raise ValueError(f"exponent {p} too fine for variable {name}")
            exps[i] = int(e)
        t = tuple(exps)
        terms[t] = terms.get(t, 0) + c
    return {e: c for e, c in terms.items() if c}


def parse(ring: ScalarRing, s: str) -> Scalar:
    """Inverse of text_form."""
    s = s.strip()
    if s.startswith("(") and ") / (" in s:
        left, right = s.split(") / (")
        num = _parse_terms(ring, left[1:])
        den = _parse_terms(ring, right[:-1])
        return _make(ring, num, den)
    return _make(ring, _parse_terms(ring, s), {ring._zero_exps: Fraction(1)})


def terms_to_json(ring: ScalarRing, terms: dict) -> list[dict]:
    return [
        {"coeff": str(terms[e]), "exps": list(e)}
        for e in sorted(terms, key=_grlex_key, reverse=True)
    ]


def scalar_to_json(x: Scalar) -> dict:
    return {
        "num": terms_to_json(x.ring, x._num),
        "den": terms_to_json(x.ring, x._den),
    }


def scalar_from_json(ring: ScalarRing, obj: dict) -> Scalar:
    def load(terms):
        return {tuple(t["exps"]): Fraction(t["coeff"]) for t in terms}

    return _make(ring, load(obj["num"]), load(obj["den"]))
