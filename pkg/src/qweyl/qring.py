"""Exact arithmetic in Q(x), the fraction field of Laurent polynomials in x.

The variable x stands for the eighth root q^(1/8), so every fractional
power of q with denominator dividing 8 is an integer power of x.  All
matrices in this package have entries in this field; nothing here is
floating point except the explicit `evaluate` bridge.
"""

from __future__ import annotations

import math
from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def _coeff(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError("coefficient must be int or Fraction, got %r" % type(v).__name__)


# ---------------------------------------------------------------------------
# dense helpers for ordinary polynomials (ascending coefficient lists,
# nonzero constant term assumed where noted); used only by canonicalization


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _int_primitive(ints):
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _clear_denominators(coeffs):
    den = 1
    for v in coeffs:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return _int_primitive([int(v * den) for v in coeffs])


def _int_pseudo_rem(a, b):
    # fraction-free remainder: repeatedly a := lc(b)*a - lc(a)*x^k*b
    a = a[:]
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        for i in range(len(a)):
            a[i] *= lb
        for i in range(len(b)):
            a[shift + i] -= la * b[i]
        _trim(a)
    return a


def _poly_gcd(fa, fb):
    """Monic gcd of two nonzero polynomials given as ascending Fraction lists.

    Uses the primitive pseudo-remainder sequence over the integers, which
    keeps intermediate coefficients bounded.
    """
    a = _clear_denominators(fa)
    b = _clear_denominators(fb)
    while b:
        a, b = b, _int_primitive(_int_pseudo_rem(a, b))
    lead = Fraction(a[-1])
    return [Fraction(v) / lead for v in a]


def _poly_divmod(fa, fb):
    a = fa[:]
    db = len(fb) - 1
    lb = fb[-1]
    q = [_F0] * max(0, len(a) - db)
    while a and len(a) - 1 >= db:
        factor = a[-1] / lb
        shift = len(a) - 1 - db
        q[shift] = factor
        for i in range(len(fb)):
            a[shift + i] -= factor * fb[i]
        _trim(a)
    return q, a


class LaurentPoly:
    """A Laurent polynomial in x with exact rational coefficients.

    Stored as a sparse map from integer exponent to nonzero Fraction.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _coeff(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        # internal fast constructor: terms already clean
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, exp, coeff=1):
        c = _coeff(coeff)
        return cls._raw({int(exp): c}) if c else cls._raw({})

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(0) == 1

    def min_exp(self):
        return min(self.terms)

    def max_exp(self):
        return max(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s = s - c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        a, b = self.terms, other.terms
        if not a or not b:
            return _P_ZERO
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e)
                if s is None:
                    out[e] = ca * cb
                else:
                    s = s + ca * cb
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return LaurentPoly._raw(out)

    def scale(self, c):
        c = _coeff(c)
        if not c:
            return _P_ZERO
        return LaurentPoly._raw({e: v * c for e, v in self.terms.items()})

    def shift(self, k):
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use RingElem")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = _coeff(other)
            if not other:
                return not self.terms
            return self.terms == {0: other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- conversion -----------------------------------------------------------

    def dense(self):
        """Ascending coefficient list of the poly part; requires min_exp >= 0."""
        n = self.max_exp()
        out = [_F0] * (n + 1)
        for e, c in self.terms.items():
            out[e] = c
        return out

    @classmethod
    def from_dense(cls, coeffs, shift=0):
        return cls._raw({i + shift: c for i, c in enumerate(coeffs) if c})

    def __call__(self, xval):
        return sum(complex(c) * xval ** e for e, c in self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                xs = "x" if e == 1 else "x^%d" % e
                body = xs if abs(c) == 1 else "%s*%s" % (abs(c), xs)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self


_P_ZERO = LaurentPoly._raw({})
_P_ONE = LaurentPoly._raw({0: _F1})


def _laurent_gcd(a, b):
    """Gcd of the polynomial parts, ignoring x-power units."""
    pa = a.shift(-a.min_exp()).dense()
    pb = b.shift(-b.min_exp()).dense()
    return LaurentPoly.from_dense(_poly_gcd(pa, pb))


def _exact_div(a, g):
    """Divide Laurent poly a by g (poly, g | a exactly up to an x-unit)."""
    if g.is_one:
        return a
    va = a.min_exp()
    q, r = _poly_divmod(a.shift(-va).dense(), g.shift(-g.min_exp()).dense())
    if r:
        raise ArithmeticError("inexact polynomial division")
    return LaurentPoly.from_dense(q, shift=va - g.min_exp())


class RingElem:
    """An element of Q(x) stored as a canonical numerator/denominator pair.

    Canonical form: the denominator is an ordinary polynomial (lowest
    exponent 0) with leading coefficient 1, coprime to the numerator.
    Equality of canonical forms is field equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _P_ONE if den is None else _as_poly(den)
        e = _make(num, den)
        self.num = e.num
        self.den = e.den

    @classmethod
    def _raw(cls, num, den):
        e = object.__new__(cls)
        e.num = num
        e.den = den
        return e

    @classmethod
    def from_rational(cls, c):
        c = _coeff(c)
        return cls._raw(LaurentPoly.monomial(0, c), _P_ONE) if c else ZERO

    @classmethod
    def x_power(cls, k):
        return cls._raw(LaurentPoly.monomial(int(k)), _P_ONE)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.num.terms

    @property
    def is_poly(self):
        return self.den.is_one

    def __bool__(self):
        return bool(self.num.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one and other.den.is_one:
            return RingElem._raw(self.num + other.num, _P_ONE)
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den,
                     self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one and other.den.is_one:
            return RingElem._raw(self.num - other.num, _P_ONE)
        if self.den == other.den:
            return _make(self.num - other.num, self.den)
        return _make(self.num * other.den - other.num * self.den,
                     self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RingElem._raw(-self.num, self.den)

    def __mul__(self, other):
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return ZERO
        if self.den.is_one and other.den.is_one:
            return RingElem._raw(self.num * other.num, _P_ONE)
        # cross-cancel before multiplying so gcds stay small
        a, b = self.num, self.den
        c, d = other.num, other.den
        if not d.is_one:
            g = _laurent_gcd(a, d)
            if not g.is_one:
                a = _exact_div(a, g)
                d = _exact_div(d, g)
        if not b.is_one:
            g = _laurent_gcd(c, b)
            if not g.is_one:
                c = _exact_div(c, g)
                b = _exact_div(b, g)
        return _normalize_unit(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("division by zero in Q(x)")
        return _normalize_unit(self.den, self.num)

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        other = _as_elem(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    # -- numeric bridge -------------------------------------------------------

    def evaluate(self, q0):
        """Value at x = q0^(1/8), principal branch.  Returns a complex number."""
        q0 = complex(q0)
        if q0 == 0:
            raise ValueError("cannot evaluate at q = 0")
        x0 = q0 ** 0.125
        dv = self.den(x0)
        if dv == 0 or abs(dv) < 1e-250:
            raise ValueError("denominator vanishes at q = %r" % (q0,))
        return self.num(x0) / dv

    # -- serialization ----------------------------------------------------------

    def to_json(self):
        return {
            "num": [[e, str(self.num.terms[e])] for e in sorted(self.num.terms)],
            "den": [[e, str(self.den.terms[e])] for e in sorted(self.den.terms)],
        }

    @classmethod
    def from_json(cls, obj):
        num = LaurentPoly({int(e): Fraction(c) for e, c in obj["num"]})
        den = LaurentPoly({int(e): Fraction(c) for e, c in obj["den"]})
        return cls(num, den)

    def __str__(self):
        if self.den.is_one:
            return str(self.num)
        ns = str(self.num)
        if len(self.num.terms) > 1:
            ns = "(%s)" % ns
        return "%s/(%s)" % (ns, self.den)

    def __repr__(self):
        return "RingElem(%s)" % self


def _as_poly(v):
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return LaurentPoly.monomial(0, v)
    raise TypeError("expected LaurentPoly, int or Fraction, got %r" % type(v).__name__)


def _as_elem(v):
    if isinstance(v, RingElem):
        return v
    if isinstance(v, (int, Fraction)):
        return RingElem.from_rational(v)
    return NotImplemented


def _normalize_unit(num, den):
    """Canonicalize assuming num, den already coprime up to x-units."""
    if not num.terms:
        return ZERO
    vd = den.min_exp()
    lead = den.terms[den.max_exp()]
    if vd:
        num = num.shift(-vd)
        den = den.shift(-vd)
    if lead != 1:
        num = num.scale(1 / lead)
        den = den.scale(1 / lead)
    return RingElem._raw(num, den)


def _make(num, den):
    """Full canonicalization of an arbitrary num/den pair."""
    if not den.terms:
        raise ZeroDivisionError("division by zero in Q(x)")
    if not num.terms:
        return ZERO
    if den.is_one:
        return RingElem._raw(num, den)
    g = _laurent_gcd(num, den)
    if not g.is_one:
        num = _exact_div(num, g)
        den = _exact_div(den, g)
    return _normalize_unit(num, den)


ZERO = RingElem._raw(_P_ZERO, _P_ONE)
ONE = RingElem._raw(_P_ONE, _P_ONE)
X = RingElem.x_power(1)
Q = RingElem.x_power(8)


def q_power(r):
    """The monomial q^r as a ring element; 8*r must be an integer."""
    r = Fraction(r)
    e = 8 * r
    if e.denominator != 1:
        raise ValueError("q^(%s) does not lie in Q(x): denominator of the "
                         "exponent must divide 8" % r)
    return RingElem.x_power(int(e))


def q_int(n):
    """Quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))."""
    n = int(n)
    if n < 0:
        return -q_int(-n)
    return RingElem._raw(
        LaurentPoly._raw({4 * (n - 1 - 2 * i): _F1 for i in range(n)}), _P_ONE)


_FACT_CACHE = [ONE]


def q_factorial(n):
    """Quantum factorial [n]! = [1][2]...[n]."""
    n = int(n)
    if n < 0:
        raise ValueError("q_factorial of negative %d" % n)
    while len(_FACT_CACHE) <= n:
        k = len(_FACT_CACHE)
        _FACT_CACHE.append(_FACT_CACHE[k - 1] * q_int(k))
    return _FACT_CACHE[n]


def q_binomial(n, k):
    """Gaussian binomial [n over k]; zero outside 0 <= k <= n."""
    n, k = int(n), int(k)
    if k < 0 or k > n:
        return ZERO
    return q_factorial(n) / (q_factorial(k) * q_factorial(n - k))


# ---------------------------------------------------------------------------
# small expression grammar for ring elements: rationals, x, q (= x^8),
# ^, *, /, +, -, parentheses.  Used by the command line interface.


def _tokenize(s):
    tokens = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            tokens.append(("int", int(s[i:j])))
            i = j
        elif ch in "xq^*/+-()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError("unexpected character %r in expression %r" % (ch, s))
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in "+-":
            op, _ = self.next()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in "*/":
            op, _ = self.next()
            rhs = self.factor()
            if op == "/":
                if rhs.is_zero:
                    raise ValueError("division by zero in expression")
                value = value / rhs
            else:
                value = value * rhs
        return value

    def factor(self):
        if self.peek() in "+-":
            op, _ = self.next()
            value = self.factor()
            return value if op == "+" else -value
        value = self.atom()
        while self.peek() == "^":
            self.next()
            value = value ** self.exponent()
        return value

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return RingElem.from_rational(val)
        if kind == "x":
            return X
        if kind == "q":
            return Q
        if kind == "(":
            value = self.expr()
            if self.next()[0] != ")":
                raise ValueError("missing closing parenthesis")
            return value
        raise ValueError("unexpected token %r in expression" % (val,))

    def exponent(self):
        paren = self.peek() == "("
        if paren:
            self.next()
        sign = 1
        if self.peek() in "+-":
            op, _ = self.next()
            sign = -1 if op == "-" else 1
        kind, val = self.next()
        if kind != "int":
            raise ValueError("exponent must be an integer")
        if paren and self.next()[0] != ")":
            raise ValueError("missing closing parenthesis in exponent")
        return sign * val


def parse_ring_elem(s):
    """Parse a ring element from the small expression grammar."""
    parser = _Parser(_tokenize(s))
    value = parser.expr()
    if parser.peek() != "end":
        raise ValueError("trailing input in expression %r" % s)
    return value
