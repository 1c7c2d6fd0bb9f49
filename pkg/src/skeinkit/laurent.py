"""Exact Laurent polynomials in the bracket variable A.

A polynomial is an immutable sparse map ``{exponent: coefficient}`` with
arbitrary-precision integer coefficients and no stored zeros.  The module
also provides the closed-form skein quantities Delta_n, Delta_n! and
theta(a, b, c).
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InadmissibleTriple, InexactDivision, MalformedPD

POS_INFINITY = math.inf
NEG_INFINITY = -math.inf

# below this many term products the schoolbook loop beats Kronecker packing
_KRONECKER_THRESHOLD = 400


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


def pack(terms, lo, bits):
    """Pack ``terms`` into one integer, digit ``e - lo`` in base ``2**bits``."""
    return sum(c << ((e - lo) * bits) for e, c in terms.items())


def unpack(value, lo, bits):
    """Inverse of :func:`pack` for digits of absolute value < ``2**(bits-1)``.

    ``bits`` must be a multiple of 8.  Digits are read in one pass through
    ``int.to_bytes`` after biasing every digit into the nonnegative range.
    """
    if value == 0:
        return {}
    width = bits // 8
    ndig = (abs(value).bit_length() + bits) // bits + 1
    chunk = b"\x00" * (width - 1) + b"\x80"
    bias = int.from_bytes(chunk * ndig, "little")
    raw = (value + bias).to_bytes(width * ndig, "little")
    half = 1 << (bits - 1)
    out = {}
    for i in range(ndig):
        d = int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        if d:
            out[lo + i] = d
    return out


def _kronecker_mul(p, q):
    bp = max(abs(c) for c in p.values()).bit_length()
    bq = max(abs(c) for c in q.values()).bit_length()
    bits = bp + bq + min(len(p), len(q)).bit_length() + 2
    bits = -(-bits // 8) * 8
    lp, lq = min(p), min(q)
    return unpack(pack(p, lp, bits) * pack(q, lq, bits), lp + lq, bits)


class LaurentPoly:
    """Immutable exact Laurent polynomial in ``A``.

    Supports ``+``, ``-``, ``*``, ``**`` (nonnegative powers), mixing with
    Python ints, equality and hashing.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        self._terms = _clean(dict(terms)) if terms else {}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def const(cls, c):
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        """A copy of the term map."""
        return dict(self._terms)

    def items(self):
        """Terms as ``(exp, coeff)`` pairs sorted by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exp):
        return self._terms.get(exp, 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def max_deg(self):
        return max(self._terms) if self._terms else NEG_INFINITY

    @property
    def min_deg(self):
        return min(self._terms) if self._terms else POS_INFINITY

    def degrees(self):
        return max_min_degree(self)

    def is_monomial(self):
        return len(self._terms) == 1

    def evaluate(self, x):
        """Evaluate at a nonzero number (``Fraction`` keeps it exact)."""
        return sum(c * x ** e for e, c in self._terms.items())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        p, q = self._terms, other._terms
        if not p or not q:
            return LaurentPoly()
        if len(p) * len(q) >= _KRONECKER_THRESHOLD:
            return LaurentPoly._raw(_kronecker_mul(p, q))
        out = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly._raw(_clean(out))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by ``A**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k):
        """Return p(A**k); ``k = -1`` gives the mirror image."""
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    def divmod(self, other):
        """Long division from the top degree.

        Returns ``(q, r)`` with ``self = q*other + r``.  Division stops as
        soon as the leading term cannot be cancelled, so ``r == 0`` exactly
        when ``other`` divides ``self``.
        """
        other = LaurentPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        dtop = other.max_deg
        dlead = other._terms[dtop]
        span = dtop - other.min_deg
        quot = {}
        floor = self.min_deg
        while rem:
            top = max(rem)
            if top - span < floor:
                break
            c = rem[top]
            if c % dlead:
                break
            qc = c // dlead
            qe = top - dtop
            quot[qe] = qc
            for e, d in other._terms.items():
                k = e + qe
                v = rem.get(k, 0) - qc * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot), LaurentPoly._raw(rem)

    def exact_div(self, other):
        """Divide, raising :class:`InexactDivision` on a nonzero remainder."""
        q, r = self.divmod(other)
        if r:
            raise InexactDivision(f"({self}) / ({other}) leaves remainder {r}")
        return q

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text and JSON ----------------------------------------------------

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentPoly({to_text(self)!r})"

    def to_json(self):
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data})


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
DELTA = LaurentPoly({2: -1, -2: -1})


def to_text(p):
    """Canonical text form, descending exponents, e.g. ``-A^2 - A^-2``."""
    if not p:
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "A" if e == 1 else f"A^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if i == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*(A(?:\^\(?(-?\d+)\)?)?)?")


def parse_poly(text):
    """Parse the canonical text form (tolerant of spacing)."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    terms = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise MalformedPD(f"cannot parse polynomial near {s[pos:]!r}")
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coeff = -coeff
        if m.group(3) is None:
            exp = 0
        else:
            exp = int(m.group(4)) if m.group(4) is not None else 1
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
    return LaurentPoly(terms)


@dataclass(frozen=True)
class DegreeBounds:
    max_deg: float
    min_deg: float

    @property
    def span(self):
        return self.max_deg - self.min_deg


def max_min_degree(p):
    return DegreeBounds(p.max_deg, p.min_deg)


class LaurentFraction:
    """A quotient ``num/den`` of Laurent polynomials, kept unreduced.

    Only the few quotients the skein theory needs are formed this way.
    Equality is by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        den = LaurentPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = LaurentPoly.coerce(num)
        self.den = den

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, LaurentFraction) else cls(x)

    def __add__(self, other):
        other = LaurentFraction.coerce(other)
        if self.den == other.den:
            return LaurentFraction(self.num + other.num, self.den)
        return LaurentFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-LaurentFraction.coerce(other))

    def __mul__(self, other):
        other = LaurentFraction.coerce(other)
        return LaurentFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = LaurentFraction.coerce(other)
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = LaurentFraction(other)
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self):
        return self.num.is_zero()

    @property
    def max_deg(self):
        """Top degree as a rational function: deg num - deg den."""
        return self.num.max_deg - self.den.max_deg

    @property
    def min_deg(self):
        return self.num.min_deg - self.den.min_deg

    def is_polynomial(self):
        return not self.num.divmod(self.den)[1]

    def to_poly(self):
        """The quotient as a polynomial; :class:`InexactDivision` otherwise."""
        return self.num.exact_div(self.den)

    def evaluate(self, x):
        return Fraction(self.num.evaluate(x)) / self.den.evaluate(x)

    def __repr__(self):
        return f"LaurentFraction(({self.num}) / ({self.den}))"


@lru_cache(maxsize=None)
def delta(n):
    """Delta_n = (-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^{-2})."""
    if n < 0:
        raise ValueError("delta(n) needs n >= 0")
    num = LaurentPoly({2 * (n + 1): 1, -2 * (n + 1): -1})
    q = num.exact_div(LaurentPoly({2: 1, -2: -1}))
    return -q if n % 2 else q


@lru_cache(maxsize=None)
def delta_factorial(n):
    """Delta_n! = Delta_n Delta_{n-1} ... Delta_1, with Delta_{-1}! = Delta_0! = 1."""
    if n <= 0:
        return ONE
    return delta_factorial(n - 1) * delta(n)


def is_admissible(a, b, c):
    return (min(a, b, c) >= 0 and (a + b + c) % 2 == 0
            and a <= b + c and b <= a + c and c <= a + b)


def _check_admissible(a, b, c):
    if not is_admissible(a, b, c):
        raise InadmissibleTriple(f"({a}, {b}, {c}) is not admissible")


def theta_parameters(a, b, c):
    """The internal edge counts ``(x, y, z)`` of the theta graph."""
    _check_admissible(a, b, c)
    return (a + c - b) // 2, (b + c - a) // 2, (a + b - c) // 2


def theta(a, b, c):
    """theta(a, b, c) as an exact quotient of Delta-factorial products.

    The value is a rational function of A (for example theta(2, 2, 2) is
    not a Laurent polynomial), so a :class:`LaurentFraction` is returned.
    Common Delta_k factors are cancelled first, and the result is a bare
    polynomial whenever the remaining division is exact.
    """
    x, y, z = theta_parameters(a, b, c)
    num = Counter()
    den = Counter()
    for k in (x + y + z, x - 1, y - 1, z - 1):
        num.update(range(1, k + 1))
    for k in (y + z - 1, z + x - 1, x + y - 1):
        den.update(range(1, k + 1))
    common = num & den
    num -= common
    den -= common
    n = ONE
    for k in sorted(num.elements()):
        n = n * delta(k)
    d = ONE
    for k in sorted(den.elements()):
        d = d * delta(k)
    q, r = n.divmod(d)
    if not r:
        return LaurentFraction(q)
    return LaurentFraction(n, d)


def quotient_degree(c, a, b):
    """deg(Delta_c / theta(a, b, c)) = c - a - b, by formula only."""
    _check_admissible(a, b, c)
    return c - a - b
