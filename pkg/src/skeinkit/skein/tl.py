"""Temperley-Lieb algebra on crossingless matchings.

A matching between ``b`` bottom and ``t`` top points is a tuple of
partners of length ``b + t``: bottom points are ``0 .. b-1`` and top points
``b .. b+t-1``, both numbered left to right.  The product ``u * v`` stacks
``u`` on top of ``v``; every closed loop contributes delta = -A^2 - A^-2.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import StrandMismatch
from ..laurent import DELTA, ONE, LaurentFraction, LaurentPoly, delta


def compose(mu, mv, b_u, b_v):
    """Stack matching ``mu`` (with ``b_u`` bottom points) on ``mv``.

    ``mv`` has ``b_v`` bottom points and ``b_u`` top points.  Returns the
    composite matching and the number of closed loops.
    """
    t_u = len(mu) - b_u
    n_out = b_v + t_u
    out = [0] * n_out

    # result point -> (which, index) in the factors
    def start(p):
        return ("v", p) if p < b_v else ("u", b_u + p - b_v)

    seen_mid = [False] * b_u
    for p in range(n_out):
        if p < b_v:
            side, x = "v", mv[p]
        else:
            side, x = "u", mu[b_u + p - b_v]
        while True:
            if side == "v":
                if x < b_v:
                    q = x
                    break
                j = x - b_v
                seen_mid[j] = True
                side, x = "u", mu[j]
            else:
                if x >= b_u:
                    q = b_v + x - b_u
                    break
                seen_mid[x] = True
                side, x = "v", mv[b_v + x]
        out[p] = q
    loops = 0
    for j in range(b_u):
        if seen_mid[j]:
            continue
        loops += 1
        x = j
        while True:
            seen_mid[x] = True
            y = mv[b_v + x] - b_v
            seen_mid[y] = True
            x = mu[y]
            if x == j:
                break
    return tuple(out), loops


def count_through_strands(m, b=None):
    """Number of arcs joining a bottom point to a top point."""
    if b is None:
        b = len(m) // 2
    return sum(1 for p in range(b) if m[p] >= b)


def identity_matching(n):
    return tuple(range(n, 2 * n)) + tuple(range(n))


def e_matching(n, i):
    """The generator e_i (1 <= i < n) joining points i-1, i on both sides."""
    if not 1 <= i < n:
        raise ValueError(f"e_{i} is not a generator of TL_{n}")
    m = list(identity_matching(n))
    m[i - 1], m[i] = i, i - 1
    m[n + i - 1], m[n + i] = n + i, n + i - 1
    return tuple(m)


def all_matchings(b, t):
    """All crossingless matchings between ``b`` bottom and ``t`` top points."""
    if (b + t) % 2:
        return []
    # boundary circle order: bottom left to right, then top right to left
    circle = list(range(b)) + [b + t - 1 - j for j in range(t)]

    def rec(seq):
        if not seq:
            yield ()
            return
        first = seq[0]
        for k in range(1, len(seq), 2):
            for left in rec(seq[1:k]):
                for right in rec(seq[k + 1:]):
                    yield ((first, seq[k]),) + left + right

    out = []
    for pairs in rec(circle):
        m = [0] * (b + t)
        for x, y in pairs:
            m[x], m[y] = y, x
        out.append(tuple(m))
    return sorted(out)


def tensor_matching(m1, b1, m2, b2):
    """Place ``m1`` to the left of ``m2``."""
    t1 = len(m1) - b1
    t2 = len(m2) - b2
    b = b1 + b2

    def f1(p):
        return p if p < b1 else b + (p - b1)

    def f2(p):
        return b1 + p if p < b2 else b + t1 + (p - b2)

    out = [0] * (b + t1 + t2)
    for p, q in enumerate(m1):
        out[f1(p)] = f1(q)
    for p, q in enumerate(m2):
        out[f2(p)] = f2(q)
    return tuple(out)


@lru_cache(maxsize=None)
def _delta_power(k):
    return DELTA ** k


class TLElement:
    """A combination of matchings with Laurent coefficients over a common denominator.

    The element equals ``sum(terms[m] * m) / denominator``.  For ``TL_n``
    the bottom and top counts are both ``n``; more generally the element
    is a map from ``bottom`` points to ``top`` points.
    """

    __slots__ = ("terms", "bottom", "top", "denominator")

    def __init__(self, terms, bottom, top=None, denominator=ONE):
        self.bottom = bottom
        self.top = bottom if top is None else top
        self.terms = {m: c for m, c in terms.items() if c}
        self.denominator = LaurentPoly.coerce(denominator)

    @property
    def n(self):
        return self.bottom

    @classmethod
    def identity(cls, n):
        return cls({identity_matching(n): ONE}, n)

    @classmethod
    def generator(cls, n, i):
        return cls({e_matching(n, i): ONE}, n)

    @classmethod
    def from_matching(cls, m, bottom, coeff=ONE):
        return cls({tuple(m): LaurentPoly.coerce(coeff)}, bottom, len(m) - bottom)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            c = LaurentPoly.coerce(other)
            return TLElement({m: v * c for m, v in self.terms.items()},
                             self.bottom, self.top, self.denominator)
        return tl_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise StrandMismatch("cannot add elements with different boundaries")
        if self.denominator == other.denominator:
            out = dict(self.terms)
            for m, c in other.terms.items():
                out[m] = out.get(m, LaurentPoly()) + c
            return TLElement(out, self.bottom, self.top, self.denominator)
        out = {m: c * other.denominator for m, c in self.terms.items()}
        for m, c in other.terms.items():
            out[m] = out.get(m, LaurentPoly()) + c * self.denominator
        return TLElement(out, self.bottom, self.top,
                         self.denominator * other.denominator)

    def __neg__(self):
        return TLElement({m: -c for m, c in self.terms.items()},
                         self.bottom, self.top, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        if (self.bottom, self.top) != (other.bottom, other.top):
            return False
        keys = set(self.terms) | set(other.terms)
        z = LaurentPoly()
        return all(self.terms.get(k, z) * other.denominator
                   == other.terms.get(k, z) * self.denominator for k in keys)

    __hash__ = None

    def coefficient(self, m):
        """Coefficient of matching ``m`` as an exact fraction."""
        return LaurentFraction(self.terms.get(tuple(m), LaurentPoly()),
                               self.denominator)

    def scaled(self, num=ONE, den=ONE):
        return TLElement({m: c * num for m, c in self.terms.items()},
                         self.bottom, self.top, self.denominator * den)

    def reduce(self):
        """Divide numerators and denominator by the denominator when exact."""
        if self.denominator == ONE:
            return self
        out = {}
        for m, c in self.terms.items():
            q, r = c.divmod(self.denominator)
            if r:
                return self
            out[m] = q
        return TLElement(out, self.bottom, self.top)

    def closure(self):
        """Bracket of the trace closure (top point j joined to bottom point j)."""
        if self.bottom != self.top:
            raise StrandMismatch("trace closure needs equal top and bottom")
        total = LaurentPoly()
        for m, c in self.terms.items():
            total = total + c * _delta_power(_trace_loops(m, self.bottom))
        return LaurentFraction(total, self.denominator)

    def tensor(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[tensor_matching(m1, self.bottom, m2, other.bottom)] = c1 * c2
        return TLElement(out, self.bottom + other.bottom, self.top + other.top,
                         self.denominator * other.denominator)

    def __repr__(self):
        return (f"TLElement({len(self.terms)} terms, {self.bottom}->{self.top}, "
                f"den={self.denominator})")


def _trace_loops(m, n):
    seen = [False] * (2 * n)
    loops = 0
    for p in range(2 * n):
        if seen[p]:
            continue
        loops += 1
        x = p
        while not seen[x]:
            seen[x] = True
            y = m[x]
            seen[y] = True
            # joining top j to bottom j
            x = y - n if y >= n else y + n
    return loops


def tl_multiply(u, v):
    """``u`` stacked on top of ``v``."""
    if u.bottom != v.top:
        raise StrandMismatch(
            f"cannot stack {u.bottom}-point bottom on {v.top}-point top")
    out = {}
    for mu, cu in u.terms.items():
        for mv, cv in v.terms.items():
            m, loops = compose(mu, mv, u.bottom, v.bottom)
            c = cu * cv
            if loops:
                c = c * _delta_power(loops)
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
    return TLElement(out, v.bottom, u.top, u.denominator * v.denominator)


def cap_matching(n, k):
    """2n bottom points to 2n - 2k top points with k nested caps in the middle."""
    b = 2 * n
    t = b - 2 * k
    m = [None] * (b + t)
    for j in range(k):
        x, y = n - 1 - j, n + j
        m[x], m[y] = y, x
    top = 0
    for p in range(b):
        if m[p] is None:
            m[p] = b + top
            m[b + top] = p
            top += 1
    return tuple(m)


def cup_matching(n, k):
    """Mirror of :func:`cap_matching`: 2n - 2k bottom points to 2n top points."""
    b = 2 * n - 2 * k
    t = 2 * n
    m = [None] * (b + t)
    for j in range(k):
        x, y = b + n - 1 - j, b + n + j
        m[x], m[y] = y, x
    bot = 0
    for p in range(b, b + t):
        if m[p] is None:
            m[p] = bot
            m[bot] = p
            bot += 1
    return tuple(m)


def _e_chain(n, j):
    """E_j = e_{n-1} e_{n-2} ... e_{n-j}; E_0 is the identity."""
    m = identity_matching(n)
    for i in range(n - 1, n - j - 1, -1):
        m, loops = compose(m, e_matching(n, i), n, n)
        assert loops == 0
    return m


@lru_cache(maxsize=None)
def jones_wenzl(n):
    """The Jones-Wenzl projector f_n with denominator Delta_{n-1}!.

    Built from the one-sided recursion
    f_n = (f_{n-1} (x) 1) * sum_j (-1)^j Delta_{n-1-j} / Delta_{n-1} * E_j.
    """
    if n < 1:
        raise ValueError("projector size must be positive")
    if n == 1:
        return TLElement.identity(1)
    prev = jones_wenzl(n - 1)
    left = prev.tensor(TLElement.identity(1))
    right = {}
    for j in range(n):
        c = delta(n - 1 - j)
        right[_e_chain(n, j)] = -c if j % 2 else c
    f = tl_multiply(left, TLElement(right, n))
    f.denominator = prev.denominator * delta(n - 1)
    return f


def jones_wenzl_two_sided(n):
    """f_n from f_{n+1} = f_n (x) 1 - Delta_{n-1}/Delta_n (f_n (x) 1) e_n (f_n (x) 1).

    Slower; used as an independent check of :func:`jones_wenzl`.
    """
    f = TLElement.identity(1)
    for k in range(1, n):
        g = f.tensor(TLElement.identity(1))
        e = TLElement.generator(k + 1, k)
        mid = tl_multiply(tl_multiply(g, e), g)
        # bring both parts over the denominator g.den^2 * Delta_k
        a = g.scaled(g.denominator * delta(k))
        b = mid.scaled(delta(k - 1))
        num = TLElement(a.terms, k + 1)
        num = num - TLElement(b.terms, k + 1)
        f = TLElement(num.terms, k + 1,
                      denominator=g.denominator * g.denominator * delta(k))
    return f


def fused_element(a, n):
    """The TL_{2n} element with legs f_n (x) f_n joined through f_a."""
    k = n - a // 2
    fn = jones_wenzl(n)
    legs = fn.tensor(fn)
    cap = TLElement.from_matching(cap_matching(n, k), 2 * n)
    cup = TLElement.from_matching(cup_matching(n, k), 2 * n - 2 * k)
    fa = jones_wenzl(a) if a else TLElement({(): ONE}, 0)
    return tl_multiply(tl_multiply(tl_multiply(tl_multiply(legs, cup), fa), cap), legs)
