"""Colored Jones polynomials of knot diagrams.

J_K(n) is the framing-corrected bracket of the (n-1)-cable decorated by
one projector f_{n-1}, read in t through A = t^(-1/4).  The color n is
used throughout; the cable width is n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .laurent import LaurentPoly, delta
from .skein import bracket_sweep, cable_program, to_slice_program

STRATEGIES = ("chebyshev", "direct")
DEFAULT_STRATEGY = "chebyshev"


@dataclass(frozen=True)
class ColoredJones:
    n: int
    poly: LaurentPoly
    strategy: str = DEFAULT_STRATEGY

    @property
    def t_max_deg(self):
        return Fraction(self.poly.min_deg, -4)

    @property
    def t_min_deg(self):
        return Fraction(self.poly.max_deg, -4)

    @property
    def span(self):
        """4 d_+ - 4 d_-, an integer."""
        return self.poly.max_deg - self.poly.min_deg

    def t_terms(self):
        """``{t-exponent: coefficient}`` in increasing exponent order."""
        return {Fraction(e, -4): c for e, c in sorted(self.poly.terms.items(), reverse=True)}

    def t_text(self):
        parts = []
        for e, c in self.t_terms().items():
            mono = "" if e == 0 else ("t" if e == 1 else f"t^({e})" if e.denominator > 1 or e < 0 else f"t^{e}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
                body = mono
            else:
                coef = "-" if c < 0 else "+"
                body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            parts.append((coef, body))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def to_json(self):
        return {
            "n": self.n,
            "poly_A": self.poly.to_json(),
            "d_plus": str(self.t_max_deg),
            "d_minus": str(self.t_min_deg),
            "span": self.span,
            "strategy": self.strategy,
        }


def _check_knot(d, n):
    if n < 1:
        raise InputError("color must be at least 1")
    if len(d.components) + d.free_loops != 1:
        raise InputError("colored Jones polynomials are computed for knots only")


def framing_factor(writhe, n):
    """((-1)^(n-1) A^(n^2-1))^(-wr)."""
    sign = -1 if (n - 1) % 2 and writhe % 2 else 1
    return LaurentPoly({-(n * n - 1) * writhe: sign})


@lru_cache(maxsize=64)
def _program(d):
    return to_slice_program(d)


def decorated_cable_bracket(d, m, budget=None):
    """<D^m> with one projector f_m; the empty cable is 1."""
    if m == 0:
        return LaurentPoly.const(1)
    return bracket_sweep(cable_program(_program(d), m, decorate=True), budget)


def plain_cable_bracket(d, m, budget=None):
    """<D^m> for the undecorated blackboard m-cable; <D^0> = 1."""
    if m == 0:
        return LaurentPoly.const(1)
    return bracket_sweep(cable_program(_program(d), m), budget)


@lru_cache(maxsize=None)
def chebyshev_coefficients(m):
    """Integer coefficients of S_m(z): S_0 = 1, S_1 = z, S_{k+1} = z S_k - S_{k-1}."""
    prev, cur = [1], [0, 1]
    if m == 0:
        return tuple(prev)
    for _ in range(m - 1):
        nxt = [0] + cur
        for j, c in enumerate(prev):
            nxt[j] -= c
        prev, cur = cur, nxt
    return tuple(cur)


def colored_jones(d, n, budget=None):
    """J_K(n) through the projector-decorated cable."""
    _check_knot(d, n)
    poly = framing_factor(d.writhe, n) * decorated_cable_bracket(d, n - 1, budget)
    return ColoredJones(n, poly, "direct")


def colored_jones_chebyshev(d, n, budget=None):
    """J_K(n) from plain cables combined by the Chebyshev recursion."""
    _check_knot(d, n)
    total = LaurentPoly()
    for j, c in enumerate(chebyshev_coefficients(n - 1)):
        if c:
            total = total + plain_cable_bracket(d, j, budget) * c
    return ColoredJones(n, framing_factor(d.writhe, n) * total, "chebyshev")


def compute(d, n, strategy=DEFAULT_STRATEGY, budget=None):
    if strategy == "chebyshev":
        return colored_jones_chebyshev(d, n, budget)
    if strategy == "direct":
        return colored_jones(d, n, budget)
    raise InputError(f"unknown strategy {strategy!r}")


def unknot_value(n):
    """J_U(n) = Delta_{n-1} as a polynomial in A."""
    return delta(n - 1)


def reduced(j):
    """J_K(n) / J_U(n), asserted exact."""
    return j.poly.exact_div(unknot_value(j.n))


def degree_span(d, n, strategy=DEFAULT_STRATEGY, budget=None):
    j = compute(d, n, strategy, budget)
    return {"d_plus": j.t_max_deg, "d_minus": j.t_min_deg, "span": j.span}
