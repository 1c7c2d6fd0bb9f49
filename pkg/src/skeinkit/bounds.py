"""Closed-form degree predictors, Jones diameters and crossing-number logic.

Degree quadratics are in the color n.  ``4 d_+`` and ``4 d_-`` are kept as
integers-valued quadratics where possible; spans are 4 d_+ - 4 d_-.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import adequacy, turaev_genus
from .errors import (FitInconsistent, HypothesesViolated, InadmissibleTriple,
                     InconsistentInput, NotAdequate, ZeroTwist)
from .laurent import is_admissible


def _num(x):
    return Fraction(x) if isinstance(x, (int, str)) else x


@dataclass(frozen=True)
class DegreeQuadratic:
    """n -> a2 n^2 + a1 n + a0."""

    a2: object
    a1: object
    a0: object

    def __post_init__(self):
        object.__setattr__(self, "a2", _num(self.a2))
        object.__setattr__(self, "a1", _num(self.a1))
        object.__setattr__(self, "a0", _num(self.a0))

    def __call__(self, n):
        return self.a2 * n * n + self.a1 * n + self.a0

    def __add__(self, other):
        return DegreeQuadratic(self.a2 + other.a2, self.a1 + other.a1, self.a0 + other.a0)

    def __sub__(self, other):
        return DegreeQuadratic(self.a2 - other.a2, self.a1 - other.a1, self.a0 - other.a0)

    def scale(self, k):
        return DegreeQuadratic(self.a2 * k, self.a1 * k, self.a0 * k)

    def as_tuple(self):
        return (self.a2, self.a1, self.a0)

    def to_json(self):
        return [str(self.a2), str(self.a1), str(self.a0)]

    @classmethod
    def fit(cls, points):
        """Exact interpolation through three ``(n, value)`` points."""
        (x0, y0), (x1, y1), (x2, y2) = [(Fraction(x), Fraction(y)) for x, y in points]
        d01 = (y1 - y0) / (x1 - x0)
        d12 = (y2 - y1) / (x2 - x1)
        a2 = (d12 - d01) / (x2 - x0)
        a1 = d01 - a2 * (x0 + x1)
        a0 = y0 - a2 * x0 * x0 - a1 * x0
        return cls(a2, a1, a0)


def adequate_degree_formulas(c_plus, c_minus, v_A, v_B):
    """``top`` predicts 4 d_- (A-adequate), ``bottom`` predicts 4 d_+ (B-adequate)."""
    c = c_plus + c_minus
    top = DegreeQuadratic(-2 * c_minus, 2 * (c - v_A), 2 * v_A - 2 * c_plus)
    bottom = DegreeQuadratic(2 * c_plus, 2 * (v_B - c), 2 * c_minus - 2 * v_B)
    return {"top": top, "bottom": bottom}


def span_envelope(c, g_T):
    """Upper bound for 4 d_+ - 4 d_-; attained by adequate diagrams.

    Equals ``bottom - top`` of :func:`adequate_degree_formulas` once
    v_A + v_B = c + 2 - 2 g_T is substituted.
    """
    return DegreeQuadratic(2 * c, 4 - 4 * g_T - 2 * c, 4 * g_T - 4)


def h_and_H(d, n):
    """H_n = c n^2 + 2 v_A n bounds deg <D^n>; h is the matching bound on J."""
    H = d.c * n * n + 2 * d.v_A * n
    h = Fraction(-H, 4) + Fraction(d.writhe * (n * n - 1), 4)
    return {"H": H, "h": h}


def fusion_degree(a, r, n):
    """Top degree of the fusion-untwisting coefficient I(a, r, n)."""
    if not is_admissible(a, n, n):
        raise InadmissibleTriple(f"({a}, {n}, {n}) is not admissible")
    if r == 0:
        raise ZeroTwist("twist count must be nonzero")
    return 2 * (r - 1) * n + (1 - r) * a + r * n * n - Fraction(r * a * a, 2)


def bmt_double_predictor(q, clasp_sign, check=True):
    """Predicted d_+ of the untwisted Whitehead double, valid for large n.

    ``q`` is d_+[J_K(n)] as a quadratic.  ``clasp_sign`` -1 gives W_-,
    +1 gives W_+.
    """
    a2, a1, a0 = q.as_tuple()
    half = Fraction(1, 2)
    if check:
        if a1 > 0 or (a1 == 0 and a2 == 0):
            raise HypothesesViolated("need a1 <= 0, and a2 != 0 when a1 = 0")
        if clasp_sign < 0 and not a2 > 0:
            raise HypothesesViolated("negative clasp needs a2 > 0")
        if clasp_sign > 0 and not a2 > Fraction(1, 8):
            raise HypothesesViolated("positive clasp needs a2 > 1/8")
    if clasp_sign < 0:
        return DegreeQuadratic(4 * a2, -4 * a2 + 2 * a1 - half, a2 - a1 + a0 + half)
    return DegreeQuadratic(4 * a2 + half, -4 * a2 + 2 * a1, a2 - a1 + a0 - half)


def double_counts(c_plus, c_minus, v_A, v_B):
    """Crossing and circle counts of the constructed W_- for a zero-writhe diagram.

    The double of a c-crossing diagram has four crossings per original
    crossing plus a two-crossing clasp; the negative clasp adds two negative
    crossings and one all-B circle.
    """
    return {"c_plus": 4 * c_plus, "c_minus": 4 * c_minus + 2, "v_B": 2 * v_B + 1}


@dataclass(frozen=True)
class SlopeReport:
    js: Fraction
    js_star: Fraction
    diameter: Fraction
    provenance: str
    top: DegreeQuadratic = None
    bottom: DegreeQuadratic = None

    def to_json(self):
        out = {"js": str(self.js), "js_star": str(self.js_star),
               "diameter": str(self.diameter), "provenance": self.provenance}
        if self.top is not None:
            out["fit_4d_minus"] = self.top.to_json()
            out["fit_4d_plus"] = self.bottom.to_json()
        return out


def jones_diameter(d, mode="adequate_closed_form", n_values=(1, 2, 3, 4),
                   strategy="chebyshev", budget=None):
    """Jones slopes and diameter, from the closed form or an exact fit.

    Slopes are the n^2 coefficients of 4 d_+ (js) and 4 d_- (js_star).
    """
    if mode == "adequate_closed_form":
        ad = adequacy(d)
        if not (ad["a_adequate"] and ad["b_adequate"]):
            raise NotAdequate("closed form needs an adequate diagram")
        return SlopeReport(Fraction(2 * d.c_plus), Fraction(-2 * d.c_minus),
                           Fraction(2 * d.c), "closed_form")
    if mode != "fit":
        raise ValueError(f"unknown mode {mode!r}")
    from .jones import compute

    ns = sorted(n_values)
    if len(ns) < 4 or any(b - a != 1 for a, b in zip(ns, ns[1:])):
        raise FitInconsistent("fit needs at least four consecutive colors")
    plus, minus = [], []
    for n in ns:
        j = compute(d, n, strategy, budget)
        plus.append((n, 4 * j.t_max_deg))
        minus.append((n, 4 * j.t_min_deg))
    bottom = DegreeQuadratic.fit(plus[:3])
    top = DegreeQuadratic.fit(minus[:3])
    for (n, p), (_, m) in zip(plus[3:], minus[3:]):
        if bottom(n) != p or top(n) != m:
            raise FitInconsistent(
                f"color {n} is off the quadratic through colors {ns[:3]}: "
                "quasi-polynomial suspected, fit unreliable")
    return SlopeReport(bottom.a2, top.a2, bottom.a2 - top.a2, "fitted", top, bottom)


def crossing_number_criterion(c_D, diameter, adequate):
    """Crossing number of K from a diagram with c_D crossings and dj_K."""
    diameter = Fraction(diameter)
    if diameter > 2 * c_D:
        raise InconsistentInput(
            f"diameter {diameter} exceeds 2 c(D) = {2 * c_D}")
    if adequate:
        if diameter != 2 * c_D:
            raise InconsistentInput(
                f"an adequate diagram has diameter 2 c(D) = {2 * c_D}, got {diameter}")
        return {"determined": True, "c_K": c_D}
    if diameter == 2 * c_D:
        raise InconsistentInput("a non-adequate knot has diameter below 2 c(K)")
    if diameter == 2 * (c_D - 1):
        return {"determined": True, "c_K": c_D}
    return {"determined": False, "c_K": [str(diameter / 2), c_D],
            "interval": "open-closed"}


def double_crossing_bounds(c_K, wr_K):
    lower = 4 * c_K + 1
    upper = 4 * c_K + 2 + 2 * abs(wr_K)
    return {"lower": lower, "upper": upper,
            "exact": 4 * c_K + 2 if wr_K == 0 else None}


def connected_sum_degree(q1, q2, which):
    """Degree quadratic of K1 # K2 from those of the summands.

    ``which`` is "x" for the -4 d_- family, "y" for the 4 d_+ family and
    "span" for d_+ - d_- in t units.  The unknot correction comes from
    dividing by J_U(n) once.
    """
    s = q1 + q2
    if which in ("x", "y"):
        return DegreeQuadratic(s.a2, s.a1 - 2, s.a0 + 2)
    if which == "span":
        return DegreeQuadratic(s.a2, s.a1 - 1, s.a0 + 1)
    raise ValueError(f"unknown family {which!r}")


def minimal_partition(k, s):
    """Partition k into s parts differing by at most one (largest first)."""
    if k < 0 or s < 1:
        raise ValueError("need k >= 0 and s >= 1")
    mu, b = divmod(k, s)
    return [mu + 1] * b + [mu] * (s - b)


def gap_report(d, n_max, budget=None):
    """Rows (n, H_n, deg <D^n>, gap) for n = 1..n_max (decorated n-cable)."""
    from .jones import decorated_cable_bracket

    rows = []
    for n in range(1, n_max + 1):
        H = h_and_H(d, n)["H"]
        deg = decorated_cable_bracket(d, n, budget).max_deg
        rows.append({"n": n, "H": H, "deg": deg, "gap": H - deg})
    return rows


def envelope_for(d):
    return span_envelope(d.c, turaev_genus(d))
