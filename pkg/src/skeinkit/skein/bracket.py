"""Kauffman bracket engines: a naive state sum and a sliced sweep.

The sweep keeps a map from crossingless matchings of the current row to
coefficients.  Coefficients are polynomials in x = A^2 packed into single
Python integers (one base-2^K digit per power of x), all sharing a global
factor A^-E, so that every skein step is a handful of shifts and adds.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from functools import lru_cache

from ..errors import (InexactDivision, StrandMismatch, TooManyCrossings,
                      WidthExceeded)
from ..laurent import DELTA, ONE, LaurentFraction, LaurentPoly, unpack
from .tl import jones_wenzl

DEFAULT_STATE_SUM_CAP = 24
DEFAULT_WIDTH_BUDGET = 12


def width_budget():
    """Half the largest row width the sweep accepts (Catalan(budget) states)."""
    return int(os.environ.get("SKEINKIT_WIDTH_BUDGET", DEFAULT_WIDTH_BUDGET))


# -- naive state sum ------------------------------------------------------


def bracket_state_sum(d, cap=DEFAULT_STATE_SUM_CAP):
    """Sum over all 2^c Kauffman states; each circle contributes delta."""
    c = d.c
    if c > cap:
        raise TooManyCrossings(f"{c} crossings exceed the state-sum cap {cap}")
    labels = sorted(d.labels)
    index = {x: k for k, x in enumerate(labels)}
    xs = [tuple(index[x] for x in t) for t in d.crossings]
    nl = len(labels)
    tally = Counter()
    for bits in range(1 << c):
        parent = list(range(nl))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        comps = nl
        sgn = 0
        for k, (a, b, cc, dd) in enumerate(xs):
            if bits >> k & 1:
                pairs = ((a, dd), (b, cc))
                sgn -= 1
            else:
                pairs = ((a, b), (cc, dd))
                sgn += 1
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        tally[(sgn, comps)] += 1
    total = LaurentPoly()
    for (sgn, circles), count in tally.items():
        total = total + LaurentPoly({sgn: count}) * DELTA ** circles
    if not c:
        total = ONE
    return total * DELTA ** d.free_loops


# -- packed sweep ---------------------------------------------------------


def _cup(m, i):
    r = [q if q < i else q + 2 for q in m]
    return tuple(r[:i]) + (i + 1, i) + tuple(r[i:])


def _cap(m, i):
    """Returns (matching, closed_loop)."""
    a, b = m[i], m[i + 1]
    if a == i + 1:
        r = m[:i] + m[i + 2:]
        return tuple(q if q < i else q - 2 for q in r), True
    lst = list(m)
    lst[a], lst[b] = b, a
    r = lst[:i] + lst[i + 2:]
    return tuple(q if q < i else q - 2 for q in r), False


def _e(m, i):
    """Apply e at positions i, i+1; returns (matching, closed_loop)."""
    a, b = m[i], m[i + 1]
    if a == i + 1:
        return m, True
    lst = list(m)
    lst[a], lst[b] = b, a
    lst[i], lst[i + 1] = i + 1, i
    return tuple(lst), False


def _glue(m, i, u, n):
    """Stack TL_n matching ``u`` on positions i..i+n-1 of row matching ``m``."""
    w = len(m)
    out = list(m)
    hi = i + n

    seen = [False] * n
    for p in range(w):
        if i <= p < hi:
            continue
        q = m[p]
        if i <= q < hi:
            seen[q - i] = True
            r = _walk(m, u, i, n, q, seen)
            out[p] = r
    for j in range(n):
        x = u[n + j]
        p = i + j
        if x >= n:
            out[p] = i + x - n
        else:
            seen[x] = True
            q = m[i + x]
            if i <= q < hi:
                seen[q - i] = True
                out[p] = _walk(m, u, i, n, q, seen)
            else:
                out[p] = q
    loops = 0
    for j in range(n):
        if seen[j]:
            continue
        loops += 1
        x = j
        while not seen[x]:
            seen[x] = True
            y = u[x]
            seen[y] = True
            x = m[i + y] - i
    return tuple(out), loops


def _walk(m, u, i, n, q, seen):
    """Enter the projector at window point q from below and walk out."""
    while True:
        x = u[q - i]
        if x >= n:
            return i + x - n
        seen[x] = True
        q2 = m[i + x]
        if not i <= q2 < i + n:
            return q2
        seen[q2 - i] = True
        q = q2


@lru_cache(maxsize=None)
def _packed_projector(n, bits):
    """(terms, lo, l1, denominator) for the integral numerator of f_n in x = A^2."""
    f = jones_wenzl(n)
    lo = min(c.min_deg for c in f.terms.values())
    assert lo % 2 == 0
    terms = []
    l1 = 0
    for u, c in f.terms.items():
        packed = 0
        for e, a in c.terms.items():
            packed += a << ((e - lo) // 2 * bits)
        terms.append((u, packed))
        l1 += sum(abs(a) for a in c.terms.values())
    return tuple(terms), lo // 2, l1, f.denominator


def _projector_l1(n):
    f = jones_wenzl(n)
    return sum(abs(a) for c in f.terms.values() for a in c.terms.values())


def _digit_bits(p):
    """Digit width covering every coefficient the sweep can produce."""
    log2 = 0.0
    for sl in p.slices:
        op = sl[0]
        if op in ("x+", "x-"):
            log2 += math.log2(3)
        elif op == "cap":
            log2 += 1
        elif op == "jw":
            log2 += math.log2(_projector_l1(sl[1])) + sl[1] // 2
    bits = int(log2) + 4
    return -(-bits // 8) * 8


def bracket_sweep_fraction(p, budget=None):
    """Bracket of a closed slice program as an exact fraction."""
    budget = width_budget() if budget is None else budget
    widths = p.widths()
    if widths and widths[-1] != 0:
        raise StrandMismatch("program is not closed")
    mw = max(widths, default=0)
    if mw > 2 * budget:
        raise WidthExceeded(
            f"row width {mw} exceeds the budget of {2 * budget} endpoints")
    K = _digit_bits(p)
    states = {(): 1}
    E = 0
    den = ONE
    since_norm = 0
    for sl in p.slices:
        op = sl[0]
        if op == "cup":
            i = sl[1]
            states = {_cup(m, i): v for m, v in states.items()}
        elif op == "cap":
            i = sl[1]
            loop_possible = any(m[i] == i + 1 for m in states)
            new = {}
            if loop_possible:
                E += 2
                for m, v in states.items():
                    m2, loop = _cap(m, i)
                    v2 = -((v << 2 * K) + v) if loop else v << K
                    new[m2] = new.get(m2, 0) + v2
            else:
                for m, v in states.items():
                    m2, _ = _cap(m, i)
                    new[m2] = new.get(m2, 0) + v
            states = new
        elif op in ("x+", "x-"):
            i = sl[1]
            loop_possible = any(m[i] == i + 1 for m in states)
            plus = op == "x+"
            new = {}
            if loop_possible:
                E += 3
                for m, v in states.items():
                    m2, loop = _e(m, i)
                    if plus:
                        vid = v << 2 * K
                        ve = -((v << 2 * K) + v) if loop else v << K
                    else:
                        vid = v << K
                        ve = -((v << 3 * K) + (v << K)) if loop else v << 2 * K
                    new[m] = new.get(m, 0) + vid
                    new[m2] = new.get(m2, 0) + ve
            else:
                E += 1
                for m, v in states.items():
                    m2, _ = _e(m, i)
                    if plus:
                        vid, ve = v << K, v
                    else:
                        vid, ve = v, v << K
                    new[m] = new.get(m, 0) + vid
                    new[m2] = new.get(m2, 0) + ve
            states = new
        else:
            n, i = sl[1], sl[2]
            if n == 1:
                continue
            terms, lo, _, fden = _packed_projector(n, K)
            den = den * fden
            glued = []
            maxloops = 0
            for m, v in states.items():
                for u, q in terms:
                    m2, loops = _glue(m, i, u, n)
                    glued.append((m2, v * q, loops))
                    if loops > maxloops:
                        maxloops = loops
            # value * A^(2 lo) * delta^loops, delta = -A^-2 (x^2 + 1)
            E += -2 * lo + 2 * maxloops
            loopf = [1]
            for _ in range(maxloops):
                loopf.append(-((loopf[-1] << 2 * K) + loopf[-1]))
            new = {}
            for m2, v, loops in glued:
                if maxloops:
                    v = (v * loopf[loops]) << ((maxloops - loops) * K)
                new[m2] = new.get(m2, 0) + v
            states = new
        states = {m: v for m, v in states.items() if v}
        since_norm += 1
        if since_norm >= 8 and states:
            since_norm = 0
            tz = min((v & -v).bit_length() - 1 for v in states.values())
            g = tz // K
            if g:
                states = {m: v >> (g * K) for m, v in states.items()}
                E -= 2 * g
    total = states.get((), 0)
    digits = unpack(total, 0, K) if total else {}
    num = LaurentPoly({2 * e - E: c for e, c in digits.items()})
    return LaurentFraction(num, den)


def bracket_sweep(p, budget=None):
    """Bracket of a closed slice program; must be a Laurent polynomial."""
    f = bracket_sweep_fraction(p, budget)
    if f.den == ONE:
        return f.num
    q, r = f.num.divmod(f.den)
    if r:
        raise InexactDivision("sweep result is not a Laurent polynomial")
    return q
