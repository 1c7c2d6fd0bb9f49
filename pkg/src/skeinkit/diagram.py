"""Oriented knot diagrams given by planar diagram (PD) codes.

PD convention
-------------
Each crossing is written ``X(a, b, c, d)``: the four arc labels met when
walking counterclockwise around the crossing, starting with the incoming
under-strand ``a``.  The under-strand runs ``a -> c``; the over-strand
joins ``b`` and ``d``.  The crossing is positive when the over-strand runs
``d -> b`` and negative when it runs ``b -> d``.  The A-smoothing joins
``a`` with ``b`` and ``c`` with ``d``; the B-smoothing joins ``a`` with
``d`` and ``b`` with ``c``.  With these rules a positive kink contributes
``-A^3`` to the bracket.

Orientation is recovered by walking each component, so labels need not be
consecutive.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import count

from .errors import (
    ArcNotFound,
    BadArcMultiplicity,
    MalformedPD,
    NonplanarSuspect,
    StateLengthMismatch,
)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _rot(t, k):
    k %= 4
    return tuple(t[k:]) + tuple(t[:k])


class Diagram:
    """An oriented link diagram.

    Attributes
    ----------
    crossings : tuple of 4-tuples of int
        PD tuples in the convention of the module docstring.
    signs : tuple of int
        +1 or -1 per crossing.
    free_loops : int
        Number of crossingless unknotted components.
    name : str or None
    """

    __slots__ = ("crossings", "signs", "free_loops", "name", "_ends",
                 "_components", "_states")

    def __init__(self, crossings, free_loops=0, name=None, check_planar=True):
        crossings = tuple(tuple(int(x) for x in c) for c in crossings)
        for c in crossings:
            if len(c) != 4:
                raise MalformedPD(f"crossing {c} does not have four labels")
        if not crossings and not free_loops:
            raise MalformedPD("diagram has no crossings and no components")
        self.crossings = crossings
        self.free_loops = free_loops
        self.name = name
        self._states = {}
        counts = Counter(x for c in crossings for x in c)
        bad = sorted(k for k, v in counts.items() if v != 2)
        if bad:
            raise BadArcMultiplicity(
                f"arc label(s) {bad} do not occur exactly twice")
        ends = {}
        for i, c in enumerate(crossings):
            for s, x in enumerate(c):
                ends.setdefault(x, []).append((i, s))
        self._ends = ends
        self.signs, self._components = self._orient()
        if check_planar:
            self._check_planar()

    # -- construction helpers ---------------------------------------------

    @classmethod
    def unknot(cls, loops=1, name="0_1"):
        return cls((), free_loops=loops, name=name)

    def _other_end(self, i, s):
        a, b = self._ends[self.crossings[i][s]]
        return b if a == (i, s) else a

    def _orient(self):
        n = len(self.crossings)
        entered = [[False] * 4 for _ in range(n)]
        comps = []
        order = [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]
        for start in order:
            i, s = start
            if entered[i][s] or entered[i][(s + 2) % 4]:
                continue
            labels = []
            cur = start
            while True:
                ci, cs = cur
                if entered[ci][cs]:
                    break
                if entered[ci][(cs + 2) % 4]:
                    raise MalformedPD(
                        f"inconsistent orientation at crossing {ci}")
                if cs == 2:
                    raise MalformedPD(
                        f"under-strand enters crossing {ci} at its outgoing slot")
                entered[ci][cs] = True
                out = (cs + 2) % 4
                labels.append(self.crossings[ci][out])
                cur = self._other_end(ci, out)
            if cur != start:
                raise MalformedPD("component walk did not close up")
            comps.append(tuple(labels))
        signs = []
        for i in range(n):
            if not entered[i][0]:
                raise MalformedPD(f"crossing {i} under-strand never traversed")
            if entered[i][3] == entered[i][1]:
                raise MalformedPD(f"over-strand at crossing {i} is inconsistent")
            signs.append(1 if entered[i][3] else -1)
        return tuple(signs), tuple(comps)

    def _check_planar(self):
        pieces = self.connected_pieces()
        faces = self.face_count()
        c = len(self.crossings)
        # Euler characteristic of the 4-valent map on the sphere
        if c and faces != c + 2 * pieces:
            raise NonplanarSuspect(
                f"face count {faces} does not match a planar diagram "
                f"({c} crossings, {pieces} piece(s))")
        g2 = 2 * (pieces + self.free_loops) - self.v_A - self.v_B + c
        if g2 < 0 or g2 % 2:
            raise NonplanarSuspect(
                f"2 - v_A - v_B + c = {g2} is not a nonnegative even integer")

    # -- basic combinatorics ----------------------------------------------

    @property
    def c(self):
        return len(self.crossings)

    @property
    def c_plus(self):
        return sum(1 for s in self.signs if s > 0)

    @property
    def c_minus(self):
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self):
        return sum(self.signs)

    @property
    def components(self):
        """Arc labels of each component in traversal order."""
        return self._components

    @property
    def n_components(self):
        return len(self._components) + self.free_loops

    @property
    def labels(self):
        return sorted(self._ends)

    def arc_ends(self, label):
        """``((i_out, slot_out), (i_in, slot_in))`` for an arc label."""
        if label not in self._ends:
            raise ArcNotFound(f"arc {label} not in diagram")
        (i, s), (j, t) = self._ends[label]
        if self._is_in(i, s):
            return (j, t), (i, s)
        return (i, s), (j, t)

    def _is_in(self, i, s):
        if s == 0:
            return True
        if s == 2:
            return False
        return (s == 3) == (self.signs[i] > 0)

    def component_of(self, label):
        for k, comp in enumerate(self._components):
            if label in comp:
                return k
        raise ArcNotFound(f"arc {label} not in diagram")

    def connected_pieces(self):
        """Number of connected pieces of the projection, free loops excluded."""
        uf = _UnionFind()
        for c in self.crossings:
            for x in c:
                uf.add(x)
            for x in c[1:]:
                uf.union(c[0], x)
        return len({uf.find(x) for x in uf.parent})

    def face_count(self):
        """Faces of the projection viewed as a map (crossingless loops excluded)."""
        seen = set()
        faces = 0
        for i in range(self.c):
            for s in range(4):
                if (i, s) in seen:
                    continue
                faces += 1
                cur = (i, s)
                while cur not in seen:
                    seen.add(cur)
                    j, t = self._other_end(*cur)
                    cur = (j, (t - 1) % 4)
        return faces

    # -- states -----------------------------------------------------------

    def state_graph(self, state):
        return apply_state(self, state)

    def _circles(self, choice):
        key = choice
        if key in self._states:
            return self._states[key]
        g = apply_state(self, KauffmanState(choice * self.c))
        self._states[key] = g
        return g

    @property
    def v_A(self):
        return self._circles("A").n_circles

    @property
    def v_B(self):
        return self._circles("B").n_circles

    # -- output -----------------------------------------------------------

    def to_pd(self):
        return " ".join("X(%d,%d,%d,%d)" % c for c in self.crossings)

    def __repr__(self):
        extra = f", free_loops={self.free_loops}" if self.free_loops else ""
        nm = f", name={self.name!r}" if self.name else ""
        return f"Diagram({self.to_pd()!r}{extra}{nm})"

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.crossings == other.crossings
                and self.free_loops == other.free_loops)

    def __hash__(self):
        return hash((self.crossings, self.free_loops))

    def summary(self):
        return {
            "name": self.name,
            "crossings": self.c,
            "c_plus": self.c_plus,
            "c_minus": self.c_minus,
            "writhe": self.writhe,
            "components": self.n_components,
            "v_A": self.v_A,
            "v_B": self.v_B,
        }


_XPAT = re.compile(r"X\s*[\(\[]\s*([^\)\]]*)[\)\]]")


def parse_pd(text, name=None):
    """Parse PD text such as ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)``.

    Also accepts ``PD[X[1,4,2,5], ...]`` and the nested-list form
    ``[[1,4,2,5], ...]``.
    """
    if text is None or not text.strip():
        raise MalformedPD("empty PD code")
    s = text.strip()
    groups = _XPAT.findall(s)
    if not groups:
        body = s
        if body.startswith("[[") and body.endswith("]]"):
            groups = re.findall(r"\[([^\[\]]*)\]", body)
    if not groups:
        raise MalformedPD(f"no crossings found in {text!r}")
    leftover = _XPAT.sub("", s)
    if groups and re.search(r"[A-Za-z]", re.sub(r"^\s*PD\s*\[|\]\s*$", "", leftover)):
        raise MalformedPD(f"unexpected text in PD code {text!r}")
    crossings = []
    for g in groups:
        parts = [p for p in re.split(r"[\s,]+", g.strip()) if p]
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise MalformedPD(f"non-integer arc label in {g!r}") from None
        if len(vals) != 4:
            raise MalformedPD(f"crossing {g!r} does not have four labels")
        crossings.append(vals)
    return Diagram(crossings, name=name)


@dataclass(frozen=True)
class KauffmanState:
    """A choice of A or B smoothing at every crossing."""

    choices: tuple

    def __init__(self, choices):
        vals = []
        for ch in choices:
            if ch in ("A", "a", 1, True):
                vals.append("A")
            elif ch in ("B", "b", 0, False, -1):
                vals.append("B")
            else:
                raise ValueError(f"bad state entry {ch!r}")
        object.__setattr__(self, "choices", tuple(vals))

    def __len__(self):
        return len(self.choices)

    @property
    def c_A(self):
        return self.choices.count("A")

    @property
    def c_B(self):
        return self.choices.count("B")

    @property
    def sgn(self):
        return self.c_A - self.c_B


@dataclass
class StateGraph:
    """State circles and one edge per crossing.

    ``circles`` lists each circle as a sorted tuple of arc labels (free
    loops appear as empty tuples).  ``edges[i]`` is the pair of circle
    indices joined by crossing ``i``.
    """

    circles: list
    edges: list

    @property
    def n_circles(self):
        return len(self.circles)

    def loop_edges(self):
        return [i for i, (u, v) in enumerate(self.edges) if u == v]

    def has_loop(self):
        return any(u == v for u, v in self.edges)

    def to_json(self):
        return {
            "circles": [list(c) for c in self.circles],
            "edges": [list(e) for e in self.edges],
            "loop_edges": self.loop_edges(),
        }


def apply_state(d, s):
    """Resolve every crossing of ``d`` according to state ``s``."""
    if not isinstance(s, KauffmanState):
        s = KauffmanState(s)
    if len(s) != d.c:
        raise StateLengthMismatch(
            f"state has length {len(s)} but diagram has {d.c} crossings")
    uf = _UnionFind()
    for x in d._ends:
        uf.add(x)
    for (a, b, c, e), ch in zip(d.crossings, s.choices):
        if ch == "A":
            uf.union(a, b)
            uf.union(c, e)
        else:
            uf.union(a, e)
            uf.union(b, c)
    groups = {}
    for x in sorted(d._ends):
        groups.setdefault(uf.find(x), []).append(x)
    circles = sorted(tuple(g) for g in groups.values())
    index = {}
    for k, g in enumerate(circles):
        for x in g:
            index[x] = k
    circles.extend(() for _ in range(d.free_loops))
    edges = []
    for (a, b, c, e), ch in zip(d.crossings, s.choices):
        other = c if ch == "A" else b
        edges.append((index[a], index[other]))
    return StateGraph(circles, edges)


def all_a_state(d):
    return KauffmanState("A" * d.c)


def all_b_state(d):
    return KauffmanState("B" * d.c)


def adequacy(d):
    ga = d._circles("A")
    gb = d._circles("B")
    return {
        "a_adequate": not ga.has_loop(),
        "b_adequate": not gb.has_loop(),
        "v_A": ga.n_circles,
        "v_B": gb.n_circles,
    }


def is_adequate(d):
    a = adequacy(d)
    return a["a_adequate"] and a["b_adequate"]


def turaev_genus(d):
    pieces = d.connected_pieces() + d.free_loops
    g2 = 2 * pieces - d.v_A - d.v_B + d.c
    if g2 < 0 or g2 % 2:
        raise NonplanarSuspect(f"2 g_T = {g2} is not a nonnegative even integer")
    return g2 // 2


# -- surgeries --------------------------------------------------------------


def from_geometry(crossings, seeds=(), free_loops=0, name=None, relabel=True):
    """Build a :class:`Diagram` from unoriented crossings.

    Each crossing is a list of four labels in counterclockwise order whose
    under-strand occupies positions 0 and 2.  ``seeds`` holds
    ``(crossing, position)`` pairs at which a strand is known to enter;
    other components get a deterministic orientation.  Tuples are rotated
    so that the incoming under-strand comes first.
    """
    crossings = [list(c) for c in crossings]
    ends = {}
    for i, c in enumerate(crossings):
        for s, x in enumerate(c):
            ends.setdefault(x, []).append((i, s))
    for x, e in ends.items():
        if len(e) != 2:
            raise BadArcMultiplicity(f"label {x} occurs {len(e)} times")

    def other(i, s):
        a, b = ends[crossings[i][s]]
        return b if a == (i, s) else a

    n = len(crossings)
    entered = [[False] * 4 for _ in range(n)]
    walks = []
    starts = list(seeds) + [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]
    for start in starts:
        i, s = start
        if entered[i][s]:
            continue
        if entered[i][(s + 2) % 4]:
            if start in seeds:
                raise ValueError(f"seed {start} conflicts with orientation")
            continue
        walk = []
        cur = start
        while not entered[cur[0]][cur[1]]:
            ci, cs = cur
            if entered[ci][(cs + 2) % 4]:
                raise ValueError("seeds give inconsistent orientations")
            entered[ci][cs] = True
            out = (ci, (cs + 2) % 4)
            walk.append(out)
            cur = other(*out)
        walks.append(walk)
    rotated = []
    for i, c in enumerate(crossings):
        rotated.append(_rot(c, 0 if entered[i][0] else 2))
    if relabel:
        new = {}
        fresh = count(1)
        for walk in walks:
            for (i, s) in walk:
                x = crossings[i][s]
                if x not in new:
                    new[x] = next(fresh)
        rotated = [tuple(new[x] for x in c) for c in rotated]
    return Diagram(rotated, free_loops=free_loops, name=name)


def mirror(d):
    """Switch every crossing; keeps labels and orientation."""
    out = []
    for (a, b, c, e), s in zip(d.crossings, d.signs):
        out.append((e, a, b, c) if s > 0 else (b, c, e, a))
    name = f"{d.name}*" if d.name else None
    return Diagram(out, free_loops=d.free_loops, name=name)


def add_kink(d, sign, arc=None):
    """Add one Reidemeister I curl of the given sign on ``arc`` (default lowest label)."""
    if sign not in (1, -1):
        raise ValueError("kink sign must be +1 or -1")
    if not d.crossings:
        loop = (1, 1, 2, 2) if sign > 0 else (1, 2, 2, 1)
        return Diagram([loop], free_loops=d.free_loops - 1, name=d.name)
    labels = d.labels
    l = labels[0] if arc is None else arc
    if l not in d._ends:
        raise ArcNotFound(f"arc {l} not in diagram")
    _, (i2, q2) = d.arc_ends(l)
    k, m = labels[-1] + 1, labels[-1] + 2
    crossings = [list(c) for c in d.crossings]
    crossings[i2][q2] = k
    crossings.append([l, k, m, m] if sign > 0 else [l, m, m, k])
    return Diagram(crossings, free_loops=d.free_loops, name=d.name)


def connected_sum(d1, d2, arc1=None, arc2=None):
    """Oriented connected sum joining ``arc1`` of ``d1`` to ``arc2`` of ``d2``.

    Defaults to the lowest-labelled arc of each summand.
    """
    if arc1 is not None and arc1 not in d1._ends:
        raise ArcNotFound(f"arc {arc1} not in first diagram")
    if arc2 is not None and arc2 not in d2._ends:
        raise ArcNotFound(f"arc {arc2} not in second diagram")
    name = f"{d1.name}#{d2.name}" if d1.name and d2.name else None
    if not d2.crossings:
        return Diagram(d1.crossings, d1.free_loops + d2.free_loops - 1, name)
    if not d1.crossings:
        return Diagram(d2.crossings, d1.free_loops + d2.free_loops - 1, name)
    off = max(d1.labels) + 1 - min(d2.labels)
    c2 = [[x + off for x in c] for c in d2.crossings]
    x1 = d1.labels[0] if arc1 is None else arc1
    x2 = (d2.labels[0] if arc2 is None else arc2) + off
    c1 = [list(c) for c in d1.crossings]
    _, (b1, t1) = d1.arc_ends(x1)
    _, (b2, t2) = d2.arc_ends(x2 - off)
    # arc x1 now runs into d2's crossing, arc x2 into d1's
    c1[b1][t1] = x2
    c2[b2][t2] = x1
    return Diagram(c1 + c2, free_loops=d1.free_loops + d2.free_loops, name=name)


def _in_out_slots(sign):
    if sign > 0:
        return (0, 3), (2, 1)
    return (0, 1), (2, 3)


def _cable_geometry(d, n):
    """Geometric crossings of the n-cable plus the band endpoint ids.

    Returns ``(crossings, bands, cell)`` where ``bands[(label, side)]`` is
    the pair of endpoint ids (out end, in end) to be joined for copy
    ``side`` (0 is leftmost relative to the arc's direction) and
    ``cell[(i, k, r)]`` is the index of the small crossing at column ``k``
    and row ``r`` of the grid replacing crossing ``i``.
    """
    fresh = count(10 ** 6)
    crossings = []
    cell = {}
    for i in range(d.c):
        v = [[None] * (n + 1) for _ in range(n)]
        h = [[None] * (n + 1) for _ in range(n)]
        for k in range(n):
            v[k][0] = ("E", i, 0, k)
            v[k][n] = ("E", i, 2, n - 1 - k)
            for r in range(1, n):
                v[k][r] = next(fresh)
        for r in range(n):
            h[r][0] = ("E", i, 3, n - 1 - r)
            h[r][n] = ("E", i, 1, r)
            for k in range(1, n):
                h[r][k] = next(fresh)
        for k in range(n):
            for r in range(n):
                cell[(i, k, r)] = len(crossings)
                crossings.append([v[k][r], h[r][k + 1], v[k][r + 1], h[r][k]])
    bands = {}
    for l in d.labels:
        (i1, q1), (i2, q2) = d.arc_ends(l)
        for s in range(n):
            bands[(l, s)] = (("E", i1, q1, n - 1 - s), ("E", i2, q2, s))
    return crossings, bands, cell


def _join(crossings, pairs):
    """Replace endpoint ids so that each pair in ``pairs`` shares a label."""
    alias = {}
    for a, b in pairs:
        alias[b] = a
    return [[alias.get(x, x) for x in c] for c in crossings]


def _cable_seeds(d, n, cell, reversed_sides=()):
    seeds = []
    for i in range(d.c):
        for s in range(n):
            if s in reversed_sides:
                seeds.append((cell[(i, s, n - 1)], 2))
                continue
            seeds.append((cell[(i, s, 0)], 0))
    return seeds


def _intern(crossings):
    ids = {}
    fresh = count(1)
    out = []
    for c in crossings:
        row = []
        for x in c:
            if x not in ids:
                ids[x] = next(fresh)
            row.append(ids[x])
        out.append(row)
    return out


def cable(d, n):
    """Blackboard n-cable with every copy oriented parallel to the original."""
    if n < 1:
        raise ValueError("cable width must be positive")
    if n == 1:
        return d
    crossings, bands, cell = _cable_geometry(d, n)
    crossings = _intern(_join(crossings, bands.values()))
    seeds = _cable_seeds(d, n, cell)
    name = f"{d.name}^{n}" if d.name else None
    return from_geometry(crossings, seeds, free_loops=n * d.free_loops, name=name)


def _half_twists(cur, count_, over_left, fresh):
    """Stack half twists on the two band strands ``cur = [west, east]``."""
    crossings = []
    for _ in range(count_):
        nw, ne = next(fresh), next(fresh)
        sw, se = cur
        if over_left:
            crossings.append([se, ne, nw, sw])
        else:
            crossings.append([sw, se, ne, nw])
        cur = [nw, ne]
    return crossings, cur


def _clasp(cur, top, option, fresh):
    m, p = next(fresh), next(fresh)
    (c0, c1), (q0, q1) = cur, top
    if option == 0:
        return [[m, p, q0, c0], [c1, q1, p, m]]
    return [[c0, m, p, q0], [m, c1, q1, p]]


def linking_number(d, comp_a=0, comp_b=1):
    """Linking number of two components (by component index)."""
    comp_of = {}
    for k, comp in enumerate(d.components):
        for x in comp:
            comp_of[x] = k
    total = 0
    for (a, b, _, _), s in zip(d.crossings, d.signs):
        if {comp_of[a], comp_of[b]} == {comp_a, comp_b}:
            total += s
    return total // 2


def whitehead_double(d, clasp_sign, untwisted=True):
    """Whitehead double built from the antiparallel 2-cable of ``d``.

    The band of the lowest-labelled arc carries ``|wr(d)|`` full twists
    (two crossings each, handedness chosen so the two strands have linking
    number zero) followed by a two-crossing clasp of sign ``clasp_sign``.
    """
    if clasp_sign not in (1, -1):
        raise ValueError("clasp sign must be +1 or -1")
    if d.n_components != 1 or not d.crossings:
        raise ValueError("whitehead_double needs a knot diagram with crossings")
    w = d.writhe if untwisted else 0
    base, bands, cell = _cable_geometry(d, 2)
    l0 = d.labels[0]
    p0, q0 = bands[(l0, 0)]
    p1, q1 = bands[(l0, 1)]
    others = [v for k, v in bands.items() if k[0] != l0]
    fresh = count(2 * 10 ** 6)

    over_left = True
    if w:
        options = []
        for ol in (True, False):
            tw, cur = _half_twists([p0, p1], 2 * abs(w), ol, fresh)
            link = _intern(_join(base + tw, others + [(cur[0], q0), (cur[1], q1)]))
            seeds = _cable_seeds(d, 2, cell, reversed_sides=(1,))
            diag = from_geometry(link, seeds)
            options.append((abs(linking_number(diag)), ol))
        options.sort()
        if options[0][0] != 0:
            raise RuntimeError("could not untwist the double")
        over_left = options[0][1]
    twists, cur = _half_twists([p0, p1], 2 * abs(w), over_left, fresh)
    name = f"W{'+' if clasp_sign > 0 else '-'}({d.name})" if d.name else None
    for option in (0, 1):
        clasp = _clasp(cur, [q0, q1], option, fresh)
        idx = len(base) + len(twists)
        raw = _intern(_join(base + twists + clasp, others))
        out = from_geometry(raw, name=name)
        if out.signs[idx] == out.signs[idx + 1] == clasp_sign:
            return out
    raise RuntimeError("clasp construction failed")
