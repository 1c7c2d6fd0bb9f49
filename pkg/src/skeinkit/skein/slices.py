"""Slice programs: a diagram cut into elementary horizontal pieces.

The sweep runs bottom to top over a row of open endpoints numbered from 0
at the left.  Slices are

``cup i``    two new endpoints at positions i, i+1
``cap i``    endpoints i and i+1 are joined and removed
``x+ i``     crossing on strands i, i+1 whose A-smoothing is vertical
``x- i``     crossing on strands i, i+1 whose A-smoothing is the cup-cap
``jw n i``   Jones-Wenzl projector f_n on positions i .. i+n-1

so that ``<x+> = A id + A^-1 e`` and ``<x-> = A e + A^-1 id``.
"""

from __future__ import annotations

import re

from ..errors import (MalformedPD, NotATwistRegion, SlicingFailed,
                      StrandMismatch)

EXHAUSTIVE_LIMIT = 12

_LINE = re.compile(r"^\s*(cup|cap|x\+|x-|jw)\s+(-?\d+)(?:\s+(-?\d+))?\s*$")


class SliceProgram:
    """An ordered list of slices; see the module docstring for the format."""

    __slots__ = ("slices",)

    def __init__(self, slices=()):
        self.slices = [tuple(s) for s in slices]

    def __iter__(self):
        return iter(self.slices)

    def __len__(self):
        return len(self.slices)

    def __eq__(self, other):
        return isinstance(other, SliceProgram) and self.slices == other.slices

    def __repr__(self):
        return f"SliceProgram({len(self.slices)} slices, width {self.max_width})"

    def widths(self):
        """Row width after each slice; raises on an invalid program."""
        w = 0
        out = []
        for k, sl in enumerate(self.slices):
            op = sl[0]
            if op == "cup":
                if not 0 <= sl[1] <= w:
                    raise StrandMismatch(f"slice {k}: cup at {sl[1]} on width {w}")
                w += 2
            elif op == "cap":
                if not 0 <= sl[1] <= w - 2:
                    raise StrandMismatch(f"slice {k}: cap at {sl[1]} on width {w}")
                w -= 2
            elif op in ("x+", "x-"):
                if not 0 <= sl[1] <= w - 2:
                    raise StrandMismatch(f"slice {k}: crossing at {sl[1]} on width {w}")
            elif op == "jw":
                n, i = sl[1], sl[2]
                if n < 1 or not 0 <= i <= w - n:
                    raise StrandMismatch(f"slice {k}: jw {n} at {i} on width {w}")
            else:
                raise MalformedPD(f"unknown slice {sl!r}")
            out.append(w)
        return out

    def validate(self):
        ws = self.widths()
        if ws and ws[-1] != 0:
            raise StrandMismatch(f"program ends with {ws[-1]} open endpoints")
        return self

    @property
    def max_width(self):
        return max(self.widths(), default=0)

    @property
    def n_crossings(self):
        return sum(1 for s in self.slices if s[0] in ("x+", "x-"))

    def has_projectors(self):
        return any(s[0] == "jw" for s in self.slices)

    def to_text(self):
        return "\n".join(" ".join(str(x) for x in s) for s in self.slices) + "\n"

    @classmethod
    def from_text(cls, text):
        slices = []
        for ln, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0]
            if not line.strip():
                continue
            m = _LINE.match(line)
            if not m:
                raise MalformedPD(f"line {ln}: cannot parse slice {line.strip()!r}")
            op, a, b = m.group(1), int(m.group(2)), m.group(3)
            if op == "jw":
                if b is None:
                    raise MalformedPD(f"line {ln}: jw needs a size and a position")
                slices.append((op, a, int(b)))
            else:
                if b is not None:
                    raise MalformedPD(f"line {ln}: {op} takes one position")
                slices.append((op, a))
        return cls(slices).validate()

    def cup_components(self):
        """Map slice index of each cup to a component id (0, 1, ... in order)."""
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        row = []
        cups = {}
        for k, sl in enumerate(self.slices):
            op = sl[0]
            if op == "cup":
                parent[k] = k
                cups[k] = k
                row[sl[1]:sl[1]] = [k, k]
            elif op == "cap":
                i = sl[1]
                a, b = find(row[i]), find(row[i + 1])
                if a != b:
                    parent[max(a, b)] = min(a, b)
                del row[i:i + 2]
            elif op in ("x+", "x-"):
                i = sl[1]
                row[i], row[i + 1] = row[i + 1], row[i]
        roots = {}
        out = {}
        for k in cups:
            r = find(k)
            out[k] = roots.setdefault(r, len(roots))
        return out


def replace_projectors_with_identity(p):
    """The program with every projector slice removed."""
    return SliceProgram(s for s in p.slices if s[0] != "jw")


def cable_program(p, n, decorate=False):
    """Replace every slice by its blackboard n-cable.

    With ``decorate`` one projector f_n is inserted on each component, right
    after the first cup of that component.
    """
    return SliceProgram(s for _, s in cable_slices(p, n, decorate))


def cable_slices(p, n, decorate=False):
    """Cabled slices paired with the index of the slice they come from."""
    if n < 1:
        raise ValueError("cable width must be positive")
    if p.has_projectors():
        raise StrandMismatch("cannot cable a program that contains projectors")
    if n == 1:
        return list(enumerate(p.slices))
    first_cup = {}
    if decorate:
        for k, comp in sorted(p.cup_components().items()):
            first_cup.setdefault(comp, k)
    marked = set(first_cup.values())
    out = []
    for k, sl in enumerate(p.slices):
        op, i = sl[0], sl[1]
        if op == "cup":
            out.extend((k, ("cup", n * i + j)) for j in range(n))
            if k in marked:
                out.append((k, ("jw", n, n * i)))
        elif op == "cap":
            out.extend((k, ("cap", n * i + n - 1 - j)) for j in range(n))
        else:
            for a in range(n - 1, -1, -1):
                for b in range(n):
                    out.append((k, (op, n * i + a + b)))
    return out


# -- slicing a PD diagram -------------------------------------------------


class _Slicer:
    """Planarises a diagram into slices.

    The row is a list of entries ``(label, crossing, slot)``: an open end of
    arc ``label`` whose other end is at ``slot`` of ``crossing``.  A
    crossing is placed once all row entries aimed at it sit side by side
    with ccw-consecutive slots.
    """

    def __init__(self, d, region=()):
        self.d = d
        self.region = tuple(region)
        self.rset = frozenset(region)
        self.ends = {}
        for i, c in enumerate(d.crossings):
            for s, x in enumerate(c):
                self.ends.setdefault(x, []).append((i, s))

    def other(self, i, s):
        a, b = self.ends[self.d.crossings[i][s]]
        return b if a == (i, s) else a

    def entry(self, i, s):
        j, t = self.other(i, s)
        return (self.d.crossings[i][s], j, t)

    def candidates(self, row, placed):
        groups = {}
        for p, (_, x, s) in enumerate(row):
            if x not in placed:
                groups.setdefault(x, []).append((p, s))
        out = []
        for x, items in groups.items():
            p0, s0 = items[0]
            m = len(items)
            if m > 4:
                continue
            if all(p == p0 + k and s == (s0 + k) % 4
                   for k, (p, s) in enumerate(items)):
                out.append((x, p0, s0, m))
        return out

    def place(self, row, placed, x, p, s, m):
        kind = "x+" if s % 2 else "x-"
        if m == 1:
            sl = [("cup", p + 1), (kind, p, x)]
        elif m == 2:
            sl = [(kind, p, x)]
        elif m == 3:
            sl = [(kind, p, x), ("cap", p + 1)]
        else:
            sl = [(kind, p, x), ("cap", p + 1), ("cap", p)]
        outs = [self.entry(x, (s + k) % 4) for k in (3, 2, 1)[:4 - m]]
        row = row[:p] + outs + row[p + m:]
        placed = placed | {x}
        j = 0
        while j < len(row) - 1:
            a, b = row[j], row[j + 1]
            if a[0] == b[0] and a[1] in placed and b[1] in placed:
                sl.append(("cap", j))
                del row[j:j + 2]
                j = max(j - 1, 0)
            else:
                j += 1
        return row, placed, sl, kind

    def start_row(self, placed):
        for x in range(self.d.c):
            if x in placed:
                continue
            for s in range(4):
                lab, j, t = self.entry(x, s)
                for row in ([(lab, x, s), (lab, j, t)], [(lab, j, t), (lab, x, s)]):
                    if self.candidates(row, placed):
                        yield row
        for x in range(self.d.c):
            if x not in placed:
                for s in range(4):
                    lab, j, t = self.entry(x, s)
                    yield [(lab, x, s), (lab, j, t)]

    def order(self, cands, row, placed, last, chain):
        scored = []
        for cand in cands:
            x, p, s, m = cand
            if chain is not None:
                kind_c = "x+" if s % 2 else "x-"
                last_one = self.rset <= placed | {x}
                if not (x in self.rset and (m == 2 or last_one)
                        and p == chain[0] and kind_c == chain[1]):
                    continue
            new_row = self.place(row, placed, *cand)[0]
            in_region = x in self.rset
            dist = abs(p - last) if last is not None else 0
            scored.append(((not in_region, -m, len(new_row), dist, x), cand))
        scored.sort()
        return [c for _, c in scored]

    def step_chain(self, placed, x, p, kind, chain):
        if x not in self.rset:
            return None
        if self.rset <= placed | {x}:
            return None
        return (p, kind)

    def greedy(self):
        slices = []
        row = []
        placed = frozenset()
        last = None
        chain = None
        while len(placed) < self.d.c:
            if not row:
                starts = list(self.start_row(placed))
                row = starts[0]
                slices.append(("cup", 0))
            cands = self.order(self.candidates(row, placed), row, placed, last, chain)
            if not cands:
                return None
            x, p, s, m = cands[0]
            row, placed, sl, kind = self.place(row, placed, x, p, s, m)
            chain = self.step_chain(placed, x, p, kind, chain)
            slices.extend(sl)
            last = p
        if row:
            return None
        return slices

    def exhaustive(self, limit=None):
        """Depth-first search over placement orders.

        With ``limit`` only slicings whose row never exceeds that width are
        accepted.
        """
        failed = set()
        limit = float("inf") if limit is None else limit

        def rec(row, placed, chain):
            if len(placed) == self.d.c:
                return [] if not row else None
            key = (tuple(row), placed, chain)
            if key in failed:
                return None
            if not row:
                starts = list(self.start_row(placed))
                seen = set()
                for r in starts:
                    if tuple(r) in seen or limit < 2:
                        continue
                    seen.add(tuple(r))
                    rest = rec(r, placed, chain)
                    if rest is not None:
                        return [("cup", 0)] + rest
                failed.add(key)
                return None
            for cand in self.order(self.candidates(row, placed), row, placed, None, chain):
                x, p, s, m = cand
                if len(row) + (2 if m == 1 else 0) > limit:
                    continue
                new_row, new_placed, sl, kind = self.place(row, placed, *cand)
                rest = rec(new_row, new_placed,
                           self.step_chain(new_placed, x, p, kind, chain))
                if rest is not None:
                    return sl + rest
            failed.add(key)
            return None

        return rec([], frozenset(), None)


def to_slice_program(d, region=None):
    """Slice a diagram; free loops are appended as cup-cap pairs."""
    return slice_with_origins(d, region)[0]


def slice_with_origins(d, region=None):
    """Slice a diagram and report which crossing each slice comes from.

    ``region`` (a collection of crossing indices) forces those crossings to
    be placed consecutively at one position, so they appear as a run of
    identical crossing slices.  Returns ``(program, origins)`` where
    ``origins[k]`` is the crossing index of slice ``k`` or None.
    """
    region = tuple(sorted(set(region))) if region else ()
    if region and any(not 0 <= x < d.c for x in region):
        raise NotATwistRegion(f"crossing indices {region} out of range")
    sl = _Slicer(d, region)
    slices = sl.greedy() if d.c else []
    if slices is None:
        if d.c > EXHAUSTIVE_LIMIT:
            raise SlicingFailed(
                f"greedy slicing failed on a {d.c}-crossing diagram")
        slices = sl.exhaustive()
        if slices is None:
            if region:
                raise NotATwistRegion(
                    f"crossings {list(region)} cannot be stacked as one twist")
            raise SlicingFailed("no planar slicing found")
    if 0 < d.c <= EXHAUSTIVE_LIMIT:
        # narrow the row: the sweep cost grows like Catalan(width / 2)
        width = SliceProgram(s[:2] for s in slices).max_width
        while width > 2:
            better = sl.exhaustive(width - 2)
            if better is None:
                break
            slices = better
            width = SliceProgram(s[:2] for s in slices).max_width
    for _ in range(d.free_loops):
        slices.extend([("cup", 0), ("cap", 0)])
    origins = [s[2] if len(s) == 3 else None for s in slices]
    prog = SliceProgram(s[:2] for s in slices).validate()
    return prog, origins
