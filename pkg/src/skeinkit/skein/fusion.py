"""Fusion and untwisting of a cabled twist region.

Two parallel n-cables twisted r times are rewritten as a sum over the
fused edge colour a in {0, 2, ..., 2n}; the r half twists then untwist
around the fused edge, leaving one scalar per term.
"""

from __future__ import annotations

from collections import namedtuple

from ..errors import InputError, NotATwistRegion
from ..laurent import LaurentFraction, LaurentPoly, delta, theta
from .slices import SliceProgram, cable_slices, slice_with_origins

FusionTerm = namedtuple("FusionTerm", "a coeff program block")
FusionTerm.__doc__ = """One term of a fusion expansion.

``block`` is the half-open slice range of ``program`` holding the fused
element, so that the rest of the program is the complementary tangle.
"""


def untwist_exponent(a, n):
    """A-exponent of one half twist acting on the fused edge a."""
    return 2 * n - a + n * n - a * a // 2


def fusion_coefficient(a, r, n):
    """I(a, r, n) = Delta_a / theta(n, n, a) * ((-1)^(n - a/2) A^e)^r."""
    sign = -1 if (n - a // 2) % 2 and r % 2 else 1
    twist = LaurentPoly({untwist_exponent(a, n) * r: sign})
    th = LaurentFraction.coerce(theta(n, n, a))
    return LaurentFraction(delta(a) * twist * th.den, th.num)


def fused_slices(a, n, i):
    """Slices of the fused element on the two n-blocks starting at i."""
    k = n - a // 2
    out = [("jw", n, i), ("jw", n, i + n)]
    out += [("cap", i + n - 1 - t) for t in range(k)]
    if a >= 2:
        out.append(("jw", a, i))
    out += [("cup", i + a // 2 + t) for t in range(k)]
    out += [("jw", n, i), ("jw", n, i + n)]
    return [s for s in out if not (s[0] == "jw" and s[1] == 1)]


def _check_chain(d, region):
    """Consecutive crossings of a twist region share a bigon (two arcs)."""
    if len(region) < 2:
        return
    shared = {}
    for x in region:
        for y in region:
            if x < y:
                common = set(d.crossings[x]) & set(d.crossings[y])
                if len(common) >= 2:
                    shared.setdefault(x, set()).add(y)
                    shared.setdefault(y, set()).add(x)
    # connected through bigons
    seen = {region[0]}
    stack = [region[0]]
    while stack:
        x = stack.pop()
        for y in shared.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != set(region):
        raise NotATwistRegion(
            f"crossings {list(region)} are not joined by a chain of bigons")


def twist_run(d, region):
    """Slice ``d`` with the region stacked; returns (program, start, stop, sign).

    ``sign`` is +1 when the stacked crossings are x- slices (A-smoothing is
    the cup-cap) and -1 for x+ slices.
    """
    region = tuple(sorted(set(region)))
    if not region:
        raise NotATwistRegion("empty twist region")
    if any(not 0 <= x < d.c for x in region):
        raise NotATwistRegion(f"crossing indices {list(region)} out of range")
    _check_chain(d, region)
    prog, origins = slice_with_origins(d, region)
    idx = [k for k, o in enumerate(origins) if o in region]
    start, stop = idx[0], idx[-1] + 1
    run = prog.slices[start:stop]
    if len(run) != len(region) or len(set(run)) != 1:
        raise NotATwistRegion(
            f"crossings {list(region)} do not stack into one twist")
    return prog, start, stop, (1 if run[0][0] == "x-" else -1)


def fusion_expand(d, twist_region, n, direction="along"):
    """Expand the decorated n-cable of ``d`` by fusing the given twist region.

    Returns a list of :data:`FusionTerm`; the sum of ``coeff * <program>``
    equals the bracket of the decorated n-cable.  Only fusion along the
    twist (the fused edge runs parallel to the two cables) is implemented,
    since that is the direction in which the twists untwist.
    """
    if direction != "along":
        raise InputError(f"unsupported fusion direction {direction!r}")
    if n < 1:
        raise InputError("cable width must be positive")
    prog, start, stop, sign = twist_run(d, twist_region)
    r = sign * (stop - start)
    i = prog.slices[start][1]
    cabled = cable_slices(prog, n, decorate=True)
    before = [s for k, s in cabled if k < start]
    after = [s for k, s in cabled if k >= stop]
    terms = []
    for a in range(0, 2 * n + 1, 2):
        block = fused_slices(a, n, n * i)
        program = SliceProgram(before + block + after)
        terms.append(FusionTerm(a, fusion_coefficient(a, r, n), program,
                                (len(before), len(before) + len(block))))
    return terms


def complement_through_strands(program, block, state=None):
    """Through strands of the tangle outside ``block`` after smoothing.

    The complement of the block is a disk with the block's 2n inputs on one
    side and its 2n outputs on the other.  Crossings outside the block are
    smoothed by ``state``: a sequence of "A"/"B" (one per crossing slice
    outside the block, in program order).  Projectors are ignored, so this
    counts the through strands of one crossingless term.  Returns the
    number of arcs joining an input to an output.
    """
    start, stop = block
    lo = None
    for sl in program.slices[start:stop]:
        pos = sl[2] if sl[0] == "jw" else sl[1]
        lo = pos if lo is None else min(lo, pos)
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    fresh = [0]

    def new():
        fresh[0] += 1
        parent[fresh[0]] = fresh[0]
        return fresh[0]

    row = []
    choices = iter(state or ())
    width = None
    k = 0
    slices = program.slices
    while k < len(slices):
        if k == start:
            # the block spans 2n positions from lo on the incoming row
            inner = program.slices[start:stop]
            width = _block_width(inner)
            for j in range(width):
                parent[("in", j)] = ("in", j)
                union(row[lo + j], ("in", j))
            tops = []
            for j in range(width):
                parent[("out", j)] = ("out", j)
                tops.append(("out", j))
            row[lo:lo + width] = tops
            k = stop
            continue
        sl = slices[k]
        op = sl[0]
        if op == "cup":
            x = new()
            row[sl[1]:sl[1]] = [x, x]
        elif op == "cap":
            union(row[sl[1]], row[sl[1] + 1])
            del row[sl[1]:sl[1] + 2]
        elif op in ("x+", "x-"):
            ch = next(choices)
            i = sl[1]
            vertical = (ch == "A") == (op == "x+")
            if not vertical:
                union(row[i], row[i + 1])
                x = new()
                row[i], row[i + 1] = x, x
        k += 1
    through = 0
    for j in range(width):
        r = find(("in", j))
        if any(find(("out", t)) == r for t in range(width)):
            through += 1
    return through


def _block_width(block_slices):
    """Row span of a fused block: the width of its first projector pair."""
    jw = [s for s in block_slices if s[0] == "jw"]
    if jw:
        lo = min(s[2] for s in jw)
        hi = max(s[2] + s[1] for s in jw)
        return hi - lo
    # n = 1: one cap and one cup at most
    return 2
