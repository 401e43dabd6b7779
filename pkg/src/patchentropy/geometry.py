"""Rectilinear regions: finite unions of closed axis-aligned boxes.

Regions carry exact corners (rationals or :class:`~patchentropy.exact.Coord`).
In dimension one a region may additionally hold *point runs*, arithmetic
progressions of isolated points, so that sets like ``[1, n] u (Z n [1, e^n])``
stay representable when ``e^n`` is large.

All set operations treat regions as closed sets.  ``closure_difference``
returns the closure of ``A \\ B``; every measure computed from it agrees with
the measure of the plain difference.
"""

from __future__ import annotations

import bisect
import heapq
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    Coord,
    Number,
    ceil_num,
    floor_num,
    format_number,
    number_to_json,
    parse_number,
    sort_exact,
)

# materialisation guard for point runs that cannot be handled arithmetically
RUN_MATERIALISE_LIMIT = 200_000
HALF = Fraction(1, 2)


class RegionError(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    lo: tuple
    hi: tuple

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise RegionError("box corners of different dimension")
        for a, b in zip(self.lo, self.hi):
            if b < a:
                raise RegionError(f"box with lo > hi: {self.lo} {self.hi}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def degenerate(self) -> bool:
        return any(a == b for a, b in zip(self.lo, self.hi))

    def volume(self):
        v = 1
        for a, b in zip(self.lo, self.hi):
            v = (b - a) * v
        return v

    def contains(self, p) -> bool:
        return all(a <= x <= b for a, x, b in zip(self.lo, p, self.hi))

    def contains_box(self, other: "Box") -> bool:
        return all(a <= c and d <= b for a, b, c, d in zip(self.lo, self.hi, other.lo, other.hi))

    def translate(self, g) -> "Box":
        return Box(tuple(a + x for a, x in zip(self.lo, g)), tuple(b + x for b, x in zip(self.hi, g)))

    def __add__(self, other: "Box") -> "Box":
        return Box(tuple(a + c for a, c in zip(self.lo, other.lo)),
                   tuple(b + d for b, d in zip(self.hi, other.hi)))

    def intersect(self, other: "Box") -> "Box | None":
        lo = tuple(max(a, c) for a, c in zip(self.lo, other.lo))
        hi = tuple(min(b, d) for b, d in zip(self.hi, other.hi))
        if any(h < l for l, h in zip(lo, hi)):
            return None
        return Box(lo, hi)

    def sup_gap(self, other: "Box"):
        """Sup-norm distance between the two closed boxes."""
        g = 0
        for a, b, c, d in zip(self.lo, self.hi, other.lo, other.hi):
            g = max(g, c - b, a - d)
        return g


@dataclass(frozen=True)
class PointRun:
    """Points ``start + i*step`` for ``0 <= i < count`` on the real line."""

    start: Number
    step: Fraction
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise RegionError("empty point run")
        if self.step <= 0:
            raise RegionError("point run step must be positive")

    @property
    def last(self):
        return self.start + (self.count - 1) * self.step

    def point(self, i: int):
        return self.start + i * self.step

    def points(self) -> list:
        return [self.start + i * self.step for i in range(self.count)]

    def index_range(self, lo, hi) -> tuple[int, int]:
        """Indices ``i`` with ``lo <= point(i) <= hi``, clipped (may be empty)."""
        i0 = max(0, ceil_num((lo - self.start) / self.step))
        i1 = min(self.count - 1, floor_num((hi - self.start) / self.step))
        return i0, i1

    def index_of(self, x) -> int | None:
        q = (x - self.start) / self.step
        if isinstance(q, Coord):
            return None
        q = Fraction(q)
        if q.denominator != 1 or not 0 <= q < self.count:
            return None
        return int(q)

    def sub(self, i0: int, i1: int) -> "PointRun | None":
        if i1 < i0:
            return None
        return PointRun(self.point(i0), self.step, i1 - i0 + 1)

    def translate(self, g) -> "PointRun":
        return PointRun(self.start + g, self.step, self.count)


@dataclass(frozen=True, eq=True)
class Region:
    """A finite union of closed boxes (plus point runs in dimension one)."""

    dim: int
    boxes: tuple = ()
    runs: tuple = ()

    # construction goes through ``Region.of`` which canonicalises
    @staticmethod
    def of(dim: int, boxes: Iterable[Box] = (), runs: Iterable[PointRun] = ()) -> "Region":
        boxes = list(boxes)
        runs = list(runs)
        for b in boxes:
            if b.dim != dim:
                raise RegionError("box dimension mismatch")
        if runs and dim != 1:
            raise RegionError("point runs are only supported in dimension one")
        if dim == 1:
            ivs = _merge([(b.lo[0], b.hi[0]) for b in boxes])
            runs = _canon_runs(runs, ivs)
            return Region(1, tuple(Box((a,), (b,)) for a, b in ivs), tuple(runs))
        return Region(dim, tuple(_canon_boxes(boxes)), ())

    @staticmethod
    def empty(dim: int) -> "Region":
        return Region(dim, (), ())

    @property
    def is_empty(self) -> bool:
        return not self.boxes and not self.runs

    def intervals(self) -> list[tuple]:
        return [(b.lo[0], b.hi[0]) for b in self.boxes]

    def __repr__(self) -> str:
        return f"Region({format_region(self)})"

    def contains(self, p) -> bool:
        return contains_point(self, p)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def interval(lo, hi) -> Region:
    return Region.of(1, [Box((lo,), (hi,))])


def box(lo: Sequence, hi: Sequence) -> Region:
    return Region.of(len(lo), [Box(tuple(lo), tuple(hi))])


def cube(radius, dim: int = 1, center=None) -> Region:
    c = center if center is not None else (0,) * dim
    return box(tuple(x - radius for x in c), tuple(x + radius for x in c))


def point_set(points: Iterable, dim: int = 1) -> Region:
    pts = [p if isinstance(p, tuple) else (p,) for p in points]
    return Region.of(dim, [Box(p, p) for p in pts])


def integer_points(lo: int, hi: int, step=1) -> Region:
    """The points ``lo, lo+step, ...`` up to ``hi`` as a single point run."""
    if hi < lo:
        return Region.empty(1)
    count = floor_num(Fraction(hi - lo) / step) + 1
    return Region.of(1, [], [PointRun(lo, Fraction(step), count)])


def union(*regions: Region) -> Region:
    dim = regions[0].dim
    _check_dims(regions)
    return Region.of(dim, [b for r in regions for b in r.boxes], [u for r in regions for u in r.runs])


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _merge(ivs: list[tuple]) -> list[tuple]:
    if not ivs:
        return []
    ivs = sort_exact(ivs)
    out = [list(ivs[0])]
    for a, b in ivs[1:]:
        cur = out[-1]
        if a <= cur[1]:
            if b > cur[1]:
                cur[1] = b
        else:
            out.append([a, b])
    return [tuple(x) for x in out]


def _in_intervals(ivs: list[tuple], lows: list, x) -> bool:
    i = bisect.bisect_right(lows, x) - 1
    return i >= 0 and x <= ivs[i][1]


def _run_minus_intervals(run: PointRun, ivs: list[tuple]) -> list[PointRun]:
    pieces = []
    cur = 0
    for a, b in ivs:
        if b < run.start or a > run.last:
            continue
        i0, i1 = run.index_range(a, b)
        if i1 < i0:
            continue
        if i0 > cur:
            pieces.append(run.sub(cur, i0 - 1))
        cur = max(cur, i1 + 1)
        if cur >= run.count:
            break
    if cur < run.count:
        pieces.append(run.sub(cur, run.count - 1))
    return [p for p in pieces if p is not None]


def _canon_runs(runs: list[PointRun], ivs: list[tuple]) -> list[PointRun]:
    out = []
    for r in runs:
        out.extend(_run_minus_intervals(r, ivs))
    # single points are kept as runs of length one; order by start
    out = list(dict.fromkeys(out))
    if len(out) > 1:
        starts = sort_exact([(r.start, r.step, r.count) for r in out])
        out = [PointRun(s, st, c) for s, st, c in starts]
    return out


def _box_key(b: Box):
    return tuple(float(x) for x in b.lo + b.hi)


def _canon_boxes(boxes: list[Box]) -> list[Box]:
    boxes = list(dict.fromkeys(boxes))
    boxes = _merge_adjacent(boxes)
    # drop boxes inside a single other box
    boxes.sort(key=lambda b: [-float(b.volume())] + [-(float(h) - float(l)) for l, h in zip(b.lo, b.hi)])
    kept: list[Box] = []
    for b in boxes:
        if not any(k.contains_box(b) for k in kept):
            kept.append(b)
    # drop boxes covered by the union of the rest
    i = len(kept) - 1
    while i >= 0 and len(kept) > 1:
        b = kept[i]
        rest = kept[:i] + kept[i + 1:]
        if _box_covered(b, rest):
            kept = rest
        i -= 1
    kept.sort(key=_box_key)
    return kept


def _merge_adjacent(boxes: list[Box]) -> list[Box]:
    changed = True
    boxes = list(boxes)
    while changed and len(boxes) > 1:
        changed = False
        for i, j in itertools.combinations(range(len(boxes)), 2):
            a, b = boxes[i], boxes[j]
            diff = [k for k in range(a.dim) if (a.lo[k], a.hi[k]) != (b.lo[k], b.hi[k])]
            if len(diff) != 1:
                continue
            k = diff[0]
            if a.hi[k] >= b.lo[k] and b.hi[k] >= a.lo[k]:
                lo = list(a.lo)
                hi = list(a.hi)
                lo[k] = min(a.lo[k], b.lo[k])
                hi[k] = max(a.hi[k], b.hi[k])
                boxes[i] = Box(tuple(lo), tuple(hi))
                del boxes[j]
                changed = True
                break
    return boxes


# ---------------------------------------------------------------------------
# face decomposition (any dimension, boxes only)
# ---------------------------------------------------------------------------

def _axis_breaks(boxes: Iterable[Box], dim: int) -> list[list]:
    axes = [set() for _ in range(dim)]
    for b in boxes:
        for k in range(dim):
            axes[k].add(b.lo[k])
            axes[k].add(b.hi[k])
    return [sort_exact(list(s)) for s in axes]


def _faces_in_box(b: Box, breaks: list[list]):
    """Yield ``(representative point, closed face box)`` for faces inside ``b``."""
    per_axis = []
    for k in range(b.dim):
        br = breaks[k]
        i0 = br.index(b.lo[k])
        i1 = br.index(b.hi[k])
        opts = []
        for i in range(i0, i1 + 1):
            opts.append((br[i], br[i], br[i]))
            if i < i1:
                opts.append(((br[i] + br[i + 1]) * HALF, br[i], br[i + 1]))
        per_axis.append(opts)
    for combo in itertools.product(*per_axis):
        rep = tuple(c[0] for c in combo)
        yield rep, Box(tuple(c[1] for c in combo), tuple(c[2] for c in combo))


def _box_covered(b: Box, others: list[Box]) -> bool:
    near = [o for o in others if o.intersect(b) is not None]
    if not near:
        return False
    breaks = _axis_breaks([b] + near, b.dim)
    for rep, _ in _faces_in_box(b, breaks):
        if not any(o.contains(rep) for o in near):
            return False
    return True


# ---------------------------------------------------------------------------
# membership, transforms
# ---------------------------------------------------------------------------

def _check_dims(regions: Sequence[Region]):
    d = regions[0].dim
    if any(r.dim != d for r in regions):
        raise RegionError("dimension mismatch")


def contains_point(A: Region, p) -> bool:
    if not isinstance(p, tuple):
        p = (p,)
    if A.dim == 1:
        x = p[0]
        ivs = A.intervals()
        if ivs and _in_intervals(ivs, [a for a, _ in ivs], x):
            return True
        return any(r.index_of(x) is not None for r in A.runs)
    return any(b.contains(p) for b in A.boxes)


def translate(A: Region, g) -> Region:
    if not isinstance(g, tuple):
        g = (g,)
    return Region(A.dim, tuple(b.translate(g) for b in A.boxes),
                  tuple(r.translate(g[0]) for r in A.runs))


def reflect(A: Region) -> Region:
    """``-A``."""
    boxes = [Box(tuple(-h for h in b.hi), tuple(-l for l in b.lo)) for b in A.boxes]
    runs = [PointRun(-r.last, r.step, r.count) for r in A.runs]
    return Region.of(A.dim, boxes, runs)


def bounding_box(A: Region) -> Box | None:
    if A.is_empty:
        return None
    if A.dim == 1:
        los = [b.lo[0] for b in A.boxes] + [r.start for r in A.runs]
        his = [b.hi[0] for b in A.boxes] + [r.last for r in A.runs]
        return Box((min(los),), (max(his),))
    lo = tuple(min(b.lo[k] for b in A.boxes) for k in range(A.dim))
    hi = tuple(max(b.hi[k] for b in A.boxes) for k in range(A.dim))
    return Box(lo, hi)


def materialise_runs(A: Region, limit: int = RUN_MATERIALISE_LIMIT) -> Region:
    total = sum(r.count for r in A.runs)
    if total > limit:
        raise RegionError(f"refusing to materialise {total} run points (limit {limit})")
    pts = [Box((x,), (x,)) for r in A.runs for x in r.points()]
    return Region.of(A.dim, list(A.boxes) + pts)


# ---------------------------------------------------------------------------
# measure
# ---------------------------------------------------------------------------

def volume(A: Region):
    """Lebesgue measure of ``A`` (exact; rational for rational corners)."""
    if A.dim == 1:
        return sum((b.hi[0] - b.lo[0] for b in A.boxes), 0)
    fat = [b for b in A.boxes if not b.degenerate]
    if not fat:
        return 0
    breaks = _axis_breaks(fat, A.dim)
    seen = set()
    total = 0
    for b in fat:
        per_axis = []
        for k in range(A.dim):
            br = breaks[k]
            i0, i1 = br.index(b.lo[k]), br.index(b.hi[k])
            per_axis.append(range(i0, i1))
        for cell in itertools.product(*per_axis):
            if cell in seen:
                continue
            seen.add(cell)
            v = 1
            for k, i in enumerate(cell):
                v = (breaks[k][i + 1] - breaks[k][i]) * v
            total = total + v
    return total


# ---------------------------------------------------------------------------
# Minkowski sums
# ---------------------------------------------------------------------------

def _run_plus_interval(r: PointRun, a, b) -> tuple[list[tuple], list[PointRun]]:
    if a == b:
        return [], [r.translate(a)]
    if b - a >= r.step or r.count == 1:
        return [(r.start + a, r.last + b)], []
    if r.count > RUN_MATERIALISE_LIMIT:
        raise RegionError("point run too long to dilate by a short interval")
    return [(x + a, x + b) for x in r.points()], []


def _run_plus_run(r: PointRun, s: PointRun) -> list[PointRun]:
    if r.step == s.step:
        return [PointRun(r.start + s.start, r.step, r.count + s.count - 1)]
    if r.count * s.count > RUN_MATERIALISE_LIMIT:
        raise RegionError("sum of incommensurate point runs too large")
    return [PointRun(x + y, Fraction(1), 1) for x in r.points() for y in s.points()]


def minkowski_sum(A: Region, B: Region) -> Region:
    _check_dims([A, B])
    if A.is_empty or B.is_empty:
        return Region.empty(A.dim)
    if A.dim != 1:
        return Region.of(A.dim, [a + b for a in A.boxes for b in B.boxes])
    ivs: list[tuple] = []
    runs: list[PointRun] = []
    ia, ib = A.intervals(), B.intervals()
    ivs.extend((a0 + b0, a1 + b1) for a0, a1 in ia for b0, b1 in ib)
    for r in A.runs:
        for b0, b1 in ib:
            i, u = _run_plus_interval(r, b0, b1)
            ivs.extend(i)
            runs.extend(u)
        for s in B.runs:
            runs.extend(_run_plus_run(r, s))
    for s in B.runs:
        for a0, a1 in ia:
            i, u = _run_plus_interval(s, a0, a1)
            ivs.extend(i)
            runs.extend(u)
    return Region.of(1, [Box((a,), (b,)) for a, b in ivs], runs)


# ---------------------------------------------------------------------------
# intersection and differences
# ---------------------------------------------------------------------------

def _intersect_intervals(x: list[tuple], y: list[tuple]) -> list[tuple]:
    out = []
    i = j = 0
    while i < len(x) and j < len(y):
        lo = max(x[i][0], y[j][0])
        hi = min(x[i][1], y[j][1])
        if lo <= hi:
            out.append((lo, hi))
        if x[i][1] < y[j][1]:
            i += 1
        else:
            j += 1
    return out


def _run_in_intervals(r: PointRun, ivs: list[tuple]) -> list[PointRun]:
    out = []
    for a, b in ivs:
        if b < r.start or a > r.last:
            continue
        s = r.sub(*r.index_range(a, b))
        if s is not None:
            out.append(s)
    return out


def _aligned_offset(r: PointRun, s: PointRun) -> int | None:
    """Integer ``k`` with ``s.start = r.point(k)`` for runs of equal step."""
    d = (s.start - r.start) / r.step
    if isinstance(d, Coord):
        return None
    d = Fraction(d)
    return int(d) if d.denominator == 1 else None


def _run_cap_run(r: PointRun, s: PointRun) -> list[PointRun]:
    if s.last < r.start or r.last < s.start:
        return []
    if r.step == s.step:
        k = _aligned_offset(r, s)
        if k is None:
            return []
        piece = r.sub(max(0, k), min(r.count - 1, k + s.count - 1))
        return [piece] if piece is not None else []
    small, big = (r, s) if r.count <= s.count else (s, r)
    if small.count > RUN_MATERIALISE_LIMIT:
        raise RegionError("intersection of long incommensurate point runs")
    return [PointRun(x, Fraction(1), 1) for x in small.points() if big.index_of(x) is not None]


def intersection(A: Region, B: Region) -> Region:
    _check_dims([A, B])
    if A.is_empty or B.is_empty:
        return Region.empty(A.dim)
    if A.dim != 1:
        out = []
        for a in A.boxes:
            for b in B.boxes:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return Region.of(A.dim, out)
    ia, ib = A.intervals(), B.intervals()
    ivs = _intersect_intervals(ia, ib)
    runs = []
    for r in A.runs:
        runs.extend(_run_in_intervals(r, ib))
        for s in B.runs:
            runs.extend(_run_cap_run(r, s))
    for s in B.runs:
        runs.extend(_run_in_intervals(s, ia))
    return Region.of(1, [Box((a,), (b,)) for a, b in ivs], runs)


def _run_minus_run(r: PointRun, s: PointRun) -> list[PointRun]:
    if s.last < r.start or r.last < s.start:
        return [r]
    if r.step == s.step:
        k = _aligned_offset(r, s)
        if k is None:
            return [r]
        i0, i1 = max(0, k), min(r.count - 1, k + s.count - 1)
        if i1 < i0:
            return [r]
        return [p for p in (r.sub(0, i0 - 1), r.sub(i1 + 1, r.count - 1)) if p is not None]
    if r.count > RUN_MATERIALISE_LIMIT:
        raise RegionError("difference of long incommensurate point runs")
    return [PointRun(x, Fraction(1), 1) for x in r.points() if s.index_of(x) is None]


def closure_difference(A: Region, B: Region) -> Region:
    """Closure of ``A \\ B``."""
    _check_dims([A, B])
    if A.is_empty or B.is_empty:
        return A
    if A.dim != 1:
        return _closure_difference_faces(A, B)
    ib = B.intervals()
    fat = [(a, b) for a, b in ib if a < b]
    ivs: list[tuple] = []
    for a0, a1 in A.intervals():
        if a0 == a1:
            if not contains_point(B, a0):
                ivs.append((a0, a1))
            continue
        cur = a0
        for b0, b1 in fat:
            if b1 < cur or b0 > a1:
                continue
            if b0 > cur:
                ivs.append((cur, b0))
            if b1 > cur:
                cur = b1
            if cur >= a1:
                break
        if cur < a1:
            ivs.append((cur, a1))
    runs: list[PointRun] = []
    for r in A.runs:
        pieces = _run_minus_intervals(r, ib)
        for s in B.runs:
            pieces = [q for p in pieces for q in _run_minus_run(p, s)]
        runs.extend(pieces)
    return Region.of(1, [Box((a,), (b,)) for a, b in ivs], runs)


def _closure_difference_faces(A: Region, B: Region) -> Region:
    out = []
    for a in A.boxes:
        near = [b for b in B.boxes if b.intersect(a) is not None]
        if not near:
            out.append(a)
            continue
        breaks = _axis_breaks([a] + near, A.dim)
        for rep, face in _faces_in_box(a, breaks):
            if not any(b.contains(rep) for b in near):
                out.append(face)
    return Region.of(A.dim, out)


def sym_diff(A: Region, B: Region) -> Region:
    """A closed region with the measure of ``A delta B``."""
    return union(closure_difference(A, B), closure_difference(B, A))


def frame_for(K: Region, A: Region) -> Box:
    """A box strictly containing ``A + K - K`` (margin one in each axis)."""
    hull = bounding_box(minkowski_sum(minkowski_sum(_hull_region(A), _hull_region(K)),
                                      reflect(_hull_region(K))))
    return Box(tuple(x - 1 for x in hull.lo), tuple(x + 1 for x in hull.hi))


def _hull_region(A: Region) -> Region:
    b = bounding_box(A)
    return Region.of(A.dim, [b])


def k_boundary(K: Region, A: Region) -> Region:
    """``(K + cl A) n (K + cl A^c)`` with the complement clipped to a frame."""
    _check_dims([K, A])
    if A.is_empty or K.is_empty:
        return Region.empty(A.dim)
    frame = Region.of(A.dim, [frame_for(K, A)])
    comp = closure_difference(frame, A)
    return intersection(minkowski_sum(K, A), minkowski_sum(K, comp))


# ---------------------------------------------------------------------------
# connectedness to the origin
# ---------------------------------------------------------------------------

def min_connecting_c(A: Region):
    """Smallest ``c`` such that ``A`` is ``[-c, c]^d``-connected to 0."""
    if A.is_empty:
        return 0
    if A.dim == 1:
        return _min_c_1d(A)
    origin = Box((0,) * A.dim, (0,) * A.dim)
    nodes = [origin] + list(A.boxes)
    best = {0: 0}
    heap = [(0.0, 0, 0)]
    done = set()
    worst = 0
    while heap:
        _, _, i = heapq.heappop(heap)
        if i in done:
            continue
        done.add(i)
        worst = max(worst, best[i])
        for j in range(len(nodes)):
            if j in done:
                continue
            w = max(best[i], nodes[i].sup_gap(nodes[j]))
            if j not in best or w < best[j]:
                best[j] = w
                heapq.heappush(heap, (float(w), j, j))
    return worst


def _min_c_1d(A: Region):
    segs = [(a, b) for a, b in A.intervals()] + [(0, 0)]
    inner_gap = 0
    for r in A.runs:
        if r.count == 1:
            segs.append((r.start, r.start))
            continue
        blocked = any(r.start < b and a < r.last for a, b in A.intervals())
        if blocked or r.count <= 64:
            if r.count > RUN_MATERIALISE_LIMIT:
                raise RegionError("point run too long for connectivity analysis")
            segs.extend((x, x) for x in r.points())
        else:
            segs.append((r.start, r.last))
            inner_gap = max(inner_gap, r.step)
    segs = sort_exact(segs)
    worst = inner_gap
    reach = segs[0][1]
    for a, b in segs[1:]:
        if a > reach:
            worst = max(worst, a - reach)
        if b > reach:
            reach = b
    return worst


def c_connected_to_zero(A: Region, c) -> bool:
    """True iff every point of ``A`` chains to 0 inside ``A u {0}`` with sup-steps <= c."""
    return min_connecting_c(A) <= c


# ---------------------------------------------------------------------------
# scale neighbourhoods
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScaleV:
    """Open sup-norm ball of the given radius around 0."""

    radius: Fraction

    def __post_init__(self):
        if not self.radius > 0:
            raise RegionError("scale radius must be positive")

    def contains(self, v) -> bool:
        if not isinstance(v, tuple):
            v = (v,)
        return all(-self.radius < x < self.radius for x in v)

    def closure(self, dim: int = 1) -> Region:
        return cube(self.radius, dim)

    def doubled(self) -> "ScaleV":
        return ScaleV(self.radius * 2)


# ---------------------------------------------------------------------------
# text and JSON forms
# ---------------------------------------------------------------------------

_BOX_RE = re.compile(r"\[([^\[\]]+)\]")


def parse_region(text: str, alpha: str | None = None) -> Region:
    """Parse ``"[a,b]"``, ``"[a,b]x[c,d]"``, unions joined by ``u``, and
    point runs ``"{lo..hi}"`` / ``"{lo..hi:step}"`` (dimension one)."""
    text = text.strip()
    parts = [p for p in re.split(r"\s*(?:\bu\b|∪|\|)\s*", text) if p]
    boxes: list[Box] = []
    runs: list[PointRun] = []
    dim = None
    for part in parts:
        part = part.strip()
        if part.startswith("{"):
            body = part.strip("{}")
            rng, _, step = body.partition(":")
            lo, hi = rng.split("..")
            lo, hi = parse_number(lo, alpha), parse_number(hi, alpha)
            step = Fraction(step) if step else Fraction(1)
            runs.extend(integer_points(lo, hi, step).runs)
            d = 1
        else:
            factors = _BOX_RE.findall(part)
            if not factors:
                raise RegionError(f"cannot parse region component {part!r}")
            lo, hi = [], []
            for f in factors:
                a, b = f.split(",")
                lo.append(parse_number(a, alpha))
                hi.append(parse_number(b, alpha))
            boxes.append(Box(tuple(lo), tuple(hi)))
            d = len(lo)
        if dim is not None and d != dim:
            raise RegionError("mixed dimensions in region literal")
        dim = d
    if dim is None:
        raise RegionError("empty region literal")
    return Region.of(dim, boxes, runs)


def format_region(A: Region) -> str:
    if A.is_empty:
        return "{}"
    parts = ["x".join(f"[{format_number(a)},{format_number(b)}]" for a, b in zip(bx.lo, bx.hi))
             for bx in A.boxes]
    for r in A.runs:
        if r.count == 1:
            parts.append(f"[{format_number(r.start)},{format_number(r.start)}]")
        else:
            parts.append(f"{{{format_number(r.start)}..{format_number(r.last)}:{format_number(r.step)}}}")
    return " u ".join(parts)


def region_to_json(A: Region) -> dict:
    out = {
        "dim": A.dim,
        "boxes": [{"lo": [number_to_json(x) for x in b.lo], "hi": [number_to_json(x) for x in b.hi]}
                  for b in A.boxes],
    }
    if A.runs:
        out["runs"] = [{"start": number_to_json(r.start), "step": number_to_json(r.step), "count": r.count}
                       for r in A.runs]
    return out


def region_from_json(obj: dict) -> Region:
    boxes = [Box(tuple(parse_number(x) for x in b["lo"]), tuple(parse_number(x) for x in b["hi"]))
             for b in obj["boxes"]]
    runs = [PointRun(parse_number(r["start"]), Fraction(parse_number(r["step"])), int(r["count"]))
            for r in obj.get("runs", [])]
    return Region.of(int(obj["dim"]), boxes, runs)
