"""Patches, closeness relations and minimal patch representations.

A *view* of ``omega`` from a center ``g`` through a window ``W`` is the sorted
tuple ``(omega - g) n W``.  Patches are views through the window ``A``; the
scale-``V`` machinery looks through ``A + cl V`` so that the relation
``~(A, V)`` can be decided from the view alone.
"""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import setcover
from .exact import Coord, sort_exact
from .geometry import (
    Box,
    Region,
    ScaleV,
    closure_difference,
    contains_point,
    cube,
    minkowski_sum,
    translate,
    volume,
)
from .pointsets import PointSetOracle, SampleWindow


class CapExceeded(RuntimeError):
    """A configured size limit was hit; partial results may be attached."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


DEFAULT_CENTER_CAP = 2_000_000


@dataclass(frozen=True)
class Patch:
    anchor: tuple
    points: tuple
    window: Region


@dataclass
class PatchEnumeration:
    patches: list[Patch]
    exhaustive: bool
    centers_scanned: int

    @property
    def count(self) -> int:
        return len(self.patches)


@dataclass
class CoverResult:
    size: int
    witnesses: list
    method: str
    elements_covered: int
    candidates: int
    exhaustive: bool
    certificate: str
    flags: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# views
# ---------------------------------------------------------------------------

def _vec(g, dim: int) -> tuple:
    if isinstance(g, tuple):
        return g
    return (g,) if dim == 1 else tuple(g)


def _sub(p: tuple, g: tuple) -> tuple:
    return tuple(a - b for a, b in zip(p, g))


def _add(p: tuple, g: tuple) -> tuple:
    return tuple(a + b for a, b in zip(p, g))


def view(omega: PointSetOracle, g, W: Region) -> tuple:
    """``(omega - g) n W`` as a sorted tuple of points."""
    g = _vec(g, omega.dim)
    return tuple(_sub(p, g) for p in omega.query(translate(W, g)))


def sample_centers(omega: PointSetOracle, sample: SampleWindow) -> list[tuple]:
    if sample.centers is not None:
        return list(sample.centers)
    if sample.S is None:
        raise ValueError("sample window has neither a region nor explicit centers")
    return omega.query(sample.S)


def resolve_sample(omega: PointSetOracle, W: Region, sample: SampleWindow | None) -> SampleWindow:
    """``sample`` itself, or the generator's sufficient sample for window ``W``."""
    if sample is not None:
        return sample
    auto = omega.sufficient_sample(W)
    if auto is None:
        raise ValueError(f"{omega.kind} has no automatic sample window; pass one explicitly")
    return auto


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_patches(omega: PointSetOracle, A: Region, sample: SampleWindow | None = None,
                      cap: int = DEFAULT_CENTER_CAP) -> PatchEnumeration:
    """Distinct patches ``(omega - g) n A`` over the centers of ``sample``."""
    sample = resolve_sample(omega, A, sample)
    centers = sample_centers(omega, sample)
    if len(centers) > cap:
        raise CapExceeded(f"{len(centers)} centers exceed the cap {cap}")
    seen: dict[tuple, tuple] = {}
    for g in centers:
        pts = view(omega, g, A)
        if pts not in seen:
            seen[pts] = g
    patches = [Patch(g, pts, A) for pts, g in seen.items()]
    return PatchEnumeration(patches, sample.exhaustive, len(centers))


def patch_count(omega: PointSetOracle, A: Region, method: str = "auto",
                sample: SampleWindow | None = None, cap: int = DEFAULT_CENTER_CAP) -> tuple[int, str]:
    """``|Pat(A)|`` by enumeration or by the generator's closed form.

    ``method`` is ``enumerate``, ``structural`` or ``auto`` (closed form when
    the generator has one, otherwise enumeration).  Returns the count and the
    method actually used.
    """
    if method in ("auto", "structural"):
        c = omega.structural_count(A)
        if c is not None:
            return c, "structural"
        if method == "structural":
            raise ValueError(f"{omega.kind} has no closed-form patch count")
    return enumerate_patches(omega, A, sample, cap).count, "enumerate"


# ---------------------------------------------------------------------------
# closeness relations
# ---------------------------------------------------------------------------

def _near(x: tuple, pts: Sequence[tuple], r) -> bool:
    """Some point of sorted ``pts`` lies strictly within sup-distance ``r`` of ``x``."""
    i = bisect.bisect_left(pts, (x[0] - r,))
    while i < len(pts) and pts[i][0] < x[0] + r:
        p = pts[i]
        if all(abs(a - b) < r for a, b in zip(p, x)):
            return True
        i += 1
    return False


def _covered(xs: Iterable[tuple], pts: Sequence[tuple], r) -> bool:
    return all(_near(x, pts, r) for x in xs)


def approx_close(xi: Sequence, zeta: Sequence, A: Region, V: ScaleV) -> bool:
    """``xi n A`` within ``zeta + V`` and ``zeta n A`` within ``xi + V`` (V open)."""
    xi = sort_exact([_vec(p, A.dim) for p in xi])
    zeta = sort_exact([_vec(p, A.dim) for p in zeta])
    xa = [p for p in xi if contains_point(A, p)]
    za = [p for p in zeta if contains_point(A, p)]
    return _covered(xa, zeta, V.radius) and _covered(za, xi, V.radius)


def _free_volume(base: Box, blockers: list[Box]) -> bool:
    """True iff ``base`` minus the closed ``blockers`` has positive volume."""
    if base.degenerate:
        return False
    dim = base.dim
    rest = closure_difference(Region.of(dim, [base]), Region.of(dim, blockers)) if blockers \
        else Region.of(dim, [base])
    return volume(rest) > 0


def _k_minus(K: Region, d: tuple) -> list[Box]:
    return [b.translate(tuple(-x for x in d)) for b in K.boxes]


def match_close(xi: Sequence, zeta: Sequence, K: Region, V: ScaleV) -> bool:
    """Exists ``x, z`` in open ``V`` with ``(xi + x) n K = (zeta + z) n K``.

    Writing ``t = z - x``, the condition says ``K - x`` avoids
    ``xi delta (zeta + t)`` for some ``x`` in ``V n (V - t)``.  Matching a
    point forces ``t`` to be a difference ``xi_i - zeta_j`` with
    ``|t| < 2r``; the remaining case is that both sides see nothing in ``K``.
    Each candidate reduces to a positive-volume test.
    """
    dim = K.dim
    r = V.radius
    xi = [_vec(p, dim) for p in xi]
    zeta = [_vec(p, dim) for p in zeta]
    vbox = Box((-r,) * dim, (r,) * dim)
    empty_x = _free_volume(vbox, [b for p in xi for b in _k_minus(K, p)])
    if empty_x:
        empty_z = _free_volume(vbox, [b for p in zeta for b in _k_minus(K, p)])
        if empty_z:
            return True
    shifts = set()
    for p in xi:
        for q in zeta:
            t = _sub(p, q)
            if all(-2 * r < c < 2 * r for c in t):
                shifts.add(t)
    xset = set(xi)
    for t in sort_exact(list(shifts)):
        moved = {_add(q, t) for q in zeta}
        diff = xset.symmetric_difference(moved)
        base = vbox.intersect(vbox.translate(tuple(-c for c in t)))
        if base is None:
            continue
        if _free_volume(base, [b for d in diff for b in _k_minus(K, d)]):
            return True
    return False


def rubber_close_bowen(xi: Sequence, zeta: Sequence, K: Region, shifts: Iterable, V: ScaleV) -> bool:
    """``xi + a`` and ``zeta + a`` are ``~(K, V)``-close for every shift ``a``."""
    dim = K.dim
    for a in shifts:
        a = _vec(a, dim)
        if not approx_close([_add(_vec(p, dim), a) for p in xi],
                            [_add(_vec(p, dim), a) for p in zeta], K, V):
            return False
    return True


def match_close_bowen(xi: Sequence, zeta: Sequence, K: Region, shifts: Iterable, V: ScaleV) -> bool:
    dim = K.dim
    for a in shifts:
        a = _vec(a, dim)
        if not match_close([_add(_vec(p, dim), a) for p in xi],
                           [_add(_vec(p, dim), a) for p in zeta], K, V):
            return False
    return True


# ---------------------------------------------------------------------------
# scale-V representations
# ---------------------------------------------------------------------------

class _ViewTable:
    """Distinct views through ``A + cl V`` with their parts inside ``A``.

    When every coordinate is rational the points are rescaled to integers so
    that the quadratic number of closeness tests runs on machine integers.
    """

    def __init__(self, views: list[tuple], A: Region, radius):
        self.views = views
        inside = [tuple(p for p in v if contains_point(A, p)) for v in views]
        scale = self._common_scale(views, radius)
        if scale is None:
            self.full = [list(v) for v in views]
            self.inner = [list(v) for v in inside]
            self.r = radius
        else:
            conv = lambda p: tuple(int(c * scale) for c in p)  # noqa: E731
            self.full = [sorted(conv(p) for p in v) for v in views]
            self.inner = [[conv(p) for p in v] for v in inside]
            self.r = int(radius * scale)

    @staticmethod
    def _common_scale(views, radius):
        den = Fraction(radius).denominator
        for v in views:
            for p in v:
                for c in p:
                    if isinstance(c, Coord):
                        return None
                    d = Fraction(c).denominator
                    den = den * d // math.gcd(den, d)
        return den

    def close(self, i: int, j: int) -> bool:
        r = self.r
        return _covered(self.inner[i], self.full[j], r) and _covered(self.inner[j], self.full[i], r)


def _dedupe_views(omega: PointSetOracle, points: list[tuple], W: Region):
    """Map each point to the index of its (deduplicated) view through ``W``."""
    index: dict[tuple, int] = {}
    owner: list[tuple] = []
    of_point = []
    for g in points:
        v = view(omega, g, W)
        k = index.get(v)
        if k is None:
            k = index[v] = len(owner)
            owner.append(g)
        of_point.append(k)
    return list(index), owner, of_point


def _solve_cover(table: _ViewTable, cand_idx: list[int], elem_idx: list[int], method: str,
                 node_limit: int | None):
    elems = sorted(set(elem_idx))
    pos = {e: k for k, e in enumerate(elems)}
    cands = sorted(set(cand_idx))
    cache: dict[tuple[int, int], bool] = {}

    def close(a: int, b: int) -> bool:
        if a == b:
            return True
        key = (a, b) if a < b else (b, a)
        if key not in cache:
            cache[key] = table.close(a, b)
        return cache[key]

    masks = []
    for c in cands:
        m = 0
        for e in elems:
            if close(c, e):
                m |= 1 << pos[e]
        masks.append(m)
    sol = setcover.solve(masks, len(elems), method, node_limit)
    return [cands[k] for k in sol.chosen], sol, len(elems), len(cands)


def pat(omega: PointSetOracle, A: Region, V: ScaleV, sample: SampleWindow | None = None,
        method: str = "exact", node_limit: int | None = None,
        cap: int = DEFAULT_CENTER_CAP) -> CoverResult:
    """Least size of a centred ``A``-patch representation of scale ``V``.

    Elements and candidates are both the centers in ``omega n S``; centers
    with identical views through ``A + cl V`` are merged first.
    """
    W = minkowski_sum(A, V.closure(A.dim))
    sample = resolve_sample(omega, W, sample)
    centers = sample_centers(omega, sample)
    if not centers:
        raise ValueError("the sample window contains no point of omega")
    if len(centers) > cap:
        raise CapExceeded(f"{len(centers)} centers exceed the cap {cap}")
    views, owner, _ = _dedupe_views(omega, centers, W)
    table = _ViewTable(views, A, V.radius)
    idx = list(range(len(views)))
    chosen, sol, n_el, n_c = _solve_cover(table, idx, idx, method, node_limit)
    cert = "branch and bound closed the gap" if sol.optimal else "upper bound only"
    return CoverResult(len(chosen), [owner[k] for k in chosen], method, n_el, n_c,
                       sample.exhaustive, cert)


def net_points(radius, delta, dim: int = 1) -> list[tuple]:
    """Evenly spaced points of ``[-radius, radius]^d`` whose open ``delta``-boxes cover it."""
    k = math.floor(Fraction(radius) / Fraction(delta)) + 2
    step = Fraction(2 * radius, k - 1)
    axis = [-radius + i * step for i in range(k)]
    return [tuple(p) for p in itertools.product(axis, repeat=dim)]


def grid_points(radius, step, dim: int = 1) -> list[tuple]:
    k = math.floor(Fraction(2 * radius) / Fraction(step))
    axis = [-radius + i * Fraction(step) for i in range(k + 1)]
    if axis[-1] != radius:
        axis.append(Fraction(radius))
    return [tuple(p) for p in itertools.product(axis, repeat=dim)]


def npat(omega: PointSetOracle, A: Region, V: ScaleV, sample: SampleWindow | None = None,
         method: str = "exact", net_radius=None, element_step=None, node_limit: int | None = None,
         cap: int = DEFAULT_CENTER_CAP) -> CoverResult:
    """Least size of a non-centred ``A``-patch representation of scale ``V``.

    Every translate ``g`` is ``w + t`` with ``w`` in omega and ``t`` in the
    covering box ``K = [-R, R]^d``.  Elements are ``w + t`` for sample centers
    ``w`` and ``t`` on a grid of step ``element_step`` (default ``r/2``) in
    ``K``; candidates are ``w + t`` with ``t`` in a finite net of ``K`` at
    scale ``net_radius`` (default ``r``), together with the elements.
    """
    dim = A.dim
    R = omega.covering_radius
    r = V.radius
    net_r = Fraction(net_radius) if net_radius is not None else r
    step = Fraction(element_step) if element_step is not None else r / 2
    Kbox = cube(R, dim)
    W = minkowski_sum(A, V.closure(dim))
    sample = resolve_sample(omega, minkowski_sum(W, Kbox), sample)
    centers = sample_centers(omega, sample)
    if not centers:
        raise ValueError("the sample window contains no point of omega")
    net = net_points(R, net_r, dim)
    grid = grid_points(R, step, dim)
    if len(centers) * (len(net) + len(grid)) > cap:
        raise CapExceeded("non-centred instance exceeds the cap")
    elem_pts = [_add(w, t) for w in centers for t in grid]
    cand_pts = [_add(w, t) for w in centers for t in net]
    views, owner, of_point = _dedupe_views(omega, elem_pts + cand_pts, W)
    table = _ViewTable(views, A, r)
    n_el = len(elem_pts)
    elem_idx = of_point[:n_el]
    cand_idx = of_point
    chosen, sol, n_e, n_c = _solve_cover(table, cand_idx, elem_idx, method, node_limit)
    cert = "branch and bound closed the gap" if sol.optimal else "upper bound only"
    return CoverResult(len(chosen), [owner[k] for k in chosen], method, n_e, n_c,
                       sample.exhaustive, cert, ["element-net discretized"])


# ---------------------------------------------------------------------------
# separated sets
# ---------------------------------------------------------------------------

def max_independent(n: int, adjacent: Callable[[int, int], bool], exact: bool) -> list[int]:
    """Pairwise non-adjacent indices: greedy in index order, or exact search."""
    adj = [[j for j in range(n) if j != i and adjacent(i, j)] for i in range(n)]
    if not exact:
        chosen: list[int] = []
        blocked = set()
        for i in range(n):
            if i not in blocked:
                chosen.append(i)
                blocked.update(adj[i])
        return chosen
    masks = [sum(1 << j for j in adj[i]) for i in range(n)]
    best: list[int] = []

    def grow(avail: int, chosen: list[int]):
        nonlocal best
        if len(chosen) + bin(avail).count("1") <= len(best):
            return
        if not avail:
            best = list(chosen)
            return
        low = avail & -avail
        i = low.bit_length() - 1
        chosen.append(i)
        grow(avail & ~low & ~masks[i], chosen)
        chosen.pop()
        grow(avail & ~low, chosen)

    grow((1 << n) - 1, [])
    return sorted(best)


def separated_set(omega: PointSetOracle, K: Region, V: ScaleV, centers: Sequence,
                  relation: str = "rubber", shifts: Sequence | None = None,
                  exact: bool | None = None) -> tuple[int, list]:
    """A set of centers pairwise *not* close, and its size (a lower bound for sep).

    ``relation`` is ``rubber`` (``~(K, V)``) or ``matching``.  With ``shifts``
    the Bowen version is used: closeness must hold for ``xi + a`` and
    ``zeta + a`` at every listed shift ``a``.  Exact search is used for at most
    20 centers unless ``exact`` says otherwise.
    """
    dim = K.dim
    centers = [_vec(c, dim) for c in centers]
    shifts = [_vec(a, dim) for a in (shifts if shifts is not None else [(0,) * dim])]
    reach = Region.of(dim, [b for a in shifts for b in translate(K, tuple(-x for x in a)).boxes])
    pad = cube(2 * V.radius, dim)
    W = minkowski_sum(reach, pad)
    views = [view(omega, c, W) for c in centers]
    rel = rubber_close_bowen if relation == "rubber" else match_close_bowen
    if relation not in ("rubber", "matching"):
        raise ValueError(f"unknown relation {relation!r}")
    cache: dict = {}

    def adjacent(i: int, j: int) -> bool:
        key = (min(i, j), max(i, j))
        if key not in cache:
            cache[key] = rel(views[i], views[j], K, shifts, V)
        return cache[key]

    use_exact = len(centers) <= 20 if exact is None else exact
    chosen = max_independent(len(centers), adjacent, use_exact)
    return len(chosen), [centers[i] for i in chosen]
