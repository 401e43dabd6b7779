"""Delone set oracles answering bounded-window queries exactly.

Every oracle represents an infinite Delone set ``omega`` and only ever reports
``omega n A`` for a bounded region ``A``.  Points are returned as tuples (one
entry per coordinate), sorted lexicographically and without duplicates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    Number,
    ceil_num,
    floor_num,
    get_alpha,
    make,
    number_to_json,
    sort_exact,
)
from .geometry import Box, Region, RegionError, bounding_box, contains_point, point_set

Point = tuple
HALF = Fraction(1, 2)


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class SampleWindow:
    """Centers used to stand in for all of ``omega``.

    ``S`` is a region whose points of ``omega`` are the centers, unless
    ``centers`` lists them explicitly.  ``exhaustive`` records that a
    structural argument shows nothing is lost by the truncation.
    """

    S: Region | None
    exhaustive: bool
    centers: tuple | None = None
    note: str = ""


@dataclass(frozen=True)
class DeloneReport:
    window: Region
    discrete_ok: bool
    min_gap: Number | None
    dense_ok: bool
    max_gap: Number | None


def _div_floor(x: Number, y: Number) -> int:
    """``floor(x / y)`` for ``y > 0`` using exact comparisons only."""
    k = math.floor(float(x) / float(y))
    while k * y > x:
        k -= 1
    while (k + 1) * y <= x:
        k += 1
    return k


def _div_ceil(x: Number, y: Number) -> int:
    k = _div_floor(x, y)
    return k if k * y == x else k + 1


class PointSetOracle:
    """Base class: subclasses implement ``_interval`` (d = 1) or ``_box``."""

    kind = "custom"
    dim = 1
    packing_radius: Fraction
    covering_radius: Fraction

    # -- subclass hooks -----------------------------------------------------
    def _interval(self, lo: Number, hi: Number) -> list:
        raise NotImplementedError

    def _box(self, b: Box) -> list[Point]:
        if self.dim != 1:
            raise NotImplementedError
        return [(x,) for x in self._interval(b.lo[0], b.hi[0])]

    def params(self) -> dict:
        return {}

    def sufficient_sample(self, A: Region) -> SampleWindow | None:
        """Centers that realise every patch ``(omega - g) n A``, if known."""
        return None

    def structural_count(self, A: Region) -> int | None:
        """``|Pat(A)|`` from a closed-form argument, if one is available."""
        return None

    # -- queries ------------------------------------------------------------
    def query(self, A: Region) -> list[Point]:
        if A.dim != self.dim:
            raise RegionError("query region has the wrong dimension")
        pts: set = set()
        for b in A.boxes:
            pts.update(self._box(b))
        for r in A.runs:
            for x in self._interval(r.start, r.last):
                if r.index_of(x) is not None:
                    pts.add((x,))
        return sort_exact(list(pts))

    def contains(self, p: Point) -> bool:
        return tuple(p) in set(self._box(Box(tuple(p), tuple(p))))

    def describe(self) -> dict:
        return {"kind": self.kind, "params": self.params()}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.params()})"


# ---------------------------------------------------------------------------
# simple generators
# ---------------------------------------------------------------------------

class Lattice(PointSetOracle):
    kind = "lattice"

    def __init__(self, dim: int = 1, spacing=1):
        spacing = Fraction(spacing)
        if spacing <= 0:
            raise GeneratorError("lattice spacing must be positive")
        self.dim = dim
        self.spacing = spacing
        self.packing_radius = spacing / 2
        self.covering_radius = spacing / 2

    def params(self):
        return {"dim": self.dim, "spacing": number_to_json(self.spacing)}

    def _axis(self, lo, hi) -> list:
        s = self.spacing
        return [k * s for k in range(_div_ceil(lo, s), _div_floor(hi, s) + 1)]

    def _interval(self, lo, hi):
        return self._axis(lo, hi)

    def _box(self, b: Box):
        axes = [self._axis(lo, hi) for lo, hi in zip(b.lo, b.hi)]
        return [tuple(p) for p in itertools.product(*axes)]

    def sufficient_sample(self, A):
        origin = point_set([(0,) * self.dim], self.dim)
        return SampleWindow(origin, True, note="lattice: all centred views coincide")

    def structural_count(self, A):
        return 1


class ShiftedUnion(PointSetOracle):
    """``Z u (Z + eps)`` with ``0 < eps < 1/4``."""

    kind = "shifted_union"

    def __init__(self, eps=Fraction(1, 8)):
        eps = Fraction(eps)
        if not 0 < eps < Fraction(1, 4):
            raise GeneratorError("shifted_union needs 0 < eps < 1/4")
        self.eps = eps
        self.packing_radius = eps / 2
        self.covering_radius = (1 - eps) / 2

    def params(self):
        return {"eps": number_to_json(self.eps)}

    def _interval(self, lo, hi):
        ints = range(ceil_num(lo), floor_num(hi) + 1)
        shifted = range(ceil_num(lo - self.eps), floor_num(hi - self.eps) + 1)
        pts = list(ints) + [k + self.eps for k in shifted]
        return sorted(set(pts))

    def sufficient_sample(self, A):
        return SampleWindow(point_set([0, self.eps]), True,
                            note="integer translations fix omega; two center classes")


class Punctured(PointSetOracle):
    """``Z \\ {0}``."""

    kind = "punctured"
    packing_radius = Fraction(1, 2)
    covering_radius = Fraction(1)

    def _interval(self, lo, hi):
        return [k for k in range(ceil_num(lo), floor_num(hi) + 1) if k != 0]

    def sufficient_sample(self, A):
        hull = bounding_box(A)
        if hull is None:
            return SampleWindow(point_set([1]), True)
        lo, hi = hull.lo[0], hull.hi[0]
        S = Region.of(1, [Box((-max(ceil_num(hi), 0) - 2,), (max(-floor_num(lo), 0) + 2,))])
        return SampleWindow(S, True, note="only centers g with -g in A change the patch")


class HalflineMix(PointSetOracle):
    """``(-N_0) u alpha N_0`` for an irrational ``0 < alpha < 1``."""

    kind = "halfline_mix"

    def __init__(self, alpha: str = "sqrt2m1"):
        a = get_alpha(alpha)
        self.alpha_name = alpha
        self.alpha = make(0, 1, alpha)
        if not 0 < self.alpha < 1:
            raise GeneratorError("halfline_mix needs 0 < alpha < 1")
        # a rational lower bound for alpha/2 keeps the packing radius exact
        lo, _ = a.bracket(30)
        self.packing_radius = Fraction(math.floor(lo * 2**20), 2**21)
        self.covering_radius = Fraction(1, 2)

    def params(self):
        return {"alpha": self.alpha_name}

    def _interval(self, lo, hi):
        neg = [k for k in range(ceil_num(lo), min(floor_num(hi), 0) + 1)]
        k0 = max(0, _div_ceil(lo, self.alpha))
        k1 = _div_floor(hi, self.alpha)
        pos = [k * self.alpha for k in range(max(k0, 1), k1 + 1)]
        return neg + pos

    def sufficient_sample(self, A):
        hull = bounding_box(A)
        if hull is None:
            return SampleWindow(point_set([0]), True)
        lo, hi = hull.lo[0], hull.hi[0]
        S = Region.of(1, [Box((-max(ceil_num(hi), 0) - 2,), (max(-floor_num(lo), 0) + 2,))])
        return SampleWindow(
            S, True,
            note="centers -k with k > max(A) and j*alpha > -min(A) repeat earlier patches")


# ---------------------------------------------------------------------------
# the universal word set
# ---------------------------------------------------------------------------

def block_start(length: int) -> int:
    """Index in the binary Champernowne sequence where words of ``length`` begin.

    The sequence (indexed from 1) lists all words of length 1, then all words
    of length 2, and so on, each block in increasing binary order.
    """
    return (length - 2) * (1 << length) + 3


def word_position(word: str) -> int:
    """Start index of the canonical occurrence of ``word`` (its own block slot)."""
    return block_start(len(word)) + int(word, 2) * len(word)


def champernowne_bit(n: int) -> int:
    if n < 1:
        raise ValueError("the word sequence is indexed from 1")
    length = 1
    while block_start(length + 1) <= n:
        length += 1
    value, offset = divmod(n - block_start(length), length)
    return (value >> (length - 1 - offset)) & 1


class WordSet(PointSetOracle):
    """``{n >= 1 : xi_n = 1} u (Z + 1/2)`` for the binary Champernowne ``xi``."""

    kind = "word_set"
    packing_radius = Fraction(1, 4)
    covering_radius = Fraction(1, 2)

    def __init__(self, scheme: str = "binary-champernowne"):
        if scheme != "binary-champernowne":
            raise GeneratorError(f"unknown word enumeration scheme {scheme!r}")
        self.scheme = scheme

    def params(self):
        return {"scheme": self.scheme}

    def _interval(self, lo, hi):
        ints = [k for k in range(max(1, ceil_num(lo)), floor_num(hi) + 1) if champernowne_bit(k)]
        halves = [k + Fraction(1, 2) for k in range(ceil_num(lo - Fraction(1, 2)),
                                                      floor_num(hi - Fraction(1, 2)) + 1)]
        return sorted(ints + halves)

    @staticmethod
    def _lattice_points(A: Region, offset: Fraction) -> list:
        pts = Lattice(1, 1).query(A if offset == 0 else _shift(A, -offset))
        return [p[0] + offset for p in pts]

    def sufficient_sample(self, A):
        """One center per word occurrence in the canonical Champernowne block.

        A center in the integer part sees ``(Z+1/2) n A`` in full and an
        arbitrary bit pattern on ``Z n A`` with the bit at offset 0 equal to 1.
        A half-integer center sees ``Z n A`` in full and an arbitrary pattern on
        ``(Z+1/2) n A``.  Running over every word of the covering length
        therefore realises every patch.
        """
        ints = [int(x) for x in self._lattice_points(A, Fraction(0))]
        halves = self._lattice_points(A, Fraction(1, 2))
        centers = []
        a_lo = min(ints + [0])
        a_hi = max(ints + [0])
        length = a_hi - a_lo + 1
        zero_bit = length - 1 - (0 - a_lo)
        for v in range(1 << length):
            if (v >> zero_bit) & 1:
                centers.append(block_start(length) + v * length - a_lo)
        if halves:
            b_lo = halves[0]
            length = int(halves[-1] - b_lo) + 1
            for v in range(1 << length):
                centers.append(block_start(length) + v * length - b_lo)
        else:
            centers.append(Fraction(1, 2))
        centers = tuple((c,) for c in sort_exact(list(dict.fromkeys(centers))))
        return SampleWindow(None, True, centers=centers,
                            note="canonical word occurrences realise every bit pattern")

    def structural_count(self, A):
        """``2^(|Z n A| - [0 in A]) + 2^|(Z+1/2) n A| - 1``."""
        n_int = len(self._lattice_points(A, Fraction(0)))
        n_half = len(self._lattice_points(A, Fraction(1, 2)))
        zero = 1 if contains_point(A, 0) else 0
        return (1 << (n_int - zero)) + (1 << n_half) - 1


def _shift(A: Region, g) -> Region:
    from .geometry import translate

    return translate(A, g)


# ---------------------------------------------------------------------------
# cut and project
# ---------------------------------------------------------------------------

class CutProject(PointSetOracle):
    """Model set ``{m + n*alpha : m + n*alpha' in W}`` with ``alpha'`` the
    algebraic conjugate of ``alpha`` and ``W`` a bounded interval."""

    kind = "cut_project"

    def __init__(self, alpha: str = "golden", window=(Fraction(1, 10), None)):
        self.alpha_name = alpha
        a = get_alpha(alpha)
        self.alpha = make(0, 1, alpha)
        ca, cb = a.conjugate
        self.conj = make(ca, cb, alpha)
        w0, w1 = window
        if w1 is None:
            w1 = w0 + 1 + self.alpha
        if not w0 < w1:
            if w0 == w1:
                pass
            else:
                raise GeneratorError("empty cut-and-project window")
        self.window = (w0, w1)
        self._diff = self.alpha - self.conj
        self.packing_radius, self.covering_radius = self._scan_radii()

    def params(self):
        return {"alpha": self.alpha_name,
                "window": [number_to_json(self.window[0]), number_to_json(self.window[1])]}

    def _interval(self, lo, hi):
        w0, w1 = self.window
        d = float(self._diff)
        n_lo = math.floor((float(lo) - float(w1)) / d) - 1
        n_hi = math.ceil((float(hi) - float(w0)) / d) + 1
        out = []
        for n in range(n_lo, n_hi + 1):
            m_lo = max(ceil_num(lo - n * self.alpha), ceil_num(w0 - n * self.conj))
            m_hi = min(floor_num(hi - n * self.alpha), floor_num(w1 - n * self.conj))
            out.extend(m + n * self.alpha for m in range(m_lo, m_hi + 1))
        return sort_exact(out)

    def _scan_radii(self):
        pts = self._interval(-50, 50)
        if len(pts) < 2:
            return Fraction(1), Fraction(1)
        gaps = [float(b - a) for a, b in zip(pts, pts[1:])]
        r = Fraction(math.floor(min(gaps) / 2 * 1000), 1000)
        R = Fraction(math.ceil(max(gaps) / 2 * 1000), 1000)
        return max(r, Fraction(1, 1000)), R


# ---------------------------------------------------------------------------
# registry and validation
# ---------------------------------------------------------------------------

GENERATORS = {
    "lattice": Lattice,
    "shifted_union": ShiftedUnion,
    "halfline_mix": HalflineMix,
    "word_set": WordSet,
    "punctured": Punctured,
    "cut_project": CutProject,
}


def make_generator(kind: str, params: dict | None = None) -> PointSetOracle:
    """Build an oracle from ``{kind, params}`` (dashes and underscores agree)."""
    from .exact import parse_number

    key = kind.replace("-", "_")
    if key not in GENERATORS:
        raise GeneratorError(f"unknown generator {kind!r}; known: {sorted(GENERATORS)}")
    params = dict(params or {})
    if key == "lattice":
        return Lattice(int(params.get("dim", 1)), parse_number(str(params.get("spacing", 1))))
    if key == "shifted_union":
        return ShiftedUnion(parse_number(str(params.get("eps", "1/8"))))
    if key == "halfline_mix":
        return HalflineMix(params.get("alpha", "sqrt2m1"))
    if key == "word_set":
        return WordSet(params.get("scheme", "binary-champernowne"))
    if key == "punctured":
        return Punctured()
    alpha = params.get("alpha", "golden")
    window = params.get("window")
    if window is None:
        return CutProject(alpha)
    return CutProject(alpha, tuple(parse_number(str(w), alpha) for w in window))


def verify_delone(omega: PointSetOracle, window: Region) -> DeloneReport:
    """Window-restricted check of the claimed packing and covering radii.

    ``min_gap`` is the least sup-distance between two points in the window;
    ``max_gap`` is the largest sup-distance from a point of the window to the
    nearest point of ``omega`` (evaluated exactly in dimension one, on the
    breakpoint grid of the point set in higher dimension).
    """
    pts = omega.query(window)
    hull = bounding_box(window)
    if omega.dim == 1:
        xs = [p[0] for p in pts]
        min_gap = min((b - a for a, b in zip(xs, xs[1:])), default=None)
        max_gap = _max_gap_line(omega, hull)
    else:
        min_gap = None
        for p, q in itertools.combinations(pts, 2):
            d = max(abs(a - b) for a, b in zip(p, q))
            min_gap = d if min_gap is None or d < min_gap else min_gap
        max_gap = _max_gap_grid(pts, hull) if pts else None
    discrete_ok = min_gap is None or min_gap >= 2 * omega.packing_radius
    dense_ok = max_gap is not None and max_gap <= omega.covering_radius
    return DeloneReport(window, discrete_ok, min_gap, dense_ok, max_gap)


def _max_gap_line(omega: PointSetOracle, hull: Box):
    """Largest distance from a point of ``hull`` to the nearest point of omega.

    Points just outside the window count as neighbours; the search widens the
    query until a point is found on each side (or gives up after a bound).
    """
    lo, hi = hull.lo[0], hull.hi[0]
    margin = max(Fraction(1), 2 * omega.covering_radius)
    for _ in range(8):
        xs = omega._interval(lo - margin, hi + margin)
        if xs and xs[0] <= lo and xs[-1] >= hi:
            break
        margin *= 4
    if not xs:
        return None
    worst = max(0, xs[0] - lo, hi - xs[-1])
    for a, b in zip(xs, xs[1:]):
        if b < lo or a > hi:
            continue
        x = min(max((a + b) * HALF, lo), hi)
        worst = max(worst, min(x - a, b - x))
    return worst


def _max_gap_grid(pts: list, hull: Box):
    axes = []
    for k in range(hull.dim):
        vals = sort_exact(list({p[k] for p in pts} | {hull.lo[k], hull.hi[k]}))
        mids = [(a + b) * HALF for a, b in zip(vals, vals[1:])]
        axes.append([v for v in sort_exact(vals + mids) if hull.lo[k] <= v <= hull.hi[k]])
    worst = 0
    for q in itertools.product(*axes):
        d = min(max(abs(a - b) for a, b in zip(p, q)) for p in pts)
        worst = max(worst, d)
    return worst
