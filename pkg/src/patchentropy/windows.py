"""Window sequences ``(A_n)`` and their averaging diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import exp_upper_dyadic, ceil_exp, floor_exp, parse_number
from .geometry import (
    Box,
    PointRun,
    Region,
    cube,
    interval,
    k_boundary,
    min_connecting_c,
    minkowski_sum,
    parse_region,
    sym_diff,
    translate,
    volume,
)


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class WindowSequence:
    kind: str
    params: dict
    generator: Callable[[int], Region] = field(compare=False, repr=False)

    def __call__(self, n: int) -> Region:
        return self.generator(n)


def _frac(x, name: str) -> Fraction:
    try:
        return Fraction(parse_number(str(x)))
    except (TypeError, ValueError) as exc:
        raise SequenceError(f"parameter {name} must be rational, got {x!r}") from exc


def comb_teeth(n: int) -> list[Box]:
    """``[0, n]`` minus open balls of radius ``1/(n+3)`` around ``Z/2``."""
    r = Fraction(1, n + 3)
    half = Fraction(1, 2)
    return [Box((j * half + r,), ((j + 1) * half - r,)) for j in range(2 * n)]


def shift_for(kappa: Fraction, n: int, rounding: str = "upper"):
    """The translation ``e^(kappa n)`` realised exactly.

    ``upper`` is the least dyadic ``m / 2^32`` above ``e^(kappa n)`` (equal to
    1 when ``kappa n = 0``); ``ceil`` is the integer ceiling.
    """
    x = kappa * n
    if rounding == "ceil":
        return ceil_exp(x)
    if rounding == "upper":
        return exp_upper_dyadic(x)
    raise SequenceError(f"unknown rounding {rounding!r}")


def _intervals_0n(p):
    scale = _frac(p.get("scale", 1), "scale")
    return lambda n: interval(0, scale * n)


def _centered_boxes(p):
    dim = int(p.get("dim", 1))
    return lambda n: cube(Fraction(n), dim)


def _shifted_intervals(p):
    kappa = _frac(p.get("kappa", 0), "kappa")
    if kappa < 0:
        raise SequenceError("kappa must be nonnegative")
    rounding = p.get("rounding", "upper")
    return lambda n: translate(interval(0, n), shift_for(kappa, n, rounding))


def _rho(p, upper: Fraction | None = Fraction(1)) -> Fraction:
    rho = _frac(p.get("rho", 1), "rho")
    if rho < 0 or (upper is not None and rho > upper):
        raise SequenceError("rho must be nonnegative" if upper is None else f"rho must lie in [0, {upper}]")
    return rho


def _folner_comb(p):
    rho = _rho(p)

    def gen(n: int) -> Region:
        boxes = comb_teeth(n)
        if rho * n > 0:
            boxes.append(Box((0,), (rho * n,)))
        return Region.of(1, boxes)

    return gen


def _integer_run(lo: int, hi: int) -> list[PointRun]:
    return [PointRun(lo, Fraction(1), hi - lo + 1)] if hi >= lo else []


def _ergodic_dust(p):
    # the dust may be longer than the comb, so any rho >= 0 is allowed
    rho = _rho(p, upper=None)
    return lambda n: Region.of(1, comb_teeth(n), _integer_run(0, int(rho * n)))


def _ergodic_dust_inf(p):
    return lambda n: Region.of(1, comb_teeth(n), _integer_run(0, n * n))


def _remark_comb(p):
    return lambda n: Region.of(1, [Box((1,), (n,))], _integer_run(1, floor_exp(n)))


def _custom(p):
    table = {int(k): parse_region(str(v)) for k, v in dict(p.get("regions", {})).items()}

    def gen(n: int) -> Region:
        if n not in table:
            raise SequenceError(f"custom sequence has no region for n={n}")
        return table[n]

    return gen


SEQUENCES = {
    "intervals_0n": _intervals_0n,
    "centered_boxes": _centered_boxes,
    "shifted_intervals": _shifted_intervals,
    "folner_comb": _folner_comb,
    "ergodic_dust": _ergodic_dust,
    "ergodic_dust_inf": _ergodic_dust_inf,
    "remark_comb": _remark_comb,
    "custom": _custom,
}


def make_sequence(kind: str, params: dict | None = None) -> WindowSequence:
    key = kind.replace("-", "_")
    if key not in SEQUENCES:
        raise SequenceError(f"unknown sequence {kind!r}; known: {sorted(SEQUENCES)}")
    params = dict(params or {})
    return WindowSequence(key, params, SEQUENCES[key](params))


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

def _positive_volume(A: Region):
    v = volume(A)
    if not v > 0:
        raise SequenceError("window has zero volume")
    return v


def vanhove_ratio(seq: WindowSequence, K: Region, n: int):
    """``vol(boundary_K A_n) / vol(A_n)``."""
    A = seq(n)
    return volume(k_boundary(K, A)) / _positive_volume(A)


def folner_ratio(seq: WindowSequence, K: Region, n: int):
    """``vol((A_n + K) delta A_n) / vol(A_n)``."""
    A = seq(n)
    return volume(sym_diff(minkowski_sum(A, K), A)) / _positive_volume(A)


def ergodic_ratio(seq: WindowSequence, g, n: int):
    """``vol((A_n + g) delta A_n) / vol(A_n)``."""
    A = seq(n)
    return volume(sym_diff(translate(A, g), A)) / _positive_volume(A)


def connected_min_c(seq: WindowSequence, n: int):
    """Least sup-box radius ``c`` with ``A_n`` chained to 0 in steps of size ``c``."""
    return min_connecting_c(seq(n))


@dataclass
class ConnectednessReport:
    values: dict
    running_sup: dict
    unbounded: bool


def connectedness_report(seq: WindowSequence, ns) -> ConnectednessReport:
    """Minimal ``c`` per ``n`` with its running sup.

    The sequence is tagged unbounded when the minimal ``c`` strictly
    increases over the last three indices and ends above twice its first
    value.  This is a finite-range trend tag, not a proof.
    """
    ns = list(ns)
    values = {n: connected_min_c(seq, n) for n in ns}
    running, sup = {}, 0
    for n in ns:
        sup = max(sup, values[n])
        running[n] = sup
    tail = [values[n] for n in ns[-3:]]
    increasing = len(tail) >= 3 and all(a < b for a, b in zip(tail, tail[1:]))
    unbounded = increasing and values[ns[-1]] > 2 * values[ns[0]]
    return ConnectednessReport(values, running, unbounded)


@dataclass
class DiagnosticRow:
    n: int
    vol: Fraction
    vanhove_ratio: Fraction | None
    folner_ratio: Fraction | None
    ergodic_ratio: Fraction | None
    min_c: Fraction


def diagnostics(seq: WindowSequence, ns, K: Region | None = None, g=None) -> list[DiagnosticRow]:
    rows = []
    for n in ns:
        A = seq(n)
        vol = volume(A)
        # ratios are undefined for a null window; those cells stay empty
        has_k = K is not None and vol > 0
        vh = volume(k_boundary(K, A)) / vol if has_k else None
        fo = volume(sym_diff(minkowski_sum(A, K), A)) / vol if has_k else None
        er = volume(sym_diff(translate(A, g), A)) / vol if g is not None and vol > 0 else None
        rows.append(DiagnosticRow(n, vol, vh, fo, er, min_connecting_c(A)))
    return rows
