"""Patch counting entropy estimates along window sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .exact import exp_le, exp_lt, format_rational
from .geometry import ScaleV, volume
from .patches import CapExceeded, DEFAULT_CENTER_CAP, enumerate_patches, pat, patch_count
from .pointsets import HalflineMix, PointSetOracle, WordSet
from .windows import WindowSequence, connectedness_report, make_sequence

SIG_DIGITS = 12


def log_ratio(count: int, vol: Fraction) -> Decimal:
    """``ln(count) / vol`` to well beyond 12 significant digits."""
    with localcontext() as ctx:
        ctx.prec = 40
        return Decimal(count).ln() / (Decimal(vol.numerator) / Decimal(vol.denominator))


def format_decimal(x: Decimal | float, digits: int = SIG_DIGITS) -> str:
    """Fixed 12-significant-digit rendering used in every table."""
    return f"{Decimal(x):.{digits - 1}E}" if x != 0 else "0"


@dataclass
class EntropyRow:
    n: int
    vol: Fraction
    count: int
    estimate: Decimal
    method: str
    radius: Fraction | None = None


@dataclass
class EntropySeries:
    mode: str
    rows: list[EntropyRow]
    running_max: Decimal | None
    running_min_of_tail: Decimal | None
    label: str = "finite-range surrogate"
    complete: bool = True
    radii: list = field(default_factory=list)

    def final(self) -> EntropyRow:
        return self.rows[-1]


def _tail_stats(estimates: list[Decimal]):
    if not estimates:
        return None, None
    tail = estimates[len(estimates) // 2:]
    return max(estimates), min(tail)


def entropy_along(omega: PointSetOracle, seq: WindowSequence, ns, mode: str = "exact",
                  count_method: str = "auto", radii=None, k_max: int = 6,
                  cap: int = DEFAULT_CENTER_CAP, count_cap: int | None = None) -> EntropySeries:
    """Estimates ``log(count) / vol(A_n)`` over ``ns``.

    ``exact`` mode counts patches; ``scale`` mode computes ``pat(A_n, V)`` for
    radii ``2^-k`` (``k = 1 .. k_max``) and keeps, per ``n``, the largest
    estimate seen so far (the supremum over ``V``).  The sweep stops once two
    consecutive radii give identical counts at every ``n``.  When
    ``count_cap`` is exceeded a :class:`CapExceeded` carrying the partial
    series is raised.
    """
    ns = list(ns)
    rows: list[EntropyRow] = []

    def checked(row: EntropyRow):
        if count_cap is not None and row.count > count_cap:
            est = [r.estimate for r in rows]
            hi, lo = _tail_stats(est)
            raise CapExceeded(f"patch count {row.count} exceeds the cap {count_cap}",
                              EntropySeries(mode, rows, hi, lo, complete=False))
        rows.append(row)

    if mode == "exact":
        for n in ns:
            A = seq(n)
            vol = volume(A)
            count, how = patch_count(omega, A, count_method, cap=cap)
            checked(EntropyRow(n, vol, count, log_ratio(count, vol), how))
        hi, lo = _tail_stats([r.estimate for r in rows])
        return EntropySeries(mode, rows, hi, lo)
    if mode != "scale":
        raise ValueError(f"unknown entropy mode {mode!r}")
    schedule = [Fraction(r) for r in radii] if radii else [Fraction(1, 2 ** k) for k in range(1, k_max + 1)]
    best: dict[int, EntropyRow] = {}
    previous = None
    used = []
    for radius in schedule:
        counts = {}
        for n in ns:
            A = seq(n)
            vol = volume(A)
            res = pat(omega, A, ScaleV(radius), cap=cap)
            counts[n] = res.size
            row = EntropyRow(n, vol, res.size, log_ratio(res.size, vol), f"pat-{res.method}", radius)
            if n not in best or row.estimate > best[n].estimate:
                best[n] = row
        used.append(radius)
        if previous is not None and previous == counts:
            break
        previous = counts
    for n in ns:
        checked(best[n])
    hi, lo = _tail_stats([r.estimate for r in rows])
    return EntropySeries(mode, rows, hi, lo, radii=used)


# ---------------------------------------------------------------------------
# sandwich audits
# ---------------------------------------------------------------------------

@dataclass
class AuditRow:
    n: int
    lower: str
    count: int
    upper: str
    ok: bool
    estimate: Decimal | None = None
    estimate_ok: bool | None = None
    method: str = ""


@dataclass
class BoundAudit:
    example_id: str
    params: dict
    rows: list[AuditRow]

    @property
    def passed(self) -> bool:
        return all(r.ok and r.estimate_ok is not False for r in self.rows)


def _pow2_le(exponent: Fraction, count: int) -> bool:
    """``2^exponent <= count`` exactly (``exponent`` rational, ``count >= 1``)."""
    # 2^(p/q) <= c  iff  2^p <= c^q
    p, q = exponent.numerator, exponent.denominator
    if p < 0:
        return True
    return (1 << p) <= count ** q


def _le_pow2(count: int, exponent: Fraction) -> bool:
    """``count <= 2^exponent`` exactly."""
    p, q = exponent.numerator, exponent.denominator
    if p < 0:
        return count ** q * (1 << -p) <= 1
    return count ** q <= (1 << p)


def _audit_halfline(example_id: str, kappa: Fraction, ns, cap: int) -> BoundAudit:
    omega = HalflineMix()
    seq = make_sequence("shifted_intervals", {"kappa": str(kappa)})
    rows = []
    for n in ns:
        A = seq(n)
        count = enumerate_patches(omega, A, cap=cap).count
        x = kappa * n
        # e^x - 1 <= count   and   count <= (n + 1) + e^x + 1
        lower_ok = exp_le(x, count + 1)
        upper_ok = count - n - 2 <= 0 or not exp_lt(x, count - n - 2)
        # kappa + ln(1/2)/n <= ln(count)/n <= kappa + ln(n+2)/n
        est_ok = exp_le(x, 2 * count) and not exp_lt(x, Fraction(count, n + 2))
        rows.append(AuditRow(n, f"e^({format_rational(x)})-1", count,
                             f"{n + 2}+e^({format_rational(x)})", lower_ok and upper_ok,
                             log_ratio(count, volume(A)), est_ok, "enumerate"))
    return BoundAudit(example_id, {"kappa": format_rational(kappa)}, rows)


def _audit_word(example_id: str, kind: str, rho, ns, upper_extra: int, count_method: str,
                cap: int) -> BoundAudit:
    omega = WordSet()
    inf = rho == "inf"
    seq = make_sequence(kind if not inf else "ergodic_dust_inf",
                        {} if inf else {"rho": str(rho)})
    rows = []
    for n in ns:
        A = seq(n)
        count, how = patch_count(omega, A, count_method, cap=cap)
        if inf:
            # only the lower bound 2^n <= count is audited in this case
            ok = _pow2_le(Fraction(n), count)
            rows.append(AuditRow(n, f"2^{n}", count, "-", ok, log_ratio(count, volume(A)), None, how))
            continue
        e = Fraction(rho) * n
        ok = _pow2_le(e, count) and _le_pow2(count, e + upper_extra)
        rows.append(AuditRow(n, f"2^({format_rational(e)})", count,
                             f"2^({format_rational(e + upper_extra)})", ok,
                             log_ratio(count, volume(A)), None, how))
    return BoundAudit(example_id, {"rho": str(rho)}, rows)


def bound_audit(example_id: str, param, ns, count_method: str = "auto",
                cap: int = DEFAULT_CENTER_CAP) -> BoundAudit:
    """Per-``n`` check of the literal sandwich bounds of the worked examples.

    ``5.1`` and ``intro-1.1`` take ``kappa``; ``5.2`` and ``5.3`` take ``rho``
    (``5.3`` also accepts ``"inf"``).
    """
    ns = list(ns)
    if example_id in ("5.1", "intro-1.1"):
        return _audit_halfline(example_id, Fraction(param), ns, cap)
    if example_id == "5.2":
        return _audit_word("5.2", "folner_comb", Fraction(param), ns, 2, count_method, cap)
    if example_id == "5.3":
        rho = "inf" if str(param) == "inf" else Fraction(param)
        return _audit_word("5.3", "ergodic_dust", rho, ns, 1, count_method, cap)
    raise ValueError(f"unknown example {example_id!r}")


# ---------------------------------------------------------------------------
# cross-sequence comparison
# ---------------------------------------------------------------------------

@dataclass
class CrossReport:
    names: list[str]
    finals: dict
    min_c_sup: dict
    max_discrepancy: Decimal


def cross_sequence_report(omega: PointSetOracle, seqs: dict, ns, mode: str = "exact") -> CrossReport:
    """Final-row estimates per sequence and their largest pairwise gap."""
    ns = list(ns)
    finals, csup = {}, {}
    for name, seq in seqs.items():
        series = entropy_along(omega, seq, ns, mode)
        finals[name] = series.final().estimate
        csup[name] = connectedness_report(seq, ns).running_sup[ns[-1]]
    vals = list(finals.values())
    disc = max(vals) - min(vals) if vals else Decimal(0)
    return CrossReport(list(seqs), finals, csup, disc)


def folner_upper_check(omega: PointSetOracle, seq: WindowSequence, ns, reference: float,
                       tol: float, mode: str = "exact") -> bool:
    """Every estimate along ``seq`` stays below ``reference + tol``."""
    series = entropy_along(omega, seq, ns, mode)
    return all(float(r.estimate) <= reference + tol for r in series.rows)
