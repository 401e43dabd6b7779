"""Command-line front end.

Every run is driven by a flat configuration mapping built from an optional
YAML file (``--config``) overridden by command-line flags.  Output files begin
with the configuration hash and the library version, so two runs of the same
configuration produce identical bytes.

Exit codes: 0 success, 1 an audit reported a failure, 2 configuration error,
3 a size cap was hit (partial output is still written), 4 an internal
invariant was violated.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

import yaml

from . import __version__
from .entropy import EntropySeries, bound_audit, entropy_along, format_decimal, log_ratio
from .exact import format_number, format_rational, number_to_json, parse_number
from .geometry import (
    RegionError,
    ScaleV,
    cube,
    interval,
    parse_region,
    point_set,
    region_to_json,
)
from .patches import (
    CapExceeded,
    DEFAULT_CENTER_CAP,
    approx_close,
    enumerate_patches,
    npat,
    pat,
    patch_count,
    resolve_sample,
    rubber_close_bowen,
    sample_centers,
    separated_set,
    view,
)
from .pointsets import GeneratorError, SampleWindow, make_generator
from .windows import SequenceError, diagnostics, make_sequence

EXIT_OK, EXIT_AUDIT_FAILED, EXIT_CONFIG, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3, 4


class ConfigError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

# keys that name output locations; they never influence the artifact bytes
_OUTPUT_KEYS = {"out", "config"}


def load_config_file(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("the config file must hold a mapping")
    return data


def _canonical(value):
    """Plain JSON-ready form with every number written as an exact string."""
    if isinstance(value, dict):
        return {str(k): _canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, float):
        raise ConfigError(f"floating point value {value!r} in config; write it as 'p/q'")
    return str(value)


def config_hash(config: dict) -> str:
    body = {k: v for k, v in config.items() if k not in _OUTPUT_KEYS}
    text = json.dumps(_canonical(body), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def parse_n_range(text) -> list[int]:
    """``"4..20"``, ``"4..20:2"``, a single integer, or a list of integers."""
    if isinstance(text, list):
        return [int(x) for x in text]
    s = str(text).strip()
    try:
        if ".." in s:
            rng, _, step = s.partition(":")
            lo, hi = rng.split("..")
            return list(range(int(lo), int(hi) + 1, int(step) if step else 1))
        return [int(s)]
    except ValueError as exc:
        raise ConfigError(f"bad n range {text!r}") from exc


def parse_params(items) -> dict:
    """``key=value`` pairs from the command line, or a mapping from YAML."""
    if items is None:
        return {}
    if isinstance(items, dict):
        return {str(k): v for k, v in items.items()}
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"parameter {item!r} is not of the form key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _region(text, what: str):
    try:
        return parse_region(str(text))
    except (RegionError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad {what} region {text!r}: {exc}") from exc


def _number(text, what: str):
    try:
        return parse_number(str(text))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad {what} value {text!r}: {exc}") from exc


def _vector(text, what: str) -> tuple:
    parts = str(text).strip("() ").split(",")
    return tuple(_number(p, what) for p in parts)


# ---------------------------------------------------------------------------
# writers
# ---------------------------------------------------------------------------

def _header_lines(config: dict) -> list[str]:
    return [f"# config-hash: {config_hash(config)}", f"# version: {__version__}"]


def render_csv(config: dict, columns: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    for line in _header_lines(config):
        buf.write(line + "\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def render_json(config: dict, payload: dict) -> str:
    doc = {"config_hash": config_hash(config), "version": __version__,
           "config": _canonical({k: v for k, v in config.items() if k not in _OUTPUT_KEYS})}
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit(text: str, out: str | None):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Decimal):
        return format_decimal(x)
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    return format_number(x) if not isinstance(x, str) else x


# ---------------------------------------------------------------------------
# shared builders
# ---------------------------------------------------------------------------

def _kind_and_params(config: dict, key: str, default_kind: str | None = None) -> tuple[str, dict]:
    value = config.get(key, default_kind)
    if isinstance(value, dict):
        return str(value.get("kind")), parse_params(value.get("params"))
    if value is None:
        raise ConfigError(f"missing --{key}")
    return str(value), parse_params(config.get(f"{key}_params"))


def build_generator(config: dict):
    kind, params = _kind_and_params(config, "set")
    try:
        return make_generator(kind, params)
    except (GeneratorError, ValueError, TypeError, KeyError) as exc:
        raise ConfigError(str(exc)) from exc


def build_sequence(config: dict):
    kind, params = _kind_and_params(config, "seq")
    try:
        return make_sequence(kind, params)
    except (SequenceError, ValueError, TypeError, KeyError) as exc:
        raise ConfigError(str(exc)) from exc


def build_sample(config: dict):
    S = config.get("S", "auto")
    if S in (None, "auto"):
        return None
    return SampleWindow(_region(S, "sample"), False, note="user supplied sample window")


def _points_json(points) -> list:
    return [[number_to_json(x) for x in p] for p in points]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gen(config: dict) -> int:
    omega = build_generator(config)
    W = _region(config.get("window", "[-10,10]"), "window")
    pts = omega.query(W)
    cols = [f"x{i + 1}" for i in range(omega.dim)]
    emit(render_csv(config, cols, [[format_number(x) for x in p] for p in pts]), config.get("out"))
    return EXIT_OK


def cmd_windows_check(config: dict) -> int:
    seq = build_sequence(config)
    K = _region(config.get("K", "[-1,1]"), "K")
    g = _vector(config.get("g", "1/2"), "g")
    ns = list(range(int(config.get("n_min", 1)), int(config.get("n_max", 10)) + 1))
    rows = diagnostics(seq, ns, K, g[0] if len(g) == 1 else g)
    cols = ["n", "vol", "vanhove_ratio", "folner_ratio", "ergodic_ratio", "min_c"]
    body = [[r.n, r.vol, r.vanhove_ratio, r.folner_ratio, r.ergodic_ratio, r.min_c] for r in rows]
    emit(render_csv(config, cols, [[_cell(x) for x in row] for row in body]), config.get("out"))
    return EXIT_OK


def cmd_patches_count(config: dict) -> int:
    omega = build_generator(config)
    A = _region(config.get("A"), "A")
    sample = build_sample(config)
    method = config.get("method", "enumerate")
    if method in ("exact", "greedy"):
        method = "enumerate"
    cap = int(config.get("cap", DEFAULT_CENTER_CAP))
    count, how = patch_count(omega, A, method, sample, cap)
    payload = {"count": count, "method": how, "A": region_to_json(A)}
    if how == "enumerate":
        enum = enumerate_patches(omega, A, sample, cap)
        payload["exhaustive"] = enum.exhaustive
        payload["witnesses"] = _points_json([p.anchor for p in enum.patches])
        payload["patches"] = [_points_json(p.points) for p in enum.patches]
        payload["centers_scanned"] = enum.centers_scanned
    else:
        payload["exhaustive"] = True
        payload["witnesses"] = []
    emit(render_json(config, payload), config.get("out"))
    return EXIT_OK


def _check_representation(omega, A, V, sample, witnesses):
    """Every sampled center is represented by one of the witnesses."""
    from .geometry import minkowski_sum

    W = minkowski_sum(A, V.closure(A.dim))
    sample = resolve_sample(omega, W, sample)
    wviews = [view(omega, w, W) for w in witnesses]
    for c in sample_centers(omega, sample):
        cv = view(omega, c, W)
        if not any(approx_close(cv, wv, A, V) for wv in wviews):
            raise InvariantViolation(f"center {c} is not represented by the returned witnesses")


def cmd_patches_represent(config: dict) -> int:
    omega = build_generator(config)
    A = _region(config.get("A"), "A")
    V = ScaleV(_number(config.get("V", "1/4"), "V"))
    sample = build_sample(config)
    method = config.get("method", "exact")
    if method not in ("exact", "greedy"):
        raise ConfigError(f"represent needs --method exact or greedy, got {method!r}")
    cap = int(config.get("cap", DEFAULT_CENTER_CAP))
    if config.get("non_centred"):
        net = config.get("net_radius")
        res = npat(omega, A, V, sample, method, net_radius=_number(net, "net radius") if net else None,
                   cap=cap)
    else:
        res = pat(omega, A, V, sample, method, cap=cap)
        _check_representation(omega, A, V, sample, res.witnesses)
    payload = {
        "size": res.size,
        "method": res.method,
        "witnesses": _points_json(res.witnesses),
        "exhaustive": res.exhaustive,
        "certificate": res.certificate,
        "flags": list(res.flags),
        "elements_covered": res.elements_covered,
        "candidates": res.candidates,
        "A": region_to_json(A),
        "V_radius": format_rational(V.radius),
    }
    emit(render_json(config, payload), config.get("out"))
    return EXIT_OK


_SERIES_COLUMNS = ["n", "vol", "count", "estimate", "method", "radius"]


def _series_csv(config: dict, series: EntropySeries) -> str:
    rows = [[_cell(r.n), _cell(r.vol), str(r.count), format_decimal(r.estimate), r.method, _cell(r.radius)]
            for r in series.rows]
    for r in series.rows:
        # the estimate must reproduce from the exact count and volume
        if log_ratio(r.count, r.vol) != r.estimate:
            raise InvariantViolation(f"estimate at n={r.n} does not match its count")
    extra = [
        f"# label: {series.label}",
        f"# mode: {series.mode}",
        f"# complete: {'true' if series.complete else 'false'}",
        f"# running_max: {_cell(series.running_max)}",
        f"# running_min_of_tail: {_cell(series.running_min_of_tail)}",
    ]
    text = render_csv(config, _SERIES_COLUMNS, rows)
    head, _, rest = text.partition(f"# version: {__version__}\r\n")
    return head + f"# version: {__version__}\r\n" + "".join(e + "\r\n" for e in extra) + rest


def cmd_entropy(config: dict) -> int:
    omega = build_generator(config)
    seq = build_sequence(config)
    ns = parse_n_range(config.get("n", "4..12"))
    mode = config.get("mode", "exact")
    if mode not in ("exact", "scale"):
        raise ConfigError(f"unknown mode {mode!r}")
    radii = config.get("radii")
    if isinstance(radii, str):
        radii = [_number(x, "radius") for x in radii.split(",")]
    count_cap = config.get("count_cap")
    try:
        series = entropy_along(omega, seq, ns, mode, config.get("method", "auto"), radii,
                               int(config.get("k_max", 6)), int(config.get("cap", DEFAULT_CENTER_CAP)),
                               int(count_cap) if count_cap is not None else None)
    except CapExceeded as exc:
        if isinstance(exc.partial, EntropySeries):
            emit(_series_csv(config, exc.partial), config.get("out"))
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    emit(_series_csv(config, series), config.get("out"))
    return EXIT_OK


def _estimate_bracket(kappa: Fraction, n: int) -> tuple[Decimal, Decimal]:
    k = Decimal(kappa.numerator) / Decimal(kappa.denominator)
    return k - Decimal(2).ln() / n, k + Decimal(n + 2).ln() / n


def cmd_reproduce(config: dict) -> int:
    example = str(config.get("example", ""))
    if example in ("5.1", "intro-1.1"):
        param = config.get("kappa", "1/2")
    elif example in ("5.2", "5.3"):
        param = config.get("rho", "1")
    else:
        raise ConfigError(f"unknown example {example!r}; use 5.1, 5.2, 5.3 or intro-1.1")
    ns = parse_n_range(config.get("n", "4..12"))
    if str(param) != "inf":
        param = _number(param, "parameter")
    try:
        audit = bound_audit(example, param, ns, config.get("method", "auto"),
                            int(config.get("cap", DEFAULT_CENTER_CAP)))
    except (SequenceError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    halfline = example in ("5.1", "intro-1.1")
    cols = ["n", "lower", "count", "upper", "sandwich", "estimate"]
    if halfline:
        cols += ["estimate_lo", "estimate_hi", "bracket"]
    rows = []
    for r in audit.rows:
        row = [str(r.n), r.lower, str(r.count), r.upper, "pass" if r.ok else "FAIL",
               format_decimal(r.estimate)]
        if halfline:
            lo, hi = _estimate_bracket(Fraction(param), r.n)
            row += [format_decimal(lo), format_decimal(hi), "pass" if r.estimate_ok else "FAIL"]
        rows.append(row)
    text = render_csv(config, cols, rows)
    emit(text, config.get("out"))
    verdict = "PASS" if audit.passed else "FAIL"
    print(f"{verdict} example {example} {audit.params}", file=sys.stderr if not config.get("out") else sys.stdout)
    return EXIT_OK if audit.passed else EXIT_AUDIT_FAILED


# ---------------------------------------------------------------------------
# inequality audits
# ---------------------------------------------------------------------------

def suite_lemma36(delta=Fraction(1, 8), A_text: str = "[0,3]") -> list[dict]:
    """Both covering sandwiches comparing centred and non-centred sizes."""
    from .geometry import minkowski_sum
    from .patches import net_points

    omega = make_generator("word_set")
    A = parse_region(A_text)
    d = ScaleV(delta)
    left = pat(omega, A, d.doubled())
    right = npat(omega, minkowski_sum(A, d.closure(1)), d)
    R = omega.covering_radius
    N = len(net_points(R, delta))
    nl = npat(omega, A, d.doubled(), net_radius=delta)
    pr = pat(omega, minkowski_sum(A, cube(R)), d)
    return [
        {"name": "pat(A,2d) <= npat(A+cl V,d)", "lhs": left.size, "rhs": right.size,
         "passed": left.size <= right.size},
        {"name": "npat(A,2d) <= N pat(A+K,d)", "lhs": nl.size, "rhs": N * pr.size, "N": N,
         "pat": pr.size, "passed": nl.size <= N * pr.size},
    ]


def bowen_mismatches(radius, K_text: str = "[0,1]", shifts=(0, Fraction(1, 2), 1),
                     window: str = "[0,8]") -> tuple[int, int]:
    """Compare closeness over all shifts with closeness on ``K - shifts``.

    Returns ``(mismatches, pairs checked)`` over all center pairs.
    """
    from .geometry import minkowski_sum, reflect

    omega = make_generator("word_set")
    K = parse_region(K_text)
    V = ScaleV(radius)
    KA = minkowski_sum(K, reflect(point_set(shifts)))
    W = minkowski_sum(KA, cube(2 * V.radius))
    centers = omega.query(parse_region(window))
    views = [view(omega, c, W) for c in centers]
    bad = checked = 0
    for i in range(len(centers)):
        for j in range(len(centers)):
            checked += 1
            lhs = rubber_close_bowen(views[i], views[j], K, shifts, V)
            rhs = approx_close(views[i], views[j], KA, V)
            bad += lhs != rhs
    return bad, checked


def suite_bowen() -> list[dict]:
    out = []
    for r in (Fraction(1, 4), Fraction(1, 8)):
        bad, checked = bowen_mismatches(r)
        out.append({"name": f"Bowen shift identity, V radius {format_rational(r)}",
                    "mismatches": bad, "pairs": checked, "passed": bad == 0})
    return out


def suite_pat_vs_count(ms=range(1, 7)) -> list[dict]:
    omega = make_generator("word_set")
    out = []
    for m in ms:
        A = interval(0, m)
        count, _ = patch_count(omega, A, "enumerate")
        small = pat(omega, A, ScaleV(Fraction(1, 5))).size
        large = pat(omega, A, ScaleV(Fraction(1, 2))).size
        out.append({"name": f"pat <= |Pat| on [0,{m}]", "count": count, "pat_1/5": small,
                    "pat_1/2": large, "passed": small == count and large <= count})
    return out


def remark_separated(n: int = 2) -> tuple[int, int]:
    """Separated centers for the punctured lattice with window ``[0,1] - A_n``.

    Returns ``(separated size, required lower bound ceil(e^n) - 2)``.
    """
    from .exact import ceil_exp, floor_exp
    from .geometry import minkowski_sum, reflect

    omega = make_generator("punctured")
    A_n = make_sequence("remark_comb")(n)
    K = minkowski_sum(interval(0, 1), reflect(A_n))
    centers = omega.query(interval(1, floor_exp(n)))
    size, _ = separated_set(omega, K, ScaleV(Fraction(1, 2)), centers)
    return size, ceil_exp(n) - 2


def separated_vs_cover(m: int, delta=Fraction(1, 8)) -> tuple[int, int]:
    """A separated set under ``(A, 2 delta)`` against ``npat(A + cl V, delta)``.

    The separated set is found among the word set centers of the sufficient
    sample for ``A + [-1/2, 1/2]``; any separated set bounds the covering
    number from below, so its size must not exceed the non-centred count.
    """
    from .geometry import minkowski_sum

    omega = make_generator("word_set")
    A = interval(0, m)
    d = ScaleV(delta)
    centers = sample_centers(omega, resolve_sample(omega, minkowski_sum(A, cube(Fraction(1, 2))), None))
    size, _ = separated_set(omega, A, d.doubled(), centers)
    return size, npat(omega, minkowski_sum(A, d.closure(1)), d).size


def suite_separated() -> list[dict]:
    size, need = remark_separated(2)
    out = [{"name": "separated set for the punctured lattice", "size": size, "lower_bound": need,
            "passed": size >= need}]
    for m in (1, 2, 3):
        sep, cover = separated_vs_cover(m)
        out.append({"name": f"separated <= npat on [0,{m}]", "separated": sep, "npat": cover,
                    "passed": sep <= cover})
    return out


SUITES = {
    "lemma-3.6": suite_lemma36,
    "bowen": suite_bowen,
    "pat-vs-count": suite_pat_vs_count,
    "separated": suite_separated,
}


def cmd_audit(config: dict) -> int:
    names = config.get("suite") or list(SUITES)
    report = {}
    for name in names:
        if name not in SUITES:
            raise ConfigError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
        report[name] = SUITES[name]()
    passed = all(item["passed"] for items in report.values() for item in items)
    payload = {"passed": passed, "suites": _canonical(report)}
    emit(render_json(config, payload), config.get("out"))
    for name, items in report.items():
        for item in items:
            print(f"{'PASS' if item['passed'] else 'FAIL'} [{name}] {item['name']}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_AUDIT_FAILED


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="YAML file with default settings")
    p.add_argument("--out", help="output file (stdout when omitted)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="patchentropy",
                                     description="Patch counting entropy of Delone sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="list the points of a generator inside a window")
    _add_common(p)
    p.add_argument("--set", dest="set")
    p.add_argument("--params", dest="set_params", nargs="*")
    p.add_argument("--window")

    w = sub.add_parser("windows", help="window sequence diagnostics")
    wsub = w.add_subparsers(dest="action", required=True)
    p = wsub.add_parser("check")
    _add_common(p)
    p.add_argument("--seq")
    p.add_argument("--params", dest="seq_params", nargs="*")
    p.add_argument("--K")
    p.add_argument("--g")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)

    pt = sub.add_parser("patches", help="patch counts and scale-V representations")
    psub = pt.add_subparsers(dest="action", required=True)
    for action in ("count", "represent"):
        p = psub.add_parser(action)
        _add_common(p)
        p.add_argument("--set", dest="set")
        p.add_argument("--params", dest="set_params", nargs="*")
        p.add_argument("--A")
        p.add_argument("--S")
        p.add_argument("--method")
        p.add_argument("--cap", type=int)
        if action == "represent":
            p.add_argument("--V")
            p.add_argument("--non-centred", action="store_true", default=None)
            p.add_argument("--net-radius")

    p = sub.add_parser("entropy", help="entropy estimates along a window sequence")
    _add_common(p)
    p.add_argument("--set", dest="set")
    p.add_argument("--set-params", nargs="*")
    p.add_argument("--seq")
    p.add_argument("--seq-params", nargs="*")
    p.add_argument("--mode", choices=["exact", "scale"])
    p.add_argument("--n")
    p.add_argument("--k-max", type=int)
    p.add_argument("--radii", help="comma separated V radii for scale mode")
    p.add_argument("--method")
    p.add_argument("--cap", type=int)
    p.add_argument("--count-cap", type=int)

    p = sub.add_parser("reproduce", help="audit the sandwich bounds of a worked example")
    _add_common(p)
    p.add_argument("--example")
    p.add_argument("--kappa")
    p.add_argument("--rho")
    p.add_argument("--n")
    p.add_argument("--method")
    p.add_argument("--cap", type=int)

    p = sub.add_parser("audit-inequalities", help="run the inequality audit suites")
    _add_common(p)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


HANDLERS = {
    ("gen", None): cmd_gen,
    ("windows", "check"): cmd_windows_check,
    ("patches", "count"): cmd_patches_count,
    ("patches", "represent"): cmd_patches_represent,
    ("entropy", None): cmd_entropy,
    ("reproduce", None): cmd_reproduce,
    ("audit-inequalities", None): cmd_audit,
}


def resolve_config(args: argparse.Namespace) -> dict:
    config = load_config_file(args.config)
    for key, value in vars(args).items():
        if key in ("config", "command", "action") or value is None:
            continue
        config[key] = value
    config["command"] = args.command if getattr(args, "action", None) is None \
        else f"{args.command} {args.action}"
    if args.config:
        config["config"] = args.config
    return config


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = HANDLERS[(args.command, getattr(args, "action", None))]
    try:
        config = resolve_config(args)
        return handler(config)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvariantViolation, AssertionError) as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ConfigError, RegionError, GeneratorError, SequenceError, ValueError, KeyError,
            TypeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def main(argv: list[str] | None = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
