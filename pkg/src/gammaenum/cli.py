"""Command-line front end.

Subcommands: shadows, matchings, hseries, shapes, structures, asymptotics,
classify, verify, cache.  Exit codes: 0 success, 1 usage or runtime error,
2 verification mismatch.  Every number printed is either an exact decimal
string or accompanied by an explicit error bound.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import mpmath

from . import cache as cache_mod
from .asym import dominant_singularity, structure_growth
from .config import OUTPUT_FORMATS, load_config
from .diagrams import classify, parse_diagram
from .errors import GammaEnumError
from .exact import coeff_strings
from .gamma import A_series, G_series, Gtilde_series, H_series, S_series, build_P
from .hz import C_series, hz_table
from .rational import to_string
from .shadows import shadow_set
from .verify import exit_code, render_json, render_text, run_verification

USAGE_ERROR = 1
VERIFY_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; keep that for mismatches
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_ERROR)


def _series_payload(command: str, params: dict, series) -> dict:
    return {"command": command, "params": params, "coefficients": coeff_strings(series)}


def _emit_series(args, command: str, params: dict, series) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps(_series_payload(command, params, series), sort_keys=True))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["exponent", "coefficient"])
        for k, c in enumerate(series.coeffs):
            writer.writerow([k, to_string(c)])
    else:
        print(" ".join(coeff_strings(series)))


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=OUTPUT_FORMATS, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="gammaenum", description=__doc__)
    parser.add_argument("--config", default=None, help="optional JSON config file")
    parser.add_argument("--cache-dir", default=None, help="override cache directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shadows", help="irreducible-shadow polynomial of one genus")
    p.add_argument("--genus", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("matchings", help="genus-filtered matching counts")
    p.add_argument("--genus", type=int, default=None, help="series for one genus")
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--table", action="store_true", help="emit the full (g, m) table as CSV")
    p.add_argument("--gmax", type=int, default=4)
    _add_format(p)

    p = sub.add_parser("hseries", help="genus-bounded matching series")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--terms", type=int, default=10)
    _add_format(p)

    p = sub.add_parser("shapes", help="shape counts by arcs and 1-arcs")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--terms", type=int, default=7)
    _add_format(p)

    p = sub.add_parser("structures", help="canonical structure counts by length")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--length", type=int, default=10)
    p.add_argument("--with-one-arcs", action="store_true")
    p.add_argument("--mark-arcs", action="store_true", help="bivariate counts by (length, arcs)")
    _add_format(p)

    p = sub.add_parser("asymptotics", help="dominant singularity and growth constants")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--with-one-arcs", action="store_true")
    p.add_argument("--digits", type=int, default=6)
    _add_format(p)

    p = sub.add_parser("classify", help="classify a diagram file")
    p.add_argument("path")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--allow-one-arcs", action="store_true")

    p = sub.add_parser("verify", help="run oracle verification")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    _add_format(p)

    p = sub.add_parser("cache", help="cache maintenance")
    p.add_argument("action", choices=("clear", "status"))
    return parser


def _cmd_shadows(args, cfg) -> int:
    ss = shadow_set(args.genus, cache_dir=cfg.cache_dir)
    poly = ss.poly(args.genus)
    fmt = args.format
    if fmt == "text":
        print(str(poly))
    else:
        _emit_series(args, "shadows", {"genus": args.genus}, poly)
    return 0


def _cmd_matchings(args, cfg) -> int:
    if args.table:
        table = hz_table(args.gmax, args.terms)
        writer = csv.writer(sys.stdout)
        writer.writerow(["genus", "arcs", "count"])
        for g in range(args.gmax + 1):
            for m in range(args.terms + 1):
                writer.writerow([g, m, table.count(g, m)])
        return 0
    genus = args.genus if args.genus is not None else 0
    series = C_series(genus, args.terms)
    _emit_series(args, "matchings", {"genus": genus, "terms": args.terms}, series)
    return 0


def _cmd_hseries(args, cfg) -> int:
    series = H_series(args.gamma, args.terms, shadows=shadow_set(args.gamma, cfg.cache_dir))
    if args.format == "json":
        print(
            json.dumps(
                {"gamma": args.gamma, "coefficients": coeff_strings(series)}, sort_keys=True
            )
        )
    else:
        _emit_series(args, "hseries", {"gamma": args.gamma}, series)
    return 0


def _cmd_shapes(args, cfg) -> int:
    s = S_series(args.gamma, args.terms)
    if args.format == "json":
        rows = {
            str(one): coeff_strings(s.level(one)) for one in range(s.t_order + 1)
        }
        print(json.dumps({"gamma": args.gamma, "by_one_arcs": rows}, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["arcs", "one_arcs", "count"])
        for n in range(args.terms + 1):
            for one in range(n + 1):
                c = s.level(one).coeffs[n]
                if c:
                    writer.writerow([n, one, to_string(c)])
    return 0


def _cmd_structures(args, cfg) -> int:
    shadows = shadow_set(args.gamma, cfg.cache_dir)
    h = H_series(args.gamma, args.length, shadows=shadows)
    if args.mark_arcs:
        a = A_series(args.tau, args.gamma, args.length, args.length // 2, h=h)
        writer = csv.writer(sys.stdout)
        writer.writerow(["length", "arcs", "count"])
        for n in range(args.length + 1):
            for m in range(a.t_order + 1):
                c = a.level(m).coeffs[n]
                if c:
                    writer.writerow([n, m, to_string(c)])
        return 0
    if args.with_one_arcs:
        series = Gtilde_series(args.tau, args.gamma, args.length, h=h)
    else:
        series = G_series(args.tau, args.gamma, args.length, h=h)
    _emit_series(
        args,
        "structures",
        {"gamma": args.gamma, "tau": args.tau, "with_one_arcs": args.with_one_arcs},
        series,
    )
    return 0


def _format_mpf(value, digits: int) -> str:
    return mpmath.nstr(value, digits, strip_zeros=False)


def _cmd_asymptotics(args, cfg) -> int:
    system = build_P(args.gamma, cache_dir=cfg.cache_dir)
    data = dominant_singularity(
        args.gamma, precision=cfg.default_precision, system=system, cache_dir=cfg.cache_dir
    )
    digits = args.digits
    if args.tau is not None:
        rate = structure_growth(
            args.tau,
            args.gamma,
            args.with_one_arcs,
            precision=cfg.default_precision,
            asym=data,
            cache_dir=cfg.cache_dir,
        )
        payload = {
            "command": "asymptotics",
            "params": {
                "gamma": args.gamma,
                "tau": args.tau,
                "with_one_arcs": args.with_one_arcs,
            },
            "growth": _format_mpf(mpmath.mpf(str(float(rate.value))), digits),
            "error_bound": _error_str(rate.error),
        }
        if args.format == "json":
            print(json.dumps(payload, sort_keys=True))
        elif args.format == "csv":
            writer = csv.writer(sys.stdout)
            writer.writerow(["quantity", "value", "error_bound"])
            writer.writerow(["growth", payload["growth"], payload["error_bound"]])
        else:
            print(f"growth {payload['growth']} (error bound {payload['error_bound']})")
        return 0

    rho_err = data.rho.width / 2
    pi_err = data.pi.width / 2
    rows = [
        ("rho", _format_mpf(_as_mpf(data.rho.midpoint), digits), _error_str(rho_err)),
        ("pi", _format_mpf(data.pi_val, digits), _error_str(pi_err)),
        ("lambda", _format_mpf(data.lambda_val, digits), "reported at 96-bit float precision"),
        ("c", _format_mpf(data.c_val, digits), "reported at 96-bit float precision"),
        ("growth", _format_mpf(data.growth, digits), _error_str(rho_err / (data.rho.low * data.rho.high))),
    ]
    if args.format == "json":
        payload = {
            "command": "asymptotics",
            "params": {"gamma": args.gamma},
        }
        for name, value, err in rows:
            payload[name] = value
            payload[f"{name}_error_bound"] = err
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["quantity", "value", "error_bound"])
        writer.writerows(rows)
    else:
        for name, value, err in rows:
            print(f"{name} {value} (error bound {err})")
    return 0


def _error_str(q) -> str:
    """Short decimal upper bound on a rational error (rounded up)."""
    if q == 0:
        return "0"
    f = float(q)
    # bump the mantissa so the printed bound stays an upper bound
    import math

    exp = math.floor(math.log10(abs(f)))
    mant = abs(f) / 10**exp
    mant = math.ceil(mant * 100) / 100
    return f"{mant:.2f}e{exp:+d}"


def _as_mpf(q):
    return mpmath.mpf(int(q.numerator)) / mpmath.mpf(int(q.denominator))


def _cmd_classify(args, cfg) -> int:
    with open(args.path) as fh:
        diagram = parse_diagram(fh.read())
    verdict = classify(diagram, args.gamma, args.tau, args.allow_one_arcs)
    print("true" if verdict else "false")
    return 0


def _cmd_verify(args, cfg) -> int:
    results = run_verification(args.level, cache_dir=cfg.cache_dir, caps=cfg.oracle_caps)
    if args.format == "json":
        sys.stdout.write(render_json(results))
    else:
        sys.stdout.write(render_text(results))
    return exit_code(results)


def _cmd_cache(args, cfg) -> int:
    if args.action == "clear":
        removed = cache_mod.clear(cfg.cache_dir)
        print(f"removed {removed} entries")
    else:
        entries = cache_mod.status(cfg.cache_dir)
        if not entries:
            print("cache empty")
        for name, size in entries:
            print(f"{name} {size}")
    return 0


_COMMANDS = {
    "shadows": _cmd_shadows,
    "matchings": _cmd_matchings,
    "hseries": _cmd_hseries,
    "shapes": _cmd_shapes,
    "structures": _cmd_structures,
    "asymptotics": _cmd_asymptotics,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "cache": _cmd_cache,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cache_override = Path(args.cache_dir) if args.cache_dir else None
        cfg = load_config(args.config, cache_dir=cache_override)
        if getattr(args, "format", None) is None and hasattr(args, "format"):
            args.format = cfg.output_format
        return _COMMANDS[args.command](args, cfg)
    except GammaEnumError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
