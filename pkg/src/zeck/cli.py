"""Command-line front end.

Every operation is exposed as a subcommand that emits CSV or JSON; the
report-style subcommands (``gauss``, ``figure1``) additionally render a
matplotlib figure next to their CSV when writing to a file.  Output is
deterministic: identical arguments produce identical bytes.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import gaussian, oracle
from .combinatorics import joint_table, zeck_density
from .decompose import decompose, fardiff, zeckendorf
from .oracle import TooLargeError
from .sequences import PlrsSpec, make_plrs, parse_spec, terms

VERIFY_MATRIX = ("1 1", "2 3 1", "2", "3", "10", "1 0 1")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _spec_from(args) -> PlrsSpec:
    if getattr(args, "spec_file", None):
        return parse_spec(Path(args.spec_file).read_text())
    return parse_spec(args.coeffs)


def _add_spec_options(p: argparse.ArgumentParser, default: str | None = "1 1") -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--coeffs", default=default,
                   help="recurrence coefficients, e.g. '2 3 1' (default: %(default)s)")
    g.add_argument("--spec-file", help="file holding the coefficient line or JSON")


def _add_io_options(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
    p.add_argument("--out", help="write to this path instead of stdout")
    p.add_argument("--digits", type=int, default=6,
                   help="significant digits for floats (default: %(default)s)")


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv_text(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _fig_path(args) -> str | None:
    if getattr(args, "no_fig", False):
        return None
    if getattr(args, "fig", None):
        return args.fig
    if args.out:
        return str(Path(args.out).with_suffix(".png"))
    return None


def _render_curves(path: str, curves, title: str, xlabel: str, ylabel: str) -> None:
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for xs, ys, style, label in curves:
        ax.plot(xs, ys, style, label=label, markersize=3)
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# -- subcommand handlers --------------------------------------------------


def _cmd_seq(args) -> int:
    spec = _spec_from(args)
    seq = terms(spec, args.count)
    if args.format == "json":
        _emit(args, _json_text({"coeffs": list(spec.coeffs), "terms": seq}))
    else:
        _emit(args, _csv_text(((i + 1, t) for i, t in enumerate(seq)), ("n", "term")))
    return 0


def _cmd_decompose(args) -> int:
    spec = _spec_from(args)
    dec = decompose(spec, args.n_value)
    m = dec.top_index
    if args.format == "json":
        payload = {
            "value": args.n_value,
            "top_index": m,
            "coeffs": list(dec.coeffs),
            "summands": [{"index": m - i, "coeff": a}
                         for i, a in enumerate(dec.coeffs) if a],
        }
        _emit(args, _json_text(payload))
    else:
        rows = ((m - i, a) for i, a in enumerate(dec.coeffs))
        _emit(args, _csv_text(rows, ("index", "coeff")))
    return 0


def _cmd_zeck(args) -> int:
    indices = sorted(zeckendorf(args.n_value), reverse=True)
    if args.format == "json":
        _emit(args, _json_text({"value": args.n_value, "indices": indices}))
    else:
        _emit(args, _csv_text(((i,) for i in indices), ("index",)))
    return 0


def _cmd_fardiff(args) -> int:
    sd = fardiff(args.n_value)
    if args.format == "json":
        _emit(args, _json_text([{"index": i, "sign": s} for i, s in sd.terms]))
    else:
        _emit(args, str(sd) + "\n")
    return 0


def _cmd_density(args) -> int:
    if args.source == "formula":
        table = zeck_density(args.n)
        rows = list(table.rows(args.digits))
        norm = table.normalizer
    else:
        spec = _spec_from(args)
        hist = oracle.empirical_density(spec, args.n)
        norm = sum(hist.values())
        rows = []
        for k in sorted(hist):
            p = Fraction(hist[k], norm)
            rows.append((args.n, k, hist[k], p.numerator, p.denominator,
                         format(float(p), f".{args.digits}g")))
    if args.format == "json":
        payload = {
            "n": args.n,
            "normalizer": norm,
            "rows": [{"k": r[1], "count": r[2],
                      "prob": f"{r[3]}/{r[4]}", "prob_float": float(r[5])}
                     for r in rows],
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, _csv_text(rows, ("n", "k", "count", "prob_num", "prob_den",
                                     "prob_float")))
    return 0


def _cmd_joint(args) -> int:
    if args.source == "formula":
        counts = joint_table(args.n).counts
    else:
        counts = oracle.empirical_joint(args.n)
    rows = [(args.n, k, ell, counts[(k, ell)]) for (k, ell) in sorted(counts)]
    if args.format == "json":
        _emit(args, _json_text([{"k": r[1], "l": r[2], "count": r[3]} for r in rows]))
    else:
        _emit(args, _csv_text(rows, ("n", "k", "l", "count")))
    return 0


def _cmd_moments(args) -> int:
    report = gaussian.exact_moments(zeck_density(args.n), args.convention)
    _emit(args, _json_text(report.to_json_dict(args.digits)))
    return 0


def _cmd_gauss(args) -> int:
    fit = gaussian.gauss_profile(args.n, args.width, args.step)
    d = args.digits
    rows = [(format(x, f".{d}g"), format(s, f".{d}g"), format(p, f".{d}g"))
            for x, s, p in fit.grid]
    if args.format == "json":
        payload = {
            "n": fit.n,
            "sup_deviation": float(format(fit.sup_deviation, f".{d}g")),
            "grid": [{"x": float(r[0]), "scaled_density": float(r[1]),
                      "normal_pdf": float(r[2])} for r in rows],
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, _csv_text(rows, ("x", "scaled_density", "normal_pdf")))
    fig_path = _fig_path(args)
    if fig_path:
        xs = [g[0] for g in fit.grid]
        _render_curves(
            fig_path,
            [(xs, [g[1] for g in fit.grid], "o", "scaled density"),
             (xs, [g[2] for g in fit.grid], "-", "standard normal")],
            f"Standardized summand-count density, n={fit.n}",
            "standard deviations from the mean", "density",
        )
    return 0


def _cmd_stirling(args) -> int:
    factors = gaussian.stirling_f(args.n, args.k)
    _emit(args, _json_text(factors.to_json_dict(args.digits)))
    return 0


def _cmd_fardiff_stats(args) -> int:
    stats = gaussian.fardiff_stats(args.n, args.source)
    _emit(args, _json_text(stats.to_json_dict(args.digits)))
    return 0


def _cmd_figure1(args) -> int:
    rows = list(gaussian.figure_rows(args.n, args.digits))
    _emit(args, _csv_text(rows, ("k", "probability", "normal")))
    fig_path = _fig_path(args)
    if fig_path:
        mu, var = gaussian.figure_overlay_params(args.n)
        ks = [r[0] for r in rows]
        ps = [float(r[1]) for r in rows]
        overlay = [float(r[2]) for r in rows]
        half = 6.0 * var ** 0.5
        lo = max(0, int(mu - half))
        hi = min(len(ks), int(mu + half) + 1)
        _render_curves(
            fig_path,
            [(ks[lo:hi], ps[lo:hi], "o", "exact probability"),
             (ks[lo:hi], overlay[lo:hi], "-",
              f"normal(mean={mu:.2f}, var={var:.2f})")],
            f"Summand counts over the interval with top index {args.n}",
            "summands beyond the forced leading term", "probability",
        )
    return 0


def _cmd_verify(args) -> int:
    sources = args.coeffs if args.coeffs else list(VERIFY_MATRIX)
    failures = 0
    for text in sources:
        spec = parse_spec(text)
        n = 0
        while True:
            n += 1
            if args.max_n and n > args.max_n:
                break
            lo, hi = oracle.interval(spec, n)
            if hi - lo > args.max_interval:
                break
            report = oracle.verify_bijection(spec, n)
            tag = "PASS" if report.passed else "FAIL"
            print(f"{tag} bijection coeffs='{spec}' n={n} "
                  f"interval={report.interval_size}")
            if not report.passed:
                failures += 1
                for value, count in report.counterexamples[:5]:
                    print(f"     counterexample N={value} representations={count}")
    reps = oracle.enumerate_fardiff(args.fardiff_index)
    from .sequences import fardiff_S

    smax = fardiff_S(args.fardiff_index)
    covered = all(v in reps for v in range(smax + 1))
    ok = covered and len(reps) == smax + 1
    print(f"{'PASS' if ok else 'FAIL'} fardiff-coverage max_index="
          f"{args.fardiff_index} values={len(reps)} expected={smax + 1}")
    failures += 0 if ok else 1
    for n in range(1, args.density_max_n + 1):
        table = zeck_density(n)
        hist = oracle.empirical_density(make_plrs([1, 1]), n)
        ok = all(table.prob(k - 1) * table.normalizer == hist.get(k, 0)
                 for k in range(0, n + 2)) and sum(hist.values()) == table.normalizer
        print(f"{'PASS' if ok else 'FAIL'} density-formula n={n}")
        failures += 0 if ok else 1
    for n in range(1, args.joint_max_n + 1):
        counts = joint_table(n).counts
        ok = counts == oracle.empirical_joint(n)
        print(f"{'PASS' if ok else 'FAIL'} joint-formula n={n}")
        failures += 0 if ok else 1
    print(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failing checks")
    return 0 if failures == 0 else 2


def _int_arg(text: str) -> int:
    return int(text)


def build_parser() -> _Parser:
    parser = _Parser(prog="zeck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seq", help="emit recurrence terms")
    _add_spec_options(p)
    p.add_argument("--count", type=int, default=20)
    _add_io_options(p, "csv")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("decompose", help="legal decomposition of an integer")
    _add_spec_options(p)
    p.add_argument("--n-value", type=_int_arg, required=True)
    _add_io_options(p, "json")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("zeck", help="Zeckendorf index set of an integer")
    p.add_argument("--n-value", type=_int_arg, required=True)
    _add_io_options(p, "json")
    p.set_defaults(func=_cmd_zeck)

    p = sub.add_parser("fardiff", help="far-difference signed representation")
    p.add_argument("--n-value", type=_int_arg, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.add_argument("--digits", type=int, default=6)
    p.set_defaults(func=_cmd_fardiff)

    p = sub.add_parser("density", help="summand-count density table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--source", choices=("formula", "empirical"), default="formula")
    _add_spec_options(p)
    _add_io_options(p, "csv")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("joint", help="joint positive/negative summand counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--source", choices=("formula", "oracle"), default="formula")
    _add_io_options(p, "csv")
    p.set_defaults(func=_cmd_joint)

    p = sub.add_parser("moments", help="exact mean/variance/skew/kurtosis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--convention", choices=("nonforced", "forced"),
                   default="nonforced")
    _add_io_options(p, "json")
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("gauss", help="standardized density vs normal grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--width", type=float, default=4.0,
                   help="half-width in standard deviations")
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--fig", help="render a figure to this path")
    p.add_argument("--no-fig", action="store_true",
                   help="suppress the default figure next to --out")
    _add_io_options(p, "csv")
    p.set_defaults(func=_cmd_gauss)

    p = sub.add_parser("stirling", help="smooth density factorization at k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=float, required=True)
    _add_io_options(p, "json")
    p.set_defaults(func=_cmd_stirling)

    p = sub.add_parser("fardiff-stats", help="joint moments of signed counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--source", choices=("formula", "oracle"), default="formula")
    _add_io_options(p, "json")
    p.set_defaults(func=_cmd_fardiff_stats)

    p = sub.add_parser("verify", help="run the exhaustive oracle checks")
    p.add_argument("--coeffs", action="append",
                   help="spec to verify (repeatable; default: built-in matrix)")
    p.add_argument("--all", action="store_true",
                   help="accepted for symmetry; the matrix is the default")
    p.add_argument("--max-interval", type=int, default=10**6)
    p.add_argument("--max-n", type=int, default=0)
    p.add_argument("--fardiff-index", type=int, default=20)
    p.add_argument("--density-max-n", type=int, default=20)
    p.add_argument("--joint-max-n", type=int, default=14)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("figure1", help="density-vs-normal plot data at large n")
    p.add_argument("--n", type=int, default=2010)
    p.add_argument("--fig", help="render a figure to this path")
    p.add_argument("--no-fig", action="store_true")
    _add_io_options(p, "csv")
    p.set_defaults(func=_cmd_figure1)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return 1
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"zeck: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"zeck: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
