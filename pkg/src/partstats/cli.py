"""Command-line interface: every capability as a deterministic subcommand.

Exit codes: 0 success, 1 user error (single-line diagnostic on stderr),
2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import asymptotics, recursions, shifted_bell, statistics
from .exactnum import bell, bell_mod_table
from .partitions import PartitionError, enumerate_partitions, parse_partition
from .statistics import StatisticError

BRUTE_GUARD = 14


class CliError(Exception):
    """User-facing error; printed as one line, exit code 1."""


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_statistic(path: str) -> statistics.Statistic:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise CliError("cannot read pattern file: %s" % e)
    try:
        return statistics.parse_pattern(text)
    except StatisticError as e:
        raise CliError("invalid pattern: %s" % e)


def _guard_n(n: int, force: bool) -> None:
    if n > BRUTE_GUARD and not force:
        raise CliError(
            "n=%d exceeds the brute-force guard (%d); pass --force to override"
            % (n, BRUTE_GUARD)
        )


def _csv(rows) -> str:
    return "value,count\n" + "".join("%d,%d\n" % (v, c) for v, c in rows)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_bell(args) -> None:
    if args.max < 0:
        raise CliError("--max must be nonnegative")
    if args.mod is not None:
        if args.mod < 2:
            raise CliError("--mod must be at least 2")
        values = bell_mod_table(args.max, args.mod)
    else:
        values = [bell(n) for n in range(args.max + 1)]
    _write(args, "n,bell\n" + "".join("%d,%d\n" % (n, v) for n, v in enumerate(values)))


def _brute_dim_distribution(n: int) -> dict:
    d = statistics.builtin("dimension")
    hist: dict = {}
    for lam in enumerate_partitions(n):
        v = int(d.evaluate(lam))
        hist[v] = hist.get(v, 0) + 1
    return hist


def _brute_int_distribution(n: int) -> dict:
    hist: dict = {}
    for lam in enumerate_partitions(n):
        arcs = lam.arcs()
        v = sum(
            1
            for e1, f1 in arcs
            for e2, f2 in arcs
            if e1 < e2 < f1 < f2
        )
        hist[v] = hist.get(v, 0) + 1
    return hist


def _cmd_dist(args) -> None:
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    if args.brute:
        _guard_n(args.n, args.force)
        hist = (
            _brute_dim_distribution(args.n)
            if args.target == "dim"
            else _brute_int_distribution(args.n)
        )
    else:
        hist = (
            recursions.dim_distribution(args.n)
            if args.target == "dim"
            else recursions.int_distribution(args.n)
        )
    _write(args, _csv(sorted(hist.items())))


def _cmd_moments(args) -> None:
    if args.n < 0 or args.k < 0:
        raise CliError("--n and --k must be nonnegative")
    if args.target == "dim":
        values = recursions.dim_moments(args.k, args.n)
    else:
        values = recursions.int_moments(args.k, args.n)
    _write(args, "k,moment\n" + "".join("%d,%d\n" % (k, v) for k, v in enumerate(values)))


def _cmd_eval(args) -> None:
    f = _load_statistic(args.pattern)
    try:
        lam = parse_partition(args.partition)
    except PartitionError as e:
        raise CliError("invalid partition: %s" % e)
    _write(args, "%s\n" % f.evaluate(lam))


def _cmd_aggregate(args) -> None:
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    _guard_n(args.n, args.force)
    f = _load_statistic(args.pattern)
    _write(args, "%s\n" % statistics.aggregate(f, args.n))


def _fit_target(target: str, k: int) -> shifted_bell.ShiftedBellPolynomial:
    if k < 1:
        raise CliError("--k must be at least 1")
    profile = shifted_bell.profile_dim(k) if target == "dim" else shifted_bell.profile_int(k)
    points = shifted_bell.default_sample_points(profile)
    if target == "dim":
        moments = recursions.dim_moments_range(k, max(points))
    else:
        moments = recursions.int_moments_range(k, max(points))
    samples = [(n, moments[n][k]) for n in points]
    return shifted_bell.fit(samples, profile)


def _cmd_fit(args) -> None:
    import json

    if args.target:
        result = _fit_target(args.target, args.k)
    elif args.pattern:
        f = _load_statistic(args.pattern)
        deg = args.profile_degree if args.profile_degree is not None else f.degree()
        pk = args.profile_k if args.profile_k is not None else max(
            (s.pattern.k for _, s in f.terms), default=0
        )
        profile = shifted_bell.profile_generic(deg, pk)
        points = shifted_bell.default_sample_points(profile)
        _guard_n(max(points), args.force)
        samples = [(n, statistics.aggregate(f, n)) for n in points]
        try:
            result = shifted_bell.fit(samples, profile)
        except shifted_bell.FitError as e:
            raise CliError("fit failed: %s" % e)
    else:
        raise CliError("fit needs either --target or --pattern")
    text = result.canonical_text() + "\n" + json.dumps(result.to_dict(), sort_keys=True) + "\n"
    _write(args, text)


def _cmd_asym(args) -> None:
    from fractions import Fraction

    n = args.n
    if n < 2:
        raise CliError("--n must be at least 2")
    fitted = _fit_target(args.target, 1)
    exact_mean = Fraction(fitted.evaluate(n), bell(n))
    mean_est = (
        asymptotics.dim_moment_asym(n)[0]
        if args.target == "dim"
        else asymptotics.int_moment_asym(n)[0]
    )
    a = asymptotics.alpha(n)
    lines = [
        "quantity,exact,asymptotic,rel_error",
        "alpha,%.12g,%.12g,0" % (a.alpha, a.alpha),
        "mean,%.12g,%.12g,%.3e"
        % (float(exact_mean), mean_est, abs(mean_est / float(exact_mean) - 1.0)),
    ]
    exact_log = asymptotics.log_bell_exact(n)
    for order in (0, 1, 2):
        est = asymptotics.log_bell_asym(n, 0, order).log_value
        import math

        lines.append(
            "log_bell_T%d,%.12g,%.12g,%.3e"
            % (order, exact_log, est, abs(math.exp(est - exact_log) - 1.0))
        )
    _write(args, "\n".join(lines) + "\n")


_PLOT_TEMPLATE = """\
#!/usr/bin/env python3
# Auto-generated histogram plot script.
import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

values, counts = [], []
with open({csv!r}) as fh:
    for row in csv.DictReader(fh):
        values.append(int(row["value"]))
        counts.append(int(row["count"]))

plt.figure(figsize=(8, 5))
plt.bar(values, counts, width=0.9, color="steelblue")
plt.xlabel("value")
plt.ylabel("count")
plt.title({title!r})
plt.tight_layout()
plt.savefig({png!r}, dpi=150)
"""


def _cmd_plot(args) -> None:
    script = _PLOT_TEMPLATE.format(
        csv=args.input,
        title="distribution: %s" % args.input,
        png=args.input.rsplit(".", 1)[0] + ".png",
    )
    with open(args.out, "w") as fh:
        fh.write(script)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # map argparse errors to exit code 1
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="partstats", description="Exact set-partition statistics toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bell", help="Bell numbers, optionally reduced mod M")
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--mod", type=int, default=None)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_bell)

    sp = sub.add_parser("dist", help="exact distribution of dim or int exponent")
    sp.add_argument("target", choices=["dim", "int"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--brute", action="store_true", help="oracle path via enumeration")
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_dist)

    sp = sub.add_parser("moments", help="exact moments via the DP recursions")
    sp.add_argument("target", choices=["dim", "int"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_moments)

    sp = sub.add_parser("eval", help="evaluate a pattern statistic on one partition")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_eval)

    sp = sub.add_parser("aggregate", help="sum a pattern statistic over all of Pi(n)")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_aggregate)

    sp = sub.add_parser("fit", help="fit a shifted Bell polynomial")
    sp.add_argument("--target", choices=["dim", "int"])
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--pattern")
    sp.add_argument("--profile-degree", type=int, default=None)
    sp.add_argument("--profile-k", type=int, default=None)
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_fit)

    sp = sub.add_parser("asym", help="asymptotic vs exact comparison table")
    sp.add_argument("--target", choices=["dim", "int"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_asym)

    sp = sub.add_parser("plot", help="emit a matplotlib script for a CSV histogram")
    sp.add_argument("--input", required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=_cmd_plot)

    return p


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
        return 0
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except (StatisticError, PartitionError, shifted_bell.FitError, shifted_bell.DomainError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except Exception as e:  # internal invariant violation
        print("internal error: %s" % e, file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
