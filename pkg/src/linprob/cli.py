"""Command-line front end.

Exit status is 0 on success, 1 when an input violates a precondition, and
2 for usage errors. Nothing is written to stdout unless the whole command
succeeds.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import math
import re
import sys

from . import bayes, contingency, continuous, core, horizon, meta
from .errors import LinProbError
from .readers import LabeledTable, read_sample_csv, read_table_csv
from .records import format_records

DEFAULT_FORMAT = ".4g"
FIELD_FORMATS = {
    "c_t": ".5g",
    "c_chi": ".5g",
    "c": ".5g",
    "certainty": ".5g",
    "raw_sum": ".5g",
    "corrected": ".5g",
    "p_t": ".3g",
    "p_chi": ".3g",
    "p": ".3g",
    "p_value": ".3g",
    "probability_replicates": ".5g",
    "raw_mean": ".7g",
    "raw_sd": ".6g",
    "w_mean": ".5g",
    "w_sd": ".4g",
    "back_mean": ".7g",
    "back_sd": ".6g",
    "mean_difference": ".4g",
    "sd_difference": ".4g",
}

# "--impacts -0.09,1.39" would otherwise be read as an unknown option
_NEGATIVE_VALUE = re.compile(r"-\.?[0-9]")


class UsageError(Exception):
    pass


def _display(key, value):
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        if math.isinf(value) or math.isnan(value):
            return str(value)
        return format(value, FIELD_FORMATS.get(key, DEFAULT_FORMAT))
    if isinstance(value, (list, tuple)):
        return ",".join(_display(key, v) for v in value)
    return str(value)


def render_table(records: list[dict]) -> str:
    """Fields as rows, one column per record."""
    keys = []
    for rec in records:
        for key in rec:
            if key not in keys and key not in ("kind", "notes"):
                keys.append(key)
    cells = [[_display(k, rec[k]) if k in rec else "" for rec in records] for k in keys]
    name_w = max(len(k) for k in keys)
    col_w = [max(len(row[j]) for row in cells) for j in range(len(records))]
    lines = []
    for key, row in zip(keys, cells):
        lines.append(
            "  ".join([key.ljust(name_w)] + [v.rjust(w) for v, w in zip(row, col_w)]).rstrip()
        )
    for rec in records:
        label = rec.get("label", "")
        for note in rec.get("notes", ()):
            lines.append(f"note[{label}]: {note}" if label else f"note: {note}")
    return "\n".join(lines) + "\n"


def _floats(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _fields(obj):
    if dataclasses.is_dataclass(obj):
        return {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)}
    return dict(obj._asdict())


# -- subcommands ---------------------------------------------------------


def _cmd_convert(args):
    if args.prob is not None:
        p = args.prob
        return [{"kind": "convert", "probability": p, "odds": core.odds(p),
                 "weight": core.prob_to_weight(p)}]
    if args.weight is not None:
        p = core.weight_to_prob(args.weight)
        return [{"kind": "convert", "weight": args.weight, "probability": p,
                 "odds": core.odds(p) if 0.0 < p < 1.0 else math.inf}]
    c = core.certainty_from_p(args.p_value)
    return [{"kind": "convert", "p_value": args.p_value, "certainty": c,
             "certainty_band": core.classify_certainty(c)}]


def _inline_table(args, names=("a", "b", "c", "d")):
    given = [getattr(args, n) for n in names]
    if args.input is not None:
        if any(v is not None for v in given):
            raise UsageError("give either --input or the inline cell counts, not both")
        return None
    if any(v is None for v in given):
        raise UsageError("give --input FILE or all of --a --b --c --d")
    return LabeledTable(args.label, contingency.TwoByTwoTable(*given))


def _tables(args):
    inline = _inline_table(args)
    return [inline] if inline is not None else read_table_csv(args.input)


def _cmd_table(args):
    records = []
    for label, table in _tables(args):
        report = contingency.analyze_2x2(table, haldane=args.haldane)
        rec = {"kind": "contingency", "label": label,
               "a": table.a, "b": table.b, "c": table.c, "d": table.d}
        rec.update(_fields(report))
        records.append(rec)
    return records


def _cmd_testchar(args):
    if args.sensitivity is not None or args.specificity is not None:
        if args.sensitivity is None or args.specificity is None:
            raise UsageError("--sensitivity and --specificity go together")
        if args.input is not None or any(getattr(args, n) is not None for n in "abcd"):
            raise UsageError("give either rates or a table, not both")
        tc = contingency.characteristics_from_rates(args.sensitivity, args.specificity)
        return [dict({"kind": "testchar", "label": args.label}, **_fields(tc))]
    records = []
    for label, table in _tables(args):
        tc = contingency.test_characteristics(table)
        records.append(dict({"kind": "testchar", "label": label}, **_fields(tc)))
    return records


def _cmd_chain(args):
    if (args.pretest_p is None) == (args.pretest_w is None):
        raise UsageError("give exactly one of --pretest-p or --pretest-w")
    impacts = args.impacts
    labels = args.labels.split(",") if args.labels else None
    if labels is not None:
        if len(labels) != len(impacts):
            raise UsageError("--labels needs one label per impact")
        impacts = list(zip(labels, impacts))
    report = bayes.run_chain(
        impacts, pretest_probability=args.pretest_p, pretest_weight=args.pretest_w
    )
    return [{
        "kind": "chain",
        "pretest_weight": report.pretest_weight,
        "pretest_probability": report.pretest_probability,
        "step_labels": [s.label for s in report.steps],
        "step_impacts": [s.impact for s in report.steps],
        "running_weights": [s.running_weight for s in report.steps],
        "running_probabilities": [s.running_probability for s in report.steps],
        "posttest_weight": report.posttest_weight,
        "posttest_probability": report.posttest_probability,
    }]


def _cmd_project(args):
    if args.tau is not None:
        if args.control_rate is not None or args.duration is not None:
            raise UsageError("give either --tau or --control-rate with --duration")
        tau = args.tau
    else:
        if args.control_rate is None or args.duration is None:
            raise UsageError("give --tau, or both --control-rate and --duration")
        tau = horizon.fit_tau(args.control_rate, args.duration)
    return [
        dict({"kind": "projection", "impact": args.impact},
             **_fields(horizon.project(args.impact, tau, h)))
        for h in args.horizon
    ]


def _cmd_maximal(args):
    return [dict({"kind": "maximal"}, **_fields(horizon.maximal_effect(args.impact)))]


def _cmd_combine(args):
    combined = meta.combine_certainties(args.certainties, normal_data=not args.non_normal)
    return [dict({"kind": "combine"}, **_fields(combined))]


def _cmd_adjust(args):
    return [{"kind": "adjust", "certainty": args.certainty, "num_tests": args.tests,
             "adjusted": meta.multiplicity_adjust(args.certainty, args.tests)}]


def _cmd_replication(args):
    return [dict({"kind": "replication"}, **_fields(meta.replication_probability(c)))
            for c in args.certainty]


def _cmd_regress(args):
    result = meta.regression_certainty(args.r_squared, args.n)
    return [dict({"kind": "regression", "r_squared": args.r_squared, "n": args.n},
                 **_fields(result))]


def _cmd_sample(args):
    samples = read_sample_csv(args.input)
    records = [dict({"kind": "sample", "label": s.label, "size": len(s)},
                    **_fields(continuous.sample_stats(s)))
               for s in samples]
    if args.compare:
        wanted = args.compare.split(",")
        if len(wanted) != 2:
            raise UsageError("--compare needs exactly two labels: FIRST,SECOND")
        by_label = {s.label: s for s in samples}
        missing = [w for w in wanted if w not in by_label]
        if missing:
            raise LinProbError(f"no sample labelled {missing[0]!r} in {args.input}")
        result = continuous.two_sample_w_test(
            by_label[wanted[0]], by_label[wanted[1]], equal_var=args.pooled
        )
        records.append(dict({"kind": "two_sample", "label": f"{wanted[1]} vs {wanted[0]}"},
                            **_fields(result)))
    return records


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linprob", description="Probability analysis in log10-odds (Weight) space."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "structured"), default="table")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("convert", parents=[common], help="probability <-> Weight, p -> Certainty")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--prob", type=float)
    g.add_argument("--weight", type=float)
    g.add_argument("--p-value", type=float)
    p.set_defaults(func=_cmd_convert)

    def table_inputs(p):
        p.add_argument("--input", metavar="CSV", help="file with header label,a,b,c,d")
        for name in "abcd":
            p.add_argument(f"--{name}", type=int)
        p.add_argument("--label", default="table")

    p = sub.add_parser("table", parents=[common], help="full 2x2 table analysis")
    table_inputs(p)
    p.add_argument("--haldane", action="store_true", help="add 0.5 to all cells if any is zero")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("testchar", parents=[common], help="diagnostic test Impacts")
    table_inputs(p)
    p.add_argument("--sensitivity", type=float)
    p.add_argument("--specificity", type=float)
    p.set_defaults(func=_cmd_testchar)

    p = sub.add_parser("chain", parents=[common], help="additive Bayes updating")
    p.add_argument("--pretest-p", type=float)
    p.add_argument("--pretest-w", type=float)
    p.add_argument("--impacts", type=_floats, required=True, help="comma-separated Impacts")
    p.add_argument("--labels", help="comma-separated step labels")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("project", parents=[common], help="project a trial to other horizons")
    p.add_argument("--impact", type=float, required=True)
    p.add_argument("--tau", type=float)
    p.add_argument("--control-rate", type=float)
    p.add_argument("--duration", type=float)
    p.add_argument("--horizon", type=_floats, required=True, help="comma-separated years")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("maximal", parents=[common], help="maximal ARR and minimal NNT")
    p.add_argument("--impact", type=float, required=True)
    p.set_defaults(func=_cmd_maximal)

    p = sub.add_parser("combine", parents=[common], help="sum Certainties across studies")
    p.add_argument("--certainties", type=_floats, required=True)
    p.add_argument("--non-normal", action="store_true")
    p.set_defaults(func=_cmd_combine)

    p = sub.add_parser("adjust", parents=[common], help="multiplicity adjustment")
    p.add_argument("--certainty", type=float, required=True)
    p.add_argument("--tests", type=int, required=True)
    p.set_defaults(func=_cmd_adjust)

    p = sub.add_parser("replication", parents=[common], help="chance a repeat study has p < 0.05")
    p.add_argument("--certainty", type=_floats, required=True)
    p.set_defaults(func=_cmd_replication)

    p = sub.add_parser("regress", parents=[common], help="Certainty of a correlation")
    p.add_argument("--r-squared", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_regress)

    p = sub.add_parser("sample", parents=[common], help="proportion sample statistics")
    p.add_argument("--input", required=True, metavar="CSV", help="file with header label,value")
    p.add_argument("--compare", metavar="FIRST,SECOND", help="two-sample test, Impact = SECOND - FIRST")
    p.add_argument("--pooled", action="store_true", help="pooled-variance t-test instead of Welch")
    p.set_defaults(func=_cmd_sample)
    return parser


def _join_negative_values(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def parse_and_dispatch(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        records = args.func(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"linprob {args.command}: error: {exc}", file=stderr)
        return 2
    except (LinProbError, OSError) as exc:
        print(f"linprob {args.command}: error: {exc}", file=stderr)
        return 1
    if args.format == "structured":
        stdout.write(format_records(records))
    elif records:
        stdout.write(render_table(records))
    return 0


def main(argv=None) -> int:
    return parse_and_dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
