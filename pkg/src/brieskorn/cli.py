"""Command line front end: analyze one sphere, or sweep a census.

Output is deterministic: identical arguments produce byte-identical stdout.
Nothing is colorized, so NO_COLOR is honored trivially.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .character import (
    ClassLabel,
    classify,
    count_report,
    enumerate_su2,
    phi_map,
    reversed_trace_check,
)
from .errors import (
    BrieskornError,
    InconsistentClassification,
    InvalidSeifertData,
    NotPairwiseCoprime,
    ValueTooSmall,
)
from .euler import enumerate_condition_b, reverse_orientation, seifert_from_euler
from .realize import realize_sl2r, realize_su2, verify_relations
from .seifert import (
    BrieskornParams,
    SeifertInvariant,
    canonicalize_params,
    euler_number,
    h1_order,
    solve_seifert,
    sphere_convention_sign,
)

CSV_COLUMNS = [
    "a1",
    "a2",
    "a3",
    "a",
    "total",
    "su2",
    "sl2r",
    "casson_abs",
    "casson_sl2c",
]
CSV_VERIFY_COLUMNS = CSV_COLUMNS + ["max_residual", "min_gap"]


def census_params(max_a: int) -> list[BrieskornParams]:
    """All canonical triples with a1*a2*a3 <= max_a, ascending product then lexicographic."""
    found: list[BrieskornParams] = []
    p = 2
    while p * (p + 1) * (p + 2) <= max_a:
        q = p + 1
        while p * q * (q + 1) <= max_a:
            if math.gcd(p, q) == 1:
                for r in range(q + 1, max_a // (p * q) + 1):
                    if math.gcd(p, r) == 1 and math.gcd(q, r) == 1:
                        found.append(canonicalize_params(p, q, r))
            q += 1
        p += 1
    found.sort(key=lambda params: (params.a, params.triple))
    return found


def parse_seifert_override(text: str, params: BrieskornParams) -> tuple[SeifertInvariant, str]:
    """Parse "b,b1,b2,b3", validate the +-1 normalization, and force b = 0.

    Data with b != 0 is folded into the second coefficient by the trade
    (b, b2) -> (0, b2 + a2*b), which leaves b + sum b_i/a_i unchanged.
    """
    try:
        numbers = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidSeifertData(f"cannot parse override {text!r}: {exc}") from None
    if len(numbers) != 4:
        raise InvalidSeifertData("override must be four integers b,b1,b2,b3")
    b, b1, b2, b3 = numbers
    a1, a2, a3 = params.triple
    sigma = SeifertInvariant(b, ((a1, b1), (a2, b2), (a3, b3)))
    sphere_convention_sign(sigma)  # raises if not +-1
    source = "override"
    if b != 0:
        sigma = SeifertInvariant(0, ((a1, b1), (a2, b2 + a2 * b), (a3, b3)))
        source = "override (normalized to b=0)"
    return sigma, source


def _triple_entry(triple, verify_report=None) -> dict:
    entry = {
        "epsilon": triple.epsilon,
        "angles": [str(t) for t in triple.angles],
        "traces": [str(tv) for tv in (triple.tx, triple.ty, triple.tz)],
        "values": [tv.value for tv in (triple.tx, triple.ty, triple.tz)],
    }
    if verify_report is not None:
        entry["verify"] = {
            "max_residual": verify_report.max_residual,
            "gap": verify_report.irreducibility_gap,
            "passed": verify_report.passed,
        }
    return entry


def build_record(
    params: BrieskornParams,
    sigma: SeifertInvariant,
    source: str,
    verify: bool = False,
    tol: float = 1e-9,
    condition_b: bool = False,
) -> dict:
    """Assemble the full analysis for one sphere; every assertion runs before emission."""
    counts = count_report(params)
    pairs = phi_map(params, sigma)
    su2_triples = enumerate_su2(params, sigma)
    if len(su2_triples) != counts.su2 or len(pairs) != counts.sl2r:
        raise InconsistentClassification("class lists disagree with the count report")

    verify_summaries = []

    def verified(triple, realizer):
        if not verify:
            return None
        X, Y = realizer(triple)
        report = verify_relations(X, Y, sigma, triple.epsilon, tol)
        if not report.passed:
            raise BrieskornError(
                f"relation residuals exceed tolerance on {params.triple}: "
                f"max residual {report.max_residual}, gap {report.irreducibility_gap}"
            )
        verify_summaries.append(report)
        return report

    sl2r_entries = []
    for eu, triple in pairs:
        label = classify(triple)
        if label is not ClassLabel.SL2R:
            raise InconsistentClassification(
                f"pulled-back class {eu} classified as {label.value}"
            )
        report = verified(triple, realize_sl2r)
        entry = {
            "euler_class": {"beta": eu.beta, "coefficients": list(eu.betas)},
            "cover_h1": h1_order(seifert_from_euler(eu, params)),
            "label": label.value,
        }
        entry.update(_triple_entry(triple, report))
        sl2r_entries.append(entry)

    su2_entries = []
    for triple in su2_triples:
        report = verified(triple, realize_su2)
        entry = {"label": ClassLabel.SU2.value}
        entry.update(_triple_entry(triple, report))
        su2_entries.append(entry)

    record = {
        "params": {
            "a1": params.a1,
            "a2": params.a2,
            "a3": params.a3,
            "a": params.a,
            "input_permutation": list(params.permutation),
        },
        "seifert": {
            "b": sigma.b,
            "coefficients": list(sigma.coefficients),
            "source": source,
            "euler_number": str(euler_number(sigma)),
            "h1_order": h1_order(sigma),
            "convention_sign": sphere_convention_sign(sigma),
        },
        "counts": {
            "total": counts.total,
            "su2": counts.su2,
            "sl2r": counts.sl2r,
            "casson_abs": counts.casson_abs,
            "casson_sl2c": counts.casson_sl2c,
        },
        "sl2r_classes": sl2r_entries,
        "su2_classes": su2_entries,
    }

    if condition_b:
        reversed_classes = enumerate_condition_b(params)
        partners = {reverse_orientation(eu) for eu, _ in pairs}
        if partners != set(reversed_classes):
            raise BrieskornError(
                f"orientation reversal is not a bijection on {params.triple}"
            )
        for eu, _ in pairs:
            if not reversed_trace_check(eu, sigma):
                raise BrieskornError(
                    f"reversed-orientation traces disagree for {eu} on {params.triple}"
                )
        record["condition_b_classes"] = [
            {
                "euler_class": {"beta": eu.beta, "coefficients": list(eu.betas)},
                "reverse_of": {
                    "beta": reverse_orientation(eu).beta,
                    "coefficients": list(reverse_orientation(eu).betas),
                },
            }
            for eu in reversed_classes
        ]

    if verify:
        record["verification"] = {
            "tol": tol,
            "classes": len(verify_summaries),
            "max_residual": max((r.max_residual for r in verify_summaries), default=0.0),
            "min_gap": min(
                (r.irreducibility_gap for r in verify_summaries), default=math.inf
            ),
            "passed": True,
        }
    return record


def render_text(record: dict) -> str:
    p = record["params"]
    s = record["seifert"]
    counts = record["counts"]
    lines = [
        f"Brieskorn sphere Sigma({p['a1']}, {p['a2']}, {p['a3']})   a = {p['a']}",
        "seifert data: {0; (1,%d), (%d,%d), (%d,%d), (%d,%d)}   [%s]"
        % (
            s["b"],
            p["a1"],
            s["coefficients"][0],
            p["a2"],
            s["coefficients"][1],
            p["a3"],
            s["coefficients"][2],
            s["source"],
        ),
        f"euler number {s['euler_number']}   h1 order {s['h1_order']}   convention sign {s['convention_sign']:+d}",
        "counts: total %d | su2 %d | sl2r %d | |casson| %d | sl2c casson %d"
        % (
            counts["total"],
            counts["su2"],
            counts["sl2r"],
            counts["casson_abs"],
            counts["casson_sl2c"],
        ),
    ]

    def format_triple(entry):
        exact = ", ".join(entry["traces"])
        decimal = ", ".join(f"{v:.12f}" for v in entry["values"])
        suffix = ""
        if "verify" in entry:
            v = entry["verify"]
            outcome = "pass" if v["passed"] else "FAIL"
            suffix = f"   [residual {v['max_residual']:.3e}, gap {v['gap']:.3e}: {outcome}]"
        return f"eps {entry['epsilon']:+d}   ({exact}) = ({decimal}){suffix}"

    if record["sl2r_classes"]:
        lines.append("sl2r classes:")
        for entry in record["sl2r_classes"]:
            eu = entry["euler_class"]
            eu_text = "(%d; %s)" % (eu["beta"], ",".join(map(str, eu["coefficients"])))
            lines.append(
                f"  {eu_text}  cover h1 {entry['cover_h1']}   " + format_triple(entry)
            )
    else:
        lines.append("sl2r classes: none (every irreducible class is unitary)")

    if record["su2_classes"]:
        lines.append("su2 classes:")
        for entry in record["su2_classes"]:
            lines.append("  " + format_triple(entry))
    else:
        lines.append("su2 classes: none")

    if "condition_b_classes" in record:
        lines.append("condition-b classes (orientation reversed):")
        for entry in record["condition_b_classes"]:
            eu = entry["euler_class"]
            partner = entry["reverse_of"]
            lines.append(
                "  (%d; %s) <- reverse of (%d; %s)"
                % (
                    eu["beta"],
                    ",".join(map(str, eu["coefficients"])),
                    partner["beta"],
                    ",".join(map(str, partner["coefficients"])),
                )
            )
        if not record["condition_b_classes"]:
            lines[-1] += " none"

    if "verification" in record:
        v = record["verification"]
        lines.append(
            "verification: %d classes, max residual %.3e, min gap %.3e, tol %g: PASS"
            % (v["classes"], v["max_residual"], v["min_gap"], v["tol"])
        )
    return "\n".join(lines) + "\n"


def _csv_row(record: dict, verify: bool) -> list:
    p, counts = record["params"], record["counts"]
    row = [
        p["a1"],
        p["a2"],
        p["a3"],
        p["a"],
        counts["total"],
        counts["su2"],
        counts["sl2r"],
        counts["casson_abs"],
        counts["casson_sl2c"],
    ]
    if verify:
        v = record["verification"]
        row += [repr(v["max_residual"]), repr(v["min_gap"])]
    return row


def render_csv(records: list[dict], verify: bool) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_VERIFY_COLUMNS if verify else CSV_COLUMNS)
    for record in records:
        writer.writerow(_csv_row(record, verify))
    return buffer.getvalue()


def _census_text_row(record: dict) -> str:
    p, counts = record["params"], record["counts"]
    text = "(%d,%d,%d) a=%d total=%d su2=%d sl2r=%d |casson|=%d sl2c=%d" % (
        p["a1"],
        p["a2"],
        p["a3"],
        p["a"],
        counts["total"],
        counts["su2"],
        counts["sl2r"],
        counts["casson_abs"],
        counts["casson_sl2c"],
    )
    if "verification" in record:
        v = record["verification"]
        text += f" max_residual={v['max_residual']:.3e} min_gap={v['min_gap']:.3e}"
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brieskorn",
        description="Representation classes of Brieskorn homology spheres",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full analysis of one sphere")
    analyze.add_argument("a1", type=int)
    analyze.add_argument("a2", type=int)
    analyze.add_argument("a3", type=int)
    analyze.add_argument(
        "--seifert",
        metavar="b,b1,b2,b3",
        help="override the canonical Seifert data (must satisfy a*(b + sum b_i/a_i) = +-1)",
    )
    analyze.add_argument("--condition-b", action="store_true", dest="condition_b")
    analyze.add_argument("--output", "-o", help="write to this file instead of stdout")

    census = sub.add_parser("census", help="sweep all spheres with a1*a2*a3 <= MAX_A")
    census.add_argument("max_a", type=int)

    for p in (analyze, census):
        p.add_argument("--verify", action="store_true")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _run_analyze(args) -> int:
    params = canonicalize_params(args.a1, args.a2, args.a3)
    if args.seifert:
        sigma, source = parse_seifert_override(args.seifert, params)
    else:
        sigma, source = solve_seifert(params), "canonical"
    record = build_record(
        params,
        sigma,
        source,
        verify=args.verify,
        tol=args.tol,
        condition_b=args.condition_b,
    )
    if args.format == "json":
        text = json.dumps(record, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        text = render_csv([record], args.verify)
    else:
        text = render_text(record)
    _emit(text, args.output)
    return 0


def _run_census(args) -> int:
    if args.max_a < 30:
        print("error: census needs max_a >= 30 (smallest sphere is (2,3,5))", file=sys.stderr)
        return 2
    out = sys.stdout
    if args.format == "csv":
        out.write(
            ",".join(CSV_VERIFY_COLUMNS if args.verify else CSV_COLUMNS) + "\n"
        )
    rows = 0
    sum_sl2c = sum_abs = sum_sl2r = 0
    for params in census_params(args.max_a):
        try:
            record = build_record(
                params,
                solve_seifert(params),
                "canonical",
                verify=args.verify,
                tol=args.tol,
            )
        except BrieskornError as exc:
            print(
                f"census aborted at ({params.a1},{params.a2},{params.a3}): {exc}",
                file=sys.stderr,
            )
            return 1
        counts = record["counts"]
        rows += 1
        sum_sl2c += counts["casson_sl2c"]
        sum_abs += counts["casson_abs"]
        sum_sl2r += counts["sl2r"]
        if args.format == "json":
            out.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
        elif args.format == "csv":
            buffer = io.StringIO()
            csv.writer(buffer, lineterminator="\n").writerow(
                _csv_row(record, args.verify)
            )
            out.write(buffer.getvalue())
        else:
            out.write(_census_text_row(record) + "\n")
    if sum_sl2c - 2 * sum_abs != sum_sl2r:
        print("census identity sl2c - 2|casson| = sl2r failed in aggregate", file=sys.stderr)
        return 1
    print(
        f"census ok: {rows} spheres, aggregate identity sl2c - 2|casson| = sl2r = {sum_sl2r}",
        file=sys.stderr,
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _run_analyze(args)
        return _run_census(args)
    except (ValueTooSmall, NotPairwiseCoprime, InvalidSeifertData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrieskornError as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
