"""Command-line surface: parse ideals, run analyses, emit reports.

Exit codes: 0 success, 1 parse/input error, 2 enumeration guard
exceeded, 3 internal invariant violation (a failed theorem check or a
broken complex). Diagnostics go to stderr; results to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    GuardExceeded,
    InternalInvariantError,
    InvalidIdealError,
    IdealSyntaxError,
    FuzzFailure,
    MonodomError,
    UnknownVariableError,
)
from .dominance import odom_by_dominance
from .monomials import MonomialIdeal, parse_ideal, polarize
from .nets import minimal_nets, odom_by_nets
from .resolution import RATIONAL, PrimeField, betti_oracle, minimize
from .taylor import scarf_basis
from .verify import FuzzParams, InvariantReport, check_report, fuzz


def _field_from_args(args):
    if getattr(args, "field", "rational") == "fp":
        return PrimeField(getattr(args, "prime", 32003))
    return RATIONAL


def _load_ideal(args) -> MonomialIdeal:
    text = args.ideal
    if text is None:
        raise InvalidIdealError("no ideal given; pass --ideal TEXT (or '-' for stdin)")
    if text == "-":
        text = sys.stdin.read()
    var_names = None
    if args.vars:
        var_names = [v.strip() for v in args.vars.split(",") if v.strip()]
    return parse_ideal(text, var_names)


def emit_json(report: InvariantReport) -> str:
    """Stable-key JSON rendering of a full report."""
    ideal = report.ideal
    pol = report.polarized
    multigraded = sorted(
        ((i, m) for (i, m) in report.betti.multigraded),
        key=lambda key: (key[0], key[1].exponents),
    )
    payload = {
        "ideal": ideal.render(),
        "vars": list(ideal.table.names),
        "n": ideal.n,
        "q": ideal.q,
        "field": report.field_name,
        "codim": report.codim,
        "odom": report.odom,
        "pd": report.pd,
        "betti": list(report.betti.total),
        "graded_betti": [
            [i, j, c] for (i, j), c in sorted(report.betti.graded.items())
        ],
        "multigraded_betti": [
            [i, str(m), report.betti.multigraded[(i, m)]] for i, m in multigraded
        ],
        "taylor_minimal": report.taylor_minimal,
        "scarf": report.scarf,
        "complete_intersection": report.complete_intersection,
        "cohen_macaulay": report.cohen_macaulay,
        "minimal_nets": {
            "base": [list(net.names(ideal)) for net in report.nets_base],
            "polarized": [list(net.names(pol)) for net in report.nets_polarized],
        },
        "witnesses": {
            "dominant_set": [
                str(m) for m in report.dominance_witness.member_monomials(ideal)
            ],
            "net": [pol.table.names[v] for v in report.net_witness.variables],
        },
        "checks": [{"name": c.name, "status": c.status} for c in report.checks],
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def _print_report(report: InvariantReport) -> None:
    ideal = report.ideal
    pol = report.polarized
    print(f"ideal:        ({ideal.render()})")
    print(f"ring:         k[{', '.join(ideal.table.names)}]   (n = {ideal.n}, q = {ideal.q})")
    print(f"field:        {report.field_name}")
    print(f"codim:        {report.codim}")
    print(f"odom:         {report.odom}   (dominance {report.odom_dominance}, nets {report.odom_nets})")
    print(f"pd:           {report.pd}")
    print(f"betti:        {list(report.betti.total)}")
    print(f"taylor minimal: {report.taylor_minimal}")
    print(f"scarf:          {report.scarf}")
    print(f"complete int.:  {report.complete_intersection}")
    print(f"cohen-macaulay: {report.cohen_macaulay}")
    print("minimal nets:")
    for net in report.nets_base:
        print(f"  {{{', '.join(net.names(ideal))}}}")
    print("minimal nets of the polarization:")
    for net in report.nets_polarized:
        print(f"  {{{', '.join(net.names(pol))}}}")
    w = report.dominance_witness
    pairs = ", ".join(
        f"{m} (in {x})"
        for m, x in zip(w.member_monomials(ideal), w.variable_names(ideal))
    )
    print(f"dominant witness: {pairs}")
    print(
        "net witness:      {"
        + ", ".join(pol.table.names[v] for v in report.net_witness.variables)
        + "}"
    )
    print("checks:")
    for c in report.checks:
        mark = {"pass": "ok ", "vacuous": "---", "fail": "FAIL"}[c.status]
        print(f"  [{mark}] {c.name}: {c.detail}")


def _cmd_analyze(args) -> int:
    ideal = _load_ideal(args)
    report = check_report(ideal, _field_from_args(args))
    if args.json:
        print(emit_json(report))
    else:
        _print_report(report)
    return 0 if report.ok else 3


def _cmd_betti(args) -> int:
    ideal = _load_ideal(args)
    field = _field_from_args(args)
    table = betti_oracle(ideal, field) if args.oracle else minimize(ideal, field)[1]
    if args.json:
        multigraded = sorted(table.multigraded, key=lambda k: (k[0], k[1].exponents))
        print(
            json.dumps(
                {
                    "betti": list(table.total),
                    "graded_betti": [[i, j, c] for (i, j), c in sorted(table.graded.items())],
                    "multigraded_betti": [
                        [i, str(m), table.multigraded[(i, m)]] for i, m in multigraded
                    ],
                    "pd": table.pd,
                    "field": table.field_name,
                },
                sort_keys=True,
                indent=2,
            )
        )
        return 0
    print(f"betti: {list(table.total)}   pd = {table.pd}")
    print("graded (i, j -> count):")
    for (i, j), c in sorted(table.graded.items()):
        print(f"  ({i}, {j}) -> {c}")
    print("multigraded (i, monomial -> count):")
    for i, m in sorted(table.multigraded, key=lambda k: (k[0], k[1].exponents)):
        print(f"  ({i}, {m}) -> {table.multigraded[(i, m)]}")
    return 0


def _cmd_resolution(args) -> int:
    ideal = _load_ideal(args)
    field = _field_from_args(args)
    cx, table = minimize(ideal, field)
    strata = cx.surviving_symbols()
    if args.json:
        payload = {
            "betti": list(table.total),
            "strata": [
                [sym.label(ideal) for sym in syms] for syms in strata if syms
            ],
        }
        if args.show_matrices:
            payload["matrices"] = _matrix_payload(cx, ideal)
        print(json.dumps(payload, sort_keys=True, indent=2))
        return 0
    print(f"minimal free resolution of the quotient; betti {list(table.total)}")
    for h, syms in enumerate(strata):
        if not syms:
            continue
        print(f"degree {h}:")
        for sym in syms:
            print(f"  {sym.label(ideal)}   mdeg {sym.mdeg}")
    if args.show_matrices:
        for s in range(1, cx.q + 1):
            mat = cx.mats[s]
            if not any(mat.values()):
                continue
            print(f"matrix f_{s}:")
            for sigma in cx.strata[s]:
                col = mat.get(sigma)
                if not col:
                    continue
                for tau in sorted(col):
                    mono = cx.mdeg(sigma).quotient(cx.mdeg(tau))
                    print(
                        f"  {_label(cx, tau)} <- {_label(cx, sigma)}: "
                        f"{col[tau]} * {mono}"
                    )
    return 0


def _label(cx, mask: int) -> str:
    from .taylor import members_of

    if mask == 0:
        return "[0]"
    return "[" + ", ".join(str(cx.ideal.generators[i]) for i in members_of(mask)) + "]"


def _matrix_payload(cx, ideal):
    out = {}
    for s in range(1, cx.q + 1):
        entries = []
        for sigma in cx.strata[s]:
            for tau in sorted(cx.mats[s].get(sigma, {})):
                entries.append(
                    [
                        _label(cx, tau),
                        _label(cx, sigma),
                        str(cx.mats[s][sigma][tau]),
                        str(cx.mdeg(sigma).quotient(cx.mdeg(tau))),
                    ]
                )
        if entries:
            out[str(s)] = entries
    return out


def _cmd_nets(args) -> int:
    ideal = _load_ideal(args)
    target = polarize(ideal) if args.polarized else ideal
    family = minimal_nets(target)
    if args.json:
        print(
            json.dumps(
                {
                    "polarized": args.polarized,
                    "minimal_nets": [list(net.names(target)) for net in family],
                    "min_card": family.min_card,
                    "max_card": family.max_card,
                },
                sort_keys=True,
                indent=2,
            )
        )
        return 0
    label = "polarization" if args.polarized else "ideal"
    print(
        f"{len(family)} minimal nets of the {label} "
        f"(cardinalities {family.min_card}..{family.max_card}):"
    )
    for net in family:
        print(f"  {{{', '.join(net.names(target))}}}")
    return 0


def _cmd_odom(args) -> int:
    ideal = _load_ideal(args)
    results = {}
    if args.method in ("dominant-sets", "both"):
        value, witness = odom_by_dominance(ideal)
        results["dominant-sets"] = (
            value,
            [str(m) for m in witness.member_monomials(ideal)],
        )
    if args.method in ("nets", "both"):
        value, net = odom_by_nets(ideal)
        pol = polarize(ideal)
        results["nets"] = (value, [pol.table.names[v] for v in net.variables])
    if args.json:
        print(
            json.dumps(
                {
                    method: {"odom": value, "witness": witness}
                    for method, (value, witness) in sorted(results.items())
                },
                sort_keys=True,
                indent=2,
            )
        )
    else:
        for method, (value, witness) in sorted(results.items()):
            print(f"odom = {value}   via {method}, witness {witness}")
    if len(results) == 2:
        a, b = (v for v, _ in results.values())
        if a != b:
            print("error: the two routes disagree", file=sys.stderr)
            return 3
    return 0


def _cmd_scarf(args) -> int:
    ideal = _load_ideal(args)
    field = _field_from_args(args)
    basis = scarf_basis(ideal)
    betti = minimize(ideal, field)[1]
    verdict = basis.ranks == betti.total
    if args.json:
        print(
            json.dumps(
                {
                    "scarf_basis": [sym.label(ideal) for sym in basis.symbols],
                    "ranks": list(basis.ranks),
                    "betti": list(betti.total),
                    "is_scarf": verdict,
                },
                sort_keys=True,
                indent=2,
            )
        )
        return 0
    print(f"scarf ranks: {list(basis.ranks)}   betti: {list(betti.total)}   is_scarf: {verdict}")
    for sym in basis.symbols:
        print(f"  {sym.label(ideal)}   mdeg {sym.mdeg}")
    return 0


def _cmd_polarize(args) -> int:
    ideal = _load_ideal(args)
    pol = polarize(ideal)
    if args.json:
        print(
            json.dumps(
                {"ideal": pol.render(), "vars": list(pol.table.names)},
                sort_keys=True,
                indent=2,
            )
        )
    else:
        print(pol.render())
    return 0


def _cmd_verify(args) -> int:
    params = FuzzParams(
        n_max=args.n_max,
        q_max=args.q_max,
        exp_max=args.exp_max,
        trials=args.trials,
        seed=args.seed,
        exhaustive=args.exhaustive,
    )
    summary = fuzz(params, _field_from_args(args))
    if args.json:
        print(json.dumps(summary.to_dict(), sort_keys=True, indent=2))
        return 0
    print(f"{summary.ideal_count} ideals, zero failures")
    for name, tally in sorted(summary.check_tally.items()):
        shown = ", ".join(f"{k} {v}" for k, v in sorted(tally.items()))
        print(f"  {name}: {shown}")
    print(f"pd - odom gaps: {dict(sorted(summary.gap_histogram.items()))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monodom",
        description="Minimal resolutions and dominance invariants of monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", help="generator list, e.g. 'a^2*e, b^3*f' ('-' reads stdin)")
    common.add_argument("--vars", help="comma-separated variable list fixing the ambient ring")
    common.add_argument("--json", action="store_true", help="emit JSON to stdout")
    common.add_argument(
        "--field", choices=["rational", "fp"], default="rational",
        help="scalar field for the engine (default: rational)",
    )
    common.add_argument("--prime", type=int, default=32003, help="prime for --field fp")

    sub.add_parser("analyze", parents=[common], help="full invariant report with theorem checks")

    p_betti = sub.add_parser("betti", parents=[common], help="total/graded/multigraded Betti numbers")
    p_betti.add_argument("--oracle", action="store_true", help="use the strand-homology oracle")

    p_res = sub.add_parser("resolution", parents=[common], help="minimized complex")
    p_res.add_argument("--show-matrices", action="store_true")

    p_nets = sub.add_parser("nets", parents=[common], help="minimal net family")
    p_nets.add_argument("--polarized", action="store_true", help="nets of the polarization")

    p_odom = sub.add_parser("odom", parents=[common], help="order of dominance")
    p_odom.add_argument(
        "--method", choices=["dominant-sets", "nets", "both"], default="both"
    )

    sub.add_parser("scarf", parents=[common], help="Scarf basis and Scarf-ness")
    sub.add_parser("polarize", parents=[common], help="print the polarization")

    p_verify = sub.add_parser("verify", parents=[common], help="run the fuzzing suite")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--n-max", type=int, default=4)
    p_verify.add_argument("--q-max", type=int, default=5)
    p_verify.add_argument("--exp-max", type=int, default=3)
    p_verify.add_argument("--exhaustive", action="store_true")

    return parser


_HANDLERS = {
    "analyze": _cmd_analyze,
    "betti": _cmd_betti,
    "resolution": _cmd_resolution,
    "nets": _cmd_nets,
    "odom": _cmd_odom,
    "scarf": _cmd_scarf,
    "polarize": _cmd_polarize,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (IdealSyntaxError, InvalidIdealError, UnknownVariableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalInvariantError, FuzzFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MonodomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
