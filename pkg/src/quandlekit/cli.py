"""Command-line front end.

Exit codes: 0 ok, 1 validation failure, 2 parse error, 3 precondition
violation, 4 budget exceeded, 5 cross-check mismatch, 6 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .adconj import (
    adconj_abelianization,
    adconj_inn_image,
    adconj_presentation,
    schreier_generators,
)
from .coset import build_coset_quandle
from .diagram import parse_gauss, wirtinger_group, wirtinger_quandle
from .errors import (
    CapExceeded,
    CentralityViolation,
    MalformedInput,
    MalformedTable,
    OrderCapExceeded,
    ParseError,
    SearchBudgetExceeded,
)
from .fpgroup import todd_coxeter
from .group import FiniteGroup, subgroup_generated, validate_group
from .invariants import count_colorings, crosscheck_conjugation
from .quandle import FiniteQuandle, enumerate_quandles, validate_quandle

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5
EXIT_CAP = 6


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc


def _read_text(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc


def _load_quandle(path) -> FiniteQuandle:
    try:
        return FiniteQuandle.from_dict(_read_json(path))
    except MalformedTable as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _load_group(path) -> FiniteGroup:
    try:
        return FiniteGroup.from_dict(_read_json(path))
    except (MalformedTable, MalformedInput) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _load_diagram(path):
    try:
        return parse_gauss(_read_text(path))
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _element_list(text):
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise CliError(f"bad element list {text!r}", EXIT_PARSE) from exc


def _emit(args, payload, human):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text + "\n")


# -- commands ---------------------------------------------------------------


def cmd_validate(args):
    data = _read_json(args.path)
    if not isinstance(data, dict):
        raise CliError("expected a JSON object", EXIT_PARSE)
    try:
        if "table" in data:
            kind = "quandle"
            report = validate_quandle(data["table"])
        elif "mult" in data:
            kind = "group"
            report = validate_group(data["mult"])
        elif "perm_gens" in data:
            kind = "group"
            report = validate_group(FiniteGroup.from_dict(data).mult)
        else:
            raise CliError("expected a quandle or group file", EXIT_PARSE)
    except (MalformedTable, MalformedInput) as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    payload = {"kind": kind, **report.to_dict()}
    _emit(args, payload, f"{kind}: {report}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_coset(args):
    G = _load_group(args.group)
    gens = _element_list(args.subgroup)
    try:
        P = subgroup_generated(G, gens)
        cq = build_coset_quandle(G, P, args.meridian, force=args.force)
    except CentralityViolation as exc:
        print(f"centrality violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except MalformedInput as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    qjson = cq.quandle.to_json()
    sidecar = cq.sidecar()
    if cq.diagnostics:
        sidecar["diagnostics"] = cq.diagnostics
    if args.out:
        _write(args.out, qjson)
    else:
        print(qjson)
    if args.sidecar:
        _write(args.sidecar, json.dumps(sidecar, sort_keys=True))
    elif not args.out:
        print(json.dumps(sidecar, sort_keys=True))
    if cq.diagnostics and not cq.diagnostics["validation"]["valid"]:
        return EXIT_INVALID
    return EXIT_OK


def cmd_color(args):
    d = _load_diagram(args.diagram)
    target = _load_quandle(args.target)
    n = count_colorings(wirtinger_quandle(d), target, args.budget, args.threads)
    _emit(args, {"colorings": n, "diagram": args.diagram, "target": args.target}, str(n))
    return EXIT_OK


def cmd_adconj(args):
    Q = _load_quandle(args.quandle)
    if args.present:
        print(adconj_presentation(Q).presentation.to_json())
        return EXIT_OK
    if args.stabilizer_index is not None:
        if not 0 <= args.stabilizer_index < Q.order:
            raise CliError(f"element {args.stabilizer_index} out of range", EXIT_PRECONDITION)
        pres = adconj_presentation(Q).presentation
        table = todd_coxeter(pres, schreier_generators(Q, args.stabilizer_index), args.tc_cap)
        _emit(args, {"index": table.index}, f"index {table.index}")
        return EXIT_OK
    if args.inn:
        img = adconj_inn_image(Q)
        payload = {
            "degree": img.degree,
            "generators": [list(g) for g in img.generators],
            "order": img.order(),
            "orbits": img.orbits(),
        }
        _emit(args, payload, f"inner image of order {payload['order']}, orbits {payload['orbits']}")
        return EXIT_OK
    ab = adconj_abelianization(Q)
    _emit(args, ab.to_dict(), f"rank {ab.rank}, torsion {list(ab.torsion)} ({ab})")
    return EXIT_OK


def cmd_crosscheck(args):
    d = _load_diagram(args.diagram)
    G = _load_group(args.group)
    if not 0 <= args.element < G.order:
        raise CliError(f"element {args.element} out of range", EXIT_PRECONDITION)
    p_q = wirtinger_quandle(d)
    p_g, per = wirtinger_group(d)
    report = crosscheck_conjugation(
        p_q, p_g, G, args.element, per.meridian, args.budget, args.threads,
        target=f"{args.group}#{args.element}", diagram=args.diagram,
    )
    human = f"colorings {report['colorings']}, reps {report['reps']}: " + (
        "match" if report["match"] else "MISMATCH"
    )
    _emit(args, report, human)
    return EXIT_OK if report["match"] else EXIT_MISMATCH


def cmd_enumerate(args):
    qs = enumerate_quandles(args.order, args.order_cap, args.threads)
    if args.json:
        print(json.dumps([q.to_dict() for q in qs], sort_keys=True))
    else:
        print(f"{len(qs)} quandles of order {args.order}")
        for q in qs:
            print(q.to_json())
    return EXIT_OK


def cmd_elements(args):
    G = _load_group(args.group)
    rows = [{"index": g, "label": G.label(g)} for g in range(G.order)]
    _emit(args, rows, "\n".join(f"{r['index']}\t{r['label']}" for r in rows))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=None, help="search node budget (QF_BUDGET)")
    common.add_argument("--threads", type=int, default=None, help="worker threads (QF_THREADS)")
    common.add_argument("--tc-cap", type=int, default=None, help="coset enumeration cap (QF_TC_CAP)")
    common.add_argument("--order-cap", type=int, default=None, help="enumeration order cap (QF_ORDER_CAP)")

    parser = argparse.ArgumentParser(prog="qf", description="Finite quandles, coset quandles and knot colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a quandle or group file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("coset", parents=[common], help="build the coset quandle (P\\G, m)")
    p.add_argument("group")
    p.add_argument("--subgroup", default="", help="comma-separated generator indices of P")
    p.add_argument("--meridian", type=int, required=True)
    p.add_argument("--out", help="write quandle JSON here")
    p.add_argument("--sidecar", help="write coset representative JSON here")
    p.add_argument("--force", action="store_true", help="build even if m is not central in P")
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("color", parents=[common], help="count quandle colorings of a diagram")
    p.add_argument("diagram")
    p.add_argument("target")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("adconj", parents=[common], help="Adconj group of a quandle")
    p.add_argument("quandle")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--abelianization", action="store_true")
    mode.add_argument("--inn", action="store_true")
    mode.add_argument("--present", action="store_true")
    mode.add_argument("--stabilizer-index", type=int, metavar="ELEMENT",
                      help="bounded coset enumeration over the stabilizer of ELEMENT")
    p.set_defaults(func=cmd_adconj)

    p = sub.add_parser("crosscheck", parents=[common], help="colorings vs representations")
    p.add_argument("diagram")
    p.add_argument("group")
    p.add_argument("element", type=int, help="index of the class representative")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("enumerate", parents=[common], help="all quandles of a given order")
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("elements", parents=[common], help="list group elements and labels")
    p.add_argument("group")
    p.set_defaults(func=cmd_elements)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.budget = config.budget(args.budget)
    args.threads = config.threads(args.threads)
    args.order_cap = config.order_cap(args.order_cap)
    args.tc_cap = config.tc_cap(args.tc_cap)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SearchBudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OrderCapExceeded, CapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
