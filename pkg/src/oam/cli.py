"""Command line front end.

Exit codes: 0 pass, 1 failed check, 2 input error, 3 not orientable,
4 precondition unmet (strong GCD for ``realize --integer``).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Any

from . import bits
from .arithmetic import ArithmeticMatroid, Multiplicity, RhoSign, strong_gcd_witness
from .bundle import CheckResult, OrientedArithmeticMatroid, check_bundle, oam_contract, oam_delete, oam_dual
from .matroid import Matroid, MatroidError, basis_graph, coordinatizing_forest, fundamental_circuit_graph
from .realization import (RealizationError, integer_representation, matrix_to_oam,
                          rational_realization, representation_mismatches, row_reduce)
from .search import SearchCapExceeded, enumerate_orientations, equivalent_orientations, find_orientation
from .serialize import (FormatError, bundle_from_json, bundle_to_json, dumps, matroid_from_json,
                        parse_matrix, realization_to_json, representation_to_json)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_NONE, EXIT_PRECONDITION = 0, 1, 2, 3, 4
WITNESS_LIMIT = 10


class InputError(Exception):
    pass


class Report:
    def __init__(self, command: str, args: dict, raw: bytes, verbose: bool):
        self.data: dict[str, Any] = {
            "command": command,
            "args": args,
            "input_digest": hashlib.sha256(raw).hexdigest(),
            "verdict": "pass",
            "witnesses": [],
            "witness_count": 0,
        }
        self.verbose = verbose
        self.to_stdout = False
        self._all: list = []

    def add_witnesses(self, check: str, items: list) -> None:
        for w in items:
            self._all.append({"check": check, **w} if isinstance(w, dict) else {"check": check, "value": w})
        self.data["witness_count"] = len(self._all)
        self.data["witnesses"] = self._all if self.verbose else self._all[:WITNESS_LIMIT]

    def add_checks(self, res: CheckResult) -> None:
        self.data["checks"] = {}
        for name, ok in res.verdicts.items():
            ws = res.witnesses[name]
            self.data["checks"][name] = {"pass": ok, "count": len(ws)}
            self.add_witnesses(name, ws)
        if not res.ok:
            self.data["verdict"] = "fail"

    def __setitem__(self, key, value):
        self.data[key] = value


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load(raw: bytes, reduce: bool = False):
    """Return (matroid, m, chi or None, source kind)."""
    text = raw.decode("utf-8", errors="replace")
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            d = json.loads(stripped)
            if "matroid" in d:
                mat, m, chi = bundle_from_json(d)
                return mat, m, chi, "bundle"
            if "bases" in d:
                mat = matroid_from_json(d)
                return mat, Multiplicity.constant(mat.n), None, "matroid"
        mat_in = parse_matrix(text)
        if reduce:
            mat_in = row_reduce(mat_in)
        oam = matrix_to_oam(mat_in)
        return oam.matroid, oam.m, oam.chi, "matrix"
    except (FormatError, MatroidError, RealizationError, ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def _parse_set(text: str, mat: Matroid) -> int:
    """Elements by their labels (original names after minors)."""
    try:
        named = bits.elements(bits.parse_elements(text))
    except ValueError as exc:
        raise InputError(f"bad element list {text!r}") from exc
    labels = mat.element_labels
    out = 0
    for e in named:
        if e not in labels:
            raise InputError(f"element {e} is not in the ground set {list(labels)}")
        out |= 1 << labels.index(e)
    return out


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(report: Report, args) -> None:
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(dumps(report.data) + "\n")
    verdict = report.data["verdict"]
    line = f"{report.data['command']}: {verdict}"
    if sys.stderr.isatty() and not args.plain:
        color = {"pass": "32", "fail": "31"}.get(verdict, "33")
        line = f"\033[{color}m{line}\033[0m"
    if not args.quiet:
        print(line, file=sys.stderr)


def _need_chi(chi):
    if chi is None:
        raise InputError("this command needs an oriented bundle with 'chi'")
    return chi


def _validate(report: Report, mat, m, chi, sign) -> bool:
    res = check_bundle(mat, m, chi, sign)
    report.add_checks(res)
    return res.ok


def cmd_check(args, raw: bytes, report: Report) -> int:
    mat, m, chi, kind = _load(raw, args.reduce)
    report["input_kind"] = kind
    ok = _validate(report, mat, m, chi, RhoSign(args.rho_sign))
    report.to_stdout = True
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_from_matrix(args, raw: bytes, report: Report) -> int:
    mat, m, chi, kind = _load(raw, args.reduce)
    if kind != "matrix":
        raise InputError("from-matrix expects a matrix file")
    _emit(dumps(bundle_to_json(mat, m, chi)) + "\n", args)
    return EXIT_PASS


def cmd_orient(args, raw: bytes, report: Report) -> int:
    mat, m, _chi, _ = _load(raw)
    if not _validate(report, mat, m, None, RhoSign(args.rho_sign)):
        return EXIT_FAIL
    am = ArithmeticMatroid(mat, m)
    try:
        chi = find_orientation(am, cap=args.cap)
    except SearchCapExceeded as exc:
        report["verdict"] = "fail"
        report.add_witnesses("search", [{"cap": str(exc)}])
        return EXIT_FAIL
    if chi is None:
        report["verdict"] = "none"
        return EXIT_NONE
    if args.all_canonical:
        total, foreign = 0, []
        for other in enumerate_orientations(am):
            total += 1
            if equivalent_orientations(chi, other, am) is None:
                foreign.append({"chi": {",".join(map(str, bits.elements(s))): v
                                        for s, v in sorted(other.signs.items())}})
        report["orientations_enumerated"] = total
        if foreign:
            report["verdict"] = "fail"
            report.add_witnesses("uniqueness", foreign)
            return EXIT_FAIL
    _emit(dumps(bundle_to_json(mat, m, chi)) + "\n", args)
    return EXIT_PASS


def cmd_minor(args, raw: bytes, report: Report) -> int:
    mat, m, chi, _ = _load(raw)
    oam = OrientedArithmeticMatroid(mat, m, _need_chi(chi))
    if args.dual:
        out = oam_dual(oam)
    elif args.delete is not None:
        out = oam_delete(oam, _parse_set(args.delete, mat))
    elif args.contract is not None:
        out = oam_contract(oam, _parse_set(args.contract, mat))
    else:
        raise InputError("choose one of --delete, --contract, --dual")
    if out.n == 0:
        report["empty_ground_set"] = True
    if not _validate(report, out.matroid, out.m, out.chi, RhoSign(args.rho_sign)):
        return EXIT_FAIL
    _emit(dumps(bundle_to_json(out.matroid, out.m, out.chi)) + "\n", args)
    return EXIT_PASS


def cmd_realize(args, raw: bytes, report: Report) -> int:
    mat, m, chi, _ = _load(raw)
    oam = OrientedArithmeticMatroid(mat, m, _need_chi(chi))
    if not _validate(report, mat, m, chi, RhoSign(args.rho_sign)):
        return EXIT_FAIL
    if args.integer:
        w = strong_gcd_witness(oam.arithmetic)
        if w is not None:
            report["verdict"] = "fail"
            report.add_witnesses("strong_gcd", [{"A": list(bits.elements(w))}])
            return EXIT_PRECONDITION
        try:
            rep = integer_representation(oam)
        except RealizationError as exc:
            report["verdict"] = "fail"
            report.add_witnesses("representation", [{"error": str(exc)}])
            return EXIT_FAIL
        bad = representation_mismatches(rep, oam.arithmetic)
        out = representation_to_json(rep)
        out["verified"] = not bad
        if bad:
            report["verdict"] = "fail"
            report.add_witnesses("representation", [{"A": list(bits.elements(s))} for s in bad])
        _emit(dumps(out) + "\n", args)
        return EXIT_FAIL if bad else EXIT_PASS
    try:
        real = rational_realization(oam)
    except RealizationError as exc:
        report["verdict"] = "fail"
        report.add_witnesses("realization", [{"error": str(exc)}])
        return EXIT_FAIL
    out = realization_to_json(real)
    out["det_identity"] = True
    _emit(dumps(out) + "\n", args)
    return EXIT_PASS


def _q(s: str) -> str:
    return '"' + s.replace('"', r'\"') + '"'


def _set_label(s: int, mat: Matroid) -> str:
    labels = mat.element_labels
    return "{" + ",".join(str(labels[e - 1]) for e in bits.elements(s)) + "}"


def basis_graph_dot(mat: Matroid, anchor: int | None = None) -> str:
    view = basis_graph(mat, anchor)
    lines = ["graph basis_graph {"]
    near = set(view.bg1)
    for v in view.vertices:
        attrs = ""
        if anchor is not None and v == anchor:
            attrs = " [anchor=true, shape=doublecircle]"
        elif v in near:
            attrs = " [bg1=true]"
        lines.append(f"  {_q(_set_label(v, mat))}{attrs};")
    for u, v in view.edges:
        lines.append(f"  {_q(_set_label(u, mat))} -- {_q(_set_label(v, mat))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fcg_dot(mat: Matroid, b0: int) -> str:
    edges = fundamental_circuit_graph(mat, b0)
    forest = set(coordinatizing_forest(edges))
    labels = mat.element_labels
    lines = ["graph fundamental_circuit_graph {"]
    for e in range(1, mat.n + 1):
        side = "anchor" if b0 >> (e - 1) & 1 else "outside"
        lines.append(f"  {_q(str(labels[e - 1]))} [side={side}];")
    for i, j in edges:
        mark = " [forest=true, style=bold]" if (i, j) in forest else ""
        lines.append(f"  {_q(str(labels[i - 1]))} -- {_q(str(labels[j - 1]))}{mark};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args, raw: bytes, report: Report) -> int:
    mat, _m, _chi, _ = _load(raw)
    try:
        if args.fcg is not None:
            b0 = _parse_set(args.fcg, mat)
            if b0 not in mat.bases:
                raise InputError(f"{args.fcg} is not a basis")
            text = fcg_dot(mat, b0)
        else:
            anchor = _parse_set(args.anchor, mat) if args.anchor is not None else None
            if anchor is not None and anchor not in mat.bases:
                raise InputError(f"{args.anchor} is not a basis")
            text = basis_graph_dot(mat, anchor)
    except MatroidError as exc:
        raise InputError(str(exc)) from exc
    _emit(text, args)
    return EXIT_PASS


COMMANDS = {
    "check": cmd_check,
    "from-matrix": cmd_from_matrix,
    "orient": cmd_orient,
    "minor": cmd_minor,
    "dual": cmd_minor,
    "realize": cmd_realize,
    "graph": cmd_graph,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="matrix file, JSON bundle, or - for stdin")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("--report", help="write the JSON report to this file")
    common.add_argument("--verbose", action="store_true", help="list every witness")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    common.add_argument("--plain", action="store_true", help="no colour in the summary line")
    common.add_argument("--quiet", action="store_true", help="no summary line on stderr")
    common.add_argument("--rho-sign", default=RhoSign.MOLECULE.value,
                        choices=[s.value for s in RhoSign], help="sign convention for rho(A, B)")

    p = argparse.ArgumentParser(prog="oam", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="run every axiom checker")
    c.add_argument("--reduce", action="store_true", help="row-reduce a rank-deficient matrix")

    c = sub.add_parser("from-matrix", parents=[common], help="matrix -> oriented bundle")
    c.add_argument("--reduce", action="store_true", help="row-reduce a rank-deficient matrix")

    c = sub.add_parser("orient", parents=[common], help="find an orientation")
    c.add_argument("--all-canonical", action="store_true",
                   help="enumerate every orientation and check they are equivalent")
    c.add_argument("--cap", type=int, default=1 << 20, help="max candidate sign patterns")

    c = sub.add_parser("minor", parents=[common], help="deletion, contraction or dual")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--delete", metavar="A")
    g.add_argument("--contract", metavar="A")
    g.add_argument("--dual", action="store_true")

    c = sub.add_parser("dual", parents=[common], help="alias of minor --dual")
    c.set_defaults(dual=True, delete=None, contract=None)

    c = sub.add_parser("realize", parents=[common], help="rational or integer realization")
    c.add_argument("--integer", action="store_true", help="integer representation (needs strong GCD)")

    c = sub.add_parser("graph", parents=[common], help="DOT output of the basis graph or fundamental circuit graph")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--basis-graph", action="store_true", default=True)
    g.add_argument("--fcg", metavar="B0")
    c.add_argument("--anchor", metavar="B0", help="mark B0 and its neighbours in the basis graph")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    start = time.perf_counter()
    try:
        raw = _read(args.input)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    echo = {k: v for k, v in sorted(vars(args).items())
            if k not in ("output", "report", "input", "plain", "quiet", "timing", "verbose")}
    report = Report(args.command, echo, raw, args.verbose)
    try:
        code = COMMANDS[args.command](args, raw, report)
    except InputError as exc:
        report["verdict"] = "fail"
        report.add_witnesses("input", [{"error": str(exc)}])
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    if args.timing:
        report["timing_s"] = round(time.perf_counter() - start, 6)
    report["exit_code"] = code
    if report.to_stdout:
        _emit(dumps(report.data) + "\n", args)
    _summary(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
