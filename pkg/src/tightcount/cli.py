"""Command-line front end.

Every subcommand prints plain text by default and a schema-versioned JSON
document with ``--format=json``.  Exit status is 0 on success, 1 when the
input violates a mathematical precondition and 2 on a usage error.

Set ``TIGHTCOUNT_LOG`` to a logging level name (``DEBUG``, ``INFO``...) for
diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import classify, dividing_sets, farey, legendrian, state_traversal
from .dividing_sets import DiskDiagram
from .state_traversal import SolidTorusProblem

__all__ = ["CommandResult", "run", "main", "verify", "CLI_SCHEMA_VERSION"]

CLI_SCHEMA_VERSION = 1

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandResult:
    status: str  # "ok" or "error"
    payload: Any = None
    message: str = ""
    exit_code: int = EXIT_OK
    command: str = ""
    # alternate renderings keyed by format, e.g. "dot"
    renderings: dict[str, str] = field(default_factory=dict)
    format: str = "text"
    output: Optional[Path] = None

    def to_json(self) -> str:
        doc = {
            "schema_version": CLI_SCHEMA_VERSION,
            "command": self.command,
            "status": self.status,
            "payload": self.payload,
            "message": self.message,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt in self.renderings:
            return self.renderings[fmt]
        return self.message if self.message.endswith("\n") else self.message + "\n"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let negative slopes such as -14/5 through as positionals
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _slope(text: str) -> farey.Slope:
    try:
        return farey.parse_slope(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ok(message: str, payload: Any, **renderings: str) -> CommandResult:
    return CommandResult("ok", payload, message, renderings=renderings)


# -- subcommand handlers ----------------------------------------------------


def _farey_edge(a) -> CommandResult:
    det = farey.farey_det(a.a, a.b)
    edge = abs(det) == 1
    return _ok("true" if edge else "false", {"a": str(a.a), "b": str(a.b), "det": det, "edge": edge})


def _farey_bypass(a) -> CommandResult:
    s = farey.bypass_slope(a.slope, a.attach)
    return _ok(str(s), {"slope": str(a.slope), "attach": str(a.attach), "result": str(s)})


def _farey_path(a) -> CommandResult:
    path = [str(s) for s in farey.peel_path(a.p, a.q)]
    return _ok(" ".join(path), {"p": a.p, "q": a.q, "path": path})


def _cf_expand(a) -> CommandResult:
    cf = farey.cf_expand(a.p, a.q)
    return _ok(" ".join(str(r) for r in cf.coeffs), {"p": a.p, "q": a.q, "coeffs": list(cf.coeffs)})


def _cf_eval(a) -> CommandResult:
    s = farey.cf_to_slope(farey.ContinuedFraction(tuple(a.coeffs)))
    return _ok(str(s), {"coeffs": a.coeffs, "slope": str(s)})


def _lens_count(a) -> CommandResult:
    count = classify.lens_count_formula(a.p, a.q)
    matrix = classify.lens_gluing_matrix(a.p, a.q)
    cf = farey.cf_expand(a.p, a.q).coeffs
    return _ok(str(count), {"p": a.p, "q": a.q, "count": count, "coeffs": list(cf),
                            "gluing_matrix": [list(r) for r in matrix]})


def _solidtorus_count(a) -> CommandResult:
    prob = SolidTorusProblem(a.p, a.q)
    payload: dict[str, Any] = {"p": a.p, "q": a.q, "method": a.method}
    if a.method in ("formula", "both"):
        payload["formula"] = classify.solid_torus_count_formula(a.p, a.q)
    if a.method in ("traversal", "both"):
        payload["traversal"] = state_traversal.tight_count_traversal(prob)
    if a.method == "both":
        payload["agree"] = payload["formula"] == payload["traversal"]
        msg = f"formula={payload['formula']} traversal={payload['traversal']}"
    else:
        payload["count"] = payload[a.method]
        msg = str(payload["count"])
    return _ok(msg, payload)


def _solidtorus_graph(a) -> CommandResult:
    graph = state_traversal.build_state_graph(SolidTorusProblem(a.p, a.q))
    as_json = json.loads(state_traversal.export_graph(graph, "json"))
    dot = state_traversal.export_graph(graph, "dot")
    summary = (
        f"{len(graph.vertices)} states, {sum(graph.allowable)} potentially allowable, "
        f"{len(graph.edges)} edges, tight_count={graph.tight_count}"
    )
    return _ok(summary, as_json, dot=dot)


def _solidtorus_decorations(a) -> CommandResult:
    blocks = classify.block_decompose(a.p, a.q)
    rows = []
    lines = [f"blocks {list(blocks.block_edge_counts)}"]
    for dec in classify.enumerate_tight_decorations(a.p, a.q):
        vec = classify.decoration_half_euler(a.p, a.q, dec).vector
        rows.append({"plus_counts": list(dec.plus_counts), "half_euler": list(vec)})
        lines.append(f"{list(dec.plus_counts)} {vec}")
    payload = {"p": a.p, "q": a.q, "path": [str(s) for s in blocks.path],
               "block_edge_counts": list(blocks.block_edge_counts), "decorations": rows}
    return _ok("\n".join(lines), payload)


def _front(a) -> CommandResult:
    f = legendrian.FrontCounts(a.up, a.down, a.pos, a.neg)
    value = legendrian.front_tb(f) if a.which == "tb" else legendrian.front_r(f)
    return _ok(str(value), {a.which: value, "front": vars(f)})


def _unknot_classify(a) -> CommandResult:
    u = legendrian.UnknotForm(a.k_plus, a.k_minus)
    front = u.front()
    payload = {"k_plus": u.k_plus, "k_minus": u.k_minus, "tb": u.tb, "r": u.r, "front": vars(front)}
    return _ok(f"tb={u.tb} r={u.r}", payload)


def _unknot_from_invariants(a) -> CommandResult:
    u = legendrian.unknot_from_invariants(a.tb, a.r)
    if u is None:
        return _ok("none", {"tb": a.tb, "r": a.r, "form": None})
    return _ok(f"S+^{u.k_plus} S-^{u.k_minus}",
               {"tb": a.tb, "r": a.r, "form": {"k_plus": u.k_plus, "k_minus": u.k_minus}})


def _bennequin(a) -> CommandResult:
    ok = legendrian.bennequin_check(a.tb, a.r, a.chi)
    return _ok("true" if ok else "false", {"tb": a.tb, "r": a.r, "chi": a.chi, "holds": ok})


def _chords_enumerate(a) -> CommandResult:
    diagrams = dividing_sets.enumerate_disk_diagrams(a.n)
    return _ok("\n".join(d.encode() for d in diagrams),
               {"n": a.n, "count": len(diagrams), "diagrams": [list(d.match) for d in diagrams]})


def _chords_bypass(a) -> CommandResult:
    d = DiskDiagram.parse(a.match)
    new = dividing_sets.disk_bypass_move(d, a.triple, a.side)
    return _ok(new.encode(), {"match": list(d.match), "triple": a.triple, "side": a.side,
                              "result": list(new.match), "trivial": new == d})


def _verify(a) -> CommandResult:
    return verify(a.p_max)


def verify(p_max: int) -> CommandResult:
    """Compare traversal and closed-form counts for every coprime ``(p, q)``, ``2 <= p <= p_max``."""
    if p_max < 2:
        raise UsageError("verify: p_max must be at least 2")
    rows = []
    lines = []
    for p in range(2, p_max + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            traversal = state_traversal.tight_count_traversal(SolidTorusProblem(p, q))
            formula = classify.solid_torus_count_formula(p, q)
            ok = traversal == formula
            rows.append({"p": p, "q": q, "traversal": traversal, "formula": formula, "pass": ok})
            lines.append(f"p={p:<3d} q={q:<3d} traversal={traversal:<4d} formula={formula:<4d} "
                         f"{'PASS' if ok else 'FAIL'}")
    passed = all(r["pass"] for r in rows)
    lines.append(f"{sum(r['pass'] for r in rows)}/{len(rows)} pairs agree: {'PASS' if passed else 'FAIL'}")
    result = CommandResult("ok" if passed else "error", {"p_max": p_max, "pairs": rows, "pass": passed},
                           "\n".join(lines), EXIT_OK if passed else EXIT_DOMAIN, command="verify")
    return result


# -- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--output", type=Path, default=None, help="write output to PATH")

    parser = _Parser(prog="tightcount", description="Tight contact structure calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name: str, handler: Callable, help: str):
        sp = group.add_parser(name, parents=[common], help=help)
        sp.set_defaults(handler=handler)
        return sp

    def pq(sp):
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)

    g = sub.add_parser("farey", help="Farey tessellation").add_subparsers(dest="sub", required=True)
    sp = leaf(g, "edge", _farey_edge, "are two slopes joined by a Farey edge")
    sp.add_argument("a", type=_slope)
    sp.add_argument("b", type=_slope)
    sp = leaf(g, "bypass", _farey_bypass, "slope after a bypass on a torus with two dividing curves")
    sp.add_argument("--slope", type=_slope, required=True)
    sp.add_argument("--attach", type=_slope, required=True)
    pq(leaf(g, "path", _farey_path, "peeling path from -p/q to -1"))

    g = sub.add_parser("cf", help="negative continued fractions").add_subparsers(dest="sub", required=True)
    pq(leaf(g, "expand", _cf_expand, "expand -p/q"))
    sp = leaf(g, "eval", _cf_eval, "evaluate coefficients")
    sp.add_argument("coeffs", type=int, nargs="+")

    g = sub.add_parser("lens", help="lens spaces").add_subparsers(dest="sub", required=True)
    pq(leaf(g, "count", _lens_count, "tight structures on L(p, q)"))

    g = sub.add_parser("solidtorus", help="solid tori").add_subparsers(dest="sub", required=True)
    sp = leaf(g, "count", _solidtorus_count, "tight structures with boundary slope -p/q")
    pq(sp)
    sp.add_argument("--method", choices=("formula", "traversal", "both"), default="formula")
    pq(leaf(g, "graph", _solidtorus_graph, "bypass state graph"))
    pq(leaf(g, "decorations", _solidtorus_decorations, "basic-slice decorations and half-Euler classes"))

    g = sub.add_parser("front", help="front projection invariants").add_subparsers(dest="sub", required=True)
    for which in ("tb", "r"):
        sp = leaf(g, which, _front, f"{which} of a front from its counts")
        sp.set_defaults(which=which)
        sp.add_argument("up", type=int, help="upward cusps")
        sp.add_argument("down", type=int, help="downward cusps")
        sp.add_argument("pos", type=int, nargs="?", default=0, help="positive crossings")
        sp.add_argument("neg", type=int, nargs="?", default=0, help="negative crossings")

    g = sub.add_parser("unknot", help="Legendrian unknots").add_subparsers(dest="sub", required=True)
    sp = leaf(g, "classify", _unknot_classify, "invariants of S+^k+ S-^k-(L0)")
    sp.add_argument("k_plus", type=int)
    sp.add_argument("k_minus", type=int)
    sp = leaf(g, "from-invariants", _unknot_from_invariants, "unknot with given tb and r")
    sp.add_argument("tb", type=int)
    sp.add_argument("r", type=int)

    sp = leaf(sub, "bennequin", _bennequin, "check the Bennequin inequality")
    sp.add_argument("tb", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("chi", type=int)

    g = sub.add_parser("chords", help="disk dividing sets").add_subparsers(dest="sub", required=True)
    sp = leaf(g, "enumerate", _chords_enumerate, "all dividing sets on a disk with tb = -n")
    sp.add_argument("n", type=int)
    sp = leaf(g, "bypass", _chords_bypass, "apply a bypass to a disk dividing set")
    sp.add_argument("match", help="canonical encoding, e.g. '3 2 1 0' or 3,2,1,0")
    sp.add_argument("--triple", type=int, required=True)
    sp.add_argument("--side", choices=("front", "back"), required=True)

    sp = leaf(sub, "verify", _verify, "traversal vs formula for all p <= P_MAX")
    sp.add_argument("p_max", type=int)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("TIGHTCOUNT_LOG")
    if level:
        logging.basicConfig(level=level.upper(), stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")


def run(argv: Sequence[str]) -> CommandResult:
    """Parse and execute one command without touching stdout."""
    parser = _build_parser()
    command = ""
    try:
        args = parser.parse_args(list(argv))
        command = " ".join(x for x in (args.command, getattr(args, "sub", None)) if x)
        result = args.handler(args)
    except UsageError as exc:
        return CommandResult("error", None, str(exc), EXIT_USAGE)
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return CommandResult("ok" if code == 0 else "error", None, "", code)
    except ValueError as exc:
        return CommandResult("error", None, f"error: {exc}", EXIT_DOMAIN, command=command)
    result.command = result.command or command
    result.format = args.format
    result.output = args.output
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    _configure_logging()
    argv = sys.argv[1:] if argv is None else argv
    result = run(argv)
    fmt = result.format
    if fmt == "dot" and "dot" not in result.renderings and result.exit_code == EXIT_OK:
        result = CommandResult("error", None, f"{result.command}: no dot output", EXIT_USAGE)
    text = result.render(fmt)
    if result.payload is None and result.exit_code != EXIT_OK:
        sys.stderr.write(text)
    elif result.output is not None:
        result.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
