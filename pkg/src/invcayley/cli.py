"""Command-line interface: ``invcayley <command> ...``.

Exit status is 0 for a definitive result, 2 when a search budget ran out
before the answer was settled, and 1 for bad input, an embedding request
outside the constructive families, or a verification run with failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import NoConstruction, constructive_embedding, nonplanarity_witness
from .classifier import classify_genus, genus_class_from_graph, local_classes
from .errors import SearchBudgetExceeded
from .graphs import build_cayley, connected_components, girth, is_bipartite, is_connected, is_regular
from .rings import build_ring, involutions, local_decomposition
from .ringspec import ParseError, format_ring_spec, parse_ring_spec
from .topology import DEFAULT_BUDGET, Bounds, certificate_to_dict, min_genus
from .verifier import (
    DEFAULT_CHECK_BUDGET,
    RING_THEOREMS,
    THEOREM_IDS,
    report_json,
    run_suite,
    total_failures,
    total_skips,
)

EXIT_OK, EXIT_ERROR, EXIT_INDETERMINATE = 0, 1, 2


class CliError(Exception):
    pass


def _load(text: str):
    spec = parse_ring_spec(text)
    ring = build_ring(spec)
    return spec, ring, build_cayley(ring)


def cmd_analyze(args) -> tuple[dict, int]:
    spec, ring, g = _load(args.spec)
    d = local_decomposition(ring)
    verdict = classify_genus(d)
    gi = girth(g)
    report = {
        "ring": format_ring_spec(spec),
        "order": ring.order,
        "characteristic": ring.characteristic,
        "local_factor_orders": d.factor_orders,
        "involutions": [ring.label(u) for u in involutions(ring)],
        "degree": is_regular(g),
        "components": len(connected_components(g)),
        "connected": is_connected(g),
        "bipartite": is_bipartite(g),
        "girth": None if gi == float("inf") else int(gi),
        "genus_class": verdict.kind,
        "evidence": {
            "local_classes": [str(c) for c in local_classes(d)],
            "clause": verdict.clause,
            "graph_test": genus_class_from_graph(g).evidence,
        },
    }
    return report, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    spec, ring, g = _load(args.spec)
    verdict = classify_genus(local_decomposition(ring))
    graph_view = genus_class_from_graph(g)
    if verdict.kind != graph_view.kind:
        raise AssertionError(f"ring and graph tests disagree: {verdict.kind} vs {graph_view.kind}")
    return {"ring": format_ring_spec(spec), **verdict.to_dict()}, EXIT_OK


def cmd_genus(args) -> tuple[dict, int]:
    spec, ring, g = _load(args.spec)
    seed, source = None, None
    try:
        emb, source = constructive_embedding(ring, g)
        seed = emb.rotation
    except NoConstruction:
        pass
    cert = min_genus(g, args.budget, seed=seed)
    out = {"ring": format_ring_spec(spec), "seed": source, "certificate": certificate_to_dict(cert)}
    if isinstance(cert, Bounds):
        return out, EXIT_INDETERMINATE
    out["genus"] = cert.genus
    return out, EXIT_OK


def cmd_embed(args) -> tuple[dict, int]:
    spec, ring, g = _load(args.spec)
    try:
        emb, source = constructive_embedding(ring, g)
    except NoConstruction as exc:
        raise CliError(str(exc)) from None
    witness = nonplanarity_witness(g)
    return {
        "ring": format_ring_spec(spec),
        "source": source,
        "labels": list(g.labels),
        "face_count": emb.face_count,
        "nonplanarity": None if witness is None else witness.to_dict(),
        **emb.to_dict(),
    }, EXIT_OK


def cmd_export(args) -> tuple[str, int]:
    spec, _, g = _load(args.spec)
    if args.json:
        return json.dumps(g.to_dict(), sort_keys=True, indent=2) + "\n", EXIT_OK
    return g.to_dot(format_ring_spec(spec)), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    theorems = RING_THEOREMS if args.odd_cyclic_only else THEOREM_IDS
    if args.theorems:
        theorems = tuple(t.strip().upper() for t in args.theorems.split(","))
    report = run_suite(args.max_order, args.budget, theorems, args.odd_cyclic_only)
    status = EXIT_OK
    if total_failures(report):
        status = EXIT_ERROR
    elif total_skips(report):
        status = EXIT_INDETERMINATE
    return report_json(report), status


def _text(data: dict) -> str:
    lines = []
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcayley",
        description="Involutory Cayley graphs of finite commutative rings and their genus.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_command(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("spec", help='ring spec, e.g. "Z8" or "Z3 x Z2[x]/(x^2)"')
        p.set_defaults(func=func)
        return p

    ring_command("analyze", cmd_analyze, "ring and graph invariants with the genus class")
    ring_command("classify", cmd_classify, "genus class and the clause that decides it")
    p = ring_command("genus", cmd_genus, "exact genus by branch and bound")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="N",
                   help="face-trace steps before giving up (default %(default)s)")
    ring_command("embed", cmd_embed, "explicit torus embedding for the constructive families")
    p = ring_command("export", cmd_export, "graph as DOT (default) or JSON adjacency")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT (default)")

    p = sub.add_parser("verify", parents=[common], help="cross-check every theorem on the catalog")
    p.add_argument("--max-order", type=int, default=16, metavar="N")
    p.add_argument("--budget", type=int, default=DEFAULT_CHECK_BUDGET, metavar="N")
    p.add_argument("--odd-cyclic-only", action="store_true",
                   help="odd factors restricted to Z_{p^k}; runs only the ring theorems")
    p.add_argument("--theorems", metavar="IDS", help="comma-separated subset of " + ",".join(THEOREM_IDS))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "export" and args.json and args.dot:
        parser.error("--json and --dot are exclusive")
    try:
        result, status = args.func(args)
    except ParseError as exc:
        print(f"invcayley: parse error\n{exc.caret()}", file=sys.stderr)
        return EXIT_ERROR
    except (CliError, ValueError) as exc:
        print(f"invcayley: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except SearchBudgetExceeded as exc:
        print(f"invcayley: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    if isinstance(result, dict):
        result = json.dumps(result, sort_keys=True, indent=2) + "\n" if args.json else _text(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
