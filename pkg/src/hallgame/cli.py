"""Command-line front end.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a
verification or cross-check failed, 2 bad input, 3 size-bound refusal,
4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernel
from .assign import (AugmentedGraph, augment, compute_assignment, extract_certificate,
                     iteration_bound, parse_assignment, render_assignment, render_certificate,
                     render_trace, tightness_instance, verify_assignment)
from .errors import InputError, InternalInvariantError, SizeBoundError
from .game import (designated_player, first_legal_strategy, minimax_strategy, minimax_value,
                   play_match, random_strategy, render_transcript, stdin_strategy,
                   strategy_from_assignment)
from .graph import parse_bipartite, parse_graph
from .hungarian import max_weight_matching, parse_weighted
from .hypergraph import (augment_hypergraph, construct_assignment, find_independent_transversal,
                         hyper_minimax, is_balanced_bruteforce, matching_covering_bruteforce,
                         parse_hypergraph, render_hyper_assignment, search_assignment_bruteforce,
                         verify_hyper_assignment)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND, EXIT_INTERNAL = range(5)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _header(text: str) -> list[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if line:
            return line
    return []


def load_arena(path: str) -> AugmentedGraph:
    """A ``p bip`` file is augmented; a ``p graph`` file must name its start vertex."""
    text = _read(path)
    head = _header(text)[:2]
    if head == ["p", "bip"]:
        return augment(parse_bipartite(text))
    if head == ["p", "graph"]:
        g, v0 = parse_graph(text)
        if v0 is None:
            raise InputError("general graph input needs a 'v0 <i>' line")
        return AugmentedGraph.from_graph(g, v0)
    raise InputError(f"{path}: expected a 'p bip' or 'p graph' header")


def _verified_run(ga, **kw):
    run = compute_assignment(ga, **kw)
    verdict = verify_assignment(ga, run.assignment)
    if not verdict:
        raise InternalInvariantError(
            "computed assignment fails verification: " + "; ".join(verdict.format(ga.labels)))
    return run


def _labels(labels, vs):
    return [labels[v] for v in sorted(vs)]


# -- graph commands ----------------------------------------------------------------

def cmd_assign(args):
    ga = load_arena(args.file)
    run = _verified_run(ga, tie_break=args.tie_break, seed=args.seed, trace=args.trace,
                        debug_invariants=args.check_invariants)
    a, st = run.assignment, run.stats
    text = render_assignment(ga, a, st)
    if args.trace:
        text += render_trace(ga, run.trace)
    data = {
        "reachable": _labels(ga.labels, a.reachable),
        "sigma": {ga.labels[v]: (None if s is None else ga.labels[s]) for v, s in enumerate(a.sigma)},
        "stats": {"iterations": st.iterations, "introductions": st.introductions,
                  "deletions": st.deletions},
    }
    if args.trace:
        data["trace"] = [[s.step, s.kind, ga.labels[s.x], None if s.y is None else ga.labels[s.y]]
                         for s in run.trace]
    return text, data, EXIT_OK


def cmd_certificate(args):
    ga = load_arena(args.file)
    if ga.original is None:
        raise InputError("certificates need a bipartite ('p bip') instance")
    cert = extract_certificate(ga, _verified_run(ga).assignment)
    text = render_certificate(ga, cert)
    if text.startswith("MATCHING"):
        data = {"kind": "matching",
                "edges": [[ga.labels[u], ga.labels[w]] for u, w in sorted(cert.edges)]}
    else:
        data = {"kind": "violator", "S": _labels(ga.labels, cert.subset),
                "N(S)": _labels(ga.labels, cert.witness_neighborhood)}
    return text, data, EXIT_OK


def cmd_verify(args):
    ga = load_arena(args.graph)
    a, _ = parse_assignment(ga, _read(args.assignment))
    verdict = verify_assignment(ga, a)
    lines = verdict.format(ga.labels)
    if verdict:
        return "ok\n", {"ok": True, "violations": []}, EXIT_OK
    return "".join(ln + "\n" for ln in lines), {"ok": False, "violations": lines}, EXIT_FAIL


def _player(kind, seat, ga, a, seed):
    if kind == "assign":
        s = strategy_from_assignment(ga, a)
        if s.player != seat:
            print(f"note: the assignment designates player {s.player}; "
                  f"player {seat} falls back to first-legal", file=sys.stderr)
            return first_legal_strategy()
        return s
    if kind == "random":
        return random_strategy(None if seed is None else seed + seat - 1)
    if kind == "minimax":
        return minimax_strategy(ga)
    if kind == "first":
        return first_legal_strategy()
    return stdin_strategy()


def cmd_play(args):
    ga = load_arena(args.file)
    a = _verified_run(ga).assignment
    p1 = _player(args.p1, 1, ga, a, args.seed)
    p2 = _player(args.p2, 2, ga, a, args.seed)
    res = play_match(p1, p2, ga)
    if res.reason != "no legal move":
        print(f"note: {res.reason}", file=sys.stderr)
    data = {"play": [ga.labels[v] for v in res.transcript], "winner": res.winner,
            "forfeit": res.forfeit, "reason": res.reason}
    return render_transcript(ga, res), data, EXIT_OK


def cmd_solve(args):
    ga = load_arena(args.file)
    value = minimax_value(ga)
    designated = designated_player(ga, _verified_run(ga).assignment)
    code = EXIT_OK
    if value != designated:
        print(f"error: minimax winner {value} differs from the assignment's player {designated}",
              file=sys.stderr)
        code = EXIT_FAIL
    text = f"winner {value}\nassignment-designated {designated}\n"
    return text, {"winner": value, "assignment_designated": designated}, code


def cmd_bench_tightness(args):
    if args.n_max < 1:
        raise InputError("--n-max must be at least 1")
    rows = []
    for n in range(1, args.n_max + 1):
        ga = tightness_instance(n)
        st = _verified_run(ga, tie_break=args.tie_break, seed=args.seed).stats
        rows.append((n, ga.vertex_count, st.iterations, iteration_bound(ga.vertex_count)))
    off = [n for n, _, it, _ in rows if it != n * n + 1]
    if off:
        print(f"note: iterations differ from n^2+1 for n in {off}", file=sys.stderr)
    over = [n for n, _, it, b in rows if it > b]
    text = "n vertices iterations bound\n" + "".join(f"{r[0]} {r[1]} {r[2]} {r[3]}\n" for r in rows)
    data = [dict(zip(("n", "vertices", "iterations", "bound"), r)) for r in rows]
    return text, data, EXIT_FAIL if over else EXIT_OK


def cmd_maxweight(args):
    g = parse_weighted(_read(args.file))
    res = max_weight_matching(g)
    lines = [f"weight {res.total_weight}"]
    lines += [f"match {u + 1} {v + 1}" for u, v in res.matching]
    lines.append("y1 " + " ".join(map(str, res.duals.y1)))
    lines.append("y2 " + " ".join(map(str, res.duals.y2)))
    lines.append(f"updates {res.updates}")
    data = {"weight": res.total_weight, "matching": [[u + 1, v + 1] for u, v in res.matching],
            "y1": list(res.duals.y1), "y2": list(res.duals.y2), "updates": res.updates}
    return "\n".join(lines) + "\n", data, EXIT_OK


# -- hypergraph commands -----------------------------------------------------------

def _load_hyper(path):
    h, u_set = parse_hypergraph(_read(path))
    if u_set is None:
        u_set = find_independent_transversal(h)
        if u_set is None:
            raise InputError("the hypergraph has no independent transversal")
    return h, augment_hypergraph(h, u_set)


def cmd_hyp_balanced(args):
    h, _ = parse_hypergraph(_read(args.file))
    bv = is_balanced_bruteforce(h)
    if bv.balanced:
        return "balanced\n", {"balanced": True, "witness": None}, EXIT_OK
    labels = h.graph.labels
    wit = [labels[x] for x in bv.witness]
    text = f"unbalanced\nwitness {' '.join(wit)}\nlength {bv.witness_length}\n"
    return text, {"balanced": False, "witness": wit, "length": bv.witness_length}, EXIT_OK


def cmd_hyp_assign(args):
    h, ha = _load_hyper(args.file)
    labels = ha.labels
    if args.search:
        method, a = "search", search_assignment_bruteforce(ha)
    elif matching_covering_bruteforce(h, ha.U) is not None or is_balanced_bruteforce(h).balanced:
        c = construct_assignment(ha)
        method, a = c.kind, c.assignment
    else:
        print("note: U is not coverable and the hypergraph is unbalanced; searching",
              file=sys.stderr)
        method, a = "search", search_assignment_bruteforce(ha)
    u_line = "U: " + " ".join(_labels(labels, ha.U))
    if a is None:
        print("error: no assignment with every vertex reachable exists", file=sys.stderr)
        return (f"{u_line}\nmethod {method}\nnone\n",
                {"U": _labels(labels, ha.U), "method": method, "assignment": None}, EXIT_FAIL)
    verdict = verify_hyper_assignment(ha, a)
    status = "ok" if verdict else "failed"
    text = (f"{u_line}\nmethod {method}\n" + render_hyper_assignment(ha, a) + f"verify {status}\n"
            + "".join(ln + "\n" for ln in verdict.format(labels)))
    hp = ha.hyper
    data = {"U": _labels(labels, ha.U), "method": method,
            "reachable": _labels(labels, a.reachable),
            "sigma": {labels[v]: (None if e is None else labels[hp.edge_element(e)])
                      for v, e in enumerate(a.sigma)},
            "verify": status, "violations": verdict.format(labels)}
    return text, data, EXIT_OK if verdict else EXIT_FAIL


def cmd_hyp_solve(args):
    h, ha = _load_hyper(args.file)
    value = hyper_minimax(ha)
    covered = matching_covering_bruteforce(h, ha.U) is not None
    agrees = (value == 2) == covered
    if not agrees:
        print("error: game value disagrees with matching coverage of U", file=sys.stderr)
    text = (f"U: {' '.join(_labels(ha.labels, ha.U))}\nwinner {value}\n"
            f"matching-covers-U {'yes' if covered else 'no'}\n"
            f"cross-check {'ok' if agrees else 'failed'}\n")
    data = {"U": _labels(ha.labels, ha.U), "winner": value, "matching_covers_U": covered,
            "cross_check": agrees}
    return text, data, EXIT_OK if agrees else EXIT_FAIL


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hallgame",
                                description="Assignments, certificates and path games on "
                                            "bipartite graphs and hypergraphs.")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--version", action="store_true", help="print the active kernel backend")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured output")
    sub = p.add_subparsers(dest="command")

    s = sub.add_parser("assign", help="compute an assignment",
                       parents=[common])
    s.add_argument("file")
    s.add_argument("--tie-break", choices=("lowest", "random"), default="lowest")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--check-invariants", action="store_true")
    s.set_defaults(func=cmd_assign)

    s = sub.add_parser("certificate", help="matching covering side 1, or a Hall violator",
                       parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_certificate)

    s = sub.add_parser("verify-assign", help="check an assignment file",
                       parents=[common])
    s.add_argument("graph")
    s.add_argument("assignment")
    s.set_defaults(func=cmd_verify)

    players = ("assign", "random", "minimax", "first", "stdin")
    s = sub.add_parser("play", help="play one game",
                       parents=[common])
    s.add_argument("file")
    s.add_argument("--p1", choices=players, default="assign")
    s.add_argument("--p2", choices=players, default="random")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_play)

    s = sub.add_parser("solve", help="exact game value",
                       parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("bench-tightness", help="iteration counts on the worst-case family",
                       parents=[common])
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--tie-break", choices=("lowest", "random"), default="lowest")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_bench_tightness)

    s = sub.add_parser("maxweight", help="maximum-weight perfect matching with duals",
                       parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_maxweight)

    hyp = sub.add_parser("hyp", help="hypergraph tools",
                       parents=[common]).add_subparsers(dest="hyp_command")
    s = hyp.add_parser("balanced", help="balancedness with a shortest odd-type witness",
                       parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_hyp_balanced)
    s = hyp.add_parser("assign", help="assignment for the augmented hypergraph",
                       parents=[common])
    s.add_argument("file")
    s.add_argument("--search", action="store_true", help="use exhaustive search")
    s.set_defaults(func=cmd_hyp_assign)
    s = hyp.add_parser("solve", help="game value with the matching cross-check",
                       parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_hyp_solve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        print(f"backend {kernel.BACKEND}")
        return EXIT_OK
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        text, data, code = args.func(args)
    except SizeBoundError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
