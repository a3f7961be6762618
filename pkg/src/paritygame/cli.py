"""Command-line interface.

``classify`` and ``solve`` print the same JSON analysis the HTTP API serves,
so scripted callers see one engine regardless of transport. ``verify`` runs
the self-check suites. ``play`` is a small interactive loop for all three
variants, and ``serve`` starts the HTTP API.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import children as ch
from . import sequence_game as sg
from . import verify as verify_mod
from .classify import classify
from .domain import Position
from .errors import GameError
from .oracle import solve_finite
from .order import Parity
from .service import (
    SessionStore,
    analysis_payload,
    apply_sequence_label,
    create_session,
    play_human_move,
    position_analysis,
    state_payload,
)
from .textio import (
    parse_domain,
    parse_domain_raw,
    parse_occupied,
    parse_offset,
    parse_sequence,
)
from .domain import Address, apply_move, normalize_domain


def _build_position(args) -> Position:
    raw = parse_domain_raw(args.domain)
    domain = normalize_domain(raw)
    if domain.blocks != tuple(raw):
        print(f"note: domain normalized to {domain.render()}", file=sys.stderr)
    occupied = parse_occupied(domain, args.occupied or "")
    parity = Parity(args.parity)
    return Position(domain, occupied, parity, args.turns)


def cmd_classify(args) -> int:
    pos = _build_position(args)
    print(json.dumps(position_analysis(pos), sort_keys=True))
    return 0


def cmd_solve(args) -> int:
    pos = _build_position(args)
    verdict = solve_finite(pos, cap=args.cap)
    print(json.dumps({"verdict": verdict.render(), "phrase": verdict.phrase(pos.mover)}))
    return 0


def cmd_delta(args) -> int:
    seq = parse_sequence(args.seq)
    out = {
        "delta": sg.delta(seq),
        "mover": str(seq.mover),
        "winner": str(sg.winner(seq)),
        "best_move": None,
        "successor": None,
    }
    if not seq.terminal and sg.winner(seq) is seq.mover:
        mv, nxt = sg.best_move(seq)
        out["best_move"] = mv.render()
        out["successor"] = list(nxt.terms)
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        if name == "finite-sweep":
            result = verify_mod.finite_sweep(max_d=args.max_d, bound=args.bound)
        elif name == "selfplay":
            result = verify_mod.selfplay(
                finite_max_d=min(args.max_d, 10),
                symbolic_count=args.playouts,
                report_path=args.report,
            )
        elif name == "bounds":
            result = verify_mod.bound_insensitivity()
        elif name == "bisim":
            result = verify_mod.bisim(max_d=min(args.max_d, 9))
        elif name == "delta-sweep":
            result = verify_mod.delta_sweep()
        elif name == "examples":
            result = verify_mod.examples()
        else:
            result = verify_mod.move_rules(max_d=min(args.max_d, 10))
        print(f"== {result.name} ({result.elapsed:.1f}s) ==")
        for check in result.checks:
            mark = "PASS" if check.passed else "FAIL"
            detail = f"  [{check.detail}]" if check.detail else ""
            print(f"  {mark}  {check.label}{detail}")
        for ce in result.counterexamples:
            print(f"  counterexample: {ce}")
        failed = failed or not result.passed
    return 1 if failed else 0


def cmd_play(args) -> int:
    store = SessionStore()
    config: dict = {}
    if args.variant == "line":
        config = {"domain": args.domain, "occupied": args.occupied or "", "turns": args.turns,
                  "parity": args.parity}
    elif args.variant == "pennies":
        config = {"clumps": args.clumps}
    else:
        config = {"pieces": args.pieces}
    if args.engine_side:
        config["engine_side"] = args.engine_side
    session = create_session(store, args.variant, config)
    print(f"session {session.id}: engine plays {session.engine_side}", flush=True)
    _show(session)
    while not session.over:
        try:
            line = input("move> ").strip()
        except EOFError:
            return 0
        if line in ("q", "quit", "exit"):
            return 0
        try:
            move = _parse_cli_move(session, line)
            play_human_move(session, move)
        except (GameError, ValueError) as exc:
            print(f"illegal: {exc}")
            continue
        _show(session)
    print("game over")
    return 0


def _parse_cli_move(session, line: str) -> dict:
    if session.variant == "line":
        if ":" not in line:
            line = f"0:{int(line) - 1}"  # bare 1-based position on a finite line
        block, off = line.split(":", 1)
        return {"block": int(block), "offset": off}
    parts = line.split(":")
    move = {"action": parts[0]}
    if len(parts) > 1:
        move["index"] = int(parts[1])
    if len(parts) > 2:
        move["left"] = int(parts[2])
    return move


def _show(session):
    state = state_payload(session)
    analysis = analysis_payload(session.state)
    if session.variant == "line":
        print(f"domain {state['domain']}  occupied {state['occupied']}  "
              f"parity {state['parity']}  remaining {state['remaining']}")
    elif session.variant == "pennies":
        print("clumps: " + "|".join(map(str, state["clumps"])))
    else:
        print("pieces: " + state["pieces"])
    bits = [f"verdict {analysis['verdict']}", f"case {analysis['case']}"]
    if analysis["delta"] is not None:
        bits.append(f"delta {analysis['delta']}")
    if analysis["pivots"]:
        bits.append(f"pivots {len(analysis['pivots'])}")
    if analysis["to_move"]:
        bits.append(f"to move {analysis['to_move']}")
    if state["winner"]:
        bits.append(f"winner {state['winner']}")
    print("  " + "  ".join(bits))


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(log_path=args.log_file, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paritygame")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_position_args(p):
        p.add_argument("--domain", required=True, help="domain string, e.g. finite:12 or f1,z")
        p.add_argument("--occupied", default="", help="occupied points, e.g. 3,5 or 0:2,1:1/2")
        p.add_argument("--turns", type=int, required=True)
        p.add_argument("--parity", choices=["even", "odd"], default="even")

    p = sub.add_parser("classify", help="closed-form verdict for any position")
    add_position_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="exhaustive oracle verdict (finite domains)")
    add_position_args(p)
    p.add_argument("--cap", type=int, default=14)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("delta", help="delta, winner, and best move of a gap sequence")
    p.add_argument("--seq", required=True, help="comma-separated terms, e.g. 3,5,2")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument(
        "--suite",
        choices=["finite-sweep", "delta-sweep", "bisim", "selfplay", "examples",
                 "move-rules", "bounds", "all"],
        default="all",
    )
    p.add_argument("--max-d", type=int, default=11)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--playouts", type=int, default=10000, help="symbolic self-play positions")
    p.add_argument("--report", default=None, help="write playout records (JSONL) here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="interactive game against the engine")
    p.add_argument("--variant", choices=["line", "pennies", "pieces"], required=True)
    p.add_argument("--domain", default="finite:8")
    p.add_argument("--occupied", default="")
    p.add_argument("--turns", type=int, default=5)
    p.add_argument("--parity", choices=["even", "odd"], default="even")
    p.add_argument("--clumps", default="2|3")
    p.add_argument("--pieces", default="wbwwbw")
    p.add_argument("--engine-side", choices=["black", "white"], default=None)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="start the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8600)
    p.add_argument("--log-file", default=None)
    p.add_argument("--ui-dir", default=None, help="serve the web client from this directory")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
