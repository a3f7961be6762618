"""Session-based HTTP API for live play, shared by the CLI and the web UI.

Endpoints (JSON bodies; field names are pinned in docs/api.md):

* ``POST /sessions`` ``{variant, config}`` -> ``{id, state, analysis}``
* ``GET /sessions/{id}`` -> ``{state, history, analysis}``
* ``POST /sessions/{id}/moves`` ``{move}`` -> ``{state, engine_move, analysis}``
  (400 illegal move, 404 unknown session, 409 not your turn)
* ``POST /analyze`` ``{position}`` -> ``{verdict, phrase, case, delta, sequence,
  pivots, ell, to_move}``

Sessions live in memory, one writer at a time per session; an optional
append-only JSONL log records every move event for replay.
"""

from __future__ import annotations

import json
import random
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from fastapi.responses import RedirectResponse
from fastapi.staticfiles import StaticFiles

from . import children as ch
from . import sequence_game as sg
from .classify import classify
from .domain import Address, Position, apply_move, canonical_moves, features, occupied_runs
from .errors import GameError, IllegalMoveError
from .order import Parity
from .strategy import ClassifierLookahead, GreedyParity, MinimaxOracle, winning_move
from .textio import (
    parse_domain,
    parse_occupied,
    parse_offset,
    parse_pennies,
    parse_pieces,
    render_offset,
)
from .verdicts import Player

GameState = Union[Position, ch.PenniesState, ch.PiecesState]


# ---------------------------------------------------------------------------
# analysis payloads


def position_analysis(pos: Position, case_value: Optional[str] = None) -> dict:
    verdict, label = classify(pos)
    f = features(pos)
    delta_value = None
    sequence = None
    if pos.domain.is_finite and pos.free == pos.remaining + 1:
        seq = sg.encode(pos)
        delta_value = sg.delta(seq)
        sequence = list(seq.terms)
    pivots = [
        {
            "block": r.block,
            "low": render_offset(r.low.offset),
            "high": render_offset(r.high.offset),
            "size": r.size,
        }
        for r in occupied_runs(pos)
        if r.is_pivot
    ]
    return {
        "verdict": verdict.render(),
        "phrase": verdict.phrase(pos.mover) if pos.remaining > 0 else verdict.render(),
        "case": case_value or label.value,
        "delta": delta_value,
        "sequence": sequence,
        "pivots": pivots,
        "ell": f.end_run_size,
        "to_move": str(pos.mover) if pos.remaining > 0 else None,
    }


def sequence_state_analysis(state: Union[ch.PenniesState, ch.PiecesState]) -> dict:
    seq = (
        ch.pennies_to_sequence(state)
        if isinstance(state, ch.PenniesState)
        else ch.pieces_to_sequence(state)
    )
    if state.terminal:
        winner = (
            ch.pennies_winner(state)
            if isinstance(state, ch.PenniesState)
            else ch.pieces_winner(state)
        )
        to_move = None
    else:
        winner = sg.winner(seq)
        to_move = str(state.mover)
    return {
        "verdict": f"{winner}-controls",
        "phrase": f"{winner}-controls",
        "case": "delta-game",
        "delta": sg.delta(seq),
        "sequence": list(seq.terms),
        "pivots": None,
        "ell": None,
        "to_move": to_move,
    }


# ---------------------------------------------------------------------------
# sessions


@dataclass
class Session:
    id: str
    variant: str
    state: GameState
    engine_side: Player
    engine_parity: Optional[Parity]
    initial_state: GameState
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def over(self) -> bool:
        return _is_over(self.state)

    @property
    def to_move(self) -> Optional[Player]:
        return None if self.over else _mover(self.state)


def _is_over(state: GameState) -> bool:
    if isinstance(state, Position):
        return state.remaining == 0
    return state.terminal


def _mover(state: GameState) -> Player:
    return state.mover


def _winner_text(state: GameState) -> Optional[str]:
    if not _is_over(state):
        return None
    if isinstance(state, Position):
        return None  # parity outcome, not a side; the analysis carries it
    if isinstance(state, ch.PenniesState):
        return str(ch.pennies_winner(state))
    return str(ch.pieces_winner(state))


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add(self, session: Session):
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise KeyError(session_id)
        return session


# ---------------------------------------------------------------------------
# engine policies


def engine_line_move(pos: Position, side: Player, objective: Parity) -> Address:
    verdict, _ = classify(pos)
    if verdict.grants(side, objective):
        return winning_move(pos, objective)
    rng = random.Random(0)
    if pos.domain.is_finite and len(pos.domain.blocks) == 1 and pos.domain.blocks[0].size <= 14:
        return MinimaxOracle(objective).choose(pos, rng)
    return GreedyParity(objective).choose(pos, rng)


def engine_sequence_move(state: Union[ch.PenniesState, ch.PiecesState], side: Player) -> str:
    seq = (
        ch.pennies_to_sequence(state)
        if isinstance(state, ch.PenniesState)
        else ch.pieces_to_sequence(state)
    )
    moves = (
        ch.pennies_moves(state) if isinstance(state, ch.PenniesState) else ch.pieces_moves(state)
    )
    if sg.winner(seq) is side:
        mv, _ = sg.best_move(seq)
        if isinstance(state, ch.PenniesState):
            label = _pennies_label(mv)
            if any(l == label for l, _ in moves):
                return label
        else:
            label = ch.pieces_move_for_delta(state, mv)
            if label is not None:
                return label
    # losing (or no direct realization): steer |delta| in this side's direction
    def score(nxt) -> int:
        d = abs(
            sg.delta(
                ch.pennies_to_sequence(nxt)
                if isinstance(nxt, ch.PenniesState)
                else ch.pieces_to_sequence(nxt)
            )
        )
        return -d if side is Player.BLACK else d

    return min(moves, key=lambda pair: (score(pair[1]), pair[0]))[0]


def _pennies_label(mv: sg.DeltaMove) -> str:
    if mv.kind is sg.MoveKind.DEC_HEAD:
        return "take-first"
    if mv.kind is sg.MoveKind.DEC_TAIL:
        return "take-last"
    if mv.kind is sg.MoveKind.REMOVE_UNIT:
        return f"remove-clump:{mv.index}"
    if mv.kind is sg.MoveKind.SPLIT:
        return f"split:{mv.index}:{mv.left}"
    return f"merge:{mv.index}"


# ---------------------------------------------------------------------------
# payload rendering and parsing


def state_payload(session: Session) -> dict:
    state = session.state
    base = {
        "variant": session.variant,
        "to_move": str(session.to_move) if session.to_move else None,
        "over": session.over,
        "winner": _winner_text(state),
        "engine_side": str(session.engine_side),
        "engine_parity": session.engine_parity.value if session.engine_parity else None,
    }
    if isinstance(state, Position):
        candidates = (
            [
                {"block": a.block, "offset": render_offset(a.offset)}
                for a in canonical_moves(state)
            ]
            if state.remaining > 0
            else []
        )
        base.update(
            {
                "domain": state.domain.render(),
                "occupied": [
                    {"block": a.block, "offset": render_offset(a.offset)}
                    for a in state.sorted_occupied()
                ],
                "parity": state.parity.value,
                "remaining": state.remaining,
                "candidates": candidates,
            }
        )
    elif isinstance(state, ch.PenniesState):
        base["clumps"] = list(state.clumps)
    else:
        base["pieces"] = "".join(state.pieces)
    return base


def analysis_payload(state: GameState) -> dict:
    if isinstance(state, Position):
        return position_analysis(state)
    return sequence_state_analysis(state)


def _parse_line_move(state: Position, move: dict) -> Address:
    try:
        return Address(int(move["block"]), parse_offset(move["offset"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise IllegalMoveError(f"line moves need block and offset fields: {exc}") from exc


def _parse_sequence_move(move: dict) -> str:
    try:
        action = move["action"]
    except (KeyError, TypeError) as exc:
        raise IllegalMoveError("move needs an action field") from exc
    if action in ("take-first", "take-last", "remove-left", "remove-right"):
        return action
    if action == "remove-clump":
        return f"remove-clump:{int(move['index'])}"
    if action == "split":
        return f"split:{int(move['index'])}:{int(move['left'])}"
    if action == "merge":
        return f"merge:{int(move['index'])}"
    if action == "remove-black":
        return f"remove-black:{int(move['index'])}"
    if action == "merge-whites":
        return f"merge-whites:{int(move['index'])}"
    raise IllegalMoveError(f"unknown action {action!r}")


def _label_to_move_payload(label: str) -> dict:
    parts = label.split(":")
    if parts[0] in ("take-first", "take-last", "remove-left", "remove-right"):
        return {"action": parts[0]}
    if parts[0] == "split":
        return {"action": "split", "index": int(parts[1]), "left": int(parts[2])}
    return {"action": parts[0], "index": int(parts[1])}


def apply_sequence_label(state, label: str):
    moves = (
        ch.pennies_moves(state) if isinstance(state, ch.PenniesState) else ch.pieces_moves(state)
    )
    for l, nxt in moves:
        if l == label:
            return nxt
    # name the violated rule when the move shape itself is recognizable
    if isinstance(state, ch.PiecesState):
        ch.pieces_move_delta(state, label)  # raises with the specific rule
    else:
        mv = ch.pennies_move_delta(label)
        sg.apply_delta_move(ch.pennies_to_sequence(state), mv)  # raises with the rule
    raise IllegalMoveError(f"move {label!r} is not legal here")


# ---------------------------------------------------------------------------
# session engine


def create_session(store: SessionStore, variant: str, config: dict) -> Session:
    if variant == "line":
        domain = parse_domain(config["domain"])
        occupied = (
            parse_occupied(domain, config["occupied"])
            if isinstance(config.get("occupied"), str)
            else frozenset(
                Address(int(i["block"]), parse_offset(i["offset"]))
                for i in config.get("occupied", ())
            )
        )
        parity = Parity(config.get("parity", "even"))
        state: GameState = Position(domain, occupied, parity, int(config["turns"]))
        verdict, _ = classify(state)
        if verdict.controller is not None:
            default_side, default_parity = verdict.controller, Parity.EVEN
        else:
            default_side, default_parity = Player.BLACK, verdict.forced
        engine_side = Player(config.get("engine_side", str(default_side)))
        engine_parity = Parity(config["engine_parity"]) if config.get("engine_parity") else default_parity
    elif variant == "pennies":
        clumps = config["clumps"]
        state = parse_pennies(clumps) if isinstance(clumps, str) else ch.PenniesState(tuple(clumps))
        engine_side, engine_parity = _sequence_engine_side(
            ch.pennies_to_sequence(state), config
        )
    elif variant == "pieces":
        pieces = config["pieces"]
        state = parse_pieces(pieces) if isinstance(pieces, str) else ch.PiecesState(tuple(pieces))
        engine_side, engine_parity = _sequence_engine_side(ch.pieces_to_sequence(state), config)
    else:
        raise ValueError(f"unknown variant {variant!r}")

    session = Session(
        id=uuid.uuid4().hex[:12],
        variant=variant,
        state=state,
        engine_side=engine_side,
        engine_parity=engine_parity,
        initial_state=state,
    )
    # the human always faces their own turn after creation
    if not session.over and session.to_move is session.engine_side:
        _engine_reply(session)
    store.add(session)
    return session


def _sequence_engine_side(seq: sg.GapSequence, config: dict) -> tuple[Player, None]:
    default = sg.winner(seq)
    return Player(config.get("engine_side", str(default))), None


def _engine_reply(session: Session) -> Optional[dict]:
    if session.over or session.to_move is not session.engine_side:
        return None
    if isinstance(session.state, Position):
        addr = engine_line_move(session.state, session.engine_side, session.engine_parity)
        session.state = apply_move(session.state, addr)
        payload = {"block": addr.block, "offset": render_offset(addr.offset)}
    else:
        label = engine_sequence_move(session.state, session.engine_side)
        session.state = apply_sequence_label(session.state, label)
        payload = _label_to_move_payload(label)
    session.history.append({"by": "engine", "move": payload})
    return payload


def play_human_move(session: Session, move: dict) -> Optional[dict]:
    """Apply the human move, then the engine's reply. Returns the engine move."""
    if isinstance(session.state, Position):
        addr = _parse_line_move(session.state, move)
        session.state = apply_move(session.state, addr)
        session.history.append(
            {"by": "human", "move": {"block": addr.block, "offset": render_offset(addr.offset)}}
        )
    else:
        label = _parse_sequence_move(move)
        session.state = apply_sequence_label(session.state, label)
        session.history.append({"by": "human", "move": _label_to_move_payload(label)})
    return _engine_reply(session)


def replay(session: Session) -> GameState:
    """Re-run the recorded history from the initial state (replay determinism)."""
    state = session.initial_state
    for event in session.history:
        if isinstance(state, Position):
            addr = _parse_line_move(state, event["move"])
            state = apply_move(state, addr)
        else:
            state = apply_sequence_label(state, _parse_sequence_move(event["move"]))
    return state


# ---------------------------------------------------------------------------
# FastAPI app


def create_app(
    store: Optional[SessionStore] = None,
    log_path: Optional[str] = None,
    ui_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="paritygame", version="0.1.0")
    sessions = store if store is not None else SessionStore()
    log_lock = threading.Lock()

    def log_event(event: dict):
        if log_path:
            with log_lock, open(log_path, "a") as fh:
                fh.write(json.dumps(event, sort_keys=True) + "\n")

    @app.post("/sessions")
    def post_sessions(body: dict):
        variant = body.get("variant")
        config = body.get("config", {})
        try:
            session = create_session(sessions, variant, config)
        except (GameError, KeyError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        log_event({"session": session.id, "event": "created", "variant": variant, "config": config})
        return {
            "id": session.id,
            "state": state_payload(session),
            "analysis": analysis_payload(session.state),
        }

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        try:
            session = sessions.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session")
        with session.lock:
            return {
                "state": state_payload(session),
                "history": list(session.history),
                "analysis": analysis_payload(session.state),
            }

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, body: dict):
        try:
            session = sessions.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session")
        with session.lock:
            if session.over:
                raise HTTPException(status_code=409, detail="the game is over")
            if session.to_move is session.engine_side:
                raise HTTPException(status_code=409, detail="not your turn")
            try:
                engine_move = play_human_move(session, body.get("move", {}))
            except (GameError, ValueError) as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            log_event(
                {
                    "session": session.id,
                    "event": "moves",
                    "human": session.history[-2 if engine_move else -1]["move"],
                    "engine": engine_move,
                }
            )
            return {
                "state": state_payload(session),
                "engine_move": engine_move,
                "analysis": analysis_payload(session.state),
            }

    @app.post("/analyze")
    def analyze(body: dict):
        doc = body.get("position", body)
        try:
            from .textio import position_from_doc

            pos = position_from_doc(doc)
        except (GameError, KeyError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return position_analysis(pos)

    if ui_dir and Path(ui_dir).is_dir():

        @app.get("/")
        def root():
            return RedirectResponse("/ui/")

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
