// Application wiring: one session at a time, one in-flight request at a time.

import { ApiClient, ApiError } from "./api.js";
import { NO_SELECTION, Selection, clickClump, clickLineCell, clickPiece } from "./moves.js";
import type { AnalysisPayload, Move, StatePayload, Variant } from "./types.js";
import { BoardView, deriveBoardView } from "./view.js";
import { render } from "./render.js";

const api = new ApiClient("");

let sessionId = "";
let view: BoardView | null = null;
let selection: Selection = NO_SELECTION;
let busy = false;
let notice = "";

const boardRoot = () => document.getElementById("board")!;

function show(state: StatePayload, analysis: AnalysisPayload): void {
  view = deriveBoardView(state, analysis);
  paint();
}

function paint(): void {
  if (!view) return;
  render(boardRoot(), view, busy, notice, {
    onLineCell: (block, offset) => handle(clickLineCell(view!, block, offset)),
    onClump: (index, penny) => handle(clickClump(view!, selection, index, penny)),
    onPiece: (index) => handle(clickPiece(view!, selection, index)),
  });
}

function handle(result: ReturnType<typeof clickLineCell>): void {
  switch (result.outcome) {
    case "move":
      selection = NO_SELECTION;
      void submit(result.move);
      return;
    case "select":
      selection = result.selection;
      notice = result.hint;
      break;
    case "reject":
      selection = result.selection;
      notice = result.reason;
      break;
    case "ignore":
      return;
  }
  paint();
}

async function submit(move: Move): Promise<void> {
  if (busy || !sessionId) return;
  busy = true;
  notice = "";
  paint();
  try {
    const res = await api.postMove(sessionId, move);
    show(res.state, res.analysis);
  } catch (err) {
    notice = err instanceof ApiError ? `rejected: ${err.message}` : String(err);
  } finally {
    busy = false;
    paint();
  }
}

async function start(): Promise<void> {
  const variant = (document.getElementById("variant") as HTMLSelectElement).value as Variant;
  const config: Record<string, unknown> = {};
  if (variant === "line") {
    config.domain = (document.getElementById("domain") as HTMLInputElement).value;
    config.turns = Number((document.getElementById("turns") as HTMLInputElement).value);
    const occupied = (document.getElementById("occupied") as HTMLInputElement).value.trim();
    if (occupied) config.occupied = occupied;
  } else if (variant === "pennies") {
    config.clumps = (document.getElementById("clumps") as HTMLInputElement).value;
  } else {
    config.pieces = (document.getElementById("pieces") as HTMLInputElement).value;
  }
  busy = true;
  notice = "";
  try {
    const res = await api.createSession(variant, config);
    sessionId = res.id;
    selection = NO_SELECTION;
    show(res.state, res.analysis);
  } catch (err) {
    notice = err instanceof ApiError ? `cannot start: ${err.message}` : String(err);
    document.getElementById("board")!.textContent = notice;
  } finally {
    busy = false;
    if (view) paint();
  }
}

function syncConfigVisibility(): void {
  const variant = (document.getElementById("variant") as HTMLSelectElement).value;
  for (const v of ["line", "pennies", "pieces"]) {
    document.getElementById(`config-${v}`)!.style.display = v === variant ? "" : "none";
  }
}

document.getElementById("start")!.addEventListener("click", () => void start());
document.getElementById("variant")!.addEventListener("change", syncConfigVisibility);
syncConfigVisibility();
