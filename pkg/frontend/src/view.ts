// Pure derivation of the board view from the last API payload. No game
// logic lives here: legality, verdicts, and the delta meter all arrive from
// the server.

import type { AnalysisPayload, Offset, Side, StatePayload, Variant } from "./types.js";

export interface CellView {
  block: number;
  offset: Offset;
  occupied: boolean;
  clickable: boolean;
  pivot: boolean;
  label: string;
}

export interface StripView {
  block: number;
  token: string; // display token, e.g. "f6", "w+", "z", "dense"
  dense: boolean;
  fadeLeft: boolean;
  fadeRight: boolean;
  cells: CellView[];
}

export interface PennyClumpView {
  index: number; // 1-based
  size: number;
}

export interface PieceView {
  index: number; // 1-based
  color: "b" | "w";
  barAfter: boolean; // encoding visualization: a bar after each black piece
}

export interface BoardView {
  variant: Variant;
  over: boolean;
  winner: Side | null;
  toMove: Side | null;
  engineSide: Side;
  engineParity: string | null;
  banner: string;
  verdict: string;
  phrase: string;
  caseLabel: string;
  delta: number | null;
  deltaSign: "+" | "-" | "0" | null;
  ell: number | null;
  sequence: number[] | null;
  strips: StripView[] | null;
  clumps: PennyClumpView[] | null;
  pieces: PieceView[] | null;
}

function offsetValue(offset: Offset): number {
  if (typeof offset === "number") return offset;
  const [p, q] = offset.split("/");
  return Number(p) / Number(q);
}

function offsetKey(offset: Offset): string {
  return typeof offset === "number" ? String(offset) : offset;
}

function parseDomainTokens(domain: string): string[] {
  if (domain.startsWith("finite:")) return [`f${domain.slice("finite:".length)}`];
  return domain.split(",");
}

function lineStrips(state: StatePayload): StripView[] {
  const tokens = parseDomainTokens(state.domain ?? "");
  const occupied = state.occupied ?? [];
  const candidates = state.candidates ?? [];
  return tokens.map((token, block) => {
    const dense = token.startsWith("dense");
    const occHere = occupied.filter((o) => o.block === block);
    const candHere = candidates.filter((c) => c.block === block);
    const cells = new Map<string, CellView>();
    if (/^f\d+$/.test(token)) {
      const size = Number(token.slice(1));
      for (let off = 0; off < size; off++) {
        cells.set(String(off), {
          block,
          offset: off,
          occupied: false,
          clickable: false,
          pivot: false,
          label: String(off + 1),
        });
      }
    }
    for (const c of candHere) {
      cells.set(offsetKey(c.offset), {
        block,
        offset: c.offset,
        occupied: false,
        clickable: true,
        pivot: false,
        label: offsetKey(c.offset),
      });
    }
    for (const o of occHere) {
      const existing = cells.get(offsetKey(o.offset));
      cells.set(offsetKey(o.offset), {
        block,
        offset: o.offset,
        occupied: true,
        clickable: false,
        pivot: false,
        label: existing?.label ?? offsetKey(o.offset),
      });
    }
    // keep finite cells clickable only when the server lists them
    for (const c of candHere) {
      const cell = cells.get(offsetKey(c.offset));
      if (cell && !cell.occupied) cell.clickable = true;
    }
    const ordered = [...cells.values()].sort((a, b) => {
      const da = token === "w-" ? -offsetValue(a.offset) : offsetValue(a.offset);
      const db = token === "w-" ? -offsetValue(b.offset) : offsetValue(b.offset);
      return da - db;
    });
    return {
      block,
      token: dense ? "dense" : token,
      dense,
      fadeLeft: token === "w-" || token === "z" || dense,
      fadeRight: token === "w+" || token === "z" || dense,
      cells: ordered,
    };
  });
}

function markPivots(strips: StripView[], analysis: AnalysisPayload): void {
  for (const pivot of analysis.pivots ?? []) {
    const strip = strips[pivot.block];
    if (!strip) continue;
    const lo = offsetValue(pivot.low);
    const hi = offsetValue(pivot.high);
    const [a, b] = lo <= hi ? [lo, hi] : [hi, lo];
    for (const cell of strip.cells) {
      const v = offsetValue(cell.offset);
      if (cell.occupied && v >= a && v <= b) cell.pivot = true;
    }
  }
}

function banner(state: StatePayload, analysis: AnalysisPayload): string {
  if (state.over) {
    if (state.winner) return `game over: ${state.winner} wins`;
    return `game over: final parity ${state.parity}`;
  }
  const engine = state.to_move === state.engine_side ? " (engine)" : " (you)";
  return `${state.to_move} to move${engine} — ${analysis.phrase}`;
}

export function deriveBoardView(state: StatePayload, analysis: AnalysisPayload): BoardView {
  const base: BoardView = {
    variant: state.variant,
    over: state.over,
    winner: state.winner,
    toMove: state.to_move,
    engineSide: state.engine_side,
    engineParity: state.engine_parity,
    banner: banner(state, analysis),
    verdict: analysis.verdict,
    phrase: analysis.phrase,
    caseLabel: analysis.case,
    delta: analysis.delta,
    deltaSign:
      analysis.delta === null ? null : analysis.delta > 0 ? "+" : analysis.delta < 0 ? "-" : "0",
    ell: analysis.ell,
    sequence: analysis.sequence,
    strips: null,
    clumps: null,
    pieces: null,
  };
  if (state.variant === "line") {
    const strips = lineStrips(state);
    markPivots(strips, analysis);
    base.strips = strips;
  } else if (state.variant === "pennies") {
    base.clumps = (state.clumps ?? []).map((size, i) => ({ index: i + 1, size }));
  } else {
    const pieces = state.pieces ?? "";
    base.pieces = [...pieces].map((color, i) => ({
      index: i + 1,
      color: color as "b" | "w",
      barAfter: color === "b",
    }));
  }
  return base;
}
