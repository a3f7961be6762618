import { describe, expect, it } from "vitest";

import { NO_SELECTION, clickClump, clickLineCell, clickPiece } from "../src/moves.js";
import { deriveBoardView } from "../src/view.js";
import type { AnalysisPayload, StatePayload } from "../src/types.js";

const analysis: AnalysisPayload = {
  verdict: "white-controls",
  phrase: "first-player",
  case: "FIN_NOPIV",
  delta: null,
  sequence: null,
  pivots: [],
  ell: 0,
  to_move: "white",
};

function lineView() {
  const state: StatePayload = {
    variant: "line",
    to_move: "white",
    over: false,
    winner: null,
    engine_side: "black",
    engine_parity: "even",
    domain: "finite:5",
    occupied: [{ block: 0, offset: 2 }],
    parity: "even",
    remaining: 3,
    candidates: [0, 1, 3, 4].map((offset) => ({ block: 0, offset })),
  };
  return deriveBoardView(state, analysis);
}

function penniesView(clumps: number[]) {
  const state: StatePayload = {
    variant: "pennies",
    to_move: "black",
    over: false,
    winner: null,
    engine_side: "white",
    engine_parity: null,
    clumps,
  };
  return deriveBoardView(state, { ...analysis, case: "delta-game" });
}

function piecesView(pieces: string) {
  const state: StatePayload = {
    variant: "pieces",
    to_move: "black",
    over: false,
    winner: null,
    engine_side: "white",
    engine_parity: null,
    pieces,
  };
  return deriveBoardView(state, { ...analysis, case: "delta-game" });
}

describe("line clicks", () => {
  it("free candidate submits a move", () => {
    const res = clickLineCell(lineView(), 0, 1);
    expect(res).toMatchObject({ outcome: "move", move: { block: 0, offset: 1 } });
  });

  it("occupied cell rejects inline without a round-trip", () => {
    const res = clickLineCell(lineView(), 0, 2);
    expect(res).toMatchObject({ outcome: "reject", reason: "occupied" });
  });
});

describe("pennies clicks", () => {
  it("single-penny clump removes immediately", () => {
    const res = clickClump(penniesView([1, 3]), NO_SELECTION, 1, 1);
    expect(res).toMatchObject({ outcome: "move", move: { action: "remove-clump", index: 1 } });
  });

  it("middle penny of a four-clump then a split point submits a split", () => {
    const view = penniesView([4, 2]);
    const first = clickClump(view, NO_SELECTION, 1, 2);
    expect(first.outcome).toBe("select");
    const second = clickClump(view, first.selection, 1, 2);
    expect(second).toMatchObject({
      outcome: "move",
      move: { action: "split", index: 1, left: 2 },
    });
  });

  it("selected clump then its first penny takes from the front", () => {
    const view = penniesView([3, 2]);
    const first = clickClump(view, NO_SELECTION, 1, 3);
    const second = clickClump(view, first.selection, 1, 1);
    expect(second).toMatchObject({ outcome: "move", move: { action: "take-first" } });
  });

  it("adjacent clump click merges", () => {
    const view = penniesView([2, 3]);
    const first = clickClump(view, NO_SELECTION, 1, 1);
    const second = clickClump(view, first.selection, 2, 1);
    expect(second).toMatchObject({ outcome: "move", move: { action: "merge", index: 1 } });
  });
});

describe("pieces clicks", () => {
  it("black piece removes immediately", () => {
    const res = clickPiece(piecesView("wbw"), NO_SELECTION, 2);
    expect(res).toMatchObject({ outcome: "move", move: { action: "remove-black", index: 2 } });
  });

  it("two adjacent whites merge to black", () => {
    const view = piecesView("wwb");
    const first = clickPiece(view, NO_SELECTION, 1);
    expect(first.outcome).toBe("select");
    const second = clickPiece(view, first.selection, 2);
    expect(second).toMatchObject({ outcome: "move", move: { action: "merge-whites", index: 1 } });
  });

  it("double-clicking an end white removes it from that end", () => {
    const view = piecesView("wbw");
    const first = clickPiece(view, NO_SELECTION, 3);
    const second = clickPiece(view, first.selection, 3);
    expect(second).toMatchObject({ outcome: "move", move: { action: "remove-right" } });
  });
});
