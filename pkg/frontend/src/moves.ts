// Click-to-move selection machine. This mirrors the API's error contract as
// *hints* only (e.g. an occupied cell is rejected without a round-trip); the
// server remains the authority on legality.

import type { Move } from "./types.js";
import type { BoardView } from "./view.js";

export interface Selection {
  kind: "none" | "clump" | "piece";
  index: number; // 1-based clump or piece index
}

export const NO_SELECTION: Selection = { kind: "none", index: 0 };

export type ClickResult =
  | { outcome: "move"; move: Move; selection: Selection }
  | { outcome: "select"; selection: Selection; hint: string }
  | { outcome: "reject"; reason: string; selection: Selection }
  | { outcome: "ignore"; selection: Selection };

export function clickLineCell(view: BoardView, block: number, offset: number | string): ClickResult {
  const strip = view.strips?.[block];
  const cell = strip?.cells.find((c) => String(c.offset) === String(offset));
  if (!cell) return { outcome: "ignore", selection: NO_SELECTION };
  if (cell.occupied) {
    return { outcome: "reject", reason: "occupied", selection: NO_SELECTION };
  }
  if (!cell.clickable) {
    return { outcome: "reject", reason: "not a listed candidate", selection: NO_SELECTION };
  }
  return { outcome: "move", move: { block, offset: cell.offset }, selection: NO_SELECTION };
}

export function clickClump(view: BoardView, sel: Selection, index: number, penny: number): ClickResult {
  // ``penny`` is the 1-based position inside the clicked clump
  const clumps = view.clumps ?? [];
  const clump = clumps.find((c) => c.index === index);
  if (!clump) return { outcome: "ignore", selection: sel };
  const k = clumps.length;
  if (sel.kind === "clump" && Math.abs(sel.index - index) === 1) {
    const left = Math.min(sel.index, index);
    return { outcome: "move", move: { action: "merge", index: left }, selection: NO_SELECTION };
  }
  if (sel.kind === "clump" && sel.index === index) {
    // second click inside the selected clump: ends take, interior splits
    if (index === 1 && penny === 1) {
      return { outcome: "move", move: { action: "take-first" }, selection: NO_SELECTION };
    }
    if (index === k && penny === clump.size) {
      return { outcome: "move", move: { action: "take-last" }, selection: NO_SELECTION };
    }
    if (penny >= 1 && penny <= clump.size - 2) {
      return {
        outcome: "move",
        move: { action: "split", index, left: penny },
        selection: NO_SELECTION,
      };
    }
    return { outcome: "reject", reason: "pick a split point or an end penny", selection: sel };
  }
  if (clump.size === 1) {
    return { outcome: "move", move: { action: "remove-clump", index }, selection: NO_SELECTION };
  }
  return {
    outcome: "select",
    selection: { kind: "clump", index },
    hint: "now pick a split point, an end penny, or an adjacent clump to merge",
  };
}

export function clickPiece(view: BoardView, sel: Selection, index: number): ClickResult {
  const pieces = view.pieces ?? [];
  const piece = pieces.find((p) => p.index === index);
  if (!piece) return { outcome: "ignore", selection: sel };
  if (piece.color === "b") {
    return {
      outcome: "move",
      move: { action: "remove-black", index },
      selection: NO_SELECTION,
    };
  }
  if (sel.kind === "piece") {
    if (Math.abs(sel.index - index) === 1) {
      const left = Math.min(sel.index, index);
      const leftPiece = pieces.find((p) => p.index === left);
      const rightPiece = pieces.find((p) => p.index === left + 1);
      if (leftPiece?.color === "w" && rightPiece?.color === "w") {
        return {
          outcome: "move",
          move: { action: "merge-whites", index: left },
          selection: NO_SELECTION,
        };
      }
      return { outcome: "reject", reason: "only two adjacent whites merge", selection: NO_SELECTION };
    }
    if (sel.index === index) {
      if (index === 1) {
        return { outcome: "move", move: { action: "remove-left" }, selection: NO_SELECTION };
      }
      if (index === pieces.length) {
        return { outcome: "move", move: { action: "remove-right" }, selection: NO_SELECTION };
      }
      return {
        outcome: "reject",
        reason: "a lone white piece can only leave from the ends",
        selection: NO_SELECTION,
      };
    }
  }
  return {
    outcome: "select",
    selection: { kind: "piece", index },
    hint: "click an adjacent white to merge, or the same end piece to remove it",
  };
}
