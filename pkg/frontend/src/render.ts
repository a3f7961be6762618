// DOM rendering of a BoardView. Pure output: every interaction is forwarded
// to callbacks supplied by main.ts.

import type { BoardView } from "./view.js";

export interface Handlers {
  onLineCell(block: number, offset: number | string): void;
  onClump(index: number, penny: number): void;
  onPiece(index: number): void;
}

function el(tag: string, className: string, text = ""): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text) node.textContent = text;
  return node;
}

export function render(root: HTMLElement, view: BoardView, busy: boolean, notice: string, handlers: Handlers): void {
  root.textContent = "";
  const board = el("div", `board ${busy ? "busy" : ""}`);

  if (view.strips) {
    for (const strip of view.strips) {
      const stripEl = el(
        "div",
        `strip ${strip.dense ? "dense" : ""} ${strip.fadeLeft ? "fade-left" : ""} ${
          strip.fadeRight ? "fade-right" : ""
        }`,
      );
      stripEl.appendChild(el("span", "strip-label", strip.token));
      for (const cell of strip.cells) {
        const cellEl = el(
          "button",
          `cell ${cell.occupied ? "occupied" : "free"} ${cell.pivot ? "pivot" : ""} ${
            cell.clickable ? "clickable" : ""
          }`,
          cell.occupied ? "●" : cell.label,
        );
        cellEl.title = `block ${cell.block}, offset ${cell.offset}`;
        if (!busy && cell.clickable) {
          cellEl.addEventListener("click", () => handlers.onLineCell(cell.block, cell.offset));
        } else {
          (cellEl as HTMLButtonElement).disabled = !cell.occupied;
        }
        stripEl.appendChild(cellEl);
      }
      board.appendChild(stripEl);
    }
  }

  if (view.clumps) {
    for (const clump of view.clumps) {
      const clumpEl = el("div", "clump");
      for (let p = 1; p <= clump.size; p++) {
        const penny = el("button", "penny", "");
        penny.title = `clump ${clump.index}, penny ${p}`;
        if (!busy) penny.addEventListener("click", () => handlers.onClump(clump.index, p));
        clumpEl.appendChild(penny);
      }
      board.appendChild(clumpEl);
    }
  }

  if (view.pieces) {
    const row = el("div", "pieces-row");
    for (const piece of view.pieces) {
      const pieceEl = el("button", `piece ${piece.color === "b" ? "black" : "white"}`, "");
      pieceEl.title = `piece ${piece.index}`;
      if (!busy) pieceEl.addEventListener("click", () => handlers.onPiece(piece.index));
      row.appendChild(pieceEl);
      if (piece.barAfter) row.appendChild(el("span", "bar", ""));
    }
    board.appendChild(row);
  }

  root.appendChild(board);

  const panel = el("div", "panel");
  panel.appendChild(el("div", "banner", view.banner));
  const facts = el("dl", "facts");
  const fact = (k: string, v: string) => {
    facts.appendChild(el("dt", "", k));
    facts.appendChild(el("dd", "", v));
  };
  fact("verdict", `${view.verdict} (${view.phrase})`);
  fact("case", view.caseLabel);
  if (view.delta !== null) {
    const meter = `${view.deltaSign === "+" ? "+" : ""}${view.delta}`;
    fact("delta", `${meter}  [${(view.sequence ?? []).join(", ")}]`);
  }
  if (view.ell !== null) fact("end run", String(view.ell));
  fact("engine", `${view.engineSide}${view.engineParity ? `, wants ${view.engineParity}` : ""}`);
  panel.appendChild(facts);
  if (notice) panel.appendChild(el("div", "notice", notice));
  root.appendChild(panel);
}
