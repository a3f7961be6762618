// API payload types, mirroring docs/api.md. The server is the single source
// of truth; the client never recomputes rules or verdicts.

export type Variant = "line" | "pennies" | "pieces";
export type Side = "black" | "white";
export type Offset = number | string; // exact rationals arrive as "p/q"

export interface OccupiedPoint {
  block: number;
  offset: Offset;
}

export interface StatePayload {
  variant: Variant;
  to_move: Side | null;
  over: boolean;
  winner: Side | null;
  engine_side: Side;
  engine_parity: "even" | "odd" | null;
  // line
  domain?: string;
  occupied?: OccupiedPoint[];
  parity?: "even" | "odd";
  remaining?: number;
  candidates?: OccupiedPoint[];
  // pennies
  clumps?: number[];
  // pieces
  pieces?: string;
}

export interface PivotPayload {
  block: number;
  low: Offset;
  high: Offset;
  size: number;
}

export interface AnalysisPayload {
  verdict: string;
  phrase: string;
  case: string;
  delta: number | null;
  sequence: number[] | null;
  pivots: PivotPayload[] | null;
  ell: number | null;
  to_move: Side | null;
}

export type Move =
  | { block: number; offset: Offset }
  | { action: "take-first" | "take-last" | "remove-left" | "remove-right" }
  | { action: "remove-clump" | "merge" | "remove-black" | "merge-whites"; index: number }
  | { action: "split"; index: number; left: number };

export interface SessionCreated {
  id: string;
  state: StatePayload;
  analysis: AnalysisPayload;
}

export interface SessionSnapshot {
  state: StatePayload;
  history: { by: "human" | "engine"; move: Move }[];
  analysis: AnalysisPayload;
}

export interface MoveResponse {
  state: StatePayload;
  engine_move: Move | null;
  analysis: AnalysisPayload;
}
