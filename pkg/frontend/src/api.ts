import type { Move, MoveResponse, SessionCreated, SessionSnapshot, Variant } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed wrapper over the session endpoints. */
export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await this.fetchImpl(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await res.text();
    const data = text ? JSON.parse(text) : null;
    if (!res.ok) {
      const detail =
        data && typeof data === "object" && "detail" in data ? String(data.detail) : text;
      throw new ApiError(res.status, detail);
    }
    return data as T;
  }

  createSession(variant: Variant, config: Record<string, unknown>): Promise<SessionCreated> {
    return this.request("POST", "/sessions", { variant, config });
  }

  getSession(id: string): Promise<SessionSnapshot> {
    return this.request("GET", `/sessions/${id}`);
  }

  postMove(id: string, move: Move): Promise<MoveResponse> {
    return this.request("POST", `/sessions/${id}/moves`, { move });
  }

  analyze(position: Record<string, unknown>) {
    return this.request("POST", "/analyze", { position });
  }
}
