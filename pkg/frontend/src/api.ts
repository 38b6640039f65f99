/** Typed client for the reading-path service. */

import type { Health, PaperInfo, QueryRequest, QueryResult } from "./types.js";

/** Non-2xx response, carrying the service's detail message. */
export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
    this.status = status;
  }

  /** A well-formed query that resolved no usable seed papers. */
  get isNoResults(): boolean {
    return this.status === 422;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface ApiClient {
  health(): Promise<Health>;
  paper(id: string): Promise<PaperInfo>;
  query(body: QueryRequest): Promise<QueryResult>;
}

async function unwrap<T>(resp: Response): Promise<T> {
  if (resp.ok) {
    return (await resp.json()) as T;
  }
  let detail = `request failed with status ${resp.status}`;
  try {
    const body = (await resp.json()) as { detail?: string };
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(resp.status, detail);
}

export function makeClient(baseUrl: string, fetchFn?: FetchLike): ApiClient {
  const doFetch: FetchLike = fetchFn ?? ((input, init) => fetch(input, init));
  const base = baseUrl.replace(/\/+$/, "");
  return {
    health: () => doFetch(`${base}/api/health`).then((r) => unwrap<Health>(r)),
    paper: (id: string) =>
      doFetch(`${base}/api/paper/${encodeURIComponent(id)}`).then((r) => unwrap<PaperInfo>(r)),
    query: (body: QueryRequest) =>
      doFetch(`${base}/api/query`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }).then((r) => unwrap<QueryResult>(r)),
  };
}
