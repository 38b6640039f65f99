/** View model: the last query result plus the current selection.
 *
 * The model is rebuilt atomically when a response lands, and the
 * selection may only ever name a paper present in the current path.
 * Queries carry a sequence number; a response older than the newest
 * request is discarded so a slow query can never clobber a fast one.
 */

import type { QueryResult } from "./types.js";

export interface ViewModel {
  result: QueryResult | null;
  selection: string | null;
  pending: boolean;
  error: string | null;
  noResults: boolean;
}

export function initialModel(): ViewModel {
  return { result: null, selection: null, pending: false, error: null, noResults: false };
}

/** New response: rebuild; keep the selection only if its node survived. */
export function applyResult(model: ViewModel, result: QueryResult): ViewModel {
  const stillThere =
    model.selection !== null && result.nodes.some((n) => n.id === model.selection);
  return {
    result,
    selection: stillThere ? model.selection : null,
    pending: false,
    error: null,
    noResults: false,
  };
}

/** Query failed: surface the message but keep the prior view intact. */
export function applyError(model: ViewModel, message: string, noResults = false): ViewModel {
  return { ...model, pending: false, error: message, noResults };
}

export function applyPending(model: ViewModel): ViewModel {
  return { ...model, pending: true, error: null, noResults: false };
}

/** Select a paper; ignores ids outside the current path. Idempotent. */
export function applySelect(model: ViewModel, id: string): ViewModel {
  if (!model.result || !model.result.nodes.some((n) => n.id === id)) return model;
  if (model.selection === id) return model;
  return { ...model, selection: id };
}

/** Monotone counter deciding whether an async response is still wanted. */
export class RequestSequencer {
  private issued = 0;
  private applied = 0;

  next(): number {
    this.issued += 1;
    return this.issued;
  }

  /** True (and records it) iff this response is newer than any applied. */
  accept(seq: number): boolean {
    if (seq < this.issued || seq <= this.applied) return false;
    this.applied = seq;
    return true;
  }
}
