/** Wire types, mirroring the service's JSON schemas field for field. */

export interface PathNode {
  id: string;
  title: string;
  authors: string[];
  year: number;
  score: number;
}

export interface PathEdge {
  from: string;
  to: string;
  relevance: number;
}

export interface QueryResult {
  query: string;
  seeds: {
    ids: string[];
    dropped_unresolved: string[];
    dropped_filtered: string[];
  };
  terminals: {
    ids: string[];
    mode: string;
    fell_back: boolean;
  };
  nodes: PathNode[];
  edges: PathEdge[];
  roots: string[];
  reading_order: string[];
  top_papers: string[];
  timing: {
    nodes: number;
    edges: number;
    seconds: number;
  };
}

export interface PaperInfo {
  id: string;
  title: string;
  year: number;
  venue: string | null;
  authors: string[];
  abstract: string | null;
  n_references: number;
  n_cited_by: number;
}

export interface Health {
  status: string;
  corpus_size: number;
}

export interface QueryRequest {
  phrases: string[];
  k_seeds?: number;
  k_output?: number;
  cutoff_year?: number;
  terminal_mode?: string;
}
