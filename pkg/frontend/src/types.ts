// Wire types mirroring the gateway's JSON payloads. The UI never derives
// graph structure itself; everything below arrives from the API as-is.

export interface SessionMeta {
  session_id: string;
  created_at: string;
  n_units: number;
  n_words: number;
  words: string[];
  agents: string[];
  warnings: string[];
}

export interface WireEdge {
  source: string;
  target: string;
  weight: number;
}

export interface WireNetwork {
  kind: "words" | "units" | "agents";
  nodes: string[];
  edges: WireEdge[];
  degree: Record<string, number>;
}

export interface WireTriple {
  step: number;
  words: WireNetwork;
  units: WireNetwork;
  agents: WireNetwork;
}

export interface WireUnit {
  unit_id: number;
  agent: string;
  text: string;
  group: string | null;
  words: string[];
}

export interface WireUnits {
  units: WireUnit[];
}

export interface WireSeries {
  kind: string;
  metric: string;
  values: number[];
}

export interface SheetPhase {
  start_unit: number;
  end_unit: number;
  tag: string;
  note?: string;
}

export interface SheetPivotal {
  unit_id: number;
  reason: string;
}

export interface SheetDocument {
  schema_version: number;
  keywords: string[];
  topics: string[];
  phases: SheetPhase[];
  pivotal: SheetPivotal[];
  contributions: Record<string, string>;
  improvements: string;
}

export interface ValidationIssue {
  code: string;
  message: string;
}

export interface ValidationReport {
  ok: boolean;
  violations: ValidationIssue[];
  warnings: ValidationIssue[];
}

export interface ApiError {
  code: string;
  message: string;
  detail: Record<string, unknown>;
}

export const PHASE_TAGS = [
  "knowledge-sharing",
  "knowledge-construction",
  "knowledge-creation",
] as const;

export const KEYWORD_LIMIT = 20;
export const TOPIC_COUNT = 3;
export const PIVOTAL_COUNT = 5;
