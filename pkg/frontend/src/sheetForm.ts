// Analysis-sheet editor model: six guided sections with inline validation
// that mirrors the server's rules, so most problems surface before the PUT.
// The server stays authoritative; saving always round-trips the document and
// renders whatever violations come back per field.

import type {
  SheetDocument,
  SheetPhase,
  SheetPivotal,
  ValidationIssue,
  ValidationReport,
  WireUnit,
} from "./types.js";
import { KEYWORD_LIMIT, PHASE_TAGS, PIVOTAL_COUNT, TOPIC_COUNT } from "./types.js";
import type { ApiClient } from "./api.js";

export class SheetForm {
  keywords: string[] = [];
  topics: string[] = [];
  phases: SheetPhase[] = [];
  pivotal: SheetPivotal[] = [];
  contributions: Record<string, string> = {};
  improvements = "";

  constructor(
    private vocabulary: string[],
    private units: WireUnit[],
    private agents: string[],
  ) {}

  static fromDocument(
    doc: SheetDocument,
    vocabulary: string[],
    units: WireUnit[],
    agents: string[],
  ): SheetForm {
    const form = new SheetForm(vocabulary, units, agents);
    form.keywords = [...doc.keywords];
    form.topics = [...doc.topics];
    form.phases = doc.phases.map((p) => ({ ...p }));
    form.pivotal = doc.pivotal.map((p) => ({ ...p }));
    form.contributions = { ...doc.contributions };
    form.improvements = doc.improvements;
    return form;
  }

  toggleKeyword(word: string): ValidationIssue | null {
    if (!this.vocabulary.includes(word)) {
      return { code: "keywords-unknown", message: `"${word}" is not in the vocabulary` };
    }
    const at = this.keywords.indexOf(word);
    if (at >= 0) {
      this.keywords.splice(at, 1);
      return null;
    }
    if (this.keywords.length >= KEYWORD_LIMIT) {
      return {
        code: "keywords-over-limit",
        message: `keyword limit ${KEYWORD_LIMIT} reached`,
      };
    }
    this.keywords.push(word);
    return null;
  }

  // pivotal units are picked by clicking unit nodes in the panes
  togglePivotal(unitId: number, reason = ""): ValidationIssue | null {
    const at = this.pivotal.findIndex((p) => p.unit_id === unitId);
    if (at >= 0) {
      this.pivotal.splice(at, 1);
      return null;
    }
    if (!this.units.some((u) => u.unit_id === unitId)) {
      return { code: "pivotal-unknown", message: `unit ${unitId} does not exist` };
    }
    this.pivotal.push({ unit_id: unitId, reason });
    return null;
  }

  setPivotalReason(unitId: number, reason: string): void {
    const entry = this.pivotal.find((p) => p.unit_id === unitId);
    if (entry) {
      entry.reason = reason;
    }
  }

  addPhase(phase: SheetPhase): ValidationIssue | null {
    if (!(PHASE_TAGS as readonly string[]).includes(phase.tag)) {
      return { code: "phases-tag", message: `unknown phase tag "${phase.tag}"` };
    }
    if (phase.start_unit > phase.end_unit) {
      return { code: "phases-order", message: "phase start must not exceed its end" };
    }
    const ids = this.units.map((u) => u.unit_id);
    if (!ids.includes(phase.start_unit) || !ids.includes(phase.end_unit)) {
      return { code: "phases-unknown-unit", message: "phase bounds must be existing units" };
    }
    const overlaps = this.phases.some(
      (p) => phase.start_unit <= p.end_unit && p.start_unit <= phase.end_unit,
    );
    if (overlaps) {
      return { code: "phases-overlap", message: "overlapping phase segments" };
    }
    this.phases.push({ ...phase });
    this.phases.sort((a, b) => a.start_unit - b.start_unit);
    return null;
  }

  removePhase(index: number): void {
    this.phases.splice(index, 1);
  }

  private expectedPivotal(): number {
    return Math.min(PIVOTAL_COUNT, this.units.length);
  }

  // mirror of the server-side completeness rules, per section
  inlineIssues(): ValidationIssue[] {
    const issues: ValidationIssue[] = [];
    if (this.keywords.length === 0) {
      issues.push({ code: "keywords-empty", message: "no keywords selected" });
    } else if (this.keywords.length > KEYWORD_LIMIT) {
      issues.push({
        code: "keywords-over-limit",
        message: `keyword limit ${KEYWORD_LIMIT} exceeded`,
      });
    }
    if (this.topics.length !== TOPIC_COUNT) {
      issues.push({
        code: "topics-count",
        message: `expected ${TOPIC_COUNT} topics, found ${this.topics.length}`,
      });
    } else if (this.topics.some((t) => t.trim() === "")) {
      issues.push({ code: "topics-empty", message: "topic summaries must be non-empty" });
    }
    issues.push(...this.phaseIssues());
    if (this.pivotal.length !== this.expectedPivotal()) {
      issues.push({
        code: "pivotal-count",
        message: `expected ${this.expectedPivotal()} pivotal units, found ${this.pivotal.length}`,
      });
    } else if (this.pivotal.some((p) => p.reason.trim() === "")) {
      issues.push({ code: "pivotal-reason-empty", message: "every pivotal unit needs a reason" });
    }
    const missing = this.agents.filter((a) => (this.contributions[a] ?? "").trim() === "");
    if (missing.length > 0) {
      issues.push({
        code: "contributions-missing",
        message: `missing contribution notes for: ${missing.join(", ")}`,
      });
    }
    if (this.improvements.trim() === "") {
      issues.push({ code: "improvements-empty", message: "describe what to improve next time" });
    }
    return issues;
  }

  private phaseIssues(): ValidationIssue[] {
    if (this.phases.length === 0) {
      return [{ code: "phases-missing", message: "no phase segments defined" }];
    }
    const ids = this.units.map((u) => u.unit_id);
    const position = new Map(ids.map((id, i) => [id, i]));
    const sorted = [...this.phases].sort(
      (a, b) => (position.get(a.start_unit) ?? 0) - (position.get(b.start_unit) ?? 0),
    );
    for (let i = 1; i < sorted.length; i++) {
      const prevEnd = position.get(sorted[i - 1].end_unit) ?? 0;
      const start = position.get(sorted[i].start_unit) ?? 0;
      if (start <= prevEnd) {
        return [{ code: "phases-overlap", message: "overlapping phase segments" }];
      }
      if (start > prevEnd + 1) {
        return [{ code: "phases-gap", message: "gap between phase segments" }];
      }
    }
    const first = position.get(sorted[0].start_unit) ?? 0;
    const last = position.get(sorted[sorted.length - 1].end_unit) ?? 0;
    if (first !== 0 || last !== ids.length - 1) {
      return [{ code: "phases-span", message: "phases must cover the whole transcript" }];
    }
    return [];
  }

  toDocument(): SheetDocument {
    return {
      schema_version: 1,
      keywords: [...this.keywords],
      topics: [...this.topics],
      phases: this.phases.map((p) => ({ ...p })),
      pivotal: this.pivotal.map((p) => ({ ...p })),
      contributions: { ...this.contributions },
      improvements: this.improvements,
    };
  }

  async save(client: ApiClient, sessionId: string): Promise<ValidationReport> {
    return client.putSheet(sessionId, this.toDocument());
  }
}
