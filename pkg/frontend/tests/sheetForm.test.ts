import { describe, expect, it } from "vitest";

import { SheetForm } from "../src/sheetForm.js";
import type { WireUnit } from "../src/types.js";

const UNITS: WireUnit[] = [
  { unit_id: 1, agent: "A", text: "knowledge building needs ideas", group: null, words: ["ideas", "knowledge"] },
  { unit_id: 2, agent: "B", text: "ideas improve through discussion", group: null, words: ["discussion", "ideas"] },
  { unit_id: 3, agent: "A", text: "discussion builds knowledge", group: null, words: ["discussion", "knowledge"] },
];

const VOCAB = ["knowledge", "ideas", "discussion"];
const AGENTS = ["A", "B"];

function completeForm(): SheetForm {
  const form = new SheetForm(VOCAB, UNITS, AGENTS);
  for (const w of VOCAB) form.toggleKeyword(w);
  form.topics = ["t1", "t2", "t3"];
  form.addPhase({ start_unit: 1, end_unit: 1, tag: "knowledge-sharing" });
  form.addPhase({ start_unit: 2, end_unit: 3, tag: "knowledge-construction" });
  for (const u of UNITS) form.togglePivotal(u.unit_id, `reason ${u.unit_id}`);
  form.contributions = { A: "framing", B: "pushing" };
  form.improvements = "bring evidence";
  return form;
}

describe("keyword toggles", () => {
  it("rejects non-vocabulary words inline", () => {
    const form = new SheetForm(VOCAB, UNITS, AGENTS);
    const issue = form.toggleKeyword("jazz");
    expect(issue?.code).toBe("keywords-unknown");
    expect(form.keywords).toEqual([]);
  });

  it("enforces the limit at the 21st selection", () => {
    const bigVocab = Array.from({ length: 25 }, (_, i) => `w${i}`);
    const form = new SheetForm(bigVocab, UNITS, AGENTS);
    for (let i = 0; i < 20; i++) {
      expect(form.toggleKeyword(`w${i}`)).toBeNull();
    }
    const issue = form.toggleKeyword("w20");
    expect(issue?.code).toBe("keywords-over-limit");
    expect(form.keywords).toHaveLength(20);
  });

  it("toggling off removes a keyword", () => {
    const form = new SheetForm(VOCAB, UNITS, AGENTS);
    form.toggleKeyword("ideas");
    form.toggleKeyword("ideas");
    expect(form.keywords).toEqual([]);
  });
});

describe("phases", () => {
  it("rejects overlapping segments on add", () => {
    const form = new SheetForm(VOCAB, UNITS, AGENTS);
    expect(form.addPhase({ start_unit: 1, end_unit: 2, tag: "knowledge-sharing" })).toBeNull();
    const issue = form.addPhase({ start_unit: 2, end_unit: 3, tag: "knowledge-creation" });
    expect(issue?.code).toBe("phases-overlap");
    expect(form.phases).toHaveLength(1);
  });

  it("flags gaps and span problems inline", () => {
    const form = new SheetForm(VOCAB, UNITS, AGENTS);
    form.addPhase({ start_unit: 1, end_unit: 1, tag: "knowledge-sharing" });
    form.addPhase({ start_unit: 3, end_unit: 3, tag: "knowledge-creation" });
    expect(form.inlineIssues().map((v) => v.code)).toContain("phases-gap");
  });

  it("rejects unknown units and bad tags", () => {
    const form = new SheetForm(VOCAB, UNITS, AGENTS);
    expect(form.addPhase({ start_unit: 1, end_unit: 9, tag: "knowledge-sharing" })?.code).toBe(
      "phases-unknown-unit",
    );
    expect(form.addPhase({ start_unit: 1, end_unit: 2, tag: "vibes" })?.code).toBe("phases-tag");
  });
});

describe("pivotal units", () => {
  it("expects min(5, units) distinct entries", () => {
    const form = completeForm();
    expect(form.inlineIssues()).toEqual([]);
    form.togglePivotal(3); // deselect -> count drops below target
    expect(form.inlineIssues().map((v) => v.code)).toContain("pivotal-count");
  });

  it("requires reasons", () => {
    const form = completeForm();
    form.setPivotalReason(2, "  ");
    expect(form.inlineIssues().map((v) => v.code)).toContain("pivotal-reason-empty");
  });

  it("rejects unknown units", () => {
    const form = new SheetForm(VOCAB, UNITS, AGENTS);
    expect(form.togglePivotal(42)?.code).toBe("pivotal-unknown");
  });
});

describe("inline validation mirrors the server rules", () => {
  it("complete form has no issues", () => {
    expect(completeForm().inlineIssues()).toEqual([]);
  });

  it("empty form reports every section", () => {
    const codes = new SheetForm(VOCAB, UNITS, AGENTS).inlineIssues().map((v) => v.code);
    expect(codes).toContain("keywords-empty");
    expect(codes).toContain("topics-count");
    expect(codes).toContain("phases-missing");
    expect(codes).toContain("pivotal-count");
    expect(codes).toContain("contributions-missing");
    expect(codes).toContain("improvements-empty");
  });

  it("document round-trips through fromDocument", () => {
    const doc = completeForm().toDocument();
    const again = SheetForm.fromDocument(doc, VOCAB, UNITS, AGENTS);
    expect(again.toDocument()).toEqual(doc);
  });
});
