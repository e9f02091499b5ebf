// UI parity against the real gateway: pane contents must be byte-identical
// to the API responses, step controls clamp at the session bounds, and a
// full analysis-sheet session completes and passes server validation.

import { beforeAll, describe, expect, inject, it } from "vitest";

import { ApiClient, extractValueLiterals } from "../src/api.js";
import { buildPanes } from "../src/panes.js";
import { SheetForm } from "../src/sheetForm.js";
import { initialViewState, stepControls } from "../src/state.js";
import type { SessionMeta, WireUnits } from "../src/types.js";
import type { Raw } from "../src/api.js";

const C1_CSV = [
  "id,agent,text",
  "1,A,knowledge building needs ideas",
  "2,B,ideas improve through discussion",
  "3,A,discussion builds knowledge",
  "",
].join("\n");

const V1_WORDS = "knowledge\nideas\ndiscussion\n";

let baseUrl: string;
let client: ApiClient;
let meta: SessionMeta;
let unitsPayload: Raw<WireUnits>;

beforeAll(async () => {
  baseUrl = inject("gatewayUrl");
  client = new ApiClient(baseUrl);
  meta = await client.createSession(C1_CSV, V1_WORDS);
  unitsPayload = await client.units(meta.session_id);
});

describe("pane parity with the gateway", () => {
  it.each([0, 2, 3])("pane contents at k=%i byte-match the API response", async (k) => {
    const triple = await client.networks(meta.session_id, k);
    const state = { ...initialViewState(meta.session_id, meta.n_units, meta.words), step: k };
    const panes = buildPanes(state, triple, unitsPayload);

    // the pane holds the exact bytes the gateway sent
    const independent = await fetch(
      `${baseUrl}/api/sessions/${meta.session_id}/networks?step=${k}`,
    );
    const independentText = await independent.text();
    expect(panes.words.raw).toBe(independentText);
    expect(panes.units.raw).toBe(independentText);
    expect(panes.agents.raw).toBe(independentText);
    expect(panes.discourse.raw).toBe(unitsPayload.raw);

    // and the structures rendered are exactly the parsed payload
    const parsed = JSON.parse(independentText);
    expect(panes.words.network).toEqual(parsed.words);
    expect(panes.units.network).toEqual(parsed.units);
    expect(panes.agents.network).toEqual(parsed.agents);
    expect(panes.step).toBe(k);
  });

  it("k=2 shows the expected fixture structure", async () => {
    const triple = await client.networks(meta.session_id, 2);
    expect(triple.data.words.edges).toEqual([
      { source: "discussion", target: "ideas", weight: 1 },
      { source: "ideas", target: "knowledge", weight: 1 },
    ]);
    expect(triple.data.units.edges).toEqual([{ source: "u1", target: "u2", weight: 1 }]);
    expect(triple.data.agents.edges).toEqual([{ source: "A", target: "B", weight: 1 }]);
  });

  it("metric readout literals are verbatim substrings of the API bytes", async () => {
    const series = await client.metrics(meta.session_id, "words", "total-degree");
    const literals = extractValueLiterals(series.raw);
    expect(literals).toHaveLength(meta.n_units + 1);
    expect(series.raw).toContain(`"values":[${literals.join(",")}]`);
    expect(literals.map(Number)).toEqual([0, 2, 4, 6]);
  });
});

describe("step controls at the session bounds", () => {
  it("clamps next at n and prev at 0", () => {
    let state = initialViewState(meta.session_id, meta.n_units, meta.words);
    state = stepControls(state, { type: "jump", step: meta.n_units });
    state = stepControls(state, { type: "next" });
    expect(state.step).toBe(meta.n_units);
    expect(state.notice).toMatch(/final/);
    state = stepControls(state, { type: "jump", step: 0 });
    state = stepControls(state, { type: "prev" });
    expect(state.step).toBe(0);
    expect(state.notice).toMatch(/first/);
  });

  it("out-of-range jumps are clamped and still fetchable", async () => {
    const state = stepControls(
      initialViewState(meta.session_id, meta.n_units, meta.words),
      { type: "jump", step: 99 },
    );
    expect(state.step).toBe(meta.n_units);
    const triple = await client.networks(meta.session_id, state.step);
    expect(triple.data.step).toBe(meta.n_units);
  });
});

describe("full analysis-sheet session", () => {
  it("a completed sheet passes server validation", async () => {
    const form = new SheetForm(meta.words, unitsPayload.data.units, meta.agents);
    for (const w of meta.words) {
      expect(form.toggleKeyword(w)).toBeNull();
    }
    form.topics = [
      "knowledge grows through exchange",
      "ideas travel between speakers",
      "discussion closes the loop",
    ];
    expect(form.addPhase({ start_unit: 1, end_unit: 1, tag: "knowledge-sharing" })).toBeNull();
    expect(
      form.addPhase({ start_unit: 2, end_unit: 3, tag: "knowledge-construction" }),
    ).toBeNull();
    for (const unit of unitsPayload.data.units) {
      expect(form.togglePivotal(unit.unit_id, `pivotal because of u${unit.unit_id}`)).toBeNull();
    }
    for (const agent of meta.agents) {
      form.contributions[agent] = `${agent} moved the discussion forward`;
    }
    form.improvements = "ground claims in evidence next time";

    expect(form.inlineIssues()).toEqual([]);

    const report = await form.save(client, meta.session_id);
    expect(report.violations).toEqual([]);
    expect(report.ok).toBe(true);

    // the stored sheet round-trips through the gateway
    const stored = await client.getSheet(meta.session_id);
    expect(stored.keywords).toEqual(form.keywords);
    expect(stored.validation.ok).toBe(true);
  });

  it("an incomplete draft reports the same codes inline and from the server", async () => {
    const anotherSession = await client.createSession(C1_CSV, V1_WORDS);
    const form = new SheetForm(anotherSession.words, unitsPayload.data.units, anotherSession.agents);
    form.toggleKeyword("ideas");
    form.topics = ["only one"];
    form.addPhase({ start_unit: 1, end_unit: 1, tag: "knowledge-sharing" });
    form.addPhase({ start_unit: 2, end_unit: 3, tag: "knowledge-construction" });
    for (const unit of unitsPayload.data.units) {
      form.togglePivotal(unit.unit_id, "because");
    }
    form.contributions = { A: "framing", B: "pushing" };
    form.improvements = "more sources";

    const inlineCodes = form.inlineIssues().map((v) => v.code);
    const report = await form.save(client, anotherSession.session_id);
    const serverCodes = report.violations.map((v) => v.code);
    expect(serverCodes).toEqual(["topics-count"]);
    expect(inlineCodes).toEqual(serverCodes);
  });
});
