import { describe, expect, it } from "vitest";

import { extractValueLiterals } from "../src/api.js";
import { forceLayout, hashSeed, mulberry32 } from "../src/layout.js";
import { buildPanes } from "../src/panes.js";
import { renderDiscourseHtml, renderNetworkSvg } from "../src/render.js";
import { initialViewState, toggleWord } from "../src/state.js";
import type { WireNetwork, WireTriple, WireUnits } from "../src/types.js";

const WORD_NET: WireNetwork = {
  kind: "words",
  nodes: ["knowledge", "ideas", "discussion"],
  edges: [
    { source: "discussion", target: "ideas", weight: 1 },
    { source: "ideas", target: "knowledge", weight: 1 },
  ],
  degree: { knowledge: 1, ideas: 2, discussion: 1 },
};

const TRIPLE: WireTriple = {
  step: 2,
  words: WORD_NET,
  units: {
    kind: "units",
    nodes: ["u1", "u2"],
    edges: [{ source: "u1", target: "u2", weight: 1 }],
    degree: { u1: 1, u2: 1 },
  },
  agents: {
    kind: "agents",
    nodes: ["A", "B"],
    edges: [{ source: "A", target: "B", weight: 1 }],
    degree: { A: 1, B: 1 },
  },
};

const UNITS: WireUnits = {
  units: [
    { unit_id: 1, agent: "A", text: "knowledge building needs ideas", group: null, words: ["ideas", "knowledge"] },
    { unit_id: 2, agent: "B", text: "ideas improve through discussion", group: null, words: ["discussion", "ideas"] },
    { unit_id: 3, agent: "A", text: "discussion builds knowledge", group: null, words: ["discussion", "knowledge"] },
  ],
};

describe("seeded layout", () => {
  it("mulberry32 is deterministic per seed", () => {
    const a = mulberry32(hashSeed("session-1"));
    const b = mulberry32(hashSeed("session-1"));
    const c = mulberry32(hashSeed("session-2"));
    const seqA = [a(), a(), a()];
    const seqB = [b(), b(), b()];
    const seqC = [c(), c(), c()];
    expect(seqA).toEqual(seqB);
    expect(seqA).not.toEqual(seqC);
  });

  it("same seed reproduces identical positions", () => {
    const p1 = forceLayout(WORD_NET, 42);
    const p2 = forceLayout(WORD_NET, 42);
    expect(p1).toEqual(p2);
  });

  it("positions stay in the unit box", () => {
    for (const { x, y } of forceLayout(WORD_NET, 7).values()) {
      expect(Math.abs(x)).toBeLessThanOrEqual(1.0001);
      expect(Math.abs(y)).toBeLessThanOrEqual(1.0001);
    }
  });

  it("handles empty networks", () => {
    expect(forceLayout({ kind: "words", nodes: [], edges: [], degree: {} }, 1).size).toBe(0);
  });
});

describe("svg rendering", () => {
  const state = () => initialViewState("s", 3, WORD_NET.nodes);

  it("draws one circle per node and one line per edge", () => {
    const panes = buildPanes(state(), { raw: "{}", data: TRIPLE }, { raw: "{}", data: UNITS });
    const svg = renderNetworkSvg(panes.words, 1);
    expect(svg.match(/<circle/g)).toHaveLength(3);
    expect(svg.match(/<line/g)).toHaveLength(2);
  });

  it("node radius grows with gateway-reported degree", () => {
    const panes = buildPanes(state(), { raw: "{}", data: TRIPLE }, { raw: "{}", data: UNITS });
    const svg = renderNetworkSvg(panes.words, 1);
    const radii = Object.fromEntries(
      [...svg.matchAll(/r="([\d.]+)" class="[^"]*" data-node="(\w+)"/g)].map((m) => [m[2], Number(m[1])]),
    );
    expect(radii.ideas).toBeGreaterThan(radii.knowledge);
  });

  it("selecting a word highlights incident units and agents in all panes", () => {
    const selected = toggleWord(state(), "ideas");
    const panes = buildPanes(selected, { raw: "{}", data: TRIPLE }, { raw: "{}", data: UNITS });
    expect(panes.units.highlighted).toEqual(new Set(["u1", "u2"]));
    expect(panes.agents.highlighted).toEqual(new Set(["A", "B"]));
    expect([...panes.discourse.highlighted].sort()).toEqual([1, 2]);
    const unitSvg = renderNetworkSvg(panes.units, 1);
    expect(unitSvg).toContain('class="node hl" data-node="u1"');
  });

  it("highlight joins respect the current prefix", () => {
    // at step 2 unit 3 is outside the prefix: selecting "knowledge" must not
    // light up agent A through u3 alone... u1 is A's and inside, so A stays lit
    const selected = toggleWord(state(), "discussion");
    const panes = buildPanes(selected, { raw: "{}", data: TRIPLE }, { raw: "{}", data: UNITS });
    expect(panes.units.highlighted).toEqual(new Set(["u2"]));
    expect(panes.agents.highlighted).toEqual(new Set(["B"]));
  });

  it("discourse pane marks future units and escapes text", () => {
    const panes = buildPanes(state(), { raw: "{}", data: TRIPLE }, { raw: "{}", data: UNITS });
    const html = renderDiscourseHtml(panes.discourse);
    expect(html.match(/class="unit future"/g)).toHaveLength(1);
    expect(html).toContain("u3");
  });
});

describe("metric literal extraction", () => {
  it("returns the server's exact number tokens", () => {
    const raw = '{"kind":"words","metric":"density","values":[0.0,0.666666666667,1.0]}';
    expect(extractValueLiterals(raw)).toEqual(["0.0", "0.666666666667", "1.0"]);
  });

  it("handles empty arrays and missing fields", () => {
    expect(extractValueLiterals('{"values":[]}')).toEqual([]);
    expect(extractValueLiterals("{}")).toEqual([]);
  });
});
