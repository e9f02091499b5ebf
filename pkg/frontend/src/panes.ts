// Pane view-models for the four-pane layout: discourse list (top left),
// agent network (top right), unit network (bottom left), word network
// (bottom right). Pane contents are a pure function of the fetched payloads
// and the view state; highlighting is a join over API data (each unit's
// matched words arrive from the server), never a graph computation.

import type { ViewState } from "./state.js";
import type { WireNetwork, WireTriple, WireUnit, WireUnits } from "./types.js";
import type { Raw } from "./api.js";

export interface PaneHighlights {
  words: Set<string>;
  units: Set<string>;
  agents: Set<string>;
}

export interface NetworkPane {
  kind: "words" | "units" | "agents";
  network: WireNetwork;
  raw: string; // exact bytes the gateway sent for the whole triple
  highlighted: Set<string>;
  selected: Set<string>;
}

export interface DiscoursePane {
  units: WireUnit[];
  raw: string;
  visibleCount: number; // units inside the current prefix k
  highlighted: Set<number>;
  selectedUnit: number | null;
}

export interface Panes {
  step: number;
  discourse: DiscoursePane;
  agents: NetworkPane;
  units: NetworkPane;
  words: NetworkPane;
}

export function computeHighlights(state: ViewState, units: WireUnit[]): PaneHighlights {
  const words = new Set(state.selectedWords);
  const unitLabels = new Set<string>();
  const agents = new Set<string>();
  if (words.size > 0) {
    for (const unit of units) {
      if (unit.words.some((w) => words.has(w))) {
        unitLabels.add(`u${unit.unit_id}`);
        agents.add(unit.agent);
      }
    }
  }
  if (state.selectedUnit !== null) {
    const unit = units.find((u) => u.unit_id === state.selectedUnit);
    if (unit) {
      unitLabels.add(`u${unit.unit_id}`);
      agents.add(unit.agent);
      for (const w of unit.words) {
        words.add(w);
      }
    }
  }
  if (state.selectedAgent !== null) {
    agents.add(state.selectedAgent);
  }
  return { words, units: unitLabels, agents };
}

export function buildPanes(
  state: ViewState,
  triple: Raw<WireTriple>,
  unitsPayload: Raw<WireUnits>,
): Panes {
  const allUnits = unitsPayload.data.units;
  // only units inside the prefix participate in highlighting joins
  const visible = allUnits.slice(0, triple.data.step);
  const highlights = computeHighlights(state, visible);
  const pane = (kind: "words" | "units" | "agents"): NetworkPane => ({
    kind,
    network: triple.data[kind],
    raw: triple.raw,
    highlighted: highlights[kind],
    selected: new Set(
      kind === "words"
        ? state.selectedWords
        : kind === "units" && state.selectedUnit !== null
          ? [`u${state.selectedUnit}`]
          : kind === "agents" && state.selectedAgent !== null
            ? [state.selectedAgent]
            : [],
    ),
  });
  return {
    step: triple.data.step,
    discourse: {
      units: allUnits,
      raw: unitsPayload.raw,
      visibleCount: triple.data.step,
      highlighted: new Set(
        [...highlights.units].map((label) => Number(label.slice(1))),
      ),
      selectedUnit: state.selectedUnit,
    },
    agents: pane("agents"),
    units: pane("units"),
    words: pane("words"),
  };
}
