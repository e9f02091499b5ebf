// Browser entry point: wires the API client, view state, and the four panes.
// Pane commits are serialized through applyStep() so every pane always shows
// the same step; concurrent fetches for stale steps are dropped.

import { ApiClient, GatewayError, extractValueLiterals, type Raw } from "./api.js";
import { hashSeed } from "./layout.js";
import { buildPanes } from "./panes.js";
import { renderDiscourseHtml, renderNetworkSvg } from "./render.js";
import { SheetForm } from "./sheetForm.js";
import {
  initialViewState,
  Player,
  selectUnit,
  stepControls,
  toggleWord,
  type ViewState,
} from "./state.js";
import type { SessionMeta, WireTriple, WireUnits } from "./types.js";

const client = new ApiClient("");

interface AppContext {
  meta: SessionMeta;
  state: ViewState;
  unitsPayload: Raw<WireUnits>;
  sheet: SheetForm;
  seed: number;
  fetchEpoch: number;
}

let ctx: AppContext | null = null;
const player = new Player(() => dispatch({ type: "next" }));

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function showError(message: string): void {
  const banner = el<HTMLDivElement>("error-banner");
  banner.textContent = message;
  banner.classList.remove("hidden");
  document.querySelectorAll(".pane").forEach((pane) => pane.classList.add("stale"));
}

function clearError(): void {
  el<HTMLDivElement>("error-banner").classList.add("hidden");
  document.querySelectorAll(".pane").forEach((pane) => pane.classList.remove("stale"));
}

async function createSession(): Promise<void> {
  const corpus = el<HTMLTextAreaElement>("corpus-input").value;
  const words = el<HTMLTextAreaElement>("words-input").value;
  try {
    const meta = await client.createSession(corpus, words);
    await openSession(meta);
  } catch (err) {
    showError(err instanceof GatewayError ? `${err.code}: ${err.message}` : String(err));
  }
}

async function openSession(meta: SessionMeta): Promise<void> {
  const unitsPayload = await client.units(meta.session_id);
  ctx = {
    meta,
    state: initialViewState(meta.session_id, meta.n_units, meta.words),
    unitsPayload,
    sheet: new SheetForm(meta.words, unitsPayload.data.units, meta.agents),
    seed: hashSeed(meta.session_id),
    fetchEpoch: 0,
  };
  el<HTMLDivElement>("setup").classList.add("hidden");
  el<HTMLDivElement>("workbench").classList.remove("hidden");
  el<HTMLSpanElement>("session-label").textContent =
    `${meta.session_id} — ${meta.n_units} units / ${meta.n_words} words`;
  renderKeywordToggles();
  await applyStep();
}

function dispatch(action: Parameters<typeof stepControls>[1]): void {
  if (!ctx) return;
  ctx.state = stepControls(ctx.state, action);
  if (!ctx.state.playing) {
    player.stop();
  }
  void applyStep();
}

async function applyStep(): Promise<void> {
  if (!ctx) return;
  const epoch = ++ctx.fetchEpoch;
  const { state } = ctx;
  try {
    const triple = await client.networks(state.sessionId, state.step);
    if (!ctx || epoch !== ctx.fetchEpoch) {
      return; // a newer step superseded this fetch
    }
    clearError();
    renderPanes(triple);
    await renderMetrics();
  } catch (err) {
    showError(err instanceof GatewayError ? `${err.code}: ${err.message}` : String(err));
  }
}

function renderPanes(triple: Raw<WireTriple>): void {
  if (!ctx) return;
  const panes = buildPanes(ctx.state, triple, ctx.unitsPayload);
  el<HTMLDivElement>("pane-discourse").innerHTML = renderDiscourseHtml(panes.discourse);
  el<HTMLDivElement>("pane-agents").innerHTML = renderNetworkSvg(panes.agents, ctx.seed);
  el<HTMLDivElement>("pane-units").innerHTML = renderNetworkSvg(panes.units, ctx.seed + 1);
  el<HTMLDivElement>("pane-words").innerHTML = renderNetworkSvg(panes.words, ctx.seed + 2);
  el<HTMLSpanElement>("step-label").textContent = `step ${panes.step} / ${ctx.state.maxStep}`;
  if (ctx.state.notice) {
    el<HTMLSpanElement>("notice").textContent = ctx.state.notice;
  } else {
    el<HTMLSpanElement>("notice").textContent = "";
  }
  wirePaneClicks();
}

async function renderMetrics(): Promise<void> {
  if (!ctx) return;
  const kind = el<HTMLSelectElement>("metric-kind").value;
  const metric = el<HTMLSelectElement>("metric-name").value;
  const series = await client.metrics(ctx.state.sessionId, kind, metric);
  // display the server's own number literals, not a client re-format
  const literals = extractValueLiterals(series.raw);
  const upto = Math.min(ctx.state.step, literals.length - 1);
  el<HTMLDivElement>("metric-readout").innerHTML = literals
    .map(
      (value, k) =>
        `<span class="tick${k === upto ? " now" : ""}${k > upto ? " future" : ""}">` +
        `${k}: ${value}</span>`,
    )
    .join(" ");
}

function renderKeywordToggles(): void {
  if (!ctx) return;
  el<HTMLDivElement>("word-toggles").innerHTML = ctx.meta.words
    .map((w) => `<button class="word-toggle" data-word="${w}">${w}</button>`)
    .join("");
  document.querySelectorAll<HTMLButtonElement>(".word-toggle").forEach((button) => {
    button.addEventListener("click", () => {
      if (!ctx) return;
      ctx.state = toggleWord(ctx.state, button.dataset.word!);
      button.classList.toggle("on");
      void applyStep();
    });
  });
}

function wirePaneClicks(): void {
  document.querySelectorAll<HTMLLIElement>("#pane-discourse .unit").forEach((li) => {
    li.addEventListener("click", () => {
      if (!ctx) return;
      const unitId = Number(li.dataset.unit);
      ctx.state = selectUnit(ctx.state, ctx.state.selectedUnit === unitId ? null : unitId);
      void applyStep();
    });
  });
}

function wireControls(): void {
  el<HTMLButtonElement>("btn-create").addEventListener("click", () => void createSession());
  el<HTMLButtonElement>("btn-next").addEventListener("click", () => dispatch({ type: "next" }));
  el<HTMLButtonElement>("btn-prev").addEventListener("click", () => dispatch({ type: "prev" }));
  el<HTMLButtonElement>("btn-play").addEventListener("click", () => {
    if (!ctx) return;
    if (ctx.state.playing) {
      dispatch({ type: "pause" });
    } else {
      dispatch({ type: "play" });
      if (ctx.state.playing) {
        player.start();
      }
    }
  });
  el<HTMLInputElement>("jump-input").addEventListener("change", (event) => {
    const value = Number((event.target as HTMLInputElement).value);
    if (Number.isFinite(value)) {
      dispatch({ type: "jump", step: Math.trunc(value) });
    }
  });
  el<HTMLSelectElement>("metric-kind").addEventListener("change", () => void renderMetrics());
  el<HTMLSelectElement>("metric-name").addEventListener("change", () => void renderMetrics());
  el<HTMLButtonElement>("btn-save-sheet").addEventListener("click", () => void saveSheet());
}

async function saveSheet(): Promise<void> {
  if (!ctx) return;
  const form = ctx.sheet;
  form.topics = el<HTMLTextAreaElement>("sheet-topics")
    .value.split("\n")
    .map((t) => t.trim())
    .filter((t) => t !== "");
  form.improvements = el<HTMLTextAreaElement>("sheet-improvements").value;
  const inline = form.inlineIssues();
  const inlineBox = el<HTMLUListElement>("sheet-issues");
  try {
    const report = await form.save(client, ctx.state.sessionId);
    const items = [...report.violations, ...report.warnings.map((w) => ({ ...w, warn: true }))];
    inlineBox.innerHTML = items.length
      ? items
          .map(
            (v) =>
              `<li class="${"warn" in v ? "warn" : "violation"}" data-code="${v.code}">` +
              `${v.code}: ${v.message}</li>`,
          )
          .join("")
      : '<li class="ok">sheet is complete</li>';
  } catch (err) {
    inlineBox.innerHTML = inline
      .map((v) => `<li class="violation" data-code="${v.code}">${v.code}: ${v.message}</li>`)
      .join("");
    showError(err instanceof GatewayError ? `${err.code}: ${err.message}` : String(err));
  }
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", wireControls);
}
