// SVG string rendering, DOM-free so it runs under node in tests. Node radius
// scales with the degree value reported by the gateway; the UI never
// recomputes degrees.

import type { NetworkPane, DiscoursePane } from "./panes.js";
import { forceLayout, type Point } from "./layout.js";

const WIDTH = 420;
const HEIGHT = 420;
const MARGIN = 40;

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function toCanvas(p: Point): { x: number; y: number } {
  return {
    x: MARGIN + ((p.x + 1) / 2) * (WIDTH - 2 * MARGIN),
    y: MARGIN + ((p.y + 1) / 2) * (HEIGHT - 2 * MARGIN),
  };
}

export function renderNetworkSvg(pane: NetworkPane, seed: number): string {
  const net = pane.network;
  const positions = forceLayout(net, seed);
  const maxWeight = net.edges.reduce((m, e) => Math.max(m, e.weight), 1);
  const maxDegree = net.nodes.reduce((m, v) => Math.max(m, net.degree[v] ?? 0), 0);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" class="net net-${net.kind}">`,
  ];
  for (const edge of net.edges) {
    const a = toCanvas(positions.get(edge.source)!);
    const b = toCanvas(positions.get(edge.target)!);
    const width = 1 + (2.5 * edge.weight) / maxWeight;
    const lit =
      pane.highlighted.has(edge.source) && pane.highlighted.has(edge.target);
    parts.push(
      `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"` +
        ` stroke-width="${width.toFixed(2)}" class="edge${lit ? " hl" : ""}"/>`,
    );
  }
  for (const node of net.nodes) {
    const p = toCanvas(positions.get(node)!);
    const degree = net.degree[node] ?? 0;
    const r = 5 + (maxDegree > 0 ? (9 * degree) / maxDegree : 0);
    const classes = ["node"];
    if (pane.highlighted.has(node)) classes.push("hl");
    if (pane.selected.has(node)) classes.push("sel");
    parts.push(
      `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${r.toFixed(1)}"` +
        ` class="${classes.join(" ")}" data-node="${escapeXml(node)}"/>`,
    );
    parts.push(
      `<text x="${p.x.toFixed(1)}" y="${(p.y - r - 3).toFixed(1)}" class="label">` +
        `${escapeXml(node)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderDiscourseHtml(pane: DiscoursePane): string {
  const rows = pane.units.map((unit, i) => {
    const classes = ["unit"];
    if (i >= pane.visibleCount) classes.push("future");
    if (pane.highlighted.has(unit.unit_id)) classes.push("hl");
    if (pane.selectedUnit === unit.unit_id) classes.push("sel");
    return (
      `<li class="${classes.join(" ")}" data-unit="${unit.unit_id}">` +
      `<span class="uid">u${unit.unit_id}</span>` +
      `<span class="agent">${escapeXml(unit.agent)}</span>` +
      `<span class="text">${escapeXml(unit.text)}</span></li>`
    );
  });
  return `<ol class="discourse">${rows.join("")}</ol>`;
}
