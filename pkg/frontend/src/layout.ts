// Deterministic force-directed layout. The RNG is seeded from the session id
// so reloading a session reproduces the same picture; layout is purely a
// presentation concern and never feeds back into any number on screen.

import type { WireNetwork } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function hashSeed(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  net: WireNetwork,
  seed: number,
  iterations = 80,
): Map<string, Point> {
  const n = net.nodes.length;
  const positions = new Map<string, Point>();
  if (n === 0) {
    return positions;
  }
  const rand = mulberry32(seed);
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  const index = new Map<string, number>();
  net.nodes.forEach((node, i) => {
    index.set(node, i);
    const angle = (2 * Math.PI * i) / n;
    // circular start plus seeded jitter so symmetric graphs still spread
    xs[i] = Math.cos(angle) + (rand() - 0.5) * 0.1;
    ys[i] = Math.sin(angle) + (rand() - 0.5) * 0.1;
  });
  const edges = net.edges.map((e) => [index.get(e.source)!, index.get(e.target)!] as const);
  const k = 1 / Math.sqrt(n);
  let temperature = 0.12;
  for (let iter = 0; iter < iterations; iter++) {
    const dx = new Float64Array(n);
    const dy = new Float64Array(n);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let ex = xs[i] - xs[j];
        let ey = ys[i] - ys[j];
        const dist2 = Math.max(ex * ex + ey * ey, 1e-6);
        const force = (k * k) / dist2;
        ex *= force;
        ey *= force;
        dx[i] += ex;
        dy[i] += ey;
        dx[j] -= ex;
        dy[j] -= ey;
      }
    }
    for (const [a, b] of edges) {
      const ex = xs[a] - xs[b];
      const ey = ys[a] - ys[b];
      const dist = Math.max(Math.hypot(ex, ey), 1e-6);
      const force = dist / k;
      dx[a] -= (ex / dist) * force * k;
      dy[a] -= (ey / dist) * force * k;
      dx[b] += (ex / dist) * force * k;
      dy[b] += (ey / dist) * force * k;
    }
    for (let i = 0; i < n; i++) {
      const len = Math.max(Math.hypot(dx[i], dy[i]), 1e-9);
      xs[i] += (dx[i] / len) * Math.min(len, temperature);
      ys[i] += (dy[i] / len) * Math.min(len, temperature);
    }
    temperature *= 0.96;
  }
  let scale = 0;
  let cx = 0;
  let cy = 0;
  for (let i = 0; i < n; i++) {
    cx += xs[i] / n;
    cy += ys[i] / n;
  }
  for (let i = 0; i < n; i++) {
    xs[i] -= cx;
    ys[i] -= cy;
    scale = Math.max(scale, Math.abs(xs[i]), Math.abs(ys[i]));
  }
  net.nodes.forEach((node, i) => {
    positions.set(node, {
      x: scale > 0 ? xs[i] / scale : 0,
      y: scale > 0 ? ys[i] / scale : 0,
    });
  });
  return positions;
}
