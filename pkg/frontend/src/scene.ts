// Pure rendering model: server state in, drawable scene out.  Discs become
// polygons, annuli concentric circles; anything else falls back to the
// quiver-only mode.  All geometry is cosmetic and never sent back.

import { analyze } from "./topology.js";
import { QuiverDoc, StateDoc } from "./types.js";

export interface ChordShape {
  kind: "chord";
  arc: number;
  d: string;
}

export interface BoundaryShape {
  kind: "boundary";
  boundary: number;
  d: string;
}

export interface MarkerShape {
  kind: "marker";
  name: string;
  x: number;
  y: number;
}

export type Shape = ChordShape | BoundaryShape | MarkerShape;

export interface SurfaceScene {
  supported: boolean;
  shapes: Shape[];
}

export const VIEW = 420;
const CX = VIEW / 2;
const CY = VIEW / 2;

function round(v: number): number {
  return Math.round(v * 100) / 100;
}

interface Pt {
  x: number;
  y: number;
}

function onCircle(radius: number, angle: number): Pt {
  return { x: CX + radius * Math.cos(angle), y: CY + radius * Math.sin(angle) };
}

function orderCycle(state: StateDoc, boundary: number): string[] {
  const points = state.marked_points.filter((p) => p.boundary === boundary);
  const next = new Map(points.map((p) => [p.name, p.cw_next]));
  const start = points.map((p) => p.name).sort()[0];
  const out = [start];
  let cur = next.get(start)!;
  while (cur !== start && out.length <= points.length) {
    out.push(cur);
    cur = next.get(cur)!;
  }
  return out;
}

export function positions(state: StateDoc): Map<string, Pt> | null {
  const inv = state.invariants;
  if (inv.genus !== 0 || inv.boundary_components > 2) return null;
  const pos = new Map<string, Pt>();
  if (inv.boundary_components === 1) {
    const cycle = orderCycle(state, 0);
    cycle.forEach((name, k) => {
      pos.set(name, onCircle(170, (2 * Math.PI * k) / cycle.length - Math.PI / 2));
    });
    return pos;
  }
  const sizes = [0, 1].map((b) =>
    state.marked_points.filter((p) => p.boundary === b).length);
  const outer = sizes[0] >= sizes[1] ? 0 : 1;
  const inner = 1 - outer;
  const outerCycle = orderCycle(state, outer);
  outerCycle.forEach((name, k) => {
    pos.set(name, onCircle(170, (2 * Math.PI * k) / outerCycle.length - Math.PI / 2));
  });
  const innerCycle = orderCycle(state, inner);
  innerCycle.forEach((name, k) => {
    pos.set(name, onCircle(70, (-2 * Math.PI * k) / innerCycle.length + Math.PI / 2));
  });
  return pos;
}

function chordPath(p: Pt, q: Pt, slot: number, total: number): string {
  if (p.x === q.x && p.y === q.y) {
    // a loop at one marked point, pushed toward the centre
    const dx = CX - p.x;
    const dy = CY - p.y;
    const len = Math.hypot(dx, dy) || 1;
    const r = 26 + 16 * slot;
    const mx = p.x + (dx / len) * r;
    const my = p.y + (dy / len) * r;
    const ox = (-dy / len) * r * 0.9;
    const oy = (dx / len) * r * 0.9;
    return `M ${round(p.x)} ${round(p.y)} C ${round(mx + ox)} ${round(my + oy)}, `
      + `${round(mx - ox)} ${round(my - oy)}, ${round(p.x)} ${round(p.y)}`;
  }
  const mx = (p.x + q.x) / 2;
  const my = (p.y + q.y) / 2;
  // spread parallel copies symmetrically around the straight chord
  const spread = (slot - (total - 1) / 2) * 46;
  const middleBias = 0.35;
  const cx = mx + (CX - mx) * middleBias * (total > 1 ? 1 : 0) + ((CX - mx) / 170) * spread;
  const cy = my + (CY - my) * middleBias * (total > 1 ? 1 : 0) + ((CY - my) / 170) * spread;
  return `M ${round(p.x)} ${round(p.y)} Q ${round(cx)} ${round(cy)} ${round(q.x)} ${round(q.y)}`;
}

export function renderSurface(state: StateDoc): SurfaceScene {
  const pos = positions(state);
  if (pos === null) {
    return { supported: false, shapes: [] };
  }
  const topo = analyze(state.triangulation);
  const shapes: Shape[] = [];
  const inv = state.invariants;
  shapes.push({ kind: "boundary", boundary: 0, d: circleD(170) });
  if (inv.boundary_components === 2) {
    shapes.push({ kind: "boundary", boundary: 1, d: circleD(70) });
  }
  // group parallel arcs by endpoint pair so copies get distinct bulges in a
  // stable order that survives renumbering
  const groups = new Map<string, number[]>();
  for (const arc of topo.internalArcs) {
    const [a, b] = topo.endpoints.get(arc)!;
    const key = [a, b].sort().join("|");
    if (!groups.has(key)) groups.set(key, []);
    groups.get(key)!.push(arc);
  }
  for (const [key, arcs] of [...groups.entries()].sort()) {
    arcs.sort((x, y) => x - y);
    arcs.forEach((arc, slot) => {
      const [a, b] = [...topo.endpoints.get(arc)!].sort();
      const d = chordPath(pos.get(a)!, pos.get(b)!, slot, arcs.length);
      shapes.push({ kind: "chord", arc, d });
    });
  }
  for (const [name, p] of [...pos.entries()].sort()) {
    shapes.push({ kind: "marker", name, x: round(p.x), y: round(p.y) });
  }
  return { supported: true, shapes };
}

function circleD(r: number): string {
  return `M ${CX - r} ${CY} A ${r} ${r} 0 1 0 ${CX + r} ${CY} A ${r} ${r} 0 1 0 ${CX - r} ${CY}`;
}

/** Geometry of a scene with the arc ids stripped: two renders of the same
 * picture compare equal even when fresh arc ids differ. */
export function sceneSignature(scene: SurfaceScene): string {
  if (!scene.supported) return "unsupported";
  const parts = scene.shapes.map((s) => {
    if (s.kind === "chord") return `chord ${s.d}`;
    if (s.kind === "boundary") return `boundary ${s.boundary} ${s.d}`;
    return `marker ${s.name} ${s.x} ${s.y}`;
  });
  return parts.sort().join("\n");
}

export function chordCount(scene: SurfaceScene): number {
  return scene.shapes.filter((s) => s.kind === "chord").length;
}

// -- quiver panel ---------------------------------------------------------------

export interface QuiverPanel {
  nodes: { vertex: number; x: number; y: number }[];
  edges: { id: number; source: number; target: number }[];
  cycles: number[][];
  acyclic: boolean;
}

export function quiverPanel(q: QuiverDoc): QuiverPanel {
  const nodes = q.vertices.map((v, k) => {
    const angle = (2 * Math.PI * k) / q.vertices.length - Math.PI / 2;
    return {
      vertex: v,
      x: round(CX + 120 * Math.cos(angle)),
      y: round(CY + 120 * Math.sin(angle)),
    };
  });
  const adj = new Map<number, number[]>();
  for (const a of q.arrows) {
    if (!adj.has(a.source)) adj.set(a.source, []);
    adj.get(a.source)!.push(a.target);
  }
  const state = new Map<number, number>();
  let cyclic = false;
  const visit = (v: number) => {
    state.set(v, 1);
    for (const w of adj.get(v) ?? []) {
      if (state.get(w) === 1) cyclic = true;
      else if (!state.has(w)) visit(w);
    }
    state.set(v, 2);
  };
  for (const v of q.vertices) if (!state.has(v)) visit(v);
  return {
    nodes,
    edges: q.arrows.map((a) => ({ id: a.id, source: a.source, target: a.target })),
    cycles: q.potential_cycles,
    acyclic: !cyclic,
  };
}
