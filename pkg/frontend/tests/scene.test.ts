import { describe, expect, it } from "vitest";

import { analyze } from "../src/topology.js";
import {
  chordCount,
  quiverPanel,
  renderSurface,
  sceneSignature,
} from "../src/scene.js";
import { QuiverDoc, StateDoc } from "../src/types.js";

import state0 from "./fixtures/state0.json";
import quiver0 from "./fixtures/quiver0.json";
import stateHexagon from "./fixtures/state_hexagon.json";
import stateGenus1 from "./fixtures/state_genus1.json";
import stateDouble from "./fixtures/state_after_double_flip.json";

const annulusState = state0 as unknown as StateDoc;

describe("topology", () => {
  it("recovers the marked point names of the server", () => {
    const topo = analyze(annulusState.triangulation);
    const names = new Set(annulusState.marked_points.map((p) => p.name));
    for (const [, [a, b]] of topo.endpoints) {
      expect(names.has(a) && names.has(b)).toBe(true);
    }
    expect(topo.internalArcs).toEqual([1, 2, 3, 4, 5]);
  });
});

describe("surface rendering", () => {
  it("draws five clickable chords for the bundled annulus", () => {
    const scene = renderSurface(annulusState);
    expect(scene.supported).toBe(true);
    expect(chordCount(scene)).toBe(5);
    const boundaries = scene.shapes.filter((s) => s.kind === "boundary");
    expect(boundaries.length).toBe(2);
    const markers = scene.shapes.filter((s) => s.kind === "marker");
    expect(markers.length).toBe(5);
  });

  it("draws the hexagon with six boundary points and three chords", () => {
    const scene = renderSurface(stateHexagon as unknown as StateDoc);
    expect(scene.supported).toBe(true);
    expect(chordCount(scene)).toBe(3);
    expect(scene.shapes.filter((s) => s.kind === "marker").length).toBe(6);
    expect(scene.shapes.filter((s) => s.kind === "boundary").length).toBe(1);
  });

  it("falls back to quiver-only mode off the plane", () => {
    const scene = renderSurface(stateGenus1 as unknown as StateDoc);
    expect(scene.supported).toBe(false);
    expect(sceneSignature(scene)).toBe("unsupported");
  });

  it("renders the double flip identically to the start", () => {
    const before = renderSurface(annulusState);
    const after = renderSurface(stateDouble as unknown as StateDoc);
    expect(sceneSignature(after)).toBe(sceneSignature(before));
  });
});

describe("quiver panel", () => {
  it("shows the single potential cycle of the base quiver", () => {
    const panel = quiverPanel(quiver0 as unknown as QuiverDoc);
    expect(panel.nodes.length).toBe(5);
    expect(panel.edges.length).toBe(6);
    expect(panel.cycles.length).toBe(1);
    expect(panel.acyclic).toBe(false);
  });
});
