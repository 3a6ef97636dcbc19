// The explorer session model: a pure function of the last server responses.
// All mutation goes through the service; the model keeps snapshots so views
// can be compared and replayed exactly.

import { Api, ApiFailure } from "./api.js";
import {
  QuiverPanel,
  SurfaceScene,
  quiverPanel,
  renderSurface,
} from "./scene.js";
import { ARTriangleDoc, QuiverDoc, StateDoc } from "./types.js";

export interface HistoryEntry {
  arc: number;
  stateJson: string;   // snapshot after the flip
}

export class Explorer {
  state: StateDoc | null = null;
  quiverDoc: QuiverDoc | null = null;
  arPanel: ARTriangleDoc | null = null;
  arError: string | null = null;
  toast: string | null = null;
  entries: HistoryEntry[] = [];
  busy = false;

  constructor(private api: Api) {}

  stateJson(): string {
    return JSON.stringify(this.state);
  }

  async load(): Promise<void> {
    this.state = await this.api.state();
    this.quiverDoc = await this.api.quiver();
  }

  scene(): SurfaceScene {
    if (!this.state) return { supported: false, shapes: [] };
    return renderSurface(this.state);
  }

  quiver(): QuiverPanel | null {
    return this.quiverDoc ? quiverPanel(this.quiverDoc) : null;
  }

  async clickArc(arc: number): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      this.state = await this.api.flip(arc);
      this.quiverDoc = await this.api.quiver();
      this.entries.push({ arc, stateJson: this.stateJson() });
      this.toast = null;
    } catch (err) {
      if (err instanceof ApiFailure && err.status === 409) {
        this.toast = "boundary segments cannot be flipped";
      } else if (err instanceof ApiFailure) {
        this.toast = `${err.code}: ${err.message}`;
      } else {
        throw err;
      }
    } finally {
      this.busy = false;
    }
  }

  async undo(): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      this.state = await this.api.undo();
      this.quiverDoc = await this.api.quiver();
      this.entries.pop();
    } finally {
      this.busy = false;
    }
  }

  async reset(): Promise<void> {
    this.state = await this.api.reset();
    this.quiverDoc = await this.api.quiver();
    this.entries = [];
  }

  async inspect(spec: string): Promise<void> {
    try {
      this.arPanel = await this.api.arTriangle(spec);
      this.arError = null;
    } catch (err) {
      if (err instanceof ApiFailure) {
        this.arError = `${err.code}: ${err.message}`;   // panel stays as it was
      } else {
        throw err;
      }
    }
  }
}
