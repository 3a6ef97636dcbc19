// Thin typed client over the service endpoints.

import { ARTriangleDoc, QuiverDoc, StateDoc } from "./types.js";

export class ApiFailure extends Error {
  constructor(public status: number, public code: string, detail: string) {
    super(detail);
  }
}

export interface Api {
  state(): Promise<StateDoc>;
  quiver(): Promise<QuiverDoc>;
  flip(arc: number): Promise<StateDoc>;
  undo(): Promise<StateDoc>;
  reset(): Promise<StateDoc>;
  arTriangle(spec: string): Promise<ARTriangleDoc>;
}

export class HttpApi implements Api {
  constructor(private base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await fetch(this.base + path, init);
    const body = await resp.json();
    if (!resp.ok) {
      throw new ApiFailure(resp.status, body.error ?? "Error", body.detail ?? "");
    }
    return body as T;
  }

  private post<T>(path: string, doc: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(doc),
    });
  }

  state(): Promise<StateDoc> {
    return this.request("/api/state");
  }

  quiver(): Promise<QuiverDoc> {
    return this.request("/api/quiver");
  }

  flip(arc: number): Promise<StateDoc> {
    return this.post("/api/flip", { arc });
  }

  undo(): Promise<StateDoc> {
    return this.post("/api/undo", {});
  }

  reset(): Promise<StateDoc> {
    return this.post("/api/reset", {});
  }

  arTriangle(spec: string): Promise<ARTriangleDoc> {
    return this.request(`/api/object/ar?spec=${encodeURIComponent(spec)}`);
  }
}
