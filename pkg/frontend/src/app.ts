// DOM wiring: renders the explorer model into SVG panels and forwards
// clicks to the service.

import { HttpApi } from "./api.js";
import { Explorer } from "./explorer.js";
import { VIEW } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el(tag: string, attrs: Record<string, string>, ns?: string): Element {
  const node = ns ? document.createElementNS(ns, tag) : document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export class App {
  private explorer: Explorer;

  constructor(base: string, private root: HTMLElement) {
    this.explorer = new Explorer(new HttpApi(base));
  }

  async start(): Promise<void> {
    await this.explorer.load();
    this.render();
  }

  private render(): void {
    this.root.replaceChildren();
    const left = el("div", { class: "panel" }) as HTMLElement;
    const right = el("div", { class: "panel" }) as HTMLElement;
    this.root.append(left, right);
    this.renderSurface(left);
    this.renderQuiver(right);
    this.renderSidebar(right);
  }

  private renderSurface(parent: HTMLElement): void {
    const scene = this.explorer.scene();
    const title = el("h2", {});
    title.textContent = "surface";
    parent.append(title);
    if (!scene.supported) {
      const banner = el("p", { class: "banner" });
      banner.textContent =
        "no planar picture for this surface; use the quiver panel";
      parent.append(banner);
      return;
    }
    const svg = el("svg", {
      viewBox: `0 0 ${VIEW} ${VIEW}`,
      width: String(VIEW),
      height: String(VIEW),
    }, SVG_NS);
    for (const shape of scene.shapes) {
      if (shape.kind === "boundary") {
        svg.append(el("path", {
          d: shape.d, class: "boundary", fill: "none",
          stroke: "#888", "stroke-width": "3",
        }, SVG_NS));
      } else if (shape.kind === "chord") {
        const path = el("path", {
          d: shape.d, class: "chord", fill: "none",
          stroke: "#2266cc", "stroke-width": "2.5",
          "data-arc": String(shape.arc),
        }, SVG_NS);
        path.addEventListener("click", () => this.onArc(shape.arc));
        svg.append(path);
      } else {
        svg.append(el("circle", {
          cx: String(shape.x), cy: String(shape.y), r: "5", fill: "#222",
        }, SVG_NS));
        const label = el("text", {
          x: String(shape.x + 8), y: String(shape.y - 6), "font-size": "12",
        }, SVG_NS);
        label.textContent = shape.name;
        svg.append(label);
      }
    }
    parent.append(svg);
    if (this.explorer.toast) {
      const toast = el("p", { class: "toast" });
      toast.textContent = this.explorer.toast;
      parent.append(toast);
    }
  }

  private renderQuiver(parent: HTMLElement): void {
    const panel = this.explorer.quiver();
    const title = el("h2", {});
    title.textContent = "quiver";
    parent.append(title);
    if (!panel) return;
    const svg = el("svg", {
      viewBox: `0 0 ${VIEW} ${VIEW}`, width: "300", height: "300",
    }, SVG_NS);
    const pos = new Map(panel.nodes.map((n) => [n.vertex, n]));
    for (const e of panel.edges) {
      const s = pos.get(e.source)!;
      const t = pos.get(e.target)!;
      const dx = t.x - s.x;
      const dy = t.y - s.y;
      const len = Math.hypot(dx, dy) || 1;
      const tx = t.x - (dx / len) * 18;
      const ty = t.y - (dy / len) * 18;
      svg.append(el("line", {
        x1: String(s.x), y1: String(s.y), x2: String(tx), y2: String(ty),
        stroke: "#333", "stroke-width": "1.5", "marker-end": "url(#arrowhead)",
      }, SVG_NS));
    }
    const defs = el("defs", {}, SVG_NS);
    const marker = el("marker", {
      id: "arrowhead", viewBox: "0 0 10 10", refX: "9", refY: "5",
      markerWidth: "7", markerHeight: "7", orient: "auto-start-reverse",
    }, SVG_NS);
    marker.append(el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#333" }, SVG_NS));
    defs.append(marker);
    svg.append(defs);
    for (const n of panel.nodes) {
      svg.append(el("circle", {
        cx: String(n.x), cy: String(n.y), r: "14", fill: "#fff", stroke: "#333",
      }, SVG_NS));
      const label = el("text", {
        x: String(n.x), y: String(n.y + 4), "text-anchor": "middle",
        "font-size": "13",
      }, SVG_NS);
      label.textContent = String(n.vertex);
      svg.append(label);
    }
    parent.append(svg);
    const note = el("p", {});
    note.textContent = panel.cycles.length
      ? `potential cycles: ${panel.cycles.map((c) => `(${c.join(",")})`).join(" ")}`
      : (panel.acyclic ? "acyclic, zero potential" : "zero potential");
    parent.append(note);
  }

  private renderSidebar(parent: HTMLElement): void {
    const history = el("div", { class: "history" });
    const title = el("h3", {});
    title.textContent = "history";
    history.append(title);
    const list = el("ol", {});
    for (const entry of this.explorer.entries) {
      const item = el("li", {});
      item.textContent = `flip ${entry.arc}`;
      list.append(item);
    }
    history.append(list);
    const undoBtn = el("button", {}) as HTMLButtonElement;
    undoBtn.textContent = "undo";
    undoBtn.disabled = this.explorer.entries.length === 0 || this.explorer.busy;
    undoBtn.addEventListener("click", async () => {
      await this.explorer.undo();
      this.render();
    });
    history.append(undoBtn);
    parent.append(history);

    const inspector = el("div", { class: "inspector" });
    const ititle = el("h3", {});
    ititle.textContent = "almost-split triangle";
    inspector.append(ititle);
    const input = el("input", {
      type: "text", placeholder: "object literal, e.g. arc:1",
    }) as HTMLInputElement;
    const go = el("button", {}) as HTMLButtonElement;
    go.textContent = "inspect";
    go.addEventListener("click", async () => {
      await this.explorer.inspect(input.value);
      this.render();
    });
    inspector.append(input, go);
    if (this.explorer.arError) {
      const msg = el("p", { class: "error" });
      msg.textContent = this.explorer.arError;
      inspector.append(msg);
    }
    if (this.explorer.arPanel) {
      const tri = this.explorer.arPanel;
      const pre = el("pre", {});
      pre.textContent = [
        `source: ${tri.source}`,
        `middle: ${tri.middle.join("  +  ") || "0"}`,
        `target: ${tri.target}`,
      ].join("\n");
      inspector.append(pre);
    }
    parent.append(inspector);
  }

  private async onArc(arc: number): Promise<void> {
    await this.explorer.clickArc(arc);
    this.render();
  }
}

declare global {
  interface Window {
    surfcatApp: App;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const base = (window as unknown as { SURFCAT_BASE?: string }).SURFCAT_BASE
    ?? "http://127.0.0.1:8765";
  const app = new App(base, document.getElementById("app") as HTMLElement);
  window.surfcatApp = app;
  app.start();
}
