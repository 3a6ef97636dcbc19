// Arc endpoints recovered from the gluing: marked points are equivalence
// classes of triangle corners, exactly as the server derives them, so the
// names here line up with the server's m0, m1, ...

import { TriangulationDoc } from "./types.js";

type End = string; // `${arc}:${0|1}`

function end(arc: number, e: number): End {
  return `${arc}:${e}`;
}

function tail(arc: number, reversed: boolean): End {
  return end(arc, reversed ? 1 : 0);
}

function head(arc: number, reversed: boolean): End {
  return end(arc, reversed ? 0 : 1);
}

export interface Topology {
  /** marked point name of each arc end */
  classOf: Map<End, string>;
  /** both endpoint names per arc id */
  endpoints: Map<number, [string, string]>;
  boundaryArcs: Set<number>;
  internalArcs: number[];
}

export function analyze(doc: TriangulationDoc): Topology {
  const parent = new Map<End, End>();
  const find = (x: End): End => {
    let r = x;
    while (parent.get(r) !== r) r = parent.get(r)!;
    let c = x;
    while (parent.get(c) !== c) {
      const nxt = parent.get(c)!;
      parent.set(c, r);
      c = nxt;
    }
    return r;
  };
  const union = (a: End, b: End) => {
    const ra = find(a);
    const rb = find(b);
    if (ra !== rb) parent.set(ra, rb);
  };
  const boundaryArcs = new Set<number>();
  for (const a of doc.arcs) {
    parent.set(end(a.id, 0), end(a.id, 0));
    parent.set(end(a.id, 1), end(a.id, 1));
    if (a.boundary) boundaryArcs.add(a.id);
  }
  for (const tri of doc.triangles) {
    for (let k = 0; k < 3; k++) {
      const incoming = tri.sides[(k + 2) % 3];
      const outgoing = tri.sides[k];
      union(head(incoming.arc, incoming.reversed),
            tail(outgoing.arc, outgoing.reversed));
    }
  }
  // name classes the way the server does: sorted by the smallest boundary end
  const groups = new Map<End, End[]>();
  for (const e of parent.keys()) {
    const r = find(e);
    if (!groups.has(r)) groups.set(r, []);
    groups.get(r)!.push(e);
  }
  const keyed: { key: [number, number]; members: End[] }[] = [];
  for (const members of groups.values()) {
    const bd = members
      .filter((e) => boundaryArcs.has(parseInt(e.split(":")[0], 10)))
      .map((e): [number, number] => {
        const [a, i] = e.split(":");
        return [parseInt(a, 10), parseInt(i, 10)];
      })
      .sort((p, q) => p[0] - q[0] || p[1] - q[1]);
    keyed.push({ key: bd[0], members });
  }
  keyed.sort((p, q) => p.key[0] - q.key[0] || p.key[1] - q.key[1]);
  const classOf = new Map<End, string>();
  keyed.forEach((g, i) => {
    for (const e of g.members) classOf.set(e, `m${i}`);
  });
  const endpoints = new Map<number, [string, string]>();
  for (const a of doc.arcs) {
    endpoints.set(a.id, [classOf.get(end(a.id, 0))!, classOf.get(end(a.id, 1))!]);
  }
  return {
    classOf,
    endpoints,
    boundaryArcs,
    internalArcs: doc.arcs.filter((a) => !a.boundary).map((a) => a.id).sort((x, y) => x - y),
  };
}
