// Documents served by the surfcat HTTP API.

export interface ArcDoc {
  id: number;
  boundary: boolean;
}

export interface SideDoc {
  arc: number;
  reversed: boolean;
}

export interface TriangleDoc {
  sides: SideDoc[];
}

export interface TriangulationDoc {
  arcs: ArcDoc[];
  triangles: TriangleDoc[];
}

export interface MarkedPointDoc {
  name: string;
  boundary: number;
  cw_next: string;
}

export interface StateDoc {
  triangulation: TriangulationDoc;
  history: number[];
  invariants: {
    genus: number;
    boundary_components: number;
    marked_counts: number[];
  };
  marked_points: MarkedPointDoc[];
}

export interface ArrowDoc {
  id: number;
  source: number;
  target: number;
}

export interface QuiverDoc {
  vertices: number[];
  arrows: ArrowDoc[];
  potential_cycles: number[][];
}

export interface ARTriangleDoc {
  source: string;
  middle: string[];
  target: string;
}

export interface ApiError {
  error: string;
  detail: string;
}
