// Wire documents, exactly as the service emits them.

export interface GraphDoc {
  n: number;
  edges: [number, number][];
}

export interface GraphProperties {
  vertexCount: number;
  edgeCount: number;
  componentCount: number;
  isolatedVertexCount: number;
  degreeSequence: number[];
  sldType: "I" | "II";
  connected: boolean;
}

export interface GraphResponse {
  id: string;
  graph: GraphDoc;
  properties: GraphProperties;
}

export interface SldResponse {
  n: number;
  A: number[];
  type: "I" | "II";
  // present only when the request carried ?noise=
  p?: number;
  values?: number[];
}

export interface ThresholdsResponse {
  nSector: number;
  majorization: number;
  distillation: number;
}

export interface StabilizerDoc {
  sign: 1 | -1;
  paulis: string;
}

export interface StabilizersResponse {
  total: number;
  limit: number;
  stabilizers: StabilizerDoc[];
}
