/**
 * One-hot graph featurization.
 *
 * Node rows are 134 bits wide: valence 0-6 (+other), degree 0-5 (+other),
 * hydrogens 0-4 (+other), formal charge -1..2 (+other), atomic number 1-100
 * (+other), hybridization sp/sp2/sp3/sp3d/sp3d2 (+other), plus one aromatic
 * flag: 8+7+6+5+101+6+1 = 134.  Edge rows are 6 bits: bond type
 * single/double/triple/aromatic, is-ring, other.
 */

import { Mat } from "./matrix";
import { GraphAtom, MolGraph } from "./graph";

export const NODE_FEATURE_WIDTH = 134;
export const EDGE_FEATURE_WIDTH = 6;

interface Block {
  readonly size: number; // category count, excluding the trailing other-bit
  readonly index: (atom: GraphAtom) => number; // -1 means "other"
}

const HYBRIDIZATIONS = ["sp", "sp2", "sp3", "sp3d", "sp3d2"];

const NODE_BLOCKS: Block[] = [
  { size: 7, index: (a) => (a.valence >= 0 && a.valence <= 6 ? a.valence : -1) },
  { size: 6, index: (a) => (a.degree >= 0 && a.degree <= 5 ? a.degree : -1) },
  { size: 5, index: (a) => (a.hydrogens >= 0 && a.hydrogens <= 4 ? a.hydrogens : -1) },
  { size: 4, index: (a) => (a.charge >= -1 && a.charge <= 2 ? a.charge + 1 : -1) },
  {
    size: 100,
    index: (a) => (a.atomic_number >= 1 && a.atomic_number <= 100 ? a.atomic_number - 1 : -1),
  },
  { size: 5, index: (a) => HYBRIDIZATIONS.indexOf(a.hybridization) },
];

export interface FeaturizedGraph {
  nodeFeatures: Mat; // n x 134
  edgeFeatures: Mat; // m x 6
  adjacency: Mat; // n x n, symmetric 0/1
  smiles: string;
}

export function featurizeAtom(atom: GraphAtom): Float64Array {
  const row = new Float64Array(NODE_FEATURE_WIDTH);
  let offset = 0;
  for (const block of NODE_BLOCKS) {
    const idx = block.index(atom);
    row[offset + (idx >= 0 ? idx : block.size)] = 1; // trailing bit = other
    offset += block.size + 1;
  }
  row[offset] = atom.aromatic ? 1 : 0;
  offset += 1;
  if (offset !== NODE_FEATURE_WIDTH) throw new Error(`node layout is ${offset} bits`);
  return row;
}

export function featurizeGraph(graph: MolGraph): FeaturizedGraph {
  const n = graph.atoms.length;
  const nodes = new Mat(n, NODE_FEATURE_WIDTH);
  graph.atoms.forEach((atom, i) => {
    nodes.data.set(featurizeAtom(atom), i * NODE_FEATURE_WIDTH);
  });

  const edges = new Mat(graph.bonds.length, EDGE_FEATURE_WIDTH);
  graph.bonds.forEach((bond, k) => {
    const row = k * EDGE_FEATURE_WIDTH;
    if (bond.aromatic || bond.order === 0) edges.data[row + 3] = 1;
    else if (bond.order === 1) edges.data[row + 0] = 1;
    else if (bond.order === 2) edges.data[row + 1] = 1;
    else if (bond.order === 3) edges.data[row + 2] = 1;
    else edges.data[row + 5] = 1; // other
    if (bond.in_ring) edges.data[row + 4] = 1;
  });

  const adj = new Mat(n, n);
  for (const bond of graph.bonds) {
    adj.set(bond.a, bond.b, 1);
    adj.set(bond.b, bond.a, 1);
  }
  return { nodeFeatures: nodes, edgeFeatures: edges, adjacency: adj, smiles: graph.smiles };
}

/** Symmetrically normalized adjacency with self loops: D^-1/2 (A+I) D^-1/2. */
export function normalizedAdjacency(adj: Mat): Mat {
  const n = adj.rows;
  const withSelf = adj.clone();
  for (let i = 0; i < n; i++) withSelf.set(i, i, withSelf.get(i, i) + 1);
  const invSqrtDegree = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    let degree = 0;
    for (let j = 0; j < n; j++) degree += withSelf.get(i, j);
    invSqrtDegree[i] = 1 / Math.sqrt(degree);
  }
  const out = new Mat(n, n);
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      out.set(i, j, withSelf.get(i, j) * invSqrtDegree[i] * invSqrtDegree[j]);
    }
  }
  return out;
}
