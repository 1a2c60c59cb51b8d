/** Molecular graph as delivered by the screening toolkit's `parse --json`. */

export interface GraphAtom {
  element: string;
  atomic_number: number;
  charge: number;
  hydrogens: number;
  degree: number;
  valence: number;
  aromatic: boolean;
  in_ring: boolean;
  hybridization: string;
  isotope: number | null;
}

export interface GraphBond {
  a: number;
  b: number;
  order: number;
  aromatic: boolean;
  in_ring: boolean;
}

export interface MolGraph {
  smiles: string;
  atoms: GraphAtom[];
  bonds: GraphBond[];
}

/** Symmetric dense 0/1 adjacency (no self loops). */
export function adjacency(graph: MolGraph): Float64Array {
  const n = graph.atoms.length;
  const out = new Float64Array(n * n);
  for (const bond of graph.bonds) {
    out[bond.a * n + bond.b] = 1;
    out[bond.b * n + bond.a] = 1;
  }
  return out;
}
