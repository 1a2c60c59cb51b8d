import { strict as assert } from "node:assert";
import { test } from "node:test";

import {
  EDGE_FEATURE_WIDTH,
  NODE_FEATURE_WIDTH,
  featurizeAtom,
  featurizeGraph,
  normalizedAdjacency,
} from "../src/featurize";
import { GraphAtom, MolGraph } from "../src/graph";
import { Mat } from "../src/matrix";

function atom(overrides: Partial<GraphAtom>): GraphAtom {
  return {
    element: "C",
    atomic_number: 6,
    charge: 0,
    hydrogens: 0,
    degree: 0,
    valence: 0,
    aromatic: false,
    in_ring: false,
    hybridization: "sp3",
    isotope: null,
    ...overrides,
  };
}

// Block offsets in the 134-bit layout.
const VALENCE = 0;
const DEGREE = 8;
const HYDROGENS = 15;
const CHARGE = 21;
const ATOMIC_NUMBER = 26;
const HYBRIDIZATION = 127;
const AROMATIC = 133;

test("node feature width is exactly 134", () => {
  const row = featurizeAtom(atom({}));
  assert.equal(row.length, NODE_FEATURE_WIDTH);
  assert.equal(NODE_FEATURE_WIDTH, 134);
});

test("methane node bits land where the layout says", () => {
  const row = featurizeAtom(
    atom({ valence: 4, degree: 0, hydrogens: 4, charge: 0, atomic_number: 6 }),
  );
  assert.equal(row[VALENCE + 4], 1);
  assert.equal(row[DEGREE + 0], 1);
  assert.equal(row[HYDROGENS + 4], 1);
  assert.equal(row[CHARGE + 1], 1); // charge 0 maps to slot 1 of -1..2
  assert.equal(row[ATOMIC_NUMBER + 5], 1); // carbon, Z=6
  assert.equal(row[HYBRIDIZATION + 2], 1); // sp3
  assert.equal(row[AROMATIC], 0);
});

test("every categorical block is one-hot, out-of-range uses the other bit", () => {
  const cases = [
    atom({}),
    atom({ valence: 6, degree: 5, hydrogens: 4, charge: 2, atomic_number: 100 }),
    atom({ valence: 9, degree: 7, hydrogens: 9, charge: -3, atomic_number: 0, hybridization: "weird" }),
    atom({ aromatic: true, hybridization: "sp2" }),
  ];
  const blocks: [number, number][] = [
    [VALENCE, 8], [DEGREE, 7], [HYDROGENS, 6], [CHARGE, 5],
    [ATOMIC_NUMBER, 101], [HYBRIDIZATION, 6],
  ];
  for (const a of cases) {
    const row = featurizeAtom(a);
    for (const [offset, width] of blocks) {
      let bits = 0;
      for (let i = offset; i < offset + width; i++) bits += row[i];
      assert.equal(bits, 1, `block at ${offset} must be one-hot`);
    }
  }
});

test("out-of-range valence sets the trailing other bit", () => {
  const row = featurizeAtom(atom({ valence: 7 }));
  assert.equal(row[VALENCE + 7], 1); // the other-slot of the valence block
});

test("benzene-like edges carry aromatic and ring bits", () => {
  const graph: MolGraph = {
    smiles: "c1ccccc1",
    atoms: Array.from({ length: 6 }, () =>
      atom({ valence: 4, degree: 2, hydrogens: 1, aromatic: true, in_ring: true, hybridization: "sp2" }),
    ),
    bonds: Array.from({ length: 6 }, (_, k) => ({
      a: k,
      b: (k + 1) % 6,
      order: k % 2 === 0 ? 1 : 2,
      aromatic: true,
      in_ring: true,
    })),
  };
  const f = featurizeGraph(graph);
  assert.equal(f.edgeFeatures.cols, EDGE_FEATURE_WIDTH);
  assert.equal(EDGE_FEATURE_WIDTH, 6);
  for (let k = 0; k < 6; k++) {
    assert.equal(f.edgeFeatures.get(k, 3), 1, "aromatic bit");
    assert.equal(f.edgeFeatures.get(k, 4), 1, "ring bit");
    assert.equal(f.edgeFeatures.get(k, 0) + f.edgeFeatures.get(k, 1) + f.edgeFeatures.get(k, 2), 0);
  }
  assert.equal(f.adjacency.get(0, 1), 1);
  assert.equal(f.adjacency.get(1, 0), 1);
  assert.equal(f.adjacency.get(0, 3), 0);
});

test("normalized adjacency of a single node is 1", () => {
  const adj = new Mat(1, 1);
  const norm = normalizedAdjacency(adj);
  assert.ok(Math.abs(norm.get(0, 0) - 1) < 1e-12);
});

test("normalized adjacency rows stay finite and symmetric", () => {
  const adj = Mat.fromRows([
    [0, 1, 0],
    [1, 0, 1],
    [0, 1, 0],
  ]);
  const norm = normalizedAdjacency(adj);
  for (let i = 0; i < 3; i++) {
    for (let j = 0; j < 3; j++) {
      assert.ok(Number.isFinite(norm.get(i, j)));
      assert.ok(Math.abs(norm.get(i, j) - norm.get(j, i)) < 1e-12);
    }
  }
});
