/**
 * Candidate molecule sampling.
 *
 * Node count and element types come from the training set's empirical
 * distributions; adjacency comes from thresholded inner products of latent
 * draws (a maximum spanning tree over the pairwise scores keeps the graph
 * connected, extra edges join above the threshold while respecting default
 * valences).  All-carbon six-rings where every member has degree <= 3 are
 * marked aromatic; everything else stays single.  Decoding to SMILES goes
 * through the screening toolkit's writer, and molecules that toolkit later
 * rejects are allowed through by design: screening is the pipeline's job.
 */

import { MolGraph } from "./graph";
import { Mat, sigmoid } from "./matrix";
import { EmittedGraph, writeSmilesBatch } from "./primary";
import { Rng } from "./rng";
import { VgaeModel } from "./vgae";

export interface EmpiricalStats {
  nodeCounts: number[]; // one entry per training graph
  elementWeights: Record<string, number>; // heavy-atom marginal
}

export function collectStats(graphs: MolGraph[]): EmpiricalStats {
  const nodeCounts: number[] = [];
  const elementWeights: Record<string, number> = {};
  for (const graph of graphs) {
    nodeCounts.push(graph.atoms.length);
    for (const atom of graph.atoms) {
      elementWeights[atom.element] = (elementWeights[atom.element] ?? 0) + 1;
    }
  }
  return { nodeCounts, elementWeights };
}

const MAX_DEGREE: Record<string, number> = {
  C: 4, N: 3, O: 2, S: 2, P: 3, B: 3, F: 1, Cl: 1, Br: 1, I: 1, Si: 4,
};

const EDGE_THRESHOLD = 0.75;

interface SampledGraph {
  elements: string[];
  edges: [number, number][];
}

function sampleGraph(model: VgaeModel, stats: EmpiricalStats, rng: Rng): SampledGraph {
  const n = stats.nodeCounts[rng.int(stats.nodeCounts.length)];
  const symbols = Object.keys(stats.elementWeights).sort();
  const weights = symbols.map((s) => stats.elementWeights[s]);
  const elements: string[] = [];
  for (let i = 0; i < n; i++) elements.push(symbols[rng.choice(weights)]);

  const latent = model.hyper.latentDim;
  const z = new Mat(n, latent);
  for (let i = 0; i < z.data.length; i++) z.data[i] = rng.gaussian();
  const scores = z.matmulTranspose(z);

  const degree = new Array<number>(n).fill(0);
  const capacity = elements.map((e) => MAX_DEGREE[e] ?? 4);
  const edges: [number, number][] = [];
  const used = new Set<string>();

  // Maximum spanning tree over the pairwise scores (Prim) for connectivity.
  if (n > 1) {
    const inTree = new Array<boolean>(n).fill(false);
    inTree[0] = true;
    for (let added = 1; added < n; added++) {
      let bestI = -1;
      let bestJ = -1;
      let bestScore = -Infinity;
      for (let i = 0; i < n; i++) {
        if (!inTree[i]) continue;
        for (let j = 0; j < n; j++) {
          if (inTree[j]) continue;
          const score = scores.get(i, j);
          if (score > bestScore) {
            bestScore = score;
            bestI = i;
            bestJ = j;
          }
        }
      }
      inTree[bestJ] = true;
      edges.push([Math.min(bestI, bestJ), Math.max(bestI, bestJ)]);
      used.add(`${Math.min(bestI, bestJ)}:${Math.max(bestI, bestJ)}`);
      degree[bestI] += 1;
      degree[bestJ] += 1;
    }
  }

  // Extra edges above the decoder threshold, highest score first, capped by
  // per-element valence.
  const candidates: { i: number; j: number; p: number }[] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      if (used.has(`${i}:${j}`)) continue;
      const p = sigmoid(scores.get(i, j));
      if (p > EDGE_THRESHOLD) candidates.push({ i, j, p });
    }
  }
  candidates.sort((a, b) => b.p - a.p || a.i - b.i || a.j - b.j);
  for (const { i, j } of candidates) {
    if (degree[i] < capacity[i] && degree[j] < capacity[j]) {
      edges.push([i, j]);
      degree[i] += 1;
      degree[j] += 1;
    }
  }
  return { elements, edges };
}

/** Six-membered all-carbon cycles with every member at degree <= 3. */
function aromaticSixRings(graph: SampledGraph): Set<string> {
  const n = graph.elements.length;
  const nbrs: number[][] = Array.from({ length: n }, () => []);
  for (const [a, b] of graph.edges) {
    nbrs[a].push(b);
    nbrs[b].push(a);
  }
  const aromaticEdges = new Set<string>();

  const walk = (start: number, current: number, path: number[]) => {
    if (path.length === 6) {
      if (nbrs[current].includes(start)) {
        const ok = path.every(
          (v) => graph.elements[v] === "C" && nbrs[v].length <= 3,
        );
        if (ok) {
          for (let k = 0; k < 6; k++) {
            const a = path[k];
            const b = path[(k + 1) % 6];
            aromaticEdges.add(`${Math.min(a, b)}:${Math.max(a, b)}`);
          }
        }
      }
      return;
    }
    for (const next of nbrs[current]) {
      if (next > start && !path.includes(next)) {
        walk(start, next, [...path, next]);
      }
    }
  };
  for (let start = 0; start < n; start++) {
    walk(start, start, [start]);
  }
  return aromaticEdges;
}

function toEmitted(graph: SampledGraph): EmittedGraph {
  const aromatic = aromaticSixRings(graph);
  const aromaticAtoms = new Set<number>();
  for (const key of aromatic) {
    const [a, b] = key.split(":").map(Number);
    aromaticAtoms.add(a);
    aromaticAtoms.add(b);
  }
  return {
    atoms: graph.elements.map((element, i) => ({
      element,
      aromatic: aromaticAtoms.has(i),
    })) as EmittedGraph["atoms"],
    bonds: graph.edges.map(([a, b]) => ({
      a,
      b,
      order: aromatic.has(`${a}:${b}`) ? 0 : 1,
      aromatic: aromatic.has(`${a}:${b}`),
    })),
  };
}

export function sampleMolecules(
  model: VgaeModel,
  stats: EmpiricalStats,
  n: number,
  retry = 10,
  seed = 0,
): string[] {
  if (n <= 0) return [];
  const rng = new Rng(seed);
  const out: string[] = [];
  const seen = new Set<string>();
  for (let i = 0; i < n; i++) {
    let smiles = "";
    // Duplicates get up to `retry` fresh draws; after that the duplicate is
    // kept so sampling always terminates.
    for (let attempt = 0; attempt <= retry; attempt++) {
      const emitted = toEmitted(sampleGraph(model, stats, rng));
      const decoded = writeSmilesBatch([emitted]);
      smiles = decoded[0] ?? "";
      if (smiles && !seen.has(smiles)) break;
    }
    if (smiles) {
      seen.add(smiles);
      out.push(smiles);
    }
  }
  return out;
}

/**
 * Batch variant: draws all graphs first, then decodes in one writer call.
 * Duplicate graphs (by emitted JSON) are redrawn up to `retry` times.
 */
export function sampleMoleculesBatch(
  model: VgaeModel,
  stats: EmpiricalStats,
  n: number,
  retry = 10,
  seed = 0,
): string[] {
  if (n <= 0) return [];
  const rng = new Rng(seed);
  const emitted: EmittedGraph[] = [];
  const seen = new Set<string>();
  for (let i = 0; i < n; i++) {
    let chosen: EmittedGraph | null = null;
    for (let attempt = 0; attempt <= retry; attempt++) {
      const candidate = toEmitted(sampleGraph(model, stats, rng));
      const key = JSON.stringify(candidate);
      if (!seen.has(key)) {
        seen.add(key);
        chosen = candidate;
        break;
      }
      chosen = candidate;
    }
    if (chosen) emitted.push(chosen);
  }
  return writeSmilesBatch(emitted);
}
