/**
 * Bridge to the screening toolkit.  The generator never links against the
 * Python package; it talks to the documented CLI: `parse --json` for graphs,
 * `write` for graph-to-SMILES decoding, `sanitize` for survival checks.
 */

import { spawnSync } from "child_process";
import * as fs from "fs";
import * as os from "os";
import * as path from "path";

import { MolGraph } from "./graph";

const PRIMARY_ROOT =
  process.env.FRAGSCREEN_ROOT ?? path.resolve(__dirname, "..", "..", "..");
const PYTHON = process.env.FRAGSCREEN_PYTHON ?? "python3";

function runPrimary(args: string[], stdin?: string): string {
  const result = spawnSync(PYTHON, ["-m", "fragscreen", ...args], {
    cwd: PRIMARY_ROOT,
    env: {
      ...process.env,
      PYTHONPATH: path.join(PRIMARY_ROOT, "src"),
    },
    input: stdin,
    encoding: "utf-8",
    maxBuffer: 64 * 1024 * 1024,
  });
  if (result.error) throw result.error;
  if (result.status !== 0 && result.stdout.trim() === "") {
    throw new Error(`fragscreen ${args[0]} failed: ${result.stderr}`);
  }
  return result.stdout;
}

function withTempFile<T>(contents: string, fn: (filePath: string) => T): T {
  const tempPath = path.join(
    os.tmpdir(),
    `fragscreen-gen-${process.pid}-${Math.random().toString(36).slice(2)}.txt`,
  );
  fs.writeFileSync(tempPath, contents);
  try {
    return fn(tempPath);
  } finally {
    fs.unlinkSync(tempPath);
  }
}

/** Parse a batch of SMILES into graphs; unparseable entries are dropped. */
export function parseSmilesBatch(smilesList: string[]): MolGraph[] {
  if (smilesList.length === 0) return [];
  const output = withTempFile(smilesList.join("\n") + "\n", (file) =>
    runPrimary(["parse", "--json", "--input", file]),
  );
  const graphs: MolGraph[] = [];
  for (const line of output.split("\n")) {
    if (!line.trim()) continue;
    const payload = JSON.parse(line);
    if (!payload.error) graphs.push(payload as MolGraph);
  }
  return graphs;
}

export interface EmittedGraph {
  atoms: { element: string; charge?: number; explicit_h?: number }[];
  bonds: { a: number; b: number; order: number; aromatic?: boolean }[];
}

/** Decode sampled graphs to SMILES via the toolkit's writer. */
export function writeSmilesBatch(graphs: EmittedGraph[]): string[] {
  if (graphs.length === 0) return [];
  const payload = graphs.map((g) => JSON.stringify(g)).join("\n") + "\n";
  const output = withTempFile(payload, (file) =>
    runPrimary(["write", "--input", file]),
  );
  return output.split("\n").filter((line) => line.trim().length > 0);
}

/** How many of the given SMILES survive the sanitize stage. */
export function sanitizeSurvivors(smilesList: string[]): number {
  if (smilesList.length === 0) return 0;
  const output = withTempFile(smilesList.join("\n") + "\n", (file) =>
    runPrimary(["sanitize", "--input", file]),
  );
  return output
    .split("\n")
    .filter((line) => line.split("\t")[1] === "valid").length;
}
