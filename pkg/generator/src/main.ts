/**
 * CLI: featurize / train / sample.
 *
 *   node dist/src/main.js train --dataset ../tests/data/example_dataset.csv \
 *       --limit 120 --epochs 10 --seed 0 --out out/
 *   node dist/src/main.js sample --model out/model.json --n 100 --seed 1 \
 *       --out out/sampled.smi
 */

import * as fs from "fs";
import * as path from "path";

import { loadSmiles } from "./dataset";
import { featurizeGraph, NODE_FEATURE_WIDTH, EDGE_FEATURE_WIDTH } from "./featurize";
import { parseSmilesBatch } from "./primary";
import { collectStats, sampleMoleculesBatch } from "./sample";
import { trainVgae, writeTrainingLog } from "./train";
import { DEFAULT_HYPERPARAMETERS, VgaeModel } from "./vgae";

interface Args {
  [key: string]: string;
}

function parseArgs(argv: string[]): { command: string; args: Args } {
  const command = argv[0];
  const args: Args = {};
  for (let i = 1; i < argv.length; i += 2) {
    if (!argv[i].startsWith("--")) throw new Error(`unexpected argument ${argv[i]}`);
    args[argv[i].slice(2)] = argv[i + 1];
  }
  return { command, args };
}

function requireArg(args: Args, name: string): string {
  const value = args[name];
  if (value === undefined) throw new Error(`--${name} is required`);
  return value;
}

function cmdFeaturize(args: Args): void {
  const smiles = loadSmiles(requireArg(args, "dataset"), Number(args.limit ?? 0) || undefined);
  const graphs = parseSmilesBatch(smiles);
  const featurized = graphs.map(featurizeGraph);
  let edgeRows = 0;
  for (const f of featurized) edgeRows += f.edgeFeatures.rows;
  console.log(
    `featurized ${featurized.length} graphs: node width ${NODE_FEATURE_WIDTH}, ` +
      `edge width ${EDGE_FEATURE_WIDTH}, ${edgeRows} edge rows`,
  );
}

function cmdTrain(args: Args): void {
  const outDir = requireArg(args, "out");
  const smiles = loadSmiles(requireArg(args, "dataset"), Number(args.limit ?? 0) || undefined);
  const graphs = parseSmilesBatch(smiles).map(featurizeGraph);
  const epochs = Number(args.epochs ?? 60);
  const seed = Number(args.seed ?? 0);
  const result = trainVgae(graphs, DEFAULT_HYPERPARAMETERS, epochs, seed);

  fs.mkdirSync(outDir, { recursive: true });
  result.model.save(path.join(outDir, "model.json"));
  writeTrainingLog(result.log, path.join(outDir, "training_log.csv"));
  const statsGraphs = parseSmilesBatch(smiles);
  fs.writeFileSync(
    path.join(outDir, "stats.json"),
    JSON.stringify(collectStats(statsGraphs)),
  );
  const last = result.log[result.log.length - 1];
  console.log(
    `trained ${result.log.length} epochs (early stop: ${result.stoppedEarly}); ` +
      `final train loss ${last.trainLoss.toFixed(4)}, val loss ${last.valLoss.toFixed(4)}`,
  );
  console.log(`wrote ${path.join(outDir, "model.json")}`);
}

function cmdSample(args: Args): void {
  const modelPath = requireArg(args, "model");
  const model = VgaeModel.load(modelPath);
  const statsPath = args.stats ?? path.join(path.dirname(modelPath), "stats.json");
  const stats = JSON.parse(fs.readFileSync(statsPath, "utf-8"));
  const n = Number(requireArg(args, "n"));
  const seed = Number(args.seed ?? 0);
  const retry = Number(args.retry ?? 10);
  const sampled = sampleMoleculesBatch(model, stats, n, retry, seed);
  const outPath = requireArg(args, "out");
  fs.mkdirSync(path.dirname(outPath), { recursive: true });
  fs.writeFileSync(outPath, sampled.join("\n") + (sampled.length ? "\n" : ""));
  console.log(`wrote ${sampled.length} SMILES to ${outPath}`);
}

function main(): void {
  const { command, args } = parseArgs(process.argv.slice(2));
  if (command === "featurize") cmdFeaturize(args);
  else if (command === "train") cmdTrain(args);
  else if (command === "sample") cmdSample(args);
  else {
    console.error("usage: main.js featurize|train|sample [--flag value ...]");
    process.exitCode = 2;
  }
}

main();
