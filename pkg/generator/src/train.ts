/**
 * Training loop: mini-batches with Adam, a 90/10 validation split, early
 * stopping on validation loss, and a per-epoch CSV log
 * (epoch, train loss, validation loss).
 */

import * as fs from "fs";
import * as path from "path";

import { EarlyStopper } from "./earlystop";
import { FeaturizedGraph } from "./featurize";
import { Mat } from "./matrix";
import { Rng } from "./rng";
import { Adam, DEFAULT_HYPERPARAMETERS, Hyperparameters, VgaeModel } from "./vgae";

export interface EpochLog {
  epoch: number;
  trainLoss: number;
  valLoss: number;
}

export interface TrainResult {
  model: VgaeModel;
  log: EpochLog[];
  stoppedEarly: boolean;
}

function drawEpsilon(graph: FeaturizedGraph, latentDim: number, rng: Rng): Mat {
  const eps = new Mat(graph.adjacency.rows, latentDim);
  for (let i = 0; i < eps.data.length; i++) eps.data[i] = rng.gaussian();
  return eps;
}

export function trainVgae(
  graphs: FeaturizedGraph[],
  hyper: Hyperparameters = DEFAULT_HYPERPARAMETERS,
  maxEpochs = 60,
  seed = 0,
): TrainResult {
  if (graphs.length < 10) throw new Error("need at least 10 graphs for a toy run");
  const rng = new Rng(seed);
  const model = new VgaeModel(hyper, rng);
  const optimizer = new Adam(model.parameters(), hyper.learningRate);
  const stopper = new EarlyStopper(hyper.patience);

  const order = graphs.map((_, i) => i);
  const valCount = Math.max(1, Math.floor(graphs.length / 10));
  const validation = graphs.slice(0, valCount);
  const training = graphs.slice(valCount);

  const log: EpochLog[] = [];
  let stoppedEarly = false;
  for (let epoch = 1; epoch <= maxEpochs; epoch++) {
    // Shuffle training order each epoch, seeded.
    const shuffled = training.slice();
    for (let i = shuffled.length - 1; i > 0; i--) {
      const j = rng.int(i + 1);
      [shuffled[i], shuffled[j]] = [shuffled[j], shuffled[i]];
    }

    let trainLoss = 0;
    let seen = 0;
    for (let start = 0; start < shuffled.length; start += hyper.batchSize) {
      const batch = shuffled.slice(start, start + hyper.batchSize);
      const grads = model.emptyGradients();
      let batchLoss = 0;
      for (const graph of batch) {
        const eps = drawEpsilon(graph, hyper.latentDim, rng);
        const result = model.step(graph, eps, grads, 1 / batch.length);
        batchLoss += result.loss;
      }
      optimizer.update([grads.w1, grads.wMu, grads.wSigma]);
      trainLoss += batchLoss;
      seen += batch.length;
      if (!Number.isFinite(batchLoss)) {
        throw new Error(`training diverged (NaN loss) at epoch ${epoch}`);
      }
    }
    trainLoss /= seen;

    let valLoss = 0;
    for (const graph of validation) {
      const eps = drawEpsilon(graph, hyper.latentDim, rng);
      valLoss += model.step(graph, eps).loss;
    }
    valLoss /= validation.length;

    log.push({ epoch, trainLoss, valLoss });
    if (stopper.update(valLoss)) {
      stoppedEarly = true;
      break;
    }
  }
  void order;
  return { model, log, stoppedEarly };
}

export function writeTrainingLog(log: EpochLog[], outPath: string): void {
  fs.mkdirSync(path.dirname(outPath), { recursive: true });
  const lines = ["epoch,train_loss,val_loss"];
  for (const row of log) {
    lines.push(`${row.epoch},${row.trainLoss},${row.valLoss}`);
  }
  fs.writeFileSync(outPath, lines.join("\n") + "\n");
}
