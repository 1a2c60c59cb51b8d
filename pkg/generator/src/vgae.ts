/**
 * Variational graph autoencoder: two graph-convolution layers into a gaussian
 * latent (mean + log-variance heads), reparameterized sampling, and an
 * inner-product edge decoder.  Loss = mean binary cross-entropy on the
 * self-looped adjacency + mean KL to the standard normal.
 *
 * Gradients are derived by hand (reverse mode through the five matmuls and
 * the reparameterization); the test suite checks them against central finite
 * differences.
 */

import * as fs from "fs";

import { Mat, relu, sigmoid } from "./matrix";
import { FeaturizedGraph, NODE_FEATURE_WIDTH, normalizedAdjacency } from "./featurize";
import { Rng } from "./rng";

export interface Hyperparameters {
  hiddenDim: number;
  latentDim: number;
  learningRate: number;
  batchSize: number;
  patience: number;
}

/** The tuned values for this architecture. */
export const DEFAULT_HYPERPARAMETERS: Hyperparameters = {
  hiddenDim: 256,
  latentDim: 32,
  learningRate: 4.3e-3,
  batchSize: 32,
  patience: 9,
};

export interface Gradients {
  w1: Mat;
  wMu: Mat;
  wSigma: Mat;
}

export interface ForwardResult {
  loss: number;
  bce: number;
  kl: number;
  mu: Mat;
  logVar: Mat;
  z: Mat;
}

export class VgaeModel {
  w1: Mat; // input -> hidden
  wMu: Mat; // hidden -> latent mean
  wSigma: Mat; // hidden -> latent log-variance
  readonly hyper: Hyperparameters;

  constructor(hyper: Hyperparameters, rng: Rng, inputDim = NODE_FEATURE_WIDTH) {
    this.hyper = hyper;
    this.w1 = VgaeModel.glorot(inputDim, hyper.hiddenDim, rng);
    this.wMu = VgaeModel.glorot(hyper.hiddenDim, hyper.latentDim, rng);
    this.wSigma = VgaeModel.glorot(hyper.hiddenDim, hyper.latentDim, rng);
  }

  private static glorot(rows: number, cols: number, rng: Rng): Mat {
    const scale = Math.sqrt(2 / (rows + cols));
    const out = new Mat(rows, cols);
    for (let i = 0; i < out.data.length; i++) out.data[i] = scale * rng.gaussian();
    return out;
  }

  /**
   * Forward + backward on one graph with a fixed noise draw; gradients are
   * accumulated into `grads` (scaled by `weight`) when provided.
   */
  step(graph: FeaturizedGraph, epsilon: Mat, grads?: Gradients, weight = 1): ForwardResult {
    const n = graph.adjacency.rows;
    const aHat = normalizedAdjacency(graph.adjacency);
    const x = graph.nodeFeatures;

    const pre = aHat.matmul(x).matmul(this.w1); // n x hidden
    const h = relu(pre);
    const m = aHat.matmul(h); // shared second propagation
    const mu = m.matmul(this.wMu); // n x latent
    const logVar = m.matmul(this.wSigma);

    const latent = mu.cols;
    const z = new Mat(n, latent);
    for (let i = 0; i < z.data.length; i++) {
      z.data[i] = mu.data[i] + Math.exp(0.5 * logVar.data[i]) * epsilon.data[i];
    }

    // Decoder: logits = z z^T against the self-looped adjacency.
    const logits = z.matmulTranspose(z);
    const target = graph.adjacency.clone();
    for (let i = 0; i < n; i++) target.set(i, i, 1);

    let bce = 0;
    const dLogits = new Mat(n, n);
    const cells = n * n;
    for (let i = 0; i < cells; i++) {
      const logit = logits.data[i];
      const t = target.data[i];
      bce += Math.max(logit, 0) - logit * t + Math.log(1 + Math.exp(-Math.abs(logit)));
      dLogits.data[i] = (sigmoid(logit) - t) / cells;
    }
    bce /= cells;

    let kl = 0;
    const klCells = n * latent;
    for (let i = 0; i < klCells; i++) {
      const lv = logVar.data[i];
      const m2 = mu.data[i] * mu.data[i];
      kl += -0.5 * (1 + lv - m2 - Math.exp(lv));
    }
    kl /= klCells;

    const loss = bce + kl;
    const result: ForwardResult = { loss, bce, kl, mu, logVar, z };
    if (!grads) return result;

    // dZ from the symmetric decoder: (G + G^T) Z.
    const gSym = new Mat(n, n);
    for (let i = 0; i < n; i++) {
      for (let j = 0; j < n; j++) {
        gSym.set(i, j, dLogits.get(i, j) + dLogits.get(j, i));
      }
    }
    const dZ = gSym.matmul(z);

    const dMu = dZ.clone();
    const dLogVar = new Mat(n, latent);
    for (let i = 0; i < dLogVar.data.length; i++) {
      dLogVar.data[i] = dZ.data[i] * epsilon.data[i] * 0.5 * Math.exp(0.5 * logVar.data[i]);
    }
    for (let i = 0; i < klCells; i++) {
      dMu.data[i] += mu.data[i] / klCells;
      dLogVar.data[i] += 0.5 * (Math.exp(logVar.data[i]) - 1) / klCells;
    }

    grads.wMu.addInPlace(m.transposeMatmul(dMu), weight);
    grads.wSigma.addInPlace(m.transposeMatmul(dLogVar), weight);

    const dM = dMu.matmulTranspose(this.wMu);
    dM.addInPlace(dLogVar.matmulTranspose(this.wSigma));
    const dH = aHat.matmul(dM); // aHat is symmetric
    const dPre = dH.clone();
    for (let i = 0; i < dPre.data.length; i++) {
      if (pre.data[i] <= 0) dPre.data[i] = 0;
    }
    grads.w1.addInPlace(aHat.matmul(x).transposeMatmul(dPre), weight);
    return result;
  }

  emptyGradients(): Gradients {
    return {
      w1: Mat.zeros(this.w1.rows, this.w1.cols),
      wMu: Mat.zeros(this.wMu.rows, this.wMu.cols),
      wSigma: Mat.zeros(this.wSigma.rows, this.wSigma.cols),
    };
  }

  parameters(): Mat[] {
    return [this.w1, this.wMu, this.wSigma];
  }

  save(path: string): void {
    const payload = {
      format_version: 1,
      hyper: this.hyper,
      w1: { rows: this.w1.rows, cols: this.w1.cols, data: Array.from(this.w1.data) },
      wMu: { rows: this.wMu.rows, cols: this.wMu.cols, data: Array.from(this.wMu.data) },
      wSigma: {
        rows: this.wSigma.rows,
        cols: this.wSigma.cols,
        data: Array.from(this.wSigma.data),
      },
    };
    fs.writeFileSync(path, JSON.stringify(payload));
  }

  static load(path: string): VgaeModel {
    const payload = JSON.parse(fs.readFileSync(path, "utf-8"));
    const model = Object.create(VgaeModel.prototype) as VgaeModel;
    (model as { hyper: Hyperparameters }).hyper = payload.hyper;
    model.w1 = new Mat(payload.w1.rows, payload.w1.cols, Float64Array.from(payload.w1.data));
    model.wMu = new Mat(payload.wMu.rows, payload.wMu.cols, Float64Array.from(payload.wMu.data));
    model.wSigma = new Mat(
      payload.wSigma.rows,
      payload.wSigma.cols,
      Float64Array.from(payload.wSigma.data),
    );
    return model;
  }
}

/** KL(q || N(0,1)) averaged per cell, for the identity unit test. */
export function klDivergence(mu: Mat, logVar: Mat): number {
  let total = 0;
  for (let i = 0; i < mu.data.length; i++) {
    const lv = logVar.data[i];
    total += -0.5 * (1 + lv - mu.data[i] * mu.data[i] - Math.exp(lv));
  }
  return total / mu.data.length;
}

/** Reparameterized draw z = mu + exp(logVar/2) * eps. */
export function reparameterize(mu: Mat, logVar: Mat, rng: Rng): Mat {
  const z = new Mat(mu.rows, mu.cols);
  for (let i = 0; i < z.data.length; i++) {
    z.data[i] = mu.data[i] + Math.exp(0.5 * logVar.data[i]) * rng.gaussian();
  }
  return z;
}

export class Adam {
  private readonly m: Float64Array[];
  private readonly v: Float64Array[];
  private t = 0;

  constructor(
    private readonly params: Mat[],
    private readonly lr: number,
    private readonly beta1 = 0.9,
    private readonly beta2 = 0.999,
    private readonly eps = 1e-8,
  ) {
    this.m = params.map((p) => new Float64Array(p.data.length));
    this.v = params.map((p) => new Float64Array(p.data.length));
  }

  update(grads: Mat[]): void {
    this.t += 1;
    const correction1 = 1 - Math.pow(this.beta1, this.t);
    const correction2 = 1 - Math.pow(this.beta2, this.t);
    this.params.forEach((param, k) => {
      const g = grads[k].data;
      const m = this.m[k];
      const v = this.v[k];
      for (let i = 0; i < g.length; i++) {
        m[i] = this.beta1 * m[i] + (1 - this.beta1) * g[i];
        v[i] = this.beta2 * v[i] + (1 - this.beta2) * g[i] * g[i];
        param.data[i] -=
          (this.lr * (m[i] / correction1)) / (Math.sqrt(v[i] / correction2) + this.eps);
      }
    });
  }
}
