/** Validation-loss early stopping with a patience window. */

export class EarlyStopper {
  best = Infinity;
  badEpochs = 0;

  constructor(readonly patience: number, readonly minDelta = 0.0) {}

  /** Report one validation loss; returns true when training should stop. */
  update(valLoss: number): boolean {
    if (valLoss < this.best - this.minDelta) {
      this.best = valLoss;
      this.badEpochs = 0;
      return false;
    }
    this.badEpochs += 1;
    return this.badEpochs >= this.patience;
  }
}
