/** Small dense float64 matrices, row-major. Sized for graphs of <=40 nodes. */

export class Mat {
  readonly rows: number;
  readonly cols: number;
  readonly data: Float64Array;

  constructor(rows: number, cols: number, data?: Float64Array) {
    this.rows = rows;
    this.cols = cols;
    this.data = data ?? new Float64Array(rows * cols);
    if (this.data.length !== rows * cols) {
      throw new Error(`shape mismatch: ${rows}x${cols} vs ${this.data.length}`);
    }
  }

  static zeros(rows: number, cols: number): Mat {
    return new Mat(rows, cols);
  }

  static fromRows(rows: number[][]): Mat {
    const out = new Mat(rows.length, rows[0]?.length ?? 0);
    rows.forEach((row, i) => row.forEach((v, j) => out.set(i, j, v)));
    return out;
  }

  get(i: number, j: number): number {
    return this.data[i * this.cols + j];
  }

  set(i: number, j: number, value: number): void {
    this.data[i * this.cols + j] = value;
  }

  clone(): Mat {
    return new Mat(this.rows, this.cols, this.data.slice());
  }

  /** this (r x k) times other (k x c). */
  matmul(other: Mat): Mat {
    if (this.cols !== other.rows) throw new Error("matmul shape mismatch");
    const out = new Mat(this.rows, other.cols);
    const k = this.cols;
    for (let i = 0; i < this.rows; i++) {
      const base = i * k;
      for (let p = 0; p < k; p++) {
        const a = this.data[base + p];
        if (a === 0) continue;
        const obase = p * other.cols;
        const rbase = i * other.cols;
        for (let j = 0; j < other.cols; j++) {
          out.data[rbase + j] += a * other.data[obase + j];
        }
      }
    }
    return out;
  }

  /** this^T (k x r)^T... i.e. result = this^T * other, this is (k x r), other (k x c). */
  transposeMatmul(other: Mat): Mat {
    if (this.rows !== other.rows) throw new Error("transposeMatmul shape mismatch");
    const out = new Mat(this.cols, other.cols);
    for (let p = 0; p < this.rows; p++) {
      const abase = p * this.cols;
      const bbase = p * other.cols;
      for (let i = 0; i < this.cols; i++) {
        const a = this.data[abase + i];
        if (a === 0) continue;
        const rbase = i * other.cols;
        for (let j = 0; j < other.cols; j++) {
          out.data[rbase + j] += a * other.data[bbase + j];
        }
      }
    }
    return out;
  }

  /** result = this * other^T, this (r x k), other (c x k). */
  matmulTranspose(other: Mat): Mat {
    if (this.cols !== other.cols) throw new Error("matmulTranspose shape mismatch");
    const out = new Mat(this.rows, other.rows);
    for (let i = 0; i < this.rows; i++) {
      const abase = i * this.cols;
      for (let j = 0; j < other.rows; j++) {
        const bbase = j * other.cols;
        let total = 0;
        for (let p = 0; p < this.cols; p++) {
          total += this.data[abase + p] * other.data[bbase + p];
        }
        out.data[i * other.rows + j] = total;
      }
    }
    return out;
  }

  addInPlace(other: Mat, scale = 1): void {
    for (let i = 0; i < this.data.length; i++) this.data[i] += scale * other.data[i];
  }

  scaleInPlace(factor: number): void {
    for (let i = 0; i < this.data.length; i++) this.data[i] *= factor;
  }

  map(fn: (v: number) => number): Mat {
    const out = new Mat(this.rows, this.cols);
    for (let i = 0; i < this.data.length; i++) out.data[i] = fn(this.data[i]);
    return out;
  }
}

export function relu(m: Mat): Mat {
  return m.map((v) => (v > 0 ? v : 0));
}

export function sigmoid(x: number): number {
  return x >= 0 ? 1 / (1 + Math.exp(-x)) : Math.exp(x) / (1 + Math.exp(x));
}
