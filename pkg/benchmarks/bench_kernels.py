#!/usr/bin/env python3
"""Compare the compiled and pure kernel backends on the hot paths.

Run from the repository root after ``python setup.py build_ext --inplace``:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import pathlib
import random
import sys
import time
import warnings

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fragscreen.kernels import _pykernels  # noqa: E402

try:
    from fragscreen.kernels import _ckernels
except ImportError:
    _ckernels = None


def time_call(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def random_fp_matrix(rng: random.Random, n: int, width: int = 2048) -> np.ndarray:
    out = np.zeros((n, width // 64), dtype=np.uint64)
    for i in range(n):
        for bit in rng.sample(range(width), 48):
            out[i, bit // 64] |= np.uint64(1 << (bit % 64))
    return out


def corpus_csr(limit: int = 300):
    from fragscreen.molgraph import prepare
    from fragscreen.smiles import parse_smiles
    from fragscreen.smiles.canon import _csr, _dense

    graphs = []
    with open(ROOT / "tests" / "data" / "corpus_1000.smi") as fh:
        lines = [l.strip() for l in fh if l.strip() and not l.startswith("#")]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for smiles in lines[:limit]:
            mol = prepare(parse_smiles(smiles))
            seeds = _dense(
                [
                    (a.element, mol.degree(i), a.formal_charge, a.total_h,
                     a.in_ring, a.aromatic)
                    for i, a in enumerate(mol.atoms)
                ]
            )
            graphs.append((seeds, *_csr(mol)))
    return graphs


def bench_refine(impl, graphs) -> float:
    def run():
        for seeds, ptr, idx, bond in graphs:
            impl.wl_refine(seeds, ptr, idx, bond)

    return time_call(run)


def bench_canonicalize(backend_env: str, n: int = 200) -> float:
    """Full canonicalization throughput in a subprocess pinned to a backend."""
    import subprocess

    code = (
        "import time, warnings, sys\n"
        "warnings.simplefilter('ignore')\n"
        "from fragscreen.molgraph import prepare\n"
        "from fragscreen.smiles import parse_smiles, canonicalize\n"
        f"lines = [l.strip() for l in open('tests/data/corpus_1000.smi') "
        f"if l.strip() and not l.startswith('#')][:{n}]\n"
        "mols = [prepare(parse_smiles(s)) for s in lines]\n"
        "start = time.perf_counter()\n"
        "for _ in range(20):\n"
        "    for m in mols:\n"
        "        canonicalize(m)\n"
        "print(time.perf_counter() - start)\n"
    )
    env = {"PYTHONPATH": "src", "PATH": "/usr/bin:/bin"}
    if backend_env:
        env["FRAGSCREEN_PURE"] = backend_env
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True,
        cwd=str(ROOT), env=env, check=True,
    )
    return float(out.stdout.strip())


def main() -> None:
    rng = random.Random(7)
    print(f"{'benchmark':<34}{'python':>12}{'compiled':>12}{'speedup':>10}")

    mat = random_fp_matrix(rng, 1000)
    gen = random_fp_matrix(rng, 400)
    ref = random_fp_matrix(rng, 400)
    graphs = corpus_csr()

    rows = [
        ("pairwise tanimoto, 1000 fps",
         lambda impl: impl.mean_pairwise_tanimoto(mat)),
        ("snn, 400 x 400 fps",
         lambda impl: impl.snn_mean(gen, ref)),
        ("wl refinement, 300 molecules",
         lambda impl: bench_refine(impl, graphs)),
    ]
    for label, fn in rows:
        t_py = time_call(lambda: fn(_pykernels))
        if _ckernels is None:
            print(f"{label:<34}{t_py:>11.3f}s{'n/a':>12}{'':>10}")
            continue
        t_c = time_call(lambda: fn(_ckernels))
        print(f"{label:<34}{t_py:>11.3f}s{t_c:>11.3f}s{t_py / t_c:>9.1f}x")

    t_pure = bench_canonicalize("1")
    t_fast = bench_canonicalize("")
    label = "canonicalize, 4000 molecules"
    print(f"{label:<34}{t_pure:>11.3f}s{t_fast:>11.3f}s{t_pure / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
