#!/usr/bin/env python3
"""Regenerate tests/data/corpus_1000.smi.

Deterministic: a hand-picked seed set plus enumerated fragrance-like
variations (esters, substituted heteroaromatics, branched chains, fused
rings), each validated through parse + sanitize, deduplicated by canonical
SMILES and truncated to exactly 1000 entries.
"""

from __future__ import annotations

import csv
import itertools
import pathlib
import random
import sys
import warnings

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fragscreen import prepare_smiles  # noqa: E402
from fragscreen.smiles import SmilesError, canonicalize  # noqa: E402

TARGET = 1000

ALKYLS = ["C", "CC", "CCC", "CC(C)", "CCCC", "CC(C)C", "CCCCC", "CCCCCC", "C=C", "CC=C"]
ACIDS = ["C", "CC", "CCC", "CC(C)", "CCCC", "CCCCC", "c1ccccc1", "C=Cc1ccccc1", "CCCCCCC"]
RING_CORES = [
    "c1ccccc1", "c1ccncc1", "c1ccco1", "c1cccs1", "c1cnccn1", "c1ccc2ccccc2c1",
    "C1CCCCC1", "C1CCCC1", "C1CCOC1", "C1CCOCC1", "c1ccc2[nH]ccc2c1",
]
SUBSTITUENTS = ["C", "CC", "O", "OC", "N", "C=O", "C(C)=O", "OC(C)=O", "C(=O)OC",
                "Cl", "F", "Br", "C(C)C", "CO", "CCO", "C#N", "S", "SC", "C(F)(F)F"]
BRACKETS = ["[13CH4]", "[NH4+]", "[O-]C(=O)C", "[nH]1cccc1C", "C[S+](C)[O-]",
            "[2H]OC", "N[C@H](C)C(=O)O", "O[C@@H]1CCCC1"]


def emit(candidates, rng):
    seen: set[str] = set()
    out: list[str] = []
    for smiles in candidates:
        if len(out) >= TARGET:
            break
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                mol, report = prepare_smiles(smiles)
            except SmilesError:
                continue
            if not report.valid or not (1 <= mol.n_atoms <= 40):
                continue
            canonical = canonicalize(mol)
        if canonical in seen:
            continue
        seen.add(canonical)
        out.append(smiles)
    return out


def candidates(rng):
    with open(ROOT / "tests" / "data" / "example_dataset.csv") as fh:
        for row in csv.DictReader(fh):
            yield row["smiles"].strip()
    yield from BRACKETS
    # Esters: alcohol x acid.
    for alcohol, acid in itertools.product(ALKYLS, ACIDS):
        yield f"{alcohol}OC(=O){acid}"
    # Mono- and disubstituted ring cores.
    for core, sub in itertools.product(RING_CORES, SUBSTITUENTS):
        yield f"{sub}{core}" if not sub[0].isalpha() else _attach(core, sub)
    for core in RING_CORES:
        for s1, s2 in itertools.combinations(SUBSTITUENTS, 2):
            yield _attach(_attach(core, s1), s2)
    # Branched aliphatic chains with a random functional head.
    heads = ["O", "=O", "C(=O)O", "C(=O)OC", "N", "C#N", "S"]
    for length in range(3, 10):
        for head in heads:
            chain = "C" * length
            yield chain + head if not head.startswith("=") else chain[:-1] + "C" + head
    # Randomized branched skeletons, seeded.
    for _ in range(3000):
        n = rng.randint(4, 12)
        parts = []
        for _ in range(n):
            parts.append(rng.choice(["C", "C", "C", "O", "N", "C(C)", "C(=O)", "S"]))
        yield "".join(parts)


def _attach(core: str, sub: str) -> str:
    # Substituent in a branch directly after the first ring atom.
    k = core.index("1") + 1
    return f"{core[:k]}({sub}){core[k:]}"


def main() -> None:
    rng = random.Random(20240901)
    rows = emit(candidates(rng), rng)
    if len(rows) < TARGET:
        raise SystemExit(f"only {len(rows)} corpus molecules; need {TARGET}")
    path = ROOT / "tests" / "data" / "corpus_1000.smi"
    with open(path, "w") as fh:
        fh.write("# corpus of valid fragrance-like molecules for invariance tests\n")
        fh.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows)} molecules to {path}")


if __name__ == "__main__":
    main()
