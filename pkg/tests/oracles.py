"""Independent brute-force oracles for the derived test values.

Everything here is deliberately naive: exhaustive enumeration, textbook
formulas, normal equations.  Nothing imports the code paths it checks beyond
basic data types, so an implementation bug cannot hide in its own oracle.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def graphs_isomorphic(mol_a, mol_b) -> bool:
    """Exhaustive attributed-graph isomorphism for small molecules (n <= 12)."""
    if mol_a.n_atoms != mol_b.n_atoms or mol_a.n_bonds != mol_b.n_bonds:
        return False
    n = mol_a.n_atoms

    def atom_sig(mol, i):
        a = mol.atoms[i]
        return (a.element, a.formal_charge, a.total_h, a.aromatic, a.isotope)

    def bond_table(mol):
        table = {}
        for b in mol.bonds:
            table[frozenset((b.a, b.b))] = (max(b.order, 1), b.aromatic)
        return table

    bonds_a, bonds_b = bond_table(mol_a), bond_table(mol_b)
    sig_a = [atom_sig(mol_a, i) for i in range(n)]
    sig_b = [atom_sig(mol_b, i) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return False

    for perm in itertools.permutations(range(n)):
        if any(sig_a[i] != sig_b[perm[i]] for i in range(n)):
            continue
        ok = True
        for pair, attrs in bonds_a.items():
            i, j = tuple(pair)
            if bonds_b.get(frozenset((perm[i], perm[j]))) != attrs:
                ok = False
                break
        if ok and len(bonds_a) == len(bonds_b):
            return True
    return False


def tanimoto_sets(a: set[int], b: set[int]) -> float:
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def internal_diversity_brute(bit_sets: list[set[int]]) -> float:
    sims = [
        tanimoto_sets(bit_sets[i], bit_sets[j])
        for i in range(len(bit_sets))
        for j in range(i + 1, len(bit_sets))
    ]
    return 1.0 - sum(sims) / len(sims)


def snn_brute(gen: list[set[int]], ref: list[set[int]]) -> float:
    return sum(max(tanimoto_sets(g, r) for r in ref) for g in gen) / len(gen)


def cosine_counts_brute(a: dict, b: dict) -> float:
    dot = sum(v * b.get(k, 0) for k, v in a.items())
    na = math.sqrt(sum(v * v for v in a.values()))
    nb = math.sqrt(sum(v * v for v in b.values()))
    return dot / (na * nb)


def ks_brute(a, b) -> float:
    """Step-function enumeration over the union support."""
    support = sorted(set(a) | set(b))
    best = 0.0
    for x in support:
        fa = sum(1 for v in a if v <= x) / len(a)
        fb = sum(1 for v in b if v <= x) / len(b)
        best = max(best, abs(fa - fb))
    return best


def auc_brute(scores, labels) -> float:
    """Pairwise win/tie counting over all positive x negative pairs."""
    pos = [s for s, y in zip(scores, labels) if y == 1]
    neg = [s for s, y in zip(scores, labels) if y == 0]
    total = 0.0
    for p in pos:
        for q in neg:
            if p > q:
                total += 1.0
            elif p == q:
                total += 0.5
    return total / (len(pos) * len(neg))


def vif_normal_equations(matrix: np.ndarray) -> np.ndarray:
    """VIF via explicit normal equations (X'X)b = X'y."""
    x = np.asarray(matrix, dtype=np.float64)
    out = np.empty(x.shape[1])
    for i in range(x.shape[1]):
        y = x[:, i]
        others = np.delete(x, i, axis=1)
        design = np.column_stack([others, np.ones(len(y))])
        gram = design.T @ design
        beta = np.linalg.solve(gram, design.T @ y)
        resid = y - design @ beta
        ss_res = float(resid @ resid)
        centered = y - y.mean()
        ss_tot = float(centered @ centered)
        r2 = 1.0 - ss_res / ss_tot
        out[i] = math.inf if r2 >= 1.0 - 1e-12 else 1.0 / (1.0 - r2)
    return out


def shapley_two_feature(intercept, coefs, means, x) -> list[float]:
    """Exact Shapley values for a 2-feature linear model by enumerating
    both orderings with the conditional-mean value function."""

    def value(subset: frozenset) -> float:
        total = intercept
        for i in range(2):
            total += coefs[i] * (x[i] if i in subset else means[i])
        return total

    phis = [0.0, 0.0]
    for ordering in itertools.permutations(range(2)):
        seen: frozenset = frozenset()
        for i in ordering:
            with_i = seen | {i}
            phis[i] += value(with_i) - value(seen)
            seen = with_i
    return [phi / 2.0 for phi in phis]


def central_difference_gradient(f, theta: np.ndarray, eps: float = 1e-6) -> np.ndarray:
    grad = np.empty_like(theta)
    for i in range(len(theta)):
        hi = theta.copy()
        lo = theta.copy()
        hi[i] += eps
        lo[i] -= eps
        grad[i] = (f(hi) - f(lo)) / (2.0 * eps)
    return grad


def cycle_space_ring_bonds(mol) -> set[int]:
    """Bond indices on some simple cycle, by exhaustive cycle enumeration."""
    index = {}
    for k, b in enumerate(mol.bonds):
        index[(b.a, b.b)] = k
        index[(b.b, b.a)] = k
    ring_bonds: set[int] = set()

    def dfs(start, current, path, visited):
        for nbr, bond in mol.neighbors(current):
            if nbr == start and len(path) >= 3:
                for i in range(len(path)):
                    a, b = path[i], path[(i + 1) % len(path)]
                    ring_bonds.add(index[(a, b)])
            elif nbr not in visited and nbr > start:
                dfs(start, nbr, path + [nbr], visited | {nbr})

    for start in range(mol.n_atoms):
        dfs(start, start, [start], {start})
    return ring_bonds
