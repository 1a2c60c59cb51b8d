"""SMILES parser: text to raw molecular graph.

Supported grammar: organic-subset atoms (B, C, N, O, P, S, F, Cl, Br, I and
aromatic b, c, n, o, p, s), bracket atoms with isotope / charge / H-count,
bond symbols ``- = # :``, ring closures (digits and %nn) and branches.
Stereo markers (``/ \\ @``) are accepted and discarded with a warning; the
descriptor set downstream is stereo-agnostic.  Multi-component input (``.``)
is rejected: generated odorants are single molecules, so a mixture signals a
generator fault.

Implicit hydrogens are NOT assigned here; that is chemistry, not grammar,
and lives in ``fragscreen.molgraph``.
"""

from __future__ import annotations

import warnings

from ..elements import AROMATIC_SUBSET, ORGANIC_SUBSET, is_known_element
from ..mol import Atom, Bond, Molecule
from .errors import SmilesError, StereoDiscardedWarning

_BOND_ORDERS = {"-": 1, "=": 2, "#": 3}
_TWO_LETTER_ORGANIC = ("Cl", "Br")


def parse_smiles(text: str) -> Molecule:
    """Parse a single-component SMILES string into a raw ``Molecule``."""
    if not isinstance(text, str):
        raise SmilesError("SMILES input must be a string")
    smiles = text.strip()
    if not smiles:
        raise SmilesError("empty SMILES string")

    mol = Molecule()
    prev_atom: int | None = None
    branch_stack: list[int | None] = []
    # ring number -> (atom index, bond token or None, opening position)
    open_rings: dict[int, tuple[int, str | None, int]] = {}
    pending_bond: str | None = None
    pending_bond_pos = 0
    saw_stereo = False

    def add_atom(atom: Atom, pos: int) -> None:
        nonlocal prev_atom, pending_bond
        idx = len(mol.atoms)
        mol.atoms.append(atom)
        if prev_atom is not None:
            _add_bond(mol, prev_atom, idx, pending_bond, pos)
        elif pending_bond is not None:
            raise SmilesError("bond symbol with no preceding atom", pending_bond_pos)
        prev_atom = idx
        pending_bond = None

    i = 0
    n = len(smiles)
    while i < n:
        ch = smiles[i]

        if ch == ".":
            raise SmilesError("multi-component SMILES are not supported", i)

        if ch == "(":
            if prev_atom is None:
                raise SmilesError("branch opened before any atom", i)
            branch_stack.append(prev_atom)
            i += 1
            continue

        if ch == ")":
            if not branch_stack:
                raise SmilesError("unmatched closing parenthesis", i)
            if pending_bond is not None:
                raise SmilesError("dangling bond symbol before ')'", pending_bond_pos)
            prev_atom = branch_stack.pop()
            i += 1
            continue

        if ch in _BOND_ORDERS or ch == ":":
            if pending_bond is not None:
                raise SmilesError("two consecutive bond symbols", i)
            pending_bond = ch
            pending_bond_pos = i
            i += 1
            continue

        if ch in "/\\":
            # Directional single bond; geometry is discarded.
            saw_stereo = True
            if pending_bond is None:
                pending_bond = "-"
                pending_bond_pos = i
            i += 1
            continue

        if ch.isdigit() or ch == "%":
            if prev_atom is None:
                raise SmilesError("ring closure before any atom", i)
            if ch == "%":
                if i + 2 >= n or not smiles[i + 1 : i + 3].isdigit():
                    raise SmilesError("'%' must be followed by two digits", i)
                ring_num = int(smiles[i + 1 : i + 3])
                i += 3
            else:
                ring_num = int(ch)
                i += 1
            _handle_ring(mol, open_rings, ring_num, prev_atom, pending_bond, i - 1)
            pending_bond = None
            continue

        if ch == "[":
            atom, consumed, had_stereo = _parse_bracket_atom(smiles, i)
            saw_stereo = saw_stereo or had_stereo
            add_atom(atom, i)
            i += consumed
            continue

        matched = _match_organic(smiles, i)
        if matched is not None:
            symbol, length = matched
            aromatic = symbol.islower()
            add_atom(
                Atom(
                    element=symbol.capitalize() if aromatic else symbol,
                    aromatic=aromatic,
                    parsed_aromatic=aromatic,
                ),
                i,
            )
            i += length
            continue

        raise SmilesError(f"unexpected character {ch!r}", i)

    if pending_bond is not None:
        raise SmilesError("dangling bond symbol at end of input", pending_bond_pos)
    if branch_stack:
        raise SmilesError("unmatched opening parenthesis", len(smiles) - 1)
    if open_rings:
        num, (_, _, pos) = min(open_rings.items())
        raise SmilesError(f"unmatched ring closure {num}", pos)
    if not mol.atoms:
        raise SmilesError("no atoms in SMILES string")

    if saw_stereo:
        warnings.warn(
            "stereochemistry tokens were discarded", StereoDiscardedWarning, stacklevel=2
        )
    return mol


def _match_organic(smiles: str, i: int) -> tuple[str, int] | None:
    for symbol in _TWO_LETTER_ORGANIC:
        if smiles.startswith(symbol, i):
            return symbol, 2
    ch = smiles[i]
    if ch in ORGANIC_SUBSET:
        return ch, 1
    if ch in AROMATIC_SUBSET:
        return ch, 1
    return None


def _handle_ring(
    mol: Molecule,
    open_rings: dict[int, tuple[int, str | None, int]],
    ring_num: int,
    atom: int,
    bond_token: str | None,
    pos: int,
) -> None:
    if ring_num in open_rings:
        other, other_token, other_pos = open_rings.pop(ring_num)
        if other == atom:
            raise SmilesError(f"ring bond {ring_num} closes on its own atom", pos)
        token = bond_token or other_token
        if bond_token and other_token and bond_token != other_token:
            raise SmilesError(
                f"conflicting bond symbols on ring closure {ring_num}", pos
            )
        _add_bond(mol, other, atom, token, pos)
    else:
        open_rings[ring_num] = (atom, bond_token, pos)


def _add_bond(
    mol: Molecule, a: int, b: int, token: str | None, pos: int
) -> None:
    if mol.bond_between(a, b) is not None:
        raise SmilesError("duplicate bond between the same pair of atoms", pos)
    both_aromatic = mol.atoms[a].aromatic and mol.atoms[b].aromatic
    if token is None and both_aromatic:
        # Unresolved aromatic bond (order 0): kekulization assigns 1 or 2.
        # Non-ring occurrences are demoted to plain singles there as well.
        mol.bonds.append(Bond(a, b, order=0, aromatic=True))
    elif token is None:
        mol.bonds.append(Bond(a, b, order=1, aromatic=False))
    elif token == ":":
        mol.bonds.append(Bond(a, b, order=0, aromatic=True))
    else:
        mol.bonds.append(Bond(a, b, order=_BOND_ORDERS[token], aromatic=False))
    mol.invalidate_caches()


def _parse_bracket_atom(smiles: str, start: int) -> tuple[Atom, int, bool]:
    """Parse ``[...]`` starting at ``start``; returns (atom, chars consumed,
    saw_stereo)."""
    end = smiles.find("]", start)
    if end == -1:
        raise SmilesError("unterminated bracket atom", start)
    body = smiles[start + 1 : end]
    if not body:
        raise SmilesError("empty bracket atom", start)

    i = 0
    saw_stereo = False

    isotope: int | None = None
    digits = ""
    while i < len(body) and body[i].isdigit():
        digits += body[i]
        i += 1
    if digits:
        isotope = int(digits)

    if i >= len(body):
        raise SmilesError("bracket atom has no element symbol", start + 1 + i)
    aromatic = False
    if body[i].islower():
        # Aromatic bracket atom: restricted to the aromatic subset.
        sym = body[i : i + 2] if body[i : i + 2] == "se" else body[i]
        if sym not in AROMATIC_SUBSET and sym != "se":
            raise SmilesError(f"unknown aromatic element {sym!r}", start + 1 + i)
        element = sym.capitalize()
        aromatic = True
        i += len(sym)
    else:
        sym = body[i]
        i += 1
        if i < len(body) and body[i].islower() and is_known_element(sym + body[i]):
            sym += body[i]
            i += 1
        element = sym
    if not is_known_element(element):
        raise SmilesError(f"unknown element {element!r}", start + 1)

    # Chirality markers: recorded as seen-and-dropped.
    while i < len(body) and body[i] == "@":
        saw_stereo = True
        i += 1
        # Named chirality classes like @TH1 / @AL1 / @SP1.
        for cls in ("TH", "AL", "SP", "TB", "OH"):
            if body.startswith(cls, i):
                i += len(cls)
                while i < len(body) and body[i].isdigit():
                    i += 1
                break

    explicit_h = 0
    if i < len(body) and body[i] == "H":
        i += 1
        digits = ""
        while i < len(body) and body[i].isdigit():
            digits += body[i]
            i += 1
        explicit_h = int(digits) if digits else 1

    charge = 0
    if i < len(body) and body[i] in "+-":
        sign = 1 if body[i] == "+" else -1
        i += 1
        if i < len(body) and body[i].isdigit():
            digits = ""
            while i < len(body) and body[i].isdigit():
                digits += body[i]
                i += 1
            charge = sign * int(digits)
        else:
            count = 1
            while i < len(body) and body[i] == body[i - 1]:
                count += 1
                i += 1
            charge = sign * count

    # Atom-class annotation ':n' carries no chemistry; accepted and ignored.
    if i < len(body) and body[i] == ":":
        i += 1
        if i >= len(body) or not body[i].isdigit():
            raise SmilesError("atom class ':' must be followed by digits", start + 1 + i)
        while i < len(body) and body[i].isdigit():
            i += 1

    if i != len(body):
        raise SmilesError(
            f"unexpected character {body[i]!r} in bracket atom", start + 1 + i
        )

    atom = Atom(
        element=element,
        formal_charge=charge,
        explicit_h=explicit_h,
        aromatic=aromatic,
        isotope=isotope,
        bracket=True,
        parsed_aromatic=aromatic,
    )
    return atom, end - start + 1, saw_stereo
