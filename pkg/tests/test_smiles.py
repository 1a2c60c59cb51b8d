"""Parser, writer and canonicalization tests."""

import random
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fragscreen import prepare_smiles
from fragscreen.molgraph import prepare, sanitize
from fragscreen.smiles import (
    SmilesError,
    StereoDiscardedWarning,
    canonical_ranks,
    canonicalize,
    parse_smiles,
    write_smiles,
)

from oracles import graphs_isomorphic


def prepared(smiles: str):
    return prepare(parse_smiles(smiles))


class TestParser:
    def test_ethanol(self):
        mol = parse_smiles("CCO")
        assert [a.element for a in mol.atoms] == ["C", "C", "O"]
        assert [(b.a, b.b, b.order) for b in mol.bonds] == [(0, 1, 1), (1, 2, 1)]

    def test_benzene_lowercase(self):
        mol = parse_smiles("c1ccccc1")
        assert mol.n_atoms == 6
        assert all(a.element == "C" and a.aromatic for a in mol.atoms)
        assert mol.n_bonds == 6

    def test_unmatched_ring_closure(self):
        with pytest.raises(SmilesError, match="unmatched ring closure"):
            parse_smiles("C1CC")

    def test_unmatched_parenthesis(self):
        with pytest.raises(SmilesError, match="unmatched opening"):
            parse_smiles("CC(C")
        with pytest.raises(SmilesError, match="unmatched closing"):
            parse_smiles("CC)C")

    def test_unknown_element(self):
        with pytest.raises(SmilesError, match="unknown element"):
            parse_smiles("[Xx]")

    def test_multi_component_rejected(self):
        with pytest.raises(SmilesError, match="multi-component"):
            parse_smiles("CC.O")

    def test_empty_input(self):
        with pytest.raises(SmilesError, match="empty"):
            parse_smiles("   ")

    def test_error_position_annotated(self):
        with pytest.raises(SmilesError) as exc_info:
            parse_smiles("CC?O")
        assert exc_info.value.position == 2
        assert "column 2" in str(exc_info.value)

    def test_bracket_atom_fields(self):
        mol = parse_smiles("[13CH3+]")
        atom = mol.atoms[0]
        assert atom.isotope == 13
        assert atom.element == "C"
        assert atom.explicit_h == 3
        assert atom.formal_charge == 1
        assert atom.bracket

    def test_charge_variants(self):
        assert parse_smiles("[O-]").atoms[0].formal_charge == -1
        assert parse_smiles("[Fe+2]").atoms[0].formal_charge == 2
        assert parse_smiles("[Fe++]").atoms[0].formal_charge == 2

    def test_stereo_discarded_with_warning(self):
        with pytest.warns(StereoDiscardedWarning):
            mol = parse_smiles("C/C=C/C")
        assert mol.n_atoms == 4
        with pytest.warns(StereoDiscardedWarning):
            parse_smiles("N[C@H](C)C(=O)O")

    def test_percent_ring_closure(self):
        mol = parse_smiles("C%12CCCCC%12")
        assert mol.n_bonds == 6

    def test_two_letter_elements(self):
        mol = parse_smiles("ClCBr")
        assert [a.element for a in mol.atoms] == ["Cl", "C", "Br"]

    def test_conflicting_ring_bond_symbols(self):
        with pytest.raises(SmilesError, match="conflicting bond symbols"):
            parse_smiles("C=1CCCCC#1")

    def test_dangling_bond(self):
        with pytest.raises(SmilesError, match="dangling bond"):
            parse_smiles("CC=")

    @given(st.text(min_size=1, max_size=30))
    @settings(max_examples=300, deadline=None)
    def test_parser_totality(self, text):
        # Either a molecule or a SmilesError; nothing else escapes.
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            try:
                parse_smiles(text)
            except SmilesError:
                pass


class TestWriter:
    @pytest.mark.parametrize("smiles", ["CCO", "c1ccccc1", "C", "[NH4+]",
                                        "CC(=O)O", "c1cc[nH]c1", "C#N", "O=C=O"])
    def test_round_trip_isomorphic(self, smiles):
        mol = prepared(smiles)
        text = write_smiles(mol)
        again = prepared(text)
        assert graphs_isomorphic(mol, again)

    def test_single_carbon(self):
        assert write_smiles(prepared("C")) == "C"

    def test_biphenyl_single_bond_marked(self):
        mol = prepared("c1ccc(-c2ccccc2)cc1")
        text = write_smiles(mol)
        assert "-" in text
        assert graphs_isomorphic_via_canon(text, "c1ccc(-c2ccccc2)cc1")

    def test_corpus_round_trip(self, corpus_sample):
        for smiles in corpus_sample:
            mol, report = prepare_smiles(smiles)
            assert report.valid, smiles
            text = write_smiles(mol)
            again, report2 = prepare_smiles(text)
            assert report2.valid, (smiles, text)
            if mol.n_atoms <= 12:
                assert graphs_isomorphic(mol, again), (smiles, text)
            else:
                assert canonicalize(mol) == canonicalize(again), (smiles, text)


def graphs_isomorphic_via_canon(a: str, b: str) -> bool:
    return canonicalize(prepared(a)) == canonicalize(prepared(b))


class TestCanonicalRanks:
    def test_single_atom(self):
        assert canonical_ranks(prepared("C")) == [0]

    def test_ranks_are_permutation(self, corpus_sample):
        for smiles in corpus_sample[:40]:
            mol = prepared(smiles)
            ranks = canonical_ranks(mol)
            assert sorted(ranks) == list(range(mol.n_atoms))

    def test_ethanol_both_directions(self):
        a = prepared("CCO")
        b = prepared("OCC")
        assert write_smiles(a, canonical_ranks(a)) == write_smiles(b, canonical_ranks(b))

    def test_permutation_fuzz(self):
        rng = random.Random(11)
        for smiles in ["CC(C)Cc1ccccc1", "CC1=CCC(CC1)C(=C)C", "COc1cc(C=O)ccc1O"]:
            mol = prepared(smiles)
            base = canonicalize(mol)
            for _ in range(1000):
                order = list(range(mol.n_atoms))
                rng.shuffle(order)
                assert canonicalize(mol.permuted(order)) == base


class TestCanonicalize:
    def test_same_molecule_different_entry(self):
        assert graphs_isomorphic_via_canon("C(O)C", "CCO")

    def test_kekule_equals_aromatic(self):
        assert graphs_isomorphic_via_canon("c1ccccc1", "C1=CC=CC=C1")
        assert graphs_isomorphic_via_canon("c1ccncc1", "C1=CC=NC=C1")

    def test_fixed_point(self):
        assert canonicalize(prepared("C")) == "C"

    def test_idempotent_on_corpus(self, corpus_sample):
        for smiles in corpus_sample:
            first = canonicalize(prepared(smiles))
            assert canonicalize(prepared(first)) == first, smiles

    def test_corpus_permutation_invariance(self, corpus_sample):
        rng = random.Random(5)
        for smiles in corpus_sample:
            mol = prepared(smiles)
            base = canonicalize(mol)
            for _ in range(20):
                order = list(range(mol.n_atoms))
                rng.shuffle(order)
                assert canonicalize(mol.permuted(order)) == base, smiles
