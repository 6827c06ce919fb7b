import json
from fractions import Fraction

import pytest

from rbx.corpus import (
    PERMITTED_FLAG_REASONS, corpus_dir, load_corpus, negative_control,
    spot_check_entry, specialize_bundle, verify_corpus, verify_entry,
)
from rbx.errors import CorpusIntegrityError
from rbx.structfile import CONVENTION, FORMAT, dump_structure, load_structure


@pytest.fixture(scope="module")
def entries():
    return load_corpus()


@pytest.fixture(scope="module")
def by_id(entries):
    return {e.id: e for e in entries}


class TestLoad:
    def test_family_counts(self, entries):
        def count(prefix, kind):
            return sum(1 for e in entries
                       if e.id.startswith(f"{prefix}.{kind}."))

        assert count("sec6.dim2", "RR") == 3
        assert count("sec6.dim2", "R") == 11
        assert count("sec6.dim2", "RQ") == 33
        assert count("sec6.dim2", "Q") == 3
        assert count("sec6.dim2", "QT") == 6
        assert count("sec6.dim2", "RS") == 22
        assert count("sec6.dim3", "RR") == 7
        assert count("sec6.dim3", "RQ") == 23 * 11
        assert count("sec6.dim3", "RS") == 7
        assert count("sec6.dim3", "QT") == 7
        assert count("sec6.dim4", "RR") == 3
        assert count("sec6.dim4", "RQ") == 5 * 7
        assert count("sec6.dim4", "RS") == 10
        assert count("sec6.dim4", "QT") == 10
        assert count("ex3.6", "RS") == 8
        assert count("ex3.6", "QT") == 8
        assert sum(1 for e in entries if e.id == "ex3.16.bisystem") == 1
        assert sum(1 for e in entries if e.id == "ex5.9.sigma") == 1

    def test_first_weight_entry_contents(self, by_id):
        entry = by_id["sec6.dim2.RR.1"]
        assert entry.checker == "rb-bialgebra"
        op = entry.bundle.operators[entry.ops["R"]]
        ring = entry.bundle.ring
        assert op.mat[0, 0] == -ring.param("lambda")
        assert op.mat[1, 1].is_zero
        status, _ = verify_entry(entry)
        assert status == "PASS"

    def test_ids_unique_and_sorted(self, entries):
        ids = [e.id for e in entries]
        assert len(ids) == len(set(ids))
        assert ids == sorted(ids, key=lambda i: tuple(
            int(p) if p.isdigit() else p for p in i.split(".")))

    def test_all_coefficients_parse(self, entries):
        # loading itself parses everything; a malformed file must raise
        doc = {
            "format": FORMAT, "convention": CONVENTION, "params": [],
            "dimension": 1, "basis": ["e1"],
            "comul": [[0, 0, 0, "1 +"]],
        }
        with pytest.raises(CorpusIntegrityError):
            load_structure(doc)

    def test_duplicate_ids_rejected(self, tmp_path, entries):
        base = corpus_dir()
        doc = json.loads((base / "ex3_16.json").read_text())
        doc["meta"]["entries"].append(doc["meta"]["entries"][0])
        (tmp_path / "dup.json").write_text(json.dumps(doc))
        with pytest.raises(CorpusIntegrityError):
            load_corpus(tmp_path)


class TestVerify:
    def test_dim2_family(self):
        summary = verify_corpus(pattern="sec6.dim2.*")
        assert summary.counts["fail"] == 0
        assert summary.counts["flagged"] == 3
        flagged = {i for i, s in summary.statuses.items() if s == "FLAGGED"}
        assert flagged == {"sec6.dim2.RS.2", "sec6.dim2.QT.4",
                          "sec6.dim2.QT.6"}

    def test_empty_filter(self):
        summary = verify_corpus(pattern="no.such.entry")
        assert summary.counts == {"entries": 0, "pass": 0, "flagged": 0,
                                  "fail": 0}

    def test_sqrt_entry(self, by_id):
        entry = by_id["sec6.dim3.Q.8"]
        assert entry.note == "sqrt-extension"
        status, report = verify_entry(entry)
        assert status == "PASS"
        import random
        ok, point = spot_check_entry(entry, random.Random(3), points=5)
        assert ok

    def test_flag_reasons_permitted(self, entries):
        for entry in entries:
            if entry.expected == "flagged":
                assert entry.reason in PERMITTED_FLAG_REASONS, entry.id

    def test_delta_variant_confirmed(self, by_id):
        entry = by_id["ex3.6.QT.4"]
        status, report = verify_entry(entry)
        assert status == "FLAGGED"
        assert entry.reason == "delta-variant"

    def test_golden_summary_stable(self):
        golden = (corpus_dir() / "golden_summary.txt").read_text()
        regenerated = "\n".join(verify_corpus().lines()) + "\n"
        assert regenerated == golden

    def test_weight_zero_specialization_still_passes(self, by_id):
        entry = by_id["sec6.dim2.RR.1"]
        assignment = {name: Fraction(0) for name in entry.bundle.ring.params}
        from rbx.corpus import CorpusEntry, entry_report, _pruned_bundle
        special = specialize_bundle(_pruned_bundle(entry), assignment)
        numeric = CorpusEntry(id=entry.id, checker=entry.checker,
                              bundle=special, ops=entry.ops,
                              weights={r: Fraction(0) for r in entry.weights})
        assert entry_report(numeric, None).ok


class TestBisystemCrossProduct:
    def test_dim2_pairs_combine_exhaustively(self, entries, by_id):
        # any listed system half plus any listed cosystem half forms a
        # bisystem exactly when both halves hold on their own
        from rbx.rota_baxter import RBBisystem, check_rb_bisystem
        bundle = by_id["sec6.dim2.RS.1"].bundle
        h = bundle.bialgebra
        halves = {}
        for entry in entries:
            if entry.bundle is bundle and entry.checker in ("rb-system",
                                                            "rb-cosystem"):
                status, _ = verify_entry(entry)
                halves[entry.id] = (entry, status == "PASS")
        systems = [v for i, v in halves.items() if ".RS." in i]
        cosystems = [v for i, v in halves.items() if ".QT." in i]
        assert len(systems) == 22 and len(cosystems) == 6
        for (rs, rs_ok) in systems:
            for (qt, qt_ok) in cosystems:
                bis = RBBisystem(
                    h,
                    bundle.operators[rs.ops["R"]],
                    bundle.operators[rs.ops["S"]],
                    bundle.operators[qt.ops["Q"]],
                    bundle.operators[qt.ops["T"]])
                assert check_rb_bisystem(bis).ok == (rs_ok and qt_ok)


class TestNegativeControls:
    def test_free_coefficients_explained(self, by_id):
        result = negative_control(by_id["sec6.dim2.QT.1"])
        assert result.mutations == 2
        assert result.flipped == 0
        assert result.free == 2
        assert result.unexplained == 0

    def test_rigid_entry_flips(self, by_id):
        result = negative_control(by_id["sec6.dim2.RS.1"])
        assert result.mutations == result.flipped
        assert result.unexplained == 0


class TestStructureFileRoundTrip:
    def test_dump_load_identity(self, entries):
        entry = entries[0]
        doc = dump_structure(entry.bundle)
        reloaded = load_structure(doc, name=entry.bundle.name)
        assert reloaded.dimension == entry.bundle.dimension
        # serialization is canonical, so a second round trip is the identity
        assert dump_structure(reloaded) == doc
