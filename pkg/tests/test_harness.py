import json

import pytest

from nsshuffle import cli, harness
from nsshuffle.asympoly import AsymFn
from nsshuffle.dyck import PartialDyckPath
from nsshuffle.qtfield import q, t
from nsshuffle.symfunc import s


def test_trivial_composition():
    rep = harness.verify_ns_shuffle((1,))
    assert rep.equal and rep.lhs == AsymFn.monomial((1,)) == rep.rhs


def test_kmkn_consistent_with_ns_shuffle_chain():
    # per path: the (1,1) row summand, carried through w-bar and plethysm,
    # is the column summand of the nonsymmetric shuffle identity
    from nsshuffle.ddpa import eval_word, transform_word
    from nsshuffle.dyck import attacking_data, enum_paths
    from nsshuffle.llt import chi_word, llt_flagged
    from nsshuffle.nspleth import Pi, strict_compositions

    tinv = lambda f: f.map_coeffs(lambda c: c.subs_mono(1, -1))  # noqa: E731
    for k in range(1, 5):
        for alpha in strict_compositions(k):
            assert harness.verify_kmkn(1, 1, alpha).equal
            assert harness.verify_ns_shuffle(alpha).equal
            for p in enum_paths(1, 1, alpha):
                a = attacking_data(p, 1, 1)
                w = transform_word("wbar", chi_word("row", a.partial, a.marking))
                col_pm = eval_word(w, AsymFn.one(0)) * (-1) ** a.partial.d
                assert tinv(Pi(col_pm)) == llt_flagged("col", False, a.r, a.partial, a.marking)


def test_classical_trivial():
    rep = harness.verify_classical(1, (1,))
    assert rep.equal and rep.lhs == s(1)


def test_signed_to_unsigned_example():
    rep = harness.verify_signed_to_unsigned(PartialDyckPath(2, "ENEE"), {(1, 3)})
    assert rep.equal
    assert rep.lhs == (AsymFn.monomial((2, 1)) + AsymFn.monomial((3, 0)) * t) * t


def test_input_validation():
    with pytest.raises(ValueError):
        harness.verify_ns_shuffle((2, 0))
    with pytest.raises(ValueError):
        harness.verify_kmkn(2, 2, (1,))
    with pytest.raises(ValueError):
        harness.verify_ns_shuffle((4, 3), cap=6)


def test_report_json_schema_and_witness():
    rep = harness.verify_ns_shuffle((2,))
    obj = json.loads(harness.report(rep, "json"))
    assert obj["schema"] == harness.SCHEMA_VERSION and obj["equal"] is True and obj["witness"] is None
    bad = harness.VerificationReport("demo", {}, AsymFn.monomial((1,)), AsymFn.monomial((1,)) * q, False)
    bad.witness = harness.first_difference(bad.lhs, bad.rhs)
    assert bad.witness == {"key": "((1,), ())", "lhs": "1", "rhs": "q"}
    assert "FAIL" in harness.report(bad, "text")
    with pytest.raises(ValueError):
        harness.report(rep, "xml")


def test_report_is_deterministic():
    a = harness.report(harness.verify_ns_shuffle((2, 1)), "json")
    b = harness.report(harness.verify_ns_shuffle((2, 1)), "json")
    strip = lambda x: {k: v for k, v in json.loads(x).items() if k != "seconds"}  # noqa: E731
    assert strip(a) == strip(b)


def test_atoms_of_second_example_are_positive():
    rep = harness.verify_ns_shuffle((3, 1))
    assert rep.atoms and not rep.audit_negative
    assert all(harness.is_nat_qt(c) for c in rep.atoms.values())


def test_is_nat_qt():
    assert harness.is_nat_qt(q + t * 2)
    assert not harness.is_nat_qt(q - t)
    assert not harness.is_nat_qt(1 / (1 - t))
    assert not harness.is_nat_qt(t ** -1)


def test_cli_exit_codes(capsys, tmp_path):
    assert cli.main(["verify-shuffle", "--alpha", "2,1"]) == 0
    assert cli.main(["verify-kmkn", "--m", "2", "--n", "1", "--alpha", "1", "--format", "json"]) == 0
    assert cli.main(["verify-classical", "--alpha", "3"]) == 0
    assert cli.main(["verify-shuffle", "--alpha", "0,1"]) == 2
    assert cli.main(["verify-shuffle", "--alpha", "3,2", "--degree-cap", "4"]) == 2
    assert cli.main(["llt", "--mode", "col", "--path", "NNENEE"]) == 0
    assert cli.main(["llt", "--mode", "row", "--path", "ENEE", "--r", "2", "--sigma", "1-3", "--signed"]) == 0
    assert cli.main(["llt", "--mode", "row", "--path", "ENEE", "--r", "2", "--sigma", "2-2"]) == 2
    assert cli.main(["nsmac", "--eta", "1", "--lambda", "1", "--modified"]) == 0
    assert cli.main(["nsmac", "--finite", "0,1"]) == 0
    assert cli.main(["nabla", "--r", "1", "--d", "2"]) == 0
    assert cli.main(["relations", "--rmax", "1", "--dmax", "1"]) == 0
    f = tmp_path / "f.json"
    neg = AsymFn.monomial((1,)) * (q - t)
    f.write_text(json.dumps(neg.to_json()))
    assert cli.main(["atoms", "--input", str(f)]) == 3
    f.write_text(json.dumps((AsymFn.monomial((1,)) * t).to_json()))
    assert cli.main(["atoms", "--input", str(f), "--format", "json"]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    assert cli.main(["atoms", "--input", str(bad)]) == 2
    capsys.readouterr()


def test_cli_parallel_jobs(capsys):
    assert cli.main(["verify-shuffle", "--alpha", "all:3", "--jobs", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [r["params"]["alpha"] for r in out] == [[1], [2], [1, 1], [3], [1, 2], [2, 1], [1, 1, 1]]


def test_mismatch_exit_code(monkeypatch, capsys):
    def fake(alpha, m):
        return harness.VerificationReport("demo", {}, AsymFn.one(0), AsymFn.one(0) * 2, False)

    monkeypatch.setattr(cli, "_ns", fake)
    assert cli.main(["verify-shuffle", "--alpha", "1"]) == 1
    capsys.readouterr()
