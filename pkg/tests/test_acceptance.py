"""Acceptance criteria.  Each test records one PASS/FAIL line; the lines are
printed in an "acceptance criteria" section at the end of the pytest run."""

import random
import time
import warnings

import pytest
from conftest import ACCEPTANCE_LINES

from nsshuffle import harness
from nsshuffle.asympoly import AsymFn, full_symmetrize, stable_atom_expand, stable_weyl
from nsshuffle.ddpa import DEFAULT, eval_word, graded_basis, parse_word, verify_relations
from nsshuffle.dyck import DyckPath, PartialDyckPath, attacking_data, partial_paths
from nsshuffle.linalg import identity
from nsshuffle.llt import chi, llt_flagged
from nsshuffle.nabla import nabla_matrix, spectrum_certificate
from nsshuffle.nsmac import E_nonsym, eigen_expand, integral_forms, knop_scalar, eigenvalue_vector, modified_E, pair_indices, stable_E
from nsshuffle.nspleth import Pi, Pi_inv, compositions, flagged_h_expand, strict_compositions
from nsshuffle.qtfield import ONE, q, t
from nsshuffle.symfunc import e, macdonald_Ht, omega, partition, s

# tE enters the degree-5 audit up to rank 2; rank 3 at degree 5 is too slow
AUDIT_TE_RANK = 2


class Criterion:
    def __init__(self, number, title, budget=None):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.t0 = time.time()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.time() - self.t0
        ok = exc_type is None and (self.budget is None or dt < self.budget)
        note = f" over budget {self.budget}s" if exc_type is None and not ok else ""
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {self.number}: {self.title} ({dt:.1f}s){note}"
        ACCEPTANCE_LINES.append(line)
        if exc_type is None and not ok:
            pytest.fail(line)
        return False


def A(*pairs):
    """Stable-atom expansion dict from ((eta, la), coeff) pairs, summing repeats."""
    out = {}
    for (eta, la), c in pairs:
        key = (tuple(eta), partition(la))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def tinv(f):
    return f.map_coeffs(lambda c: c.subs_mono(1, -1))


def gcol(steps):
    a = attacking_data(DyckPath(steps), 1, 1)
    return llt_flagged("col", False, a.r, a.partial, a.marking)


def test_criterion_01_first_example():
    with Criterion(1, "example alpha=(3): atoms of theta nabla^-1 C and nabla C_(3)", budget=10):
        rep = harness.verify_ns_shuffle((3,))
        assert rep.equal
        want = A(
            (((1,), (1, 1)), q**3),
            (((2,), (1,)), q**2),
            (((1,), (2,)), q**2),
            (((1,), (1, 1)), q**2 * t),
        )
        assert rep.atoms == want
        assert stable_atom_expand(gcol("NNNEEE")) == A((((1,), (1, 1)), ONE))
        assert stable_atom_expand(gcol("NNENEE")) == A((((2,), (1,)), ONE), (((1,), (2,)), ONE), (((1,), (1, 1)), t))
        cl = harness.verify_classical(1, (3,))
        assert cl.equal
        assert cl.lhs == s(1, 1, 1) * q**3 + (s(2, 1) + s(1, 1, 1) * t) * q**2


def test_criterion_02_second_example():
    with Criterion(2, "example alpha=(3,1): two column LLT atom expansions and nabla C_(3,1)", budget=60):
        g_pi = A(
            (((2, 1), (1,)), t), (((1, 2), (1,)), t), (((2, 0), (1, 1)), t), (((1, 1), (1, 1)), t**2),
        )
        g_theta = A(
            (((3, 1), ()), t), (((1, 3), ()), t), (((3, 0), (1,)), t),
            (((2, 2), ()), t**2), (((2, 1), (1,)), t**2), (((1, 2), (1,)), t**2), (((2, 0), (2,)), t**2),
            (((2, 1), (1,)), t**3), (((1, 2), (1,)), t**3), (((2, 0), (1, 1)), t**3), (((1, 1), (2,)), t**3),
            (((1, 1), (1, 1)), t**4),
        )
        assert stable_atom_expand(gcol("NNNEEENE")) == g_pi
        assert stable_atom_expand(gcol("NNENEENE")) == g_theta
        rep = harness.verify_ns_shuffle((3, 1))
        assert rep.equal
        combined = {}
        for exp, w in ((g_pi, q**3), (g_theta, q**2)):
            for k, c in exp.items():
                combined[k] = combined.get(k, 0) + c * w
        assert rep.atoms == combined
        cl = harness.verify_classical(1, (3, 1))
        assert cl.equal
        want = (s(2, 1, 1) * t + s(1, 1, 1, 1) * t**2) * q**3 + (
            s(3, 1) * t + s(2, 1, 1) * t**2 + s(2, 2) * t**2 + s(2, 1, 1) * t**3 + s(1, 1, 1, 1) * t**4
        ) * q**2
        assert cl.lhs == want


def test_criterion_03_shuffle_all_small():
    with Criterion(3, "nonsymmetric shuffle identity, three-way, all strict compositions of size <= 5", budget=900):
        bad = []
        for k in range(1, 6):
            for alpha in strict_compositions(k):
                rep = harness.verify_ns_shuffle(alpha, atoms=False)
                if not (rep.equal and all(rep.extra.values())):
                    bad.append(alpha)
        assert not bad, bad


def test_criterion_04_kmkn():
    cases = [(1, 1, (1,)), (1, 1, (2,)), (1, 1, (1, 1)), (2, 1, (1,)), (2, 1, (2,)), (1, 2, (1,))]
    with Criterion(4, "(km, kn) identity on the six listed cases", budget=900):
        for m, n, alpha in cases:
            rep = harness.verify_kmkn(m, n, alpha)
            assert rep.equal and all(rep.extra.values()), (m, n, alpha, rep.witness)


def test_criterion_05_llt_examples():
    X = AsymFn.monomial
    with Criterion(5, "worked flagged LLT examples (row, signed row, plethysm image)"):
        got = llt_flagged("row", False, 2, PartialDyckPath(2, "ENENEE"), {(2, 4)})
        want = (
            X((4, 0)) * t**3 + X((3, 1)) * (2 * t**2) + X((2, 2)) * (t**2 + t) + X((1, 3)) * t**2
            + (X((3, 0)) * t**2 + X((2, 1)) * t + X((1, 2)) * t) * AsymFn.tail((0, 0), e(1))
        )
        assert got == want
        p = PartialDyckPath(2, "ENEE")
        signed = llt_flagged("row", True, 2, p, {(1, 3)})
        assert signed == X((2, 1)) * t
        assert Pi(signed) == (X((2, 1)) + X((3, 0)) * t) * t == llt_flagged("row", False, 2, p, {(1, 3)})
        w = parse_word("d- [d-,d+]/(t-1) d+ d+ d- [d-,d+]/(t-1) d+ d+", 0)
        p2, S2 = PartialDyckPath(2, "NENEENENEE"), {(1, 4), (4, 6)}
        assert eval_word(w, AsymFn.one(0)) == llt_flagged("row", True, 2, p2, S2)


def test_criterion_06_relations():
    with Criterion(6, "all defining relations on graded spanning sets, r <= 3, d <= 3"):
        assert verify_relations(3, 3) == []


def _random_marked_paths(n, dmax, seed):
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < n:
        d = rng.randint(2, dmax)
        r = rng.randint(0, d)
        p = rng.choice(partial_paths(r, d))
        S = frozenset(c for c in p.corners if rng.random() < 0.5)
        if (p, S) not in seen:
            seen.add((p, S))
            out.append((r, p, S))
    return out


SAMPLES = _random_marked_paths(30, 6, seed=2024)


def test_criterion_07_chi_words():
    with Criterion(7, f"chi-words against enumeration on {len(SAMPLES)} random marked paths, d <= 6"):
        assert max(p.d for _, p, _ in SAMPLES) == 6
        for r, p, S in SAMPLES:
            assert chi("row", p, S) == llt_flagged("row", True, r, p, S)
            assert chi("col", p, S) == tinv(llt_flagged("col", True, r, p, S))


def test_criterion_08_plethysm():
    with Criterion(8, "plethysm signed->unsigned on the samples; Pi d- Pi^-1 = stable symmetrization, r <= 3, d <= 4"):
        for r, p, S in SAMPLES:
            assert Pi(llt_flagged("row", True, r, p, S)) == llt_flagged("row", False, r, p, S)
            assert Pi(tinv(llt_flagged("col", True, r, p, S))) == tinv(llt_flagged("col", False, r, p, S))
        for r in range(1, 4):
            for d in range(0, 5):
                for f in graded_basis(r, d):
                    assert Pi(DEFAULT.dminus(Pi_inv(f))) == stable_weyl(f)


def test_criterion_09_nsmac():
    with Criterion(9, "stable/modified nonsymmetric Macdonald suite, degree <= 4, r <= 3"):
        for r in range(0, 4):
            for d in range(0, 5):
                for eta, la in pair_indices(r, d):
                    f = stable_E(eta, la)
                    mu = partition(sorted(eta + la, reverse=True))
                    for j, lam in enumerate(eigenvalue_vector(eta, la), 1):
                        assert DEFAULT.Y(j, f) == f * lam
                    if r:
                        merged = partition(sorted(la + (eta[-1],), reverse=True))
                        assert DEFAULT.dminus(f) == stable_E(eta[:-1], merged)
                    tE = modified_E(eta, la)
                    assert tE.is_polynomial_in_qt()
                    assert all(c.is_poly() for c in flagged_h_expand(tE, signed=False).values())
                    assert full_symmetrize(tE).tail_of(()) == omega(macdonald_Ht(mu))
        # Knop-Sahi integral forms in finitely many variables
        for N in (1, 2, 3):
            for d in range(0, 4):
                for beta in compositions(d, N):
                    cal, _, _ = integral_forms(beta)
                    assert all(c.is_poly() for c in cal.terms.values())
                    assert knop_scalar(beta) * E_nonsym(beta).coeff(beta) == cal.coeff(beta)
        # Hecke span and Monk support through eigenbasis expansion
        for r, d in [(2, 3), (3, 3), (2, 4)]:
            for eta, la in pair_indices(r, d):
                f = stable_E(eta, la)
                for i in range(1, r):
                    sw = list(eta)
                    sw[i - 1], sw[i] = sw[i], sw[i - 1]
                    assert set(eigen_expand(DEFAULT.T(i, f))) <= {(eta, la), (tuple(sw), la)}
        for r, d in [(1, 3), (2, 3)]:
            for eta, la in pair_indices(r, d):
                kappa = partition(sorted(eta + la, reverse=True))
                for th, lam in eigen_expand(stable_E(eta, la).mul_x(1)):
                    shifted = (th[0] - 1,) + th[1:] + lam
                    assert min(shifted) >= 0 and partition(sorted(shifted, reverse=True)) == kappa


def test_criterion_10_nabla_spectrum():
    with Criterion(10, "nabla spectrum certificates r <= 2, d <= 4; degree-1 matrix is the identity"):
        for r in range(0, 3):
            G = nabla_matrix("bar", r, 1)
            assert G.entries == identity(len(G))
            for d in range(1, 5):
                cert = spectrum_certificate(r, d)
                assert cert["ok"], (r, d, cert)


def test_criterion_11_positivity_audit():
    # soft criterion: counterexamples are findings and are reported, not failures
    with Criterion(11, "stable-atom positivity audit, LLT targets and tE, degree <= 5") as crit:
        audit = harness.atom_audit(max_degree=5, tE_rank=AUDIT_TE_RANK, tE_degree=5)
        found = audit["counterexamples"]
        note = f"audited {audit['checked']} targets, {len(found)} counterexamples"
        crit.title += f" [{note}]"
        for c in found:
            print(f"counterexample: {c}")
        if found:
            warnings.warn(f"{len(found)} stable-atom coefficients outside N[q,t]")

