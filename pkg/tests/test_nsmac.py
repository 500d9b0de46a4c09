import pytest

from nsshuffle.asympoly import AsymFn, full_symmetrize, iota
from nsshuffle.ddpa import DEFAULT
from nsshuffle.keypoly import LaurentPoly
from nsshuffle.nsmac import (
    E_eigenvalues,
    E_nonsym,
    J_target,
    eigen_expand,
    eigenvalue_vector,
    integral_forms,
    knop_scalar,
    modified_E,
    pair_indices,
    stable_E,
    stable_eigenvalue,
    standardize,
    symmetric_check,
)
from nsshuffle.nspleth import Pi, compositions, flagged_h_expand
from nsshuffle.qtfield import q, t
from nsshuffle.symfunc import h, macdonald_Ht, omega, partition

L = LaurentPoly
SMALL = [(r, d) for r in (1, 2) for d in range(1, 4)] + [(3, 2), (3, 3)]


def idx(r, d):
    return pair_indices(r, d)


def test_finite_examples():
    assert E_nonsym(()) == L.one(0)
    assert E_nonsym((0, 0)) == L.one(2)
    assert E_nonsym((1, 0)) == L.var(1, 2)
    assert E_nonsym((0, 1)) == L.var(2, 2) + L.var(1, 2) * ((1 - t) / (1 - q * t))


def test_integral_form_examples():
    cal, flip, boxes = integral_forms((1,))
    assert cal == L.var(1, 1) * (1 - q * t)
    assert flip == L.var(1, 1) * (1 - t / q)
    assert boxes == [((1, 1), 0, 0)]
    cal, flip, _ = integral_forms((0,))
    assert cal == flip == L.one(1)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_integral_forms_polynomial(N):
    for d in range(0, 4):
        for beta in compositions(d, N):
            cal, _, _ = integral_forms(beta)
            assert all(c.is_poly() for c in cal.terms.values())
            assert knop_scalar(beta) * E_nonsym(beta).coeff(beta) == cal.coeff(beta)


def test_finite_eigenvalues_distinct():
    for beta in compositions(2, 3):
        vals = E_eigenvalues(beta)
        assert len(vals) == 3


def test_stable_examples():
    assert stable_E((), (1,)) == AsymFn.from_sym(h(1)) * (1 - t)
    assert stable_E((1,)) == AsymFn.monomial((1,))
    assert modified_E((1,)) == AsymFn.monomial((1,))
    assert stable_eigenvalue((1,), (), 1) == q * t
    assert stable_eigenvalue((0, 1), (), 1) == 0
    assert stable_eigenvalue((1,), (), 2) == 0
    assert standardize((1, 0, 1)) == (2, 1, 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_symmetric_cases(n):
    from nsshuffle.symfunc import partitions

    for mu in partitions(n):
        assert symmetric_check(mu)
        assert modified_E((), mu).tail_of(()) == omega(macdonald_Ht(mu))


@pytest.mark.parametrize("r,d", SMALL)
def test_eigen_equations(r, d):
    for eta, la in idx(r, d):
        f = stable_E(eta, la)
        for j, lam in enumerate(eigenvalue_vector(eta, la), 1):
            assert DEFAULT.Y(j, f) == f * lam


@pytest.mark.parametrize("r,d", SMALL)
def test_dminus_merge(r, d):
    for eta, la in idx(r, d):
        merged = partition(sorted(la + (eta[-1],), reverse=True))
        assert DEFAULT.dminus(stable_E(eta, la)) == stable_E(eta[:-1], merged)


@pytest.mark.parametrize("r,d", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_rank_compatibility(r, d):
    for eta, la in idx(r, d):
        assert stable_E(eta + (0,), la) == iota(stable_E(eta, la))
        assert modified_E(eta + (0,), la) == iota(modified_E(eta, la))


@pytest.mark.parametrize("r,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_hecke_span(r, d):
    for eta, la in idx(r, d):
        f = stable_E(eta, la)
        for i in range(1, r):
            sw = list(eta)
            sw[i - 1], sw[i] = sw[i], sw[i - 1]
            allowed = {(eta, la), (tuple(sw), la)}
            assert set(eigen_expand(DEFAULT.T(i, f))) <= allowed


@pytest.mark.parametrize("r,d", [(1, 2), (2, 2), (2, 3)])
def test_monk_support(r, d):
    for eta, la in idx(r, d):
        kappa = partition(sorted(eta + la, reverse=True))
        g = stable_E(eta, la).mul_x(1)
        for (th, lam), _ in eigen_expand(g).items():
            shifted = (th[0] - 1,) + th[1:] + lam
            assert min(shifted) >= 0
            assert partition(sorted(shifted, reverse=True)) == kappa


@pytest.mark.parametrize("r,d", SMALL)
def test_modified_integrality(r, d):
    for eta, la in idx(r, d):
        f = modified_E(eta, la)
        assert f.is_polynomial_in_qt()
        assert all(c.is_poly() for c in flagged_h_expand(f, signed=False).values())


@pytest.mark.parametrize("r,d", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_commutative_diagram(r, d):
    # plethysm then full symmetrization equals pushing down then plethysm
    for eta, la in idx(r, d):
        mu = partition(sorted(eta + la, reverse=True))
        sym = full_symmetrize(modified_E(eta, la))
        down = stable_E(eta, la)
        while down.r:
            down = DEFAULT.dminus(down)
        assert down.tail_of(()) == J_target(mu)
        assert sym == Pi(down)
        assert sym.tail_of(()) == omega(macdonald_Ht(mu))
