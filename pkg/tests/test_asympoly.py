
import pytest
from hypothesis import given, strategies as st

from nsshuffle.asympoly import (
    AsymFn,
    atoms_reconstruct,
    full_symmetrize,
    iota,
    lift,
    stable_atom,
    stable_atom_expand,
    stable_weyl,
    stable_weyl_finite,
    truncate,
)
from nsshuffle.keypoly import LaurentPoly, key_polynomial
from nsshuffle.qtfield import ONE, q, t
from nsshuffle.symfunc import h, partition, partitions, s

L = LaurentPoly


def mono(*e):
    return L.monomial(e)


def test_iota_examples():
    g = iota(AsymFn.from_sym(h(2)))
    assert g == AsymFn(1, {((2,), ()): 1, ((1,), (1,)): 1, ((0,), (2,)): 1})
    assert iota(AsymFn.monomial((1,))) == AsymFn.monomial((1, 0))
    assert iota(AsymFn.one(0)) == AsymFn.one(1)


def test_truncate_examples():
    f = AsymFn.tail((1,), s(1))
    assert truncate(f, 2) == mono(1, 1)
    assert truncate(AsymFn.from_sym(h(2)), 2) == mono(2, 0) + mono(1, 1) + mono(0, 2)
    g = AsymFn.monomial((2,)) + f
    assert truncate(g, 1) == mono(2)


def test_lift_examples():
    assert lift(mono(1, 1), 1, 2) == AsymFn.tail((1,), s(1))
    s2 = sum((mono(*e) for e in [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]), L(3))
    assert lift(s2, 0) == AsymFn.from_sym(h(2))
    assert lift(mono(2, 0, 0), 1) == AsymFn.monomial((2,))
    with pytest.raises(ValueError):
        lift(mono(0, 1, 0), 1)


def test_stable_weyl_examples():
    assert stable_weyl(AsymFn.monomial((2,))) == AsymFn.from_sym(h(2))
    assert stable_weyl(AsymFn.one(1)) == AsymFn.one(0)
    f = AsymFn.tail((1,), h(1))
    assert stable_weyl(f) == stable_weyl_finite(f)


def test_stable_atom_examples():
    assert stable_atom((), (2, 1)) == AsymFn.from_sym(s(2, 1))
    assert stable_atom((1,)) == AsymFn.monomial((1,))
    a = truncate(stable_atom((1,), (1,)), 3)
    assert a == key_polynomial("atom", (1, 1, 0)) + key_polynomial("atom", (1, 0, 1))
    assert stable_atom_expand(AsymFn.from_sym(s(2, 1))) == {((), (2, 1)): ONE}
    assert stable_atom_expand(AsymFn.monomial((1,))) == {((1,), ()): ONE}


@st.composite
def asym(draw, rmax=2, dmax=3):
    r = draw(st.integers(0, rmax))
    d = draw(st.integers(0, dmax))
    terms = {}
    for _ in range(draw(st.integers(1, 3))):
        k = draw(st.integers(0, d))
        eta = [0] * r
        if r:
            for _ in range(k):
                eta[draw(st.integers(0, r - 1))] += 1
        else:
            k = 0
        la = draw(st.sampled_from(partitions(d - k)))
        terms[(tuple(eta), la)] = draw(st.integers(-2, 3))
    return AsymFn(r, terms)


@given(asym())
def test_truncate_lift_roundtrip(f):
    N = f.r + f.degree()
    assert lift(truncate(f, N), f.r) == f


@given(asym(), st.integers(0, 3))
def test_iota_commutes_with_truncate(f, extra):
    N = f.r + 1 + extra
    assert truncate(iota(f), N) == truncate(f, N)


@given(asym(rmax=2, dmax=3))
def test_stable_weyl_against_finite_oracle(f):
    if f.r:
        assert stable_weyl(f) == stable_weyl_finite(f)


@given(asym(rmax=2, dmax=3))
def test_atom_expand_roundtrip(f):
    assert atoms_reconstruct(stable_atom_expand(f), f.r) == f


def _pairs(r, d):
    from nsshuffle.nsmac import pair_indices

    return pair_indices(r, d)


@pytest.mark.parametrize("r,d", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_full_symmetrization_of_atoms(r, d):
    for eta, la in _pairs(r, d):
        a = eta + la
        got = full_symmetrize(stable_atom(eta, la))
        if all(a[i] >= a[i + 1] for i in range(len(a) - 1)):
            assert got == AsymFn.from_sym(s(*partition(a)))
        else:
            assert not got


@pytest.mark.parametrize("r,d", [(1, 2), (2, 3), (1, 4)])
def test_atom_rank_compatibility(r, d):
    # iota splits the orbit sum by the value landing in slot r+1
    for eta, la in _pairs(r, d):
        expect = AsymFn.zero(r + 1)
        for c in sorted(set(la) | {0}):
            rest = list(la)
            if c:
                rest.remove(c)
            expect = expect + stable_atom(eta + (c,), rest)
        assert iota(stable_atom(eta, la)) == expect
        if not la:
            assert iota(stable_atom(eta)) == stable_atom(eta + (0,))


def test_json_roundtrip():
    f = AsymFn.tail((1, 0), s(2, 1)) * (q / (1 - t)) + AsymFn.monomial((0, 2))
    assert AsymFn.from_json(f.to_json()) == f
