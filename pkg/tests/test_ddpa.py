import pytest
from hypothesis import given, strategies as st

from nsshuffle.asympoly import AsymFn, iota
from nsshuffle.ddpa import (
    DEFAULT,
    Action,
    OpWord,
    act_cherednik,
    act_generator,
    eval_word,
    expand_macros,
    farey_word,
    graded_basis,
    parse_word,
    rho_star_mn,
    transform_word,
    verify_relations,
    y_word,
    z_word,
)
from nsshuffle.nspleth import Pi, Pi_inv
from nsshuffle.qtfield import ONE, q, t
from nsshuffle.symfunc import AlphaExpr, SymFn, h, plethysm


def X(*eta):
    return AsymFn.monomial(eta)


def test_generator_examples():
    for n in range(4):
        got = act_generator(("d-",), X(n))
        want = plethysm(h(n), AlphaExpr(1 - t)) if n else SymFn.one()
        assert got == AsymFn.from_sym(want)
    assert act_generator(("d+",), AsymFn.one(0)) == -X(1)
    assert act_generator(("d+*",), X(1)) == X(0, 1)


def test_cherednik_examples():
    assert act_cherednik(1, X(1)) == X(1) * (q * t)
    assert not act_cherednik(1, AsymFn.one(1))
    assert not act_cherednik(1, iota(AsymFn.from_sym(h(2, 1))))


def test_empty_word_is_identity():
    f = X(2, 1) + AsymFn.tail((0, 1), h(2))
    assert eval_word(OpWord.identity(2), f) == f


def test_marked_corner_commutator():
    # [d-, d+] at vertex 0 divided by (t-1) is the one-box LLT with its
    # corner marked: the symmetric function e_1 = h_1
    w = OpWord([(ONE, (("d-",), ("d+",)))], 0) * (ONE / (t - 1))
    assert eval_word(w, AsymFn.one(0)) == AsymFn.from_sym(h(1))


def _basis_up_to(r, d):
    return [f for k in range(d + 1) for f in graded_basis(r, k)]


def test_N_images():
    assert transform_word("N", OpWord.letter(("d-",), 1)).terms == OpWord.letter(("d-",), 1).terms
    # N(y_1) = -(qt)^-1 z_1 y_1
    for r in (1, 2):
        lhs = transform_word("N", y_word(1, r))
        rhs = OpWord.letter(("z", 1), r) * OpWord.letter(("y", 1), r) * (-ONE / (q * t))
        for f in _basis_up_to(r, 2):
            assert eval_word(lhs, f) == eval_word(rhs, f)


def test_wbar_on_dplus():
    for r in range(3):
        w = transform_word("wbar", OpWord.letter(("d+",), r))
        assert w.terms == {(("d+",),): -(t ** (-r))}


def test_relations_hold():
    assert verify_relations(3, 3) == []


class _BrokenT(Action):
    def T(self, i, f):
        return super().T(i, f) * (1 + q)


def test_relations_detect_mutant():
    assert verify_relations(2, 2, action=_BrokenT(), extra=False)


def test_dminus_squared_relation():
    from nsshuffle.ddpa import relations_at

    rels = {name: (a, b) for name, a, b in relations_at(2)}
    a, b = rels["d-^2 T_{r-1} = d-^2"]
    for f in _basis_up_to(2, 3):
        assert eval_word(a, f) == eval_word(b, f)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_y_letters_multiply(r):
    for i in range(1, r + 1):
        w = y_word(i, r)
        for f in _basis_up_to(r, 2):
            assert eval_word(w, f) == f.mul_x(i)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_z_letters_are_cherednik(r):
    for i in range(1, r + 1):
        for f in _basis_up_to(r, 2):
            assert eval_word(z_word(i, r), f) == DEFAULT.Y(i, f)


@st.composite
def basis_elt(draw, rmax=3, dmax=3):
    r = draw(st.integers(1, rmax))
    d = draw(st.integers(0, dmax))
    return draw(st.sampled_from(graded_basis(r, d)))


@given(basis_elt())
def test_cherednik_commute(f):
    r = f.r
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            assert DEFAULT.Y(i, DEFAULT.Y(j, f)) == DEFAULT.Y(j, DEFAULT.Y(i, f))


@given(basis_elt(rmax=2))
def test_cherednik_rank_compatible(f):
    for i in range(1, f.r + 1):
        assert DEFAULT.Y(i, iota(f)) == iota(DEFAULT.Y(i, f))


@pytest.mark.parametrize("r,d", [(1, 3), (2, 3), (3, 2), (2, 4)])
def test_dminus_is_stable_symmetrization_after_plethysm(r, d):
    from nsshuffle.asympoly import stable_weyl

    for f in graded_basis(r, d):
        assert Pi(DEFAULT.dminus(Pi_inv(f))) == stable_weyl(f)


def test_farey_and_rho_star():
    assert farey_word(1, 0) == []
    assert farey_word(2, 1) == ["N", "S"]
    with pytest.raises(ValueError):
        farey_word(2, 2)
    w = OpWord.letter(("d+",), 0)
    assert rho_star_mn(1, 0, w).terms == {(("d+*",),): ONE}


def test_parse_word():
    w = parse_word("d- [d-,d+]/(t-1) d+ d+", 0)
    dm, dp = OpWord.letter(("d-",), 2), OpWord.letter(("d+",), 1)
    comm = (OpWord([(ONE, (("d-",), ("d+",)))], 2) - OpWord([(ONE, (("d+",), ("d-",)))], 2)) * (ONE / (t - 1))
    want = dm * comm * dp * OpWord.letter(("d+",), 0)
    assert w.terms == want.terms and (w.source, w.target) == (0, 1)


def test_expand_macros_preserves_action():
    w = OpWord.letter(("y", 1), 2) * OpWord.letter(("z", 2), 2)
    e = expand_macros(w)
    assert all(letter[0] not in ("y", "z") for ls in e.terms for letter in ls)
    for f in _basis_up_to(2, 2):
        assert eval_word(e, f) == eval_word(w, f)
