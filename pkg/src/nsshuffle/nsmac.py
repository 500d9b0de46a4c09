"""Nonsymmetric Macdonald polynomials.

Finite-variable E_beta come from a joint eigen-solve against Cherednik
operators built from the Hecke generators and the cyclic shift.  Stable
integral forms stE_{eta|la} are the joint eigenvectors of the transported
Y_1..Y_r on a graded piece of rank-r space, separated and normalized by
pushing down with d_- r times onto q^{n(mu*)} J_mu(q^-1, t).  Modified
forms apply the nonsymmetric plethysm.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .asympoly import AsymFn, iota
from .ddpa import DEFAULT
from .keypoly import LaurentPoly, divided_difference, twist
from .linalg import nullspace, scalar_shift, solve
from .nspleth import Pi, compositions
from .qtfield import ONE, ZERO, q as Q_, t as T_
from .symfunc import SymFn, conjugate, macdonald_J, n_stat, partition, partitions

DEGREE_CAP = int(os.environ.get("SHUFFLE_DEGREE_CAP", "6"))


def _check_cap(d, cap=None):
    cap = DEGREE_CAP if cap is None else cap
    if d > cap:
        raise ValueError(f"degree {d} exceeds the degree cap {cap}")


# ---------------------------------------------------------------------------
# finite variables


def finite_Y(i, f):
    """Cherednik operator Y_i on polynomials in N = f.N variables:
    t^(N-i) T_{i-1}..T_1 Phi T_{N-1}^-1..T_i^-1, with Phi the cyclic shift
    x_N -> q^-1 x_1.  Degree preserving."""
    N = f.N
    g = f
    for j in range(i, N):
        g = divided_difference("Tinv", j, g)
    g = twist("Phi", g).map_coeffs(lambda c: c.subs_mono(-1, 1))
    for j in range(1, i):
        g = divided_difference("T", j, g)
    return g * (T_ ** (N - i))


@lru_cache(maxsize=None)
def _finite_Y_matrices(N, d):
    basis = list(compositions(d, N))
    mats = []
    for i in range(1, N + 1):
        cols = [finite_Y(i, LaurentPoly.monomial(b)) for b in basis]
        mats.append([[cols[k].coeff(a) for k in range(len(basis))] for a in basis])
    return basis, mats


@lru_cache(maxsize=None)
def _E(beta):
    N, d = len(beta), sum(beta)
    basis, mats = _finite_Y_matrices(N, d)
    k = basis.index(beta)
    rows = []
    for M in mats:
        rows.extend(scalar_shift(M, M[k][k]))
    ker = nullspace(rows, len(basis))
    if len(ker) != 1 or not ker[0][k]:
        raise ArithmeticError(f"eigen-solve for E_{beta} is degenerate (kernel dimension {len(ker)})")
    v = ker[0]
    c = v[k]
    return LaurentPoly._raw(N, {a: x / c for a, x in zip(basis, v) if x})


def E_nonsym(beta, N=None):
    """Monic nonsymmetric Macdonald polynomial E_beta(x_1..x_N; q, t)."""
    beta = tuple(beta)
    if N is not None and N != len(beta):
        beta = beta + (0,) * (N - len(beta))
    if any(b < 0 for b in beta):
        raise ValueError("beta must be a weak composition")
    _check_cap(sum(beta))
    if not beta:
        return LaurentPoly.one(0)
    return _E(beta)


def E_eigenvalues(beta):
    """Eigenvalues of Y_1..Y_N on E_beta (diagonal entries of the triangular
    matrices)."""
    beta = tuple(beta)
    basis, mats = _finite_Y_matrices(len(beta), sum(beta))
    k = basis.index(beta)
    return [M[k][k] for M in mats]


def arm_leg_boxes(beta):
    """(arm, leg) for each box of the diagram of beta: row i has beta_i
    boxes; arm = boxes to the right in the row, leg counts rows k < i with
    j <= beta_k <= beta_i and rows k > i with j <= beta_k + 1 <= beta_i."""
    out = []
    for i, b in enumerate(beta):
        for j in range(1, b + 1):
            arm = b - j
            leg = sum(1 for k in range(i) if j <= beta[k] <= b)
            leg += sum(1 for k in range(i + 1, len(beta)) if j <= beta[k] + 1 <= b)
            out.append(((i + 1, j), arm, leg))
    return out


def knop_scalar(beta):
    out = ONE
    for _, a, l in arm_leg_boxes(beta):
        out = out * (1 - Q_ ** (a + 1) * T_ ** (l + 1))
    return out


def integral_forms(beta, N=None):
    """(script E, its q-flipped variant, box data)."""
    beta = tuple(beta)
    if N is not None and N != len(beta):
        beta = beta + (0,) * (N - len(beta))
    E = E_nonsym(beta)
    cal = E * knop_scalar(beta)
    mu = partition(sorted(beta, reverse=True))
    flip = cal.map_coeffs(lambda c: c.subs_mono(-1, 1)) * (Q_ ** n_stat(conjugate(mu)))
    return cal, flip, arm_leg_boxes(beta)


# ---------------------------------------------------------------------------
# stable forms


def standardize(word):
    """Relabel the smallest letter 1..k left to right, then the next, etc."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    st = [0] * len(word)
    for rank, i in enumerate(order, 1):
        st[i] = rank
    return tuple(st)


def _index(eta, la):
    return tuple(eta), partition(la)


def stable_eigenvalue(eta, la, j):
    eta, la = _index(eta, la)
    r = len(eta)
    if j < 1:
        raise ValueError("eigenvalue index starts at 1")
    if j > r or eta[j - 1] == 0:
        return ZERO
    st = standardize(eta + la)
    return Q_ ** eta[j - 1] * T_ ** (r + len(la) + 1 - st[j - 1])


def eigenvalue_vector(eta, la):
    return tuple(stable_eigenvalue(eta, la, j) for j in range(1, len(eta) + 1))


def pair_indices(r, d):
    """All (eta | la) in N^r x Par with total degree d."""
    out = []
    for k in range(d + 1):
        for eta in compositions(k, r):
            for la in partitions(d - k):
                out.append((eta, la))
    return out


@lru_cache(maxsize=None)
def _graded(r, d):
    keys = pair_indices(r, d)
    return keys, {k: n for n, k in enumerate(keys)}


def _coords(f, r, d):
    keys, pos = _graded(r, d)
    v = [ZERO] * len(keys)
    for k, c in f.terms.items():
        if sum(k[0]) + sum(k[1]) != d:
            raise ValueError("element is not homogeneous of the requested degree")
        v[pos[k]] = c
    return v


def _from_coords(v, r, d):
    keys, _ = _graded(r, d)
    return AsymFn._raw(r, {k: c for k, c in zip(keys, v) if c})


@lru_cache(maxsize=None)
def Y_matrices(r, d):
    """Matrices of the transported Y_1..Y_r on the degree-d piece of rank r,
    in the (x^eta s_la) basis; columns are images."""
    keys, _ = _graded(r, d)
    mats = []
    for j in range(1, r + 1):
        cols = [_coords(DEFAULT.Y(j, AsymFn._raw(r, {k: ONE})), r, d) for k in keys]
        n = len(keys)
        mats.append([[cols[c][row] for c in range(n)] for row in range(n)])
    return mats


def J_target(mu):
    """q^{n(mu*)} J_mu(q^-1, t) in the Schur basis."""
    mu = partition(mu)
    J = macdonald_J(mu).map_coeffs(lambda c: c.subs_mono(-1, 1))
    return J * (Q_ ** n_stat(conjugate(mu)))


def _push_down(f):
    while f.r:
        f = DEFAULT.dminus(f)
    return f


@lru_cache(maxsize=None)
def _eigenspace(r, d, vec):
    """Solve one joint eigenspace; returns {index: stE}."""
    members = [k for k in pair_indices(r, d) if eigenvalue_vector(*k) == vec]
    keys, _ = _graded(r, d)
    rows = []
    for M, lam in zip(Y_matrices(r, d), vec):
        rows.extend(scalar_shift(M, lam))
    if rows:
        ker = nullspace(rows, len(keys))
    else:
        ker = [[ONE if i == j else ZERO for j in range(len(keys))] for i in range(len(keys))]
    if len(ker) != len(members):
        raise ArithmeticError(
            f"eigenspace for {vec} at rank {r}, degree {d} has dimension {len(ker)}, expected {len(members)}"
        )
    down = [_push_down(_from_coords(v, r, d)) for v in ker]
    parts = partitions(d)
    A = [[g.tail_of(()).c.get(la, ZERO) for g in down] for la in parts]
    out = {}
    for eta, la in members:
        mu = partition(sorted(eta + la, reverse=True))
        target = J_target(mu).c
        coef = solve(A, [target.get(p, ZERO) for p in parts])
        vec_out = [ZERO] * len(keys)
        for c, v in zip(coef, ker):
            if c:
                vec_out = [a + c * b if b else a for a, b in zip(vec_out, v)]
        out[(eta, la)] = _from_coords(vec_out, r, d)
    return out


def stable_E(eta, la=()):
    """Integral form stable nonsymmetric Macdonald polynomial stE_{eta|la}."""
    eta, la = _index(eta, la)
    d = sum(eta) + sum(la)
    _check_cap(d)
    r = len(eta)
    return _eigenspace(r, d, eigenvalue_vector(eta, la))[(eta, la)]


def modified_E(eta, la=()):
    """Modified form tE_{eta|la}: the nonsymmetric plethysm of stE."""
    return Pi(stable_E(eta, la))


def eigen_expand(f):
    """Coordinates of a homogeneous rank-r element in the stE basis."""
    r = f.r
    d = f.degree()
    idx = pair_indices(r, d)
    cols = [_coords(stable_E(*k), r, d) for k in idx]
    A = [[col[i] for col in cols] for i in range(len(idx))]
    coef = solve(A, _coords(f, r, d))
    return {k: c for k, c in zip(idx, coef) if c}


def raise_rank(f, r):
    while f.r < r:
        f = iota(f)
    return f


def stable_E_json(eta, la=()):
    eta, la = _index(eta, la)
    f = stable_E(eta, la)
    return {
        "eta": list(eta),
        "lambda": list(la),
        "stE": f.to_json(),
        "eigenvalues": [str(stable_eigenvalue(eta, la, j)) for j in range(1, len(eta) + 1)],
    }


def symmetric_check(mu):
    """stE_{empty|mu} against the target, as a boolean."""
    return stable_E((), mu).tail_of(()) == SymFn._raw("s", dict(J_target(mu).c))
