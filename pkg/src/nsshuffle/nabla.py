"""Nonsymmetric nabla operators as exact matrices on graded pieces.

The signed operator (kind "bar") is computed from its intertwining
properties alone: it fixes each 1 in rank r', commutes with T_i and d_-, and
turns multiplication by x_1 into (qt)^-1 Y_1 x_1.  Applying that rewrite to
the generator basis d_-^l x^eta x_{r+1}^{la_1}.. 1 gives the operator in
generator coordinates; a solve converts to the (x^eta s_la) coordinates.

The modified operator (kind "bold") is the conjugate by nonsymmetric
plethysm.  Both can be restricted to the subspace x_1..x_r P(r), which is
spanned by the generator vectors with all eta_i >= 1 and is invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .asympoly import AsymFn
from .ddpa import DEFAULT
from .linalg import identity, inverse, matmul, matvec, nullspace, rank, scalar_shift, solve
from .nsmac import pair_indices
from .nspleth import Pi, Pi_inv
from .qtfield import ONE, ZERO, q as Q_, t as T_
from .symfunc import SymFn, conjugate, macdonald_Ht, n_stat, partition, partitions

KINDS = ("bar", "bold")


def _x_op(j, f, twisted):
    """Multiplication by x_j, or its image t^{j-1} T^-1..(qt)^-1 Y_1 x_1..T^-1
    under conjugation by the signed nabla."""
    if not twisted:
        return f.mul_x(j)
    g = f
    for i in range(j - 1, 0, -1):
        g = DEFAULT.Tinv(i, g)
    g = DEFAULT.Y(1, g.mul_x(1)) * (ONE / (Q_ * T_))
    for i in range(1, j):
        g = DEFAULT.Tinv(i, g)
    return g * (T_ ** (j - 1)) if j > 1 else g


def generator_vector(eta, la, twisted=False):
    """d_-^l x_1^eta_1 .. x_{r+l}^la_l . 1 (twisted: its image under the signed
    nabla)."""
    eta, la = tuple(eta), partition(la)
    exps = eta + la
    f = AsymFn.one(len(exps))
    for j, e in enumerate(exps, 1):
        for _ in range(e):
            f = _x_op(j, f, twisted)
    for _ in range(len(la)):
        f = DEFAULT.dminus(f)
    return f


def _keys(r, d, sub):
    keys = pair_indices(r, d)
    if sub:
        keys = [k for k in keys if all(e >= 1 for e in k[0])]
    return keys


def _coords(f, keys):
    pos = {k: n for n, k in enumerate(keys)}
    v = [ZERO] * len(keys)
    for k, c in f.terms.items():
        if k not in pos:
            raise ValueError(f"term {k} lies outside the chosen graded piece")
        v[pos[k]] = c
    return v


def _from_coords(v, r, keys):
    return AsymFn._raw(r, {k: c for k, c in zip(keys, v) if c})


@dataclass
class GradedMatrix:
    r: int
    d: int
    kind: str
    keys: list  # coordinate basis: x^eta s_la
    entries: list  # columns are images of the basis vectors
    subspace: bool = False

    def apply(self, f):
        return _from_coords(matvec(self.entries, _coords(f, self.keys)), self.r, self.keys)

    def __len__(self):
        return len(self.keys)


@lru_cache(maxsize=None)
def _bar_data(r, d, sub):
    keys = _keys(r, d, sub)
    B, C = [], []
    for eta, la in keys:
        B.append(_coords(generator_vector(eta, la), keys))
        C.append(_coords(generator_vector(eta, la, twisted=True), keys))
    n = len(keys)
    Bm = [[B[c][i] for c in range(n)] for i in range(n)]
    Cm = [[C[c][i] for c in range(n)] for i in range(n)]
    return keys, Bm, Cm


@lru_cache(maxsize=None)
def _bar_matrix(r, d, sub):
    keys, B, C = _bar_data(r, d, sub)
    return keys, matmul(C, inverse(B))


@lru_cache(maxsize=None)
def _bold_matrix(r, d, sub):
    keys, M = _bar_matrix(r, d, sub)
    n = len(keys)
    if sub:
        raise ValueError("plethysm does not preserve the divisible subspace; use apply_nabla")
    Pcols = [_coords(Pi(AsymFn._raw(r, {k: ONE})), keys) for k in keys]
    P = [[Pcols[c][i] for c in range(n)] for i in range(n)]
    Pinv_cols = [_coords(Pi_inv(AsymFn._raw(r, {k: ONE})), keys) for k in keys]
    Pinv = [[Pinv_cols[c][i] for c in range(n)] for i in range(n)]
    return keys, matmul(P, matmul(M, Pinv))


def nabla_matrix(kind, r, d, subspace=False):
    """Matrix of the signed (bar) or modified (bold) nabla on degree d of
    rank r.  subspace=True restricts bar to x_1..x_r P(r)."""
    if kind == "bar":
        keys, M = _bar_matrix(r, d, subspace)
    elif kind == "bold":
        keys, M = _bold_matrix(r, d, subspace)
    else:
        raise ValueError(f"kind is one of {KINDS}")
    return GradedMatrix(r, d, kind, keys, M, subspace)


def _bar_apply(f, power):
    """Signed nabla to an integer power on a homogeneous element; solves in
    generator coordinates instead of forming the matrix."""
    if power == 0 or not f:
        return f
    r, d = f.r, f.degree()
    sub = all(all(e >= 1 for e in k[0]) for k in f.terms)
    keys, B, C = _bar_data(r, d, sub)
    v = _coords(f, keys)
    for _ in range(abs(power)):
        if power > 0:
            y = solve(B, v)  # generator coordinates
            v = matvec(C, y)
        else:
            y = solve(C, v)
            v = matvec(B, y)
    return _from_coords(v, r, keys)


def apply_nabla(kind, power, f):
    """kind in {"bar", "bold"}; power any integer; f processed per degree."""
    if kind not in KINDS:
        raise ValueError(f"kind is one of {KINDS}")
    if power == 0:
        return f
    out = AsymFn.zero(f.r)
    for d in f.degrees():
        g = f.homogeneous(d)
        if kind == "bold":
            g = Pi(_bar_apply(Pi_inv(g), power))
        else:
            g = _bar_apply(g, power)
        out = out + g
    return out


def theta(f):
    """q -> 1/q, t -> 1/t on every coefficient."""
    return f.map_coeffs(lambda c: c.flip())


def nabla_eigenvalue(mu):
    mu = partition(mu)
    return Q_ ** n_stat(conjugate(mu)) * T_ ** n_stat(mu)


def spectrum_certificate(r, d, kinds=KINDS):
    """Annihilating polynomial and eigenspace dimensions, checked exactly."""
    pairs = pair_indices(r, d)
    expected = {}
    for eta, la in pairs:
        mu = partition(sorted(eta + la, reverse=True))
        expected[mu] = expected.get(mu, 0) + 1
    report = {"r": r, "d": d, "expected": {str(list(m)): c for m, c in sorted(expected.items())}, "kinds": {}}
    for kind in kinds:
        G = nabla_matrix(kind, r, d)
        n = len(G)
        P = identity(n)
        dims = {}
        for mu in sorted(expected):
            S = scalar_shift(G.entries, nabla_eigenvalue(mu))
            dims[str(list(mu))] = n - rank(S, n)
            P = matmul(P, S)
        annihilates = all(not x for row in P for x in row)
        report["kinds"][kind] = {
            "annihilates": annihilates,
            "dims": dims,
            "dims_ok": dims == {str(list(m)): c for m, c in expected.items()},
        }
    report["ok"] = all(v["annihilates"] and v["dims_ok"] for v in report["kinds"].values())
    return report


def kernel_vectors(kind, r, d, mu):
    G = nabla_matrix(kind, r, d)
    ker = nullspace(scalar_shift(G.entries, nabla_eigenvalue(mu)), len(G))
    return [_from_coords(v, r, G.keys) for v in ker]


def nabla_symmetric(g, power=1):
    """The classical nabla on a symmetric function, through its expansion in
    modified Macdonald polynomials (independent of the matrices above)."""
    out = SymFn.zero("s")
    for d in g.degrees():
        gd = g.homogeneous(d).s()
        parts = partitions(d)
        H = [macdonald_Ht(mu).c for mu in parts]
        A = [[h.get(la, ZERO) for h in H] for la in parts]
        coef = solve(A, [gd.c.get(la, ZERO) for la in parts])
        for mu, c in zip(parts, coef):
            if c:
                out = out + macdonald_Ht(mu) * (c * nabla_eigenvalue(mu) ** power)
    return out
