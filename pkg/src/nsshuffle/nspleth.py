"""Nonsymmetric plethysm on almost-symmetric polynomials.

The map is computed through two graded bases of rank-r space: the signed
flagged h basis  hpm_eta(x_1..x_r) * h_la[(1-t)X]  and the flagged h basis
h_eta(x_1..x_r) * h_la[X].  Nonsymmetric plethysm sends the first to the
second, element by element.  Both bases are unitriangular against the
(eta, tail) coordinates, so the expansion is a peeling loop.
"""

from __future__ import annotations

from functools import lru_cache

from .asympoly import AsymFn, _schur_in_vars
from .keypoly import LaurentPoly, pol_truncate
from .qtfield import ONE, ZERO, t as T_
from .symfunc import OVER_ONE_MINUS_T, ONE_MINUS_T, h, h_one_minus_t, partition


def _acc(out, key, v):
    w = out.get(key, ZERO) + v
    if w:
        out[key] = w
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _h_finite(m, k, signed):
    """h_m[(1-t)(y_1..y_k)] (signed) or h_m(y_1..y_k) as a dict over exponents."""
    if m == 0:
        return {(0,) * k: ONE}
    src = h_one_minus_t(m) if signed else {(m,): ONE}
    out = {}
    for la, c in src.items():
        for e, K in _schur_in_vars(la, k).items():
            _acc(out, e, c * K)
    return out


@lru_cache(maxsize=None)
def _flag_part(eta, signed):
    """The nonsymmetric factor hpm_eta or h_eta, as {exponent tuple: coeff}."""
    r = len(eta)
    cur = {(0,) * r: ONE}
    for j, m in enumerate(eta):
        if m == 0:
            continue
        factor = {}
        # h_m[x_j + A] = sum_a x_j^a h_{m-a}[A], A = (1-t)x_<j or x_<j
        for a in range(m + 1):
            for e, c in _h_finite(m - a, j, signed).items():
                key = e + (a,) + (0,) * (r - j - 1)
                _acc(factor, key, c)
        nxt = {}
        for e1, c1 in cur.items():
            for e2, c2 in factor.items():
                _acc(nxt, tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
        cur = nxt
    return cur


@lru_cache(maxsize=None)
def _basis_elt(eta, la, signed):
    r = len(eta)
    poly = AsymFn._raw(r, {(e, ()): c for e, c in _flag_part(eta, signed).items()})
    if not la:
        return poly
    g = h(*la)
    if signed:
        g = g.plethysm(ONE_MINUS_T)
    return poly * AsymFn.from_sym(g, r)


def flagged_h_basis(eta, la=(), signed=False):
    """hpm_eta(x_r) h_la[(1-t)X] when signed, else h_eta(x_r) h_la[X]."""
    return _basis_elt(tuple(eta), partition(la), bool(signed))


def _rev(eta):
    return tuple(reversed(eta))


def flagged_h_expand(f, signed):
    """Coordinates {(eta, la): coeff} of f in the (signed) flagged h basis."""
    f = AsymFn._raw(f.r, dict(f.terms))
    out = {}
    guard = 0
    while f.terms:
        guard += 1
        if guard > 100000:
            raise RuntimeError("flagged h expansion does not terminate: basis bug")
        k = min(sum(e) for e, _ in f.terms)
        eta = max((e for e, _ in f.terms if sum(e) == k), key=_rev)
        g = f.tail_of(eta)
        if signed:
            g = g.plethysm(OVER_ONE_MINUS_T)
        for la, a in g.to("h").c.items():
            _acc(out, (eta, la), a)
            f = f - _basis_elt(eta, la, signed) * a
    return out


def flagged_h_reconstruct(coords, r, signed):
    out = AsymFn.zero(r)
    for (eta, la), c in coords.items():
        out = out + _basis_elt(tuple(eta), la, signed) * c
    return out


def Pi_r(f, direction="fwd"):
    """Nonsymmetric plethysm (fwd) or its inverse (inv) at rank f.r."""
    if direction not in ("fwd", "inv"):
        raise ValueError("direction is 'fwd' or 'inv'")
    signed = direction == "fwd"
    coords = flagged_h_expand(f, signed)
    return flagged_h_reconstruct(coords, f.r, not signed)


def Pi(f):
    return Pi_r(f, "fwd")


def Pi_inv(f):
    return Pi_r(f, "inv")


def Pi_series(f, order=None):
    """Direct route for tail-free f: pol of f / prod_{i<j}(1 - t x_i/x_j),
    with each geometric series cut at the given order (default: degree)."""
    r = f.r
    if any(la for _, la in f.terms):
        raise ValueError("series route takes polynomials in x_1..x_r only")
    if order is None:
        order = max(f.degree(), 1)
    num = LaurentPoly._raw(r, {e: c for (e, _), c in f.terms.items()})
    for i, j in ((i, j) for i in range(r) for j in range(i + 1, r)):
        series = {}
        for k in range(order + 1):
            e = [0] * r
            e[i], e[j] = k, -k
            series[tuple(e)] = T_ ** k
        num = num * LaurentPoly._raw(r, series)
    res = pol_truncate(num)
    return AsymFn._raw(r, {(e, ()): c for e, c in res.terms.items()})


def comp_HL(alpha):
    """(-t)^(|alpha| - r) times the plethysm of x^alpha, alpha strict."""
    alpha = tuple(alpha)
    if any(a <= 0 for a in alpha):
        raise ValueError(f"{alpha} is not a strict composition")
    r = len(alpha)
    return Pi(AsymFn.monomial(alpha)) * ((-T_) ** (sum(alpha) - r))


def compositions(n, r, strict=False):
    """Compositions of n into r parts (nonnegative unless strict)."""
    lo = 1 if strict else 0
    if r == 0:
        if n == 0:
            yield ()
        return
    for a in range(lo, n - lo * (r - 1) + 1):
        for rest in compositions(n - a, r - 1, strict):
            yield (a,) + rest


def strict_compositions(n):
    """All strict compositions of n (every length)."""
    for r in range(1, n + 1):
        yield from compositions(n, r, strict=True)
