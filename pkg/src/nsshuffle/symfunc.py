"""Symmetric functions over Q(q, t).

Partitions are weakly decreasing tuples of positive ints.  A :class:`SymFn`
is a sparse map from partitions to :class:`QT` tagged with one of the bases
``m, h, e, p, s``.  The Schur basis is the hub: every other basis converts to
and from it using integer structure constants (Kostka numbers, characters).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .qtfield import QT, ONE, ZERO, qt, t as T_, q as Q_

BASES = ("m", "h", "e", "p", "s")


# ---------------------------------------------------------------------------
# partitions


def partition(parts):
    """Canonical partition from any iterable of nonnegative ints."""
    return tuple(sorted((p for p in parts if p), reverse=True))


@lru_cache(maxsize=None)
def partitions(n, maxpart=None):
    """All partitions of n, lex decreasing."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def conjugate(la):
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > i) for i in range(la[0]))


def n_stat(la):
    """n(la) = sum (i-1) la_i."""
    return sum(i * p for i, p in enumerate(la))


@lru_cache(maxsize=None)
def zee(la):
    out = 1
    for k in set(la):
        m = la.count(k)
        out *= k ** m * factorial(m)
    return out


def dominates(la, mu):
    s1 = s2 = 0
    for i in range(max(len(la), len(mu))):
        s1 += la[i] if i < len(la) else 0
        s2 += mu[i] if i < len(mu) else 0
        if s1 < s2:
            return False
    return True


def arm_leg(la, i, j):
    """Arm and leg of the cell in row i, column j (0-based, English)."""
    return la[i] - j - 1, conjugate(la)[j] - i - 1


@lru_cache(maxsize=None)
def remove_hstrip(la, k):
    """Partitions mu with la/mu a horizontal strip of size k."""
    out = []
    n = len(la)

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(partition(acc))
            return
        lo = la[i + 1] if i + 1 < n else 0
        for take in range(min(left, la[i] - lo) + 1):
            rec(i + 1, left - take, acc + [la[i] - take])

    rec(0, k, [])
    return tuple(out)


@lru_cache(maxsize=None)
def add_hstrip(mu, k):
    """Partitions la with la/mu a horizontal strip of size k."""
    out = []
    n = len(mu)

    def rec(i, left, acc):
        if i == n:
            # new row below
            if left <= (mu[-1] if mu else left):
                out.append(partition(acc + [left]))
            return
        hi = left if i == 0 else min(left, mu[i - 1] - mu[i])
        for add in range(hi + 1):
            rec(i + 1, left - add, acc + [mu[i] + add])

    if k == 0:
        return (mu,)
    rec(0, k, [])
    return tuple(sorted(set(out), reverse=True))


@lru_cache(maxsize=None)
def remove_vstrip(la, k):
    return tuple(conjugate(m) for m in remove_hstrip(conjugate(la), k))


@lru_cache(maxsize=None)
def add_vstrip(mu, k):
    return tuple(conjugate(m) for m in add_hstrip(conjugate(mu), k))


# ---------------------------------------------------------------------------
# integer structure constants


@lru_cache(maxsize=None)
def kostka(la, mu):
    """Number of SSYT of shape la and content mu (mu any composition)."""
    mu = tuple(p for p in mu if p)
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1
    return sum(kostka(nu, mu[:-1]) for nu in remove_hstrip(la, mu[-1]))


def _beta(la, n):
    return [la[i] + (n - 1 - i) if i < len(la) else n - 1 - i for i in range(n)]


@lru_cache(maxsize=None)
def character(la, rho):
    """chi^la evaluated at cycle type rho (Murnaghan-Nakayama)."""
    if sum(la) != sum(rho):
        return 0
    if not rho:
        return 1
    k = rho[0]
    rest = rho[1:]
    n = len(la)
    beads = _beta(la, n)
    bead_set = set(beads)
    total = 0
    for b in beads:
        nb = b - k
        if nb < 0 or nb in bead_set:
            continue
        sign = (-1) ** sum(1 for c in beads if nb < c < b)
        new = sorted([c for c in beads if c != b] + [nb], reverse=True)
        mu = partition(new[i] - (n - 1 - i) for i in range(n))
        total += sign * character(mu, rest)
    return total


@lru_cache(maxsize=None)
def _s_in_m(la):
    return {mu: kostka(la, mu) for mu in partitions(sum(la)) if kostka(la, mu)}


@lru_cache(maxsize=None)
def _h_in_s(mu):
    return {la: kostka(la, mu) for la in partitions(sum(mu)) if kostka(la, mu)}


@lru_cache(maxsize=None)
def _p_in_s(rho):
    return {la: character(la, rho) for la in partitions(sum(rho)) if character(la, rho)}


@lru_cache(maxsize=None)
def _s_in_p(la):
    return {rho: Fraction(character(la, rho), zee(rho)) for rho in partitions(sum(la)) if character(la, rho)}


@lru_cache(maxsize=None)
def _lex_rank(n):
    return {la: i for i, la in enumerate(partitions(n))}


def _peel(target, expansion, decreasing):
    """Solve sum_la x_la * expansion(la) = target for a unitriangular family
    whose leading term of expansion(la) is la itself.  ``decreasing`` tells
    whether the other terms are lex smaller (peel from the top) or larger."""
    res = dict(target)
    out = {}
    while res:
        la = max(res) if decreasing else min(res)
        c = res.pop(la)
        out[la] = c
        for mu, k in expansion(la).items():
            if mu == la:
                continue
            v = res.get(mu, ZERO) - c * k
            if v:
                res[mu] = v
            else:
                res.pop(mu, None)
    return out


def _lin(coeffs, expansion):
    out = {}
    for la, c in coeffs.items():
        for mu, k in expansion(la).items():
            v = out.get(mu, ZERO) + c * _coef(k)
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
    return out


def _coef(k):
    if isinstance(k, Fraction):
        return QT.frac(k.numerator, k.denominator)
    return k


def _h_in_s_conj(mu):
    return {conjugate(la): c for la, c in _h_in_s(mu).items()}


def _to_s(basis, coeffs):
    if basis == "s":
        return dict(coeffs)
    if basis == "m":
        return _peel(coeffs, _s_in_m, decreasing=True)
    if basis == "h":
        return _lin(coeffs, _h_in_s)
    if basis == "e":
        return _lin(coeffs, _h_in_s_conj)
    if basis == "p":
        return _lin(coeffs, _p_in_s)
    raise ValueError(f"unknown basis {basis!r}")


def _from_s(basis, coeffs):
    if basis == "s":
        return dict(coeffs)
    if basis == "m":
        return _lin(coeffs, _s_in_m)
    if basis == "h":
        return _peel(coeffs, _h_in_s, decreasing=False)
    if basis == "e":
        om = {conjugate(la): c for la, c in coeffs.items()}
        return _peel(om, _h_in_s, decreasing=False)
    if basis == "p":
        return _lin(coeffs, _s_in_p)
    raise ValueError(f"unknown basis {basis!r}")


# Schur-basis integer products via Pieri rules


@lru_cache(maxsize=None)
def pieri_h(k, la):
    return {nu: 1 for nu in add_hstrip(la, k)}


@lru_cache(maxsize=None)
def pieri_e(k, la):
    return {nu: 1 for nu in add_vstrip(la, k)}


@lru_cache(maxsize=None)
def _s_in_h_int(la):
    res = {la: 1}
    out = {}
    while res:
        mu = min(res)
        c = res.pop(mu)
        out[mu] = c
        for nu, k in _h_in_s(mu).items():
            if nu != mu:
                v = res.get(nu, 0) - c * k
                if v:
                    res[nu] = v
                else:
                    res.pop(nu, None)
    return out


@lru_cache(maxsize=None)
def schur_mul(la, mu):
    """Littlewood-Richardson product s_la * s_mu as an int dict."""
    if len(la) > len(mu) or (len(la) == len(mu) and la > mu):
        la, mu = mu, la
    if not la:
        return {mu: 1}
    out = {}
    for alpha, c in _s_in_h_int(la).items():
        cur = {mu: 1}
        for k in alpha:
            nxt = {}
            for nu, a in cur.items():
                for rho in add_hstrip(nu, k):
                    nxt[rho] = nxt.get(rho, 0) + a
            cur = nxt
        for nu, a in cur.items():
            out[nu] = out.get(nu, 0) + c * a
    return {nu: c for nu, c in out.items() if c}


@lru_cache(maxsize=None)
def schur_skew(la, mu):
    """s_{la/mu} in the Schur basis (int dict)."""
    out = {}
    for alpha, c in _s_in_h_int(mu).items():
        cur = {la: 1}
        for k in alpha:
            nxt = {}
            for nu, a in cur.items():
                for rho in remove_hstrip(nu, k):
                    nxt[rho] = nxt.get(rho, 0) + a
            cur = nxt
        for nu, a in cur.items():
            out[nu] = out.get(nu, 0) + c * a
    return {nu: c for nu, c in out.items() if c}


# ---------------------------------------------------------------------------
# plethystic alphabets


class AlphaExpr:
    """The alphabet ``a*X + b`` with a, b in Q(q, t); p_k maps to
    a(q^k, t^k) p_k + b(q^k, t^k)."""

    __slots__ = ("a", "b")

    def __init__(self, a=1, b=0):
        self.a = qt(a)
        self.b = qt(b)

    def pk(self, k):
        return self.a.subs_power(k), self.b.subs_power(k)

    def __repr__(self):
        return f"AlphaExpr(({self.a})*X + {self.b})"


# ---------------------------------------------------------------------------
# the SymFn type


def _clean(d):
    return {k: v for k, v in d.items() if v}


class SymFn:
    """A symmetric function in a chosen basis."""

    __slots__ = ("basis", "c")

    def __init__(self, basis="s", coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.c = {}
        for la, v in (coeffs or {}).items():
            v = qt(v)
            if v:
                la = partition(la)
                w = self.c.get(la, ZERO) + v
                if w:
                    self.c[la] = w
                else:
                    self.c.pop(la, None)

    @classmethod
    def _raw(cls, basis, coeffs):
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.c = coeffs
        return obj

    @classmethod
    def one(cls, basis="s"):
        return cls._raw(basis, {(): ONE})

    @classmethod
    def zero(cls, basis="s"):
        return cls._raw(basis, {})

    @classmethod
    def basis_elt(cls, basis, la, c=ONE):
        return cls._raw(basis, {partition(la): qt(c)})

    # -- conversion
    def to(self, basis):
        if basis == self.basis:
            return self
        s = _to_s(self.basis, self.c)
        return SymFn._raw(basis, _clean(_from_s(basis, s)))

    def s(self):
        return self.to("s")

    # -- structure
    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def degrees(self):
        return sorted({sum(la) for la in self.c})

    def homogeneous(self, d):
        return SymFn._raw(self.basis, {la: v for la, v in self.c.items() if sum(la) == d})

    def map_coeffs(self, fn):
        return SymFn._raw(self.basis, _clean({la: fn(v) for la, v in self.c.items()}))

    # -- arithmetic
    def __add__(self, other):
        if isinstance(other, (int, QT)):
            other = SymFn.one(self.basis) * other
        other = other.to(self.basis)
        out = dict(self.c)
        for la, v in other.c.items():
            w = out.get(la, ZERO) + v
            if w:
                out[la] = w
            else:
                out.pop(la, None)
        return SymFn._raw(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFn._raw(self.basis, {la: -v for la, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QT)):
            other = qt(other)
            if not other:
                return SymFn.zero(self.basis)
            return SymFn._raw(self.basis, {la: v * other for la, v in self.c.items()})
        if not isinstance(other, SymFn):
            return NotImplemented
        basis = self.basis
        if basis in ("h", "e", "p"):
            a, b = self.c, other.to(basis).c
            out = {}
            for la, u in a.items():
                for mu, v in b.items():
                    nu = partition(la + mu)
                    out[nu] = out.get(nu, ZERO) + u * v
            return SymFn._raw(basis, _clean(out))
        a, b = self.s().c, other.s().c
        out = {}
        for la, u in a.items():
            for mu, v in b.items():
                uv = u * v
                for nu, k in schur_mul(la, mu).items():
                    out[nu] = out.get(nu, ZERO) + uv * k
        return SymFn._raw("s", _clean(out)).to(basis)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (ONE / qt(c))

    def __pow__(self, k):
        out = SymFn.one(self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, QT)):
            other = SymFn.one(self.basis) * other
        if not isinstance(other, SymFn):
            return NotImplemented
        if other.basis == self.basis:
            return self.c == other.c
        return self.s().c == other.s().c

    __hash__ = None

    # -- operations
    def omega(self):
        s = self.s()
        return SymFn._raw("s", {conjugate(la): v for la, v in s.c.items()}).to(self.basis)

    def plethysm(self, alpha):
        """f[alpha] for an :class:`AlphaExpr`."""
        p = self.to("p").c
        cache = {}
        out = {}
        for rho, c in p.items():
            cur = {(): c}
            for k in rho:
                if k not in cache:
                    cache[k] = alpha.pk(k)
                a, b = cache[k]
                nxt = {}
                for nu, v in cur.items():
                    if a:
                        key = partition(nu + (k,))
                        nxt[key] = nxt.get(key, ZERO) + v * a
                    if b:
                        nxt[nu] = nxt.get(nu, ZERO) + v * b
                cur = nxt
            for nu, v in cur.items():
                out[nu] = out.get(nu, ZERO) + v
        return SymFn._raw("p", _clean(out)).to(self.basis)

    def skew_by(self, g):
        """g^perp applied to self (adjoint of multiplication by g)."""
        a = g.s().c
        b = self.s().c
        out = {}
        for mu, u in a.items():
            for la, v in b.items():
                uv = u * v
                for nu, k in schur_skew(la, mu).items():
                    out[nu] = out.get(nu, ZERO) + uv * k
        return SymFn._raw("s", _clean(out)).to(self.basis)

    def coeff_map(self, fn):
        return self.map_coeffs(fn)

    def flip(self):
        return self.map_coeffs(lambda c: c.flip())

    # -- i/o
    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [{"la": list(la), "c": v.to_json()} for la, v in sorted(self.c.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["basis"], {tuple(term["la"]): QT.from_json(term["c"]) for term in obj["terms"]})

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for la in sorted(self.c, key=lambda x: (-sum(x), tuple(-p for p in x))):
            v = self.c[la]
            name = self.basis + ("[" + ",".join(map(str, la)) + "]" if la else "[]")
            parts.append(f"({v})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def hall(f, g):
    """The Hall inner product <f, g> with <s_la, s_mu> = delta."""
    a, b = f.s().c, g.s().c
    out = ZERO
    for la, v in a.items():
        if la in b:
            out = out + v * b[la]
    return out


def skew(g, f):
    """g^perp f."""
    return f.skew_by(g)


def plethysm(f, alpha):
    return f.plethysm(alpha)


def omega(f):
    return f.omega()


def to_basis(f, basis):
    return f.to(basis)


def s(*la):
    return SymFn.basis_elt("s", la)


def h(*la):
    return SymFn.basis_elt("h", la)


def e(*la):
    return SymFn.basis_elt("e", la)


def p(*la):
    return SymFn.basis_elt("p", la)


def m(*la):
    return SymFn.basis_elt("m", la)


# ---------------------------------------------------------------------------
# Jing's operator and its building blocks, all in the Schur basis

ONE_MINUS_T = AlphaExpr(1 - T_)
OVER_ONE_MINUS_T = AlphaExpr(ONE / (1 - T_))


@lru_cache(maxsize=None)
def h_one_minus_t(m_):
    """h_m[(1-t)X] in the Schur basis, as a dict."""
    if m_ < 0:
        return {}
    if m_ == 0:
        return {(): ONE}
    out = {}
    # h_m[(1-t)X] = sum_k (-t)^k h_{m-k} e_k, and h_a e_k is two hooks
    for k in range(m_ + 1):
        c = (-T_) ** k
        for nu in add_hstrip(tuple([1] * k), m_ - k):
            out[nu] = out.get(nu, ZERO) + c
    return _clean(out)


@lru_cache(maxsize=None)
def _jing_on_schur(n, la):
    """B_n s_la in the Schur basis."""
    out = {}
    for i in range(len(la) + 1):
        if n + i < 0:
            continue
        hm = h_one_minus_t(n + i)
        if not hm:
            continue
        sign = -1 if i % 2 else 1
        for mu in remove_vstrip(la, i):
            for nu, c in hm.items():
                cc = c if sign > 0 else -c
                for rho, k in schur_mul(nu, mu).items():
                    out[rho] = out.get(rho, ZERO) + cc * k
    return _clean(out)


def jing_B(n, f):
    """Jing's vertex operator: sum_i (-1)^i h_{n+i}[(1-t)X] (e_i^perp f)."""
    src = f.s().c
    out = {}
    for la, v in src.items():
        for nu, c in _jing_on_schur(n, la).items():
            out[nu] = out.get(nu, ZERO) + v * c
    return SymFn._raw("s", _clean(out)).to(f.basis)


# ---------------------------------------------------------------------------
# Macdonald polynomials


def qt_power_sum_norm(rho):
    """<p_rho, p_rho>_{q,t}."""
    out = QT(zee(rho))
    for k in rho:
        out = out * (1 - Q_ ** k) / (1 - T_ ** k)
    return out


@lru_cache(maxsize=None)
def _gram_m(n):
    parts = partitions(n)
    mp = {la: SymFn._raw("m", {la: ONE}).to("p").c for la in parts}
    norms = {rho: qt_power_sum_norm(rho) for rho in parts}
    G = {}
    for i, la in enumerate(parts):
        for mu in parts[i:]:
            v = ZERO
            a, b = mp[la], mp[mu]
            for rho, c in a.items():
                if rho in b:
                    v = v + c * b[rho] * norms[rho]
            G[la, mu] = G[mu, la] = v
    return G


@lru_cache(maxsize=None)
def _macdonald_P_all(n):
    """All P_mu for mu |- n, in the m-basis, via Gram-Schmidt in increasing
    lex order (a linear extension of dominance)."""
    parts = sorted(partitions(n))
    G = _gram_m(n)
    P = {}
    norms = {}

    def ip(u, v):
        out = ZERO
        for a, x in u.items():
            for b, y in v.items():
                out = out + x * y * G[a, b]
        return out

    for mu in parts:
        vec = {mu: ONE}
        for nu in parts:
            if nu >= mu:
                break
            c = ip({mu: ONE}, P[nu]) / norms[nu]
            if c:
                for k, v in P[nu].items():
                    w = vec.get(k, ZERO) - c * v
                    if w:
                        vec[k] = w
                    else:
                        vec.pop(k, None)
        P[mu] = vec
        norms[mu] = ip(vec, vec)
    return P


def macdonald_P(mu):
    mu = partition(mu)
    return SymFn._raw("m", dict(_macdonald_P_all(sum(mu))[mu]))


def integral_scalar(mu):
    """c_mu = prod over cells of (1 - q^arm t^(leg+1))."""
    mu = partition(mu)
    out = ONE
    for i, row in enumerate(mu):
        for j in range(row):
            a, l = arm_leg(mu, i, j)
            out = out * (1 - Q_ ** a * T_ ** (l + 1))
    return out


@lru_cache(maxsize=None)
def _macdonald_J(mu):
    return (macdonald_P(mu) * integral_scalar(mu)).s()


def macdonald_J(mu):
    mu = partition(mu)
    f = _macdonald_J(mu)
    return SymFn._raw("s", dict(f.c))


@lru_cache(maxsize=None)
def _macdonald_Ht(mu):
    J = _macdonald_J(mu)
    Jt = J.map_coeffs(lambda c: c.subs_mono(1, -1))
    alpha = AlphaExpr(ONE / (1 - T_ ** -1))
    return Jt.plethysm(alpha) * T_ ** n_stat(mu)


def macdonald_Ht(mu):
    return SymFn._raw("s", dict(_macdonald_Ht(partition(mu)).c))


def macdonald(mu, kind="Htilde"):
    if kind == "P":
        return macdonald_P(mu)
    if kind == "J":
        return macdonald_J(mu)
    if kind in ("Htilde", "H", "Ht"):
        return macdonald_Ht(mu)
    raise ValueError(f"unknown Macdonald kind {kind!r}")


def qt_inner(f, g):
    """The (q,t) Hall pairing via the power-sum basis."""
    a, b = f.to("p").c, g.to("p").c
    out = ZERO
    for rho, v in a.items():
        if rho in b:
            out = out + v * b[rho] * qt_power_sum_norm(rho)
    return out
