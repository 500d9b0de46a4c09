"""Almost-symmetric polynomials.

An element of rank r is a polynomial in x_1..x_r tensored with a symmetric
function in the tail alphabet x_{r+1}, x_{r+2}, ...  It is stored as a flat
map ``(eta, la) -> QT`` meaning ``x^eta * s_la(tail)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .keypoly import LaurentPoly, key_expand, key_polynomial
from .qtfield import QT, ONE, ZERO, qt
from .symfunc import (
    SymFn,
    add_hstrip,
    kostka,
    partition,
    partitions,
    remove_hstrip,
    remove_vstrip,
    schur_mul,
)


def _acc(out, key, v):
    w = out.get(key, ZERO) + v
    if w:
        out[key] = w
    else:
        out.pop(key, None)


class AsymFn:
    """Element of the space of almost-symmetric polynomials of rank r."""

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = r
        self.terms = {}
        for (eta, la), c in (terms or {}).items():
            eta = tuple(eta)
            if len(eta) != r:
                raise ValueError(f"eta {eta} has wrong length for rank {r}")
            c = qt(c)
            if c:
                _acc(self.terms, (eta, partition(la)), c)

    @classmethod
    def _raw(cls, r, terms):
        obj = cls.__new__(cls)
        obj.r = r
        obj.terms = terms
        return obj

    # -- constructors
    @classmethod
    def zero(cls, r):
        return cls._raw(r, {})

    @classmethod
    def one(cls, r=0):
        return cls._raw(r, {((0,) * r, ()): ONE})

    @classmethod
    def monomial(cls, eta, c=ONE):
        eta = tuple(eta)
        return cls._raw(len(eta), {(eta, ()): qt(c)})

    @classmethod
    def from_sym(cls, g, r=0):
        """A symmetric function in the full alphabet, viewed in rank r."""
        out = cls._raw(0, {((), la): c for la, c in g.s().c.items()})
        for _ in range(r):
            out = iota(out)
        return out

    @classmethod
    def tail(cls, eta, g):
        """x^eta times g evaluated on the tail alphabet."""
        eta = tuple(eta)
        return cls._raw(len(eta), {(eta, la): c for la, c in g.s().c.items()})

    @classmethod
    def from_poly(cls, f):
        """A LaurentPoly (nonnegative exponents) in x_1..x_r with rank r = N."""
        return cls._raw(f.N, {(e, ()): c for e, c in f.terms.items()})

    # -- structure
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) + sum(la) for e, la in self.terms), default=0)

    def degrees(self):
        return sorted({sum(e) + sum(la) for e, la in self.terms})

    def homogeneous(self, d):
        return AsymFn._raw(self.r, {k: c for k, c in self.terms.items() if sum(k[0]) + sum(k[1]) == d})

    def tail_degree(self):
        return max((sum(la) for _, la in self.terms), default=0)

    def etas(self):
        return sorted({e for e, _ in self.terms})

    def tail_of(self, eta):
        eta = tuple(eta)
        return SymFn._raw("s", {la: c for (e, la), c in self.terms.items() if e == eta})

    def divisible_by_xs(self):
        """True if x_1 ... x_r divides every term."""
        return all(min(e, default=1) >= 1 for e, _ in self.terms)

    # -- arithmetic
    def __add__(self, other):
        if isinstance(other, (int, QT)):
            other = AsymFn.one(self.r) * other
        if other.r != self.r:
            raise ValueError(f"rank mismatch {self.r} vs {other.r}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return AsymFn._raw(self.r, out)

    __radd__ = __add__

    def __neg__(self):
        return AsymFn._raw(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QT)):
            other = qt(other)
            if not other:
                return AsymFn.zero(self.r)
            return AsymFn._raw(self.r, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, SymFn):
            other = AsymFn.from_sym(other, self.r)
        if not isinstance(other, AsymFn):
            return NotImplemented
        if other.r != self.r:
            raise ValueError(f"rank mismatch {self.r} vs {other.r}")
        out = {}
        for (e1, l1), c1 in self.terms.items():
            for (e2, l2), c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                for nu, k in schur_mul(l1, l2).items():
                    _acc(out, (e, nu), c * k)
        return AsymFn._raw(self.r, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (ONE / qt(c))

    def __eq__(self, other):
        if isinstance(other, (int, QT)):
            other = AsymFn.one(self.r) * other
        if not isinstance(other, AsymFn):
            return NotImplemented
        if self.r != other.r:
            # compare after lifting the smaller rank
            a, b = (self, other) if self.r < other.r else (other, self)
            while a.r < b.r:
                a = iota(a)
            return a.terms == b.terms
        return self.terms == other.terms

    __hash__ = None

    def mul_x(self, i):
        """Multiply by x_i, 1 <= i <= r."""
        if not 1 <= i <= self.r:
            raise IndexError(f"x_{i} is not a nonsymmetric variable at rank {self.r}")
        out = {}
        for (e, la), c in self.terms.items():
            ne = e[: i - 1] + (e[i - 1] + 1,) + e[i:]
            out[(ne, la)] = c
        return AsymFn._raw(self.r, out)

    def map_coeffs(self, fn):
        out = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                out[k] = v
        return AsymFn._raw(self.r, out)

    def flip(self):
        return self.map_coeffs(lambda c: c.flip())

    def coeff(self, eta, la=()):
        return self.terms.get((tuple(eta), partition(la)), ZERO)

    def is_polynomial_in_qt(self):
        """True if every coefficient lies in Z[q, t] (nonnegative exponents)."""
        return all(c.is_poly() and all(i >= 0 and j >= 0 for i, j in c.num) for c in self.terms.values())

    # -- i/o
    def to_json(self):
        groups = {}
        for (e, la), c in self.terms.items():
            groups.setdefault(e, {})[la] = c
        return {
            "r": self.r,
            "terms": [
                {"eta": list(e), "sym": SymFn._raw("s", groups[e]).to_json()}
                for e in sorted(groups, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, obj):
        r = obj["r"]
        out = AsymFn.zero(r)
        for term in obj["terms"]:
            out = out + AsymFn.tail(term["eta"], SymFn.from_json(term["sym"]))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (e, la) in sorted(self.terms, key=lambda k: (-(sum(k[0]) + sum(k[1])), k), reverse=False):
            c = self.terms[(e, la)]
            mono = "*".join(f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a)
            sym = ("s[" + ",".join(map(str, la)) + "]") if la else ""
            body = "*".join(x for x in (mono, sym) if x) or "1"
            parts.append(f"({c})*{body}")
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# inclusion, truncation, lifting


def iota(f):
    """The inclusion of rank r into rank r+1 (split x_{r+1} off the tail)."""
    out = {}
    for (e, la), c in f.terms.items():
        for k in range(sum(la) + 1):
            for mu in remove_hstrip(la, k):
                _acc(out, (e + (k,), mu), c)
    return AsymFn._raw(f.r + 1, out)


def iota_to(f, r):
    while f.r < r:
        f = iota(f)
    return f


@lru_cache(maxsize=None)
def _schur_in_vars(la, k):
    """s_la(y_1..y_k) as an int dict over exponent tuples."""
    out = {}
    if len(la) > k:
        return out
    for mu in partitions(sum(la)):
        if len(mu) > k:
            continue
        K = kostka(la, mu)
        if not K:
            continue
        padded = mu + (0,) * (k - len(mu))
        for perm in set(permutations(padded)):
            out[perm] = K
    return out


def truncate(f, N):
    """Set x_{N+1} = x_{N+2} = ... = 0."""
    if N < f.r:
        raise ValueError(f"cannot truncate rank {f.r} element to {N} variables")
    k = N - f.r
    out = {}
    for (e, la), c in f.terms.items():
        for tail, K in _schur_in_vars(la, k).items():
            key = e + tail
            v = out.get(key, ZERO) + c * K
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return LaurentPoly._raw(N, out)


def lift(g, r, d=None):
    """The unique rank-r element whose truncation to g.N variables is g."""
    N = g.N
    if N < r:
        raise ValueError("need at least r variables")
    k = N - r
    m_coeffs = {}
    for exps, c in g.terms.items():
        eta, tail = exps[:r], exps[r:]
        if min(tail, default=0) < 0:
            raise ValueError("tail exponents must be nonnegative")
        lam = partition(tail)
        key = (eta, lam)
        if key in m_coeffs:
            if m_coeffs[key] != c:
                raise ValueError("input is not symmetric in the tail variables")
        else:
            m_coeffs[key] = c
    # every rearrangement must be present with the same coefficient
    for (eta, lam), c in m_coeffs.items():
        if len(lam) > k:
            raise ValueError("tail partition longer than the tail variable count")
        padded = lam + (0,) * (k - len(lam))
        for perm in set(permutations(padded)):
            if g.terms.get(eta + perm, ZERO) != c:
                raise ValueError("input is not symmetric in the tail variables")
    if d is not None:
        for (eta, lam) in m_coeffs:
            if sum(eta) + sum(lam) != d:
                raise ValueError("input is not homogeneous of the declared degree")
    for (eta, lam) in m_coeffs:
        if sum(lam) > k:
            raise ValueError(f"tail degree {sum(lam)} exceeds the {k} tail variables; truncation is not faithful")
    return from_m_coeffs(r, m_coeffs)


def from_m_coeffs(r, m_coeffs):
    """Build a rank-r element from {(eta, lam): c}, meaning
    sum c * x^eta * m_lam(tail)."""
    groups = {}
    for (eta, lam), c in m_coeffs.items():
        if c:
            groups.setdefault(tuple(eta), {})[partition(lam)] = c
    out = {}
    for eta, mc in groups.items():
        for la, c in SymFn._raw("m", mc).s().c.items():
            if c:
                out[(eta, la)] = c
    return AsymFn._raw(r, out)


# ---------------------------------------------------------------------------
# stable Weyl symmetrization


@lru_cache(maxsize=None)
def _weyl_tail(n, la):
    """Tail part of the stable symmetrization of x_r^n s_la(tail):
    sum_i (-1)^i h_{n+i} e_i^perp s_la, as an int dict."""
    out = {}
    for i in range(len(la) + 1):
        if n + i < 0:
            continue
        sign = -1 if i % 2 else 1
        for mu in remove_vstrip(la, i):
            for nu in add_hstrip(mu, n + i):
                out[nu] = out.get(nu, 0) + sign
    return {k: v for k, v in out.items() if v}


def stable_weyl(f):
    """Stable Weyl symmetrization of x_r together with the tail."""
    if f.r == 0:
        raise ValueError("stable symmetrization needs rank >= 1")
    out = {}
    for (e, la), c in f.terms.items():
        for nu, k in _weyl_tail(e[-1], la).items():
            _acc(out, (e[:-1], nu), c * k)
    return AsymFn._raw(f.r - 1, out)


def stable_weyl_finite(f):
    """Same map computed by finite Weyl symmetrization and lifting (oracle)."""
    from .keypoly import weyl_symmetrize

    d = f.degree()
    N = f.r + d
    g = weyl_symmetrize(truncate(f, N), f.r, N)
    return lift(g, f.r - 1)


def full_symmetrize(f):
    while f.r:
        f = stable_weyl(f)
    return f


# ---------------------------------------------------------------------------
# stable atoms


def stable_atom(eta, la=()):
    """Stable atom indexed by (eta | la): symmetrize the atom A_{(eta;la)}
    over the last len(la) slots."""
    eta = tuple(eta)
    la = partition(la)
    alpha = eta + la
    f = AsymFn.from_poly(key_polynomial("atom", alpha)) if alpha else AsymFn.one(0)
    for _ in range(len(la)):
        f = stable_weyl(f)
    return f


def stable_atom_expand(f, N=None):
    """Expansion of f in stable atoms, as {(eta, la): coeff}."""
    if not f:
        return {}
    r = f.r
    out = {}
    for d in f.degrees():
        fd = f.homogeneous(d)
        if N is None:
            n_vars = d if (r and fd.divisible_by_xs()) else r + d
            n_vars = max(n_vars, r + fd.tail_degree())
        else:
            n_vars = N
        g = truncate(fd, n_vars)
        exp = key_expand("atom", g)
        groups = {}
        for beta, c in exp.items():
            eta, tail = beta[:r], beta[r:]
            lam = partition(tail)
            groups.setdefault((eta, lam), {})[tail] = c
        k = n_vars - r
        for (eta, lam), tails in groups.items():
            padded = lam + (0,) * (k - len(lam))
            orbit = set(permutations(padded))
            vals = set(tails.values())
            if set(tails) != orbit or len(vals) != 1:
                raise ValueError(f"atom expansion does not group into stable atoms at {(eta, lam)}")
            out[(eta, lam)] = vals.pop()
    return out


def atoms_reconstruct(expansion, r):
    out = AsymFn.zero(r)
    for (eta, lam), c in expansion.items():
        out = out + stable_atom(eta, lam) * c
    return out
