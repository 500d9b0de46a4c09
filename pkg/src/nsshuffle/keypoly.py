"""Laurent polynomials in finitely many variables with the Demazure and Hecke
operator calculus: isobaric divided differences, Demazure-Lusztig operators,
Demazure characters and atoms, and expansions into them."""

from __future__ import annotations

from functools import lru_cache

from .qtfield import QT, ONE, ZERO, qt, q as Q_, t as T_


class LaurentPoly:
    """Sparse Laurent polynomial in x_1..x_N over Q(q, t)."""

    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        self.N = N
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != N:
                raise ValueError(f"exponent {e} has wrong length for N={N}")
            c = qt(c)
            if c:
                v = self.terms.get(e, ZERO) + c
                if v:
                    self.terms[e] = v
                else:
                    self.terms.pop(e, None)

    @classmethod
    def _raw(cls, N, terms):
        obj = cls.__new__(cls)
        obj.N = N
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, exps, c=ONE):
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: qt(c)} if c else {})

    @classmethod
    def var(cls, i, N):
        e = [0] * N
        e[i - 1] = 1
        return cls.monomial(e)

    @classmethod
    def one(cls, N):
        return cls.monomial((0,) * N)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, (int, QT)):
            other = LaurentPoly.one(self.N) * other
        return LaurentPoly._raw(self.N, _add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.N, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QT)):
            other = qt(other)
            if not other:
                return LaurentPoly._raw(self.N, {})
            return LaurentPoly._raw(self.N, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return LaurentPoly._raw(self.N, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, QT)):
            other = LaurentPoly.one(self.N) * other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    __hash__ = None

    def map_coeffs(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return LaurentPoly._raw(self.N, out)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def extend(self, N):
        """View in more variables."""
        if N < self.N:
            raise ValueError("cannot shrink the variable count")
        pad = (0,) * (N - self.N)
        return LaurentPoly._raw(N, {e + pad: c for e, c in self.terms.items()})

    def to_json(self):
        return {"N": self.N, "terms": [{"e": list(e), "c": c.to_json()} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["N"], {tuple(x["e"]): QT.from_json(x["c"]) for x in obj["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            ) or "1"
            parts.append(f"({self.terms[e]})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _add(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, ZERO) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# two-variable tables: the image of x^a y^b under each operator, as a list of
# ((a', b'), coefficient).  Shared with the almost-symmetric module.


@lru_cache(maxsize=None)
def _divdiff(a, b):
    """(x^a y^b - x^b y^a)/(x - y) as an int table."""
    if a == b:
        return ()
    if a > b:
        d = a - b
        return tuple(((b + d - 1 - k, b + k), 1) for k in range(d))
    return tuple((e, -c) for e, c in _divdiff(b, a))


@lru_cache(maxsize=None)
def table_pi(a, b):
    """pi(x^a y^b) = (x^{a+1} y^b - x^b y^{a+1})/(x - y)."""
    # x * x^a y^b = x^{a+1} y^b; its antisymmetrization over (x - y)
    return tuple((e, QT(c)) for e, c in _divdiff(a + 1, b))


@lru_cache(maxsize=None)
def table_pihat(a, b):
    out = dict(table_pi(a, b))
    v = out.get((a, b), ZERO) - ONE
    if v:
        out[(a, b)] = v
    else:
        out.pop((a, b), None)
    return tuple(out.items())


@lru_cache(maxsize=None)
def table_T(a, b):
    """T(x^a y^b) = x^b y^a + (1-t) x (x^a y^b - x^b y^a)/(x - y)."""
    out = {(b, a): ONE}
    one_t = 1 - T_
    for (u, v), c in _divdiff(a, b):
        k = (u + 1, v)
        w = out.get(k, ZERO) + one_t * c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return tuple(out.items())


@lru_cache(maxsize=None)
def table_Tinv(a, b):
    """T^{-1} = (T + t - 1)/t."""
    out = dict(table_T(a, b))
    k = (a, b)
    w = out.get(k, ZERO) + (T_ - 1)
    if w:
        out[k] = w
    else:
        out.pop(k, None)
    tinv = ONE / T_
    return tuple((e, c * tinv) for e, c in out.items() if c)


TABLES = {"pi": table_pi, "pihat": table_pihat, "T": table_T, "Tinv": table_Tinv}


def apply_pair_op(terms, i, table):
    """Apply a two-variable operator on positions (i, i+1) (0-based) of the
    exponent tuples in ``terms``."""
    out = {}
    for e, c in terms.items():
        a, b = e[i], e[i + 1]
        for (u, v), k in table(a, b):
            ne = e[:i] + (u, v) + e[i + 2:]
            w = out.get(ne, ZERO) + c * k
            if w:
                out[ne] = w
            else:
                out.pop(ne, None)
    return out


def divided_difference(kind, i, f):
    """Apply pi_i, pihat_i, T_i or T_i^{-1} (1-based i) to a LaurentPoly."""
    if kind not in TABLES:
        raise ValueError(f"unknown operator kind {kind!r}")
    if not 1 <= i < f.N:
        raise IndexError(f"operator index {i} out of range for N={f.N}")
    return LaurentPoly._raw(f.N, apply_pair_op(f.terms, i - 1, TABLES[kind]))


def swap(f, i):
    """s_i f."""
    out = {}
    for e, c in f.terms.items():
        ne = list(e)
        ne[i - 1], ne[i] = ne[i], ne[i - 1]
        out[tuple(ne)] = c
    return LaurentPoly._raw(f.N, out)


# ---------------------------------------------------------------------------
# compositions and the monomial order


def sort_desc(alpha):
    return tuple(sorted(alpha, reverse=True))


def inversions(alpha):
    """Length of the shortest w with w(alpha_+) = alpha."""
    n = len(alpha)
    return sum(1 for i in range(n) for j in range(i + 1, n) if alpha[i] < alpha[j])


def shortest_perm(alpha):
    """One-line notation of the shortest w with alpha = w(alpha_+): the entry
    alpha_+[k] is moved to position w[k]."""
    order = sorted(range(len(alpha)), key=lambda i: (-alpha[i], i))
    return tuple(order)


def bruhat_le(u, v):
    """Tableau criterion for Bruhat order on permutations in one-line form."""
    n = len(u)
    for k in range(1, n):
        a = sorted(u[:k])
        b = sorted(v[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def dominance_le(a, b):
    s1 = s2 = 0
    for x, y in zip(a, b):
        s1 += x
        s2 += y
        if s1 > s2:
            return False
    return True


def monomial_order_less(alpha, beta):
    """Strict order used for triangularity of characters, atoms and
    nonsymmetric Macdonald polynomials.  Within a single orbit, the longer
    permutation is larger, so the antidominant arrangement is on top."""
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != len(beta) or sum(alpha) != sum(beta):
        raise ValueError("monomial order compares compositions of equal size")
    if alpha == beta:
        return False
    ap, bp = sort_desc(alpha), sort_desc(beta)
    if ap != bp:
        return dominance_le(ap, bp)
    u, v = shortest_perm(alpha), shortest_perm(beta)
    return bruhat_le(u, v)


def order_key(alpha):
    """A total order extending :func:`monomial_order_less`."""
    return (sort_desc(alpha), inversions(alpha), tuple(alpha))


# ---------------------------------------------------------------------------
# Demazure characters and atoms


@lru_cache(maxsize=None)
def _key_terms(kind, alpha):
    for i in range(len(alpha) - 1):
        if alpha[i] < alpha[i + 1]:
            beta = alpha[:i] + (alpha[i + 1], alpha[i]) + alpha[i + 2:]
            table = table_pi if kind == "char" else table_pihat
            return apply_pair_op(_key_terms(kind, beta), i, table)
    return {alpha: ONE}


def key_polynomial(kind, alpha):
    """Demazure character (``kind='char'``) or atom (``kind='atom'``)."""
    if kind not in ("char", "atom"):
        raise ValueError(f"unknown key kind {kind!r}")
    alpha = tuple(alpha)
    return LaurentPoly._raw(len(alpha), dict(_key_terms(kind, alpha)))


def key_expand(kind, f, guard=None):
    """Expand f in Demazure characters or atoms; returns {alpha: coeff}."""
    if kind not in ("char", "atom"):
        raise ValueError(f"unknown key kind {kind!r}")
    rem = dict(f.terms)
    out = {}
    if guard is None:
        guard = 10 * (len(rem) + 1) ** 2 + 1000
    steps = 0
    while rem:
        steps += 1
        if steps > guard:
            raise RuntimeError("key expansion did not terminate; monomial order is inconsistent")
        alpha = max(rem, key=order_key)
        c = rem[alpha]
        out[alpha] = out.get(alpha, ZERO) + c
        for e, k in _key_terms(kind, alpha).items():
            v = rem.get(e, ZERO) - c * k
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
        if alpha in rem:
            raise RuntimeError("key polynomial leading term mismatch")
    return {a: c for a, c in out.items() if c}


def key_reconstruct(kind, expansion, N):
    out = {}
    for alpha, c in expansion.items():
        for e, k in _key_terms(kind, tuple(alpha)).items():
            out[e] = out.get(e, ZERO) + c * k
    return LaurentPoly._raw(N, {e: c for e, c in out.items() if c})


def pol_truncate(f, r=None):
    """Keep the Demazure characters indexed by nonnegative compositions."""
    exp = key_expand("char", f)
    keep = {a: c for a, c in exp.items() if min(a, default=0) >= 0}
    return key_reconstruct("char", keep, f.N)


def longest_word(a, N):
    """A reduced word (1-based simple reflections) for the longest element of
    the symmetric group on positions a..N."""
    word = []
    for top in range(a, N):
        word.extend(range(top, a - 1, -1))
    return word


def weyl_symmetrize(f, a=1, N=None):
    """pi_{w_0} on the variables x_a..x_N."""
    if N is None:
        N = f.N
    if not 1 <= a <= N <= f.N:
        raise ValueError("bad symmetrization range")
    terms = f.terms
    for i in reversed(longest_word(a, N)):
        terms = apply_pair_op(terms, i - 1, table_pi)
    return LaurentPoly._raw(f.N, terms)


def twist(kind, f, r=None):
    """Phi: x_1..x_N -> x_2, .., x_N, q x_1.  gammaN: the same cycle on the
    first r+1 variables only."""
    N = f.N
    if kind == "Phi":
        k = N
    elif kind == "gammaN":
        if r is None or r + 1 > N:
            raise ValueError("gammaN needs r with r + 1 <= N")
        k = r + 1
    else:
        raise ValueError(f"unknown twist {kind!r}")
    out = {}
    for e, c in f.terms.items():
        ne = (e[k - 1],) + e[: k - 1] + e[k:]
        # x_k -> q x_1 contributes q^{e_k}
        out[ne] = c * Q_ ** e[k - 1] if e[k - 1] else c
    return LaurentPoly._raw(N, out)
