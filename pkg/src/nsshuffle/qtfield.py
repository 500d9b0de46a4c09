"""Exact arithmetic in the rational function field Q(q, t).

Elements are stored as reduced fractions of integer polynomials.  A polynomial
is a dict mapping exponent pairs ``(i, j)`` (the monomial ``q**i * t**j``) to
nonzero Python ints.  Numerators may carry negative exponents; denominators
never carry a monomial factor, so Laurent monomials live entirely upstairs.

The gcd used for reduction is a heuristic evaluation gcd with a primitive
remainder sequence as fallback, so no external algebra system is needed.
"""

from __future__ import annotations

import ast
import math
from functools import reduce as _fold

# ---------------------------------------------------------------------------
# sparse polynomial helpers (dict form)


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def p_sub(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def p_neg(a):
    return {k: -c for k, c in a.items()}


def p_scale(a, c):
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def p_mul(a, b):
    if len(a) == 1:
        ((i0, j0), c0), = a.items()
        return {(i + i0, j + j0): c * c0 for (i, j), c in b.items()}
    if len(b) == 1:
        ((i0, j0), c0), = b.items()
        return {(i + i0, j + j0): c * c0 for (i, j), c in a.items()}
    out = {}
    get = out.get
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def p_shift(a, di, dj):
    if not di and not dj:
        return a
    return {(i + di, j + dj): c for (i, j), c in a.items()}


def p_minexp(a):
    return min(i for i, _ in a), min(j for _, j in a)


def p_content(a):
    return _fold(math.gcd, a.values(), 0)


def p_lead(a):
    """Lex-leading exponent (q-degree first)."""
    return max(a)


def p_is_one(a):
    return len(a) == 1 and a.get((0, 0)) == 1


def p_divexact(a, b):
    """Return a/b if b divides a exactly in Z[q^±, t^±] with matching support,
    else None.  Both are treated as polynomials in lex order."""
    if not a:
        return {}
    if len(b) == 1:
        ((i0, j0), c0), = b.items()
        out = {}
        for (i, j), c in a.items():
            qq, rr = divmod(c, c0)
            if rr:
                return None
            out[(i - i0, j - j0)] = qq
        return out
    lb = max(b)
    cb = b[lb]
    # bounds: the quotient's support must lie in a box, used to bail out early
    ai = [k[0] for k in a]
    aj = [k[1] for k in a]
    bi = [k[0] for k in b]
    bj = [k[1] for k in b]
    qimin, qimax = min(ai) - min(bi), max(ai) - max(bi)
    qjmin, qjmax = min(aj) - min(bj), max(aj) - max(bj)
    if qimin > qimax or qjmin > qjmax:
        return None
    rem = dict(a)
    quo = {}
    brest = [(k, c) for k, c in b.items() if k != lb]
    while rem:
        la = max(rem)
        ca = rem[la]
        qi, qj = la[0] - lb[0], la[1] - lb[1]
        if qi < qimin or qj < qjmin or qj > qjmax:
            return None
        qc, rr = divmod(ca, cb)
        if rr:
            return None
        quo[(qi, qj)] = qc
        del rem[la]
        for (i, j), c in brest:
            k = (i + qi, j + qj)
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return quo


# ---------------------------------------------------------------------------
# dense helpers for gcd: univariate = list of ints (little endian);
# bivariate = list (over q-degree) of univariate lists in t.


def _u_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _u_eval(f, x):
    v = 0
    for c in reversed(f):
        v = v * x + c
    return v


def _u_content(f):
    return _fold(math.gcd, f, 0)


def _u_prim(f):
    c = _u_content(f)
    if c == 0:
        return f
    if f[-1] < 0:
        c = -c
    return [x // c for x in f]


def _u_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _u_divexact(f, g):
    """Exact division in Z[x]; None if it fails."""
    f = list(f)
    if not g:
        return None
    n, m = len(f) - 1, len(g) - 1
    if n < m:
        return [] if not _u_trim(f) else None
    lc = g[-1]
    q = [0] * (n - m + 1)
    for k in range(n - m, -1, -1):
        c, rr = divmod(f[k + m], lc)
        if rr:
            return None
        q[k] = c
        if c:
            for j in range(m + 1):
                f[k + j] -= c * g[j]
    if any(f[:m]):
        return None
    return q


def _u_prem(f, g):
    f = list(f)
    n, m = len(f) - 1, len(g) - 1
    lc = g[-1]
    while len(f) - 1 >= m and f:
        d = len(f) - 1 - m
        c = f[-1]
        f = [x * lc for x in f]
        for j in range(m + 1):
            f[d + j] -= c * g[j]
        _u_trim(f)
    return f


def _u_gcd_prs(f, g):
    cf, cg = _u_content(f), _u_content(g)
    c = math.gcd(cf, cg)
    f, g = _u_prim(f), _u_prim(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _u_prem(f, g)
        f, g = g, (_u_prim(r) if r else [])
    f = _u_prim(f)
    return [c * x for x in f]


def _interp(h, xi):
    """Symmetric xi-adic digits of the integer h."""
    out = []
    half = xi // 2
    while h:
        d = h % xi
        if d > half:
            d -= xi
        out.append(d)
        h = (h - d) // xi
    return out


def _u_norm(f):
    return max(abs(c) for c in f)


def u_gcd(f, g):
    f = _u_trim(list(f))
    g = _u_trim(list(g))
    if not f:
        return _u_prim(g) if g else []
    if not g:
        return _u_prim(f)
    if len(f) == 1 or len(g) == 1:
        return [math.gcd(_u_content(f), _u_content(g))]
    cf, cg = _u_content(f), _u_content(g)
    c = math.gcd(cf, cg)
    f = [x // cf for x in f]
    g = [x // cg for x in g]
    xi = max(2 * min(_u_norm(f), _u_norm(g)) + 29, 2)
    for _ in range(6):
        h = math.gcd(_u_eval(f, xi), _u_eval(g, xi))
        H = _u_prim(_interp(h, xi))
        if H and _u_divexact(f, H) is not None and _u_divexact(g, H) is not None:
            return [c * x for x in H]
        xi = xi * 73794 // 27011
    return _u_gcd_prs([x * cf for x in f], [x * cg for x in g])


def _to_dense(a):
    """dict with nonnegative exponents -> bivariate dense list."""
    n = max(i for i, _ in a) + 1
    out = [[] for _ in range(n)]
    for (i, j), c in a.items():
        row = out[i]
        if len(row) <= j:
            row.extend([0] * (j + 1 - len(row)))
        row[j] = c
    return out


def _from_dense(D):
    out = {}
    for i, row in enumerate(D):
        for j, c in enumerate(row):
            if c:
                out[(i, j)] = c
    return out


def _b_norm(D):
    return max((abs(c) for row in D for c in row), default=0)


def _b_eval_inner(D, xi):
    return _u_trim([_u_eval(row, xi) for row in D])


def _b_content(D):
    """gcd over Z[t] of the coefficients in q."""
    rows = [r for r in D if _u_trim(list(r))]
    return _fold(u_gcd, rows[1:], _u_prim(list(rows[0]))) if rows else []


def _b_prem(F, G):
    F = [list(r) for r in F]
    m = len(G) - 1
    lc = G[-1]
    while F and len(F) - 1 >= m:
        d = len(F) - 1 - m
        c = F[-1]
        F = [_u_mul(r, lc) for r in F]
        for j in range(m + 1):
            prod = _u_mul(c, G[j])
            row = F[d + j]
            if len(row) < len(prod):
                row.extend([0] * (len(prod) - len(row)))
            for k, v in enumerate(prod):
                row[k] -= v
            _u_trim(row)
        while F and not F[-1]:
            F.pop()
    return F


def _b_prim(F):
    c = _b_content(F)
    out = []
    for r in F:
        if not r:
            out.append([])
        else:
            qq = _u_divexact(r, c)
            out.append(_u_trim(qq))
    return out, c


def _b_gcd_prs(F, G):
    F, cf = _b_prim(F)
    G, cg = _b_prim(G)
    c = u_gcd(cf, cg)
    if len(F) < len(G):
        F, G = G, F
    while G:
        R = _b_prem(F, G)
        F, G = G, (_b_prim(R)[0] if R else [])
    F, _ = _b_prim(F)
    return [_u_mul(c, r) for r in F]


def p_gcd(a, b):
    """gcd of two integer polynomials with nonnegative exponents (dict form).
    The result has positive lex-leading coefficient."""
    if not a:
        return _normsign(b)
    if not b:
        return _normsign(a)
    ma, mb = p_minexp(a), p_minexp(b)
    mono = (min(ma[0], mb[0]), min(ma[1], mb[1]))
    a = p_shift(a, -ma[0], -ma[1])
    b = p_shift(b, -mb[0], -mb[1])
    ca, cb = p_content(a), p_content(b)
    c = math.gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return {mono: c}
    a = {k: v // ca for k, v in a.items()}
    b = {k: v // cb for k, v in b.items()}
    g = _gcd_prim(a, b)
    return _normsign(p_shift(p_scale(g, c), *mono))


def _normsign(a):
    if a and a[max(a)] < 0:
        return p_neg(a)
    return a


def _gcd_prim(a, b):
    # one-variable shortcuts
    if all(i == 0 for i, _ in a) and all(i == 0 for i, _ in b):
        fa = _to_dense_t(a)
        fb = _to_dense_t(b)
        return {(0, j): c for j, c in enumerate(u_gcd(fa, fb)) if c}
    if all(j == 0 for _, j in a) and all(j == 0 for _, j in b):
        fa = _to_dense_q(a)
        fb = _to_dense_q(b)
        return {(i, 0): c for i, c in enumerate(u_gcd(fa, fb)) if c}
    A = _to_dense(a)
    B = _to_dense(b)
    xi = max(2 * min(_b_norm(A), _b_norm(B)) + 29, 2)
    for _ in range(6):
        fa = _b_eval_inner(A, xi)
        fb = _b_eval_inner(B, xi)
        if len(fa) == len(A) and len(fb) == len(B):
            h = u_gcd(fa, fb)
            H = [_interp(c, xi) if c else [] for c in h]
            H = _from_dense(H)
            if H:
                cont = p_content(H)
                H = {k: v // cont for k, v in H.items()}
                if p_divexact(a, H) is not None and p_divexact(b, H) is not None:
                    return H
        xi = xi * 73794 // 27011
    return _from_dense(_b_gcd_prs(A, B))


def _to_dense_t(a):
    n = max(j for _, j in a) + 1
    out = [0] * n
    for (_, j), c in a.items():
        out[j] = c
    return out


def _to_dense_q(a):
    n = max(i for i, _ in a) + 1
    out = [0] * n
    for (i, _), c in a.items():
        out[i] = c
    return out


# ---------------------------------------------------------------------------
# the field element

_ONE = {(0, 0): 1}


class QT:
    """An element of Q(q, t) as a canonical reduced fraction ``num/den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _canon=False):
        if isinstance(num, QT):
            self.num, self.den, self._hash = num.num, num.den, None
            return
        if isinstance(num, int):
            num = {(0, 0): num} if num else {}
        if den is None:
            den = _ONE
        elif isinstance(den, int):
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            den = {(0, 0): den}
        if _canon:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonical(dict(num), dict(den))
        self._hash = None

    # -- constructors
    @classmethod
    def mono(cls, i=0, j=0, c=1):
        """The monomial ``c * q**i * t**j``."""
        return cls({(i, j): c} if c else {}, _ONE, _canon=True)

    @classmethod
    def frac(cls, a, b):
        """Rational number a/b."""
        g = math.gcd(a, b)
        a, b = a // g, b // g
        if b < 0:
            a, b = -a, -b
        return cls({(0, 0): a} if a else {}, {(0, 0): b}, _canon=True)

    # -- predicates
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return p_is_one(self.num) and p_is_one(self.den)

    def is_poly(self):
        return p_is_one(self.den)

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, int):
                other = QT(other)
            else:
                return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            n = p_add(a, c)
            if p_is_one(b):
                return QT(n, _ONE, _canon=True)
            return QT(*_canonical(n, b), _canon=True)
        if p_is_one(b):
            return QT(p_add(p_mul(a, d), c), d, _canon=True)._fix_content()
        if p_is_one(d):
            return QT(p_add(a, p_mul(c, b)), b, _canon=True)._fix_content()
        g = p_gcd(b, d)
        if p_is_one(g):
            n = p_add(p_mul(a, d), p_mul(c, b))
            return QT(*_canonical(n, p_mul(b, d), coprime_hint=True), _canon=True)
        b1 = p_divexact(b, g)
        d1 = p_divexact(d, g)
        n = p_add(p_mul(a, d1), p_mul(c, b1))
        return QT(*_canonical(n, p_mul(p_mul(b1, d1), g)), _canon=True)

    __radd__ = __add__

    def _fix_content(self):
        # used when only integer content / sign may be off and num, den coprime
        if not self.num:
            return QT(0)
        self.num, self.den = _canonical(self.num, self.den, coprime_hint=True)
        return self

    def __neg__(self):
        return QT(p_neg(self.num), self.den, _canon=True)

    def __sub__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, int):
                other = QT(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QT):
            if isinstance(other, int):
                if other == 0:
                    return QT(0)
                if other == 1:
                    return self
                return QT(*_canonical(p_scale(self.num, other), self.den), _canon=True)
            return NotImplemented
        if not self.num or not other.num:
            return QT(0)
        a, b, c, d = self.num, self.den, other.num, other.den
        if p_is_one(b) and p_is_one(d):
            return QT(p_mul(a, c), _ONE, _canon=True)
        # cross cancel
        if not p_is_one(d):
            g1 = _gcd_with_den(a, d)
            if not p_is_one(g1):
                a = p_divexact(a, g1)
                d = p_divexact(d, g1)
        if not p_is_one(b):
            g2 = _gcd_with_den(c, b)
            if not p_is_one(g2):
                c = p_divexact(c, g2)
                b = p_divexact(b, g2)
        return QT(*_canonical(p_mul(a, c), p_mul(b, d), coprime_hint=True), _canon=True)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        # move the monomial factor of num to the new numerator
        mi, mj = p_minexp(self.num)
        newden = p_shift(self.num, -mi, -mj)
        newnum = p_shift(self.den, -mi, -mj)
        return QT(*_canonical(newnum, newden, coprime_hint=True), _canon=True)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * QT.frac(1, other)
        if not isinstance(other, QT):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return QT(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = QT(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing
    def __eq__(self, other):
        if isinstance(other, int):
            other = QT(other)
        if not isinstance(other, QT):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    # -- field-specific operations
    def flip(self):
        """Substitute q -> 1/q and t -> 1/t."""
        return self.subs_mono(-1, -1)

    def subs_mono(self, a, b):
        """Substitute q -> q**a, t -> t**b for integers a, b (nonzero)."""
        n = {(i * a, j * b): c for (i, j), c in self.num.items()}
        d = {(i * a, j * b): c for (i, j), c in self.den.items()}
        mi, mj = p_minexp(d)
        return QT(*_canonical(n, p_shift(d, -mi, -mj), coprime_hint=True, shift=(-mi, -mj)), _canon=True)

    def subs_power(self, k):
        """Substitute q -> q**k, t -> t**k (used by plethysm)."""
        if k == 1:
            return self
        n = {(i * k, j * k): c for (i, j), c in self.num.items()}
        d = {(i * k, j * k): c for (i, j), c in self.den.items()}
        return QT(n, d, _canon=True)  # still coprime, sign and content preserved

    def ord_t(self):
        """Order of vanishing at t = 0 (``math.inf`` for zero)."""
        if not self.num:
            return math.inf
        return min(j for _, j in self.num) - min(j for _, j in self.den)

    # -- i/o
    def to_json(self):
        return {
            "num": sorted([i, j, c] for (i, j), c in self.num.items()),
            "den": sorted([i, j, c] for (i, j), c in self.den.items()),
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, (int, str)):
            return parse_qt(str(obj))
        num = {(i, j): c for i, j, c in obj["num"]}
        den = {(i, j): c for i, j, c in obj.get("den", [[0, 0, 1]])}
        return cls(num, den)

    def __str__(self):
        n = _poly_str(self.num)
        if p_is_one(self.den):
            return n
        if len(self.num) > 1:
            n = "(" + n + ")"
        d = _poly_str(self.den)
        if len(self.den) > 1:
            d = "(" + d + ")"
        return f"{n}/{d}"

    def __repr__(self):
        return f"QT({self})"


def _gcd_with_den(n, d):
    mi, mj = p_minexp(n)
    return p_gcd(p_shift(n, -mi, -mj), d)


def _canonical(num, den, coprime_hint=False, shift=(0, 0)):
    """Bring num/den to canonical form.  ``shift`` is applied to num (used when
    a monomial was removed from den)."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, _ONE
    if shift != (0, 0):
        num = p_shift(num, *shift)
    # monomial factor of den goes upstairs
    mi, mj = p_minexp(den)
    if mi or mj:
        den = p_shift(den, -mi, -mj)
        num = p_shift(num, -mi, -mj)
    if len(den) == 1:
        c = den[(0, 0)]
        g = p_content(num)
        g = math.gcd(g, c)
        if c < 0:
            g = -g
        if g != 1:
            num = {k: v // g for k, v in num.items()}
            c //= g
        return num, ({(0, 0): c} if c != 1 else _ONE)
    if not coprime_hint:
        q = p_divexact(num, den)
        if q is not None:
            return q, _ONE
        g = _gcd_with_den(num, den)
        if not (len(g) == 1 and (0, 0) in g):
            num = p_divexact(num, g)
            den = p_divexact(den, g)
            if len(den) == 1:
                return _canonical(num, den)
    # integer content and sign
    g = math.gcd(p_content(num), p_content(den))
    if den[max(den)] < 0:
        g = -g
    if g != 1:
        num = {k: v // g for k, v in num.items()}
        den = {k: v // g for k, v in den.items()}
    if p_is_one(den):
        den = _ONE
    return num, den


def _poly_str(a):
    if not a:
        return "0"
    parts = []
    for (i, j) in sorted(a, reverse=True):
        c = a[(i, j)]
        mono = []
        if i:
            mono.append("q" if i == 1 else f"q^{i}")
        if j:
            mono.append("t" if j == 1 else f"t^{j}")
        m = "*".join(mono)
        if not m:
            s = str(abs(c))
        elif abs(c) == 1:
            s = m
        else:
            s = f"{abs(c)}*{m}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, s))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, s in parts[1:]:
        out += f" {sign} {s}"
    return out


# ---------------------------------------------------------------------------
# parsing

q = QT.mono(1, 0)
t = QT.mono(0, 1)
ZERO = QT(0)
ONE = QT(1)


def parse_qt(text):
    """Parse an expression such as ``"(1-q*t)/(1+t)"`` or ``"q^-1*t^2"``."""
    src = text.replace("^", "**").strip()
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    return _ev(tree.body, text)


def _ev(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return QT(node.value)
    if isinstance(node, ast.Name):
        if node.id == "q":
            return q
        if node.id == "t":
            return t
        raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
    if isinstance(node, ast.UnaryOp):
        v = _ev(node.operand, text)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        a = _ev(node.left, text)
        if isinstance(node.op, ast.Pow):
            e = _ev(node.right, text)
            if not (e.is_poly() and set(e.num) <= {(0, 0)}):
                raise ValueError(f"non-integer exponent in {text!r}")
            return a ** e.num.get((0, 0), 0)
        b = _ev(node.right, text)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
    raise ValueError(f"unsupported expression {text!r}")


def qt(x):
    """Coerce ints, strings and QT values to QT."""
    if isinstance(x, QT):
        return x
    if isinstance(x, int):
        return QT(x)
    if isinstance(x, str):
        return parse_qt(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QT")


def qt_reduce(num, den):
    """Canonical fraction from two dict polynomials (or QT values)."""
    return qt(QT(num) if isinstance(num, dict) else num) / qt(QT(den) if isinstance(den, dict) else den)


def qt_ord(a):
    return qt(a).ord_t()


def qt_flip(a):
    return qt(a).flip()
