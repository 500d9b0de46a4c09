"""The double Dyck path algebra acting on almost-symmetric polynomials.

Operators act on :class:`AsymFn` values of a fixed rank ``r`` (the quiver
vertex).  Words are linear combinations of letter tuples written left to right
and applied right to left, like products of operators.

Letters:

``("T", i)``, ``("Ti", i)``   Demazure-Lusztig operator and its inverse
``("d-",)``                   lowers the rank by one (Jing operator on the tail)
``("d+",)``, ``("d+*",)``     raise the rank by one
``("y", i)``                  the loop y_i; acts as multiplication by x_i
``("z", i)``                  the loop z_i; acts as the Cherednik operator Y_i
"""

from __future__ import annotations

from math import gcd

from .asympoly import AsymFn, iota
from .keypoly import table_T, table_Tinv
from .qtfield import ONE, ZERO, QT, qt, q as Q_, t as T_
from .symfunc import _jing_on_schur


def _acc(out, key, v):
    w = out.get(key, ZERO) + v
    if w:
        out[key] = w
    else:
        out.pop(key, None)


def _pair_op(f, i, table):
    """Apply a two-variable table on x_i, x_{i+1} (1-based) of an AsymFn."""
    out = {}
    k = i - 1
    for (e, la), c in f.terms.items():
        for (u, v), w in table(e[k], e[k + 1]):
            ne = e[:k] + (u, v) + e[k + 2:]
            _acc(out, (ne, la), c * w)
    return AsymFn._raw(f.r, out)


class Action:
    """The transported action of the generators on almost-symmetric
    polynomials.  Subclass and override a method to build a mutant."""

    def T(self, i, f):
        if not 1 <= i < f.r:
            raise IndexError(f"T_{i} is not defined at vertex {f.r}")
        return _pair_op(f, i, table_T)

    def Tinv(self, i, f):
        if not 1 <= i < f.r:
            raise IndexError(f"T_{i}^-1 is not defined at vertex {f.r}")
        return _pair_op(f, i, table_Tinv)

    def dminus(self, f):
        if f.r == 0:
            raise ValueError("d- is not defined at vertex 0")
        out = {}
        for (e, la), c in f.terms.items():
            for nu, k in _jing_on_schur(e[-1], la).items():
                _acc(out, (e[:-1], nu), c * k)
        return AsymFn._raw(f.r - 1, out)

    def dplus(self, f):
        g = iota(f).mul_x(f.r + 1)
        for i in range(f.r, 0, -1):
            g = self.T(i, g)
        return -g

    def dplus_star(self, f):
        g = iota(f)
        r1 = g.r
        out = {}
        for (e, la), c in g.terms.items():
            a = e[r1 - 1]
            ne = (a,) + e[: r1 - 1]
            out[(ne, la)] = c * Q_ ** a if a else c
        return AsymFn._raw(r1, out)

    def mul_x(self, i, f):
        return f.mul_x(i)

    def Y(self, i, f):
        """Cherednik operator z_i at vertex f.r."""
        r = f.r
        if not 1 <= i <= r:
            raise IndexError(f"Y_{i} is not defined at vertex {r}")
        if i > 1:
            g = self.T(i - 1, f)
            g = self.Y(i - 1, g)
            return self.T(i - 1, g) * (ONE / T_)
        g = f
        for j in range(1, r):
            g = self.Tinv(j, g)
        a = self.dplus_star(self.dminus(g))
        b = self.dminus(self.dplus_star(g))
        return (a - b) * (T_ ** r / (1 - T_))

    def apply(self, letter, f):
        name = letter[0]
        if name == "T":
            return self.T(letter[1], f)
        if name == "Ti":
            return self.Tinv(letter[1], f)
        if name == "d-":
            return self.dminus(f)
        if name == "d+":
            return self.dplus(f)
        if name == "d+*":
            return self.dplus_star(f)
        if name == "y":
            return self.mul_x(letter[1], f)
        if name == "z":
            return self.Y(letter[1], f)
        raise ValueError(f"unknown letter {letter!r}")


DEFAULT = Action()


def act_generator(letter, f, action=DEFAULT):
    if isinstance(letter, str):
        letter = parse_letter(letter)
    return action.apply(letter, f)


def act_cherednik(i, f, action=DEFAULT):
    return action.Y(i, f)


# ---------------------------------------------------------------------------
# words


def letter_shift(letter):
    return {"d-": -1, "d+": 1, "d+*": 1}.get(letter[0], 0)


def _check_letter(letter, r):
    name = letter[0]
    if name in ("T", "Ti"):
        if not 1 <= letter[1] < r:
            raise ValueError(f"{name}_{letter[1]} is not a loop at vertex {r}")
    elif name in ("y", "z"):
        if not 1 <= letter[1] <= r:
            raise ValueError(f"{name}_{letter[1]} is not a loop at vertex {r}")
    elif name == "d-":
        if r == 0:
            raise ValueError("d- leaves vertex 0")
    elif name not in ("d+", "d+*"):
        raise ValueError(f"unknown letter {letter!r}")


def word_target(letters, source):
    r = source
    for letter in reversed(letters):
        _check_letter(letter, r)
        r += letter_shift(letter)
    return r


class OpWord:
    """A QT-linear combination of words sharing a source and target vertex.

    ``antilinear`` marks words obtained from an antilinear map: when it is
    set, the word acts on ``f`` through the coefficients of ``f`` flipped
    (q, t -> 1/q, 1/t) only if requested by the caller; the coefficients
    stored here are already final.
    """

    __slots__ = ("terms", "source", "target", "antilinear")

    def __init__(self, terms, source, antilinear=False):
        out = {}
        for c, letters in terms:
            letters = tuple(tuple(x) for x in letters)
            _acc(out, letters, qt(c))
        self.terms = out
        self.source = source
        self.antilinear = antilinear
        targets = {word_target(w, source) for w in out}
        if len(targets) > 1:
            raise ValueError(f"words end at different vertices {targets}")
        self.target = targets.pop() if targets else source

    @classmethod
    def letter(cls, letter, source):
        return cls([(ONE, (letter,))], source)

    @classmethod
    def identity(cls, source):
        return cls([(ONE, ())], source)

    def __add__(self, other):
        if other.source != self.source:
            raise ValueError("source vertex mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return OpWord([(c, w) for w, c in out.items()], self.source, self.antilinear or other.antilinear)

    def __neg__(self):
        return self * (-ONE)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QT)):
            other = qt(other)
            return OpWord([(c * other, w) for w, c in self.terms.items()], self.source, self.antilinear)
        if isinstance(other, OpWord):
            # composition: self after other
            if other.target != self.source:
                raise ValueError(f"cannot compose: {other.target} -> {self.source}")
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    _acc(out, w1 + w2, c1 * c2)
            return OpWord([(c, w) for w, c in out.items()], other.source, self.antilinear or other.antilinear)
        return NotImplemented

    __rmul__ = __mul__

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            body = " ".join(format_letter(x) for x in w) or "1"
            parts.append(f"({c}) {body}")
        return " + ".join(parts) + f"  @{self.source}"

    __repr__ = __str__


def compose(*words):
    out = words[-1]
    for w in reversed(words[:-1]):
        out = w * out
    return out


def format_letter(letter):
    name = letter[0]
    if name in ("T", "y", "z"):
        return f"{name}{letter[1]}"
    if name == "Ti":
        return f"T{letter[1]}^-1"
    return name


def parse_letter(text):
    text = text.strip()
    if text in ("d-", "d+", "d+*"):
        return (text,)
    if text.startswith("T") and text.endswith("^-1"):
        return ("Ti", int(text[1:-3]))
    for name in ("T", "y", "z"):
        if text.startswith(name) and text[1:].isdigit():
            return (name, int(text[1:]))
    if text.startswith("Y") and text[1:].isdigit():
        return ("z", int(text[1:]))
    if text.startswith("X") and text[1:].isdigit():
        return ("y", int(text[1:]))
    raise ValueError(f"unknown letter {text!r}")


def parse_word(text, source):
    """Parse e.g. ``"d- [d-,d+]/(t-1) d+ d+"``: whitespace separated letters;
    a bracket ``[A,B]`` is a commutator of single letters and may carry a
    ``/expr`` or ``*expr`` scalar."""
    from .qtfield import parse_qt

    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "[":
            j = text.index("]", i)
            inner = text[i + 1: j]
            a, b = (parse_letter(x) for x in inner.split(","))
            k = j + 1
            scale = ONE
            if k < len(text) and text[k] in "/*":
                op = text[k]
                k += 1
                if text[k] == "(":
                    depth = 0
                    m = k
                    while True:
                        if text[m] == "(":
                            depth += 1
                        elif text[m] == ")":
                            depth -= 1
                            if depth == 0:
                                break
                        m += 1
                    expr = text[k: m + 1]
                    k = m + 1
                else:
                    m = k
                    while m < len(text) and not text[m].isspace():
                        m += 1
                    expr = text[k:m]
                    k = m
                v = parse_qt(expr)
                scale = ONE / v if op == "/" else v
            tokens.append(("comm", a, b, scale))
            i = k
        else:
            j = i
            while j < len(text) and not text[j].isspace():
                j += 1
            tokens.append(("letter", parse_letter(text[i:j])))
            i = j
    word = None
    r = source
    for tok in reversed(tokens):
        if tok[0] == "letter":
            piece = OpWord.letter(tok[1], r)
        else:
            _, a, b, scale = tok
            piece = (OpWord([(ONE, (a, b))], r) - OpWord([(ONE, (b, a))], r)) * scale
        word = piece if word is None else piece * word
        r = word.target
    return word if word is not None else OpWord.identity(source)


def eval_word(w, f, action=DEFAULT):
    """Apply a word (right to left) to f; shared suffixes are evaluated once."""
    if f.r != w.source:
        raise ValueError(f"word starts at vertex {w.source}, input has rank {f.r}")
    items = [(letters, c) for letters, c in w.terms.items()]
    return _eval_trie(items, f, action, w.target)


def _eval_trie(items, f, action, target):
    out = AsymFn.zero(target)
    groups = {}
    for letters, c in items:
        if not letters:
            out = out + f * c
        else:
            groups.setdefault(letters[-1], []).append((letters[:-1], c))
    for letter, rest in groups.items():
        g = action.apply(letter, f)
        if g:
            out = out + _eval_trie(rest, g, action, target)
    return out


# ---------------------------------------------------------------------------
# macro words for y_i and z_i


def y_word(i, r):
    """y_i at vertex r as a word in d+, d-, T."""
    if not 1 <= i <= r:
        raise ValueError("y_i needs 1 <= i <= r")
    if i == 1:
        comm = OpWord([(ONE, (("d+",), ("d-",))), (-ONE, (("d-",), ("d+",)))], r)
        tail = OpWord.identity(r)
        for j in range(1, r):
            tail = OpWord.letter(("T", j), r) * tail
        return comm * tail * (ONE / (T_ ** (r - 1) * (T_ - 1)))
    prev = y_word(i - 1, r)
    Ti = OpWord.letter(("Ti", i - 1), r)
    return Ti * prev * Ti * T_


def z_word(i, r):
    """z_i at vertex r as a word in d+*, d-, T."""
    if not 1 <= i <= r:
        raise ValueError("z_i needs 1 <= i <= r")
    if i == 1:
        comm = OpWord([(ONE, (("d+*",), ("d-",))), (-ONE, (("d-",), ("d+*",)))], r)
        tail = OpWord.identity(r)
        for j in range(1, r):
            tail = OpWord.letter(("Ti", j), r) * tail
        return comm * tail * (T_ ** r / (1 - T_))
    prev = z_word(i - 1, r)
    Tm = OpWord.letter(("T", i - 1), r)
    return Tm * prev * Tm * (ONE / T_)


def expand_macros(w, which=("y", "z")):
    """Replace y/z letters by their generator words."""
    out = None
    for letters, c in w.terms.items():
        piece = OpWord.identity(w.source) * c
        r = w.source
        for letter in reversed(letters):
            if letter[0] in which:
                sub = (y_word if letter[0] == "y" else z_word)(letter[1], r)
            else:
                sub = OpWord.letter(letter, r)
            piece = sub * piece
            r = piece.target
        out = piece if out is None else out + piece
    if out is None:
        return OpWord([], w.source, w.antilinear)
    out.antilinear = w.antilinear
    return out


# ---------------------------------------------------------------------------
# endomorphisms and the maps rho, rho*, wbar

_DOMAIN_T = {"T", "Ti", "d-", "d+", "y"}


def _image(endo, letter, r):
    """Image of a single generator letter starting at vertex r, or None if the
    letter must be macro-expanded first."""
    name = letter[0]
    if endo == "rho":
        return OpWord.letter(letter, r)
    if endo == "rhostar":
        if name == "T":
            return OpWord.letter(("Ti", letter[1]), r)
        if name == "Ti":
            return OpWord.letter(("T", letter[1]), r)
        if name == "d-":
            return OpWord.letter(letter, r)
        if name == "d+":
            return OpWord.letter(("d+*",), r)
        if name == "y":
            return OpWord.letter(("z", letter[1]), r)
        return None
    if endo == "wbar":
        if name == "T":
            return OpWord.letter(("Ti", letter[1]), r)
        if name == "Ti":
            return OpWord.letter(("T", letter[1]), r)
        if name == "d-":
            return OpWord.letter(letter, r)
        if name == "d+":
            return OpWord.letter(letter, r) * (-(T_ ** (-r)))
        return None
    if endo == "N":
        if name in ("T", "Ti", "d-", "d+*", "z"):
            return OpWord.letter(letter, r)
        if name == "d+":
            return OpWord.letter(("z", 1), r + 1) * OpWord.letter(letter, r) * (-ONE / (Q_ * T_))
        return None
    if endo == "S":
        if name in ("T", "Ti", "d-", "d+", "y"):
            return OpWord.letter(letter, r)
        if name == "d+*":
            return OpWord.letter(("y", 1), r + 1) * OpWord.letter(letter, r) * (-ONE)
        return None
    raise ValueError(f"unknown endomorphism {endo!r}")


def transform_word(endo, w):
    """Letterwise image of a word under N, S, rho, rhostar or wbar.  For the
    antilinear maps (rhostar, wbar) the word coefficients are flipped."""
    if endo in ("rho", "rhostar", "wbar"):
        for letters in w.terms:
            for letter in letters:
                if letter[0] not in _DOMAIN_T:
                    raise ValueError(f"{endo} is defined on words in T, d-, d+ only; got {letter!r}")
    antilinear = endo in ("rhostar", "wbar")
    out = None
    for letters, c in w.terms.items():
        coef = c.flip() if antilinear else c
        piece = OpWord.identity(w.source) * coef
        r = w.source
        for letter in reversed(letters):
            img = _image(endo, letter, r)
            if img is None:
                # the macro's own coefficients follow the map's (anti)linearity
                sub = (y_word if letter[0] == "y" else z_word)(letter[1], r)
                img = transform_word(endo, sub)
            piece = img * piece
            r = piece.target
        out = piece if out is None else out + piece
    if out is None:
        out = OpWord([], w.source)
    out.antilinear = w.antilinear ^ antilinear
    return out


def farey_word(m, n):
    """A word in N', S' whose product has first column (m, n); as a string
    read left to right (leftmost matrix outermost)."""
    if m < 1 or n < 0 or gcd(m, n) != 1:
        raise ValueError("need m >= 1, n >= 0 with gcd(m, n) = 1")
    word = []
    while (m, n) != (1, 0):
        if m > n:
            word.append("N")
            m -= n
        else:
            word.append("S")
            n -= m
    return word


def rho_star_mn(m, n, w, word=None):
    """rho*_{m,n}(w) = A(rho*(w)) where A is the composite of N and S."""
    if word is None:
        word = farey_word(m, n)
    else:
        M = [[1, 0], [0, 1]]
        for x in word:
            X = [[1, 1], [0, 1]] if x == "N" else [[1, 0], [1, 1]]
            M = [[M[0][0] * X[0][0] + M[0][1] * X[1][0], M[0][0] * X[0][1] + M[0][1] * X[1][1]],
                 [M[1][0] * X[0][0] + M[1][1] * X[1][0], M[1][0] * X[0][1] + M[1][1] * X[1][1]]]
        if (M[0][0], M[1][0]) != (m, n):
            raise ValueError(f"word {word} has first column {(M[0][0], M[1][0])}, not {(m, n)}")
    out = transform_word("rhostar", w)
    for x in reversed(word):
        out = transform_word(x, out)
    return out


# ---------------------------------------------------------------------------
# relation harness


def _w(spec, r):
    """Word from a list of (coef, [letters...]) written left to right."""
    return OpWord([(qt(c), tuple(ls)) for c, ls in spec], r)


def relations_at(r):
    """All defining relations as (name, lhs, rhs) words starting at vertex r."""
    T = lambda i: ("T", i)  # noqa: E731
    dm, dp, ds = ("d-",), ("d+",), ("d+*",)
    rels = []
    for i in range(1, r):
        rels.append((f"(T{i}-1)(T{i}+t)=0", _w([(1, [T(i), T(i)]), (T_ - 1, [T(i)]), (-T_, [])], r), _w([], r)))
    for i in range(1, r - 1):
        rels.append((f"braid T{i}T{i+1}T{i}", _w([(1, [T(i), T(i + 1), T(i)])], r), _w([(1, [T(i + 1), T(i), T(i + 1)])], r)))
    for i in range(1, r):
        for j in range(i + 2, r):
            rels.append((f"T{i}T{j}=T{j}T{i}", _w([(1, [T(i), T(j)])], r), _w([(1, [T(j), T(i)])], r)))
    if r >= 2:
        rels.append(("d-^2 T_{r-1} = d-^2", _w([(1, [dm, dm, T(r - 1)])], r), _w([(1, [dm, dm])], r)))
    for i in range(1, r - 1):
        rels.append((f"T{i} d- = d- T{i}", _w([(1, [T(i), dm])], r), _w([(1, [dm, T(i)])], r)))
    rels.append(("T1 d+^2 = d+^2", _w([(1, [T(1), dp, dp])], r), _w([(1, [dp, dp])], r)))
    for i in range(1, r):
        rels.append((f"d+ T{i} = T{i+1} d+", _w([(1, [dp, T(i)])], r), _w([(1, [T(i + 1), dp])], r)))
    if r >= 2:
        rels.append((
            "d-[d+,d-]T_{r-1} = t[d+,d-]d-",
            _w([(1, [dm, dp, dm, T(r - 1)]), (-1, [dm, dm, dp, T(r - 1)])], r),
            _w([(T_, [dp, dm, dm]), (-T_, [dm, dp, dm])], r),
        ))
    if r >= 1:
        rels.append((
            "T1[d+,d-]d+ = t d+[d+,d-]",
            _w([(1, [T(1), dp, dm, dp]), (-1, [T(1), dm, dp, dp])], r),
            _w([(T_, [dp, dp, dm]), (-T_, [dp, dm, dp])], r),
        ))
    # double Dyck path algebra
    rels.append(("T1 d+*^2 = d+*^2", _w([(1, [T(1), ds, ds])], r), _w([(1, [ds, ds])], r)))
    for i in range(1, r):
        rels.append((f"d+* T{i} = T{i+1} d+*", _w([(1, [ds, T(i)])], r), _w([(1, [T(i + 1), ds])], r)))
    if r >= 2:
        rels.append((
            "t d-[d+*,d-] = [d+*,d-]d- T_{r-1}",
            _w([(T_, [dm, ds, dm]), (-T_, [dm, dm, ds])], r),
            _w([(1, [ds, dm, dm, T(r - 1)]), (-1, [dm, ds, dm, T(r - 1)])], r),
        ))
    if r >= 1:
        rels.append((
            "t[d+*,d-]d+* = T1 d+*[d+*,d-]",
            _w([(T_, [ds, dm, ds]), (-T_, [dm, ds, ds])], r),
            _w([(1, [T(1), ds, ds, dm]), (-1, [T(1), ds, dm, ds])], r),
        ))
    for i in range(1, r + 1):
        rels.append((
            f"d+ z{i} = z{i+1} d+",
            OpWord.letter(dp, r) * z_word(i, r),
            z_word(i + 1, r + 1) * OpWord.letter(dp, r),
        ))
        rels.append((
            f"d+* y{i} = y{i+1} d+*",
            OpWord.letter(ds, r) * y_word(i, r),
            y_word(i + 1, r + 1) * OpWord.letter(ds, r),
        ))
    rels.append((
        "z1 d+ = -q t^{r+1} y1 d+*",
        z_word(1, r + 1) * OpWord.letter(dp, r),
        y_word(1, r + 1) * OpWord.letter(ds, r) * (-(Q_ * T_ ** (r + 1))),
    ))
    return rels


def graded_basis(r, d):
    """The basis x^eta s_la of the degree-d piece of rank r."""
    from .symfunc import partitions

    out = []

    def comps(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for a in range(total + 1):
            for rest in comps(total - a, parts - 1):
                yield (a,) + rest

    for k in range(d + 1):
        for la in partitions(d - k):
            for eta in comps(k, r):
                out.append(AsymFn._raw(r, {(eta, la): ONE}))
    return out


def verify_relations(r_max=3, d_max=3, action=DEFAULT, extra=True):
    """Evaluate every defining relation on graded spanning sets; return a
    list of violations (relation name, vertex, basis element)."""
    bad = []
    for r in range(r_max + 1):
        rels = relations_at(r)
        if extra:
            for i in range(1, r + 1):
                rels.append((f"y{i} word = x{i}", y_word(i, r), OpWord.letter(("y", i), r)))
        for d in range(d_max + 1):
            basis = graded_basis(r, d)
            for name, lhs, rhs in rels:
                for f in basis:
                    a = eval_word(lhs, f, action)
                    b = eval_word(rhs, f, action)
                    if a != b:
                        bad.append((name, r, str(f)))
    return bad
