"""Flagged LLT polynomials.

Four flavors are indexed by a partial Dyck path and a marking: row or column,
signed or unsigned.  There is also the general version on tuples of skew
shapes, the path-to-tuple dictionary, and the operator words whose value on
1 reproduces the signed flavors.

Letters of the signed alphabet 1 < 1bar < 2 < 2bar < ... are coded as
integers: v -> 2v, vbar -> 2v + 1.  Sums are computed one content vector at a
time, restricted to contents whose tail part (letters above r) is a
partition; those coefficients determine the almost-symmetric polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .asympoly import AsymFn, from_m_coeffs
from .ddpa import OpWord, eval_word
from .dyck import PartialDyckPath, attacking_data
from .nspleth import compositions
from .qtfield import ONE, QT, t as T_
from .symfunc import partitions


def row_increasing(a, b):
    return a < b or (a == b and a % 2 == 0)


def column_decreasing(a, b):
    return a > b or (a == b and a % 2 == 1)


def _letters(v, signed):
    return (2 * v, 2 * v + 1) if signed else (2 * v,)


def _contents(d, r):
    """(eta, lam) with |eta| + |lam| = d."""
    for k in range(d + 1):
        for eta in compositions(k, r):
            for lam in partitions(d - k):
                yield eta, lam


def _tpoly_to_qt(poly):
    out = QT(0)
    for e, c in poly.items():
        if c:
            out = out + QT.mono(0, e, c)
    return out


def _sum_words(d, r, checks, flags, signed, inv_rel, mark_rel, sign_exp):
    """Sum t^inv (-t)^(sign_exp * m) x^|T| over words T: [d] -> letters.

    checks[j] lists (i, kind) for i < j with kind 'area' or 'mark'.  A pair
    (i, j) is tested as rel(T(j), T(i)).  flags[j] bounds the magnitude (and
    forbids the barred letter of that magnitude).
    """
    m_coeffs = {}
    for eta, lam in _contents(d, r):
        counts = list(eta) + list(lam)
        poly = {}
        T = [0] * d

        def rec(j, inv, neg):
            if j == d:
                e = inv + sign_exp * neg
                c = -1 if neg % 2 else 1
                poly[e] = poly.get(e, 0) + c
                return
            for idx, left in enumerate(counts):
                if not left:
                    continue
                v = idx + 1
                if flags[j] is not None and v > flags[j]:
                    continue
                for a in _letters(v, signed):
                    if flags[j] is not None and a > 2 * flags[j]:
                        continue
                    add = 0
                    ok = True
                    for i, kind in checks[j]:
                        if kind == "mark":
                            if not mark_rel(a, T[i]):
                                ok = False
                                break
                        elif inv_rel(a, T[i]):
                            add += 1
                    if not ok:
                        continue
                    T[j] = a
                    counts[idx] -= 1
                    rec(j + 1, inv + add, neg + (a & 1))
                    counts[idx] += 1

        rec(0, 0, 0)
        c = _tpoly_to_qt(poly)
        if c:
            m_coeffs[(eta, lam)] = c
    return from_m_coeffs(r, m_coeffs)


def llt_flagged(mode, signed, r, path, marking=()):
    """Flagged row/column LLT polynomial of a partial Dyck path with a marking.

    Row: marked (i, j) need T(j)T(i) row-increasing; inversions are area
    pairs with T(j)T(i) row-increasing; sign weight (-t)^m.
    Column: the same with column-decreasing and sign weight (-t)^-m.
    """
    if isinstance(path, str):
        path = PartialDyckPath(r, path)
    if path.r != r:
        raise ValueError(f"path starts at height {path.r}, not {r}")
    marking = path.check_marking(marking)
    d = path.d
    checks = [[] for _ in range(d)]
    for i, j in path.area:
        checks[j - 1].append((i - 1, "area"))
    for i, j in marking:
        checks[j - 1].append((i - 1, "mark"))
    flags = [j + 1 if j < r else None for j in range(d)]
    if mode == "row":
        rel, sign_exp = row_increasing, 1
    elif mode == "col":
        rel, sign_exp = column_decreasing, -1
    else:
        raise ValueError("mode is 'row' or 'col'")
    return _sum_words(d, r, checks, flags, signed, rel, rel, sign_exp)


def llt_nonattacking(r, path, marking=()):
    """The signed row sum restricted to non-attacking words (magnitudes of
    area pairs differ)."""
    marking = path.check_marking(marking)
    d = path.d
    checks = [[] for _ in range(d)]
    for i, j in path.area:
        checks[j - 1].append((i - 1, "area"))
    for i, j in marking:
        checks[j - 1].append((i - 1, "mark"))
    flags = [j + 1 if j < r else None for j in range(d)]

    # area pairs must have distinct magnitudes; encode as an extra check by
    # wrapping the relation
    def mark_rel(a, b):
        return row_increasing(a, b)

    m_coeffs = {}
    for eta, lam in _contents(d, r):
        counts = list(eta) + list(lam)
        poly = {}
        T = [0] * d

        def rec(j, inv, neg):
            if j == d:
                e = inv + neg
                poly[e] = poly.get(e, 0) + (-1 if neg % 2 else 1)
                return
            for idx, left in enumerate(counts):
                if not left:
                    continue
                v = idx + 1
                if flags[j] is not None and v > flags[j]:
                    continue
                for a in (2 * v, 2 * v + 1):
                    if flags[j] is not None and a > 2 * flags[j]:
                        continue
                    add = 0
                    ok = True
                    for i, kind in checks[j]:
                        if kind == "mark":
                            ok = mark_rel(a, T[i])
                        else:
                            ok = (a >> 1) != (T[i] >> 1)
                            add += row_increasing(a, T[i])
                        if not ok:
                            break
                    if not ok:
                        continue
                    T[j] = a
                    counts[idx] -= 1
                    rec(j + 1, inv + add, neg + (a & 1))
                    counts[idx] += 1

        rec(0, 0, 0)
        c = _tpoly_to_qt(poly)
        if c:
            m_coeffs[(eta, lam)] = c
    return from_m_coeffs(r, m_coeffs)


# ---------------------------------------------------------------------------
# tuples of skew shapes


@dataclass(frozen=True)
class SkewShape:
    """Boxes named by northeast corner (column, row)."""

    boxes: frozenset

    @classmethod
    def from_rows(cls, beta, alpha):
        """French skew shape beta/alpha: row j holds columns alpha_j < i <= beta_j."""
        if len(beta) != len(alpha):
            raise ValueError("beta and alpha need equal length")
        return cls(frozenset((i, j) for j, (b, a) in enumerate(zip(beta, alpha), 1) for i in range(a + 1, b + 1)))

    @classmethod
    def row(cls, beta, alpha):
        return cls.from_rows((beta,), (alpha,))

    @classmethod
    def column(cls, top, bottom, col=1):
        """Single column in `col` occupying rows bottom < j <= top."""
        return cls(frozenset((col, j) for j in range(bottom + 1, top + 1)))

    def contents(self):
        return sorted(i - j for i, j in self.boxes)

    def to_json(self):
        return {"boxes": sorted(list(b) for b in self.boxes)}


def _reading(boxes):
    """Boxes of a tuple as (content, shape index, row, column), sorted in
    reading order: adjusted content, then southwest to northeast."""
    out = []
    for k, shape in enumerate(boxes, 1):
        for i, j in shape.boxes:
            out.append((i - j, k, j, i))
    out.sort()
    return out


def _attacks(a, b):
    """0 < c~(b) - c~(a) < 1 for (content, k, ...) records."""
    ca, ka = a[0], a[1]
    cb, kb = b[0], b[1]
    return (cb == ca and kb > ka) or (cb == ca + 1 and kb < ka)


def llt_tuple(r, shapes, signed=False):
    """Flagged (super) tableaux sum on a tuple of skew shapes.

    Tableaux weakly increase along rows and up columns; positive letters
    strictly up columns, negative strictly along rows.  The last r row-end
    boxes in reading order carry flags 1..r (from the top of the order).
    Weight t^inv (-t)^-m, inversions being attacking pairs (a, b) with
    T(a)T(b) column-decreasing.
    """
    shapes = tuple(shapes)
    rec_ = _reading(shapes)
    d = len(rec_)
    if d < r:
        raise ValueError("fewer boxes than the rank")
    where = {(k, i, j): n for n, (c, k, j, i) in enumerate(rec_)}
    # row ends
    ends = []
    for n, (c, k, j, i) in enumerate(rec_):
        if (k, i + 1, j) not in where:
            ends.append(n)
    ends.sort(reverse=True)
    flags = [None] * d
    for pos, n in enumerate(ends[:r]):
        flags[n] = pos + 1
    # each constraint is checked at whichever box of the pair is filled last;
    # the flag says whether the current box is the second of the pair
    checks = [[] for _ in range(d)]

    def attach(first, second, kind):
        if first < second:
            checks[second].append((first, kind, True))
        else:
            checks[first].append((second, kind, False))

    for n, (c, k, j, i) in enumerate(rec_):
        left = where.get((k, i - 1, j))
        below = where.get((k, i, j - 1))
        if left is not None:
            attach(left, n, "rowpair")
        if below is not None:
            attach(below, n, "colpair")
        for m2 in range(n):
            if _attacks(rec_[m2], rec_[n]):
                checks[n].append((m2, "attack", True))
    m_coeffs = {}
    for eta, lam in _contents(d, r):
        counts = list(eta) + list(lam)
        poly = {}
        T = [0] * d

        def rec(n, inv, neg):
            if n == d:
                e = inv - neg
                poly[e] = poly.get(e, 0) + (-1 if neg % 2 else 1)
                return
            for idx, left in enumerate(counts):
                if not left:
                    continue
                v = idx + 1
                if flags[n] is not None and v > flags[n]:
                    continue
                for a in _letters(v, signed):
                    if flags[n] is not None and a > 2 * flags[n]:
                        continue
                    ok = True
                    add = 0
                    for m2, kind, second in checks[n]:
                        lo, hi = (T[m2], a) if second else (a, T[m2])
                        if kind == "rowpair":
                            ok = row_increasing(lo, hi)
                        elif kind == "colpair":
                            ok = lo < hi or (lo == hi and lo & 1)
                        else:
                            add += column_decreasing(lo, hi)
                        if not ok:
                            break
                    if not ok:
                        continue
                    T[n] = a
                    counts[idx] -= 1
                    rec(n + 1, inv + add, neg + (a & 1))
                    counts[idx] += 1

        rec(0, 0, 0)
        c = _tpoly_to_qt(poly)
        if c:
            m_coeffs[(eta, lam)] = c
    return from_m_coeffs(r, m_coeffs)


# ---------------------------------------------------------------------------
# dictionary between paths and tuples


@lru_cache(maxsize=None)
def _attacking_preimages(d):
    """Map from attacking (d, d)-path step strings to the (d, d)-path."""
    from .dyck import enum_paths
    from .nspleth import strict_compositions

    out = {}
    for alpha in strict_compositions(d):
        for p in enum_paths(1, 1, alpha):
            ad = attacking_data(p, 1, 1)
            if ad.full.steps in out:
                raise AssertionError("attacking path map is not injective")
            out[ad.full.steps] = p
    return out


def path_to_tuples(path, marking=()):
    """Row tuple mu (single rows from the runs of the preimage path, broken
    at unmarked corners), the reversed-negated row tuple nu, and the column
    tuple eta with the same contents as nu.  Rows are (beta, alpha) pairs."""
    marking = path.check_marking(marking)
    full = path.prefixed()
    d = full.d
    if d == 0:
        return (), (), ()
    pi = _attacking_preimages(d)[full.steps]
    ad = attacking_data(pi, 1, 1)
    index = {p: n + 1 for n, p in enumerate(ad.order)}
    runs = []
    x = y = 0
    cur = None
    for s in pi.steps:
        if s == "N":
            if cur is None:
                cur = [(x, y), 0]
            cur[1] += 1
            y += 1
        else:
            if cur is not None:
                runs.append(cur)
                cur = None
            x += 1
    if cur is not None:
        runs.append(cur)
    mu = []  # list of (beta, alpha, [step labels])
    for (x0, y0), length in runs:
        labels = [index[(x0, y0 + s)] for s in range(length)]
        mu.append([length + y0 - x0, y0 - x0, labels])
    # break at corners not in the marking
    broken = []
    for beta, alpha, labels in mu:
        start = alpha
        piece = []
        for pos, lab in enumerate(labels):
            piece.append(lab)
            if pos + 1 < len(labels) and (lab, labels[pos + 1]) not in marking:
                broken.append((start + len(piece), start, piece))
                start += len(piece)
                piece = []
        broken.append((start + len(piece), start, piece))
    _check_dictionary(full, marking, broken)
    mu_rows = tuple((b, a) for b, a, _ in broken)
    nu_rows = tuple((-a, -b) for b, a in reversed(mu_rows))
    eta_cols = tuple((b + 1, a + 1) for b, a in reversed(mu_rows))
    return mu_rows, nu_rows, eta_cols


def _check_dictionary(full, marking, broken):
    shapes = [SkewShape.row(b, a) for b, a, _ in broken]
    recs = _reading(shapes)
    # label of each box in reading order must be 1..d
    lab = {}
    for (b, a, labels), k in zip(broken, range(1, len(broken) + 1)):
        for s, L in enumerate(labels):
            lab[(k, a + s + 1)] = L
    order = [lab[(k, i)] for c, k, j, i in recs]
    if order != list(range(1, len(order) + 1)):
        raise AssertionError(f"reading order {order} does not match the sweep order")
    attack = set()
    for x in range(len(recs)):
        for y in range(x + 1, len(recs)):
            if _attacks(recs[x], recs[y]):
                attack.add((x + 1, y + 1))
    if attack != set(full.area):
        raise AssertionError("attacking pairs of the tuple differ from the path area")
    dominos = set()
    for b, a, labels in broken:
        for u, v in zip(labels, labels[1:]):
            dominos.add((u, v))
    if dominos != set(marking):
        raise AssertionError("horizontal dominos differ from the marking")


def row_shapes(rows):
    return tuple(SkewShape.row(b, a) for b, a in rows)


def column_shapes(cols):
    return tuple(SkewShape.column(top, bottom) for top, bottom in cols)


# ---------------------------------------------------------------------------
# operator words


def chi_word(mode, path, marking=()):
    """The operator word read from the northeast end of the path; applied to
    1 at vertex 0 it gives the signed flagged row (mode 'row') or column
    (mode 'col', parameters t -> 1/t) LLT polynomial."""
    marking = path.check_marking(marking)
    steps = path.steps
    # corner (i, j) is an E step at x = i-1, y = j-1 followed by N
    marked_at = set()
    x, y = 0, path.r
    for k, s in enumerate(steps):
        if s == "E" and (x + 1, y + 1) in marking:
            marked_at.add(k)
        if s == "N":
            y += 1
        else:
            x += 1
    word = OpWord.identity(0)
    v = 0  # current vertex
    k = len(steps) - 1
    dm = ("d-",)
    dp = ("d+",)

    def dplus_coef(src):
        return -ONE if mode == "row" else -(T_ ** (-src))

    while k >= 0:
        if k - 1 >= 0 and (k - 1) in marked_at:
            # travelling back: N (step k) then E (step k-1)
            a = OpWord([(dplus_coef(v), (dm, dp))], v)  # d- after d+ at v
            b = OpWord([(dplus_coef(v - 1), (dp, dm))], v)  # d+ at v-1 after d-
            scale = ONE / (T_ - 1) if mode == "row" else ONE / (ONE / T_ - 1)
            piece = (a - b) * scale
            k -= 2
        elif steps[k] == "N":
            piece = OpWord.letter(dm, v)
            k -= 1
        else:
            piece = OpWord.letter(dp, v) * dplus_coef(v)
            k -= 1
        word = piece * word
        v = word.target
    if v != path.r:
        raise AssertionError("chi word ends at the wrong vertex")
    return word


def chi(mode, path, marking=()):
    return eval_word(chi_word(mode, path, marking), AsymFn.one(0))
