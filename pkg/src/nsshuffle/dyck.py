"""Lattice paths: rational Dyck paths with prescribed touchpoints, the
sweeping reading order, attacking pairs, partial Dyck paths with markings,
and flagged parking words.

Paths are step strings over "N"/"E" read from the southwest end.  Boxes are
named by their northeast corner (column, row), both 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd


@dataclass(frozen=True)
class DyckPath:
    """An (a, b)-Dyck path; a = east extent, b = north extent."""

    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise ValueError(f"bad step string {self.steps!r}")
        a, b = self.a, self.b
        x = y = 0
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            if a and b and y * a < x * b:
                raise ValueError(f"{self.steps} dips below the diagonal")

    @property
    def a(self):
        return self.steps.count("E")

    @property
    def b(self):
        return self.steps.count("N")

    def points(self):
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    def north_steps(self):
        """Southern endpoints of the north steps, in path order."""
        x = y = 0
        out = []
        for s in self.steps:
            if s == "N":
                out.append((x, y))
                y += 1
            else:
                x += 1
        return out

    def east_steps(self):
        """Western endpoints of the east steps, in path order."""
        x = y = 0
        out = []
        for s in self.steps:
            if s == "E":
                out.append((x, y))
                x += 1
            else:
                y += 1
        return out

    def __str__(self):
        return self.steps


@dataclass(frozen=True)
class PartialDyckPath:
    """A path from (0, r) to (d, d) staying weakly above y = x."""

    r: int
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise ValueError(f"bad step string {self.steps!r}")
        d = self.steps.count("E")
        if self.r + self.steps.count("N") != d:
            raise ValueError(f"{self.steps} from height {self.r} does not end on the diagonal")
        x, y = 0, self.r
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            if y < x:
                raise ValueError(f"{self.steps} dips below the diagonal")

    @property
    def d(self):
        return self.steps.count("E")

    @cached_property
    def heights(self):
        """heights[c-1] is the height of the east step in column c."""
        out = []
        y = self.r
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                out.append(y)
        return tuple(out)

    @cached_property
    def area(self):
        """Boxes (i, j), i < j, below the path completed by r north steps."""
        return frozenset((i, j) for i, h in enumerate(self.heights, 1) for j in range(i + 1, h + 1))

    @cached_property
    def corners(self):
        hs = self.heights
        out = set()
        for i in range(1, len(hs)):
            j = hs[i - 1] + 1
            if hs[i] >= j:
                out.add((i, j))
        return frozenset(out)

    def check_marking(self, marking):
        marking = frozenset(tuple(b) for b in marking)
        if not marking <= self.corners:
            raise ValueError(f"marking {sorted(marking - self.corners)} is not a set of corners of {self.steps}")
        return marking

    def prefixed(self):
        """The full Dyck path N^r + steps."""
        return PartialDyckPath(0, "N" * self.r + self.steps)

    def flip_corner(self, box):
        """Replace the E N steps bordering a corner by N E."""
        i, j = box
        if box not in self.corners:
            raise ValueError(f"{box} is not a corner")
        x, y = 0, self.r
        for k, s in enumerate(self.steps):
            if s == "E" and x == i - 1 and y == j - 1:
                assert self.steps[k + 1] == "N"
                return PartialDyckPath(self.r, self.steps[:k] + "NE" + self.steps[k + 2:])
            if s == "N":
                y += 1
            else:
                x += 1
        raise AssertionError("corner not found on the path")

    def __str__(self):
        return f"{self.steps}@{self.r}"


def partial_paths(r, d):
    """All r-partial d-Dyck paths."""
    out = []

    def rec(x, y, acc):
        if x == d and y == d:
            out.append(PartialDyckPath(r, "".join(acc)))
            return
        if y < d:
            acc.append("N")
            rec(x, y + 1, acc)
            acc.pop()
        if x < y and x < d:
            acc.append("E")
            rec(x + 1, y, acc)
            acc.pop()

    if r <= d:
        rec(0, r, [])
    return out


# ---------------------------------------------------------------------------
# (km, kn)-paths with prescribed touchpoints


def _check_mn(m, n):
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise ValueError(f"need coprime positive m, n; got {(m, n)}")


def enum_paths(m, n, alpha):
    """All (km, kn)-Dyck paths touching the diagonal exactly at
    (k_j m, k_j n), k_j the partial sums of alpha."""
    _check_mn(m, n)
    alpha = tuple(alpha)
    if not alpha or any(a <= 0 for a in alpha):
        raise ValueError(f"{alpha} is not a strict composition")
    k = sum(alpha)
    A, B = k * m, k * n
    touches = set()
    s = 0
    for a in alpha:
        touches.add((s * m, s * n))
        s += a
    touches.add((A, B))
    out = []

    def rec(x, y, acc):
        on = m * y == n * x
        if on and (x, y) not in touches:
            return
        if (x, y) == (A, B):
            out.append(DyckPath("".join(acc)))
            return
        if y < B:
            acc.append("N")
            rec(x, y + 1, acc)
            acc.pop()
        if x < A and m * y >= n * (x + 1):
            acc.append("E")
            rec(x + 1, y, acc)
            acc.pop()

    rec(0, 0, [])
    return [p for p in out if _diagonal_points(p, m, n) == touches]


def _diagonal_points(path, m, n):
    return {(x, y) for x, y in path.points() if m * y == n * x}


def sweep_key(p, m, n):
    x, y = p
    return (m * y - n * x, x)


def sweep_order(path, m, n):
    """North steps (southern endpoints) sorted in sweeping reading order."""
    return sorted(path.north_steps(), key=lambda p: sweep_key(p, m, n))


def attacking_pairs(path, m, n):
    """Pairs (i, j) of 1-based sweep indices with step i attacking step j."""
    order = sweep_order(path, m, n)
    keys = [sweep_key(p, m, n) for p in order]
    out = set()
    for i, ki in enumerate(keys):
        top = (ki[0] + m, ki[1])
        for j in range(i + 1, len(keys)):
            if keys[j] < top:
                out.add((i + 1, j + 1))
    return out


def area(path, m, n):
    """Full boxes between the path and the diagonal."""
    total = 0
    for x, y in path.east_steps():
        c = x + 1
        # boxes in column c with rows 1..y, fully above the line
        for j in range(1, y + 1):
            if m * (j - 1) >= n * c:
                total += 1
    return total


def dinv(path, m, n):
    """Pairs (east step e, north step f), e left of f, met by one line of
    slope n/m - eps.  Intercepts are compared as (integer, eps-coefficient)
    pairs after scaling by m."""
    count = 0
    for xe, ye in path.east_steps():
        lo_e = (m * ye - n * (xe + 1), m * (xe + 1))
        hi_e = (m * ye - n * xe, m * xe)
        for xf, yf in path.north_steps():
            if xf < xe + 1:
                continue
            lo_f = (m * yf - n * xf, m * xf)
            hi_f = (m * (yf + 1) - n * xf, m * xf)
            if lo_e <= hi_f and lo_f <= hi_e:
                count += 1
    return count


def maxtdinv(path, m, n):
    return len(attacking_pairs(path, m, n))


def path_stats(path, m, n):
    return area(path, m, n), dinv(path, m, n), maxtdinv(path, m, n)


@dataclass(frozen=True)
class AttackingData:
    order: tuple  # north steps in sweeping order
    full: PartialDyckPath  # the attacking (b, b)-path, r = 0
    partial: PartialDyckPath  # first r north steps removed
    marking: frozenset
    r: int


def touch_count(path, m, n):
    return sum(1 for x, y in path.north_steps() if m * y == n * x)


def attacking_data(path, m, n):
    order = sweep_order(path, m, n)
    b = len(order)
    pairs = attacking_pairs(path, m, n)
    hs = []
    for i in range(1, b + 1):
        hs.append(i + sum(1 for (a, _) in pairs if a == i))
    steps = []
    y = 0
    for h in hs:
        steps.append("N" * (h - y))
        y = h
        steps.append("E")
    full = PartialDyckPath(0, "".join(steps))
    if set(full.area) != pairs:
        raise AssertionError("attacking pairs do not form the area of a Dyck path")
    r = touch_count(path, m, n)
    if not full.steps.startswith("N" * r):
        raise AssertionError("touchpoint steps are not mutually attacking")
    partial = PartialDyckPath(r, full.steps[r:])
    index = {p: i + 1 for i, p in enumerate(order)}
    marking = set()
    for (x, y), i in index.items():
        j = index.get((x, y + 1))
        if j is not None:
            marking.add((i, j))
    marking = partial.check_marking(marking)
    return AttackingData(tuple(order), full, partial, marking, r)


# ---------------------------------------------------------------------------
# parking words


@dataclass(frozen=True)
class ParkingWord:
    path: DyckPath
    values: tuple  # one value per north step, in path order
    kind: str = "strict"

    def by_step(self):
        return dict(zip(self.path.north_steps(), self.values))

    def content(self):
        out = {}
        for v in self.values:
            out[v] = out.get(v, 0) + 1
        return out


def _touch_flags(path, m, n):
    """Flag bound on each north step (path order): j on the step leaving the
    j-th touchpoint, None elsewhere."""
    flags = []
    j = 0
    for x, y in path.north_steps():
        if m * y == n * x:
            j += 1
            flags.append(j)
        else:
            flags.append(None)
    return flags


def enum_parking(path, m, n, kind="strict", value_bound=None):
    """Flagged word parking functions with values <= value_bound.  Strict:
    strictly increasing up vertical runs; weak: weakly decreasing."""
    if kind not in ("strict", "weak"):
        raise ValueError("kind is 'strict' or 'weak'")
    steps = path.north_steps()
    if value_bound is None:
        value_bound = len(steps)
    if value_bound <= 0:
        return []
    flags = _touch_flags(path, m, n)
    below = {}
    pos = {p: i for i, p in enumerate(steps)}
    for i, (x, y) in enumerate(steps):
        below[i] = pos.get((x, y - 1))
    out = []
    vals = [0] * len(steps)

    def rec(i):
        if i == len(steps):
            out.append(ParkingWord(path, tuple(vals), kind))
            return
        hi = value_bound if flags[i] is None else min(value_bound, flags[i])
        lo = 1
        prev = below[i]
        if prev is not None:
            if kind == "strict":
                lo = vals[prev] + 1
            else:
                hi = min(hi, vals[prev])
        for v in range(lo, hi + 1):
            vals[i] = v
            rec(i + 1)

    rec(0)
    return out


def pf_dinv(path, word, m, n, kind="dinv"):
    """Attacking pairs (i, j) with w(i) < w(j) (dinv) or w(i) >= w(j)
    (tdinvprime)."""
    order = sweep_order(path, m, n)
    w = word.by_step()
    seq = [w[p] for p in order]
    count = 0
    for i, j in attacking_pairs(path, m, n):
        a, b = seq[i - 1], seq[j - 1]
        if kind == "dinv":
            count += a < b
        elif kind == "tdinvprime":
            count += a >= b
        else:
            raise ValueError(f"unknown statistic {kind!r}")
    return count


def paths_to_json(m, n, alpha):
    paths = enum_paths(m, n, alpha)
    return {
        "m": m,
        "n": n,
        "alpha": list(alpha),
        "paths": [
            {"steps": p.steps, "area": area(p, m, n), "dinv": dinv(p, m, n), "maxtdinv": maxtdinv(p, m, n)}
            for p in paths
        ],
    }
