"""End-to-end verification of the shuffle identities, positivity audits and
report serialization.

Every check builds its two sides along separate module paths: the operator
side runs through the Dyck path algebra, plethysm and nabla; the
combinatorial side runs through path enumeration, LLT fillings and parking
functions.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

from .asympoly import AsymFn, from_m_coeffs, full_symmetrize, stable_atom_expand
from .ddpa import OpWord, eval_word, rho_star_mn
from .dyck import attacking_data, enum_parking, enum_paths, path_stats, pf_dinv
from .llt import llt_flagged
from .nabla import apply_nabla, nabla_symmetric, theta
from .nsmac import modified_E, pair_indices
from .nspleth import Pi, comp_HL
from .qtfield import QT, q as Q_, t as T_
from .symfunc import SymFn, partition

SCHEMA_VERSION = 1


def degree_cap(default=6):
    return int(os.environ.get("SHUFFLE_DEGREE_CAP", str(default)))


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    lhs: object
    rhs: object
    equal: bool
    atoms: dict | None = None
    seconds: float = 0.0
    witness: object = None
    extra: dict = field(default_factory=dict)
    audit_negative: list = field(default_factory=list)


def _check_alpha(alpha):
    alpha = tuple(int(a) for a in alpha)
    if not alpha or any(a <= 0 for a in alpha):
        raise ValueError(f"{alpha} is not a strict composition")
    return alpha


def _check_cap(size, cap):
    cap = degree_cap() if cap is None else cap
    if size > cap:
        raise ValueError(f"size {size} exceeds the degree cap {cap}")


def first_difference(a, b):
    """A (key, lhs coeff, rhs coeff) witness for a != b, or None."""
    if isinstance(a, SymFn):
        da, db = a.s().c, b.s().c
    else:
        da, db = a.terms, b.terms
    for k in sorted(set(da) | set(db), key=str):
        x, y = da.get(k, QT(0)), db.get(k, QT(0))
        if x != y:
            return {"key": str(k), "lhs": str(x), "rhs": str(y)}
    return None


def is_nat_qt(c):
    """Coefficient in N[q, t] (nonnegative integer polynomial)."""
    return c.is_poly() and all(v > 0 for v in c.num.values()) and all(i >= 0 and j >= 0 for i, j in c.num)


def negative_atoms(expansion):
    return [str(k) for k, c in sorted(expansion.items(), key=lambda kv: str(kv[0])) if not is_nat_qt(c)]


def _sum(items, r):
    out = AsymFn.zero(r)
    for g in items:
        out = out + g
    return out


# ---------------------------------------------------------------------------
# combinatorial sides


def llt_side(m, n, alpha, mode, signed=False):
    """Sum over the paths of q^area t^(dinv - maxtdinv) times the flagged LLT
    polynomial of the attacking path."""
    r = len(alpha)
    terms = []
    for p in enum_paths(m, n, alpha):
        ad = attacking_data(p, m, n)
        a, di, md = path_stats(p, m, n)
        terms.append(llt_flagged(mode, signed, ad.r, ad.partial, ad.marking) * (Q_ ** a * T_ ** (di - md)))
    return _sum(terms, r)


def parking_side(m, n, alpha, kind, stat):
    """Flagged word parking function sum, restricted to contents whose tail
    is a partition (which determines the almost-symmetric element)."""
    r = len(alpha)
    terms = []
    for p in enum_paths(m, n, alpha):
        a, di, md = path_stats(p, m, n)
        d = len(p.north_steps())
        coeffs = {}
        for w in enum_parking(p, m, n, kind, r + d):
            cnt = [0] * (r + d)
            for v in w.values:
                cnt[v - 1] += 1
            tail = cnt[r:]
            if any(tail[i] < tail[i + 1] for i in range(len(tail) - 1)):
                continue
            key = (tuple(cnt[:r]), partition(tail))
            coeffs[key] = coeffs.get(key, QT(0)) + T_ ** pf_dinv(p, w, m, n, stat)
        terms.append(from_m_coeffs(r, coeffs) * (Q_ ** a * T_ ** (di - md)))
    return _sum(terms, r)


# ---------------------------------------------------------------------------
# operator sides


def algebraic_side(m, n, alpha):
    """(-1)^{k(m+n+1)} t^{r-k} rho*_{m,n}(y_1^{a_1-1}..y_r^{a_r-1} d_+^r) . 1."""
    r, k = len(alpha), sum(alpha)
    w = OpWord.identity(0)
    for i in range(r):
        w = OpWord.letter(("d+",), i) * w
    for i, a in enumerate(alpha, 1):
        for _ in range(a - 1):
            w = OpWord.letter(("y", i), r) * w
    w = rho_star_mn(m, n, w)
    return eval_word(w, AsymFn.one(0)) * ((-1) ** (k * (m + n + 1)) * T_ ** (r - k))


def nabla_side(m, alpha):
    """theta nabla^{-m} of the compositional Hall-Littlewood polynomial."""
    return theta(apply_nabla("bold", -m, comp_HL(alpha)))


# ---------------------------------------------------------------------------
# verifications


def verify_ns_shuffle(alpha, m=1, cap=None, atoms=True):
    alpha = _check_alpha(alpha)
    _check_cap(sum(alpha) * m, cap)
    t0 = time.time()
    lhs = nabla_side(m, alpha)
    rhs = llt_side(m, 1, alpha, "col")
    pf = parking_side(m, 1, alpha, "strict", "dinv")
    eq = lhs == rhs and rhs == pf
    # the same identity before the antilinear flip
    unflipped = apply_nabla("bold", -m, comp_HL(alpha)) == theta(rhs)
    eq = eq and unflipped
    rep = VerificationReport("ns-shuffle", {"m": m, "alpha": list(alpha)}, lhs, rhs, eq)
    rep.extra = {"llt_equals_parking": rhs == pf, "lhs_equals_llt": lhs == rhs, "unflipped_form": unflipped}
    if not eq:
        rep.witness = first_difference(lhs, rhs) or first_difference(rhs, pf)
    if atoms:
        rep.atoms = stable_atom_expand(lhs)
        rep.audit_negative = negative_atoms(rep.atoms)
    rep.seconds = time.time() - t0
    return rep


def verify_kmkn(m, n, alpha, cap=None):
    alpha = _check_alpha(alpha)
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    from math import gcd

    if gcd(m, n) != 1:
        raise ValueError("m and n must be coprime")
    k = sum(alpha)
    _check_cap(k * (m + n), 8 if cap is None and "SHUFFLE_DEGREE_CAP" not in os.environ else cap)
    t0 = time.time()
    signed_lhs = algebraic_side(m, n, alpha)
    signed_rhs = llt_side(m, n, alpha, "row", signed=True)
    lhs = Pi(signed_lhs)
    rhs = llt_side(m, n, alpha, "row")
    pf = parking_side(m, n, alpha, "weak", "tdinvprime")
    eq = signed_lhs == signed_rhs and lhs == rhs and rhs == pf
    rep = VerificationReport("kmkn-shuffle", {"m": m, "n": n, "alpha": list(alpha)}, lhs, rhs, eq)
    rep.extra = {
        "signed_identity": signed_lhs == signed_rhs,
        "unsigned_identity": lhs == rhs,
        "llt_equals_parking": rhs == pf,
    }
    if not eq:
        rep.witness = first_difference(signed_lhs, signed_rhs) or first_difference(lhs, rhs) or first_difference(rhs, pf)
    rep.seconds = time.time() - t0
    return rep


def verify_classical(m, alpha, cap=None):
    """Symmetrized form: nabla^m C_alpha(x; t) against the symmetrized
    nonsymmetric identity."""
    alpha = _check_alpha(alpha)
    _check_cap(sum(alpha) * m, cap)
    t0 = time.time()
    C_sym = theta(full_symmetrize(comp_HL(alpha))).tail_of(())
    lhs = nabla_symmetric(C_sym, m)
    via_ns = full_symmetrize(nabla_side(m, alpha)).tail_of(())
    rhs = full_symmetrize(llt_side(m, 1, alpha, "col")).tail_of(())
    eq = lhs == rhs and lhs == via_ns
    rep = VerificationReport("classical-shuffle", {"m": m, "alpha": list(alpha)}, lhs, rhs, eq)
    rep.extra = {"symmetrized_nonsymmetric_side": via_ns == lhs}
    if not eq:
        rep.witness = first_difference(lhs, rhs) or first_difference(lhs, via_ns)
    rep.seconds = time.time() - t0
    return rep


def verify_signed_to_unsigned(path, marking):
    """Plethysm of signed row/column LLTs, and the w-bar transport of the
    row operator word to the column one."""
    from .ddpa import transform_word
    from .llt import chi_word

    t0 = time.time()
    r = path.r
    tinv = lambda f: f.map_coeffs(lambda c: c.subs_mono(1, -1))  # noqa: E731
    row_pm = llt_flagged("row", True, r, path, marking)
    row = llt_flagged("row", False, r, path, marking)
    col_pm = tinv(llt_flagged("col", True, r, path, marking))
    col = tinv(llt_flagged("col", False, r, path, marking))
    ok_row = Pi(row_pm) == row
    ok_col = Pi(col_pm) == col
    wbar = eval_word(transform_word("wbar", chi_word("row", path, marking)), AsymFn.one(0))
    ok_w = wbar == col_pm * ((-1) ** path.d)
    rep = VerificationReport(
        "signed-to-unsigned", {"path": path.steps, "r": r, "marking": sorted(map(list, marking))},
        Pi(row_pm), row, ok_row and ok_col and ok_w,
    )
    rep.extra = {"row": ok_row, "col": ok_col, "wbar_transport": ok_w}
    if not rep.equal:
        rep.witness = first_difference(Pi(row_pm), row) or first_difference(Pi(col_pm), col)
    rep.seconds = time.time() - t0
    return rep


# ---------------------------------------------------------------------------
# positivity audit


def atom_audit(max_degree=5, tE_rank=2, tE_degree=None):
    """Stable-atom expansions of all flagged row/column LLT targets (signed
    flavors excluded) of degree <= max_degree and of tE indices up to the
    given rank and degree; returns the list of counterexamples."""
    import itertools

    from .dyck import partial_paths

    found = []
    checked = 0
    for d in range(1, max_degree + 1):
        for r in range(0, d + 1):
            for p in partial_paths(r, d):
                corners = sorted(p.corners)
                for k in range(len(corners) + 1):
                    for S in itertools.combinations(corners, k):
                        for mode in ("row", "col"):
                            g = llt_flagged(mode, False, r, p, S)
                            bad = negative_atoms(stable_atom_expand(g))
                            checked += 1
                            if bad:
                                found.append({"target": f"{mode} {p} {S}", "atoms": bad})
    tE_degree = max_degree if tE_degree is None else tE_degree
    for r in range(0, tE_rank + 1):
        for d in range(0, tE_degree + 1):
            for eta, la in pair_indices(r, d):
                bad = negative_atoms(stable_atom_expand(modified_E(eta, la)))
                checked += 1
                if bad:
                    found.append({"target": f"tE {eta}|{la}", "atoms": bad})
    return {"checked": checked, "counterexamples": found}


# ---------------------------------------------------------------------------
# serialization


def _ser(x):
    if isinstance(x, AsymFn):
        return x.to_json()
    if isinstance(x, SymFn):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _ser(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, QT):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_ser(v) for v in x]
    return x


def report(rep, fmt="json"):
    if fmt == "json":
        obj = {
            "schema": SCHEMA_VERSION,
            "theorem": rep.theorem,
            "params": rep.params,
            "equal": rep.equal,
            "seconds": round(rep.seconds, 3),
            "lhs": _ser(rep.lhs),
            "rhs": _ser(rep.rhs),
            "atoms": _ser(rep.atoms) if rep.atoms is not None else None,
            "witness": rep.witness,
            "extra": rep.extra,
            "audit_negative": rep.audit_negative,
        }
        return json.dumps(obj, indent=2, sort_keys=True)
    if fmt == "text":
        lines = [
            f"{rep.theorem} {json.dumps(rep.params, sort_keys=True)}: {'PASS' if rep.equal else 'FAIL'} ({rep.seconds:.2f}s)",
            f"  lhs = {rep.lhs}",
        ]
        if not rep.equal:
            lines.append(f"  rhs = {rep.rhs}")
            lines.append(f"  witness = {rep.witness}")
        if rep.atoms is not None:
            parts = [f"({c})*A[{k[0]}|{k[1]}]" for k, c in sorted(rep.atoms.items(), key=lambda kv: str(kv[0]))]
            lines.append("  atoms = " + " + ".join(parts))
        if rep.audit_negative:
            lines.append(f"  non-positive atoms: {rep.audit_negative}")
        for k, v in rep.extra.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)
    raise ValueError("format is json or text")
