"""Command-line surface.

Exit codes: 0 all checks pass, 1 an identity failed, 2 invalid input,
3 a stable-atom coefficient outside N[q, t] was found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import harness

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_AUDIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _ints(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise InputError(f"expected comma separated integers, got {text!r}") from exc


def _alphas(spec):
    """"3,1" or "all:N" (every strict composition of size <= N)."""
    if spec.startswith("all:"):
        from .nspleth import strict_compositions

        n = int(spec[4:])
        return [a for k in range(1, n + 1) for a in strict_compositions(k)]
    return [_ints(spec)]


def _marking(text):
    """"1-3,2-4" -> {(1, 3), (2, 4)}."""
    out = set()
    for part in filter(None, text.split(",")):
        i, _, j = part.partition("-")
        try:
            out.add((int(i), int(j)))
        except ValueError as exc:
            raise InputError(f"bad marking entry {part!r}") from exc
    return out


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        if isinstance(obj, dict):
            for k, v in obj.items():
                print(f"{k}: {v}")
        else:
            print(obj)


def _run_reports(fn, jobs_args, jobs, fmt):
    if jobs > 1 and len(jobs_args) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            reps = list(ex.map(fn, *zip(*jobs_args)))
    else:
        reps = [fn(*a) for a in jobs_args]
    if fmt == "json" and len(reps) > 1:
        print("[" + ",\n".join(harness.report(r, "json") for r in reps) + "]")
    else:
        for r in reps:
            print(harness.report(r, fmt))
    if not all(r.equal for r in reps):
        return EXIT_MISMATCH
    if any(r.audit_negative for r in reps):
        return EXIT_AUDIT
    return EXIT_OK


def _ns(alpha, m):
    return harness.verify_ns_shuffle(alpha, m)


def _kmkn(m, n, alpha):
    return harness.verify_kmkn(m, n, alpha)


def _classical(m, alpha):
    return harness.verify_classical(m, alpha)


def cmd_verify_shuffle(a):
    return _run_reports(_ns, [(al, a.m) for al in _alphas(a.alpha)], a.jobs, a.format)


def cmd_verify_kmkn(a):
    return _run_reports(_kmkn, [(a.m, a.n, al) for al in _alphas(a.alpha)], a.jobs, a.format)


def cmd_verify_classical(a):
    return _run_reports(_classical, [(a.m, al) for al in _alphas(a.alpha)], a.jobs, a.format)


def cmd_llt(a):
    from .asympoly import stable_atom_expand, truncate
    from .dyck import DyckPath, PartialDyckPath, attacking_data
    from .llt import llt_flagged

    if a.sigma == "auto":
        if a.r is not None:
            raise InputError("--sigma auto needs a full (m, n)-Dyck path, not --r")
        ad = attacking_data(DyckPath(a.path), a.m, a.n)
        r, path, marking = ad.r, ad.partial, ad.marking
    else:
        r = 0 if a.r is None else a.r
        path = PartialDyckPath(r, a.path)
        marking = path.check_marking(_marking(a.sigma))
    f = llt_flagged(a.mode, a.signed, r, path, marking)
    out = {
        "mode": a.mode,
        "signed": a.signed,
        "r": r,
        "path": path.steps,
        "marking": sorted(list(b) for b in marking),
        "value": f.to_json() if a.format == "json" else str(f),
    }
    if a.vars is not None:
        out["truncated"] = str(truncate(f, a.vars))
    if not a.signed:
        atoms = stable_atom_expand(f)
        out["atoms"] = {str(k): str(c) for k, c in sorted(atoms.items(), key=lambda kv: str(kv[0]))}
        bad = harness.negative_atoms(atoms)
        out["audit_negative"] = bad
    _emit(out, a.format)
    return EXIT_AUDIT if out.get("audit_negative") else EXIT_OK


def cmd_nsmac(a):
    from .asympoly import stable_atom_expand
    from .nsmac import E_nonsym, modified_E, stable_E, stable_eigenvalue

    if a.finite is not None:
        E = E_nonsym(_ints(a.finite), a.vars)
        _emit({"E": E.to_json() if a.format == "json" else str(E)}, a.format)
        return EXIT_OK
    eta, la = _ints(a.eta or ""), _ints(a.la or "")
    f = modified_E(eta, la) if a.modified else stable_E(eta, la)
    out = {
        "eta": list(eta),
        "lambda": list(la),
        "kind": "tE" if a.modified else "stE",
        "value": f.to_json() if a.format == "json" else str(f),
        "eigenvalues": [str(stable_eigenvalue(eta, la, j)) for j in range(1, len(eta) + 1)],
    }
    code = EXIT_OK
    if a.modified:
        atoms = stable_atom_expand(f)
        out["atoms"] = {str(k): str(c) for k, c in sorted(atoms.items(), key=lambda kv: str(kv[0]))}
        out["audit_negative"] = harness.negative_atoms(atoms)
        code = EXIT_AUDIT if out["audit_negative"] else EXIT_OK
    _emit(out, a.format)
    return code


def cmd_nabla(a):
    from .nabla import spectrum_certificate

    cert = spectrum_certificate(a.r, a.d)
    _emit(cert, a.format)
    return EXIT_OK if cert["ok"] else EXIT_MISMATCH


def cmd_relations(a):
    from .ddpa import verify_relations

    bad = verify_relations(a.rmax, a.dmax)
    _emit({"rmax": a.rmax, "dmax": a.dmax, "violations": [list(b) for b in bad]}, a.format)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_atoms(a):
    from .asympoly import AsymFn, stable_atom_expand

    if a.input is not None:
        with open(a.input) as fh:
            obj = json.load(fh)
        try:
            f = AsymFn.from_json(obj.get("value", obj) if isinstance(obj, dict) else obj)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{a.input} does not hold a serialized element: {exc}") from exc
        atoms = stable_atom_expand(f)
        bad = harness.negative_atoms(atoms)
        out = {
            "atoms": {str(k): str(c) for k, c in sorted(atoms.items(), key=lambda kv: str(kv[0]))},
            "audit_negative": bad,
        }
    else:
        out = harness.atom_audit(a.max_degree, a.tE_rank, a.tE_degree)
        bad = out["counterexamples"]
    _emit(out, a.format)
    return EXIT_AUDIT if bad else EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-cap", type=int, default=None, help="largest degree processed (default 6)")
    common.add_argument("--vars", type=int, default=None, help="number of variables for finite output")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="parallel verification instances")

    p = argparse.ArgumentParser(prog="nsshuffle", description="Exact checks of nonsymmetric shuffle identities.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-shuffle", parents=[common], help="nabla^-m of compositional HL vs LLT and parking sums")
    s.add_argument("--alpha", required=True, help='strict composition "3,1" or "all:N"')
    s.add_argument("--m", type=int, default=1)
    s.set_defaults(func=cmd_verify_shuffle)

    s = sub.add_parser("verify-kmkn", parents=[common], help="rational (km, kn) identity")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.set_defaults(func=cmd_verify_kmkn)

    s = sub.add_parser("verify-classical", parents=[common], help="symmetric nabla^m C_alpha")
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--alpha", required=True)
    s.set_defaults(func=cmd_verify_classical)

    s = sub.add_parser("llt", parents=[common], help="flagged LLT polynomial of a marked path")
    s.add_argument("--mode", choices=("row", "col"), required=True)
    s.add_argument("--path", required=True)
    s.add_argument("--sigma", default="auto", help='"auto" or a marking like "1-3,2-4"')
    s.add_argument("--r", type=int, default=None, help="partial path height (with an explicit marking)")
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--signed", action="store_true")
    s.set_defaults(func=cmd_llt)

    s = sub.add_parser("nsmac", parents=[common], help="stable or modified nonsymmetric Macdonald polynomial")
    s.add_argument("--eta", default="")
    s.add_argument("--lambda", dest="la", default="")
    s.add_argument("--modified", action="store_true")
    s.add_argument("--finite", default=None, help="weak composition for the finite-variable E")
    s.set_defaults(func=cmd_nsmac)

    s = sub.add_parser("nabla", parents=[common], help="spectrum certificate on one graded piece")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_nabla)

    s = sub.add_parser("relations", parents=[common], help="defining relations on graded spanning sets")
    s.add_argument("--rmax", type=int, default=3)
    s.add_argument("--dmax", type=int, default=3)
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("atoms", parents=[common], help="stable-atom expansion or the positivity audit")
    s.add_argument("--input", default=None, help="JSON file holding a serialized element")
    s.add_argument("--max-degree", type=int, default=5)
    s.add_argument("--tE-rank", dest="tE_rank", type=int, default=2)
    s.add_argument("--tE-degree", dest="tE_degree", type=int, default=None)
    s.set_defaults(func=cmd_atoms)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.degree_cap is not None:
        os.environ["SHUFFLE_DEGREE_CAP"] = str(args.degree_cap)
        from . import nsmac

        nsmac.DEGREE_CAP = args.degree_cap
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
