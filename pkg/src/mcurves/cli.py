"""Command line front end and machine-readable reports.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 malformed
input (parse or validation errors), 3 unsupported singularity, 4 internal
inconsistency.
"""
import argparse
import hashlib
import json
import sys

from . import mtheory
from .arrangement import (conic_trace, defining_form, delete_component, singular_points,
                          validate, weak_combinatorics)
from .errors import DegreeTooSmall, InternalInconsistency, MCurveError, UnknownComponent
from .fileformat import parse_arrangement, parse_wc, serialize_arrangement
from .linalg import RankBackend
from .syzygy import Syzygies, m_curve_certify

SCHEMA_VERSION = 1


def _digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _wc_dict(wc):
    return {"d": wc.d, "k": wc.k, "counts": {str(r): n for r, n in wc.counts},
            "vector": str(wc)}


def _poly_dict(p):
    split = mtheory.splits_rationally(p)
    return {"c0": p.c0, "c1": p.c1, "c2": p.c2, "text": str(p),
            "splitting": list(split) if split else None}


def _point_dict(pt):
    w = pt.witness
    out = {"incidence": list(pt.incidence), "multiplicity": pt.multiplicity,
           "count": pt.local_count, "field_degree": pt.field_degree,
           "origin": list(w.origin)}
    if pt.field_degree == 1:
        out["coordinates"] = [int(c) for c in w.coords]
    else:
        out["modulus"] = [str(c) for c in w.modulus.coeffs]
    return out


def _arrangement_echo(arr):
    return {"lines": [str(f) for f in arr.lines], "conics": [str(f) for f in arr.conics]}


def _backend(args):
    return RankBackend("exact" if args.exact else "modular", seed=args.seed)


def _load(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    doc = parse_arrangement(text)
    return text, doc, validate(doc.arrangement)


def _base(name, args, digest):
    cmd = {"name": name}
    for key in ("file", "lines", "one_conic", "conic", "wc"):
        if hasattr(args, key):
            cmd[key] = getattr(args, key)
    cmd["seed"] = getattr(args, "seed", 0)
    cmd["mode"] = "exact" if getattr(args, "exact", False) else "modular"
    return {"schema_version": SCHEMA_VERSION, "command": cmd, "input_digest": digest}


# ---------------------------------------------------------------------------
# commands; each returns (report, exit_code)


def cmd_combinatorics(args):
    text, _, arr = _load(args.file)
    points = singular_points(arr, seed=args.seed)
    wc = weak_combinatorics(arr, points=points)
    rep = _base("combinatorics", args, _digest(text))
    rep.update({"arrangement": _arrangement_echo(arr), "weak_combinatorics": _wc_dict(wc),
                "points": [_point_dict(p) for p in points],
                "conic_traces": {f"C{j}": conic_trace(arr, f"C{j}", points=points)
                                 for j in range(arr.k)}})
    return rep, 0


def cmd_certify(args):
    text, _, arr = _load(args.file)
    backend = _backend(args)
    points = singular_points(arr, seed=args.seed)
    wc = weak_combinatorics(arr, points=points)
    syz = Syzygies(defining_form(arr), backend)
    cert = m_curve_certify(arr, seed=args.seed, points=points, syz=syz)
    report = syz.report()
    verdicts = [v.as_dict() for v in mtheory.check_all(wc)]
    traces = {f"C{j}": conic_trace(arr, f"C{j}", points=points) for j in range(arr.k)}
    if arr.k == 1 and arr.d >= 3:
        verdicts.append(mtheory.mvp_allowed(arr.d, traces["C0"]).as_dict())
    p_cl = mtheory.poincare_cl(wc)
    p_curve = mtheory.poincare_curve(arr.degree, report.tau)
    split = mtheory.splits_rationally(p_cl)
    rep = _base("certify", args, _digest(text))
    rep.update({
        "arrangement": _arrangement_echo(arr),
        "weak_combinatorics": _wc_dict(wc),
        "conic_traces": traces,
        "syzygy": report.as_dict(),
        "verdicts": verdicts,
        "poincare": {"combinatorial": _poly_dict(p_cl), "curve": _poly_dict(p_curve),
                     "agree": p_cl == p_curve,
                     "matches_exponents": (split is not None and report.exponents is not None
                                           and tuple(split) == tuple(report.exponents))},
        "certificate": cert,
        "is_m_arrangement": cert["is_m_arrangement"],
        "backend": backend.metadata(),
    })
    return rep, 0 if cert["is_m_arrangement"] else 1


def cmd_enumerate(args):
    d = args.lines
    rows = []
    traces = mtheory.admissible_traces(d) if d >= 3 else []
    for n2, n3, n4 in sorted(mtheory.enumerate_one_conic(d), reverse=True):
        wc = mtheory.WeakCombinatorics.from_sequence(d, 1, [n2, n3, n4])
        rows.append({"n": [n2, n3, n4], "vector": str(wc),
                     "char": mtheory.char_check(wc).as_dict(),
                     "bezout": mtheory.bezout_check(wc).as_dict(),
                     "admissible_r": traces,
                     "poincare": _poly_dict(mtheory.poincare_cl(wc))})
    rep = _base("enumerate", args, _digest(f"enumerate:{d}"))
    rep.update({"lines": d, "conics": 1, "exponents": list(mtheory.m_one_conic_exponents(d)),
                "rows": rows})
    return rep, 0


def cmd_check(args):
    wc = parse_wc(args.wc)
    verdicts = mtheory.check_all(wc)
    rep = _base("check", args, _digest(args.wc))
    rep.update({"weak_combinatorics": _wc_dict(wc), "tau": mtheory.tau_of(wc),
                "verdicts": [v.as_dict() for v in verdicts],
                "poincare": _poly_dict(mtheory.poincare_cl(wc))})
    return rep, 0 if all(v.satisfied for v in verdicts) else 1


def cmd_delete_conic(args):
    text, _, arr = _load(args.file)
    cid = f"C{args.conic}"
    if args.conic < 0 or args.conic >= arr.k:
        raise UnknownComponent(f"no conic with index {args.conic}")
    backend = _backend(args)
    points = singular_points(arr, seed=args.seed)
    wc = weak_combinatorics(arr, points=points)
    r = conic_trace(arr, cid, points=points)
    rest = validate(delete_component(arr, cid))
    wc_rest = weak_combinatorics(rest, seed=args.seed)
    p_cl = mtheory.poincare_cl(wc)
    p_direct = mtheory.poincare_cl(wc_rest)
    identity = mtheory.deletion_identity_check(p_cl, p_direct, r)
    if not identity.satisfied:
        raise InternalInconsistency(f"deletion identity fails: {identity}")
    formula = None
    is_m = None
    if arr.k == 1 and arr.d >= 3:
        formula = mtheory.poincare_of_deletion(arr.d, r)
        try:
            is_m = m_curve_certify(arr, backend, seed=args.seed, points=points)["is_m_arrangement"]
        except DegreeTooSmall:
            is_m = False
        if is_m and formula != p_direct:
                raise InternalInconsistency("deletion polynomial formula disagrees with recomputation")
    syz = Syzygies(defining_form(rest), backend)
    report = syz.report(with_generators=True)
    split = mtheory.splits_rationally(p_direct)
    bound = mtheory.mdr_lower_bound_lines(rest.d)
    rep = _base("delete-conic", args, _digest(text))
    rep.update({
        "conic": cid,
        "r": r,
        "weak_combinatorics": _wc_dict(wc),
        "deleted_weak_combinatorics": _wc_dict(wc_rest),
        "full_is_m_arrangement": is_m,
        "poincare": {
            "formula": _poly_dict(formula) if formula else None,
            "recomputed": _poly_dict(p_direct),
            "routes_agree": formula == p_direct if formula else None,
            "identity": identity.as_dict(),
        },
        "splitting": list(split) if split else None,
        "mdr_lower_bound": {"value": bound, "advisory": rest.d % 2 == 1 or rest.k > 0,
                            "splitting_refuted": bool(split and split[0] < bound)},
        "syzygy": report.as_dict(),
        "deleted_is_free": report.is_free,
        "backend": backend.metadata(),
    })
    return rep, 0


# ---------------------------------------------------------------------------
# text rendering


def _render(rep):
    name = rep["command"]["name"]
    out = []
    if "weak_combinatorics" in rep:
        out.append(f"weak combinatorics: {rep['weak_combinatorics']['vector']}")
    if name == "combinatorics":
        for p in rep["points"]:
            where = p.get("coordinates") or f"orbit of degree {p['field_degree']}"
            out.append(f"  {p['multiplicity']}-fold x{p['count']}: "
                       f"{','.join(p['incidence'])} at {where}")
    if "syzygy" in rep:
        s = rep["syzygy"]
        out.append(f"tau = {s['tau']}, mdr = {s['mdr']}, free = {s['is_free']}, "
                   f"exponents = {s['exponents']}")
        out.append(f"ct = {s['ct']}, st = {s['st']}, reg M(f) = {s['reg_M']}, "
                   f"reg AR(f) = {s['reg_AR']}")
        if s.get("generator_degrees") is not None:
            out.append(f"generator degrees of AR(f): {s['generator_degrees']}")
    for v in rep.get("verdicts", []):
        mark = "ok  " if v["satisfied"] else "FAIL"
        out.append(f"[{mark}] {v['rule']}: {v['lhs']} vs {v['rhs']} {v['note']}".rstrip())
    if name == "certify":
        out.append(f"Poincare polynomial: {rep['poincare']['combinatorial']['text']}, "
                   f"splitting {rep['poincare']['combinatorial']['splitting']}")
        out.append(f"M-arrangement: {rep['is_m_arrangement']}")
    if name == "delete-conic":
        out.append(f"r = {rep['r']}")
        out.append(f"P(L; t) = {rep['poincare']['recomputed']['text']}, "
                   f"splitting {rep['splitting']}")
        out.append(f"deleted arrangement free: {rep['deleted_is_free']}")
    if name == "enumerate":
        out.append(f"{len(rep['rows'])} admissible weak combinatorics for "
                   f"{rep['lines']} lines and one conic")
        for row in rep["rows"]:
            out.append(f"  {row['vector']}  P = {row['poincare']['text']}")
        if rep["rows"]:
            out.append(f"  admissible r: {rep['rows'][0]['admissible_r']}")
    return "\n".join(out)


def dump_json(rep):
    return json.dumps(rep, sort_keys=True, indent=2)


def _global_flags(suppress):
    # flags may appear before or after the subcommand; the subcommand copy
    # must not overwrite values given earlier, hence SUPPRESS there
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit a JSON report", **kw)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact ranks everywhere", **kw)
    mode.add_argument("--modular", action="store_true",
                      help="modular ranks, exact checks for verdicts (default)", **kw)
    p.add_argument("--seed", type=int, help="seed for primes and shears",
                   **(kw or {"default": 0}))
    return p


def build_parser():
    common = _global_flags(suppress=True)

    parser = argparse.ArgumentParser(prog="mcurves", parents=[_global_flags(False)],
                                     description="M-arrangements of conics and lines")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("certify", parents=[common], help="full certification pipeline")
    p.add_argument("file")
    p.set_defaults(func=cmd_certify)
    p = sub.add_parser("combinatorics", parents=[common], help="singular points only")
    p.add_argument("file")
    p.set_defaults(func=cmd_combinatorics)
    p = sub.add_parser("enumerate", parents=[common], help="one-conic weak combinatorics")
    p.add_argument("--lines", type=int, required=True)
    p.add_argument("--one-conic", action="store_true", default=True)
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("check", parents=[common], help="constraints on a weak combinatorics")
    p.add_argument("--wc", required=True, help="d,k;n2,n3,...")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("delete-conic", parents=[common], help="delete a conic and compare")
    p.add_argument("file")
    p.add_argument("--conic", type=int, default=0)
    p.set_defaults(func=cmd_delete_conic)
    return parser


def run(argv):
    """Parse ``argv`` and run; returns (output text, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep, code = args.func(args)
    except MCurveError as exc:
        err = {"schema_version": SCHEMA_VERSION, "error": type(exc).__name__,
               "message": str(exc), "exit_code": exc.exit_code}
        text = dump_json(err) if args.json else f"error: {type(exc).__name__}: {exc}"
        return text, exc.exit_code
    except OSError as exc:
        return f"error: {exc}", 2
    return (dump_json(rep) if args.json else _render(rep)), code


def main(argv=None):
    text, code = run(sys.argv[1:] if argv is None else argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["main", "run", "build_parser", "serialize_arrangement", "cmd_certify",
           "cmd_enumerate", "cmd_check", "cmd_delete_conic", "cmd_combinatorics"]
