"""Command-line front end.  Every command prints one JSON document.

Exit status: 0 for success or a true verdict, 1 for a refusal or a false
verdict, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .certificate import ADAMS, Certificate, Refusal, certify_link
from .diagram import Diagram, DiagramError, canonical_relabel, digest, validate
from .framework import PlanarFramework, Replacement, certify_framework, compose
from .moves import search_reduce
from .resolution import (A, A_INV, is_adequate_link, is_alternating_link, is_reduced_link,
                         resolve_all)
from .spatial import (adams_hypotheses, is_adequate_spatial, is_alternating_spatial, is_link,
                      is_reduced_spatial)
from .tangle import associated_tangle, certify_one_vertex, double_tangle

OK, FALSE, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def diagram_json(d: Diagram):
    return canonical_relabel(d).to_json()


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not JSON: {e}") from e


def load_input(args) -> Diagram:
    if args.fixture:
        return fixtures.load(args.fixture, args.fixture_dir)
    if not args.input:
        raise InputError("give a diagram file or --fixture NAME")
    obj = _read_json(args.input)
    try:
        return Diagram.from_json(obj)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed diagram: {e}") from e


def certify(d: Diagram):
    """Pick the certification route that fits the shape of the diagram."""
    report = validate(d)
    if not report:
        raise DiagramError(f"invalid diagram: {report.violations}")
    if is_link(d):
        return certify_link(d)
    verts = d.vertices
    if len(verts) == 1 and len(verts[0].rotation) % 2 == 0:
        return certify_one_vertex(d)
    if verts and all(v.rigid for v in verts):
        rep = adams_hypotheses(d)
        if rep.ok:
            return Certificate(digest(d), d.crossing_count(), ADAMS)
        return Refusal(digest(d), "rigid-vertex hypotheses fail: " + ", ".join(rep.failures),
                       rep.to_json())
    return Refusal(digest(d), "no certification route applies to this diagram")


def _verdict(check):
    out = {"ok": bool(check)}
    witness = getattr(check, "witness", None)
    if witness is not None:
        out["witness"] = witness.to_json()
    return out


def cmd_validate(args):
    d = load_input(args)
    rep = validate(d)
    return (OK if rep else FALSE), {"valid": rep.ok, "violations": rep.violations}


def cmd_resolve(args):
    d = load_input(args)
    kind = {"A": A, "AInverse": A_INV, "A-1": A_INV}[args.kind]
    sc = resolve_all(d, kind)
    out = sc.to_json()
    out["nCircles"] = sc.n_circles
    return OK, out


def cmd_check(args):
    d = load_input(args)
    wanted = [k for k in ("reduced", "alternating", "adequate", "adams") if getattr(args, k)]
    if not wanted:
        wanted = ["reduced", "alternating", "adequate"]
    out = {}
    link = is_link(d)
    for k in wanted:
        if k == "adams":
            rep = adams_hypotheses(d)
            out[k] = dict(rep.to_json(), ok=rep.ok)
        elif link:
            fn = {"reduced": is_reduced_link, "alternating": is_alternating_link,
                  "adequate": is_adequate_link}[k]
            out[k] = {"ok": fn(d)}
        else:
            fn = {"reduced": is_reduced_spatial, "alternating": is_alternating_spatial,
                  "adequate": is_adequate_spatial}[k]
            out[k] = _verdict(fn(d))
    return (OK if all(v["ok"] for v in out.values()) else FALSE), out


def cmd_certify(args):
    res = certify(load_input(args))
    return (OK if res.ok else FALSE), res.to_json()


def cmd_double(args):
    d = load_input(args)
    t = associated_tangle(d)
    link = double_tangle(t)
    return OK, {"tangleCrossings": t.crossing_count(), "crossings": link.crossing_count(),
                "adequate": is_adequate_link(link), "link": diagram_json(link)}


def _framework_inputs(args):
    if args.fixture:
        return fixtures.load_framework(args.fixture, args.fixture_dir)
    if not (args.framework and args.replacements):
        raise InputError("give framework and replacements files, or --fixture NAME")
    try:
        p = PlanarFramework(Diagram.from_json(_read_json(args.framework)))
        reps = [Replacement.from_json(obj) for obj in _read_json(args.replacements)]
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, DiagramError):
            raise
        raise InputError(f"malformed framework input: {e}") from e
    return p, reps


def cmd_compose(args):
    p, reps = _framework_inputs(args)
    g = compose(p, reps)
    out = {"crossings": g.crossing_count(), "diagram": diagram_json(g)}
    code = OK
    if args.certify:
        res = certify_framework(p, reps)
        out["certificate"] = res.to_json()
        code = OK if res.ok else FALSE
    return code, out


def cmd_search(args):
    d = load_input(args)
    runs = []
    for s in range(args.seed, args.seed + args.seeds):
        tr = search_reduce(d, budget=args.budget, seed=s, rigid_aware=not args.ignore_rigid)
        runs.append(tr.to_json() if args.trace else
                    {"seed": s, "bestCount": tr.best_count, "steps": len(tr.steps)})
    best = min(r["bestCount"] for r in runs)
    return OK, {"start": d.crossing_count(), "best": best,
                "reduced": best < d.crossing_count(), "runs": runs}


def cmd_fixtures(args):
    if args.name:
        return OK, fixtures.load_raw(args.name, args.fixture_dir)
    return OK, {"fixtures": fixtures.names(args.fixture_dir)}


def build_parser():
    ap = argparse.ArgumentParser(prog="crossmin", description=__doc__.splitlines()[0])
    ap.add_argument("--fixture-dir", default=None, help="read fixtures from this directory")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", help="diagram JSON file")
        p.add_argument("--fixture", help="use a built-in diagram")
        return p

    with_input(sub.add_parser("validate")).set_defaults(fn=cmd_validate)
    p = with_input(sub.add_parser("resolve"))
    p.add_argument("--kind", choices=["A", "AInverse", "A-1"], default="A")
    p.set_defaults(fn=cmd_resolve)
    p = with_input(sub.add_parser("check"))
    for flag in ("reduced", "alternating", "adequate", "adams"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(fn=cmd_check)
    with_input(sub.add_parser("certify")).set_defaults(fn=cmd_certify)
    with_input(sub.add_parser("double")).set_defaults(fn=cmd_double)
    p = sub.add_parser("compose")
    p.add_argument("framework", nargs="?")
    p.add_argument("replacements", nargs="?")
    p.add_argument("--fixture")
    p.add_argument("--certify", action="store_true")
    p.set_defaults(fn=cmd_compose)
    p = with_input(sub.add_parser("search"))
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--trace", action="store_true", help="include every move")
    p.add_argument("--ignore-rigid", action="store_true", help="allow twists at rigid vertices")
    p.set_defaults(fn=cmd_search)
    p = sub.add_parser("fixtures")
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=cmd_fixtures)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    try:
        code, payload = args.fn(args)
    except (InputError, DiagramError) as e:
        payload = {"error": type(e).__name__, "message": str(e)}
        code = BAD_INPUT
    out.write(dumps(payload) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
