"""Command-line frontend.  Every subcommand reads a triangulation file and
prints one JSON document on stdout; domain errors go to stderr as
``{"error": code, "detail": text}`` with exit status 1.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import homext as hx
from . import mutation as mu
from . import objects as ob
from . import qp
from . import surface as sf
from .errors import SurfcatError
from .fixtures import example_annulus, genus_one_torus


def _load(path: str) -> sf.Triangulation:
    with open(path, "r", encoding="utf-8") as fh:
        return sf.from_json_dict(json.load(fh))


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _quiver_doc(T: sf.Triangulation) -> dict:
    q, w, rel = qp.qp_from_triangulation(T)
    return {
        "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "source": a.source, "target": a.target}
                   for a in q.arrows],
        "potential_cycles": [list(c) for c in w.cycles],
    }


def _object_doc(T: sf.Triangulation, x: ob.ObjectC) -> str:
    return ob.format_object(T, x)


def cmd_validate(args) -> None:
    T = _load(args.file)
    _emit({"ok": True, "internal_arcs": T.n_internal})


def cmd_qp(args) -> None:
    T = _load(args.file)
    if args.dot:
        q, w, rel = qp.qp_from_triangulation(T)
        sys.stdout.write(qp.to_dot(q, w))
        return
    _emit(_quiver_doc(T))


def cmd_flip(args) -> None:
    T = _load(args.file)
    T2, rec = T.flip(args.arc)
    _emit({"triangulation": sf.to_json_dict(T2), "new_arc": rec.new_arc})


def cmd_ar(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    x = ob.parse_object(T, alg, args.object)
    tri = ob.ar_triangle(T, alg, x)
    _emit({
        "source": _object_doc(T, tri.source),
        "middle": [_object_doc(T, m) for m in tri.middle],
        "target": _object_doc(T, tri.target),
    })


def cmd_hom(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    x = ob.parse_object(T, alg, getattr(args, "from"))
    y = ob.parse_object(T, alg, args.to)
    _emit({"dim": hx.hom_c_dim(T, alg, x, y)})


def cmd_ext(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    x = ob.parse_object(T, alg, getattr(args, "from"))
    y = ob.parse_object(T, alg, args.to)
    _emit({"dim": hx.ext1_c_dim(T, alg, x, y)})


def cmd_rigid(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    x = ob.parse_object(T, alg, args.object)
    _emit({"rigid": hx.is_rigid(T, alg, x)})


def cmd_smooth(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    x = ob.parse_object(T, alg, getattr(args, "from"))
    y = ob.parse_object(T, alg, args.to)
    _emit(hx.smooth_crossing(T, alg, x, y).to_json())


def cmd_resolve_self(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    x = ob.parse_object(T, alg, args.object)
    _emit(hx.resolve_self_crossing(T, alg, x).to_json())


def cmd_enumerate(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    found = ob.enumerate_objects(T, alg, args.max_len)
    _emit({
        "arcs": [_object_doc(T, x) for x in found["arcs"]],
        "strings": [_object_doc(T, x) for x in found["strings"]],
        "bands": ["band:" + ",".join(str(l) for l in b.letters)
                  for b in found["bands"]],
    })


def cmd_flip_path(args) -> None:
    T1 = _load(args.file)
    T2 = _load(args.other)
    _emit({"flips": mu.flip_path(T1, T2)})


def cmd_ct_check(args) -> None:
    T = _load(args.file)
    alg = qp.algebra_of(T)
    objs = [ob.parse_object(T, alg, s) for s in args.object]
    ok, found = mu.cluster_tilting_check(T, objs)
    doc = {"ok": ok}
    if found is not None:
        doc["triangulation"] = sf.to_json_dict(found)
    _emit(doc)


def cmd_serve(args) -> None:
    from .service import serve
    serve(_load(args.file), port=args.port)


def cmd_fixture(args) -> None:
    name = args.name
    if name.startswith("polygon"):
        T = sf.polygon(int(name[len("polygon"):]))
    elif name.startswith("annulus"):
        t1, t2 = name[len("annulus"):].split(",")
        T = sf.annulus(int(t1), int(t2))
    elif name == "example-annulus":
        T = example_annulus()
    elif name == "genus1":
        T = genus_one_torus()
    else:
        raise SurfcatError(f"unknown fixture {name!r}")
    _emit(sf.to_json_dict(T))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="surfcat",
        description="triangulated marked surfaces: strings, flips and mutations")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, *, file=True):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        if file:
            p.add_argument("file", help="triangulation JSON file")
        return p

    add("validate", cmd_validate)
    p = add("qp", cmd_qp)
    p.add_argument("--dot", action="store_true")
    p = add("flip", cmd_flip)
    p.add_argument("--arc", type=int, required=True)
    p = add("ar", cmd_ar)
    p.add_argument("--object", required=True)
    for name, fn in (("hom", cmd_hom), ("ext", cmd_ext), ("smooth", cmd_smooth)):
        p = add(name, fn)
        p.add_argument("--from", required=True)
        p.add_argument("--to", required=True)
    p = add("rigid", cmd_rigid)
    p.add_argument("--object", required=True)
    p = add("resolve-self", cmd_resolve_self)
    p.add_argument("--object", required=True)
    p = add("enumerate", cmd_enumerate)
    p.add_argument("--max-len", type=int, default=6)
    p = add("flip-path", cmd_flip_path)
    p.add_argument("other", help="target triangulation JSON file")
    p = add("ct-check", cmd_ct_check)
    p.add_argument("--object", action="append", required=True)
    p = add("serve", cmd_serve)
    p.add_argument("--port", type=int, default=None)
    p = sub.add_parser("fixture")
    p.set_defaults(fn=cmd_fixture)
    p.add_argument("name", help="polygonN | annulusP,Q | example-annulus | genus1")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.fn(args)
    except SurfcatError as exc:
        sys.stderr.write(json.dumps(
            {"error": exc.code, "detail": exc.detail}) + "\n")
        return 1
    except FileNotFoundError as exc:
        sys.stderr.write(json.dumps(
            {"error": "FileNotFound", "detail": str(exc)}) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
