"""Command-line front end.

Exit codes: 0 on success or pass, 1 when a checked property fails, 2 on
usage or input errors.  ``-`` reads stdin or writes stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from . import constructions
from .certification import enumerate_induced_equators, question_1_5_report
from .complex import SimplicialComplex, boundary_complex, is_flag, minimal_nonfaces
from .homology import Field, betti_numbers
from .io import dumps, read_complex
from .isomorphism import is_isomorphic
from .recognition import certify_3_sphere
from .search import WalkConfig, harvest
from .vectors import face_vectors

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

START_TARGETS = ("delta", "diamond4")


class UsageError(Exception):
    pass


def build_target(target: str, shelling_order: bool = True) -> SimplicialComplex:
    if target == "gamma1":
        return constructions.gamma1()
    if target == "gamma2":
        return constructions.gamma2()
    if target == "boundary":
        return boundary_complex(constructions.gamma1())
    if target == "delta":
        return constructions.delta_12_33(shelling_order=shelling_order)
    if target.startswith("diamond"):
        return constructions.diamond(_int_suffix(target, "diamond"))
    if target.startswith("join:"):
        k = _int_suffix(target, "join:")
        return constructions.k_fold_join(constructions.delta_12_33(shelling_order), k)
    raise UsageError(f"unknown build target {target!r}")


def _int_suffix(target: str, prefix: str) -> int:
    try:
        k = int(target[len(prefix):])
    except ValueError:
        raise UsageError(f"bad build target {target!r}") from None
    if k < 1:
        raise UsageError(f"bad build target {target!r}")
    return k


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def cmd_build(args) -> int:
    C = build_target(args.target, shelling_order=args.shelling_order)
    text = dumps(C)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_OK


def cmd_report(args) -> int:
    C = read_complex(args.file)
    vec = face_vectors(C)
    degrees = {lab: C.degree(C.index(lab)) for lab in C.vertices}
    nonfaces = minimal_nonfaces(C)
    data = {
        "n_vertices": C.n_vertices,
        "dim": C.dim,
        **vec.as_dict(),
        "degrees": degrees,
        "degree_profile": sorted(set(degrees.values())),
        "flag": is_flag(C),
        "minimal_nonfaces": [list(C.names(m)) for m in nonfaces],
    }
    lines = [
        f"vertices: {C.n_vertices}  dim: {C.dim}",
        f"f = {vec.f}",
        f"h = {vec.h}",
        f"gamma = {vec.gamma if vec.gamma is not None else 'undefined'}",
        f"degrees: {' '.join(f'{k}:{v}' for k, v in degrees.items())}",
        f"flag: {data['flag']}  ({len(nonfaces)} minimal non-faces)",
    ]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_certify(args) -> int:
    C = read_complex(args.file)
    cert = certify_3_sphere(C, check_shelling=args.shelling)
    passed = cert.closed_3_manifold and cert.homology_sphere
    if args.shelling:
        passed = passed and cert.sphere
    if args.full:
        rep = question_1_5_report(C, threads=args.threads)
        data = rep.as_dict()
        data["sphere"] = cert.as_dict()
        passed = passed and bool(rep.question_1_5)
        text = _full_text(C, rep, cert)
    else:
        data = cert.as_dict()
        text = _cert_text(cert)
    data["pass"] = passed
    _emit(args, data, text + f"\nresult: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_FAIL


def _cert_text(cert) -> str:
    lines = [
        f"closed 3-manifold: {cert.closed_3_manifold}",
        f"reduced betti gf2: {cert.reduced_betti_gf2}  q: {cert.reduced_betti_q}",
    ]
    if cert.bad_vertex is not None:
        lines.append(f"bad vertex: {cert.bad_vertex}")
    if cert.shelling is not None:
        lines.append(f"shelling: {'ok' if cert.shelling.ok else f'fails at {cert.shelling.failed_at}'}")
    lines.append(f"strength: {cert.strength}")
    lines.extend(f"note: {n}" for n in cert.notes)
    return "\n".join(lines)


def _full_text(C, rep, cert) -> str:
    lines = [_cert_text(cert), f"flag: {rep.flag}"]
    lines.append(f"suspension: {' '.join(rep.suspension) if rep.suspension else 'no'}")
    lines.append(f"contractible edges: {len(rep.contractible_edges)}")
    if rep.equators is None:
        lines.append(f"equators: {rep.equator_note}")
    else:
        links = sum(e.link_of is not None for e in rep.equators)
        lines.append(f"equators: {len(rep.equators)} ({links} are vertex links)")
    lines.append(f"irreducible: {rep.question_1_5}")
    return "\n".join(lines)


def cmd_equators(args) -> int:
    C = read_complex(args.file)
    eqs = enumerate_induced_equators(C, threads=args.threads)
    data = {"count": len(eqs), "equators": [e.as_dict(C) for e in eqs]}
    data["all_links"] = all(e.link_of is not None for e in eqs)
    lines = [f"{len(eqs)} induced equators"]
    for e in eqs:
        lines.append(f"  {' '.join(C.names(e.S))}  link of {e.link_of or '-'}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_homology(args) -> int:
    C = read_complex(args.file)
    fld = Field(args.field)
    full = betti_numbers(C, fld, reduced=False)
    red = betti_numbers(C, fld, reduced=True)
    data = {"field": fld.value, "betti": full, "reduced_betti": red}
    rows = [f"field {fld.value}", "k  betti  reduced"]
    rows += [f"{k}  {b}  {r}" for k, (b, r) in enumerate(zip(full, red))]
    _emit(args, data, "\n".join(rows))
    return EXIT_OK


def cmd_search(args) -> int:
    start = build_target(args.start) if args.start in START_TARGETS else read_complex(args.start)
    cfg = WalkConfig(
        seed=args.seed,
        n_subdivisions=args.subdivide,
        n_contractions=args.contract,
        max_vertices=args.max_vertices,
    )
    res = harvest(start, cfg, args.steps, out_dir=args.harvest, vertex_range=(args.min_n, args.max_n))
    data = {"walks": res.walks, "steps": res.steps, "truncated": res.truncated, "finds": res.finds}
    lines = [f"{res.walks} walks, {res.steps} moves, {len(res.finds)} finds"]
    lines += [f"  seed {f['seed']}: {f['n_vertices']} vertices, f = {tuple(f['f'])}" for f in res.finds]
    _emit(args, data, "\n".join(lines))
    ok = all(f.get("recertified", True) for f in res.finds)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_iso(args) -> int:
    A, B = read_complex(args.file1), read_complex(args.file2)
    m = is_isomorphic(A, B)
    data = {"isomorphic": m is not None, "map": m}
    _emit(args, data, "isomorphic" if m else "not isomorphic")
    return EXIT_OK if m is not None else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagsphere", description="Flag simplicial spheres toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    b = sub.add_parser("build", help="write a built-in complex as JSON")
    b.add_argument("target", help="gamma1, gamma2, boundary, delta, diamond<d> or join:<k>")
    b.add_argument("--shelling-order", "--paper-order", dest="shelling_order", action="store_true", default=True,
                   help="keep the shelling facet order (default)")
    b.add_argument("--canonical-order", dest="shelling_order", action="store_false",
                   help="list the first solid torus facets first")
    b.add_argument("-o", "--output", default="-")
    b.set_defaults(func=cmd_build)

    r = with_json(sub.add_parser("report", help="face vectors, degrees, flagness"))
    r.add_argument("file")
    r.set_defaults(func=cmd_report)

    c = with_json(sub.add_parser("certify", help="3-sphere certificate"))
    c.add_argument("file")
    c.add_argument("--shelling", action="store_true", help="check the stored facet order is a shelling")
    c.add_argument("--full", action="store_true", help="also decide the three irreducibility properties")
    c.add_argument("--threads", type=int, default=1)
    c.set_defaults(func=cmd_certify)

    e = with_json(sub.add_parser("equators", help="list induced equators"))
    e.add_argument("file")
    e.add_argument("--threads", type=int, default=1)
    e.set_defaults(func=cmd_equators)

    h = with_json(sub.add_parser("homology", help="Betti numbers"))
    h.add_argument("file")
    h.add_argument("--field", choices=[f.value for f in Field], default=Field.GF2.value)
    h.set_defaults(func=cmd_homology)

    s = with_json(sub.add_parser("search", help="random subdivide/contract walks"))
    s.add_argument("--start", default="delta", help="delta, diamond4 or a complex file")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--subdivide", type=int, default=40)
    s.add_argument("--contract", type=int, default=100)
    s.add_argument("--steps", type=int, default=1000, help="total moves over all walks")
    s.add_argument("--max-vertices", type=int, default=64)
    s.add_argument("--min-n", type=int, default=13)
    s.add_argument("--max-n", type=int, default=16)
    s.add_argument("--harvest", metavar="OUT_DIR", default=None)
    s.set_defaults(func=cmd_search)

    i = with_json(sub.add_parser("iso", help="test two complexes for isomorphism"))
    i.add_argument("file1")
    i.add_argument("file2")
    i.set_defaults(func=cmd_iso)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"flagsphere: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
