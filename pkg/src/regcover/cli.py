"""Command-line interface.

Exit codes: 0 success, 1 negative decision, 2 input error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dot as dotmod
from . import textfmt
from .atoms import classify_primitive, find_atoms
from .blocks import block_tree
from .errors import GraphError, ParseError, SizeLimitError
from .fixtures import expansion_corpus, run_fixture_cases
from .graph import normalize, validate, with_halvable_edges
from .groups import automorphism_group, orbits, semiregular_subgroups
from .iso import are_isomorphic
from .quotient import all_quotients, expand_step, regular_cover_test
from .reduction import load_sidecar_steps, reduction_series

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def _read(path, args=None):
    try:
        g = textfmt.parse_file(path)
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")
    if args is not None and getattr(args, "halvable_input", False):
        g = with_halvable_edges(g)
    return g


def _prepared(path, args=None):
    return normalize(_read(path, args))


def cmd_validate(args):
    g = _read(args.file)
    problems = validate(g)
    if problems:
        for p in problems:
            print(f"violation: {p}")
        return EXIT_NO
    print("ok")
    return EXIT_OK


def cmd_iso(args):
    g1, g2 = _read(args.file1), _read(args.file2)
    witness = are_isomorphic(g1, g2, max_vertices=args.max_vertices)
    if witness is None:
        print("not isomorphic")
        return EXIT_NO
    print("isomorphic")
    if args.witness:
        for h in sorted(witness):
            print(f"  {h} -> {witness[h]}")
    return EXIT_OK


def cmd_aut(args):
    g = _read(args.file, args)
    if args.semiregular is not None:
        subs = semiregular_subgroups(g, order=args.semiregular,
                                     max_order=args.max_group_order)
        print(f"semiregular subgroups of order {args.semiregular}: {len(subs)}")
        for i, s in enumerate(subs):
            print(f"subgroup {i}:")
            for p in s.elements:
                print(f"  {p.vertex_map()}")
        return EXIT_OK
    grp = automorphism_group(g, max_order=args.max_group_order)
    print(f"automorphism group order: {grp.order}")
    print("vertex orbits:")
    for orb in orbits(grp, "vertices"):
        print("  " + " ".join(orb))
    return EXIT_OK


def cmd_blocks(args):
    g = _read(args.file)
    bt = block_tree(g)
    if args.dot:
        print(dotmod.block_tree_to_dot(bt), end="")
        return EXIT_OK
    for i, ref in enumerate(bt.blocks):
        vs = " ".join(sorted(ref.vertices))
        print(f"block {i}: vertices {vs} ({len(ref.darts) // 2} edges)")
    print("articulations: " + (" ".join(sorted(bt.articulations)) or "-"))
    kind, what = bt.center
    print(f"center: {kind} {what}")
    return EXIT_OK


def cmd_atoms(args):
    g = _prepared(args.file, args)
    found = find_atoms(g)
    if args.dot:
        print(dotmod.atoms_to_dot(g, found), end="")
        return EXIT_OK
    cls = classify_primitive(g)
    if not found:
        print(f"primitive: {cls.tag}"
              + (f"({cls.n})" if cls.n else ""))
        return EXIT_OK
    for i, a in enumerate(found):
        print(f"atom {i}: {a.kind} boundary={','.join(a.boundary)} "
              f"symmetry={a.symmetry} "
              f"vertices={','.join(sorted(a.ref.vertices))}")
    return EXIT_OK


def cmd_reduce(args):
    g = _prepared(args.file, args)
    series = reduction_series(g)
    if args.dot:
        print(dotmod.reduction_tree_to_dot(series), end="")
        return EXIT_OK
    base, _ = os.path.splitext(args.file)
    sidecar = {"version": 1, "levels": []}
    for i, step in enumerate(series.steps):
        out = f"{base}.g{i + 1}.g"
        textfmt.write_file(step.target, out)
        print(f"wrote {out}")
        sidecar["levels"].append({
            "level": i,
            "classes": [{
                "color": cls.color,
                "kind": cls.kind,
                "symmetry": cls.symmetry,
                "boundary": list(cls.rep_boundary),
                "members": len(cls.members),
                "graph": textfmt.serialize(cls.rep_graph),
            } for cls in step.classes],
        })
    sidecar["primitive"] = series.primitive.tag
    side = f"{base}.reduction.json"
    with open(side, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {side}")
    print(f"levels: {series.depth}, primitive: {series.primitive.tag}")
    return EXIT_OK


def cmd_quotients(args):
    g = _prepared(args.file, args)
    qs = all_quotients(g, via=args.via, max_order=args.max_group_order)
    base, _ = os.path.splitext(args.file)
    index = []
    for i, q in enumerate(qs):
        out = f"{base}.q{i}.g"
        textfmt.write_file(q, out)
        index.append({"file": os.path.basename(out),
                      "vertices": q.n_vertices,
                      "halfedges": len(q.halfedges)})
        print(f"wrote {out}")
    with open(f"{base}.quotients.json", "w", encoding="utf-8") as fh:
        json.dump({"via": args.via, "quotients": index}, fh, indent=2,
                  sort_keys=True)
        fh.write("\n")
    print(f"{len(qs)} quotients (via {args.via})")
    return EXIT_OK


def cmd_expand(args):
    try:
        with open(args.sidecar, encoding="utf-8") as fh:
            payload = json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"no such file: {args.sidecar}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"sidecar is not valid JSON: {exc}")
    steps = load_sidecar_steps(payload)
    h = _read(args.quotient)
    level = args.level if args.level is not None else len(steps)
    if level > len(steps) or level < 1:
        raise GraphError(f"level must be in 1..{len(steps)}")
    current = [h]
    for step in reversed(steps[:level]):
        nxt = []
        for hh in current:
            nxt.extend(expand_step(hh, step))
        current = nxt
    base, _ = os.path.splitext(args.quotient)
    for i, hh in enumerate(current):
        out = f"{base}.x{i}.g"
        textfmt.write_file(hh, out)
        print(f"wrote {out}")
    print(f"{len(current)} expansions")
    return EXIT_OK


def cmd_cover(args):
    g = _prepared(args.gfile, args)
    h = _prepared(args.hfile, args)
    witness = regular_cover_test(g, h, max_order=args.max_group_order)
    if witness is None:
        print("no")
        return EXIT_NO
    print(f"yes (group order {witness.order})")
    for p in witness.elements:
        print(f"  {p.vertex_map()}")
    return EXIT_OK


def cmd_dot(args):
    g = _read(args.file)
    print(dotmod.graph_to_dot(g), end="")
    return EXIT_OK


def cmd_fixtures(args):
    if args.action == "run":
        failures = run_fixture_cases()
        failures += _run_random_checks(args.seed)
        return EXIT_OK if failures == 0 else EXIT_NO
    outdir = args.dir or os.environ.get("REGCOVER_FIXTURE_DIR") or "fixtures-out"
    os.makedirs(outdir, exist_ok=True)
    for name, g in expansion_corpus():
        path = os.path.join(outdir, f"{name}.g")
        textfmt.write_file(g, path)
        print(f"wrote {path}")
    return EXIT_OK


def _run_random_checks(seed, count=20):
    """Seeded random instances: validation plus atom interior disjointness."""
    import itertools

    from .fixtures import random_instance
    bad = 0
    for i in range(count):
        g = normalize(random_instance(seed * 10007 + i))
        problems = validate(g)
        atoms = find_atoms(g)
        overlap = any((a.interior_vertices & b.interior_vertices)
                      or (a.ref.darts & b.ref.darts)
                      for a, b in itertools.combinations(atoms, 2))
        if problems or overlap:
            bad += 1
    status = "PASS" if bad == 0 else "FAIL"
    print(f"{status} random-instances [derived] {count} seeded graphs "
          f"(seed {seed}), {bad} violations")
    return bad


def build_parser():
    ap = argparse.ArgumentParser(
        prog="regcover",
        description="Regular graph covers via 3-connected reduction.")
    ap.add_argument("--max-vertices", type=int, default=24)
    ap.add_argument("--max-group-order", type=int, default=200)
    ap.add_argument("--halvable-input", action="store_true",
                    help="retype undirected input edges as halvable")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for the randomized fixture checks")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph file's invariants")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("iso", help="isomorphism test between two files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("aut", help="automorphism group order and orbits")
    p.add_argument("file")
    p.add_argument("--semiregular", type=int, metavar="K",
                   help="list semiregular subgroups of order K")
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("blocks", help="block-tree and center")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_blocks)

    p = sub.add_parser("atoms", help="list atoms with kind and symmetry")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_atoms)

    p = sub.add_parser("reduce", help="write the reduction series")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("quotients", help="write all regular quotients")
    p.add_argument("file")
    p.add_argument("--via", choices=("bruteforce", "reduction"),
                   default="bruteforce")
    p.set_defaults(fn=cmd_quotients)

    p = sub.add_parser("expand", help="replay a reduction sidecar against "
                                      "a quotient of the primitive graph")
    p.add_argument("sidecar")
    p.add_argument("quotient")
    p.add_argument("--level", type=int)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("cover", help="does the first graph regularly cover "
                                     "the second?")
    p.add_argument("gfile")
    p.add_argument("hfile")
    p.set_defaults(fn=cmd_cover)

    p = sub.add_parser("dot", help="render a graph file as DOT")
    p.add_argument("file")
    p.set_defaults(fn=cmd_dot)

    p = sub.add_parser("fixtures", help="golden fixture corpus")
    p.add_argument("action", choices=("run", "write"))
    p.add_argument("--dir")
    p.set_defaults(fn=cmd_fixtures)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
