"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (invalid lattice, unreadable or
malformed input, wrong class), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, classification as clf, tiling
from .flags import build_flag_graph
from .lattice import FaceLattice, LatticeError, validate
from .orbits import automorphism_group, orbit_report

EXPECTED = {
    clf.B3_TYPE: "expected: facet-intransitive two-orbit polyhedra with B3 group are the cuboctahedron",
    clf.H3_TYPE: "expected: facet-intransitive two-orbit polyhedra with H3 group are the icosidodecahedron",
    clf.VERTEX_DUAL: "expected: vertex-intransitive two-orbit polyhedra are duals of the facet-intransitive ones",
    clf.RANK4_REFUTED: "expected: rank-4 class 2_{1,2} candidates are impossible (angle count)",
    clf.NOT_TWO_ORBIT: "expected: equivelar convex inputs are one-orbit",
}


class DomainError(Exception):
    pass


def _load(args) -> tuple[FaceLattice, str]:
    if getattr(args, "catalog", None):
        try:
            key = catalog.CatalogKey.parse(args.catalog)
        except catalog.CatalogError as exc:
            raise DomainError(str(exc)) from None
        return catalog.make(key), str(key)
    if not args.path:
        raise DomainError("no input: give a lattice JSON path or --catalog KEY")
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {args.path}: {exc.strerror}") from None
    try:
        return FaceLattice.from_json(text), args.path
    except LatticeError as exc:
        raise DomainError(f"{args.path}: {exc}") from None


def _require_valid(L: FaceLattice, name: str):
    report = validate(L)
    if not report.ok:
        raise DomainError(f"{name} is not a valid polytope lattice:\n  " + "\n  ".join(report.lines()))


def _emit(args, payload: dict, lines: list[str]):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, default=_jsonable) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    L, name = _load(args)
    report = validate(L)
    payload = {"input": name, "valid": report.ok,
               "violations": [{"axiom": v.axiom, "message": v.message} for v in report.violations]}
    _emit(args, payload, [f"input: {name}", f"valid: {'yes' if report.ok else 'no'}"]
          + [f"  {line}" for line in report.lines()])
    return 0 if report.ok else 1


def cmd_analyze(args) -> int:
    L, name = _load(args)
    _require_valid(L, name)
    G = build_flag_graph(L)
    group = automorphism_group(G)
    rep = orbit_report(G, group)
    payload = {"input": name, "f_vector": list(L.f_vector()), **rep.to_dict()}
    lines = [f"input: {name}", f"rank: {L.rank}", f"f-vector: {L.f_vector()}",
             f"flags: {rep.n_flags}", f"automorphism group order: {rep.group_order}",
             f"flag orbits: {rep.orbit_count}"]
    if rep.class_I is not None:
        lines.append(f"class: {rep.class_label()}")
    lines.append("transitive on ranks: " + " ".join(
        str(r) for r, t in enumerate(rep.transitivity) if t))
    if rep.symbol is not None:
        lines.append(f"symbol: {rep.symbol}")
    _emit(args, payload, lines)
    return 0


def cmd_classify(args) -> int:
    L, name = _load(args)
    _require_valid(L, name)
    try:
        v = clf.classify(L)
    except clf.ClassificationError as exc:
        raise DomainError(f"classification failed: {exc}") from None
    rep = v.report
    payload = {"input": name, "outcome": v.outcome, "diagram": v.diagram,
               "orbits": rep.orbit_count, "group_order": rep.group_order,
               "class_I": None if rep.class_I is None else sorted(rep.class_I),
               "symbol": None if rep.symbol is None else rep.symbol.as_lists(),
               "isomorphism_witness": v.witness is not None}
    lines = [f"input: {name}", f"outcome: {v.outcome}"]
    if v.diagram:
        lines.append(f"diagram: {v.diagram}")
    lines.append(f"flag orbits: {rep.orbit_count}")
    if rep.class_I is not None:
        lines.append(f"class: {rep.class_label()}")
    if rep.symbol is not None:
        lines.append(f"symbol: {rep.symbol}")
    lines.append(f"|Gamma| = {rep.group_order}")
    if v.coxeter is not None:
        lines.append(f"coxeter: {v.coxeter}")
        payload["coxeter"] = {f"{a},{b}": m for (a, b), m in v.coxeter.edges().items()}
    if v.witness is not None:
        lines.append(f"isomorphism witness: {len(v.witness)} faces matched")
    if v.refutation is not None:
        lines += v.refutation.lines()
        payload["refutation"] = {"r": v.refutation.ratio, "c": v.refutation.cone_count,
                                 "contradiction": v.refutation.contradiction}
    lines.append(EXPECTED[v.outcome])
    _emit(args, payload, lines)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        names = list(catalog.NAMED) + [f"{f}:N" for f in catalog.FAMILIES]
        sys.stdout.write("\n".join(names) + "\n")
        return 0
    if not args.key:
        raise DomainError("catalog emit needs a key")
    try:
        L = catalog.make(args.key)
    except catalog.CatalogError as exc:
        raise DomainError(str(exc)) from None
    sys.stdout.write(L.to_json())
    return 0


def cmd_tiling(args) -> int:
    if args.action == "solve-planar":
        vs = tiling.solve_planar_vertex_transitive()
        ts = tiling.solve_planar_tile_transitive()
        fmt = lambda s: {"cycle": list(s.cycle), "two_orbit": s.two_orbit, "notation": str(s)}
        payload = {"vertex_transitive": [fmt(s) for s in vs], "tile_transitive": [fmt(s) for s in ts]}
        lines = ["vertex-transitive:"] + [f"  {s}{'  two-orbit' if s.two_orbit else '  regular'}" for s in vs]
        lines += ["tile-transitive:"] + [f"  {s}{'  two-orbit' if s.two_orbit else '  regular'}" for s in ts]
        _emit(args, payload, lines)
        return 0
    if args.action == "growth":
        if args.n < 1:
            raise DomainError("--n must be >= 1")
        s = tiling.growth_state(args.n)
        closed = tiling.growth_closed_form(args.n)
        payload = {"n": s.n, "a": s.a, "b": s.b, "c": s.c, "total": s.total, "closed_form": closed}
        lines = [f"n={s.n} a={s.a} b={s.b} c={s.c} total={s.total}",
                 f"closed form: {closed} ({'agrees' if closed == s.total else 'DISAGREES'})"]
        _emit(args, payload, lines)
        return 0
    if args.action == "crossing":
        try:
            u, U = Fraction(args.u), Fraction(args.U)
            n = tiling.normality_crossing(u, U)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(str(exc)) from None
        s = tiling.growth_state(n)
        bound = (2 * n * U) ** 3 / u ** 3
        payload = {"u": u, "U": U, "n": n, "tiles": s.total, "bound": bound}
        _emit(args, payload, [f"u={u} U={U}: first n with |A_n| > (2nU)^3/u^3 is n={n}",
                              f"|A_{n}| = {s.total} > {bound}"])
        return 0
    if args.action == "quotient":
        if not args.family:
            raise DomainError("quotient needs --family")
        try:
            q = tiling.build_torus_quotient(args.family, args.k)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        payload = {"family": q.family, "k": q.period, "k_requested": q.requested,
                   "f_vector": list(q.f_vector())}
        lines = [f"family: {q.family}", f"k: {q.period} (requested {q.requested})",
                 f"f-vector: {q.f_vector()}"]
        if args.analyze:
            rep = tiling.analyze_quotient(q)
            payload.update(rep.to_dict())
            lines += [f"flags: {rep.n_flags}", f"|Gamma| = {rep.group_order}",
                      f"flag orbits: {rep.orbit_count}"]
            if rep.class_I is not None:
                lines.append(f"class: {rep.class_label()}")
            lines.append(f"symbol: {rep.symbol}")
            want = tiling.EXPECTED_CLASS[q.family]
            lines.append("expected: two orbits, class 2_{" + ",".join(map(str, sorted(want))) + "}")
            if rep.orbit_count != 2 or rep.class_I != want:
                lines.append("note: differs from the infinite tiling; finite-quotient artifact")
        if args.emit:
            sys.stdout.write(q.lattice.to_json())
            return 0
        _emit(args, payload, lines)
        return 0
    raise DomainError(f"unknown tiling action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twoorbit",
                                description="Face lattices, flag orbits and two-orbit classification.")
    sub = p.add_subparsers(dest="verb", required=True)

    def with_format(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    for verb, fn in (("validate", cmd_validate), ("analyze", cmd_analyze), ("classify", cmd_classify)):
        sp = sub.add_parser(verb)
        sp.add_argument("path", nargs="?")
        if verb != "validate":
            sp.add_argument("--catalog", metavar="KEY")
        with_format(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("catalog")
    sp.add_argument("action", choices=("emit", "list"))
    sp.add_argument("key", nargs="?")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("tiling")
    sp.add_argument("action", choices=("solve-planar", "growth", "crossing", "quotient"))
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--u", default="1")
    sp.add_argument("--U", default="1")
    sp.add_argument("--family", choices=tiling.FAMILIES)
    sp.add_argument("--k", type=int)
    sp.add_argument("--analyze", action="store_true")
    sp.add_argument("--emit", action="store_true", help="print the quotient lattice as JSON")
    with_format(sp)
    sp.set_defaults(func=cmd_tiling)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
