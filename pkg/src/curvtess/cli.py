"""Command-line front end.

Exit status: 0 on success, 1 when a check fails, 2 on malformed input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from . import generators as gen
from .automorphism import cellular_automorphisms, restrict_to_TG, verify_order_bounds
from .corpus import corpus_check, load_bundle
from .curvature import classify_value, curvature_profile, format_pattern, format_q, parse_q
from .discharging import DEFAULT_RADIUS, DischargingCertificate, find_certificate, verify_certificate
from .errors import CurvtessError, InvalidArgument, MalformedInput, NonSphericalEmbedding, NotPrismlikeStructure
from .io import dumps_dot, dumps_json, dumps_text, load, read_text
from .prismlike import band_decomposition, is_prismlike
from .tables import render_table

OK, FAIL, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_graph(g, fmt: str) -> None:
    _emit({"text": dumps_text, "json": dumps_json, "dot": dumps_dot}[fmt](g))


def _threshold(text: str):
    try:
        return parse_q(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- subcommands ---------------------------------------------------------------

def cmd_validate(args) -> int:
    from .planar_map import validate_tessellation

    rep = validate_tessellation(load(args.file))
    if args.json:
        _emit(json.dumps(rep.as_dict(), indent=2))
    else:
        for name in rep.CHECKS:
            chk = getattr(rep, name)
            _emit(f"{name}: " + ("ok" if chk.ok else f"FAIL {list(chk.offenders)[:10]}"))
        _emit("valid" if rep.valid else "invalid")
    return OK if rep.valid else FAIL


def cmd_curvature(args) -> int:
    prof = curvature_profile(load(args.file))
    if args.format == "json":
        rows = [{"vertex": v, "pattern": list(prof.patterns[v]), "curvature": format_q(x),
                 "class": classify_value(x)} for v, x in prof.phi.items()]
        _emit(json.dumps(rows, indent=2))
        return OK
    for v, x in prof.phi.items():
        row = f"{v},{format_pattern(prof.patterns[v])},{format_q(x)}"
        if args.with_class:
            row += f",{classify_value(x)}"
        _emit(row)
    return OK


def cmd_total(args) -> int:
    _emit(format_q(curvature_profile(load(args.file)).total))
    return OK


def cmd_classify(args) -> int:
    prof = curvature_profile(load(args.file))
    status = OK
    for v, x in prof.phi.items():
        cls = classify_value(x, args.threshold)
        if cls == "negative":
            status = FAIL
        _emit(f"{v},{cls}")
    return status


def cmd_tables(args) -> int:
    sys.stdout.write(render_table(args.sign, args.format))
    return OK


def cmd_prismlike(args) -> int:
    g = load(args.file)
    verdict = is_prismlike(g)
    out = verdict.as_dict()
    status = OK
    if verdict:
        target = gen.subdivide_hexagons(g)
        try:
            out["bands"] = band_decomposition(target).as_dict()
        except NotPrismlikeStructure as exc:
            out["bands"] = {"error": str(exc)}
            status = FAIL
    _emit(json.dumps(out, indent=2))
    return status


def cmd_discharge(args) -> int:
    if args.target[0] == "verify":
        if len(args.target) != 3:
            raise MalformedInput("usage: discharge verify <graph> <cert.json>")
        g = load(args.target[1])
        cert = DischargingCertificate.from_json(read_text(args.target[2]))
        rep = verify_certificate(g, cert)
        for v in rep.violations:
            _emit(v)
        _emit("valid" if rep else "invalid")
        return OK if rep else FAIL
    if len(args.target) != 1:
        raise MalformedInput("usage: discharge <graph> [--radius N] [--threshold p/q]")
    g = load(args.target[0])
    cert = find_certificate(g, args.radius, args.threshold)
    if cert is None:
        _emit("infeasible")
        return FAIL
    _emit(cert.to_json())
    return OK


def cmd_aut(args) -> int:
    g = load(args.file)
    grp = cellular_automorphisms(g)
    pres, refl = grp.orientation_split
    out = {"order": grp.order, "orientation_split": [pres, refl]}
    status = OK
    if args.verify_bounds:
        rep = verify_order_bounds(g, grp)
        out.update({k: rep[k] for k in ("a", "b", "D_G", "three_connected", "divisibility_checks")})
        res = restrict_to_TG(g, grp)
        out["image_order"], out["kernel_order"] = res.image_order, res.kernel_order
        if not rep["ok"]:
            status = FAIL
    _emit(json.dumps(out, indent=2))
    return status


def cmd_generate(args) -> int:
    kind = args.kind
    if kind in ("prism", "antiprism", "pyramid"):
        if args.n is None:
            raise MalformedInput(f"{kind} needs --n")
        g = {"prism": gen.prism, "antiprism": gen.antiprism, "pyramid": gen.pyramid}[kind](args.n)
        if kind == "prism" and args.bands > 1:
            g = gen.stacked_prism(args.n, args.bands)
    elif kind == "platonic":
        if args.name is None:
            raise MalformedInput("platonic needs --name")
        g = gen.platonic(args.name)
    elif kind == "c60":
        g = gen.fullerene_c60()
    else:
        if args.a is None or args.b is None:
            raise MalformedInput("grid needs --a and --b")
        g = gen.grid_example(args.a, args.b)
    _emit_graph(g, args.format)
    return OK


def _read_correspondence(path) -> tuple:
    text = read_text(path).strip()
    if text.startswith("["):
        pairs = json.loads(text)
    else:
        pairs = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].split()
            if line:
                pairs.append(line)
    try:
        out = tuple((int(a), int(b)) for a, b in pairs)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad correspondence: {exc}") from None
    return out


def cmd_glue(args) -> int:
    from .planar_map import Patch

    left, right = load(args.left), load(args.right)
    if not isinstance(left, Patch) or not isinstance(right, Patch):
        raise MalformedInput("both glue inputs need an outer line")
    corr = _read_correspondence(args.corr) if args.corr else ()
    _emit_graph(gen.glue_patches(gen.GlueSpec(left, right, corr)), args.format)
    return OK


def cmd_subdivide(args) -> int:
    _emit_graph(gen.subdivide_hexagons(load(args.file)), args.format)
    return OK


def cmd_closure(args) -> int:
    b = load_bundle(args.bundle)
    rep = gen.periodic_closure_check(b.annulus, b.core, b.core_correspondence, b.self_correspondence)
    _emit(json.dumps(rep.as_dict(), indent=2))
    return OK if rep else FAIL


def cmd_corpus(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = corpus_check(args.manifest, jobs=args.jobs)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    for r in report.results:
        _emit(r.line())
    c = report.counts()
    _emit(f"{c['pass']} passed, {c['fail']} failed, {c['skip']} skipped")
    return OK if report.ok else FAIL


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="curvtess", description="Curvature tools for planar tessellations.")
    p.add_argument("--version", action="version", version=f"curvtess {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="graph file, or - for stdin")
        sp.set_defaults(func=fn)
        return sp

    sp = graph_cmd("validate", cmd_validate, "check the tessellation axioms")
    sp.add_argument("--json", action="store_true")
    sp = graph_cmd("curvature", cmd_curvature, "per-vertex pattern and curvature")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--class", dest="with_class", action="store_true", help="append the good/bad/zero class")
    graph_cmd("total", cmd_total, "total curvature")
    sp = graph_cmd("classify", cmd_classify, "good / bad / zero per vertex")
    sp.add_argument("--threshold", type=_threshold, default=parse_q("1/132"))

    sp = sub.add_parser("tables", help="pattern tables")
    sp.add_argument("--sign", choices=("positive", "zero"), default="positive")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_tables)

    graph_cmd("prismlike", cmd_prismlike, "prism-like verdict and bands")

    sp = sub.add_parser("discharge", help="find or verify a discharging certificate")
    sp.add_argument("target", nargs="+", metavar="file | verify file cert")
    sp.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    sp.add_argument("--threshold", type=_threshold, default=parse_q("1/132"))
    sp.set_defaults(func=cmd_discharge)

    sp = graph_cmd("aut", cmd_aut, "cellular automorphism group")
    sp.add_argument("--verify-bounds", action="store_true")

    sp = sub.add_parser("generate", help="emit a named graph")
    sp.add_argument("kind", choices=("prism", "antiprism", "pyramid", "platonic", "c60", "grid"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--bands", type=int, default=1)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--name", choices=gen.PLATONIC)
    sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("glue", help="glue two patches along their boundaries")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--corr", help="pairs 'left right', one per line, or a JSON list")
    sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
    sp.set_defaults(func=cmd_glue)

    sp = graph_cmd("subdivide-hex", cmd_subdivide, "split hexagons into six triangles")
    sp.add_argument("--format", choices=("text", "json", "dot"), default="text")

    sp = sub.add_parser("closure", help="check a periodic core/annulus bundle")
    sp.add_argument("bundle")
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("corpus", help="run the regression corpus")
    sp.add_argument("--manifest", type=Path)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_corpus)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except (MalformedInput, NonSphericalEmbedding, InvalidArgument, json.JSONDecodeError, OSError) as exc:
        print(f"curvtess: {exc}", file=sys.stderr)
        return USAGE
    except CurvtessError as exc:
        print(f"curvtess: {exc}", file=sys.stderr)
        return FAIL


def main() -> None:  # pragma: no cover - console entry point
    try:
        code = run()
    except BrokenPipeError:
        code = OK
    sys.exit(code)


if __name__ == "__main__":  # pragma: no cover
    main()
