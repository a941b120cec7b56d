"""Command line front end.

Every command prints one JSON report on standard output::

    {"command": [...], "subcommand": "...", "input_digest": "sha256:...",
     "status": "ok", "result": {...}, "timing": seconds}

The layout is fixed by ``report_schema.json`` next to this module.

Exit codes: 0 computed, 2 unreadable or malformed input, 3 the input
violates a precondition of the computation, 64 bad usage.
"""

import argparse
import hashlib
import json
import sys
import time

from .chords.derivative import DerivativeData, DerivativeError
from .equivariant import co_index, deleted_product, yang_index
from .fixtures import fixture_names, fixture_text
from .geometry import Degenerate
from .obstructions.linkless import DEFAULT_CYCLE_CAP, CycleCapExceeded
from .obstructions.spatial import SpatialGraphEmbedding
from .simplicial import cone, parse_complex

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _parsed(fn, text, what):
    try:
        return fn(text)
    except ValueError as exc:
        raise InputError(f"malformed {what}: {exc}") from exc


def _group(g):
    return g.to_json()


# ------------------------------------------------------------------ commands


def cmd_obstruction(args, inputs):
    from .obstructions.vankampen import van_kampen

    K = _parsed(parse_complex, inputs.text(args.complex), "complex")
    r = van_kampen(K)
    out = r.to_json()
    if not args.mod2:
        out.pop("class", None)
    elif r.cls is not None:
        out["mod2_class"] = r.cls.reduce_mod2().to_json()
    out["dimension"] = K.dimension
    return out


def cmd_h2n(args, inputs):
    from .obstructions.vankampen import h2n_direct, h2n_presentation

    K = _parsed(parse_complex, inputs.text(args.complex), "complex")
    g, info = h2n_presentation(K, details=True)
    out = {"group": _group(g), "graph_vertices": info["graph_vertices"], "graph_edges": info["graph_edges"]}
    if args.verify:
        direct = h2n_direct(K)
        out["direct"] = _group(direct)
        out["agree"] = direct == g
    return out


def cmd_coindex(args, inputs):
    from .obstructions.vankampen import panelled_cone_obstruction

    K = _parsed(parse_complex, inputs.text(args.complex), "complex")
    target = cone(K) if args.cone else K
    E = deleted_product(target)
    out = {"cone": args.cone, "co_index": co_index(E), "yang_index": yang_index(E)}
    if args.cone:
        out["verdict"] = panelled_cone_obstruction(K).verdict.value
    return out


def cmd_linkless(args, inputs):
    from .obstructions.linkless import linkless_obstruction

    G = _parsed(parse_complex, inputs.text(args.graph), "graph")
    if G.dimension > 1:
        raise ValueError("linkless expects a graph")
    return linkless_obstruction(G, args.cycle_cap).to_json()


def cmd_isotopy(args, inputs):
    from .obstructions.spatial import isotopy_obstruction

    f = _parsed(SpatialGraphEmbedding.parse, inputs.text(args.emb1), "embedding")
    g = _parsed(SpatialGraphEmbedding.parse, inputs.text(args.emb2), "embedding")
    out = isotopy_obstruction(f, g, seed=args.seed).to_json()
    out["seed"] = args.seed
    return out


def cmd_coconnect(args, inputs):
    from .obstructions.coconnect import coconnectivity_check

    K = _parsed(parse_complex, inputs.text(args.complex), "complex")
    return coconnectivity_check(K, args.k).to_json()


def _diagram(args, inputs):
    from .chords.diagram import parse_diagram

    inputs.note(args.code)
    return _parsed(parse_diagram, args.code, "chord diagram")


def _walk_json(w):
    return [[arc, sgn] for arc, sgn in w]


def cmd_chords_analyze(args, inputs):
    from .chords.config import build_config_space, gamma1_rank
    from .chords.diagram import irreducible_factors
    from .chords.h1 import h1_structure
    from .chords.planarity import planarity

    d = _diagram(args, inputs)
    B = build_config_space(d)
    p = planarity(d, B)
    h = h1_structure(d, B)
    return {
        "diagram": d.to_text(),
        "m": d.m,
        "rank": gamma1_rank(d, B),
        "factors": len(irreducible_factors(d)),
        "planar": p.planar,
        "witnesses": {
            "zeta_trivial": p.zeta_trivial,
            "realizable": p.realizable,
            "manturov_pairs": [[_walk_json(a), _walk_json(b)] for a, b in p.manturov],
        },
        "h1": h.to_json(),
    }


def cmd_chords_formula(args, inputs):
    from .chords.config import build_config_space
    from .chords.derivative import (
        arrow_formula_obstruction,
        half_integer_formula,
        integral_arrow_formula,
        propto,
        validate_derivative,
    )

    d = _diagram(args, inputs)
    data = _parsed(lambda t: DerivativeData.parse(d, t), inputs.text(args.deriv), "derivative data")
    validate_derivative(data)
    B = build_config_space(d)
    obstruction = arrow_formula_obstruction(data, B)
    order = B.E.class_order(obstruction)
    F = integral_arrow_formula(data, B)
    out = {
        "diagram": d.to_text(),
        "obstruction_trivial": order == 1,
        "obstruction_order": "infinite" if order == float("inf") else order,
        "propto": propto(data, B),
        "half_integer_formula": half_integer_formula(data).to_json(),
        "formula": F.to_json() if F is not None else None,
    }
    if F is None:
        out["refusal"] = "no integral arrow formula: the cap with the Euler class is nonzero"
    return out


def cmd_fixtures(args, inputs):
    try:
        text = fixture_text(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    return {"name": args.name, "text": text}


# ---------------------------------------------------------------- plumbing


class _Inputs:
    """Reads input files and accumulates a digest over everything read."""

    def __init__(self):
        self._h = hashlib.sha256()
        self._cache = {}

    def note(self, s):
        self._h.update(s.encode("utf-8"))
        self._h.update(b"\0")

    def text(self, path):
        if path not in self._cache:
            self._cache[path] = _read(path)
            self.note(self._cache[path])
        return self._cache[path]

    def digest(self):
        return "sha256:" + self._h.hexdigest()


def load_schema():
    from importlib.resources import files

    return json.loads(files(__package__).joinpath("report_schema.json").read_text(encoding="utf-8"))


def build_parser():
    p = _Parser(prog="embeddability", description="Obstructions to embeddings, computed exactly.")
    p.add_argument("--no-timing", action="store_true", help="report timing as null (byte-stable output)")
    p.add_argument("--indent", type=int, default=None)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("obstruction", help="van Kampen obstruction of a complex")
    s.add_argument("complex")
    s.add_argument("--mod2", action="store_true", help="include the class and its mod-2 reduction")
    s.set_defaults(func=cmd_obstruction)

    s = sub.add_parser("h2n", help="top cohomology of the quotient via the simplex-pair graph")
    s.add_argument("complex")
    s.add_argument("--verify", action="store_true", help="cross-check against the direct computation")
    s.set_defaults(func=cmd_h2n)

    s = sub.add_parser("coindex", help="co-index and Yang index of the deleted product")
    s.add_argument("complex")
    s.add_argument("--cone", action="store_true", help="use the cone over the complex")
    s.set_defaults(func=cmd_coindex)

    s = sub.add_parser("linkless", help="linkless-embedding obstruction of a graph")
    s.add_argument("graph")
    s.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
    s.set_defaults(func=cmd_linkless)

    s = sub.add_parser("isotopy", help="isotopy obstruction between two spatial graphs")
    s.add_argument("emb1")
    s.add_argument("emb2")
    s.add_argument("--seed", type=int, default=0, help="seed for the projection direction")
    s.set_defaults(func=cmd_isotopy)

    s = sub.add_parser("coconnect", help="co-connectivity conditions")
    s.add_argument("complex")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_coconnect)

    s = sub.add_parser("chords", help="chord diagrams")
    csub = s.add_subparsers(dest="chords_command", parser_class=_Parser)
    a = csub.add_parser("analyze", help="type-1 rank, factors, planarity")
    a.add_argument("code")
    a.set_defaults(func=cmd_chords_analyze)
    f = csub.add_parser("formula", help="arrow formula for derivative data")
    f.add_argument("code")
    f.add_argument("--deriv", required=True)
    f.set_defaults(func=cmd_chords_formula)

    s = sub.add_parser("fixtures", help="print a named input: " + ", ".join(fixture_names()))
    s.add_argument("name")
    s.set_defaults(func=cmd_fixtures)
    return p


def _emit(report, indent, stream):
    stream.write(json.dumps(report, indent=indent, sort_keys=True) + "\n")


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns (exit code, report or None)."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise UsageError("missing subcommand")
    except UsageError as exc:
        stderr.write(f"embeddability: {exc}\n")
        stderr.write(parser.format_usage())
        return EXIT_USAGE, None
    except SystemExit as exc:  # --help
        return int(exc.code or 0), None

    if args.command == "fixtures":
        try:
            out = cmd_fixtures(args, None)
        except UsageError as exc:
            stderr.write(f"embeddability: {exc}\n")
            return EXIT_USAGE, None
        stdout.write(out["text"])
        return EXIT_OK, out

    inputs = _Inputs()
    name = args.command + (f" {args.chords_command}" if args.command == "chords" else "")
    report = {"command": argv, "subcommand": name, "status": "ok"}
    start = time.perf_counter()
    code = EXIT_OK
    try:
        report["result"] = args.func(args, inputs)
    except InputError as exc:
        code, report["status"], report["error"] = EXIT_PARSE, "parse_error", str(exc)
    except (CycleCapExceeded, DerivativeError, Degenerate, ValueError) as exc:
        code, report["status"], report["error"] = EXIT_PRECONDITION, "precondition_failed", str(exc)
        if isinstance(exc, DerivativeError):
            report["witness"] = list(exc.witness)
    report["input_digest"] = inputs.digest()
    report["timing"] = None if args.no_timing else round(time.perf_counter() - start, 6)
    if code:
        stderr.write(f"embeddability: {report['error']}\n")
    _emit(report, args.indent, stdout)
    return code, report


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
