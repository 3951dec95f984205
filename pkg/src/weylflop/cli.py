"""Command-line front end.

Every command prints one JSON object ``{"status", "payload", "timing_ms"}``
with sorted keys. Exit status is 0 on success, 2 on usage errors and 3 on
domain errors (the status then carries the error code).

Words are space- or comma-separated generator indices with negative entries
for inverses; put ``--`` before a word that starts with ``-``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .artin import is_left_weighted, normal_form, parse_word, words_equal
from .errors import WeylflopError
from .family import (
    braid_sweep,
    curve_configuration,
    default_base,
    flop,
    section_from_json,
    section_to_json,
)
from .folding import folding_from_cycles, invariant_roots, parse_folding, verify_folded_braid, xi_positive_roots
from .mckay import KINDS, mckay_report
from .render import configuration_svg, diagram_svg
from .rootsystem import build_diagram, diagram_to_json, generate_roots, roots_to_json, verify_coxeter

SEED_ENV = "WEYLFLOP_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _diagram(args):
    return build_diagram(args.type.upper(), args.rank)


def cmd_diagram(args) -> dict:
    d = _diagram(args)
    return {"diagram": diagram_to_json(d), "coxeter": verify_coxeter(d)}


def cmd_roots(args) -> dict:
    return roots_to_json(generate_roots(_diagram(args)))


def cmd_fold(args) -> dict:
    f = folding_from_cycles(args.type.upper(), args.rank, args.auto)
    return {
        "folding": f.to_json(),
        "xi_positive_roots": [
            {"root": list(mu.coords), "orbit": [list(r.coords) for r in orbit]} for mu, orbit in xi_positive_roots(f)
        ],
        "invariant_root_count": len(invariant_roots(f)),
        "folded_braid": verify_folded_braid(f),
    }


def cmd_mckay(args) -> dict:
    if args.kind not in KINDS:
        raise UsageError(f"KIND must be one of {', '.join(KINDS)}")
    if args.kind in ("cyclic", "binary-dihedral") and args.n is None:
        raise UsageError(f"{args.kind} needs N")
    return mckay_report(args.kind, args.n)


def _braid_diagram(args):
    t, r = args.diagram
    try:
        return build_diagram(t.upper(), int(r))
    except ValueError:
        raise UsageError(f"--diagram expects TYPE RANK, got {t!r} {r!r}") from None


def cmd_braid_eq(args) -> dict:
    d = _braid_diagram(args)
    u, v = parse_word(d, args.word1), parse_word(d, args.word2)
    nu, nv = normal_form(u), normal_form(v)
    return {"equal": words_equal(u, v), "normal_forms": [nu.to_json(), nv.to_json()]}


def cmd_braid_nf(args) -> dict:
    d = _braid_diagram(args)
    nf = normal_form(parse_word(d, args.word))
    return {"word": parse_word(d, args.word).to_ints(), "normal_form": nf.to_json(), "left_weighted": is_left_weighted(d, nf)}


def _load_section(path: str):
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"--section: cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"--section: {path} is not JSON ({exc.msg})") from None
    return section_from_json(data)


def cmd_family(args) -> dict:
    if args.action == "braidcheck":
        if args.fold is None or args.i is None or args.j is None:
            raise UsageError("family braidcheck needs --fold, --i and --j")
        seed = args.seed
        if seed is None:
            env = os.environ.get(SEED_ENV)
            if env is None:
                raise UsageError(f"--seed missing and {SEED_ENV} unset")
            seed = int(env)
        f = parse_folding(args.fold)
        base = default_base(f, args.twist)
        return braid_sweep(f, args.i, args.j, seed, args.trials, base) | {"base": base.to_json()}
    if args.section is None:
        raise UsageError(f"family {args.action} needs --section")
    s = _load_section(args.section)
    config = curve_configuration(s)
    if args.action == "curves":
        return {"section": section_to_json(s), "configuration": config.to_json()}
    if args.action == "general":
        return {"general": config.general_flag}
    if args.node is None:
        raise UsageError("family flop needs --node")
    record = flop((args.node,), s)
    return record.to_json() | {"target_configuration": curve_configuration(record.target_section).to_json()}


def cmd_render(args) -> dict:
    if args.what == "config":
        if args.section is None:
            raise UsageError("render config needs --section")
        svg = configuration_svg(_load_section(args.section))
    else:
        if args.fold is None:
            raise UsageError("render diagram needs --fold")
        svg = diagram_svg(parse_folding(args.fold))
    Path(args.out).write_text(svg)
    return {"out": args.out, "bytes": len(svg.encode())}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylflop", description="Root systems, foldings, braid normal forms and flop combinatorics.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn in (("diagram", cmd_diagram), ("roots", cmd_roots)):
        q = sub.add_parser(name)
        q.add_argument("type")
        q.add_argument("rank", type=int)
        q.set_defaults(fn=fn)

    q = sub.add_parser("fold")
    q.add_argument("type")
    q.add_argument("rank", type=int)
    q.add_argument("--auto", action="append", required=True, help='cycle notation, e.g. "(1 3)"; repeatable')
    q.set_defaults(fn=cmd_fold)

    q = sub.add_parser("mckay")
    q.add_argument("kind")
    q.add_argument("n", nargs="?", type=int)
    q.set_defaults(fn=cmd_mckay)

    q = sub.add_parser("braid")
    bsub = q.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = bsub.add_parser("eq")
    e.add_argument("--diagram", nargs=2, required=True, metavar=("TYPE", "RANK"))
    e.add_argument("word1")
    e.add_argument("word2")
    e.set_defaults(fn=cmd_braid_eq)
    n = bsub.add_parser("nf")
    n.add_argument("--diagram", nargs=2, required=True, metavar=("TYPE", "RANK"))
    n.add_argument("word")
    n.set_defaults(fn=cmd_braid_nf)

    q = sub.add_parser("family")
    q.add_argument("action", choices=("curves", "general", "flop", "braidcheck"))
    q.add_argument("--section")
    q.add_argument("--node", type=int)
    q.add_argument("--fold")
    q.add_argument("--i", type=int)
    q.add_argument("--j", type=int)
    q.add_argument("--seed", type=int)
    q.add_argument("--trials", type=int, default=1)
    q.add_argument("--twist", type=int, default=2, help="twist degree of generated sections")
    q.set_defaults(fn=cmd_family)

    q = sub.add_parser("render")
    q.add_argument("what", choices=("config", "diagram"))
    q.add_argument("--section")
    q.add_argument("--fold")
    q.add_argument("--out", required=True)
    q.set_defaults(fn=cmd_render)
    return p


def run(argv: list[str] | None = None) -> tuple[int, dict]:
    start = time.perf_counter()

    def result(status, payload):
        return {"status": status, "payload": payload, "timing_ms": round((time.perf_counter() - start) * 1000, 3)}

    try:
        args = build_parser().parse_args(argv)
        return 0, result("ok", args.fn(args))
    except UsageError as exc:
        return 2, result("usage-error", {"message": str(exc)})
    except WeylflopError as exc:
        return 3, result(exc.code, {"message": str(exc)})
    except (ValueError, KeyError) as exc:
        return 2, result("usage-error", {"message": str(exc)})


def main(argv: list[str] | None = None) -> int:
    code, res = run(argv)
    print(json.dumps(res, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
