"""Command-line front end.

    domdodom beta --in fano.json -p 0 -q 2
    domdodom covers --in fano.json
    domdodom construct fano_lift --n 12 --k 5
    domdodom enumerate maximal --n 7 --k 3
    domdodom enumerate tau-full --q 2 --max-vertices 7 --checkpoint run.json
    domdodom search-beta-constant --q 2 --max-vertices 7
    domdodom verify lemma-charact

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 a verified
claim failed.  Output is deterministic; wall-clock timings are only
printed with ``--timing``.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import io
from .beta import BetaQuery, Variant, beta, beta_fast, beta_prime
from .constructions import CONSTRUCTION_NAMES, NamedConstruction
from .covers import minimal_covers
from .errors import DomdodomError
from .family import Family, mask_of
from .search import beta_constant, enumerate_maximal, enumerate_tau_full
from .verify import (
    DEFAULT_SEED,
    verify_cover_bound,
    verify_ekr,
    verify_lemma_charact,
    verify_thm02,
    verify_tau,
)

log = logging.getLogger("domdodom")

THREADS_ENV = "DOMDODOM_THREADS"


class UsageError(Exception):
    pass


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domdodom", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--out", help="write the output document here instead of stdout")
    parser.add_argument("--threads", type=int, default=_default_threads(),
                        help=f"worker processes for searches (env {THREADS_ENV})")
    parser.add_argument("--force", action="store_true", help="override size guards")
    parser.add_argument("--timing", action="store_true", help="include elapsed_ms in stats")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("beta", help="(p,q)-domdodom of a family file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("-p", type=_nonneg, default=0)
    p.add_argument("-q", type=_nonneg, default=0)
    p.add_argument("--variant", choices=[v.value for v in Variant], default="containment")
    p.add_argument("--naive", action="store_true", help="scan all of [n] instead of the support")

    p = sub.add_parser("covers", help="covering number and minimal covers")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--max-size", type=_nonneg, default=None, help="defaults to k")

    p = sub.add_parser("construct", help="emit a named construction as a family")
    p.add_argument("name", choices=CONSTRUCTION_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--generators", help="family file with generator sets (star, lift)")

    p = sub.add_parser("enumerate", help="exhaustive enumerations")
    esub = p.add_subparsers(dest="what", required=True)
    e = esub.add_parser("maximal")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e = esub.add_parser("tau-full")
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--max-vertices", type=int, required=True)
    e.add_argument("--checkpoint")
    e.add_argument("--max-nodes", type=int)

    p = sub.add_parser("search-beta-constant", help="beta(q) over the tau-full classes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--checkpoint")
    p.add_argument("--max-nodes", type=int)

    p = sub.add_parser("verify", help="check a stated result")
    vsub = p.add_subparsers(dest="claim", required=True)
    v = vsub.add_parser("lemma-charact")
    v.add_argument("--checkpoint")
    v = vsub.add_parser("thm02")
    v.add_argument("--part", type=int, choices=(1, 2), required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--p", type=_nonneg, default=0)
    v = vsub.add_parser("tau")
    v.add_argument("--random", type=int, default=100, dest="count")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v = vsub.add_parser("cover-bound")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v = vsub.add_parser("ekr")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    return parser


def _text_lines(doc, indent: str = "") -> list[str]:
    lines = []
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.append(f"{indent}{key}:")
                lines.extend(_text_lines(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_flat_text(value)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{indent}-")
                lines.extend(_text_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}{_flat_text(item)}")
    else:
        lines.append(f"{indent}{doc}")
    return lines


def _flat(value) -> bool:
    return isinstance(value, list) and all(isinstance(x, (int, str, bool)) for x in value)


def _flat_text(value) -> str:
    if isinstance(value, list):
        return ",".join(map(str, value))
    return str(value)


def _render(doc, fmt: str) -> str:
    if isinstance(doc, Family):
        return io.family_to_text(doc) if fmt == "text" else io.dumps_family(doc) + "\n"
    if fmt == "text":
        return "\n".join(_text_lines(doc)) + "\n"
    return json.dumps(doc) + "\n"


def _stats(stats: dict, timing: bool) -> dict:
    out = {key: value for key, value in stats.items() if key != "elapsed_ms"}
    if timing:
        out["elapsed_ms"] = stats.get("elapsed_ms", 0)
    return out


def _need(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.name} needs {' '.join(missing)}")


def _construct(args) -> Family:
    gens: tuple[int, ...] = ()
    if args.generators:
        G = io.read_family(args.generators)
        gens = G.masks
    if args.name in ("fano", "design10", "triangle"):
        return NamedConstruction(args.name, 0, 0).build()
    _need(args, "n", "k")
    if args.name == "star" and not gens:
        gens = (mask_of([1]),)
    return NamedConstruction(args.name, args.n, args.k, gens).build()


def _enumeration_doc(result, timing: bool) -> dict:
    doc = result.to_dict()
    doc["stats"] = _stats(result.stats, timing)
    return doc


def dispatch(args) -> tuple[object, int]:
    verb = args.verb
    if verb == "beta":
        F = io.read_family(args.input)
        query = BetaQuery(args.p, args.q, args.variant)
        query.check(F.n)
        if args.naive:
            fn = beta if query.variant is Variant.CONTAINMENT else beta_prime
            result = fn(F, query)
        else:
            result = beta_fast(F, query)
        return result.to_dict(), 0
    if verb == "covers":
        F = io.read_family(args.input)
        size = F.k if args.max_size is None else args.max_size
        if size > F.n:
            raise UsageError(f"--max-size {size} exceeds n = {F.n}")
        return minimal_covers(F, size).to_dict(), 0
    if verb == "construct":
        return _construct(args), 0
    if verb == "enumerate":
        if args.what == "maximal":
            result = enumerate_maximal(args.n, args.k, force=args.force)
        else:
            result = enumerate_tau_full(args.q, args.max_vertices, checkpoint=args.checkpoint,
                                        threads=args.threads, force=args.force,
                                        max_nodes=args.max_nodes)
        return _enumeration_doc(result, args.timing), 0
    if verb == "search-beta-constant":
        result = enumerate_tau_full(args.q, args.max_vertices, checkpoint=args.checkpoint,
                                    threads=args.threads, force=args.force,
                                    max_nodes=args.max_nodes)
        value, winners = beta_constant(args.q, args.max_vertices, result=result)
        doc = {"q": args.q, "max_vertices": args.max_vertices, "beta": value,
               "extremal_classes": [F.as_lists() for F in winners],
               "stats": _stats(result.stats, args.timing)}
        return doc, 0
    if verb == "verify":
        report = _verify(args)
        if "stats" in report:
            report["stats"] = _stats(report["stats"], args.timing)
        return report, 0 if report["passed"] else 3
    raise UsageError(f"unknown verb {verb}")


def _verify(args) -> dict:
    claim = args.claim
    if claim == "lemma-charact":
        return verify_lemma_charact(checkpoint=args.checkpoint, threads=args.threads)
    if claim == "thm02":
        return verify_thm02(args.n, args.k, args.p, args.part, force=args.force)
    if claim == "tau":
        return verify_tau(args.count, args.seed)
    if claim == "cover-bound":
        return verify_cover_bound(args.n, args.k, force=args.force)
    if claim == "ekr":
        return verify_ekr(args.n, args.k, force=args.force)
    raise UsageError(f"unknown claim {claim}")


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    if args.threads < 1:
        print("domdodom: --threads must be at least 1", file=sys.stderr)
        return 2
    if args.force:
        log.warning("--force: size guards are disabled for this run")
    try:
        doc, code = dispatch(args)
    except (DomdodomError, UsageError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"domdodom: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"domdodom: internal error: {exc!r}", file=sys.stderr)
        return 1
    text = _render(doc, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
