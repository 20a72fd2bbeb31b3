"""Command-line surface: one binary, one subcommand per pipeline stage.

Every stage reads and writes JSON (drawings, instances, solutions,
sidecars, certificates), so stages compose through files or pipes.  Exit
codes: 0 success / verified, 1 a checked condition failed (unsolvable
instance, invalid drawing, rejected certificate), 2 usage or format
problems.  Machine-readable errors go to stdout as {"error", "detail"};
logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass

from .certificates import (
    CrossingStructure,
    construct_certificate_1sefe,
    min_private_edge_crossings,
    verify_certificate,
)
from .drawing import GridDrawing, construct_drawing, decode_solution, verify_drawing
from .errors import (
    FormatError,
    MalformedDrawing,
    InconsistentStructure,
    InfeasibleParameters,
    InstanceValidationError,
    NotAReducedInstance,
    SimgadgetError,
    SizeLimitExceeded,
    SolutionMismatch,
    UnknownEdge,
    UnmappedVertex,
    UnsupportedMode,
)
from .gracsim import GadgetIndex, reduce_gracsim
from .graphs import SefeInstance, parse_edge_key
from .sefe import KSefeGadgetIndex, expand_to_k, reduce_1sefe, wheel_instance
from .svg import emit_svg
from .threep import (
    DEFAULT_SIZE_CAP,
    ThreePartitionInstance,
    ThreePartitionSolution,
    check_solution,
    generate_yes_instance,
    solve_brute_force,
)

log = logging.getLogger("simgadget")

_ERROR_CODES = {
    FormatError: "format",
    InstanceValidationError: "invalid-instance",
    SizeLimitExceeded: "size-limit",
    InfeasibleParameters: "infeasible",
    NotAReducedInstance: "not-reduced",
    UnknownEdge: "unknown-edge",
    InconsistentStructure: "inconsistent-structure",
    UnmappedVertex: "unmapped-vertex",
    UnsupportedMode: "unsupported-mode",
    SolutionMismatch: "solution-mismatch",
    MalformedDrawing: "malformed-drawing",
}

# these two mean "the check said no", not "the input made no sense"
_CHECK_FAILURES = (SolutionMismatch, MalformedDrawing)


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    out: str | None
    size_cap: int | None         # SIMGADGET_SIZE_CAP override, if set
    stretch: int = 1

    def __post_init__(self):
        if self.stretch < 1:
            raise FormatError(f"stretch must be at least 1, got {self.stretch}")
        if self.size_cap is not None and self.size_cap < 1:
            raise FormatError(f"size cap must be positive, got {self.size_cap}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _emit_error(code: str, detail: str) -> None:
    log.error("%s: %s", code, detail)
    sys.stdout.write(json.dumps({"error": code, "detail": detail}) + "\n")


def _load_3p(path: str) -> ThreePartitionInstance:
    return ThreePartitionInstance.from_json_dict(json.loads(_read(path)))


def _load_sefe(path: str) -> SefeInstance:
    return SefeInstance.from_json_dict(json.loads(_read(path)))


def _load_solution(path: str) -> ThreePartitionSolution:
    return ThreePartitionSolution.from_json_dict(json.loads(_read(path)))


def _load_gracsim_index(path: str, inst: SefeInstance) -> GadgetIndex:
    doc = json.loads(_read(path))
    if "variant" in doc:
        raise FormatError("sidecar describes the embedding reduction, not the drawing one")
    return GadgetIndex.from_json_dict(doc, inst)


def _load_ksefe_index(path: str, inst: SefeInstance) -> KSefeGadgetIndex:
    doc = json.loads(_read(path))
    if "variant" not in doc:
        raise FormatError("sidecar describes the drawing reduction, not the embedding one")
    return KSefeGadgetIndex.from_json_dict(doc, inst)


def _cmd_gen_3p(args, cfg: RunConfig) -> int:
    inst, sol = generate_yes_instance(args.m, args.B, args.seed)
    log.info("generated m=%d B=%d instance with planted solution", args.m, args.B)
    _write(_dump(inst.to_json_dict()), cfg.out)
    if args.sol_out:
        _write(_dump(sol.to_json_dict()), args.sol_out)
    return 0


def _cmd_solve_3p(args, cfg: RunConfig) -> int:
    inst = _load_3p(args.source)
    cap = cfg.size_cap if cfg.size_cap is not None else DEFAULT_SIZE_CAP
    sol = solve_brute_force(inst, size_cap=cap)
    if sol is None:
        _emit_error("unsolvable", f"no partition of A into triples summing to {inst.B}")
        return 1
    _write(_dump(sol.to_json_dict()), cfg.out)
    return 0


def _cmd_verify_3p(args, cfg: RunConfig) -> int:
    inst = _load_3p(args.source)
    sol = _load_solution(args.solution)
    problems = check_solution(inst, sol)
    doc = {"valid": not problems}
    if problems:
        doc["problems"] = problems
    _write(_dump(doc), cfg.out)
    return 0 if not problems else 1


def _cmd_reduce_gracsim(args, cfg: RunConfig) -> int:
    source = _load_3p(args.source)
    inst, index = reduce_gracsim(source)
    log.info("reduced to %d vertices, %d edges", inst.n, len(inst.edges))
    _write(_dump(inst.to_json_dict()), cfg.out)
    if args.index_out:
        _write(_dump(index.to_json_dict()), args.index_out)
    return 0


def _cmd_draw_gracsim(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.instance)
    index = _load_gracsim_index(args.index, inst)
    sol = _load_solution(args.solution)
    d = construct_drawing(inst, index, sol)
    _write(_dump(d.to_json_dict()), cfg.out)
    return 0


def _cmd_verify_drawing(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.instance)
    d = GridDrawing.from_json_dict(json.loads(_read(args.source)))
    report = verify_drawing(inst, d)
    _write(_dump(report.to_json_dict(inst)), cfg.out)
    return 0 if report.valid else 1


def _cmd_decode_drawing(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.instance)
    index = _load_gracsim_index(args.index, inst)
    d = GridDrawing.from_json_dict(json.loads(_read(args.source)))
    sol = decode_solution(inst, index, d)
    _write(_dump(sol.to_json_dict()), cfg.out)
    return 0


def _cmd_reduce_1sefe(args, cfg: RunConfig) -> int:
    source = _load_3p(args.source)
    inst, index = reduce_1sefe(source)
    log.info("reduced to %d vertices, %d edges", inst.n, len(inst.edges))
    _write(_dump(inst.to_json_dict()), cfg.out)
    if args.index_out:
        _write(_dump(index.to_json_dict()), args.index_out)
    return 0


def _cmd_expand_k(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.source)
    index = _load_ksefe_index(args.index, inst)
    new_inst, new_index = expand_to_k(inst, index, args.k)
    _write(_dump(new_inst.to_json_dict()), cfg.out)
    if args.index_out:
        _write(_dump(new_index.to_json_dict()), args.index_out)
    return 0


def _cmd_make_cert(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.instance)
    index = _load_ksefe_index(args.index, inst)
    sol = _load_solution(args.solution)
    cs = construct_certificate_1sefe(inst, index, sol)
    _write(_dump(cs.to_json_dict()), cfg.out)
    return 0


def _cmd_verify_cert(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.instance)
    cs = CrossingStructure.from_json_dict(json.loads(_read(args.source)))
    k = args.k if args.k is not None else cs.k
    ok = verify_certificate(inst, cs, k)
    _write(_dump({"valid": ok, "k": k}), cfg.out)
    return 0 if ok else 1


def _cmd_wheel(args, cfg: RunConfig) -> int:
    inst = wheel_instance(args.k)
    _write(_dump(inst.to_json_dict()), cfg.out)
    return 0


def _cmd_min_crossings(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.source)
    edge = parse_edge_key(args.edge)
    kwargs = {}
    if cfg.size_cap is not None:
        kwargs["max_private_edges"] = cfg.size_cap
    best = min_private_edge_crossings(inst, edge, args.cap, **kwargs)
    _write(_dump({"min": best}), cfg.out)
    return 0


def _cmd_emit_svg(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.source)
    drawing = cert = None
    if args.drawing:
        drawing = GridDrawing.from_json_dict(json.loads(_read(args.drawing)))
    if args.cert:
        cert = CrossingStructure.from_json_dict(json.loads(_read(args.cert)))
    text = emit_svg(inst, drawing=drawing, cert=cert, stretch=cfg.stretch)
    _write(text, cfg.out)
    return 0


def _cmd_counts(args, cfg: RunConfig) -> int:
    inst = _load_sefe(args.source)
    _write(json.dumps({"vertices": inst.n, "edges": len(inst.edges)}) + "\n", cfg.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="simgadget",
        description="3-Partition reductions, grid drawings and crossing certificates",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def cmd(name, func, help_, source_help=None):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        if source_help is not None:
            p.add_argument("source", nargs="?", default="-", help=source_help)
        return p

    p = cmd("gen-3p", _cmd_gen_3p, "generate a solvable 3-partition instance")
    p.add_argument("--m", type=int, required=True, help="number of triples")
    p.add_argument("--B", type=int, required=True, help="triple sum bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sol-out", help="also write the planted solution here")

    cmd("solve-3p", _cmd_solve_3p, "solve an instance by exhaustive search", "instance JSON")

    p = cmd("verify-3p", _cmd_verify_3p, "check a solution against an instance", "instance JSON")
    p.add_argument("--solution", required=True, help="solution JSON path")

    p = cmd("reduce-gracsim", _cmd_reduce_gracsim, "build the drawing-hardness instance", "instance JSON")
    p.add_argument("--index-out", help="write the gadget sidecar here")

    p = cmd("draw-gracsim", _cmd_draw_gracsim, "draw a reduced instance from a solution")
    p.add_argument("--instance", required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--solution", required=True)

    p = cmd("verify-drawing", _cmd_verify_drawing, "check drawing validity exactly", "drawing JSON")
    p.add_argument("--instance", required=True)

    p = cmd("decode-drawing", _cmd_decode_drawing, "recover the partition from a drawing", "drawing JSON")
    p.add_argument("--instance", required=True)
    p.add_argument("--index", required=True)

    p = cmd("reduce-1sefe", _cmd_reduce_1sefe, "build the embedding-hardness instance", "instance JSON")
    p.add_argument("--index-out", help="write the gadget sidecar here")

    p = cmd("expand-k", _cmd_expand_k, "expand a reduced instance to cap k", "instance JSON")
    p.add_argument("--index", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--index-out", help="write the expanded sidecar here")

    p = cmd("make-cert", _cmd_make_cert, "certificate from a planted solution")
    p.add_argument("--instance", required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--solution", required=True)

    p = cmd("verify-cert", _cmd_verify_cert, "verify a crossing-structure certificate", "certificate JSON")
    p.add_argument("--instance", required=True)
    p.add_argument("--k", type=int, help="crossing cap (default: the certificate's own)")

    p = cmd("wheel", _cmd_wheel, "wheel instance separating caps k and k+1")
    p.add_argument("--k", type=int, required=True)

    p = cmd("min-crossings", _cmd_min_crossings, "exhaustive minimum crossings on one edge", "instance JSON")
    p.add_argument("--edge", required=True, help='edge key "u-v-label"')
    p.add_argument("--cap", type=int, required=True)

    p = cmd("emit-svg", _cmd_emit_svg, "render a drawing or certificate", "instance JSON")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--drawing", help="drawing JSON path")
    mode.add_argument("--cert", help="certificate JSON path")
    p.add_argument("--stretch", type=int, default=1, help="vertical stretch factor")

    cmd("counts", _cmd_counts, "vertex and edge counts of an instance", "instance JSON")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if not logging.getLogger().handlers:
        logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(message)s")
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)

    try:
        env_cap = os.environ.get("SIMGADGET_SIZE_CAP")
        cfg = RunConfig(
            subcommand=args.subcommand,
            out=args.out,
            size_cap=int(env_cap) if env_cap else None,
            stretch=getattr(args, "stretch", 1),
        )
        return args.func(args, cfg)
    except json.JSONDecodeError as exc:
        _emit_error("bad-json", str(exc))
        return 2
    except ValueError as exc:
        _emit_error("format", str(exc))
        return 2
    except _CHECK_FAILURES as exc:
        _emit_error(_ERROR_CODES[type(exc)], str(exc))
        return 1
    except SimgadgetError as exc:
        _emit_error(_ERROR_CODES.get(type(exc), "error"), str(exc))
        return 2
    except OSError as exc:
        _emit_error("io", str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
