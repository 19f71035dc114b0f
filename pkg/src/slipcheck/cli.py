#!/usr/bin/env python3
"""
slipcheck command line: ``slipcheck <command> [name] [options]``.

Every command prints one JSON document on stdout (and to ``--json-out``).
Exit codes: 0 computed, 1 a requested ``--expect-excluded`` gate or a
registry expectation failed, 2 invalid input or a violated precondition.
"""
import argparse
import json
import logging
import re
import sys
from typing import List, Optional

from .algebra.degrees import DegreeBox, MultiDegree
from .algebra.polynomials import parse_polynomial
from .algebra.rings import CoxRing, greek_aliases, product_of_projective_spaces
from .constructions import ProductLift, apolarity_lift, construct_p1p1_ideal, p1p1_order
from .criteria import (
    BUILTIN_FACTOR_SQUARE,
    USER_ASSERTED,
    WITNESS,
    DegreeSet,
    SufficiencyCertificate,
    classify_products,
    corner_witness,
    diagonal_witness,
    ext1_dim_degree_zero,
    factor_square_witness,
    hirzebruch_witness,
    hom_dim_degree_zero,
    projective_witness,
    slip_dim,
    tangent_criteria_all_factors,
    tangent_criterion_custom,
    tangent_criterion_factor,
    truncation_ideal,
)
from .errors import InputError, SlipcheckError
from .groebner.ideal import Ideal
from .groebner.operations import restrict_to_blocks, saturate_irrelevant
from .hilbert import hf_matches_target, hf_row
from .registry import REGISTRY, run_all, run_case
from .ringmaps import (
    blowdown_lift,
    check_embedding_conditions,
    check_lift_B_condition,
    preimage,
    preimage_report,
    restrict_to_factor,
    segre_map,
    toric_lift_identity_check,
)
from .serialization import (
    degree_set_from_json,
    ideal_from_json,
    load_json,
    map_from_json,
    ring_from_json,
    ring_to_json,
    toric_data_from_json,
    write_report,
)
from .settings import Settings, load_settings

logger = logging.getLogger(__name__)

TOOL_NAME = "slipcheck"
TEXT_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


class JsonLinesFormatter(logging.Formatter):
    """One JSON object per record."""

    def format(self, record: logging.LogRecord) -> str:
        return json.dumps({
            "time": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }, sort_keys=True)


def configure_logging(level: str = "WARNING", style: str = "text") -> logging.Logger:
    """Route the package's log records to stderr as text or JSON lines."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonLinesFormatter() if style == "json" else logging.Formatter(TEXT_FORMAT))
    root = logging.getLogger(TOOL_NAME)
    for old in list(root.handlers):
        root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(level.upper())
    return root


# -- argument parsing helpers ---------------------------------------------------

def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in re.split(r"[,\s]+", text.strip().strip("()[]")) if x]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def parse_degree(text: str, ring: Optional[CoxRing] = None) -> MultiDegree:
    degree = MultiDegree(_ints(text))
    return ring.degree(degree) if ring is not None else degree


def parse_window(text: str, ring: Optional[CoxRing] = None) -> DegreeBox:
    """``a..b`` with comma-separated corners (``0..5``, ``0,0..4,4``); a single degree is a box up to it."""
    if ".." in text:
        lower, upper = text.split("..", 1)
        box = DegreeBox(MultiDegree(_ints(lower)), MultiDegree(_ints(upper)))
    else:
        box = DegreeBox.up_to(MultiDegree(_ints(text)))
    if ring is not None:
        ring.degree(box.upper)
    return box


def parse_witness(text: str, ring: CoxRing, r: int):
    """``projective:e``, ``factor-square:i``, ``hirzebruch:a``, ``corner:c1,c2:i`` or ``diagonal:e1,e2``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "projective":
            return projective_witness(int(rest))
        if kind == "factor-square":
            return factor_square_witness(ring, r, int(rest))
        if kind == "hirzebruch":
            return hirzebruch_witness(int(rest))
        if kind == "corner":
            corner, _, i = rest.rpartition(":")
            return corner_witness(_ints(corner), int(i))
        if kind == "diagonal":
            return diagonal_witness(_ints(rest))
    except ValueError as exc:
        raise InputError(f"malformed witness family {text!r}") from exc
    raise InputError(f"unknown witness family {text!r}")


def _ring(args) -> CoxRing:
    if not args.ring:
        raise InputError(f"'{args.command}' needs --ring")
    return ring_from_json(args.ring)


def _ideal(args, ring: Optional[CoxRing] = None, text: Optional[str] = None) -> Ideal:
    text = text if text is not None else args.ideal
    if not text:
        raise InputError(f"'{args.command}' needs --ideal")
    if ring is None and args.ring:
        ring = ring_from_json(args.ring)
    try:
        return ideal_from_json(text, ring)
    except InputError:
        # comma-separated generators typed on the command line
        if ring is None or text.lstrip().startswith(("{", "[")):
            raise
        return Ideal.from_strings(ring, [g for g in text.split(",") if g.strip()])


def _r(args) -> int:
    if args.r is None or args.r < 1:
        raise InputError(f"'{args.command}' needs a positive --r")
    return args.r


def _degree_sets(args, p: int):
    B = degree_set_from_json(p, args.B) if args.B else DegreeSet.everything(p)
    A = degree_set_from_json(p, args.A) if args.A else DegreeSet.empty(p)
    return A, B


def _emit(args, report: dict, settings: Settings) -> None:
    document = {"tool": settings.name, "version": settings.report_version, "command": args.command, **report}
    sys.stdout.write(write_report(document, args.json_out))


def _gate(args, excluded: bool) -> int:
    if args.expect_excluded and not excluded:
        logger.warning("--expect-excluded given but no criterion excluded the ideal")
        return 1
    return 0


# -- commands ---------------------------------------------------------------------

def handle_hf(args, settings: Settings) -> int:
    I = _ideal(args)
    if args.A or args.B:
        A, B = _degree_sets(args, I.ring.pic_rank)
        I = truncation_ideal(I, B, A)
    window_text = args.window or args.degree
    window = parse_window(window_text, I.ring) if window_text else None
    if args.r is not None:
        report = hf_matches_target(I, _r(args), window, margin=settings.hf_margin)
        _emit(args, {"generators": I.to_strings(), **report.to_json()}, settings)
        return 0
    if window is None:
        raise InputError("'hf' needs --window (or --r to compare with h_r)")
    degrees = list(window)
    _emit(args, {"generators": I.to_strings(), "window": window.to_json(),
                 "values": [{"degree": d.to_list(), "hf": v} for d, v in zip(degrees, hf_row(I, degrees))]},
          settings)
    return 0


def handle_saturate(args, settings: Settings) -> int:
    I = _ideal(args)
    J = saturate_irrelevant(I, args.method)
    _emit(args, {"ring": ring_to_json(I.ring), "generators": J.to_strings(), "input_saturated": J.equals(I)},
          settings)
    return 0


def handle_restrict(args, settings: Settings) -> int:
    I = _ideal(args)
    factors = _ints(args.factors) if args.factors else ([args.i] if args.i is not None else None)
    if not factors:
        raise InputError("'restrict' needs --factors (1-based, comma-separated)")
    J = restrict_to_factor(I, factors)
    _emit(args, {"factors": factors, "ring": ring_to_json(J.ring), "generators": J.to_strings()}, settings)
    return 0


def _map(args):
    if not args.map:
        raise InputError(f"'{args.command}' needs --map")
    if args.map == "blowdown":
        return blowdown_lift()
    data = load_json(args.map)
    toric = toric_data_from_json(data["toric"]) if isinstance(data, dict) and "toric" in data else None
    return map_from_json(data), toric


def handle_preimage(args, settings: Settings) -> int:
    phi, _ = _map(args)
    I = _ideal(args, ring=phi.target)
    degrees = [parse_degree(args.degree, phi.source)] if args.degree else ()
    report = preimage_report(phi, I, degrees)
    _emit(args, {"map": phi.name, **report.to_json()}, settings)
    return 0


def handle_map_check(args, settings: Settings) -> int:
    phi, toric = _map(args)
    report = {"map": phi.to_json(), "b_condition": check_lift_B_condition(phi),
              "toric_identity": toric_lift_identity_check(phi, toric) if toric is not None else None}
    _emit(args, report, settings)
    return 0


def handle_segre_check(args, settings: Settings) -> int:
    ring = _ring(args)
    if not args.degree:
        raise InputError("'segre-check' needs --degree")
    u = parse_degree(args.degree, ring)
    r = _r(args)
    embedding = check_embedding_conditions(ring, u, r, settings.embedding_degree_window)
    report = {"embedding": embedding.to_json()}
    if args.ideal:
        phi = segre_map(ring, u, r, order=ring.order(args.order or settings.order))
        K = preimage(phi, _ideal(args, ring))
        window = DegreeBox.up_to((r + 1,))
        report["preimage"] = {"ring": ring_to_json(phi.source), "images": phi.to_json()["images"],
                              "generators": K.to_strings(), "hf": hf_matches_target(K, r, window).to_json()}
    _emit(args, report, settings)
    return 0


def handle_hom_dim(args, settings: Settings) -> int:
    I = _ideal(args)
    report = {"generators": I.to_strings(), "dim": hom_dim_degree_zero(I)}
    if args.r is not None:
        report["threshold"] = slip_dim(I.ring, _r(args))
        report["below_threshold"] = report["dim"] < report["threshold"]
    _emit(args, report, settings)
    return 0


def handle_ext1_dim(args, settings: Settings) -> int:
    I = _ideal(args)
    J = _ideal(args, I.ring, args.J) if args.J else saturate_irrelevant(I)
    _emit(args, {"I": I.to_strings(), "J": J.to_strings(), "dim": ext1_dim_degree_zero(I, J)}, settings)
    return 0


def handle_tangent(args, settings: Settings) -> int:
    I = _ideal(args)
    r = _r(args)
    if args.i is not None:
        reports = [tangent_criterion_factor(I, r, args.i)]
    else:
        reports = tangent_criteria_all_factors(I, r, max_workers=args.workers)
    excluded = any(rep.excluded for rep in reports)
    _emit(args, {"criteria": [rep.to_json() for rep in reports], "excluded": excluded}, settings)
    return _gate(args, excluded)


def handle_tangent_custom(args, settings: Settings) -> int:
    I = _ideal(args)
    r = _r(args)
    A, B = _degree_sets(args, I.ring.pic_rank)
    kind = args.certificate
    family = None
    if kind == WITNESS:
        if not args.witness:
            raise InputError("a witness certificate needs --witness")
        family = parse_witness(args.witness, I.ring, r)
    certificate = SufficiencyCertificate(kind, family, args.l_bound or settings.lift_l_bound,
                                         settings.sufficiency_window)
    report = tangent_criterion_custom(I, r, A, B, certificate)
    _emit(args, {"criteria": [report.to_json()], "excluded": report.excluded}, settings)
    return _gate(args, report.excluded)


def handle_lift3(args, settings: Settings) -> int:
    I = _ideal(args)
    r = _r(args)
    if not args.ns:
        raise InputError("'lift3' needs --ns for the second factor")
    ns_y = _ints(args.ns)
    ring_x = I.ring
    aliases = greek_aliases(list(ring_x.ns) + ns_y)
    ring_y = product_of_projective_spaces(ns_y, aliases[ring_x.nvars:])
    order_x = ring_x.order(args.order or settings.order)
    lift = ProductLift(I, ring_y, r, order_x=order_x)
    box = lift.default_box()
    J = lift.harvest(box)
    margin = settings.product_lift_margin
    check_box = DegreeBox.up_to(box.upper + MultiDegree((margin,) * len(box.upper)))
    restricted = restrict_to_blocks(J, range(ring_x.pic_rank))
    _emit(args, {
        "ring": ring_to_json(J.ring),
        "generators": J.to_strings(),
        "box": box.to_json(),
        "closure": lift.check_closure(check_box),
        "hf": hf_matches_target(J, r, box).to_json(),
        "restricts_to_input": restricted.equals(I),
    }, settings)
    return 0


def handle_lift4(args, settings: Settings) -> int:
    J = _ideal(args)
    r = _r(args)
    order = J.ring.order(args.order) if args.order else None
    lift = apolarity_lift(J, r, order)
    _emit(args, {**lift.to_json(), "hf": hf_matches_target(lift.ideal, r).to_json()}, settings)
    return 0


def handle_p1p1(args, settings: Settings) -> int:
    r = _r(args)
    construction = construct_p1p1_ideal(r, settings.p1p1_b_scale)
    I = construction.ideal
    window = parse_window(args.window, I.ring) if args.window else DegreeBox.up_to((r + 2, r + 2))
    report = {**construction.to_json(), "hf": hf_matches_target(I, r, window).to_json()}
    if not args.skip_preimage:
        phi = segre_map(I.ring, construction.embedding_degree, r, order=p1p1_order())
        K = preimage(phi, I)
        power = parse_polynomial(phi.source, f"t1^{r - 2}")
        report["preimage"] = {
            "generators": K.to_strings(),
            "saturation": saturate_irrelevant(K).to_strings(),
            "largest_power_in_K": power in K,
        }
    _emit(args, report, settings)
    return 0


def handle_classify(args, settings: Settings) -> int:
    r = _r(args)
    if not args.ns:
        raise InputError("'classify' needs --ns")
    ns = _ints(args.ns)
    _emit(args, {"r": r, "ns": ns, **classify_products(r, ns)}, settings)
    return 0


def handle_example(args, settings: Settings) -> int:
    if args.all:
        results = run_all(settings, include_slow=not args.skip_slow, max_workers=args.workers)
        ok = all(res.ok for res in results)
        _emit(args, {"ok": ok, "cases": [res.to_json() for res in results]}, settings)
        return 0 if ok else 1
    if not args.name:
        raise InputError(f"'example' needs an id or --all; known ids: {', '.join(sorted(REGISTRY))}")
    result = run_case(args.name, settings)
    _emit(args, result.to_json(), settings)
    return 0 if result.ok else 1


HANDLERS = {
    "hf": handle_hf,
    "saturate": handle_saturate,
    "restrict": handle_restrict,
    "preimage": handle_preimage,
    "segre-check": handle_segre_check,
    "hom-dim": handle_hom_dim,
    "ext1-dim": handle_ext1_dim,
    "tangent": handle_tangent,
    "tangent-custom": handle_tangent_custom,
    "lift3": handle_lift3,
    "lift4": handle_lift4,
    "p1p1": handle_p1p1,
    "map-check": handle_map_check,
    "classify": handle_classify,
    "example": handle_example,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="Multigraded ideals of points and Slip criteria")
    parser.add_argument("command", help="The command to run")
    parser.add_argument("name", nargs="?", help="Example id for 'example'")
    parser.add_argument("--ring", help="Ring descriptor: file, JSON, or shorthand like P1xP1, P2, H1")
    parser.add_argument("--ideal", help="Ideal: file, JSON, or comma-separated generators")
    parser.add_argument("--J", help="The larger ideal for ext1-dim (default: the saturation)")
    parser.add_argument("--map", help="Ring map: file, JSON, or 'blowdown'")
    parser.add_argument("--order", choices=["lex", "grevlex", "product"], help="Monomial order")
    parser.add_argument("--window", help="Degree box a..b, e.g. 0..5 or 0,0..4,4")
    parser.add_argument("--degree", help="A degree, e.g. 1,4 (a box a..b for 'hf')")
    parser.add_argument("--r", type=int, help="Number of points")
    parser.add_argument("--ns", help="Factor dimensions, e.g. 1,1")
    parser.add_argument("--i", type=int, help="Factor index (1-based)")
    parser.add_argument("--factors", help="Factor indices (1-based, comma-separated)")
    parser.add_argument("--A", help="Degree set A: 'everything', 'empty' or a JSON list of generators")
    parser.add_argument("--B", help="Degree set B, same syntax as --A")
    parser.add_argument("--certificate", default=WITNESS,
                        choices=[BUILTIN_FACTOR_SQUARE, WITNESS, USER_ASSERTED], help="How B \\ A is sufficient")
    parser.add_argument("--witness", help="Witness family, e.g. projective:3, factor-square:1, hirzebruch:1")
    parser.add_argument("--l-bound", type=int, help="Largest l checked for surjectivity on Hirzebruch surfaces")
    parser.add_argument("--method", default="blocks", choices=["blocks", "generators"], help="Saturation method")
    parser.add_argument("--all", action="store_true", help="Run every registered example")
    parser.add_argument("--skip-slow", action="store_true", help="Leave out the slow examples")
    parser.add_argument("--skip-preimage", action="store_true", help="p1p1: skip the Segre preimage")
    parser.add_argument("--workers", type=int, default=1, help="Worker threads for independent computations")
    parser.add_argument("--expect-excluded", action="store_true", help="Exit 1 unless a criterion excludes the ideal")
    parser.add_argument("--json-out", help="Also write the report to this path")
    parser.add_argument("--config", help="User config TOML merged over the bundled defaults")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--log-style", choices=["text", "json"], help="Log record format")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = load_settings(args.config)
    configure_logging(args.log_level or settings.log_level, args.log_style or settings.log_style)

    handler = HANDLERS.get(args.command)
    if handler is None:
        print("Invalid command. Available commands:")
        for name in HANDLERS:
            print(f"  {TOOL_NAME} {name}")
        return 2
    try:
        return handler(args, settings)
    except SlipcheckError as exc:
        logger.info("%s failed: %s", args.command, exc)
        sys.stdout.write(json.dumps({"error": str(exc), "type": type(exc).__name__}, sort_keys=True) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
