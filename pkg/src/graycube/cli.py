"""Command-line surface with stable JSON output.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
guard.  All output is canonically ordered JSON on stdout; diagnostics go
to stderr.  Complexes are accepted as named refs (cube:N, globe:D,
theta:TREE, point, interval), file paths, or "-" for stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from .adc import ADC
from .chains import parse_key
from .errors import GrayCubeError, ResourceError
from .construct import skeleton, suspension, tensor, wedge
from .io import (
    adc_from_doc, adc_to_doc, canonical_json, morphism_to_doc,
    resolve_complex_ref, witness_from_doc, witness_to_doc,
)
from .morphisms import compose
from .realize import Cell, enumerate_cells, hom_set
from .retract import (
    suspension_quotient, suspension_section, suspension_step_quotient,
    suspension_step_section, wedge_retraction, wedge_section,
    wedge_step_retraction, wedge_step_section,
)
from .sections import solve_sections
from .theta import parse_tree, theta_witness, verify_theta_witness
from .io import chain_to_doc

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

MAP_BUILDERS = {
    "iota": (wedge_section, 2),
    "rho": (wedge_retraction, 2),
    "eta": (wedge_step_section, 2),
    "zeta": (wedge_step_retraction, 2),
    "psi": (suspension_quotient, 1),
    "phi": (suspension_section, 1),
    "xi": (suspension_step_quotient, 1),
    "chi": (suspension_step_section, 1),
}


def _load_complex(ref: str) -> ADC:
    if ref == "-":
        return adc_from_doc(json.load(sys.stdin))
    if os.path.exists(ref):
        with open(ref, "r", encoding="utf-8") as handle:
            return adc_from_doc(json.load(handle))
    return resolve_complex_ref(ref)


def _cell_doc(cell: Cell) -> dict[str, Any]:
    return {
        "dim": cell.dim,
        "minus": [chain_to_doc(c) for c in cell.minus],
        "plus": [chain_to_doc(c) for c in cell.plus],
    }


def _emit(args, payload: Any) -> None:
    sys.stdout.write(canonical_json(payload, pretty=args.pretty) + "\n")


def _cmd_build(args) -> int:
    if args.command == "cube":
        result = resolve_complex_ref(f"cube:{args.n}")
    elif args.command == "tensor":
        result = tensor(_load_complex(args.left), _load_complex(args.right))
    elif args.command == "suspend":
        result = suspension(_load_complex(args.complex))
    elif args.command == "wedge":
        result, _, _ = wedge(_load_complex(args.left), _load_complex(args.right))
    else:
        result, _ = skeleton(_load_complex(args.complex), args.k)
    report = result.validate() if args.check else []
    payload: dict[str, Any] = adc_to_doc(result)
    if args.check:
        payload = {"complex": payload, "valid": not report, "report": report}
    _emit(args, payload)
    return EXIT_OK if not report else EXIT_VERIFY


def _cmd_check(args) -> int:
    payload = {}
    failed = False
    for ref in args.refs:
        report = _load_complex(ref).validate()
        payload[ref] = report
        failed = failed or bool(report)
    _emit(args, payload)
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_cells(args) -> int:
    complex_ = _load_complex(args.complex)
    cells = enumerate_cells(complex_, args.max_dim, args.coeff_bound,
                            include_identities=not args.no_identities)
    _emit(args, [_cell_doc(c) for c in cells])
    return EXIT_OK


def _cmd_hom(args) -> int:
    complex_ = _load_complex(args.complex)
    cells = hom_set(complex_, parse_key(args.source), parse_key(args.target),
                    args.max_dim, args.coeff_bound,
                    include_identities=not args.no_identities)
    _emit(args, [_cell_doc(c) for c in cells])
    return EXIT_OK


def _cmd_maps(args) -> int:
    builder, arity = MAP_BUILDERS[args.name]
    indices = args.indices
    if len(indices) != arity:
        raise GrayCubeError(
            f"map {args.name} takes {arity} index argument(s)")
    morphism = builder(*indices)
    payload: dict[str, Any] = {"map": morphism_to_doc(morphism)}
    exit_code = EXIT_OK
    if args.verify:
        checks: dict[str, bool] = {
            "valid": not morphism.validate(),
            "bipointed": morphism.is_bipointed(),
        }
        if args.name == "rho":
            checks["rho o iota = id"] = compose(
                morphism, wedge_section(*indices)).is_identity()
        elif args.name == "zeta":
            checks["zeta o eta = id"] = compose(
                morphism, wedge_step_section(*indices)).is_identity()
        elif args.name == "phi":
            checks["psi o phi = id"] = compose(
                suspension_quotient(*indices), morphism).is_identity()
        elif args.name == "chi":
            checks["xi o chi = id"] = compose(
                suspension_step_quotient(*indices), morphism).is_identity()
        payload["verified"] = checks
        if not all(checks.values()):
            exit_code = EXIT_VERIFY
    _emit(args, payload)
    return exit_code


def _cmd_witness(args) -> int:
    tree = parse_tree(args.tree)
    witness = theta_witness(tree)
    doc = witness_to_doc(witness)
    doc["tree"] = tree.render()
    text = canonical_json(doc, pretty=args.pretty) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.file == "-":
        doc = json.load(sys.stdin)
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    witness = witness_from_doc(doc)
    tree = parse_tree(doc["tree"]) if "tree" in doc else None
    report = verify_theta_witness(witness, tree)
    _emit(args, {"verified": not report, "report": report})
    return EXIT_OK if not report else EXIT_VERIFY


def _cmd_sections(args) -> int:
    builder, arity = MAP_BUILDERS[args.name]
    if len(args.indices) != arity:
        raise GrayCubeError(f"map {args.name} takes {arity} index argument(s)")
    morphism = builder(*args.indices)
    found = solve_sections(morphism, args.bound, bipointed=args.bipointed)
    _emit(args, {
        "coeff_bound": found.coeff_bound,
        "bipointed_only": found.bipointed_only,
        "count": len(found),
        "sections": [morphism_to_doc(s) for s in found.sections],
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graycube",
        description="exact engine for cubes, suspensions, wedges, and"
                    " retract certificates")
    parser.add_argument("--pretty", action="store_true",
                        help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cube", help="emit the n-cube")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("tensor", help="tensor product of two complexes")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("suspend", help="suspension of a complex")
    p.add_argument("complex")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("wedge", help="wedge sum of two bipointed complexes")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("skeleton", help="skeleton of a complex")
    p.add_argument("complex")
    p.add_argument("k", type=int)
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("check", help="validate complexes")
    p.add_argument("refs", nargs="+")

    p = sub.add_parser("cells", help="enumerate cells as tables")
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--coeff-bound", type=int, default=2)
    p.add_argument("--no-identities", action="store_true")

    p = sub.add_parser("hom", help="enumerate cells between two points")
    p.add_argument("complex")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--coeff-bound", type=int, default=2)
    p.add_argument("--no-identities", action="store_true")

    p = sub.add_parser("maps", help="emit a named structure map")
    p.add_argument("name", choices=sorted(MAP_BUILDERS))
    p.add_argument("indices", type=int, nargs="*")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("witness", help="build a tree witness")
    p.add_argument("--tree", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="re-check a witness file")
    p.add_argument("file")

    p = sub.add_parser("sections", help="enumerate bounded sections of a map")
    p.add_argument("name", choices=sorted(MAP_BUILDERS))
    p.add_argument("indices", type=int, nargs="*")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--bipointed", action="store_true")

    return parser


COMMANDS = {
    "cube": _cmd_build,
    "tensor": _cmd_build,
    "suspend": _cmd_build,
    "wedge": _cmd_build,
    "skeleton": _cmd_build,
    "check": _cmd_check,
    "cells": _cmd_cells,
    "hom": _cmd_hom,
    "maps": _cmd_maps,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "sections": _cmd_sections,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except ResourceError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GrayCubeError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
