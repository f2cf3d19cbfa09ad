"""Command-line interface.

Every command prints one JSON object with keys ``command``, ``inputs``,
``payload`` and ``exact`` (always true); all numbers that could be
non-integral are exact fraction strings "p/q".  Exit codes: 0 success,
2 input error, 3 internal invariant violation.

Group grammar: one generator is a comma-separated list of rationals
("1/5,1/5,1/5,1/5,1/5"); generators are separated by semicolons.  With
``--mod k`` the entries are read as integers over k.  The environment
variable LG_MAX_DEGREE bounds the quintic normal-form degree (default 20).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report as report_mod
from .errors import InputError, InternalInvariantError
from .hochschild import canonical_splitting, equivariance_check, flat_extension
from .invertible import (
    check_invertible,
    decompose_atomic,
    inverse_exponent_matrix,
    parse_polynomial,
    weights,
)
from .milnor import milnor_basis
from .periods import cubic_flat_coordinate, quintic_mirror_map, quintic_yukawa
from .quintic import QuinticFamily
from .splitting import splitting_obstruction_dims, verify_degree_gap
from .state_space import localize, sector_report
from .symmetry import PhaseVector, max_symmetry_group, subgroup

from .errors import NotAtomicDecomposableError


def parse_group_argument(text: str, mod: int | None) -> list[PhaseVector]:
    generators = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        entries = [e.strip() for e in chunk.split(",")]
        if mod is not None:
            phases = [Fraction(int(e), mod) for e in entries]
        else:
            phases = [Fraction(e) for e in entries]
        generators.append(PhaseVector.of(phases))
    return generators


def _series_payload(series) -> list[str]:
    return series.as_strings()


def cmd_analyze(args) -> dict:
    poly = parse_polynomial(args.polynomial)
    e = check_invertible(poly)
    inv = inverse_exponent_matrix(e)
    w = weights(e)
    group = max_symmetry_group(e)
    payload = {
        "variable_count": poly.variable_count,
        "exponent_matrix": [list(row) for row in e.entries],
        "inverse_exponent_matrix": [[str(v) for v in row] for row in inv],
        "weights": [str(q) for q in w.weights],
        "central_charge": str(w.central_charge),
        "milnor_number": w.milnor_number(),
        "max_group_order": group.order,
        "grading_element_special_linear": sum(w.weights) % 1 == 0,
    }
    try:
        deco = decompose_atomic(e)
        payload["atomic_blocks"] = [
            {
                "kind": b.kind,
                "variables": list(b.variable_indices),
                "exponents": list(b.exponents),
            }
            for b in deco.blocks
        ]
        basis = milnor_basis(deco, w)
        payload["basis_size"] = len(basis)
    except NotAtomicDecomposableError as exc:
        payload["atomic_blocks"] = None
        payload["atomic_error"] = str(exc)
    return payload


def cmd_state_space(args) -> dict:
    poly = parse_polynomial(args.polynomial)
    e = check_invertible(poly)
    ambient = max_symmetry_group(e)
    gens = parse_group_argument(args.group, args.mod)
    group = subgroup(gens, ambient)
    space = localize(poly, group)
    rows = sector_report(space)
    if args.tsv:
        report_mod.write_sector_tsv(rows, args.tsv)
    return {
        "group_order": group.order,
        "group_special_linear": space.group_is_special_linear,
        "group_contains_grading": group.contains_grading(),
        "odd_dim": space.odd_dim,
        "even_dim": space.even_dim,
        "sectors": [
            {
                "twist": list(r["twist"]),
                "fixed_dim": r["fixed_dim"],
                "fixed_indices": list(r["fixed_indices"]),
                "restricted_mu": r["restricted_mu"],
                "invariant_count": r["invariant_count"],
                "parity": r["parity"],
                "degrees": list(r["degrees"]),
            }
            for r in rows
        ],
    }


def cmd_verify_splitting(args) -> dict:
    poly = parse_polynomial(args.polynomial)
    cert = verify_degree_gap(poly)
    obstructions = splitting_obstruction_dims(poly)
    return {
        "verdict": cert.verdict,
        "pairs_checked": cert.pairs_checked,
        "violations": [
            {
                "r": list(v.r),
                "r_prime": list(v.r_prime),
                "degree_gap": str(v.degree_gap),
                "integrality_witness": [str(x) for x in v.integrality_witness],
            }
            for v in cert.violations
        ],
        "obstruction_table": [
            {
                "degree": str(row.degree),
                "k": row.k,
                "target_degree": str(row.target_degree),
                "target_dim": row.target_dim,
                "equivariant_hom_dim": row.equivariant_hom_dim,
            }
            for row in obstructions
        ],
    }


def cmd_mirror_map(args) -> dict:
    if args.model == "cubic":
        flat = cubic_flat_coordinate(args.order)
        return {
            "g": _series_payload(flat.g),
            "h": _series_payload(flat.h),
            "tau": _series_payload(flat.tau),
            "t_of_tau": _series_payload(flat.t_of_tau),
            "prepotential": "(1/2) * t0^2 * tau",
        }
    tau, psi_of_tau = quintic_mirror_map(args.order)
    return {
        "tau": _series_payload(tau),
        "psi_of_tau": _series_payload(psi_of_tau),
    }


def cmd_yukawa(args) -> dict:
    family = QuinticFamily()
    periods = quintic_yukawa(args.order, family)
    return {
        "coupling_psi": {
            "numerator": [str(c) for c in periods.yukawa_psi.numerator],
            "denominator": [str(c) for c in periods.yukawa_psi.denominator],
        },
        "one_minus_psi5_times_coupling": [str(c) for c in periods.coupling_numerator],
        "f3_tau": _series_payload(periods.f3),
        "omega": [_series_payload(s) for s in periods.omega],
        "normalization": periods.normalization,
    }


def cmd_hochschild_cubic(args) -> dict:
    order = args.order
    g = flat_extension("s0", order)
    h = flat_extension("omega", order)
    s0_split = canonical_splitting("s0", order, min(order, 6))
    omega_split = canonical_splitting("omega", order, min(order, 6))
    return {
        "s0_flat": _series_payload(g),
        "omega_flat": _series_payload(h),
        "equivariance": {
            "s0": equivariance_check(s0_split),
            "omega": equivariance_check(omega_split),
        },
    }


def cmd_report(args) -> dict:
    return report_mod.run_report(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgorb",
        description="Exact invariants of invertible Landau-Ginzburg orbifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invertibility, blocks, inverse, weights, charge")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("state-space", help="orbifold state space dimensions by sector")
    p.add_argument("polynomial")
    p.add_argument("--group", required=True, help="semicolon-separated generators")
    p.add_argument("--mod", type=int, default=None, help="read generator entries over this modulus")
    p.add_argument("--tsv", default=None, help="also write the sector table to this TSV file")
    p.set_defaults(func=cmd_state_space)

    p = sub.add_parser("verify-splitting", help="degree-gap equivariance certificate")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_verify_splitting)

    p = sub.add_parser("mirror-map", help="flat coordinate series")
    p.add_argument("--model", choices=["cubic", "quintic"], required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_mirror_map)

    p = sub.add_parser("yukawa", help="quintic coupling and flat-frame F3 series")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_yukawa)

    p = sub.add_parser("hochschild-cubic", help="chain-level flat extensions and equivariance")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_hochschild_cubic)

    p = sub.add_parser("report", help="write TSV tables and figures to a directory")
    p.add_argument("polynomial")
    p.add_argument("--group", default=None, help="semicolon-separated generators")
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--model", choices=["cubic", "quintic"], default=None)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--outdir", required=True)
    p.set_defaults(func=cmd_report)

    return parser


def _inputs_of(args) -> dict:
    skip = {"func", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except InputError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 2
    except InternalInvariantError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 3
    result = {
        "command": args.command,
        "inputs": _inputs_of(args),
        "payload": payload,
        "exact": True,
    }
    print(json.dumps(result, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
