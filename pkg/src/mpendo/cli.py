"""Command-line front end.

Verbs: enumerate, correspond, packet, transfer-matrix, verify.  Output is
deterministic JSON on stdout (a Report envelope with sorted keys); exit code
0 on success or a passing verification, 1 when a verification suite fails,
2 on usage or input errors.  No environment variables are consulted; the
only source of randomness is the explicit --seed.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .endodata import (
    LeviDatum,
    StableClassSO,
    EndoDatum,
    correspond,
    enumerate_elliptic,
    enumerate_embeddings,
    enumerate_levi,
    central_twist,
    iota,
    is_g_regular,
    symmetry_swap,
)
from .exactalg import HalfInt
from .realspectral import (
    adjoint_delta_spectral,
    elliptic_fiber,
    normal_form,
    packet,
    singletons_and_pairs,
    spectral_transfer_matrix,
    split_bijection_inverse,
    verify_spectral_inversion,
)
from .realtori import torus_types
from .serialize import (
    Report,
    encode_elliptic_param,
    encode_endodatum,
    encode_halfint,
    encode_hcparam,
    encode_infchar,
    encode_levi,
    encode_rational,
    encode_report,
    encode_signvector,
    encode_stable_class,
    encode_torustype,
)
from .suites import SUITES, run_suites


class UsageError(Exception):
    """Bad input on the command line; exits with code 2."""


@dataclass(frozen=True)
class Command:
    """A fully parsed invocation: verb plus its parameter map."""

    verb: str
    parameters: dict[str, Any]


_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def _parse_rational(text: str) -> Fraction:
    body = text.strip()
    if not _RATIONAL_RE.match(body):
        raise UsageError(f"not a rational literal: {text!r}")
    q = Fraction(body)
    if q == 0:
        raise UsageError("eigenvalues must be nonzero")
    return q


def _parse_rational_list(text: str) -> list[Fraction]:
    body = text.strip()
    if not body:
        return []
    return [_parse_rational(part) for part in body.split(",")]


def _parse_halfint_list(text: str) -> list[HalfInt]:
    body = text.strip()
    if not body:
        return []
    out = []
    for part in body.split(","):
        try:
            out.append(HalfInt.parse(part))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def _parse_levi(text: str) -> LeviDatum:
    """Literals like "1,1;flat=2", "2;flat=0", or "flat=3" (no blocks)."""
    body = text.strip()
    if ";" in body:
        blocks_part, _, flat_part = body.partition(";")
    elif body.startswith("flat="):
        blocks_part, flat_part = "", body
    else:
        raise UsageError(f"levi literal needs a flat= part: {text!r}")
    flat_part = flat_part.strip()
    if not flat_part.startswith("flat="):
        raise UsageError(f"levi literal needs a flat= part: {text!r}")
    try:
        flat = int(flat_part[len("flat=") :])
        blocks = tuple(
            int(b) for b in blocks_part.split(",") if b.strip()
        )
        return LeviDatum(blocks, flat)
    except ValueError as exc:
        raise UsageError(f"bad levi literal {text!r}: {exc}") from None


def _emit(report: Report) -> None:
    sys.stdout.buffer.write(encode_report(report))
    sys.stdout.buffer.flush()


# --- verb handlers ----------------------------------------------------------


def _cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if n is None or n < 0:
        raise UsageError("--n is required and must be non-negative")
    if args.kind == "elliptic":
        data = [encode_endodatum(d) for d in enumerate_elliptic(n)]
    elif args.kind == "levi":
        data = [encode_levi(levi) for levi in enumerate_levi(n)]
    elif args.kind == "tori":
        data = [encode_torustype(t) for t in torus_types(n)]
    elif args.kind == "embeddings":
        if args.levi is None:
            raise UsageError("--kind embeddings requires --levi")
        levi = _parse_levi(args.levi)
        if levi.rank != n:
            raise UsageError(
                f"levi has rank {levi.rank}, but --n is {n}"
            )
        if args.m_prime is None:
            splits = [(m, levi.flat_rank - m) for m in range(levi.flat_rank + 1)]
        else:
            if not 0 <= args.m_prime <= levi.flat_rank:
                raise UsageError("--m-prime must lie between 0 and the flat rank")
            splits = [(args.m_prime, levi.flat_rank - args.m_prime)]
        data = []
        for m_prime, m_dprime in splits:
            for s, datum in enumerate_embeddings(levi, m_prime, m_dprime):
                data.append(
                    {
                        "m_prime": m_prime,
                        "m_dprime": m_dprime,
                        "i_prime": list(s.i_prime),
                        "i_dprime": list(s.i_dprime),
                        "datum": encode_endodatum(datum),
                        "twist": list(central_twist(s).signs),
                    }
                )
    else:
        raise UsageError(f"unknown kind: {args.kind!r}")
    _emit(Report("pass", (), data))
    return 0


def _cmd_correspond(args: argparse.Namespace) -> int:
    gp = StableClassSO.of(_parse_rational_list(args.gamma_prime))
    gpp = StableClassSO.of(_parse_rational_list(args.gamma_dprime))
    datum = EndoDatum(gp.rank, gpp.rank)
    delta = correspond(gp, gpp, datum)
    swapped, symmetric = symmetry_swap(gp, gpp, datum)
    data = {
        "datum": encode_endodatum(datum),
        "gamma_prime": encode_stable_class(gp),
        "gamma_dprime": encode_stable_class(gpp),
        "delta": encode_stable_class(delta),
        "g_regular": is_g_regular(gp, gpp, datum),
        "iota": encode_rational(iota(datum)),
        "swapped_image": encode_stable_class(swapped),
    }
    checks = (
        {
            "name": "swap-negation",
            "status": "pass" if symmetric else "fail",
            "detail": "swapped datum matches the negated class",
            "counts": {"classes": 1},
        },
    )
    _emit(Report("pass" if symmetric else "fail", checks, data))
    return 0 if symmetric else 1


def _lambda_from_args(args: argparse.Namespace) -> Any:
    try:
        return normal_form(_parse_halfint_list(args.lam))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_packet(args: argparse.Namespace) -> int:
    lam = _lambda_from_args(args)
    singles, pairs = singletons_and_pairs(lam)
    pk = packet(lam)
    fiber = elliptic_fiber(lam)
    data = {
        "lambda": encode_infchar(lam),
        "singletons": [encode_halfint(a) for a in singles],
        "pairs": [encode_halfint(a) for a in pairs],
        "packet_size": len(pk.members),
        "members": [encode_hcparam(p) for p in pk.members],
        "fiber_size": len(fiber),
        "fiber": [
            {
                "kappa": encode_signvector(split_bijection_inverse(phi)[1]),
                "phi": encode_elliptic_param(phi),
            }
            for phi in fiber
        ],
    }
    _emit(Report("pass", (), data))
    return 0


def _cmd_transfer_matrix(args: argparse.Namespace) -> int:
    lam = _lambda_from_args(args)
    phis, members, matrix = spectral_transfer_matrix(lam)
    inverted = verify_spectral_inversion(lam)
    data = {
        "lambda": encode_infchar(lam),
        "fiber": [encode_elliptic_param(phi) for phi in phis],
        "members": [encode_hcparam(p) for p in members],
        "delta": matrix,
        "adjoint": [
            [encode_rational(adjoint_delta_spectral(p, phi)) for phi in phis]
            for p in members
        ],
        "inversion": inverted,
    }
    checks = (
        {
            "name": "spectral-inversion",
            "status": "pass" if inverted else "fail",
            "detail": "both orthogonality identities, exact",
            "counts": {"packet": len(members)},
        },
    )
    _emit(Report("pass" if inverted else "fail", checks, data))
    return 0 if inverted else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from "
            f"{', '.join(list(SUITES) + ['all'])}"
        )
    reports = run_suites(
        names,
        max_n=args.max_n,
        seed=args.seed,
        trials=args.trials,
        inject_sign_error=args.inject_sign_error,
    )
    checks = []
    for rep in reports:
        for check in rep["checks"]:
            checks.append({**check, "name": f"{rep['name']}/{check['name']}"})
    status = "pass" if all(r["status"] == "pass" for r in reports) else "fail"
    data = {
        "suites": [{"name": r["name"], "status": r["status"]} for r in reports],
        "max_n": args.max_n,
        "seed": args.seed,
        "trials": args.trials,
    }
    _emit(Report(status, tuple(checks), data))
    return 0 if status == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpendo",
        description=(
            "Exact combinatorics of metaplectic endoscopy: enumeration, "
            "class correspondences, packets, transfer matrices, and "
            "verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_enum = sub.add_parser("enumerate", help="enumerate finite structures")
    p_enum.add_argument(
        "--kind", required=True, choices=["elliptic", "levi", "embeddings", "tori"]
    )
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--levi", help='levi literal, e.g. "1,1;flat=2"')
    p_enum.add_argument("--m-prime", dest="m_prime", type=int, default=None)
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_corr = sub.add_parser("correspond", help="evaluate the class correspondence")
    p_corr.add_argument("--gamma-prime", required=True, dest="gamma_prime")
    p_corr.add_argument("--gamma-dprime", required=True, dest="gamma_dprime")
    p_corr.set_defaults(handler=_cmd_correspond)

    p_pack = sub.add_parser("packet", help="packet and fiber above a lambda")
    p_pack.add_argument("--lambda", required=True, dest="lam")
    p_pack.set_defaults(handler=_cmd_packet)

    p_mat = sub.add_parser(
        "transfer-matrix", help="spectral transfer matrix above a lambda"
    )
    p_mat.add_argument("--lambda", required=True, dest="lam")
    p_mat.set_defaults(handler=_cmd_transfer_matrix)

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--suite", required=True)
    p_ver.add_argument("--max-n", dest="max_n", type=int, default=4)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--trials", type=int, default=100)
    p_ver.add_argument(
        "--inject-sign-error",
        action="store_true",
        help="deliberately corrupt one check (exit-code self-test)",
    )
    p_ver.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
