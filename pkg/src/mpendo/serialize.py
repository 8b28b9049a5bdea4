"""Deterministic JSON encoding of every payload type, and the inverse.

Conventions: half-integers become JSON integers when integral and strings
"p/2" otherwise; rationals become {"num": ..., "den": ...}; sign vectors
become arrays of +1/-1; mu_8 roots become {"exp": k}.  Keys are sorted and
output is byte-identical across runs for identical inputs.  Decoding errors
carry the path to the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .endodata import (
    EndoDatum,
    LeviDatum,
    StableClassSO,
    StableClassSp,
)
from .exactalg import HalfInt, SignVector, UnityRoot8
from .realspectral import EllipticParam, HCParam, InfChar, Packet
from .realtori import TorusType


class DecodeError(ValueError):
    """Schema violation, with the path to the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Report:
    """Envelope for every CLI invocation."""

    status: str
    checks: tuple[dict, ...] = ()
    data: Any = None


# --- encoding -------------------------------------------------------------


def encode_halfint(h: HalfInt) -> int | str:
    if h.is_integer:
        return h.twice // 2
    return f"{h.twice}/2"


def encode_rational(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def encode_signvector(v: SignVector) -> list[int]:
    return list(v.bits)


def encode_mu8(z: UnityRoot8) -> dict:
    return {"exp": z.exponent}


def encode_endodatum(d: EndoDatum) -> dict:
    return {"n_prime": d.n_prime, "n_dprime": d.n_dprime}


def encode_levi(levi: LeviDatum) -> dict:
    return {"blocks": list(levi.gl_blocks), "flat": levi.flat_rank}


def encode_torustype(t: TorusType) -> dict:
    return {"m": t.m, "r": t.r, "s": t.s}


def encode_stable_class(cls: StableClassSO | StableClassSp) -> list[dict]:
    return [encode_rational(e) for e in cls.eigen]


def encode_infchar(lam: InfChar) -> list[int | str]:
    return [encode_halfint(a) for a in lam.entries]


def encode_hcparam(p: HCParam) -> dict:
    return {
        "base": encode_infchar(p.base),
        "signed": [encode_halfint(a) for a in p.signed],
    }


def encode_elliptic_param(phi: EllipticParam) -> dict:
    return {
        "datum": encode_endodatum(phi.datum),
        "pile_prime": [encode_halfint(a) for a in phi.pile_prime],
        "pile_dprime": [encode_halfint(a) for a in phi.pile_dprime],
    }


def encode_packet(pk: Packet) -> dict:
    return {
        "lambda": encode_infchar(pk.lam),
        "members": [encode_hcparam(p) for p in pk.members],
    }


def encode_report(report: Report) -> bytes:
    payload = {
        "status": report.status,
        "checks": list(report.checks),
        "data": report.data,
    }
    text = json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1)
    return (text + "\n").encode("utf-8")


# --- decoding -------------------------------------------------------------


def decode_halfint(value: Any, path: str = "$") -> HalfInt:
    if isinstance(value, bool):
        raise DecodeError(path, f"not a half-integer: {value!r}")
    if isinstance(value, int):
        return HalfInt.from_int(value)
    if isinstance(value, str):
        try:
            return HalfInt.parse(value)
        except ValueError:
            raise DecodeError(path, f"not a half-integer: {value!r}") from None
    raise DecodeError(path, f"not a half-integer: {value!r}")


def _expect_dict(value: Any, keys: set[str], path: str) -> dict:
    if not isinstance(value, dict):
        raise DecodeError(path, f"expected an object, got {type(value).__name__}")
    missing = keys - set(value)
    if missing:
        raise DecodeError(path, f"missing fields: {sorted(missing)}")
    return value


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DecodeError(path, f"expected an integer, got {value!r}")
    return value


def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise DecodeError(path, f"expected an array, got {type(value).__name__}")
    return value


def decode_rational(value: Any, path: str = "$") -> Fraction:
    obj = _expect_dict(value, {"num", "den"}, path)
    num = _expect_int(obj["num"], f"{path}.num")
    den = _expect_int(obj["den"], f"{path}.den")
    if den <= 0:
        raise DecodeError(f"{path}.den", "denominator must be positive")
    q = Fraction(num, den)
    if (q.numerator, q.denominator) != (num, den):
        raise DecodeError(path, f"not in lowest terms: {num}/{den}")
    return q


def decode_signvector(value: Any, path: str = "$") -> SignVector:
    items = _expect_list(value, path)
    for i, b in enumerate(items):
        if b not in (1, -1) or isinstance(b, bool):
            raise DecodeError(f"{path}[{i}]", f"expected +1 or -1, got {b!r}")
    return SignVector(tuple(items))


def decode_mu8(value: Any, path: str = "$") -> UnityRoot8:
    obj = _expect_dict(value, {"exp"}, path)
    return UnityRoot8(_expect_int(obj["exp"], f"{path}.exp"))


def decode_endodatum(value: Any, path: str = "$") -> EndoDatum:
    obj = _expect_dict(value, {"n_prime", "n_dprime"}, path)
    return EndoDatum(
        _expect_int(obj["n_prime"], f"{path}.n_prime"),
        _expect_int(obj["n_dprime"], f"{path}.n_dprime"),
    )


def decode_levi(value: Any, path: str = "$") -> LeviDatum:
    obj = _expect_dict(value, {"blocks", "flat"}, path)
    blocks = _expect_list(obj["blocks"], f"{path}.blocks")
    return LeviDatum(
        tuple(_expect_int(b, f"{path}.blocks[{i}]") for i, b in enumerate(blocks)),
        _expect_int(obj["flat"], f"{path}.flat"),
    )


def decode_torustype(value: Any, path: str = "$") -> TorusType:
    obj = _expect_dict(value, {"m", "r", "s"}, path)
    return TorusType(
        _expect_int(obj["m"], f"{path}.m"),
        _expect_int(obj["r"], f"{path}.r"),
        _expect_int(obj["s"], f"{path}.s"),
    )


def decode_infchar(value: Any, path: str = "$") -> InfChar:
    items = _expect_list(value, path)
    entries = tuple(
        decode_halfint(a, f"{path}[{i}]") for i, a in enumerate(items)
    )
    try:
        return InfChar(entries)
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from None


def decode_hcparam(value: Any, path: str = "$") -> HCParam:
    obj = _expect_dict(value, {"base", "signed"}, path)
    base = decode_infchar(obj["base"], f"{path}.base")
    signed_items = _expect_list(obj["signed"], f"{path}.signed")
    signed = tuple(
        decode_halfint(a, f"{path}.signed[{i}]") for i, a in enumerate(signed_items)
    )
    try:
        return HCParam(signed, base)
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from None


def decode_elliptic_param(value: Any, path: str = "$") -> EllipticParam:
    obj = _expect_dict(value, {"datum", "pile_prime", "pile_dprime"}, path)
    datum = decode_endodatum(obj["datum"], f"{path}.datum")
    piles = []
    for key in ("pile_prime", "pile_dprime"):
        items = _expect_list(obj[key], f"{path}.{key}")
        piles.append(
            tuple(decode_halfint(a, f"{path}.{key}[{i}]") for i, a in enumerate(items))
        )
    try:
        return EllipticParam(datum, piles[0], piles[1])
    except ValueError as exc:
        raise DecodeError(path, str(exc)) from None


def decode_packet(value: Any, path: str = "$") -> Packet:
    obj = _expect_dict(value, {"lambda", "members"}, path)
    lam = decode_infchar(obj["lambda"], f"{path}.lambda")
    members = _expect_list(obj["members"], f"{path}.members")
    return Packet(
        lam,
        tuple(
            decode_hcparam(p, f"{path}.members[{i}]") for i, p in enumerate(members)
        ),
    )


def decode_report(data: bytes | str) -> Report:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError("$", f"invalid JSON: {exc}") from None
    obj = _expect_dict(payload, {"status", "checks", "data"}, "$")
    if obj["status"] not in ("pass", "fail"):
        raise DecodeError("$.status", f"expected pass or fail, got {obj['status']!r}")
    checks = _expect_list(obj["checks"], "$.checks")
    return Report(obj["status"], tuple(checks), obj["data"])
