"""
JSON input and output for rings, ideals, degree sets, ring maps and reports.

Rings are ``{"family": ..., "n"|"ns"|"a": ..., "aliases": [...]}``; products
without aliases get the short names a0.., b0.., ... Ideals are either a list
of polynomial strings or ``{"ring": ..., "generators": [...]}``; a
``{"sum": [...]}`` entry adds up ``{"product": [[...], [...]]}`` ideals of
linear forms and plain ``{"generators": [...]}`` ideals.
"""
import json
import logging
import os
import re
from typing import Any, Iterable, List, Optional, Union

from .algebra.polynomials import parse_polynomial
from .algebra.rings import HIRZEBRUCH, PRODUCT, PROJECTIVE, CoxRing, greek_aliases, ring_from_descriptor
from .criteria.degree_sets import DegreeSet, parse_degree_set
from .errors import InputError
from .groebner.ideal import Ideal
from .ringmaps import GradedRingMap, ToricLiftData

logger = logging.getLogger(__name__)

_SHORTHAND = re.compile(r"^\s*(?:P\^?\d+)(?:\s*[xX*]\s*P\^?\d+)*\s*$")
_HIRZEBRUCH = re.compile(r"^\s*(?:H|hirzebruch)[_:(]?\s*(\d+)\)?\s*$", re.IGNORECASE)


def load_json(source: Union[str, dict, list]) -> Any:
    """A JSON document from a path, inline JSON text, or an already-parsed value."""
    if isinstance(source, (dict, list)):
        return source
    if os.path.exists(source):
        try:
            with open(source, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read JSON from {source}: {exc}") from exc
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source!r} is neither a file nor JSON text") from exc


# -- rings ------------------------------------------------------------------------

def ring_from_json(data: Union[str, dict]) -> CoxRing:
    """A ring from a descriptor, a file, or shorthand like ``P3xP3`` and ``H1``."""
    if isinstance(data, str):
        if _SHORTHAND.match(data):
            ns = [int(n) for n in re.findall(r"\d+", data)]
            return ring_from_json({"family": PROJECTIVE if len(ns) == 1 else PRODUCT,
                                   **({"n": ns[0]} if len(ns) == 1 else {"ns": ns})})
        match = _HIRZEBRUCH.match(data)
        if match:
            return ring_from_json({"family": HIRZEBRUCH, "a": int(match.group(1))})
        data = load_json(data)
    if not isinstance(data, dict):
        raise InputError(f"malformed ring descriptor {data!r}")
    aliases = data.get("aliases")
    if aliases is None and data.get("family") in (PROJECTIVE, PRODUCT):
        try:
            ns = [int(data["n"])] if data["family"] == PROJECTIVE else [int(n) for n in data["ns"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed ring descriptor {data!r}") from exc
        aliases = greek_aliases(ns)
    return ring_from_descriptor(data, aliases)


def ring_to_json(ring: CoxRing) -> dict:
    out = ring.descriptor()
    if all(v.alias for v in ring.variables):
        out["aliases"] = [v.alias for v in ring.variables]
    return out


# -- ideals -------------------------------------------------------------------------

def _linear_product(ring: CoxRing, factors: List[List[str]]) -> Ideal:
    result = Ideal.unit(ring)
    for factor in factors:
        result = result * Ideal.from_strings(ring, factor)
    return result


def _ideal_part(ring: CoxRing, part: Any) -> Ideal:
    if isinstance(part, list):
        return Ideal.from_strings(ring, part)
    if isinstance(part, dict):
        if "sum" in part:
            total = Ideal(ring)
            for piece in part["sum"]:
                total = total + _ideal_part(ring, piece)
            return total
        if "product" in part:
            return _linear_product(ring, part["product"])
        if "generators" in part:
            return Ideal.from_strings(ring, part["generators"])
    raise InputError(f"malformed ideal description {part!r}")


def ideal_from_json(data: Any, ring: Optional[CoxRing] = None) -> Ideal:
    """An ideal from a file, JSON text, a generator list or a ``{"ring", "generators"}`` object."""
    data = load_json(data) if isinstance(data, str) else data
    if isinstance(data, dict) and "ring" in data:
        ring = ring_from_json(data["ring"])
        body = {k: v for k, v in data.items() if k in ("sum", "product", "generators")}
        return _ideal_part(ring, body)
    if ring is None:
        raise InputError("the ideal does not name its ring and none was given")
    return _ideal_part(ring, data)


def ideal_to_json(I: Ideal) -> dict:
    return {"ring": ring_to_json(I.ring), "generators": I.to_strings()}


# -- degree sets and maps -----------------------------------------------------------

def degree_set_from_json(p: int, data: Any) -> DegreeSet:
    """``"everything"``, ``"empty"``, or a list of generator degrees."""
    data = load_json(data) if isinstance(data, str) and data not in ("everything", "empty") else data
    if data == "everything":
        return DegreeSet.everything(p)
    if data == "empty" or data == []:
        return DegreeSet.empty(p)
    if not isinstance(data, list):
        raise InputError(f"malformed degree set {data!r}")
    return parse_degree_set(p, data)


def map_from_json(data: Any) -> GradedRingMap:
    data = load_json(data) if isinstance(data, str) else data
    try:
        source = ring_from_json(data["source"])
        target = ring_from_json(data["target"])
        images = [parse_polynomial(target, t) for t in data["images"]]
        degree_map = data["degreeMap"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed map descriptor: {exc}") from exc
    return GradedRingMap(source, target, tuple(images), degree_map, data.get("name", ""))


def toric_data_from_json(data: Any) -> ToricLiftData:
    """``{"sourceRays": [...], "targetRays": [...], "delta": [[...], ...]}``."""
    data = load_json(data) if isinstance(data, str) else data
    try:
        return ToricLiftData(
            tuple(tuple(int(c) for c in u) for u in data["sourceRays"]),
            tuple(tuple(int(c) for c in u) for u in data["targetRays"]),
            tuple(tuple(int(c) for c in row) for row in data["delta"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed toric data: {exc}") from exc


def map_to_json(phi: GradedRingMap) -> dict:
    out = phi.to_json()
    out["source"] = ring_to_json(phi.source)
    out["target"] = ring_to_json(phi.target)
    return out


# -- reports ------------------------------------------------------------------------

def dumps(report: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, default=_default) + "\n"


def _default(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if hasattr(value, "to_list"):
        return value.to_list()
    if isinstance(value, Iterable):
        return list(value)
    return str(value)


def write_report(report: Any, path: Optional[str] = None) -> str:
    text = dumps(report)
    if path:
        try:
            with open(path, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as exc:
            raise InputError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
        logger.info("report written to %s", path)
    return text
