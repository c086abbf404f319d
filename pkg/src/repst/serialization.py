"""JSON encodings for the library's value types.

Rationals are strings "num/den" (or "num" when integral); polynomials list
their coefficients in ascending degree.  Every ``*_from_json`` accepts what
the matching ``*_to_json`` produces and raises ``SchemaError`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .combinatorics import Partition, as_partition
from .diagrams import DIAGRAM, ORBIT, DiagramMorphism, PartitionDiagram
from .exact_arith import AlgebraicNumber, Poly
from .superlinear import SuperAlgebra


class SchemaError(ValueError):
    """A JSON document does not match the expected encoding."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def rational_to_json(x) -> str:
    return str(Fraction(x))


def rational_from_json(x) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    _require(isinstance(x, str), f"not a rational: {x!r}")
    try:
        return Fraction(x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not a rational: {x!r}") from exc


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam)


def partition_from_json(obj) -> Partition:
    _require(isinstance(obj, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in obj),
             f"a partition is an array of integers, got {obj!r}")
    try:
        return as_partition(obj)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def set_partition_to_json(blocks) -> list[list[str]]:
    return [[str(x) for x in b] for b in blocks]


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [rational_to_json(c) for c in Poly.coerce(p).coeffs]}


def poly_from_json(obj) -> Poly:
    _require(isinstance(obj, dict) and isinstance(obj.get("coeffs"), list),
             f"a polynomial is {{\"coeffs\": [...]}}, got {obj!r}")
    return Poly([rational_from_json(c) for c in obj["coeffs"]])


def algnum_to_json(a: AlgebraicNumber) -> dict:
    return {"modulus": poly_to_json(a.modulus), "rep": poly_to_json(a.rep)}


def algnum_from_json(obj) -> AlgebraicNumber:
    _require(isinstance(obj, dict) and "modulus" in obj and "rep" in obj,
             f"an algebraic number is {{\"modulus\", \"rep\"}}, got {obj!r}")
    try:
        return AlgebraicNumber(poly_from_json(obj["modulus"]), poly_from_json(obj["rep"]))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def diagram_to_json(d: PartitionDiagram) -> dict:
    return {"top": d.top, "bottom": d.bottom, "blocks": d.labels()}


def diagram_from_json(obj) -> PartitionDiagram:
    _require(isinstance(obj, dict) and {"top", "bottom", "blocks"} <= obj.keys(),
             f"a diagram is {{\"top\", \"bottom\", \"blocks\"}}, got {obj!r}")
    top, bottom, blocks = obj["top"], obj["bottom"], obj["blocks"]
    _require(isinstance(top, int) and isinstance(bottom, int) and top >= 0 and bottom >= 0,
             "top and bottom must be non-negative integers")
    _require(isinstance(blocks, list) and all(isinstance(b, list) and b for b in blocks),
             "blocks must be a list of non-empty label lists")
    try:
        return PartitionDiagram.from_labels(top, bottom, blocks)
    except (ValueError, KeyError, TypeError) as exc:
        raise SchemaError(f"invalid diagram: {exc}") from exc


def morphism_to_json(f: DiagramMorphism) -> dict:
    return {
        "top": f.top,
        "bottom": f.bottom,
        "basis": f.basis,
        "terms": [{"diagram": diagram_to_json(d), "coeff": poly_to_json(c)} for d, c in sorted(f.terms.items())],
    }


def morphism_from_json(obj) -> DiagramMorphism:
    """Decode a morphism; a bare diagram is read as that diagram with coefficient 1."""
    _require(isinstance(obj, dict), f"expected a JSON object, got {obj!r}")
    if "terms" not in obj:
        return DiagramMorphism.of(diagram_from_json(obj))
    basis = obj.get("basis", DIAGRAM)
    _require(basis in (DIAGRAM, ORBIT), f"basis must be {DIAGRAM!r} or {ORBIT!r}")
    _require(isinstance(obj["terms"], list), "terms must be a list")
    terms: dict[PartitionDiagram, Poly] = {}
    for t in obj["terms"]:
        _require(isinstance(t, dict) and "diagram" in t and "coeff" in t, "each term has a diagram and a coeff")
        d = diagram_from_json(t["diagram"])
        c = t["coeff"]
        c = poly_from_json(c) if isinstance(c, dict) else Poly.const(rational_from_json(c))
        terms[d] = terms.get(d, Poly()) + c
    top, bottom = obj.get("top"), obj.get("bottom")
    if terms:
        shapes = {(d.top, d.bottom) for d in terms}
        _require(len(shapes) == 1, "all diagrams in a morphism must share one shape")
        shape = shapes.pop()
        _require(top in (None, shape[0]) and bottom in (None, shape[1]), "declared shape disagrees with diagrams")
        top, bottom = shape
    _require(isinstance(top, int) and isinstance(bottom, int), "an empty morphism needs top and bottom")
    return DiagramMorphism(top, bottom, terms, basis)


def multiplicities_to_json(mults) -> list[dict]:
    items = mults.items() if hasattr(mults, "items") else iter(mults)
    return [{"partition": list(lam), "mult": int(k)} for lam, k in items]


def multiplicities_from_json(obj) -> dict[Partition, int]:
    _require(isinstance(obj, list), "a multiplicity map is an array of {partition, mult}")
    out: dict[Partition, int] = {}
    for item in obj:
        _require(isinstance(item, dict) and "partition" in item and "mult" in item,
                 f"bad multiplicity entry {item!r}")
        k = item["mult"]
        _require(isinstance(k, int) and not isinstance(k, bool) and k >= 0, f"bad multiplicity {k!r}")
        lam = partition_from_json(item["partition"])
        out[lam] = out.get(lam, 0) + k
    return out


def report_to_json(report) -> dict:
    return {"title": report.title, "steps": [_plain(s) for s in report.steps], "verdict": report.verdict}


def superalgebra_to_json(a: SuperAlgebra) -> dict:
    return {
        "p": a.p,
        "q": a.q,
        "unit": [rational_to_json(x) for x in a.unit],
        "mult": [[[rational_to_json(x) for x in row] for row in plane] for plane in a.mult],
    }


def superalgebra_from_json(obj) -> SuperAlgebra:
    _require(isinstance(obj, dict) and {"p", "q", "unit", "mult"} <= obj.keys(),
             "a superalgebra is {\"p\", \"q\", \"unit\", \"mult\"}")
    p, q = obj["p"], obj["q"]
    _require(isinstance(p, int) and isinstance(q, int) and p >= 0 and q >= 0, "p and q must be non-negative integers")
    try:
        mult = [[[rational_from_json(x) for x in row] for row in plane] for plane in obj["mult"]]
        unit = [rational_from_json(x) for x in obj["unit"]]
    except TypeError as exc:
        raise SchemaError("mult must be a nested (p+q)^3 array") from exc
    return SuperAlgebra(p, q, mult, unit)


def _plain(x: Any):
    """Recursively convert library values to JSON-compatible data."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, Fraction):
        return rational_to_json(x)
    if isinstance(x, Poly):
        return poly_to_json(x)
    if isinstance(x, AlgebraicNumber):
        return algnum_to_json(x)
    if isinstance(x, PartitionDiagram):
        return diagram_to_json(x)
    if isinstance(x, DiagramMorphism):
        return morphism_to_json(x)
    return x


to_plain = _plain
