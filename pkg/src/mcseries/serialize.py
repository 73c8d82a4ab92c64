"""JSON encoding and decoding for every value the CLI reads or writes.

Encoders lean on the canonical internal orderings, so equal objects always
produce identical JSON; decoders validate through the ordinary constructors
rather than trusting the file.  The monoid reader accepts both the full
schema written here and the short form {"generators": [names...],
"relations": [[...]]} where generators are the ambient basis vectors.
"""

from __future__ import annotations

from .errors import MCSError
from .gm_action import (
    FixedComponentStratum,
    GmDecomposition,
    OrbitFamilyOverPoint,
    OrbitFamilyOverPuncturedLine,
)
from .kring import KElement, KRingSpec, ReductionRule
from .monoid import AbelianGroupPresentation, GradedMonoid, MonoidElement
from .series import MonoidPolynomial, RationalSeries, TruncatedSeries
from .toric import Fan

__all__ = [
    "ring_to_json", "ring_from_json",
    "element_to_json", "element_from_json",
    "monoid_element_to_json", "monoid_element_from_json",
    "monoid_to_json", "monoid_from_json",
    "series_to_json", "series_from_json",
    "fan_to_json", "fan_from_json",
    "decomposition_to_json", "decomposition_from_json",
]


class SchemaError(MCSError):
    """Malformed or inconsistent JSON input."""


def _need(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{kind} JSON needs a {key!r} field")
    return obj[key]


# ---------------------------------------------------------------------------
# coefficient rings and their elements


def ring_to_json(spec: KRingSpec) -> dict:
    out: dict = {"generators": list(spec.generators)}
    if spec.a1_homotopy:
        out["a1_homotopy"] = True
    rules = [r for r in spec.reductions if r.symbol != "eps" or r.power != 2
             or r.replacement != (((), 1),)]
    if rules:
        out["reductions"] = [
            {"symbol": r.symbol, "power": r.power,
             "replacement": [[[list(p) for p in exp], c]
                             for exp, c in r.replacement]}
            for r in rules]
    return out


def ring_from_json(obj) -> KRingSpec:
    gens = tuple(_need(obj, "generators", "ring"))
    rules = []
    for r in obj.get("reductions", ()):
        replacement = tuple(
            (tuple((str(n), int(e)) for n, e in exp), int(c))
            for exp, c in r["replacement"])
        rules.append(ReductionRule(str(r["symbol"]), int(r["power"]), replacement))
    return KRingSpec(gens, rules, bool(obj.get("a1_homotopy", False)))


def element_to_json(x: KElement) -> dict:
    terms = []
    for exp, coeff in x.terms:
        named = {name: e for name, e in zip(x.spec.generators, exp) if e}
        terms.append({"exp": named, "coeff": coeff})
    return {"terms": terms}


def element_from_json(ring: KRingSpec, obj) -> KElement:
    raw: dict[tuple[int, ...], int] = {}
    for term in _need(obj, "terms", "ring element"):
        vec = [0] * len(ring.generators)
        for name, e in term.get("exp", {}).items():
            vec[ring.index(name)] = int(e)
        key = tuple(vec)
        raw[key] = raw.get(key, 0) + int(term["coeff"])
    return ring.element(raw)


# ---------------------------------------------------------------------------
# monoids and their elements


def monoid_element_to_json(e: MonoidElement) -> dict:
    return {"free": list(e.free), "torsion": list(e.torsion)}


def monoid_element_from_json(monoid: GradedMonoid, obj) -> MonoidElement:
    free = tuple(int(x) for x in _need(obj, "free", "monoid element"))
    torsion = tuple(int(x) for x in obj.get("torsion", ()))
    return MonoidElement(free, torsion, monoid.group.invariants)


def monoid_to_json(monoid: GradedMonoid) -> dict:
    group = monoid.group
    return {
        "ambient_generators": group.num_generators,
        "relations": [list(r) for r in group.relations],
        "generators": [{"name": n, "ambient": group.lift(g)}
                       for n, g in zip(monoid.names, monoid.generators)],
        "grading": list(monoid.grading),
    }


def monoid_from_json(obj) -> GradedMonoid:
    gens = _need(obj, "generators", "monoid")
    relations = [tuple(int(x) for x in row) for row in obj.get("relations", ())]
    if gens and isinstance(gens[0], str):
        # short form: generators are the ambient basis in order
        names = tuple(str(n) for n in gens)
        group = AbelianGroupPresentation(len(names), relations)
        elements = tuple(group.basis_images())
    else:
        names = tuple(str(g["name"]) for g in gens)
        ambient = int(_need(obj, "ambient_generators", "monoid"))
        group = AbelianGroupPresentation(ambient, relations)
        elements = tuple(group.project([int(x) for x in g["ambient"]])
                         for g in gens)
    grading = obj.get("grading")
    if grading is not None:
        grading = tuple(int(x) for x in grading)
    return GradedMonoid(group, names, elements, grading=grading)


# ---------------------------------------------------------------------------
# series


def _terms_to_json(terms) -> list:
    return [{"class": monoid_element_to_json(e), "coeff": element_to_json(c)}
            for e, c in terms]


def _terms_from_json(ring, monoid, rows, kind):
    out = {}
    for row in rows:
        e = monoid_element_from_json(monoid, _need(row, "class", kind))
        c = element_from_json(ring, _need(row, "coeff", kind))
        out[e] = out.get(e, ring.zero) + c
    return out


def series_to_json(f) -> dict:
    if isinstance(f, TruncatedSeries):
        return {"kind": "truncated", "ring": ring_to_json(f.ring),
                "monoid": monoid_to_json(f.monoid),
                "truncation": f.truncation, "terms": _terms_to_json(f.terms)}
    if isinstance(f, MonoidPolynomial):
        return {"kind": "polynomial", "ring": ring_to_json(f.ring),
                "monoid": monoid_to_json(f.monoid),
                "terms": _terms_to_json(f.terms)}
    if isinstance(f, RationalSeries):
        return {"kind": "rational", "ring": ring_to_json(f.ring),
                "monoid": monoid_to_json(f.monoid),
                "numerator": _terms_to_json(f.numerator.terms),
                "denominator": [{"class": monoid_element_to_json(a),
                                 "coeff": element_to_json(c), "power": e}
                                for c, a, e in f.factors]}
    raise TypeError(f"cannot serialize {type(f).__name__}")


def series_from_json(obj):
    ring = ring_from_json(_need(obj, "ring", "series"))
    monoid = monoid_from_json(_need(obj, "monoid", "series"))
    kind = obj.get("kind")
    if kind is None:
        kind = ("rational" if "denominator" in obj
                else "truncated" if "truncation" in obj else "polynomial")
    if kind == "truncated":
        terms = _terms_from_json(ring, monoid, _need(obj, "terms", "series"),
                                 "series term")
        return TruncatedSeries(ring, monoid, int(_need(obj, "truncation", "series")),
                               terms)
    if kind == "polynomial":
        terms = _terms_from_json(ring, monoid, _need(obj, "terms", "series"),
                                 "polynomial term")
        return MonoidPolynomial(ring, monoid, terms)
    if kind == "rational":
        num = MonoidPolynomial(ring, monoid,
                               _terms_from_json(ring, monoid,
                                                obj.get("numerator", ()),
                                                "numerator term"))
        if not obj.get("numerator"):
            num = MonoidPolynomial.one(ring, monoid)
        factors = []
        for row in _need(obj, "denominator", "rational series"):
            factors.append((element_from_json(ring, _need(row, "coeff", "factor")),
                            monoid_element_from_json(monoid, _need(row, "class", "factor")),
                            int(row.get("power", 1))))
        return RationalSeries(ring, monoid, num, factors)
    raise SchemaError(f"unknown series kind {kind!r}")


# ---------------------------------------------------------------------------
# fans


def fan_to_json(fan: Fan) -> dict:
    return {"dim": fan.dim, "rays": [list(v) for v in fan.rays],
            "maximal_cones": [list(c) for c in fan.maximal_cones],
            "ray_names": list(fan.ray_names)}


def fan_from_json(obj) -> Fan:
    rays = _need(obj, "rays", "fan")
    cones = _need(obj, "maximal_cones", "fan")
    fan = Fan(rays, cones, obj.get("ray_names"))
    if "dim" in obj and int(obj["dim"]) != fan.dim:
        raise SchemaError(f"fan says dim={obj['dim']} but rays live in"
                          f" dimension {fan.dim}")
    return fan


# ---------------------------------------------------------------------------
# stratifications


def decomposition_to_json(decomp: GmDecomposition) -> dict:
    strata = []
    for st in decomp.strata:
        if isinstance(st, FixedComponentStratum):
            strata.append({"kind": "fixed_component",
                           "cycle_dimension": st.cycle_dimension,
                           "series": series_to_json(st.series)})
        elif isinstance(st, OrbitFamilyOverPoint):
            strata.append({"kind": "orbit_family_over_point",
                           "cycle_dimension": st.cycle_dimension,
                           "class": monoid_element_to_json(st.orbit_class)})
        else:
            strata.append({"kind": "orbit_family_over_punctured_p1",
                           "cycle_dimension": st.cycle_dimension,
                           "punctures": st.punctures,
                           "fiber_class": monoid_element_to_json(st.fiber_class)})
    return {"ring": ring_to_json(decomp.ring),
            "monoid": monoid_to_json(decomp.monoid), "strata": strata}


def decomposition_from_json(obj) -> GmDecomposition:
    ring = ring_from_json(_need(obj, "ring", "decomposition"))
    monoid = monoid_from_json(_need(obj, "monoid", "decomposition"))
    strata = []
    for row in _need(obj, "strata", "decomposition"):
        kind = _need(row, "kind", "stratum")
        p = int(_need(row, "cycle_dimension", "stratum"))
        if kind == "fixed_component":
            strata.append(FixedComponentStratum(
                series_from_json(_need(row, "series", "stratum")), p))
        elif kind == "orbit_family_over_point":
            strata.append(OrbitFamilyOverPoint(
                monoid_element_from_json(monoid, _need(row, "class", "stratum")), p))
        elif kind == "orbit_family_over_punctured_p1":
            strata.append(OrbitFamilyOverPuncturedLine(
                int(_need(row, "punctures", "stratum")),
                monoid_element_from_json(monoid, _need(row, "fiber_class", "stratum")),
                p))
        else:
            raise SchemaError(f"unknown stratum kind {kind!r}")
    return GmDecomposition(monoid, strata, ring)
