"""JSON forms of maps, module elements and bases.

Element over ordered surjections::

    {"target": 2, "k": 1, "p": 5, "level": 3,
     "terms": [{"mono": {"m": 3, "n": 2, "values": [1, 1, 2]}, "coord": 1, "coeff": 2}]}

Polynomial element (characteristic taken from context)::

    {"poly": "x^3+1"}

Basis file::

    {"width": 4, "category": "gamma_os", "elements": [...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .categories import CATEGORIES, GAMMA_OS, NAT
from .finset import FinMap
from .groebner import GroebnerBasis
from .modules import ModElement, Monomial
from .polys import format_poly, from_element, parse_poly, to_element


def element_to_json(v: ModElement) -> dict:
    if v.cat is NAT:
        return {"poly": format_poly(from_element(v))}
    terms = [{"mono": v.cat.encode(m.morphism), "coord": m.coord, "coeff": c} for m, c in v.sorted_terms()]
    return {"target": v.target, "k": v.k, "p": v.p, "level": v.level, "terms": terms}


def element_from_json(obj: dict, p: int | None = None) -> ModElement:
    if "poly" in obj:
        p = obj.get("p", p)
        if p is None:
            raise ValueError("polynomial element needs a characteristic")
        return to_element(parse_poly(obj["poly"], p), p)
    if p is not None and obj.get("p", p) != p:
        raise ValueError(f"element has p={obj['p']} but p={p} was requested")
    terms = {}
    for t in obj["terms"]:
        f = GAMMA_OS.decode(t["mono"])
        mono = Monomial(f, int(t.get("coord", 1)))
        if mono in terms:
            raise ValueError(f"duplicate monomial {mono}")
        terms[mono] = int(t["coeff"])
    v = ModElement(GAMMA_OS, int(obj["level"]), int(obj["target"]), int(obj.get("k", 1)), int(obj["p"]), terms)
    return v.validate()


def elements_from_json(obj, p: int | None = None) -> list[ModElement]:
    items = obj["elements"] if isinstance(obj, dict) else obj
    if isinstance(obj, dict) and p is None:
        p = obj.get("p")
    return [element_from_json(e, p) for e in items]


def basis_to_json(gb: GroebnerBasis) -> dict:
    return {
        "width": gb.width,
        "category": gb.cat.name,
        "target": gb.target,
        "k": gb.k,
        "p": gb.p,
        "elements": [element_to_json(b) for b in gb.elements],
    }


def basis_from_json(obj: dict) -> GroebnerBasis:
    cat = CATEGORIES[obj.get("category", GAMMA_OS.name)]
    p = obj["p"]
    elements = [element_from_json(e, p) for e in obj["elements"]]
    return GroebnerBasis(elements, obj["width"], cat, obj.get("target", 0), obj.get("k", 1), p)


def finmaps_from_json(obj) -> list[FinMap]:
    return [FinMap.from_json(x) for x in obj]


def finmaps_to_json(maps) -> list[dict]:
    return [f.to_json() for f in maps]


def load(path) -> object:
    return json.loads(Path(path).read_text())


def dump(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
