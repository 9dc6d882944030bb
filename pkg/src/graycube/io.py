"""Canonical JSON serialization and named complex references.

Documents use string ids in the grammar of ``chains.render_key``; key
order is always lexicographic so that a value has exactly one canonical
rendering.  Named refs: "cube:N", "globe:D", "theta:TREE", "point",
"interval".
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .adc import ADC
from .chains import Chain, Key, parse_key, render_key
from .errors import StructuralError
from .construct import cube, interval, point
from .morphisms import ADCMorphism
from .retract import RetractWitness
from .theta import ThetaTree, parse_tree, theta_to_adc


def chain_to_doc(chain: Chain) -> dict[str, int]:
    return {render_key(k): c for k, c in chain.items}


def chain_from_doc(doc: Mapping[str, int], degree: int) -> Chain:
    return Chain.from_dict(degree, {parse_key(k): int(c) for k, c in doc.items()})


def adc_to_doc(complex_: ADC) -> dict[str, Any]:
    basis = []
    for key in complex_.keys():
        deg = complex_.degree_of(key)
        entry: dict[str, Any] = {
            "id": render_key(key),
            "deg": deg,
            "dplus": chain_to_doc(complex_.dplus(key)) if deg >= 1 else {},
            "dminus": chain_to_doc(complex_.dminus(key)) if deg >= 1 else {},
        }
        basis.append(entry)
    bp = None
    if complex_.bipointing is not None:
        bp = {"bottom": render_key(complex_.bottom),
              "top": render_key(complex_.top)}
    return {"dim": complex_.dim, "basis": basis, "bipointing": bp}


def adc_from_doc(doc: Mapping[str, Any]) -> ADC:
    degrees: dict[Key, int] = {}
    dplus: dict[Key, Chain] = {}
    dminus: dict[Key, Chain] = {}
    for entry in doc["basis"]:
        key = parse_key(entry["id"])
        deg = int(entry["deg"])
        degrees[key] = deg
        if deg >= 1:
            dplus[key] = chain_from_doc(entry.get("dplus", {}), deg - 1)
            dminus[key] = chain_from_doc(entry.get("dminus", {}), deg - 1)
    bp = doc.get("bipointing")
    bipointing = None
    if bp is not None:
        bipointing = (parse_key(bp["bottom"]), parse_key(bp["top"]))
    result = ADC(degrees, dplus, dminus, bipointing)
    if "dim" in doc and int(doc["dim"]) != result.dim:
        raise StructuralError("declared dim does not match the basis")
    return result


def resolve_complex_ref(ref: str) -> ADC:
    """Resolve a named complex reference."""
    if ref == "point":
        return point()
    if ref == "interval":
        return interval()
    if ref.startswith("cube:"):
        return cube(int(ref.split(":", 1)[1]))
    if ref.startswith("globe:"):
        depth = int(ref.split(":", 1)[1])
        tree = ThetaTree()
        for _ in range(depth):
            tree = ThetaTree((tree,))
        return theta_to_adc(tree)
    if ref.startswith("theta:"):
        return theta_to_adc(parse_tree(ref.split(":", 1)[1]))
    raise StructuralError(f"unknown complex reference {ref!r}")


def morphism_to_doc(morphism: ADCMorphism,
                    source_ref: str | None = None,
                    target_ref: str | None = None) -> dict[str, Any]:
    return {
        "source": source_ref if source_ref else adc_to_doc(morphism.source),
        "target": target_ref if target_ref else adc_to_doc(morphism.target),
        "map": {
            render_key(k): chain_to_doc(morphism.map_of(k))
            for k in morphism.source.keys()
            if not morphism.map_of(k).is_zero()
        },
    }


def morphism_from_doc(doc: Mapping[str, Any]) -> ADCMorphism:
    def load_end(value: Any) -> ADC:
        if isinstance(value, str):
            return resolve_complex_ref(value)
        return adc_from_doc(value)

    source = load_end(doc["source"])
    target = load_end(doc["target"])
    assignment = {
        parse_key(k): chain_from_doc(v, source.degree_of(parse_key(k)))
        for k, v in doc["map"].items()
    }
    return ADCMorphism(source, target, assignment)


def witness_to_doc(witness: RetractWitness) -> dict[str, Any]:
    return {
        "object": adc_to_doc(witness.object),
        "cube_dim": witness.cube_dim,
        "section": morphism_to_doc(witness.section),
        "retraction": morphism_to_doc(witness.retraction),
        "verified": not witness.verify(),
    }


def witness_from_doc(doc: Mapping[str, Any]) -> RetractWitness:
    return RetractWitness(
        object=adc_from_doc(doc["object"]),
        cube_dim=int(doc["cube_dim"]),
        section=morphism_from_doc(doc["section"]),
        retraction=morphism_from_doc(doc["retraction"]),
    )


def canonical_json(payload: Any, pretty: bool = False) -> str:
    """One canonical rendering; --pretty only adds whitespace."""
    if pretty:
        return json.dumps(payload, sort_keys=True, indent=2)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
