"""Pushouts of complexes along a basis-monic leg.

Only the shape needed here is implemented: a span ``C <- A -> D`` whose
leg into C sends basis elements to basis elements injectively.  The
pushout then carries the evident basis (non-glued elements of C, all of
D), and the glued differentials are re-split into canonical positive and
negative parts.  The result is validated; a quotient that breaks an
axiom is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .adc import ADC, Bipointing
from .chains import Chain, Key, render_key
from .errors import PushoutError, StructuralError
from .morphisms import ADCMorphism, compose

Relabel = Callable[[Key], Key]


def _identity_relabel(key: Key) -> Key:
    return key


@dataclass(frozen=True)
class PushoutData:
    """A computed pushout square.

    ``into_c`` and ``into_d`` are the cocone maps out of the two span
    feet; ``leg_inclusion`` and ``leg_general`` are the original span.
    """

    complex: ADC
    into_c: ADCMorphism
    into_d: ADCMorphism
    leg_inclusion: ADCMorphism
    leg_general: ADCMorphism


def pushout(
    leg_inclusion: ADCMorphism,
    leg_general: ADCMorphism,
    relabel_c: Relabel = _identity_relabel,
    relabel_d: Relabel = _identity_relabel,
    bipointing: Optional[Bipointing] = None,
    validate: bool = True,
) -> PushoutData:
    """Pushout of ``C <-[leg_inclusion]- A -[leg_general]-> D``.

    The inclusion leg must be basis-monic.  Basis elements of C in its
    image are glued to their images under the general leg; the surviving
    basis is relabeled by the two injections, which must not collide.
    """
    if leg_inclusion.source != leg_general.source:
        raise PushoutError("span legs do not share a source complex")
    if not leg_inclusion.is_basis_monic():
        raise PushoutError("inclusion leg is not basis-monic")

    span_source = leg_inclusion.source
    complex_c = leg_inclusion.target
    complex_d = leg_general.target

    glued: dict[Key, Chain] = {}
    for a in span_source.keys():
        image = leg_inclusion.map_of(a).items[0][0]
        glued[image] = leg_general.map_of(a)

    new_ids: dict[tuple[str, Key], Key] = {}
    degrees: dict[Key, int] = {}
    for key in complex_c.keys():
        if key in glued:
            continue
        new = tuple(relabel_c(key))
        if new in degrees:
            raise StructuralError(f"pushout id collision at {render_key(new)}")
        new_ids[("c", key)] = new
        degrees[new] = complex_c.degree_of(key)
    for key in complex_d.keys():
        new = tuple(relabel_d(key))
        if new in degrees:
            raise StructuralError(f"pushout id collision at {render_key(new)}")
        new_ids[("d", key)] = new
        degrees[new] = complex_d.degree_of(key)

    def image_c(chain: Chain) -> Chain:
        coeffs: dict[Key, int] = {}
        for key, c in chain.items:
            if key in glued:
                for ref, a in glued[key].items:
                    new = new_ids[("d", ref)]
                    coeffs[new] = coeffs.get(new, 0) + c * a
            else:
                new = new_ids[("c", key)]
                coeffs[new] = coeffs.get(new, 0) + c
        return Chain.from_dict(chain.degree, coeffs)

    def image_d(chain: Chain) -> Chain:
        return Chain.from_dict(
            chain.degree, {new_ids[("d", k)]: c for k, c in chain.items})

    dplus: dict[Key, Chain] = {}
    dminus: dict[Key, Chain] = {}
    for key in complex_c.keys():
        if key in glued or complex_c.degree_of(key) == 0:
            continue
        signed = image_c(complex_c.dplus(key)) - image_c(complex_c.dminus(key))
        dplus[new_ids[("c", key)]], dminus[new_ids[("c", key)]] = signed.split()
    for key in complex_d.keys():
        if complex_d.degree_of(key) == 0:
            continue
        dplus[new_ids[("d", key)]] = image_d(complex_d.dplus(key))
        dminus[new_ids[("d", key)]] = image_d(complex_d.dminus(key))

    result = ADC(degrees, dplus, dminus, bipointing)
    if validate:
        report = result.validate()
        if report:
            raise PushoutError(
                "non-basic pushout: quotient violates " + "; ".join(report[:3]))

    into_c = ADCMorphism(complex_c, result,
                         {k: image_c(complex_c.unit(k)) for k in complex_c.keys()})
    into_d = ADCMorphism(complex_d, result,
                         {k: image_d(complex_d.unit(k)) for k in complex_d.keys()})
    return PushoutData(result, into_c, into_d, leg_inclusion, leg_general)


def induced_from_pushout(data: PushoutData,
                         cocone_c: ADCMorphism,
                         cocone_d: ADCMorphism) -> ADCMorphism:
    """Unique map out of the pushout restricting to the two cocone legs."""
    if cocone_c.target != cocone_d.target:
        raise PushoutError("cocone legs have different targets")
    if cocone_c.source != data.into_c.source or cocone_d.source != data.into_d.source:
        raise PushoutError("cocone legs do not match the pushout feet")
    for a in data.leg_inclusion.source.keys():
        via_c = cocone_c.apply(data.leg_inclusion.map_of(a))
        via_d = cocone_d.apply(data.leg_general.map_of(a))
        if via_c != via_d:
            raise PushoutError(
                f"cocone legs disagree on span element {render_key(a)}")

    glued = {data.leg_inclusion.map_of(a).items[0][0]
             for a in data.leg_inclusion.source.keys()}
    assignment: dict[Key, Chain] = {}
    for key in data.into_c.source.keys():
        if key in glued:
            continue
        new = data.into_c.map_of(key).items[0][0]
        assignment[new] = cocone_c.map_of(key)
    for key in data.into_d.source.keys():
        new = data.into_d.map_of(key).items[0][0]
        assignment[new] = cocone_d.map_of(key)
    return ADCMorphism(data.complex, cocone_c.target, assignment)
