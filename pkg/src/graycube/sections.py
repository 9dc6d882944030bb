"""Exhaustive bounded search for sections of a morphism.

Given q : E -> X, a section is a valid morphism s : X -> E with
``q o s = id``.  The search runs degree by ascending degree: the image
of each basis element is constrained by the chain-map equation against
the already-chosen lower degrees and by the exact-preimage condition,
both enforced inside the bounded solver.  Completeness holds only within
the coefficient bound, which the result records.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .adc import ADC
from .chains import Chain, Key
from .errors import GrayCubeError, ResourceError
from .morphisms import ADCMorphism, compose
from .solver import DEFAULT_NODE_CAP, positive_boundary_solutions


@dataclass(frozen=True)
class SectionSearch:
    """All sections found, plus the bound that scopes completeness."""

    sections: tuple[ADCMorphism, ...]
    coeff_bound: int
    bipointed_only: bool

    def __len__(self) -> int:
        return len(self.sections)

    def __iter__(self):
        return iter(self.sections)


def solve_sections(q: ADCMorphism, coeff_bound: int,
                   bipointed: bool = False,
                   node_cap: int = DEFAULT_NODE_CAP,
                   max_results: int = 10_000) -> SectionSearch:
    """Enumerate positive chain-map sections of q within a coefficient bound.

    With ``bipointed`` set, only sections carrying bottom to bottom and
    top to top are returned (both complexes must then be bipointed).
    """
    if not isinstance(coeff_bound, int) or coeff_bound < 1:
        raise GrayCubeError("section search needs a positive coefficient bound")
    total = q.target
    ambient = q.source

    pinned: dict[Key, Key] = {}
    if bipointed:
        if total.bipointing is None or ambient.bipointing is None:
            raise GrayCubeError("bipointed section search needs bipointed complexes")
        pinned[total.bottom] = ambient.bottom
        pinned[total.top] = ambient.top

    # degree-0 candidates: single points in the exact preimage
    preimages: dict[Key, list[Key]] = {p: [] for p in total.basis(0)}
    for e in ambient.basis(0):
        image = q.map_of(e)
        if len(image.items) == 1 and image.items[0][1] == 1:
            preimages.setdefault(image.items[0][0], []).append(e)

    points = list(total.basis(0))
    degree0_choices: list[list[Chain]] = []
    for p in points:
        if p in pinned:
            candidate = pinned[p]
            if not q.map_of(candidate).is_unit(p):
                return SectionSearch((), coeff_bound, bipointed)
            degree0_choices.append([Chain.unit(candidate, 0)])
        else:
            degree0_choices.append(
                [Chain.unit(e, 0) for e in preimages.get(p, [])])

    sections: list[ADCMorphism] = []

    def extend(degree: int, assignment: dict[Key, Chain]) -> None:
        if len(sections) >= max_results:
            raise ResourceError(
                f"section search found more than {max_results} sections")
        if degree > total.dim:
            candidate = ADCMorphism(total, ambient, assignment)
            sections.append(candidate)
            return
        partial = ADCMorphism(
            total, ambient,
            {k: v for k, v in assignment.items()})
        per_element: list[tuple[Key, list[Chain]]] = []
        for x in total.basis(degree):
            delta_signed = partial.apply(total.dplus(x) - total.dminus(x))
            options = positive_boundary_solutions(
                ambient, degree,
                delta_signed,
                coeff_bound,
                image_constraint=(q, total.unit(x)),
                node_cap=node_cap,
            )
            if not options:
                return
            per_element.append((x, options))

        def assign(i: int) -> None:
            if i == len(per_element):
                extend(degree + 1, assignment)
                return
            x, options = per_element[i]
            for option in options:
                assignment[x] = option
                assign(i + 1)
                del assignment[x]

        assign(0)

    def choose_points(i: int, assignment: dict[Key, Chain]) -> None:
        if i == len(points):
            extend(1, dict(assignment))
            return
        for choice in degree0_choices[i]:
            assignment[points[i]] = choice
            choose_points(i + 1, assignment)
            del assignment[points[i]]

    choose_points(0, {})

    verified = []
    for s in sections:
        if s.validate() or not compose(q, s).is_identity():
            continue
        verified.append(s)
    verified.sort(key=lambda m: tuple(sorted(
        (k, m.map_of(k).items) for k in total.keys())))
    return SectionSearch(tuple(verified), coeff_bound, bipointed)
