"""Morphisms of augmented directed complexes.

A morphism assigns to every source basis element a chain of the same
degree in the target (possibly zero).  Validity means: it commutes with
the signed boundary, every assigned chain is positive, and degree-0
elements go to chains of augmentation one.
"""

from __future__ import annotations

from typing import Mapping, Optional

from .adc import ADC
from .chains import Chain, Key, render_key
from .errors import CompositionError, ConstructionError, StructuralError


class ADCMorphism:
    """Degree-preserving chain map between two complexes.

    The assignment is stored sparsely: missing basis elements map to the
    zero chain.  Instances are immutable and hashable.
    """

    __slots__ = ("_source", "_target", "_assignment", "_hash")

    def __init__(self, source: ADC, target: ADC,
                 assignment: Mapping[Key, Chain | Mapping[Key, int]]):
        table: dict[Key, Chain] = {}
        for key, chain in assignment.items():
            key = tuple(key)
            deg = source.degree_of(key)
            if not isinstance(chain, Chain):
                chain = Chain.from_dict(deg, chain)
            if chain.is_zero():
                continue
            if chain.degree != deg:
                raise StructuralError(
                    f"assignment for {render_key(key)} has degree"
                    f" {chain.degree}, expected {deg}")
            for ref, _ in chain.items:
                if target.degree_of(ref) != deg:
                    raise StructuralError(
                        f"assignment for {render_key(key)} references"
                        f" {render_key(ref)} of wrong degree")
            table[key] = chain
        self._source = source
        self._target = target
        self._assignment = table
        self._hash: Optional[int] = None

    @property
    def source(self) -> ADC:
        return self._source

    @property
    def target(self) -> ADC:
        return self._target

    def map_of(self, key: Key) -> Chain:
        key = tuple(key)
        deg = self._source.degree_of(key)
        return self._assignment.get(key, Chain.zero(deg))

    def apply(self, chain: Chain) -> Chain:
        """Linear extension of the assignment to chains."""
        coeffs: dict[Key, int] = {}
        for key, c in chain.items:
            for ref, a in self.map_of(key).items:
                coeffs[ref] = coeffs.get(ref, 0) + c * a
        return Chain.from_dict(chain.degree, coeffs)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(complex_: ADC) -> "ADCMorphism":
        return ADCMorphism(complex_, complex_,
                           {k: complex_.unit(k) for k in complex_.keys()})

    @staticmethod
    def from_relabel(source: ADC, mapping: Mapping[Key, Key], target: ADC) -> "ADCMorphism":
        """Basis-to-basis morphism induced by an id mapping."""
        return ADCMorphism(source, target,
                           {k: target.unit(mapping[k]) for k in source.keys()})

    # -- predicates ---------------------------------------------------------

    def validate(self) -> list[str]:
        """Report the first basis element violating each morphism axiom."""
        report: list[str] = []
        for key in self._source.keys():
            if not self.map_of(key).is_positive():
                report.append(
                    f"positivity: image of {render_key(key)} has a negative"
                    " coefficient")
                break
        for key in self._source.basis(0):
            if self._target.augmentation(self.map_of(key)) != 1:
                report.append(
                    f"augmentation: e(f({render_key(key)})) != 1")
                break
        for key in self._source.keys():
            if self._source.degree_of(key) == 0:
                continue
            pushed = self.apply(self._source.dplus(key) - self._source.dminus(key))
            image = self.map_of(key)
            if image.is_zero():
                derived = Chain.zero(pushed.degree)
            else:
                derived = self._target.boundary(image)
            if pushed != derived:
                report.append(
                    f"chain-map: d f({render_key(key)}) != f(d {render_key(key)})")
                break
        return report

    def is_valid(self) -> bool:
        return not self.validate()

    def is_identity(self) -> bool:
        if self._source != self._target:
            raise CompositionError("is_identity needs equal source and target")
        return all(self.map_of(k).is_unit(k) for k in self._source.keys())

    def is_bipointed(self) -> bool:
        """Bottom goes to bottom and top to top (both ends bipointed)."""
        if self._source.bipointing is None or self._target.bipointing is None:
            return False
        return (self.map_of(self._source.bottom).is_unit(self._target.bottom)
                and self.map_of(self._source.top).is_unit(self._target.top))

    def is_basis_monic(self) -> bool:
        """Each basis element maps to a single basis element, injectively."""
        seen: set[Key] = set()
        for key in self._source.keys():
            image = self.map_of(key)
            if len(image.items) != 1 or image.items[0][1] != 1:
                return False
            ref = image.items[0][0]
            if ref in seen:
                return False
            seen.add(ref)
        return True

    def inverted(self) -> "ADCMorphism":
        """Inverse of a basis-to-basis bijection; error otherwise."""
        if not self.is_basis_monic() or self._source.size() != self._target.size():
            raise ConstructionError("morphism is not a basis bijection")
        mapping = {self.map_of(k).items[0][0]: k for k in self._source.keys()}
        return ADCMorphism.from_relabel(self._target, mapping, self._source)

    # -- equality -------------------------------------------------------------

    def _signature(self):
        return (self._source, self._target,
                tuple(sorted((k, c.items) for k, c in self._assignment.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ADCMorphism):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._signature())
        return self._hash

    def __repr__(self) -> str:
        return f"ADCMorphism({self._source!r} -> {self._target!r})"


def validate_morphism(morphism: ADCMorphism) -> list[str]:
    return morphism.validate()


def compose(after: ADCMorphism, before: ADCMorphism) -> ADCMorphism:
    """Composite ``after o before``; the middle complexes must be equal."""
    if before.target != after.source:
        raise CompositionError(
            "cannot compose: target of first map differs from source of second")
    return ADCMorphism(
        before.source, after.target,
        {k: after.apply(before.map_of(k)) for k in before.source.keys()})


def compose_all(*maps: ADCMorphism) -> ADCMorphism:
    """Composite of maps listed outermost first."""
    if not maps:
        raise CompositionError("need at least one morphism")
    result = maps[-1]
    for f in reversed(maps[:-1]):
        result = compose(f, result)
    return result


def identity_morphism(complex_: ADC) -> ADCMorphism:
    return ADCMorphism.identity(complex_)


def is_identity(morphism: ADCMorphism) -> bool:
    return morphism.is_identity()
