"""Sparse integer chains over tuple-structured basis ids.

A basis id is a flat tuple of atom strings.  Tensor products concatenate
id tuples, which makes reassociation a literal no-op; suspension and
wedge wrap rendered ids into fresh single atoms ("s(...)", "L:...",
"R:...").  ``render_key`` / ``parse_key`` convert between the tuple form
and the serialization grammar: a single atom renders bare, longer tuples
render as "(a|b|...)".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import StructuralError

Key = tuple[str, ...]


def render_key(key: Key) -> str:
    """Render a basis id as its canonical string."""
    if len(key) == 1:
        return key[0]
    return "(" + "|".join(key) + ")"


def parse_key(text: str) -> Key:
    """Parse the canonical string form back into an id tuple.

    Atoms may contain parentheses (e.g. "s((a|b))"), so the split only
    happens at pipes of nesting depth zero inside an outer "(...)".
    """
    if not text:
        raise StructuralError("empty basis id")
    if not (text.startswith("(") and text.endswith(")")):
        return (text,)
    body = text[1:-1]
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise StructuralError(f"unbalanced parentheses in id {text!r}")
        if ch == "|" and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise StructuralError(f"unbalanced parentheses in id {text!r}")
    parts.append("".join(current))
    if len(parts) < 2 or any(not p for p in parts):
        raise StructuralError(f"malformed tuple id {text!r}")
    return tuple(parts)


@dataclass(frozen=True, slots=True)
class Chain:
    """Homogeneous integer combination of basis elements.

    ``items`` is a sorted tuple of (id, coefficient) pairs with all
    coefficients nonzero; the degree is carried even when the chain is
    empty.  Chains are immutable and hashable.
    """

    degree: int
    items: tuple[tuple[Key, int], ...]

    @staticmethod
    def zero(degree: int) -> "Chain":
        return Chain(degree, ())

    @staticmethod
    def unit(key: Key, degree: int) -> "Chain":
        return Chain(degree, ((tuple(key), 1),))

    @staticmethod
    def from_dict(degree: int, coeffs: Mapping[Key, int]) -> "Chain":
        items = tuple(sorted((tuple(k), int(c)) for k, c in coeffs.items() if c))
        return Chain(degree, items)

    def as_dict(self) -> dict[Key, int]:
        return dict(self.items)

    def coeff(self, key: Key) -> int:
        for k, c in self.items:
            if k == key:
                return c
        return 0

    @property
    def support(self) -> tuple[Key, ...]:
        return tuple(k for k, _ in self.items)

    def is_zero(self) -> bool:
        return not self.items

    def is_positive(self) -> bool:
        """True when every coefficient is >= 1 (the empty chain counts)."""
        return all(c >= 1 for _, c in self.items)

    def is_unit(self, key: Key) -> bool:
        return self.items == ((key, 1),)

    def coeff_sum(self) -> int:
        return sum(c for _, c in self.items)

    def __iter__(self) -> Iterator[tuple[Key, int]]:
        return iter(self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def _merge(self, other: "Chain", sign: int) -> "Chain":
        if self.degree != other.degree:
            raise StructuralError(
                f"degree mismatch in chain arithmetic: {self.degree} vs {other.degree}"
            )
        coeffs = dict(self.items)
        for k, c in other.items:
            coeffs[k] = coeffs.get(k, 0) + sign * c
        return Chain.from_dict(self.degree, coeffs)

    def __add__(self, other: "Chain") -> "Chain":
        return self._merge(other, 1)

    def __sub__(self, other: "Chain") -> "Chain":
        return self._merge(other, -1)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, tuple((k, -c) for k, c in self.items))

    def scaled(self, factor: int) -> "Chain":
        if factor == 0:
            return Chain.zero(self.degree)
        return Chain(self.degree, tuple((k, factor * c) for k, c in self.items))

    def split(self) -> tuple["Chain", "Chain"]:
        """Canonical sign split: self == plus - minus with disjoint supports."""
        plus = tuple((k, c) for k, c in self.items if c > 0)
        minus = tuple((k, -c) for k, c in self.items if c < 0)
        return Chain(self.degree, plus), Chain(self.degree, minus)

    def render(self) -> str:
        if not self.items:
            return "0"
        parts = []
        for k, c in self.items:
            name = render_key(k)
            if c == 1:
                parts.append(name)
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts)


def sum_chains(degree: int, chains: Iterable[Chain]) -> Chain:
    coeffs: dict[Key, int] = {}
    for chain in chains:
        if chain.degree != degree:
            raise StructuralError("degree mismatch in chain sum")
        for k, c in chain.items:
            coeffs[k] = coeffs.get(k, 0) + c
    return Chain.from_dict(degree, coeffs)
