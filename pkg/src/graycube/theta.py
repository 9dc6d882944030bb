"""Planar rooted trees, their realizations as bipointed complexes, and
the assembled retract-of-cube witnesses.

A leaf is the point; a node with children c1..ck realizes as the
left-associated wedge of the suspensions of its children, bipointed at
the two outer poles.  Tree grammar: "()" is the leaf, "(()())" the
two-cell chain, "((()))" the 2-globe; whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .adc import ADC, find_relabel_iso
from .errors import ResourceError, StructuralError
from .construct import max_cube_dim, point, suspension, wedge
from .retract import RetractWitness, lift_retract, point_witness


@dataclass(frozen=True)
class ThetaTree:
    """Finite planar rooted tree; the leaf is the empty children tuple."""

    children: tuple["ThetaTree", ...] = ()

    def is_leaf(self) -> bool:
        return not self.children

    def render(self) -> str:
        return "(" + "".join(c.render() for c in self.children) + ")"

    def __repr__(self) -> str:
        return f"ThetaTree({self.render()!r})"


def parse_tree(text: str) -> ThetaTree:
    """Parse the nested-parentheses grammar; whitespace is ignored."""
    tokens = [ch for ch in text if not ch.isspace()]
    pos = 0

    def node() -> ThetaTree:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != "(":
            raise StructuralError(f"expected '(' at position {pos} in {text!r}")
        pos += 1
        children = []
        while pos < len(tokens) and tokens[pos] == "(":
            children.append(node())
        if pos >= len(tokens) or tokens[pos] != ")":
            raise StructuralError(f"expected ')' at position {pos} in {text!r}")
        pos += 1
        return ThetaTree(tuple(children))

    tree = node()
    if pos != len(tokens):
        raise StructuralError(f"trailing input in tree {text!r}")
    return tree


def dimension(tree: ThetaTree) -> int:
    """Depth of the tree, the categorical dimension of the realization."""
    if tree.is_leaf():
        return 0
    return 1 + max(dimension(c) for c in tree.children)


def point_count(tree: ThetaTree) -> int:
    """Number of objects of the realization."""
    return len(tree.children) + 1


def witness_cube_dim(tree: ThetaTree) -> int:
    """Dimension of the cube the assembled witness lands in."""
    return sum(witness_cube_dim(c) + 1 for c in tree.children)


def theta_to_adc(tree: ThetaTree) -> ADC:
    """Realize a tree as a bipointed complex.

    The leaf is the point; a node is the left-associated wedge of the
    suspensions of its children.
    """
    if tree.is_leaf():
        return point()
    parts = [suspension(theta_to_adc(c)) for c in tree.children]
    result = parts[0]
    for part in parts[1:]:
        result, _, _ = wedge(result, part)
    return result


_witness_memo: dict[ThetaTree, RetractWitness] = {}


def theta_witness(tree: ThetaTree) -> RetractWitness:
    """Assembled and verified retract witness for a tree realization."""
    if tree in _witness_memo:
        return _witness_memo[tree]
    total = witness_cube_dim(tree)
    if total > max_cube_dim():
        raise ResourceError(
            f"tree needs a {total}-cube, above the configured bound"
            f" {max_cube_dim()}")
    if tree.is_leaf():
        witness = point_witness()
    else:
        parts = [lift_retract("suspension", theta_witness(c))
                 for c in tree.children]
        witness = parts[0]
        for part in parts[1:]:
            witness = lift_retract("wedge", witness, part)
    _witness_memo[tree] = witness
    return witness


def verify_theta_witness(witness: RetractWitness,
                         tree: ThetaTree | None = None) -> list[str]:
    """Witness invariants plus, when a tree is given, agreement of the
    witness object with the tree realization up to relabeling."""
    report = witness.verify()
    if tree is not None and not report:
        expected = theta_to_adc(tree)
        if witness.object != expected and \
                find_relabel_iso(expected, witness.object) is None:
            report.append("witness object is not the tree realization")
    return report


def all_trees(max_cube: int) -> Iterator[ThetaTree]:
    """Every tree whose witness cube dimension is at most the bound."""
    for n in range(max_cube + 1):
        yield from _trees_of_weight(n)


@lru_cache(maxsize=None)
def _trees_of_weight(n: int) -> tuple[ThetaTree, ...]:
    if n == 0:
        return (ThetaTree(),)
    result: list[ThetaTree] = []
    # children lists whose weights (each + 1) sum to n
    def splits(remaining: int, acc: tuple[ThetaTree, ...]) -> None:
        if remaining == 0:
            result.append(ThetaTree(acc))
            return
        for w in range(remaining):
            for child in _trees_of_weight(w):
                splits(remaining - w - 1, acc + (child,))

    splits(n, ())
    return tuple(result)
