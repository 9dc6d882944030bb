"""Brute-force realization of the omega-category generated by a complex.

Cells are double tables of positive chains; the table of dimension n has
entries in degrees 0..n with equal top entries, each consecutive layer
linked by the signed boundary.  Identity cells are tables whose top
entry is the zero chain.  Enumeration is exhaustive within a coefficient
bound and a node budget, never silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .adc import ADC
from .chains import Chain, Key, render_key
from .errors import CompositionError, InternalCheckError, ResourceError
from .morphisms import ADCMorphism
from .solver import DEFAULT_NODE_CAP, positive_boundary_solutions


@dataclass(frozen=True, slots=True)
class Cell:
    """A realized cell: parallel minus/plus chain tables of equal length."""

    minus: tuple[Chain, ...]
    plus: tuple[Chain, ...]

    @property
    def dim(self) -> int:
        return len(self.minus) - 1

    @property
    def top(self) -> Chain:
        return self.minus[-1]

    def is_identity(self) -> bool:
        return self.dim >= 1 and self.top.is_zero()

    def source(self, k: Optional[int] = None) -> "Cell":
        """The k-source table (default: one dimension down)."""
        k = self.dim - 1 if k is None else k
        return Cell(self.minus[:k + 1],
                    self.plus[:k] + (self.minus[k],))

    def target(self, k: Optional[int] = None) -> "Cell":
        k = self.dim - 1 if k is None else k
        return Cell(self.minus[:k] + (self.plus[k],),
                    self.plus[:k + 1])

    def endpoint_ids(self) -> tuple[Key, Key]:
        """The two degree-0 points (tables start at single points)."""
        return self.minus[0].items[0][0], self.plus[0].items[0][0]

    def sort_key(self):
        return (self.dim,
                tuple(c.items for c in self.minus),
                tuple(c.items for c in self.plus))

    def render(self) -> str:
        rows = [f"-{k}: {c.render()}" for k, c in enumerate(self.minus)]
        rows += [f"+{k}: {c.render()}" for k, c in enumerate(self.plus)]
        return "; ".join(rows)


def validate_cell(complex_: ADC, cell: Cell) -> list[str]:
    """Report of violated table conditions; empty when the cell is valid."""
    report: list[str] = []
    if len(cell.minus) != len(cell.plus) or not cell.minus:
        return ["table halves have different lengths"]
    if cell.minus[-1] != cell.plus[-1]:
        report.append("top entries differ")
    for k, chains in enumerate(zip(cell.minus, cell.plus)):
        for chain in chains:
            if chain.degree != k:
                report.append(f"entry at level {k} has degree {chain.degree}")
            if not chain.is_positive():
                report.append(f"entry at level {k} is not positive")
    for chain in (cell.minus[0], cell.plus[0]):
        if complex_.augmentation(chain) != 1:
            report.append("augmentation of a degree-0 entry is not 1")
    for k in range(1, len(cell.minus)):
        expected = cell.plus[k - 1] - cell.minus[k - 1]
        for chain in (cell.minus[k], cell.plus[k]):
            actual = (Chain.zero(k - 1) if chain.is_zero()
                      else complex_.boundary(chain))
            if actual != expected:
                report.append(f"boundary condition fails at level {k}")
                break
    return report


def point_cell(complex_: ADC, key: Key) -> Cell:
    unit = complex_.unit(tuple(key))
    return Cell((unit,), (unit,))


def identity_cell(cell: Cell) -> Cell:
    pad = Chain.zero(cell.dim + 1)
    return Cell(cell.minus + (pad,), cell.plus + (pad,))


def atom_cell(complex_: ADC, key: Key) -> Cell:
    """The table generated by one basis element via iterated sign-split
    boundaries."""
    key = tuple(key)
    top = complex_.unit(key)
    deg = complex_.degree_of(key)
    minus = [top]
    plus = [top]
    for _ in range(deg):
        _, lower_minus = complex_.directed_parts(minus[0])
        lower_plus, _ = complex_.directed_parts(plus[0])
        minus.insert(0, lower_minus)
        plus.insert(0, lower_plus)
    cell = Cell(tuple(minus), tuple(plus))
    report = validate_cell(complex_, cell)
    if report:
        raise InternalCheckError(
            f"atom of {render_key(key)} is not a cell: " + "; ".join(report))
    return cell


@dataclass
class EnumerationLimits:
    max_dim: int
    coeff_bound: int
    node_cap: int = DEFAULT_NODE_CAP


def cells_between(complex_: ADC, source: Key, target: Key,
                  max_dim: int, coeff_bound: int,
                  node_cap: int = DEFAULT_NODE_CAP) -> list[Cell]:
    """All cells with the given endpoints, of dimension 1..max_dim.

    Exhaustive within the coefficient bound; identity tables appear as
    zero-padded towers.  Raises ResourceError when the budget runs out,
    annotated with the dimension where the search blew up.
    """
    source, target = tuple(source), tuple(target)
    if complex_.degree_of(source) != 0 or complex_.degree_of(target) != 0:
        raise ValueError("hom endpoints must be degree-0 ids")
    result: list[Cell] = []
    # a virtual parallel pair of point tables seeds dimension 1
    pairs = [(Cell((Chain.unit(source, 0),), (Chain.unit(source, 0),)),
              Cell((Chain.unit(target, 0),), (Chain.unit(target, 0),)))]
    for dim in range(1, max_dim + 1):
        fresh: list[Cell] = []
        for a, b in pairs:
            delta = b.top - a.top
            try:
                tops = positive_boundary_solutions(
                    complex_, dim, delta, coeff_bound, node_cap=node_cap)
            except ResourceError as exc:
                raise ResourceError(
                    f"cell enumeration blew up in dimension {dim}: {exc}"
                ) from exc
            for t in tops:
                fresh.append(Cell(a.minus + (t,), b.plus + (t,)))
        result.extend(fresh)
        if dim == max_dim:
            break
        groups: dict[tuple, list[Cell]] = {}
        for cell in fresh:
            groups.setdefault(
                (tuple(c.items for c in cell.minus[:-1]),
                 tuple(c.items for c in cell.plus[:-1])), []).append(cell)
        pairs = [(a, b) for members in groups.values()
                 for a in members for b in members]
    return sorted(result, key=Cell.sort_key)


def hom_set(complex_: ADC, source: Key, target: Key,
            max_dim: int, coeff_bound: int,
            include_identities: bool = True,
            node_cap: int = DEFAULT_NODE_CAP) -> list[Cell]:
    """Cells of dimension >= 1 from one point to another."""
    cells = cells_between(complex_, source, target, max_dim, coeff_bound,
                          node_cap=node_cap)
    if not include_identities:
        cells = [c for c in cells if not c.is_identity()]
    return cells


def enumerate_cells(complex_: ADC, max_dim: int, coeff_bound: int,
                    include_identities: bool = True,
                    node_cap: int = DEFAULT_NODE_CAP) -> list[Cell]:
    """Every table of dimension <= max_dim within the coefficient bound."""
    cells: list[Cell] = [point_cell(complex_, p) for p in complex_.basis(0)]
    if max_dim >= 1:
        for a in complex_.basis(0):
            for b in complex_.basis(0):
                cells.extend(hom_set(complex_, a, b, max_dim, coeff_bound,
                                     include_identities=include_identities,
                                     node_cap=node_cap))
    return sorted(cells, key=Cell.sort_key)


def compose_cells(first: Cell, second: Cell, k: int) -> Cell:
    """Composite along a shared k-boundary: pointwise sum above level k
    with the shared boundary subtracted."""
    if k < 0 or k >= min(first.dim + 1, second.dim + 1):
        raise CompositionError(f"no level {k} to compose along")
    for level in range(k):
        if (first.minus[level] != second.minus[level]
                or first.plus[level] != second.plus[level]):
            raise CompositionError(
                f"tables disagree below the composition level at degree {level}")
    if first.plus[k] != second.minus[k]:
        raise CompositionError(
            f"target/source mismatch at degree {k}")
    dim = max(first.dim, second.dim)

    def entry(cell: Cell, side: str, level: int) -> Chain:
        table = cell.minus if side == "minus" else cell.plus
        if level <= cell.dim:
            return table[level]
        return Chain.zero(level)

    minus: list[Chain] = []
    plus: list[Chain] = []
    for level in range(dim + 1):
        if level < k:
            minus.append(first.minus[level])
            plus.append(first.plus[level])
        elif level == k:
            minus.append(first.minus[k])
            plus.append(second.plus[k])
        else:
            minus.append(entry(first, "minus", level) + entry(second, "minus", level))
            plus.append(entry(first, "plus", level) + entry(second, "plus", level))
    return Cell(tuple(minus), tuple(plus))


def apply_morphism_cellwise(f: ADCMorphism, cell: Cell) -> Cell:
    """Push a table through a morphism entry by entry."""
    image = Cell(tuple(f.apply(c) for c in cell.minus),
                 tuple(f.apply(c) for c in cell.plus))
    report = validate_cell(f.target, image)
    if report:
        raise InternalCheckError(
            "morphism image of a cell is not a cell: " + "; ".join(report))
    return image


@dataclass
class HomComparison:
    source_pair: tuple[Key, Key]
    target_pair: tuple[Key, Key]
    source_count: int
    target_count: int
    bijective: bool


@dataclass
class FullFaithfulnessReport:
    pairs: list[HomComparison] = field(default_factory=list)
    complete: bool = True

    @property
    def fully_faithful(self) -> bool:
        return self.complete and all(p.bijective for p in self.pairs)


def check_fully_faithful(f: ADCMorphism, pairs: Iterable[tuple[Key, Key]],
                         max_dim: int, coeff_bound: int,
                         node_cap: int = DEFAULT_NODE_CAP) -> FullFaithfulnessReport:
    """Check hom-set bijectivity of a morphism on chosen point pairs.

    For each pair, pushes every bounded source cell through the morphism
    and compares against the bounded target enumeration.  A search guard
    trip leaves the report flagged incomplete instead of raising.
    """
    report = FullFaithfulnessReport()
    for a, b in pairs:
        a, b = tuple(a), tuple(b)
        fa = f.map_of(a).items[0][0]
        fb = f.map_of(b).items[0][0]
        try:
            source_cells = hom_set(f.source, a, b, max_dim, coeff_bound,
                                   node_cap=node_cap)
            target_cells = hom_set(f.target, fa, fb, max_dim, coeff_bound,
                                   node_cap=node_cap)
        except ResourceError:
            report.complete = False
            break
        images = [apply_morphism_cellwise(f, c) for c in source_cells]
        injective = len({c.sort_key() for c in images}) == len(images)
        surjective = ({c.sort_key() for c in images}
                      == {c.sort_key() for c in target_cells})
        report.pairs.append(HomComparison(
            (a, b), (fa, fb), len(source_cells), len(target_cells),
            injective and surjective))
    return report
