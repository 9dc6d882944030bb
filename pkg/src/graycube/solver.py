"""Bounded search for positive chains with a prescribed boundary.

The core problem: find every positive chain of a fixed degree, with all
coefficients at most a bound, whose signed boundary equals a given chain
and which optionally has a prescribed image under a second linear map.
This powers cell enumeration and the section solver.

The search processes one linear equation (row) at a time; a variable is
decided at the first row that touches it, so each row can be enforced
exactly when reached.  Boundary rows are ordered against a reverse
topological order of the complex, which makes the following shortcut
sound: once every remaining row has residual zero, all undecided
variables must vanish, because a nonzero positive chain with zero
boundary would contradict strong loop-freeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .adc import ADC
from .chains import Chain, Key, render_key
from .errors import GrayCubeError, ResourceError

DEFAULT_NODE_CAP = 10**6


@dataclass
class SearchStats:
    nodes: int = 0


def positive_boundary_solutions(
    complex_: ADC,
    degree: int,
    boundary: Chain,
    coeff_bound: int,
    image_constraint: Optional[tuple["object", Chain]] = None,
    node_cap: int = DEFAULT_NODE_CAP,
    loopfree_shortcut: bool = True,
) -> list[Chain]:
    """All positive chains c of the given degree with ``d c == boundary``.

    Coefficients range over 0..coeff_bound.  ``image_constraint`` is an
    optional pair (morphism, chain) demanding ``morphism(c) == chain``.
    Raises ResourceError when the node budget is exhausted.
    """
    if coeff_bound < 1:
        raise GrayCubeError("coefficient bound must be a positive integer")
    if boundary.degree != degree - 1:
        raise GrayCubeError("boundary chain has the wrong degree")

    variables: Sequence[Key] = complex_.basis(degree)
    index = {key: i for i, key in enumerate(variables)}
    nvars = len(variables)

    # rows: (coeffs over variable indices, rhs); image rows first, then
    # boundary rows against reverse topological order.
    rows: list[tuple[dict[int, int], int]] = []

    if image_constraint is not None:
        mapping, target_chain = image_constraint
        if target_chain.degree != degree:
            raise GrayCubeError("image constraint chain has the wrong degree")
        img_rows: dict[Key, dict[int, int]] = {}
        for i, var in enumerate(variables):
            for ref, c in mapping.map_of(var).items:
                img_rows.setdefault(ref, {})[i] = c
        touched = set(img_rows)
        for ref, c in target_chain.items:
            if ref not in touched and c != 0:
                return []
        for ref in sorted(touched):
            rows.append((img_rows[ref], target_chain.coeff(ref)))

    bnd_rows: dict[Key, dict[int, int]] = {}
    for i, var in enumerate(variables):
        for ref, c in complex_.dplus(var).items:
            row = bnd_rows.setdefault(ref, {})
            row[i] = row.get(i, 0) + c
        for ref, c in complex_.dminus(var).items:
            row = bnd_rows.setdefault(ref, {})
            row[i] = row.get(i, 0) - c
    for ref, c in boundary.items:
        if ref not in bnd_rows and c != 0:
            return []
    topo_pos = {key: i for i, key in enumerate(complex_.topo_order())}
    n_image_rows = len(rows)
    for ref in sorted(bnd_rows, key=lambda k: -topo_pos[k]):
        rows.append((bnd_rows[ref], boundary.coeff(ref)))

    # variables untouched by any row would be unconstrained
    touched_vars = set()
    for coeffs, _ in rows:
        touched_vars.update(coeffs)
    if len(touched_vars) != nvars:
        free = [v for i, v in enumerate(variables) if i not in touched_vars]
        raise GrayCubeError(
            "unconstrained basis elements in bounded search: "
            + ", ".join(render_key(v) for v in free[:4]))

    first_row = [len(rows)] * nvars
    for r in range(len(rows) - 1, -1, -1):
        for i in rows[r][0]:
            first_row[i] = r
    groups: list[list[int]] = [[] for _ in rows]
    for i in range(nvars):
        groups[first_row[i]].append(i)

    residual = [rhs for _, rhs in rows]
    values = [0] * nvars
    solutions: list[Chain] = []
    stats = SearchStats()

    def emit() -> None:
        coeffs = {variables[i]: values[i] for i in range(nvars) if values[i]}
        solutions.append(Chain.from_dict(degree, coeffs))

    def assign_group(r: int, members: list[int], pos: int) -> None:
        """Enumerate bounded assignments of a row's fresh variables."""
        stats.nodes += 1
        if stats.nodes > node_cap:
            raise ResourceError(
                f"bounded search exceeded {node_cap} nodes in degree {degree}")
        coeffs = rows[r][0]
        if pos == len(members):
            if residual[r] == 0:
                descend(r + 1)
            return
        i = members[pos]
        c = coeffs[i]
        # residual feasibility over the rest of this group
        rest_pos = sum(max(coeffs[j], 0) for j in members[pos + 1:]) * coeff_bound
        rest_neg = sum(min(coeffs[j], 0) for j in members[pos + 1:]) * coeff_bound
        for v in range(coeff_bound + 1):
            new_res = residual[r] - c * v
            if new_res - rest_pos > 0 or new_res - rest_neg < 0:
                continue
            values[i] = v
            if v:
                changed = []
                for rr in range(r + 1, len(rows)):
                    cc = rows[rr][0].get(i)
                    if cc:
                        residual[rr] -= cc * v
                        changed.append((rr, cc))
            else:
                changed = []
            saved = residual[r]
            residual[r] = new_res
            assign_group(r, members, pos + 1)
            residual[r] = saved
            for rr, cc in changed:
                residual[rr] += cc * v
            values[i] = 0

    def descend(r: int) -> None:
        if r == len(rows):
            emit()
            return
        if (loopfree_shortcut and r >= n_image_rows
                and all(residual[rr] == 0 for rr in range(r, len(rows)))):
            # remaining variables form a positive cycle-free kernel: zero
            emit()
            return
        assign_group(r, groups[r], 0)

    descend(0)
    solutions.sort(key=lambda c: c.items)
    return solutions
