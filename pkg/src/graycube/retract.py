"""Explicit section/retraction pairs exhibiting wedges and suspensions of
cubes as retracts of higher cubes, and the closure operations that
combine such witnesses.

All maps are built by universal properties out of verified pushouts and
re-checked against their defining identities at construction time; a
failure raises ConstructionError rather than returning a bad map.
Builders are memoized per index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .adc import ADC
from .chains import Chain, Key, render_key
from .errors import ConstructionError, ResourceError
from .morphisms import ADCMorphism, compose, compose_all, identity_morphism
from .pushout import PushoutData, induced_from_pushout, pushout
from .construct import (
    D0, D1, EDGE, POLE0, POLE1, POINT_ID,
    cube, interval, max_cube_dim, point, poles, skeleton, suspension,
    suspension_morphism, tensor, tensor_morphism, wedge, wedge_induced,
    wedge_morphism, wedge_pushout,
)
from .sections import solve_sections


def _zeros(k: int) -> Key:
    return ("d0",) * k

def _ones(k: int) -> Key:
    return ("d1",) * k

def _bottom_id(k: int) -> Key:
    return POINT_ID if k == 0 else _zeros(k)

def _top_id(k: int) -> Key:
    return POINT_ID if k == 0 else _ones(k)

def _strip(key: Key, k: int) -> Key:
    """Drop the point atom when the cube factor is zero-dimensional."""
    return () if k == 0 else key


def _check(built: ADCMorphism, name: str,
           bipointed: bool = True) -> ADCMorphism:
    report = built.validate()
    if report:
        raise ConstructionError(f"{name} is not a valid morphism: {report[0]}")
    if bipointed and not built.is_bipointed():
        raise ConstructionError(f"{name} is not bipointed")
    return built


# -- wedge side ---------------------------------------------------------------

_iota_memo: dict[tuple[int, int], ADCMorphism] = {}
_rho_memo: dict[tuple[int, int], ADCMorphism] = {}
_glue_memo: dict[tuple[int, int], tuple[PushoutData, ADCMorphism]] = {}
_glue_dual_memo: dict[tuple[int, int], tuple[PushoutData, ADCMorphism]] = {}


def wedge_section(m: int, n: int) -> ADCMorphism:
    """Bipointed inclusion of the wedge of two cubes into their tensor:
    the left cube at the bottom face, the right cube at the top face."""
    if (m, n) in _iota_memo:
        return _iota_memo[(m, n)]
    target = cube(m + n)
    left, right = cube(m), cube(n)
    data = wedge_pushout(left, right)
    from_left = ADCMorphism(
        left, target,
        {x: target.unit(_strip(x, m) + _strip(_bottom_id(n), n))
         if m else target.unit(_bottom_id(n))
         for x in left.keys()})
    from_right = ADCMorphism(
        right, target,
        {y: target.unit(_strip(_top_id(m), m) + _strip(y, n))
         if n else target.unit(_top_id(m))
         for y in right.keys()})
    built = _check(wedge_induced(data, from_left, from_right),
                   f"wedge section ({m},{n})")
    _iota_memo[(m, n)] = built
    return built


def _rho_base() -> ADCMorphism:
    """Explicit retraction for the square: the off-image corner goes to
    the join, parallel edges fold together, the square dies."""
    w, _, _ = wedge(cube(1), cube(1))
    sq = cube(2)
    lo, hi, join = ("L:d0",), ("R:d1",), ("L:d1",)
    e1, e2 = ("L:i",), ("R:i",)
    assignment = {
        ("d0", "d0"): Chain.unit(lo, 0),
        ("d1", "d0"): Chain.unit(join, 0),
        ("d0", "d1"): Chain.unit(join, 0),
        ("d1", "d1"): Chain.unit(hi, 0),
        ("i", "d0"): Chain.unit(e1, 1),
        ("d0", "i"): Chain.unit(e1, 1),
        ("i", "d1"): Chain.unit(e2, 1),
        ("d1", "i"): Chain.unit(e2, 1),
        ("i", "i"): Chain.zero(2),
    }
    return ADCMorphism(sq, w, assignment)


def _wedge_tensor_glue(m: int, n: int) -> tuple[PushoutData, ADCMorphism]:
    """The glued pair of cubes (left (x) interval glued to right (x)
    interval along the shared interval over the join), together with the
    relabeling isomorphism from (wedge (x) interval) onto it."""
    if (m, n) in _glue_memo:
        return _glue_memo[(m, n)]
    left_piece, right_piece = cube(m + 1), cube(n + 1)
    seg = interval()
    span_left = ADCMorphism(
        seg, left_piece,
        {v: left_piece.unit(_strip(_top_id(m), m) + v) for v in seg.keys()})
    span_right = ADCMorphism(
        seg, right_piece,
        {v: right_piece.unit(_strip(_bottom_id(n), n) + v) for v in seg.keys()})
    bottom = ("L:" + render_key(_zeros(m + 1)),)
    top = (("R:" + render_key(_ones(n + 1)),) if n >= 1
           else ("L:" + render_key(_ones(m + 1)),))
    data = pushout(
        span_right, span_left,
        relabel_c=lambda k: ("R:" + render_key(k),),
        relabel_d=lambda k: ("L:" + render_key(k),),
        bipointing=(bottom, top),
    )

    wcomplex, _, _ = wedge(cube(m), cube(n))
    source = tensor(wcomplex, seg)
    table: dict[Key, Key] = {}
    for x in cube(m).keys():
        wid = ("L:" + render_key(x),)
        for v in seg.keys():
            table[wid + v] = ("L:" + render_key(_strip(x, m) + v),)
    for y in cube(n).keys():
        if y == cube(n).bottom:
            continue
        wid = ("R:" + render_key(y),)
        for v in seg.keys():
            table[wid + v] = ("R:" + render_key(_strip(y, n) + v),)
    identification = ADCMorphism.from_relabel(source, table, data.complex)
    report = identification.validate()
    if report or not identification.is_basis_monic() \
            or source.size() != data.complex.size():
        raise ConstructionError(
            f"wedge/tensor identification ({m},{n}) failed: {report[:1]}")
    _glue_memo[(m, n)] = (data, identification)
    return data, identification


def wedge_step_section(m: int, n: int) -> ADCMorphism:
    """Inclusion of the wedge of a cube and a one-higher cube into the
    glued pair of tensored cubes: left factor at the interval bottom,
    right factor untouched."""
    data, _ = _wedge_tensor_glue(m, n)
    left, right = cube(m), cube(n + 1)
    wdata = wedge_pushout(left, right)
    into_left_piece = data.into_d
    into_right_piece = data.into_c
    from_left = compose(
        into_left_piece,
        ADCMorphism(left, cube(m + 1),
                    {x: cube(m + 1).unit(_strip(x, m) + ("d0",))
                     for x in left.keys()}))
    built = _check(wedge_induced(wdata, from_left, into_right_piece),
                   f"wedge step section ({m},{n})")
    return built


def wedge_step_retraction(m: int, n: int) -> ADCMorphism:
    """Retraction of the glued pair onto the wedge, folding the left
    tensor piece through the retraction of the (m,1) wedge."""
    data, _ = _wedge_tensor_glue(m, n)
    wedge_small = wedge_pushout(cube(m), cube(1))
    wedge_big = wedge_pushout(cube(m), cube(n + 1))
    bottom_face = ADCMorphism(
        interval(), cube(n + 1),
        {v: cube(n + 1).unit(_zeros(n) + v) for v in interval().keys()})
    widen = wedge_induced(
        wedge_small,
        wedge_big.into_d,
        compose(wedge_big.into_c, bottom_face))
    from_left_piece = compose(widen, wedge_retraction(m, 1))
    built = induced_from_pushout(
        data, cocone_c=wedge_big.into_c, cocone_d=from_left_piece)
    built = _check(built, f"wedge step retraction ({m},{n})")
    if not compose(built, wedge_step_section(m, n)).is_identity():
        raise ConstructionError(
            f"wedge step retraction ({m},{n}) fails the retraction identity")
    return built


def _wedge_tensor_glue_dual(m: int, n: int) -> tuple[PushoutData, ADCMorphism]:
    """Mirror of the glue with the fresh interval prepended instead of
    appended; generated mechanically from the primal formulas."""
    if (m, n) in _glue_dual_memo:
        return _glue_dual_memo[(m, n)]
    left_piece, right_piece = cube(m + 1), cube(n + 1)
    seg = interval()
    span_left = ADCMorphism(
        seg, left_piece,
        {v: left_piece.unit(v + _strip(_top_id(m), m)) for v in seg.keys()})
    span_right = ADCMorphism(
        seg, right_piece,
        {v: right_piece.unit(v + _strip(_bottom_id(n), n)) for v in seg.keys()})
    bottom = (("L:" + render_key(_zeros(m + 1)),) if m >= 1
              else ("R:" + render_key(_zeros(n + 1)),))
    top = ("R:" + render_key(("d1",) + _strip(_top_id(n), n)),)
    data = pushout(
        span_left, span_right,
        relabel_c=lambda k: ("L:" + render_key(k),),
        relabel_d=lambda k: ("R:" + render_key(k),),
        bipointing=(bottom, top),
    )

    wcomplex, _, _ = wedge(cube(m), cube(n))
    source = tensor(seg, wcomplex)
    join = ("L:" + render_key(cube(m).top),)
    table: dict[Key, Key] = {}
    for x in cube(m).keys():
        wid = ("L:" + render_key(x),)
        for v in seg.keys():
            if wid == join:
                table[v + wid] = ("R:" + render_key(v + _strip(_bottom_id(n), n)),)
            else:
                table[v + wid] = ("L:" + render_key(v + _strip(x, m)),)
    for y in cube(n).keys():
        if y == cube(n).bottom:
            continue
        wid = ("R:" + render_key(y),)
        for v in seg.keys():
            table[v + wid] = ("R:" + render_key(v + _strip(y, n)),)
    identification = ADCMorphism.from_relabel(source, table, data.complex)
    report = identification.validate()
    if report or not identification.is_basis_monic() \
            or source.size() != data.complex.size():
        raise ConstructionError(
            f"dual wedge/tensor identification ({m},{n}) failed: {report[:1]}")
    _glue_dual_memo[(m, n)] = (data, identification)
    return data, identification


def wedge_step_section_dual(m: int, n: int) -> ADCMorphism:
    """Mirror step section: the one-higher cube enters untouched on the
    left, the right factor sits at the interval top."""
    data, _ = _wedge_tensor_glue_dual(m, n)
    left, right = cube(m + 1), cube(n)
    wdata = wedge_pushout(left, right)
    from_right = compose(
        data.into_d,
        ADCMorphism(right, cube(n + 1),
                    {y: cube(n + 1).unit(("d1",) + _strip(y, n))
                     for y in right.keys()}))
    built = _check(wedge_induced(wdata, data.into_c, from_right),
                   f"dual wedge step section ({m},{n})")
    return built


def wedge_step_retraction_dual(m: int, n: int) -> ADCMorphism:
    """Mirror step retraction, folding the right tensor piece through the
    retraction of the (1,n) wedge."""
    data, _ = _wedge_tensor_glue_dual(m, n)
    wedge_small = wedge_pushout(cube(1), cube(n))
    wedge_big = wedge_pushout(cube(m + 1), cube(n))
    top_face = ADCMorphism(
        interval(), cube(m + 1),
        {v: cube(m + 1).unit(v + _ones(m)) for v in interval().keys()})
    widen = wedge_induced(
        wedge_small,
        compose(wedge_big.into_d, top_face),
        wedge_big.into_c)
    from_right_piece = compose(widen, wedge_retraction(1, n))
    built = induced_from_pushout(
        data, cocone_c=wedge_big.into_d, cocone_d=from_right_piece)
    built = _check(built, f"dual wedge step retraction ({m},{n})")
    if not compose(built, wedge_step_section_dual(m, n)).is_identity():
        raise ConstructionError(
            f"dual wedge step retraction ({m},{n}) fails the retraction identity")
    return built


def wedge_tensor_inclusion(m: int, n: int) -> ADCMorphism:
    """Map from the glued pair into the full cube: inserts the missing
    middle coordinates at the bottom face on the left piece and pins the
    left coordinates at the top on the right piece."""
    data, _ = _wedge_tensor_glue(m, n)
    target = cube(m + n + 1)
    from_left_piece = ADCMorphism(
        cube(m + 1), target,
        {z: target.unit(z[:-1] + _zeros(n) + z[-1:]) if m else
            target.unit(_zeros(n) + z)
         for z in cube(m + 1).keys()})
    from_right_piece = ADCMorphism(
        cube(n + 1), target,
        {z: target.unit(_ones(m) + z) for z in cube(n + 1).keys()})
    return _check(
        induced_from_pushout(data, cocone_c=from_right_piece,
                             cocone_d=from_left_piece),
        f"glued-pair inclusion ({m},{n})")


def wedge_tensor_inclusion_dual(m: int, n: int) -> ADCMorphism:
    data, _ = _wedge_tensor_glue_dual(m, n)
    target = cube(m + 1 + n)
    from_left_piece = ADCMorphism(
        cube(m + 1), target,
        {z: target.unit(z + _zeros(n)) for z in cube(m + 1).keys()})
    from_right_piece = ADCMorphism(
        cube(n + 1), target,
        {z: target.unit(z[:1] + _ones(m) + z[1:]) for z in cube(n + 1).keys()})
    return _check(
        induced_from_pushout(data, cocone_c=from_left_piece,
                             cocone_d=from_right_piece),
        f"dual glued-pair inclusion ({m},{n})")


def wedge_retraction(m: int, n: int) -> ADCMorphism:
    """Bipointed retraction of ``wedge_section(m, n)``.

    Base cases: an inverse relabeling when either side is a point, the
    explicit square folding at (1,1).  The step peels one interval off
    the larger side and goes through the glued pair.
    """
    if (m, n) in _rho_memo:
        return _rho_memo[(m, n)]
    if m == 0 or n == 0:
        built = wedge_section(m, n).inverted()
    elif m == 1 and n == 1:
        built = _rho_base()
    elif n >= 2:
        seg = interval()
        wcomplex, _, _ = wedge(cube(m), cube(n - 1))
        widened = tensor_morphism(
            wedge_retraction(m, n - 1), identity_morphism(seg),
            source=cube(m + n), target=tensor(wcomplex, seg))
        _, identification = _wedge_tensor_glue(m, n - 1)
        built = compose_all(wedge_step_retraction(m, n - 1),
                            identification, widened)
    else:
        seg = interval()
        wcomplex, _, _ = wedge(cube(m - 1), cube(n))
        widened = tensor_morphism(
            identity_morphism(seg), wedge_retraction(m - 1, n),
            source=cube(m + n), target=tensor(seg, wcomplex))
        _, identification = _wedge_tensor_glue_dual(m - 1, n)
        built = compose_all(wedge_step_retraction_dual(m - 1, n),
                            identification, widened)
    built = _check(built, f"wedge retraction ({m},{n})")
    if not compose(built, wedge_section(m, n)).is_identity():
        raise ConstructionError(
            f"wedge retraction ({m},{n}) fails the retraction identity")
    _rho_memo[(m, n)] = built
    return built


# -- suspension side -----------------------------------------------------------

_psi_memo: dict[int, ADCMorphism] = {}
_xi_memo: dict[int, ADCMorphism] = {}
_chi_memo: dict[int, ADCMorphism] = {}
_phi_memo: dict[int, ADCMorphism] = {}


def _shift_id(key: Key) -> Key:
    return ("s(" + render_key(key) + ")",)


def suspension_quotient(n: int) -> ADCMorphism:
    """Quotient of the (n+1)-cube onto the suspension of the n-cube,
    collapsing the two end faces of the first coordinate onto the poles."""
    if n in _psi_memo:
        return _psi_memo[n]
    total = cube(n + 1)
    ends, _ = skeleton(interval(), 0)
    collapsed = tensor(ends, cube(n)) if n >= 1 else ends
    inclusion = ADCMorphism(
        collapsed, total, {k: total.unit(k) for k in collapsed.keys()})
    to_poles = ADCMorphism(
        collapsed, poles(),
        {k: (Chain.unit(POLE0 if k[0] == "d0" else POLE1, 0)
             if collapsed.degree_of(k) == 0 else Chain.zero(collapsed.degree_of(k)))
         for k in collapsed.keys()})

    def relabel(key: Key) -> Key:
        inner = key[1:] if n >= 1 else POINT_ID
        return _shift_id(inner)

    data = pushout(inclusion, to_poles, relabel_c=relabel,
                   bipointing=(POLE0, POLE1))
    expected = suspension(cube(n))
    if data.complex != expected:
        raise ConstructionError(
            f"suspension quotient {n}: collapsed complex does not match the"
            " suspension (sign table failure)")
    built = _check(data.into_c, f"suspension quotient {n}")
    _psi_memo[n] = built
    return built


def suspension_step_quotient(n: int) -> ADCMorphism:
    """Collapse of (suspension (x) interval) onto the one-higher
    suspension: kills the two interval edges over the poles."""
    if n in _xi_memo:
        return _xi_memo[n]
    seg = interval()
    base = suspension(cube(n))
    total = tensor(base, seg)
    collapsed = tensor(poles(), seg)
    inclusion = ADCMorphism(
        collapsed, total, {k: total.unit(k) for k in collapsed.keys()})
    to_poles = ADCMorphism(
        collapsed, poles(),
        {k: (Chain.unit(POLE0 if k[0] == "0" else POLE1, 0)
             if collapsed.degree_of(k) == 0
             else Chain.zero(collapsed.degree_of(k)))
         for k in collapsed.keys()})

    table = {_shift_id(x) + v: _shift_id(_strip(x, n) + v)
             for x in cube(n).keys() for v in seg.keys()}

    data = pushout(inclusion, to_poles, relabel_c=lambda k: table[k],
                   bipointing=(POLE0, POLE1))
    expected = suspension(cube(n + 1))
    if data.complex != expected:
        raise ConstructionError(
            f"suspension step quotient {n}: collapsed complex does not match"
            " the suspension (sign table failure)")
    built = _check(data.into_c, f"suspension step quotient {n}")
    _xi_memo[n] = built
    return built


def suspension_step_section(n: int, coeff_bound: int = 2) -> ADCMorphism:
    """The unique bipointed section of the step quotient, found by
    exhaustive bounded search."""
    if n in _chi_memo:
        return _chi_memo[n]
    found = solve_sections(suspension_step_quotient(n), coeff_bound,
                           bipointed=True)
    if len(found) != 1:
        raise ConstructionError(
            f"expected exactly one bipointed section of the step quotient"
            f" {n} within bound {coeff_bound}; found {len(found)}")
    built = found.sections[0]
    _chi_memo[n] = built
    return built


def suspension_section(n: int) -> ADCMorphism:
    """Bipointed section of the suspension quotient, assembled from the
    unique step sections."""
    if n in _phi_memo:
        return _phi_memo[n]
    if n == 0:
        source = suspension(cube(0))
        built = ADCMorphism.from_relabel(
            source, {POLE0: D0, POLE1: D1, _shift_id(POINT_ID): EDGE},
            cube(1))
    else:
        seg = interval()
        widened = tensor_morphism(
            suspension_section(n - 1), identity_morphism(seg),
            source=tensor(suspension(cube(n - 1)), seg),
            target=cube(n + 1))
        built = compose(widened, suspension_step_section(n - 1))
    built = _check(built, f"suspension section {n}")
    if not compose(suspension_quotient(n), built).is_identity():
        raise ConstructionError(
            f"suspension section {n} fails the section identity")
    _phi_memo[n] = built
    return built


# -- retract witnesses ----------------------------------------------------------

@dataclass(frozen=True)
class RetractWitness:
    """A bipointed object exhibited as a retract of a cube."""

    object: ADC
    cube_dim: int
    section: ADCMorphism
    retraction: ADCMorphism

    def verify(self) -> list[str]:
        """Re-run every witness invariant; empty report means verified."""
        report: list[str] = []
        ambient = cube(self.cube_dim)
        if self.section.source != self.object or self.section.target != ambient:
            report.append("section endpoints do not match the witness")
        if self.retraction.source != ambient or self.retraction.target != self.object:
            report.append("retraction endpoints do not match the witness")
        if report:
            return report
        report.extend(f"object: {msg}" for msg in self.object.validate())
        report.extend(f"section: {msg}" for msg in self.section.validate())
        report.extend(f"retraction: {msg}" for msg in self.retraction.validate())
        if self.object.bipointing is None:
            report.append("object is not bipointed")
        if not self.section.is_bipointed():
            report.append("section is not bipointed")
        if not self.retraction.is_bipointed():
            report.append("retraction is not bipointed")
        if not report and not compose(self.retraction, self.section).is_identity():
            report.append("retraction of section is not the identity")
        return report


def make_witness(object_: ADC, cube_dim: int, section: ADCMorphism,
                 retraction: ADCMorphism) -> RetractWitness:
    witness = RetractWitness(object_, cube_dim, section, retraction)
    report = witness.verify()
    if report:
        raise ConstructionError("invalid retract witness: " + report[0])
    return witness


def point_witness() -> RetractWitness:
    pt = point()
    ident = identity_morphism(pt)
    return make_witness(pt, 0, ident, ident)


def cube_witness(n: int) -> RetractWitness:
    c = cube(n)
    ident = identity_morphism(c)
    return make_witness(c, n, ident, ident)


def lift_retract(op: str, first: RetractWitness,
                 second: Optional[RetractWitness] = None) -> RetractWitness:
    """Combine witnesses under tensor, wedge, or suspension.

    All identities are re-verified on the constructed witness.
    """
    if op == "tensor":
        if second is None:
            raise ValueError("tensor lift needs two witnesses")
        total = first.cube_dim + second.cube_dim
        obj = tensor(first.object, second.object)
        section = tensor_morphism(first.section, second.section,
                                  source=obj, target=cube(total))
        retraction = tensor_morphism(first.retraction, second.retraction,
                                     source=cube(total), target=obj)
        return make_witness(obj, total, section, retraction)
    if op == "wedge":
        if second is None:
            raise ValueError("wedge lift needs two witnesses")
        total = first.cube_dim + second.cube_dim
        odata = wedge_pushout(first.object, second.object)
        cdata = wedge_pushout(cube(first.cube_dim), cube(second.cube_dim))
        section = compose(
            wedge_section(first.cube_dim, second.cube_dim),
            wedge_morphism(first.section, second.section,
                           source_data=odata, target_data=cdata))
        retraction = compose(
            wedge_morphism(first.retraction, second.retraction,
                           source_data=cdata, target_data=odata),
            wedge_retraction(first.cube_dim, second.cube_dim))
        return make_witness(odata.complex, total, section, retraction)
    if op == "suspension":
        if second is not None:
            raise ValueError("suspension lift takes one witness")
        obj = suspension(first.object)
        ambient = suspension(cube(first.cube_dim))
        section = compose(
            suspension_section(first.cube_dim),
            suspension_morphism(first.section, source=obj, target=ambient))
        retraction = compose(
            suspension_morphism(first.retraction, source=ambient, target=obj),
            suspension_quotient(first.cube_dim))
        return make_witness(obj, first.cube_dim + 1, section, retraction)
    raise ValueError(f"unknown lift operation {op!r}")
