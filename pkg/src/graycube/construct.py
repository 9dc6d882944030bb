"""Generators and combinators: point, interval, tensor, cubes, skeleta,
suspension, wedge, constant maps and face inclusions.

Id conventions (see also the README format section):

* point: "*"; interval: "d0", "d1", "i" with d+ i = d1, d- i = d0;
* tensor ids concatenate factor tuples, so reassociating a tensor is a
  literal identity and ``cube(m+n) == tensor(cube(m), cube(n))``;
* suspension: poles "0", "1" and one atom "s(a)" per basis element a;
* wedge: left ids "L:a", right ids "R:a"; the join keeps the left id and
  the right bottom id is dropped.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Optional

from .adc import ADC, Bipointing
from .chains import Chain, Key, render_key
from .errors import ResourceError, StructuralError
from .morphisms import ADCMorphism, compose
from .pushout import PushoutData, induced_from_pushout, pushout

MAX_DIM_ENV = "GRAYCUBE_MAX_DIM"
DEFAULT_MAX_DIM = 12

POINT_ID: Key = ("*",)
D0: Key = ("d0",)
D1: Key = ("d1",)
EDGE: Key = ("i",)
POLE0: Key = ("0",)
POLE1: Key = ("1",)


def max_cube_dim() -> int:
    """Configured cube-dimension guard (env GRAYCUBE_MAX_DIM)."""
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise ResourceError(f"invalid {MAX_DIM_ENV}={raw!r}") from None
    if value < 0:
        raise ResourceError(f"invalid {MAX_DIM_ENV}={raw!r}")
    return value


def point() -> ADC:
    """The terminal complex: one degree-0 element, self-bipointed."""
    return ADC({POINT_ID: 0}, {}, {}, (POINT_ID, POINT_ID))


def interval() -> ADC:
    """The arrow: two endpoints and one directed edge between them."""
    return ADC(
        {D0: 0, D1: 0, EDGE: 1},
        {EDGE: Chain.unit(D1, 0)},
        {EDGE: Chain.unit(D0, 0)},
        (D0, D1),
    )


def poles() -> ADC:
    """Two bare points labeled like suspension poles."""
    return ADC({POLE0: 0, POLE1: 0}, {}, {}, (POLE0, POLE1))


def tensor(left: ADC, right: ADC) -> ADC:
    """Tensor product with product basis and graded Leibniz boundary.

    The polarity of the second factor's boundary twists with the parity
    of the first factor's degree.  The bipointing, when both factors
    carry one, is the diagonal.
    """
    degrees: dict[Key, int] = {}
    dplus: dict[Key, Chain] = {}
    dminus: dict[Key, Chain] = {}
    for a in left.keys():
        da = left.degree_of(a)
        for b in right.keys():
            db = right.degree_of(b)
            key = a + b
            if key in degrees:
                raise StructuralError(
                    f"tensor id collision at {render_key(key)}")
            degrees[key] = da + db
            if da + db == 0:
                continue
            coeffs_plus: dict[Key, int] = {}
            coeffs_minus: dict[Key, int] = {}
            if da >= 1:
                for ref, c in left.dplus(a).items:
                    coeffs_plus[ref + b] = coeffs_plus.get(ref + b, 0) + c
                for ref, c in left.dminus(a).items:
                    coeffs_minus[ref + b] = coeffs_minus.get(ref + b, 0) + c
            if db >= 1:
                second_plus = right.dplus(b) if da % 2 == 0 else right.dminus(b)
                second_minus = right.dminus(b) if da % 2 == 0 else right.dplus(b)
                for ref, c in second_plus.items:
                    coeffs_plus[a + ref] = coeffs_plus.get(a + ref, 0) + c
                for ref, c in second_minus.items:
                    coeffs_minus[a + ref] = coeffs_minus.get(a + ref, 0) + c
            dplus[key] = Chain.from_dict(da + db - 1, coeffs_plus)
            dminus[key] = Chain.from_dict(da + db - 1, coeffs_minus)
    bipointing: Optional[Bipointing] = None
    if left.bipointing is not None and right.bipointing is not None:
        bipointing = (left.bottom + right.bottom, left.top + right.top)
    return ADC(degrees, dplus, dminus, bipointing)


def tensor_all(*factors: ADC) -> ADC:
    result = factors[0]
    for factor in factors[1:]:
        result = tensor(result, factor)
    return result


def tensor_morphism(f: ADCMorphism, g: ADCMorphism,
                    source: Optional[ADC] = None,
                    target: Optional[ADC] = None) -> ADCMorphism:
    """Bilinear extension (f (x) g)(a (x) b) = f(a) (x) g(b)."""
    source = source if source is not None else tensor(f.source, g.source)
    target = target if target is not None else tensor(f.target, g.target)
    assignment: dict[Key, Chain] = {}
    for a in f.source.keys():
        fa = f.map_of(a)
        da = f.source.degree_of(a)
        for b in g.source.keys():
            gb = g.map_of(b)
            db = g.source.degree_of(b)
            coeffs: dict[Key, int] = {}
            for ra, ca in fa.items:
                for rb, cb in gb.items:
                    key = ra + rb
                    coeffs[key] = coeffs.get(key, 0) + ca * cb
            assignment[a + b] = Chain.from_dict(da + db, coeffs)
    return ADCMorphism(source, target, assignment)


@lru_cache(maxsize=None)
def _cube_unguarded(n: int) -> ADC:
    if n == 0:
        return point()
    if n == 1:
        return interval()
    return tensor(_cube_unguarded(n - 1), interval())


def cube(n: int) -> ADC:
    """n-fold tensor power of the interval with its natural bipointing."""
    if n < 0:
        raise ValueError("cube dimension must be nonnegative")
    if n > max_cube_dim():
        raise ResourceError(
            f"cube dimension {n} exceeds the configured bound {max_cube_dim()}"
            f" (set {MAX_DIM_ENV} to override)")
    return _cube_unguarded(n)


def cube_boundary(n: int) -> tuple[ADC, ADCMorphism]:
    """The (n-1)-skeleton of the n-cube with its inclusion."""
    if n < 1:
        raise ValueError("cube boundary needs dimension >= 1")
    return skeleton(cube(n), n - 1)


def skeleton(complex_: ADC, k: int) -> tuple[ADC, ADCMorphism]:
    """Subcomplex of degrees <= k and its basis-monic inclusion."""
    if k < 0:
        raise ValueError("skeleton degree must be nonnegative")
    keep = [key for key in complex_.keys() if complex_.degree_of(key) <= k]
    sub = complex_.subcomplex(keep)
    inclusion = ADCMorphism(sub, complex_,
                            {key: complex_.unit(key) for key in keep})
    return sub, inclusion


def suspension(complex_: ADC) -> ADC:
    """Two poles plus a degree-shifted copy of the input basis.

    A shifted element sits between the poles in degree 1; in higher
    degrees its boundary parts are the shifted parts of the original
    element with the polarities exchanged.  The exchange is forced: it is
    the unique decomposition under which the collapse of (interval (x)
    complex) onto the two poles is a positive chain map, so the canonical
    quotients built on top of this complex stay valid morphisms.
    """
    degrees: dict[Key, int] = {POLE0: 0, POLE1: 0}
    dplus: dict[Key, Chain] = {}
    dminus: dict[Key, Chain] = {}

    def shifted(key: Key) -> Key:
        return ("s(" + render_key(key) + ")",)

    def shift_chain(chain: Chain) -> Chain:
        return Chain.from_dict(chain.degree + 1,
                               {shifted(k): c for k, c in chain.items})

    for key in complex_.keys():
        deg = complex_.degree_of(key)
        new = shifted(key)
        degrees[new] = deg + 1
        if deg == 0:
            dplus[new] = Chain.unit(POLE1, 0)
            dminus[new] = Chain.unit(POLE0, 0)
        else:
            dplus[new] = shift_chain(complex_.dminus(key))
            dminus[new] = shift_chain(complex_.dplus(key))
    return ADC(degrees, dplus, dminus, (POLE0, POLE1))


def suspension_morphism(f: ADCMorphism,
                        source: Optional[ADC] = None,
                        target: Optional[ADC] = None) -> ADCMorphism:
    """Functorial action on suspensions: poles fixed, s(x) -> s(f x)."""
    source = source if source is not None else suspension(f.source)
    target = target if target is not None else suspension(f.target)

    def shifted(key: Key) -> Key:
        return ("s(" + render_key(key) + ")",)

    assignment: dict[Key, Chain] = {
        POLE0: Chain.unit(POLE0, 0),
        POLE1: Chain.unit(POLE1, 0),
    }
    for key in f.source.keys():
        image = f.map_of(key)
        assignment[shifted(key)] = Chain.from_dict(
            image.degree + 1, {shifted(k): c for k, c in image.items})
    return ADCMorphism(source, target, assignment)


def _wedge_left_id(key: Key) -> Key:
    return ("L:" + render_key(key),)


def _wedge_right_id(key: Key) -> Key:
    return ("R:" + render_key(key),)


def wedge_pushout(left: ADC, right: ADC) -> PushoutData:
    """Pushout gluing the top of the left complex to the bottom of the
    right; the join point keeps the left operand's id."""
    if left.bipointing is None or right.bipointing is None:
        raise StructuralError("wedge needs bipointed operands")
    pt = point()
    into_right = ADCMorphism(pt, right, {POINT_ID: right.unit(right.bottom)})
    into_left = ADCMorphism(pt, left, {POINT_ID: left.unit(left.top)})
    join = _wedge_left_id(left.top)
    top_id = join if right.top == right.bottom else _wedge_right_id(right.top)
    return pushout(
        into_right, into_left,
        relabel_c=_wedge_right_id,
        relabel_d=_wedge_left_id,
        bipointing=(_wedge_left_id(left.bottom), top_id),
    )


def wedge(left: ADC, right: ADC) -> tuple[ADC, ADCMorphism, ADCMorphism]:
    """Wedge sum with bipointing (left bottom, right top).

    Returns the complex and the two inclusion cocones.
    """
    data = wedge_pushout(left, right)
    return data.complex, data.into_d, data.into_c


def wedge_induced(data: PushoutData, from_left: ADCMorphism,
                  from_right: ADCMorphism) -> ADCMorphism:
    """Map out of a wedge given cocone legs agreeing at the join."""
    return induced_from_pushout(data, cocone_c=from_right, cocone_d=from_left)


def wedge_morphism(f: ADCMorphism, g: ADCMorphism,
                   source_data: Optional[PushoutData] = None,
                   target_data: Optional[PushoutData] = None) -> ADCMorphism:
    """Wedge of two bipointed morphisms; rejects non-bipointed input."""
    if not f.is_bipointed() or not g.is_bipointed():
        raise StructuralError("wedge_morphism needs bipointed morphisms")
    data = source_data if source_data is not None else wedge_pushout(f.source, g.source)
    tdata = target_data if target_data is not None else wedge_pushout(f.target, g.target)
    return wedge_induced(data, compose(tdata.into_d, f), compose(tdata.into_c, g))


def const_map(source: ADC, target: ADC, value: Key) -> ADCMorphism:
    """Collapse everything onto one point of the target."""
    value = tuple(value)
    if target.degree_of(value) != 0:
        raise ValueError("constant maps need a degree-0 target id")
    assignment = {key: Chain.unit(value, 0)
                  for key in source.basis(0)}
    return ADCMorphism(source, target, assignment)


def face_sandwich(left: ADC, x: Key, middle: ADC, right: ADC, y: Key,
                  target: Optional[ADC] = None) -> ADCMorphism:
    """Basis-monic inclusion z -> x (x) z (x) y for points x, y."""
    x, y = tuple(x), tuple(y)
    if left.degree_of(x) != 0 or right.degree_of(y) != 0:
        raise ValueError("face inclusions are indexed by degree-0 ids")
    target = target if target is not None else tensor_all(left, middle, right)
    assignment = {key: target.unit(x + key + y) for key in middle.keys()}
    return ADCMorphism(middle, target, assignment)


def face_left(left: ADC, x: Key, middle: ADC,
              target: Optional[ADC] = None) -> ADCMorphism:
    """Inclusion z -> x (x) z at a point of the left factor."""
    x = tuple(x)
    if left.degree_of(x) != 0:
        raise ValueError("face inclusions are indexed by degree-0 ids")
    target = target if target is not None else tensor(left, middle)
    assignment = {key: target.unit(x + key) for key in middle.keys()}
    return ADCMorphism(middle, target, assignment)


def face_right(middle: ADC, right: ADC, y: Key,
               target: Optional[ADC] = None) -> ADCMorphism:
    """Inclusion z -> z (x) y at a point of the right factor."""
    y = tuple(y)
    if right.degree_of(y) != 0:
        raise ValueError("face inclusions are indexed by degree-0 ids")
    target = target if target is not None else tensor(middle, right)
    assignment = {key: target.unit(key + y) for key in middle.keys()}
    return ADCMorphism(middle, target, assignment)


def suspension_collapse(complex_: ADC) -> PushoutData:
    """Pushout of (interval (x) C) <- (endpoints (x) C) -> poles.

    Collapses the two end faces of the fresh first coordinate onto bare
    poles; the quotient carries the canonical suspension labels and is
    asserted to equal ``suspension(complex_)`` on the nose.
    """
    seg = interval()
    ends, _ = skeleton(seg, 0)
    total = tensor(seg, complex_)
    collapsed = tensor(ends, complex_)
    inclusion = ADCMorphism(
        collapsed, total, {k: total.unit(k) for k in collapsed.keys()})
    to_poles = ADCMorphism(
        collapsed, poles(),
        {k: (Chain.unit(POLE0 if k[0] == "d0" else POLE1, 0)
             if collapsed.degree_of(k) == 0
             else Chain.zero(collapsed.degree_of(k)))
         for k in collapsed.keys()})

    def relabel(key: Key) -> Key:
        return ("s(" + render_key(key[1:]) + ")",)

    data = pushout(inclusion, to_poles, relabel_c=relabel,
                   bipointing=(POLE0, POLE1))
    if data.complex != suspension(complex_):
        raise StructuralError(
            "suspension collapse does not match the suspension complex")
    return data
