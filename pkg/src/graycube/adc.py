"""Augmented directed complexes with distinguished basis.

An ADC here is a finite graded basis together with, for every basis
element of positive degree, the positive and negative parts of its
boundary stored as positive chains one degree lower.  The boundary of a
chain is the signed difference of the two parts extended linearly, and
the augmentation of a degree-0 chain is its coefficient sum.  A complex
may carry a bipointing: an ordered pair of degree-0 basis ids.

Values are immutable after construction and safe to share; every
operation in this package is a pure function of its inputs.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional

from .chains import Chain, Key, render_key
from .errors import GrayCubeError, StructuralError

Bipointing = tuple[Key, Key]


def _strip_common(plus: Chain, minus: Chain) -> tuple[Chain, Chain]:
    """Remove the common positive part so the two supports are disjoint."""
    shared = set(plus.support) & set(minus.support)
    if not shared:
        return plus, minus
    p = plus.as_dict()
    m = minus.as_dict()
    for key in shared:
        c = min(p[key], m[key])
        p[key] -= c
        m[key] -= c
    return Chain.from_dict(plus.degree, p), Chain.from_dict(minus.degree, m)


class ADC:
    """One strict omega-category presentation: graded basis plus boundary
    decomposition and coefficient-sum augmentation.

    Boundary parts are normalized at construction so that the plus and
    minus supports of each basis element are disjoint.
    """

    __slots__ = ("_degrees", "_dplus", "_dminus", "_bipointing",
                 "_keys", "_by_degree", "_dim", "_topo_cache", "_hash")

    def __init__(
        self,
        degrees: Mapping[Key, int],
        dplus: Mapping[Key, Chain | Mapping[Key, int]],
        dminus: Mapping[Key, Chain | Mapping[Key, int]],
        bipointing: Optional[Bipointing] = None,
    ):
        degs: dict[Key, int] = {}
        for key, deg in degrees.items():
            key = tuple(key)
            if deg < 0:
                raise StructuralError(f"negative degree for {render_key(key)}")
            if key in degs:
                raise StructuralError(f"duplicate basis id {render_key(key)}")
            degs[key] = int(deg)
        if not degs:
            raise StructuralError("a complex needs at least one basis element")

        parts: list[dict[Key, Chain]] = [{}, {}]
        for store, given, tag in ((parts[0], dplus, "d+"), (parts[1], dminus, "d-")):
            for key, chain in given.items():
                key = tuple(key)
                if key not in degs:
                    raise StructuralError(
                        f"{tag} given for unknown basis element {render_key(key)}")
                deg = degs[key]
                if deg == 0:
                    raise StructuralError(
                        f"{tag} given for degree-0 element {render_key(key)}")
                if not isinstance(chain, Chain):
                    chain = Chain.from_dict(deg - 1, chain)
                if chain.degree != deg - 1:
                    raise StructuralError(
                        f"{tag} of {render_key(key)} has degree {chain.degree},"
                        f" expected {deg - 1}")
                for ref, coeff in chain.items:
                    if ref not in degs:
                        raise StructuralError(
                            f"unresolved basis id {render_key(ref)} in {tag} of"
                            f" {render_key(key)}")
                    if degs[ref] != deg - 1:
                        raise StructuralError(
                            f"{tag} of {render_key(key)} references"
                            f" {render_key(ref)} of wrong degree")
                    if coeff < 0:
                        raise StructuralError(
                            f"{tag} of {render_key(key)} is not a positive chain")
                store[key] = chain

        plus, minus = parts
        for key, deg in degs.items():
            if deg == 0:
                continue
            p = plus.get(key, Chain.zero(deg - 1))
            m = minus.get(key, Chain.zero(deg - 1))
            plus[key], minus[key] = _strip_common(p, m)

        if bipointing is not None:
            bottom, top = (tuple(bipointing[0]), tuple(bipointing[1]))
            for point in (bottom, top):
                if degs.get(point) != 0:
                    raise StructuralError(
                        f"bipointing id {render_key(point)} is not a degree-0"
                        " basis element")
            bipointing = (bottom, top)

        self._degrees = degs
        self._dplus = plus
        self._dminus = minus
        self._bipointing = bipointing
        self._keys = tuple(sorted(degs, key=lambda k: (degs[k], k)))
        by_degree: dict[int, list[Key]] = {}
        for key in self._keys:
            by_degree.setdefault(degs[key], []).append(key)
        self._by_degree = {d: tuple(ks) for d, ks in by_degree.items()}
        self._dim = max(degs.values())
        self._topo_cache: Optional[tuple[Optional[tuple[Key, ...]], Optional[list[Key]]]] = None
        self._hash: Optional[int] = None

    # -- accessors ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def bipointing(self) -> Optional[Bipointing]:
        return self._bipointing

    @property
    def bottom(self) -> Key:
        if self._bipointing is None:
            raise StructuralError("complex carries no bipointing")
        return self._bipointing[0]

    @property
    def top(self) -> Key:
        if self._bipointing is None:
            raise StructuralError("complex carries no bipointing")
        return self._bipointing[1]

    def keys(self) -> tuple[Key, ...]:
        """All basis ids, ordered by (degree, id)."""
        return self._keys

    def basis(self, degree: int) -> tuple[Key, ...]:
        return self._by_degree.get(degree, ())

    def __contains__(self, key: Key) -> bool:
        return tuple(key) in self._degrees

    def degree_of(self, key: Key) -> int:
        try:
            return self._degrees[tuple(key)]
        except KeyError:
            raise StructuralError(f"unknown basis id {render_key(tuple(key))}") from None

    def dplus(self, key: Key) -> Chain:
        deg = self.degree_of(key)
        if deg == 0:
            raise StructuralError("degree-0 elements have no boundary")
        return self._dplus[tuple(key)]

    def dminus(self, key: Key) -> Chain:
        deg = self.degree_of(key)
        if deg == 0:
            raise StructuralError("degree-0 elements have no boundary")
        return self._dminus[tuple(key)]

    def size(self) -> int:
        return len(self._degrees)

    # -- chain operations --------------------------------------------------

    def unit(self, key: Key) -> Chain:
        return Chain.unit(tuple(key), self.degree_of(key))

    def boundary(self, chain: Chain) -> Chain:
        """Signed boundary, extended linearly over the stored parts."""
        if chain.degree < 1:
            raise StructuralError("boundary of a degree-0 chain is undefined")
        coeffs: dict[Key, int] = {}
        for key, c in chain.items:
            for ref, a in self._dplus[key].items:
                coeffs[ref] = coeffs.get(ref, 0) + c * a
            for ref, a in self._dminus[key].items:
                coeffs[ref] = coeffs.get(ref, 0) - c * a
        return Chain.from_dict(chain.degree - 1, coeffs)

    def directed_parts(self, chain: Chain) -> tuple[Chain, Chain]:
        """Canonical sign split (plus, minus) of the boundary of a chain."""
        return self.boundary(chain).split()

    def augmentation(self, chain: Chain) -> int:
        if chain.degree != 0:
            raise StructuralError("augmentation only applies in degree 0")
        return chain.coeff_sum()

    # -- order structure ----------------------------------------------------

    def precedence_edges(self) -> Iterable[tuple[Key, Key]]:
        """Generating edges of the precedence preorder.

        x -> y whenever x occurs in the minus part of y, or y occurs in
        the plus part of x.
        """
        for key, deg in self._degrees.items():
            if deg == 0:
                continue
            for ref in self._dminus[key].support:
                yield ref, key
            for ref in self._dplus[key].support:
                yield key, ref

    def _topo(self) -> tuple[Optional[tuple[Key, ...]], Optional[list[Key]]]:
        """Kahn topological sort; returns (order, None) or (None, cycle)."""
        if self._topo_cache is not None:
            return self._topo_cache
        succ: dict[Key, set[Key]] = {k: set() for k in self._keys}
        indeg: dict[Key, int] = {k: 0 for k in self._keys}
        for a, b in self.precedence_edges():
            if b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1
        import heapq
        ready = [k for k in self._keys if indeg[k] == 0]
        heapq.heapify(ready)
        order: list[Key] = []
        while ready:
            k = heapq.heappop(ready)
            order.append(k)
            for nxt in succ[k]:
                indeg[nxt] -= 1
                if indeg[nxt] == 0:
                    heapq.heappush(ready, nxt)
        if len(order) == len(self._keys):
            self._topo_cache = (tuple(order), None)
        else:
            cycle = sorted(k for k in self._keys if indeg[k] > 0)
            self._topo_cache = (None, cycle)
        return self._topo_cache

    def topo_order(self) -> tuple[Key, ...]:
        """A total order extending precedence; raises on cyclic complexes."""
        order, cycle = self._topo()
        if order is None:
            raise GrayCubeError(
                "complex is not strongly loop-free; cycle through "
                + ", ".join(render_key(k) for k in (cycle or [])[:6]))
        return order

    # -- validation ----------------------------------------------------------

    def validate(self) -> list[str]:
        """Report of violated axioms; empty means the complex is valid.

        Checks the four invariants: square-zero boundary, vanishing of
        the augmentation on boundaries, unitality of the iterated
        directed boundaries, and strong loop-freeness.
        """
        report: list[str] = []
        for key in self._keys:
            deg = self._degrees[key]
            if deg < 1:
                continue
            signed = self._dplus[key] - self._dminus[key]
            if deg == 1:
                if self.augmentation(signed) != 0:
                    report.append(
                        f"augmentation: e(d {render_key(key)}) != 0")
            else:
                if not self.boundary(signed).is_zero():
                    report.append(
                        f"square-zero: d(d {render_key(key)}) != 0")
        for key in self._keys:
            deg = self._degrees[key]
            for tag, chain in (("minus", self.unit(key)), ("plus", self.unit(key))):
                for _ in range(deg):
                    p, m = self.directed_parts(chain)
                    chain = m if tag == "minus" else p
                if chain.coeff_sum() != 1:
                    report.append(
                        f"unitality: iterated {tag} atom of {render_key(key)}"
                        f" has augmentation {chain.coeff_sum()}")
        order, cycle = self._topo()
        if order is None:
            report.append(
                "loop-freeness: precedence relation has a cycle through "
                + ", ".join(render_key(k) for k in (cycle or [])[:6]))
        return report

    def is_valid(self) -> bool:
        return not self.validate()

    # -- construction helpers -------------------------------------------------

    def relabeled(self, mapping: Mapping[Key, Key] | Callable[[Key], Key]) -> "ADC":
        """New complex with basis ids renamed by an injective mapping."""
        if callable(mapping):
            table = {k: tuple(mapping(k)) for k in self._keys}
        else:
            table = {k: tuple(mapping[k]) for k in self._keys}
        if len(set(table.values())) != len(table):
            raise StructuralError("relabeling is not injective")

        def move(chain: Chain) -> Chain:
            return Chain.from_dict(chain.degree,
                                   {table[k]: c for k, c in chain.items})

        degrees = {table[k]: d for k, d in self._degrees.items()}
        dplus = {table[k]: move(c) for k, c in self._dplus.items()}
        dminus = {table[k]: move(c) for k, c in self._dminus.items()}
        bp = None
        if self._bipointing is not None:
            bp = (table[self._bipointing[0]], table[self._bipointing[1]])
        return ADC(degrees, dplus, dminus, bp)

    def subcomplex(self, keys: Iterable[Key], bipointing: Optional[Bipointing] = None) -> "ADC":
        """Full subcomplex spanned by the given ids; must be boundary-closed."""
        keep = {tuple(k) for k in keys}
        for key in keep:
            deg = self.degree_of(key)
            if deg == 0:
                continue
            for ref in (*self._dplus[key].support, *self._dminus[key].support):
                if ref not in keep:
                    raise StructuralError(
                        f"subcomplex not closed under boundary at {render_key(key)}")
        degrees = {k: self._degrees[k] for k in keep}
        dplus = {k: self._dplus[k] for k in keep if self._degrees[k] >= 1}
        dminus = {k: self._dminus[k] for k in keep if self._degrees[k] >= 1}
        if bipointing is None and self._bipointing is not None:
            b, t = self._bipointing
            if b in keep and t in keep:
                bipointing = (b, t)
        return ADC(degrees, dplus, dminus, bipointing)

    def with_bipointing(self, bipointing: Optional[Bipointing]) -> "ADC":
        return ADC(self._degrees, self._dplus, self._dminus, bipointing)

    # -- equality --------------------------------------------------------------

    def _signature(self):
        return (
            tuple((k, self._degrees[k]) for k in self._keys),
            tuple((k, self._dplus[k].items, self._dminus[k].items)
                  for k in self._keys if self._degrees[k] >= 1),
            self._bipointing,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ADC):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._signature())
        return self._hash

    def __repr__(self) -> str:
        counts = ",".join(str(len(self.basis(d))) for d in range(self.dim + 1))
        return f"ADC(dim={self.dim}, basis=[{counts}])"


def validate_complex(complex_: ADC) -> list[str]:
    """Axiom report for a structurally well-formed complex."""
    return complex_.validate()


def find_relabel_iso(source: ADC, target: ADC,
                     pinned: Optional[Mapping[Key, Key]] = None,
                     respect_bipointing: bool = True) -> Optional[dict[Key, Key]]:
    """Search for a basis relabeling identifying two complexes.

    Returns an id mapping under which ``source.relabeled(...) == target``
    (ignoring bipointings unless ``respect_bipointing``), or None.  Uses
    degree-by-degree backtracking with boundary compatibility pruning;
    intended for the small complexes that arise in verification.
    """
    if source.dim != target.dim or source.size() != target.size():
        return None
    for d in range(source.dim + 1):
        if len(source.basis(d)) != len(target.basis(d)):
            return None

    mapping: dict[Key, Key] = {}
    used: set[Key] = set()
    if pinned:
        for a, b in pinned.items():
            mapping[tuple(a)] = tuple(b)
            used.add(tuple(b))
    if respect_bipointing and source.bipointing and target.bipointing:
        for a, b in zip(source.bipointing, target.bipointing):
            if mapping.get(a, b) != b or (b in used and mapping.get(a) != b):
                return None
            mapping[a] = b
            used.add(b)

    def move(chain: Chain) -> Optional[Chain]:
        coeffs = {}
        for k, c in chain.items:
            img = mapping.get(k)
            if img is None:
                return None
            coeffs[img] = c
        return Chain.from_dict(chain.degree, coeffs)

    def compatible(a: Key, b: Key) -> bool:
        deg = source.degree_of(a)
        if target.degree_of(b) != deg:
            return False
        if deg == 0:
            return True
        pa, ma = source.dplus(a), source.dminus(a)
        pb, mb = target.dplus(b), target.dminus(b)
        if sorted(c for _, c in pa.items) != sorted(c for _, c in pb.items):
            return False
        if sorted(c for _, c in ma.items) != sorted(c for _, c in mb.items):
            return False
        # lower degrees are fully mapped already
        return move(pa) == pb and move(ma) == mb

    order = [k for k in source.keys() if k not in mapping]
    targets_by_degree = {
        d: [k for k in target.basis(d)] for d in range(target.dim + 1)
    }

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for b in targets_by_degree[source.degree_of(a)]:
            if b in used:
                continue
            if not compatible(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if extend(i + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    for a, b in list(mapping.items()):
        if not compatible(a, b):
            return None
    if extend(0):
        return dict(mapping)
    return None
