"""Transformation semigroups: enumeration and structural deciders.

Elements travel as ``bytes`` of images between this module and the kernels;
the public surface speaks :class:`Transformation`.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from . import _kernels
from .core import Transformation, conjugate
from .errors import ResourceLimitError
from .permgroup import PermutationGroup

DEFAULT_CAP = 2_000_000


class ElementSet:
    """An ordered, deduplicated set of transformations of one degree."""

    def __init__(self, degree: int, elements: Iterable[bytes]):
        self.degree = degree
        self._order = list(dict.fromkeys(elements))
        self._set = frozenset(self._order)

    def __len__(self):
        return len(self._order)

    def __iter__(self) -> Iterator[Transformation]:
        return (Transformation(tuple(e)) for e in self._order)

    def __contains__(self, x) -> bool:
        if isinstance(x, Transformation):
            x = x.to_bytes()
        return x in self._set

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.degree == other.degree and self._set == other._set

    def __le__(self, other: "ElementSet") -> bool:
        return self._set <= other._set

    def __repr__(self):
        return f"<ElementSet degree={self.degree} size={len(self)}>"

    def element_bytes(self) -> list[bytes]:
        return self._order

    def ranks(self) -> dict[int, int]:
        """Rank spectrum: rank -> number of elements."""
        out: dict[int, int] = {}
        for e in self._order:
            r = len(set(e))
            out[r] = out.get(r, 0) + 1
        return dict(sorted(out.items()))


class TransformationSemigroup:
    def __init__(self, degree: int, generators: Iterable[Transformation], size_cap: int = DEFAULT_CAP):
        gens = list(generators)
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        for a in gens:
            if a.degree != degree:
                raise ValueError(f"generator {a} has degree {a.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(gens)
        self.size_cap = size_cap
        self._elements: ElementSet | None = None

    @property
    def enumeration_complete(self) -> bool:
        return self._elements is not None

    def enumerate(self) -> ElementSet:
        if self._elements is None:
            gens = [a.to_bytes() for a in self.generators]
            found = _kernels.closure(gens, [], gens, self.size_cap)
            if len(found) > self.size_cap:
                raise ResourceLimitError("semigroup elements", len(found), self.size_cap)
            self._elements = ElementSet(self.degree, found)
        return self._elements

    @property
    def elements(self) -> ElementSet:
        return self.enumerate()

    def element_bytes(self) -> list[bytes]:
        return self.enumerate().element_bytes()

    def __len__(self):
        return len(self.enumerate())

    @classmethod
    def full(cls, n: int, size_cap: int = DEFAULT_CAP) -> "TransformationSemigroup":
        """T_n, generated by S_n and a rank n-1 idempotent."""
        g = PermutationGroup.symmetric(n)
        e = Transformation((0,) * min(n, 2) + tuple(range(2, n)))
        return cls(n, list(g.generators) + [e], size_cap)


def _elements_of(s) -> list[bytes]:
    return s.element_bytes()


def _require_non_unit(a: Transformation) -> None:
    if a.is_permutation():
        raise ValueError(f"{a} is a permutation; a non-unit is required")


def ideal_without_units(a: Transformation, g: PermutationGroup, size_cap: int = DEFAULT_CAP) -> ElementSet:
    """The non-permutations of <a, G>, found without enumerating G."""
    _require_non_unit(a)
    if a.degree != g.degree:
        raise ValueError("degree mismatch")
    ab = a.to_bytes()
    moves = g.generator_bytes() + [ab]
    found = _kernels.closure([ab], moves, moves, size_cap)
    if len(found) > size_cap:
        raise ResourceLimitError("ideal elements", len(found), size_cap)
    n = a.degree
    assert all(len(set(x)) < n for x in found)
    return ElementSet(n, found)


def conjugates(a: Transformation, g: PermutationGroup) -> list[Transformation]:
    """The G-conjugacy orbit of ``a``, starting with ``a``."""
    seen = {a: None}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for h in g.generators:
                y = conjugate(x, h)
                if y not in seen:
                    seen[y] = None
                    nxt.append(y)
        frontier = nxt
    return list(seen)


def conjugate_closure_semigroup(a: Transformation, g: PermutationGroup,
                                size_cap: int = DEFAULT_CAP) -> TransformationSemigroup:
    """The semigroup generated by all ``h⁻¹ a h`` for h in G."""
    _require_non_unit(a)
    s = TransformationSemigroup(a.degree, conjugates(a, g), size_cap)
    s.enumerate()
    return s


def generated_semigroup(a: Transformation, g: PermutationGroup, size_cap: int = DEFAULT_CAP) -> TransformationSemigroup:
    """<a, G> including its units."""
    s = TransformationSemigroup(a.degree, list(g.generators) + [a], size_cap)
    s.enumerate()
    return s


# -- regularity and idempotents ------------------------------------------------

def is_regular_element(x: Transformation, s) -> bool:
    els = _elements_of(s)
    xb = x.to_bytes()
    if xb not in set(els):
        raise ValueError(f"{x} is not an element of the semigroup")
    return bool(_kernels.regular_flags([xb], els)[0])


def regular_flags(s) -> list[bool]:
    els = _elements_of(s)
    return [bool(f) for f in _kernels.regular_flags(els, els)]


def is_regular_semigroup(s) -> bool:
    els = _elements_of(s)
    return all(_kernels.regular_flags(els, els))


def first_irregular(s) -> Transformation | None:
    els = _elements_of(s)
    flags = _kernels.regular_flags(els, els)
    for e, f in zip(els, flags):
        if not f:
            return Transformation(tuple(e))
    return None


def _is_idem(e: bytes) -> bool:
    return all(e[e[i]] == e[i] for i in range(len(e)))


def idempotents(s) -> ElementSet:
    els = _elements_of(s)
    return ElementSet(len(els[0]) if els else 0, (e for e in els if _is_idem(e)))


def is_idempotent_generated(s, size_cap: int = DEFAULT_CAP) -> bool:
    """Whether the idempotents of ``s`` generate all of ``s``."""
    els = _elements_of(s)
    idem = idempotents(s).element_bytes()
    if not idem:
        return False
    found = _kernels.closure(idem, [], idem, size_cap)
    if len(found) > size_cap:
        raise ResourceLimitError("idempotent closure", len(found), size_cap)
    return set(found) == set(els)


def _product(a: bytes, b: bytes) -> bytes:
    return bytes(b[x] for x in a)


def idempotents_closed(s) -> bool:
    idem = idempotents(s).element_bytes()
    return all(_is_idem(_product(e, f)) for e in idem for f in idem)


def idempotents_commute(s) -> bool:
    idem = idempotents(s).element_bytes()
    return all(_product(e, f) == _product(f, e) for i, e in enumerate(idem) for f in idem[i + 1:])


def is_orthodox(s) -> bool:
    """Regular, with the idempotents closed under products."""
    return is_regular_semigroup(s) and idempotents_closed(s)


def is_inverse(s) -> bool:
    """Regular, with pairwise commuting idempotents."""
    return is_regular_semigroup(s) and idempotents_commute(s)


def is_closed(s) -> bool:
    """Exhaustive closure check (quadratic; for tests and assertions)."""
    els = _elements_of(s)
    pool = set(els)
    return all(_product(x, y) in pool for x in els for y in els)


# -- pairs (a, G) ------------------------------------------------------------------

def is_regular_in_generated(a: Transformation, g: PermutationGroup, size_cap: int = DEFAULT_CAP) -> bool:
    """Whether ``a == a y a`` for some y in <a, G>.

    A unit witness h gives the non-unit witness ``h a h``, so searching the
    ideal suffices; units are only tried first as a shortcut for small G.
    """
    _require_non_unit(a)
    ab = a.to_bytes()
    if g.order is not None and g.order <= 5040:
        units = [h.to_bytes() for h in g.elements()]
        if _kernels.regular_flags([ab], units)[0]:
            return True
    ideal = ideal_without_units(a, g, size_cap).element_bytes()
    return bool(_kernels.regular_flags([ab], ideal)[0])


def is_generated_regular(a: Transformation, g: PermutationGroup, size_cap: int = DEFAULT_CAP) -> bool:
    """Whether the whole of <a, G> is regular (units are; non-units are tested in the ideal)."""
    return is_regular_semigroup(ideal_without_units(a, g, size_cap))


def is_normalising_pair(a: Transformation, g: PermutationGroup, size_cap: int = DEFAULT_CAP) -> bool:
    """Whether ``<h⁻¹ a h : h in G> == <a, G> \\ G``."""
    left = conjugate_closure_semigroup(a, g, size_cap).elements
    return left == ideal_without_units(a, g, size_cap)


def rank_spectrum(a: Transformation, g: PermutationGroup, size_cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Rank -> count over the non-units of <a, G>."""
    return ideal_without_units(a, g, size_cap).ranks()


def rank_n_minus_1_idempotent(n: int, alpha: int, beta: int) -> Transformation:
    """The idempotent with kernel class {alpha, beta} sending alpha to beta."""
    images = list(range(n))
    images[alpha] = beta
    return Transformation(tuple(images))


def stabiliser_contained(g: PermutationGroup, alpha: int, beta: int) -> bool:
    """Whether every element fixing alpha also fixes beta (by enumerating G)."""
    return all(h.images[beta] == beta for h in g.elements() if h.images[alpha] == alpha)


def mcalister_prediction(g: PermutationGroup, alpha: int, beta: int) -> dict[str, bool]:
    """What McAlister's results predict for <e, G>, e the (alpha -> beta) idempotent."""
    orbit_of = {x: i for i, o in enumerate(g.point_orbits()) for x in o}
    separate = orbit_of[alpha] != orbit_of[beta]
    return {
        "regular": True,
        "orthodox_if": separate,
        "inverse": separate and stabiliser_contained(g, alpha, beta),
    }
