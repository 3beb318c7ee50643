"""Enumerating transformations by kernel shape, and reducing them modulo a group.

Two reductions are offered:

* ``conjugacy``: one map per orbit of ``a -> g⁻¹ a g`` (least image sequence).
* ``units``: one or more maps per orbit of ``a -> g a h`` with ``g, h`` in G.
  Since ``<gah, G> = <a, G>`` and multiplying by units preserves regularity,
  any property of the pair ``(a, <a, G>)`` is constant on these orbits, and the
  candidate list is far shorter.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator

from . import _kernels
from .core import Shape, Transformation, encode, decode, partitions_of_shape, shapes_of
from .permgroup import PermutationGroup, _orbits


def _shapes(n: int, ranks: Iterable[int] | None, shapes: Iterable[Shape] | None) -> list[Shape]:
    if shapes is not None:
        return list(shapes)
    rs = range(1, n + 1) if ranks is None else ranks
    return [s for r in rs for s in shapes_of(n, r)]


def _from_partition(n: int, blocks, images) -> tuple[int, ...]:
    out = [0] * n
    for b, y in zip(blocks, images):
        for x in b:
            out[x] = y
    return tuple(out)


def maps_with_shapes(n: int, shapes: Iterable[Shape]) -> Iterator[tuple[int, ...]]:
    """Image tuples of every map whose kernel has one of the given shapes (unsorted)."""
    for shape in shapes:
        r = len(shape.parts)
        for p in partitions_of_shape(shape):
            for images in permutations(range(n), r):
                yield _from_partition(n, p.blocks, images)


def sorted_codes(n: int, shapes: Iterable[Shape]) -> list[int]:
    return sorted(encode(t, n) for t in maps_with_shapes(n, shapes))


def conjugacy_representatives(g: PermutationGroup, ranks: Iterable[int] | None = None,
                              shapes: Iterable[Shape] | None = None) -> list[Transformation]:
    """Least map, in image order, of every G-conjugacy class with the given kernel shapes."""
    n = g.degree
    codes = sorted_codes(n, _shapes(n, ranks, shapes))
    reps = _kernels.conjugacy_reps(n, g.generator_bytes(), codes)
    return [Transformation(decode(c, n)) for c in reps]


def unit_orbit_representatives(g: PermutationGroup, ranks: Iterable[int] | None = None,
                               shapes: Iterable[Shape] | None = None) -> list[Transformation]:
    """Maps meeting every two-sided orbit ``{g a h}`` with the given kernel shapes.

    A kernel is chosen up to G, then the image tuple up to G; the result is a
    cover of the orbits (possibly with repeats of an orbit), sorted by image.
    """
    n = g.degree
    moves = [(lambda t, im=h.images: tuple(im[x] for x in t)) for h in g.generators]
    tuple_reps: dict[int, list[tuple[int, ...]]] = {}
    out = set()
    for shape in _shapes(n, ranks, shapes):
        r = len(shape.parts)
        if r not in tuple_reps:
            tuple_reps[r] = [o[0] for o in _orbits(permutations(range(n), r), moves)]
        _, kernels = g.orbits_on_shaped_partitions(shape)
        for p in kernels:
            for images in tuple_reps[r]:
                out.add(_from_partition(n, p.blocks, images))
    return [Transformation(t) for t in sorted(out)]


def representatives(g: PermutationGroup, reduction: str = "units", ranks=None, shapes=None) -> list[Transformation]:
    if reduction == "units":
        return unit_orbit_representatives(g, ranks, shapes)
    if reduction == "conjugacy":
        return conjugacy_representatives(g, ranks, shapes)
    raise ValueError(f"unknown reduction {reduction!r}")


def non_units(n: int) -> list[Transformation]:
    """T_n minus S_n in image order."""
    return [Transformation(decode(c, n)) for c in sorted_codes(n, _shapes(n, range(1, n), None))]
