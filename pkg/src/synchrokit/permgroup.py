"""Permutation groups given by generators, and orbit-based deciders.

Nothing here computes group orders or stabiliser chains: every decider runs an
orbit BFS on the induced set (points, subsets, tuples or partitions), keyed by
a canonical form.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from math import comb, factorial
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .core import KSubset, Permutation, SetPartition, Shape, partitions_with_blocks, stirling2
from .errors import ResourceLimitError
from .graph import Graph

SUBSET_CAP = 10**7
PARTITION_CAP = 10**8


def _orbits(seeds: Iterable[Hashable], moves: Sequence[Callable]) -> list[list]:
    """Orbits of the monoid generated by ``moves``, found by BFS from each unvisited seed."""
    seen = set()
    out = []
    for s in seeds:
        if s in seen:
            continue
        seen.add(s)
        orbit = [s]
        i = 0
        while i < len(orbit):
            x = orbit[i]
            i += 1
            for move in moves:
                y = move(x)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        out.append(orbit)
    return out


def _mask_mover(images: Sequence[int]) -> Callable[[int], int]:
    n = len(images)
    tables = []
    for chunk in range(0, n, 8):
        t = [0] * 256
        for b in range(1, 256):
            p = chunk + (b & -b).bit_length() - 1
            t[b] = t[b & (b - 1)] | ((1 << images[p]) if p < n else 0)
        tables.append(t)

    def move(mask: int) -> int:
        out = 0
        i = 0
        while mask:
            out |= tables[i][mask & 0xFF]
            mask >>= 8
            i += 1
        return out

    return move


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass
class UTResult:
    """Outcome of a universal-transversal query.

    ``witness`` is ``(S, P)``: a k-set whose orbit holds no transversal of P.
    """

    holds: bool
    witness: tuple[KSubset, SetPartition] | None = None

    def __bool__(self):
        return self.holds


class PermutationGroup:
    def __init__(self, degree: int, generators: Iterable[Permutation], name: str | None = None,
                 order: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(tuple(g.images if hasattr(g, "images") else g))
                for g in generators]
        if not gens:
            gens = [Permutation.identity(degree)]
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.order = order
        self._memo: dict = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls, n: int) -> "PermutationGroup":
        return cls(n, [Permutation.identity(n)], name=f"1_{n}", order=1)

    @classmethod
    def symmetric(cls, n: int) -> "PermutationGroup":
        gens = [Permutation.from_cycles(n, [(0, 1)])] if n > 1 else []
        if n > 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        return cls(n, gens, name=f"S{n}", order=factorial(n))

    @classmethod
    def alternating(cls, n: int) -> "PermutationGroup":
        if n < 3:
            return cls.trivial(n)
        gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
        if n > 3:
            cyc = tuple(range(n)) if n % 2 else tuple(range(1, n))
            gens.append(Permutation.from_cycles(n, [cyc]))
        return cls(n, gens, name=f"A{n}", order=factorial(n) // 2)

    @classmethod
    def cyclic(cls, n: int) -> "PermutationGroup":
        return cls(n, [Permutation.from_cycles(n, [tuple(range(n))])], name=f"C{n}", order=n)

    @classmethod
    def dihedral(cls, n: int) -> "PermutationGroup":
        rot = Permutation.from_cycles(n, [tuple(range(n))])
        ref = Permutation(tuple((-x) % n for x in range(n)))
        return cls(n, [rot, ref], name=f"D{n}", order=2 * n if n > 2 else None)

    def direct_product(self, other: "PermutationGroup") -> "PermutationGroup":
        """Acting on the disjoint union, ``other`` shifted past this group's points."""
        n, m = self.degree, other.degree
        gens = [Permutation(g.images + tuple(range(n, n + m))) for g in self.generators]
        gens += [Permutation(tuple(range(n)) + tuple(x + n for x in g.images)) for g in other.generators]
        order = self.order * other.order if self.order and other.order else None
        name = f"{self.name}x{other.name}" if self.name and other.name else None
        return PermutationGroup(n + m, gens, name=name, order=order)

    # -- basics --------------------------------------------------------------

    def __repr__(self):
        label = self.name or "G"
        return f"<PermutationGroup {label} degree={self.degree} gens={[g.cycle_string() for g in self.generators]}>"

    def generator_bytes(self) -> list[bytes]:
        return [g.to_bytes() for g in self.generators]

    def is_trivial(self) -> bool:
        return all(g.images == tuple(range(self.degree)) for g in self.generators)

    def elements(self, cap: int = 100_000) -> list[Permutation]:
        """All group elements by BFS (only for small groups)."""
        key = ("elements", cap)
        if key not in self._memo:
            from . import _kernels
            ident = bytes(range(self.degree))
            els = _kernels.closure([ident], [], self.generator_bytes(), cap)
            if len(els) > cap:
                raise ResourceLimitError("group elements", len(els), cap)
            self._memo[key] = [Permutation(tuple(e)) for e in els]
        return self._memo[key]

    def point_orbits(self) -> list[list[int]]:
        if "points" not in self._memo:
            moves = [g.images.__getitem__ for g in self.generators]
            self._memo["points"] = [sorted(o) for o in _orbits(range(self.degree), moves)]
        return self._memo["points"]

    def is_transitive(self) -> bool:
        return len(self.point_orbits()) <= 1

    # -- subsets ------------------------------------------------------------

    def _subset_orbit_masks(self, k: int) -> list[list[int]]:
        n = self.degree
        if not 0 <= k <= n:
            raise ValueError(f"k={k} out of range for degree {n}")
        count = comb(n, k)
        if count > SUBSET_CAP:
            raise ResourceLimitError(f"{k}-subsets of {n} points", count, SUBSET_CAP)
        key = ("subsets", k)
        if key not in self._memo:
            moves = [_mask_mover(g.images) for g in self.generators]
            seeds = (sum(1 << x for x in c) for c in combinations(range(n), k))
            orbits = _orbits(seeds, moves)
            self._memo[key] = [sorted(o, key=_bits) for o in orbits]
        return self._memo[key]

    def orbits_on_ksubsets(self, k: int) -> list[list[KSubset]]:
        n = self.degree
        return [[KSubset(n, _bits(m)) for m in o] for o in self._subset_orbit_masks(k)]

    def is_k_homogeneous(self, k: int) -> bool:
        return len(self._subset_orbit_masks(k)) == 1

    def is_k_transitive(self, k: int) -> bool:
        n = self.degree
        if not 1 <= k <= n:
            raise ValueError(f"k={k} out of range for degree {n}")
        target = factorial(n) // factorial(n - k)
        if target > SUBSET_CAP:
            raise ResourceLimitError(f"{k}-tuples of {n} points", target, SUBSET_CAP)
        moves = [(lambda t, im=g.images: tuple(im[x] for x in t)) for g in self.generators]
        orbit = _orbits([tuple(range(k))], moves)[0]
        return len(orbit) == target

    def is_set_transitive(self) -> bool:
        return all(self.is_k_homogeneous(k) for k in range(1, self.degree // 2 + 1))

    # -- orbital graphs and primitivity --------------------------------------

    def orbital_graphs(self) -> list[Graph]:
        n = self.degree
        return [Graph(n, (_bits(m) for m in orbit)) for orbit in self._subset_orbit_masks(2)]

    def is_primitive(self) -> bool:
        """Transitive with every (undirected) orbital graph connected."""
        if "primitive" not in self._memo:
            n = self.degree
            if n <= 1:
                result = True
            elif not self.is_transitive():
                result = False
            else:
                result = all(x.is_connected() for x in self.orbital_graphs())
            self._memo["primitive"] = result
        return self._memo["primitive"]

    def minimal_block(self, x: int) -> list[list[int]]:
        """Finest G-invariant partition in which 0 and x share a block."""
        n = self.degree
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        pending = [(0, x)]
        while pending:
            a, b = pending.pop()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            parent[rb] = ra
            for g in self.generators:
                pending.append((g.images[a], g.images[b]))
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(find(v), []).append(v)
        return sorted(classes.values())

    def is_primitive_by_blocks(self) -> bool:
        """Independent check: no pair (0, x) generates a proper nontrivial block system."""
        n = self.degree
        if n <= 1:
            return True
        if not self.is_transitive():
            return False
        return all(len(self.minimal_block(x)) == 1 for x in range(1, n))

    def block_system(self) -> list[list[int]] | None:
        """A nontrivial block system of a transitive group, or None if there is none."""
        if not self.is_transitive():
            return None
        for x in range(1, self.degree):
            blocks = self.minimal_block(x)
            if len(blocks) > 1:
                return blocks
        return None

    # -- shaped partitions ---------------------------------------------------

    def orbits_on_shaped_partitions(self, shape: Shape, ordered: bool = False) -> tuple[int, list]:
        """Number of orbits and a representative of each.

        Unordered representatives are :class:`SetPartition`; ordered ones are
        tuples of blocks following the part order of ``shape``.
        """
        n = self.degree
        if shape.degree != n:
            raise ValueError(f"shape {shape.parts} does not have degree {n}")
        count = shape.ordered_count() if ordered else shape.count()
        if count > SUBSET_CAP:
            raise ResourceLimitError(f"partitions of shape {shape.parts}", count, SUBSET_CAP)
        key = ("shaped", shape.parts, ordered)
        if key not in self._memo:
            movers = [_mask_mover(g.images) for g in self.generators]
            if ordered:
                moves = [(lambda t, m=m: tuple(m(b) for b in t)) for m in movers]
                seeds = _ordered_partition_masks(n, shape.parts)
            else:
                moves = [(lambda t, m=m: tuple(sorted(m(b) for b in t))) for m in movers]
                seeds = (tuple(sorted(sum(1 << x for x in b) for b in p.blocks))
                         for p in _unordered(shape))
            reps = [o[0] for o in _orbits(seeds, moves)]
            if ordered:
                reps = [tuple(_bits(b) for b in r) for r in reps]
            else:
                reps = [SetPartition(n, tuple(_bits(b) for b in r)) for r in reps]
            self._memo[key] = reps
        reps = self._memo[key]
        return len(reps), reps

    def is_lambda_homogeneous(self, shape: Shape) -> bool:
        return self.orbits_on_shaped_partitions(shape, ordered=False)[0] == 1

    def is_lambda_transitive(self, shape: Shape) -> bool:
        return self.orbits_on_shaped_partitions(shape, ordered=True)[0] == 1

    # -- (k-1,k)-homogeneity and universal transversals ----------------------

    def is_k1k_homogeneous(self, k: int) -> bool:
        n = self.degree
        if not 1 <= k <= n:
            raise ValueError(f"k={k} out of range for degree {n}")
        total = comb(n, k)
        full = (1 << n) - 1
        for orbit in self._subset_orbit_masks(k - 1):
            covered = set()
            for a in orbit:
                rest = full & ~a
                while rest:
                    low = rest & -rest
                    covered.add(a | low)
                    rest ^= low
            if len(covered) < total:
                return False
        return True

    def _ut_scan(self, k: int, stop_early: bool) -> tuple[set[int], tuple[int, SetPartition] | None]:
        # returns indices of k-set orbits meeting every k-partition, and the first failure
        n = self.degree
        if not 1 <= k <= n:
            raise ValueError(f"k={k} out of range for degree {n}")
        count = stirling2(n, k)
        if count > PARTITION_CAP:
            raise ResourceLimitError(f"{k}-block partitions of {n} points", count, PARTITION_CAP)
        orbits = self._subset_orbit_masks(k)
        where = {m: i for i, o in enumerate(orbits) for m in o}
        alive = set(range(len(orbits)))
        first = None
        for p in partitions_with_blocks(n, k):
            hit = _transversal_orbits(p, where, len(alive) if stop_early else None)
            missed = alive - hit
            if missed:
                if first is None:
                    first = (min(missed), p)
                alive -= missed
                if stop_early or not alive:
                    break
        return alive, first

    def has_k_ut(self, k: int) -> UTResult:
        key = ("kut", k)
        if key not in self._memo:
            alive, first = self._ut_scan(k, stop_early=True)
            if first is None:
                self._memo[key] = UTResult(True)
            else:
                idx, p = first
                rep = KSubset(self.degree, _bits(self._subset_orbit_masks(k)[idx][0]))
                self._memo[key] = UTResult(False, (rep, p))
        return self._memo[key]

    def weak_k_ut_witnesses(self, k: int) -> list[KSubset]:
        """Representatives of the k-set orbits that contain a transversal of every k-partition."""
        alive, _ = self._ut_scan(k, stop_early=False)
        orbits = self._subset_orbit_masks(k)
        return [KSubset(self.degree, _bits(orbits[i][0])) for i in sorted(alive)]

    def has_weak_k_ut(self, k: int) -> bool:
        return bool(self.weak_k_ut_witnesses(k))

    # -- induced actions -----------------------------------------------------

    def induced_action_on_ksubsets(self, k: int) -> "PermutationGroup":
        """The action on k-subsets, indexed in lexicographic order of sorted subsets."""
        n = self.degree
        if not 1 <= k <= n:
            raise ValueError(f"k={k} out of range for degree {n}")
        if k == n and not self.is_trivial():
            raise ValueError("action on n-subsets is not faithful")
        count = comb(n, k)
        if count > SUBSET_CAP:
            raise ResourceLimitError(f"{k}-subsets of {n} points", count, SUBSET_CAP)
        subsets = list(combinations(range(n), k))
        index = {s: i for i, s in enumerate(subsets)}
        gens = []
        for g in self.generators:
            im = g.images
            gens.append(Permutation(tuple(index[tuple(sorted(im[x] for x in s))] for s in subsets)))
        name = f"{self.name}{{{k}}}" if self.name else None
        return PermutationGroup(count, gens, name=name, order=self.order)


def _unordered(shape: Shape) -> Iterator[SetPartition]:
    from .core import partitions_of_shape
    return partitions_of_shape(shape)


def _ordered_partition_masks(n: int, parts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    def rec(left: tuple[int, ...], i: int):
        if i == len(parts):
            yield ()
            return
        for block in combinations(left, parts[i]):
            rest = tuple(x for x in left if x not in block)
            m = sum(1 << x for x in block)
            for tail in rec(rest, i + 1):
                yield (m,) + tail
    return rec(tuple(range(n)), 0)


def _transversal_orbits(p: SetPartition, where: dict[int, int], enough: int | None) -> set[int]:
    hit: set[int] = set()
    masks = [0]
    for block in p.blocks:
        masks = [m | (1 << x) for m in masks for x in block]
    for m in masks:
        hit.add(where[m])
        if enough is not None and len(hit) >= enough:
            break
    return hit


# -- fixture catalog -----------------------------------------------------------

@lru_cache(maxsize=None)
def _catalog_data() -> dict:
    text = resources.files("synchrokit").joinpath("data/catalog.json").read_text()
    return json.loads(text)


def catalog(max_degree: int | None = None, min_degree: int = 1) -> list[PermutationGroup]:
    """Fixture groups, each with its stored order."""
    from .notation import parse_permutation
    out = []
    for entry in _catalog_data()["groups"]:
        n = entry["degree"]
        if n < min_degree or (max_degree is not None and n > max_degree):
            continue
        gens = [parse_permutation(s, n) for s in entry["generators"]]
        out.append(PermutationGroup(n, gens, name=entry["name"], order=entry["order"]))
    return out


def catalog_group(name: str) -> PermutationGroup:
    for g in catalog():
        if g.name == name:
            return g
    raise KeyError(f"no catalog group named {name!r}")
