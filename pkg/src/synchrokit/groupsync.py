"""Which maps a permutation group synchronizes, and whether it synchronizes all of them.

Non-synchronization of G is witnessed by a G-invariant graph, neither null nor
complete, with clique number equal to chromatic number. The G-invariant graphs
are exactly the unions of orbits of G on 2-subsets.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _kernels
from .core import Shape, Transformation, shapes_of
from .errors import ResourceLimitError
from .graph import DEFAULT_TIMEOUT, Graph, chromatic_number, clique_number
from .maps import representatives
from .permgroup import PermutationGroup, _bits

ORBIT_CAP = 20
RYSTSOV_DEGREE_CAP = 10
SCAN_DEGREE_CAP = 9


def synchronizes(g: PermutationGroup, a: Transformation) -> bool:
    """Whether <a, G> contains a constant map."""
    if a.is_permutation():
        raise ValueError(f"{a} is a permutation")
    n = g.degree
    flags = _kernels.collapsible(g.generator_bytes() + [a.to_bytes()], n)
    return all(flags[v * n + w] for v in range(n) for w in range(v + 1, n))


class InvariantGraphFamily:
    """All G-invariant graphs, as unions of orbits on 2-subsets."""

    def __init__(self, group: PermutationGroup):
        self.group = group
        self.pair_orbits = [[_bits(m) for m in o] for o in group._subset_orbit_masks(2)] if group.degree > 1 else []

    def __len__(self):
        return len(self.pair_orbits)

    def graph(self, mask: int) -> Graph:
        edges = [e for i, o in enumerate(self.pair_orbits) if mask >> i & 1 for e in o]
        return Graph(self.group.degree, edges)

    def proper_masks(self) -> range:
        return range(1, (1 << len(self.pair_orbits)) - 1)


def invariant_graphs(g: PermutationGroup) -> Iterator[Graph]:
    """Non-null, non-complete G-invariant graphs in increasing orbit-mask order."""
    fam = InvariantGraphFamily(g)
    if len(fam) > ORBIT_CAP:
        raise ResourceLimitError("orbits on pairs", len(fam), ORBIT_CAP)
    for mask in fam.proper_masks():
        yield fam.graph(mask)


@dataclass
class SyncGroupResult:
    synchronizing: bool
    witness: Graph | None = None
    omega: int | None = None
    chi: int | None = None

    def __bool__(self):
        return self.synchronizing

    def to_json(self) -> dict:
        return {"synchronizing": self.synchronizing,
                "witness": self.witness.to_json() if self.witness else None,
                "omega": self.omega, "chi": self.chi}


def is_synchronizing_group(g: PermutationGroup, timeout: float | None = DEFAULT_TIMEOUT) -> SyncGroupResult:
    for x in invariant_graphs(g):
        w = clique_number(x, timeout)
        c = chromatic_number(x, timeout)
        if w == c:
            return SyncGroupResult(False, x, w, c)
    return SyncGroupResult(True)


def block_system_graph(g: PermutationGroup) -> Graph | None:
    """The complete multipartite graph on a nontrivial block system, if one exists."""
    blocks = g.block_system()
    if blocks is None:
        return None
    return Graph.complete_multipartite(blocks)


# -- theorem scans ---------------------------------------------------------------

@dataclass
class ScanReport:
    group: str
    checked: int = 0
    failures: list[Transformation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"group": self.group, "checked": self.checked, "ok": self.ok,
                "failures": [[x + 1 for x in a.images] for a in self.failures]}


def _scan(g: PermutationGroup, maps: Iterable[Transformation], label: str) -> ScanReport:
    report = ScanReport(label)
    for a in maps:
        report.checked += 1
        if not synchronizes(g, a):
            report.failures.append(a)
    return report


@dataclass
class RystsovResult:
    primitive: bool
    synchronizes_all: bool
    checked: int
    unsynchronized: Transformation | None = None

    @property
    def agrees(self) -> bool:
        return self.primitive == self.synchronizes_all

    def __bool__(self):
        return self.agrees


def rystsov_check(g: PermutationGroup, reduction: str = "conjugacy") -> RystsovResult:
    """Compare primitivity with synchronizing every rank n-1 map."""
    n = g.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    if n > RYSTSOV_DEGREE_CAP:
        raise ResourceLimitError("rank n-1 scan degree", n, RYSTSOV_DEGREE_CAP)
    maps = representatives(g, reduction, ranks=[n - 1])
    first = None
    for a in maps:
        if not synchronizes(g, a):
            first = a
            break
    return RystsovResult(g.is_primitive(), first is None, len(maps), first)


def kernel_type_shapes(n: int) -> list[Shape]:
    """Shapes (k, 1, ..., 1) with 2 <= k <= n."""
    return [Shape((k,) + (1,) * (n - k)) for k in range(2, n + 1)]


def kernel_type_checks(g: PermutationGroup, reduction: str = "conjugacy") -> dict[str, ScanReport]:
    """Scan rank n-2 maps and maps of kernel type (k,1,...,1) for a primitive group."""
    n = g.degree
    if n > SCAN_DEGREE_CAP:
        raise ResourceLimitError("kernel type scan degree", n, SCAN_DEGREE_CAP)
    if not g.is_primitive():
        raise ValueError(f"{g.name or 'group'} is not primitive")
    label = g.name or f"degree {n}"
    out = {}
    if n >= 3:
        out["rank n-2"] = _scan(g, representatives(g, reduction, ranks=[n - 2]), label)
    out["kernel (k,1,...,1)"] = _scan(g, representatives(g, reduction, shapes=kernel_type_shapes(n)), label)
    return out


def non_uniform_shapes(n: int) -> list[Shape]:
    return [s for r in range(2, n) for s in shapes_of(n, r) if len(set(s.parts)) > 1]


def nonuniform_scan(g: PermutationGroup, reduction: str = "conjugacy") -> ScanReport:
    """Non-uniform maps (up to the reduction) that G fails to synchronize."""
    n = g.degree
    maps = representatives(g, reduction, shapes=non_uniform_shapes(n))
    return _scan(g, maps, g.name or f"degree {n}")


def nonuniform_conjecture_scan(degree_bound: int, groups: Iterable[PermutationGroup],
                               reduction: str = "conjugacy") -> tuple[list[ScanReport], list[tuple[str, Transformation]]]:
    """Scan every primitive group of degree <= bound; returns reports and counterexamples."""
    if degree_bound > SCAN_DEGREE_CAP:
        raise ResourceLimitError("conjecture scan degree", degree_bound, SCAN_DEGREE_CAP)
    reports = []
    counterexamples = []
    for g in groups:
        if g.degree > degree_bound or g.degree < 3 or not g.is_primitive():
            continue
        report = nonuniform_scan(g, reduction)
        reports.append(report)
        counterexamples += [(report.group, a) for a in report.failures]
    return reports, counterexamples


def random_map_with_shape(n: int, parts: tuple[int, ...], rng: random.Random) -> Transformation:
    """A uniformly random map whose kernel has the given class sizes."""
    points = list(range(n))
    rng.shuffle(points)
    images = rng.sample(range(n), len(parts))
    out = [0] * n
    i = 0
    for size, y in zip(parts, images):
        for x in points[i:i + size]:
            out[x] = y
        i += size
    return Transformation(tuple(out))


def rank_spectrum_probe(g: PermutationGroup, a: Transformation, size_cap: int | None = None) -> dict:
    """Ranks occurring among the non-units of <a, G>, for inspecting gaps above the minimum."""
    from .semigroup import DEFAULT_CAP, rank_spectrum
    spectrum = rank_spectrum(a, g, size_cap or DEFAULT_CAP)
    r = min(spectrum)
    return {"min_rank": r, "spectrum": spectrum, "has_min_plus_two": (r + 2) in spectrum}


def witness_report(g: PermutationGroup, a: Transformation | None = None,
                   graph: Graph | None = None, omega=None, chi=None) -> dict:
    return {
        "group": {"name": g.name, "degree": g.degree,
                  "generators": [[x + 1 for x in h.images] for h in g.generators]},
        "map": [x + 1 for x in a.images] if a is not None else None,
        "graph": graph.to_json() if graph is not None else None,
        "omega": omega,
        "chi": chi,
    }
