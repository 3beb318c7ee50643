"""Points, transformations, permutations, subsets, set partitions and shapes.

Points are ``0..n-1`` and maps act on the right: ``x·(ab) = (x·a)·b``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, eq=False)
class Transformation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        n = len(images)
        if n == 0:
            raise ValueError("degree must be positive")
        for x in images:
            if not 0 <= x < n:
                raise ValueError(f"image {x} out of range for degree {n}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "Transformation":
        return cls((value,) * n)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Transformation":
        return cls(tuple(data))

    def to_bytes(self) -> bytes:
        return bytes(self.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def rank(self) -> int:
        return len(set(self.images))

    def image_set(self) -> frozenset[int]:
        return frozenset(self.images)

    def is_permutation(self) -> bool:
        return self.rank == self.degree

    def __call__(self, x: int) -> int:
        return self.images[x]

    # Permutations and transformations with equal images are the same map.
    def __eq__(self, other):
        if isinstance(other, Transformation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Transformation"):
        return self.images < other.images

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def __str__(self):
        return "[" + ",".join(str(x + 1) for x in self.images) + "]"


class Permutation(Transformation):
    """A bijective transformation."""

    def __post_init__(self):
        super().__post_init__()
        if len(set(self.images)) != len(self.images):
            raise ValueError(f"not a bijection: {list(self.images)}")

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for i, x in enumerate(cycle):
                if x in seen:
                    raise ValueError(f"point {x} repeated in cycle notation")
                seen.add(x)
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        """1-based cycle notation, ``()`` for the identity."""
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cs)


def _check_degrees(a: Transformation, b: Transformation) -> None:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: Transformation, b: Transformation) -> Transformation:
    """The product ``ab``: first ``a``, then ``b``."""
    _check_degrees(a, b)
    bi = b.images
    images = tuple(bi[x] for x in a.images)
    if isinstance(a, Permutation) and isinstance(b, Permutation):
        return Permutation(images)
    return Transformation(images)


def conjugate(a: Transformation, g: Permutation) -> Transformation:
    """``g⁻¹ a g``; maps the kernel of ``a`` through ``g``."""
    _check_degrees(a, g)
    gi = g.inverse().images
    ai, gg = a.images, g.images
    images = tuple(gg[ai[gi[x]]] for x in range(a.degree))
    return Permutation(images) if isinstance(a, Permutation) else Transformation(images)


def rank(a: Transformation) -> int:
    return a.rank


@dataclass(frozen=True)
class SetPartition:
    degree: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else -1))
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        flat = [x for b in blocks for x in b]
        if sorted(flat) != list(range(self.degree)):
            raise ValueError("blocks must be disjoint and cover 0..n-1")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self):
        return len(self.blocks)

    def shape(self) -> "Shape":
        return Shape(tuple(sorted((len(b) for b in self.blocks), reverse=True)))

    def map(self, g: Transformation) -> "SetPartition":
        """Image of the partition under a permutation."""
        return SetPartition(self.degree, tuple(tuple(g.images[x] for x in b) for b in self.blocks))

    def block_of(self) -> list[int]:
        """Block index of each point."""
        out = [0] * self.degree
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x] = i
        return out

    def __str__(self):
        return "|".join("".join(str(x) for x in b) if self.degree <= 10 else ",".join(map(str, b)) for b in self.blocks)


@dataclass(frozen=True)
class Shape:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError("shape parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("shape parts must be non-increasing")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def count(self) -> int:
        """Number of unordered set partitions of this shape."""
        mult = Counter(self.parts)
        return factorial(self.degree) // (prod(factorial(p) for p in self.parts) * prod(factorial(m) for m in mult.values()))

    def ordered_count(self) -> int:
        return factorial(self.degree) // prod(factorial(p) for p in self.parts)

    def all_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)


@dataclass(frozen=True, order=True)
class KSubset:
    degree: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(self.members))
        if len(set(members)) != len(members) or any(not 0 <= x < self.degree for x in members):
            raise ValueError(f"invalid subset {members} of degree {self.degree}")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def mask(self) -> int:
        return sum(1 << x for x in self.members)

    @classmethod
    def from_mask(cls, degree: int, mask: int) -> "KSubset":
        return cls(degree, tuple(i for i in range(degree) if mask >> i & 1))


def kernel_partition(a: Transformation) -> SetPartition:
    classes: dict[int, list[int]] = {}
    for x, y in enumerate(a.images):
        classes.setdefault(y, []).append(x)
    return SetPartition(a.degree, tuple(tuple(c) for c in classes.values()))


def kernel_shape(a: Transformation) -> Shape:
    return Shape(tuple(sorted(Counter(a.images).values(), reverse=True)))


def is_uniform(a: Transformation) -> bool:
    return len(set(Counter(a.images).values())) == 1


def is_transversal(s: KSubset, p: SetPartition) -> bool:
    if s.degree != p.degree:
        raise ValueError("degree mismatch")
    if len(s) != len(p):
        return False
    where = p.block_of()
    return len({where[x] for x in s.members}) == len(p)


def _partition_stream(points: tuple[int, ...], sizes: Counter | None, blocks_left: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    # Recursive generation: the block holding the least remaining point is chosen
    # first, candidates sorted so the block tuples come out lexicographically.
    if not points:
        if blocks_left == 0:
            yield ()
        return
    if blocks_left == 0:
        return
    head, rest = points[0], points[1:]
    if sizes is not None:
        options = [s for s in sizes if sizes[s] > 0]
    else:
        options = list(range(1, len(points) - blocks_left + 2))
    candidates = []
    for s in options:
        for others in combinations(rest, s - 1):
            candidates.append(((head,) + others, s))
    candidates.sort()
    for block, s in candidates:
        remaining = tuple(x for x in rest if x not in block)
        if sizes is not None:
            sizes[s] -= 1
        for tail in _partition_stream(remaining, sizes, blocks_left - 1):
            yield (block,) + tail
        if sizes is not None:
            sizes[s] += 1


def partitions_of_shape(shape: Shape, degree: int | None = None) -> Iterator[SetPartition]:
    """Every set partition of the given shape, once each, in lexicographic block order."""
    n = shape.degree if degree is None else degree
    if shape.degree != n:
        raise ValueError(f"shape {shape.parts} does not have degree {n}")
    for blocks in _partition_stream(tuple(range(n)), Counter(shape.parts), len(shape.parts)):
        yield SetPartition(n, blocks)


def partitions_with_blocks(n: int, k: int) -> Iterator[SetPartition]:
    """Every partition of ``0..n-1`` into exactly ``k`` blocks, same order as above."""
    if not 1 <= k <= n:
        return
    for blocks in _partition_stream(tuple(range(n)), None, k):
        yield SetPartition(n, blocks)


def stirling2(n: int, k: int) -> int:
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k] if n else int(k == 0)


def shapes_of(n: int, parts: int | None = None) -> Iterator[Shape]:
    """Integer partitions of n as shapes, optionally with a fixed number of parts."""
    def rec(rem, largest, acc):
        if rem == 0:
            if parts is None or len(acc) == parts:
                yield Shape(tuple(acc))
            return
        if parts is not None and len(acc) >= parts:
            return
        for p in range(min(rem, largest), 0, -1):
            yield from rec(rem - p, p, acc + [p])
    yield from rec(n, n, [])


def transformations(n: int) -> Iterator[Transformation]:
    """All of T_n in lexicographic image order."""
    from itertools import product
    for images in product(range(n), repeat=n):
        yield Transformation(images)


def encode(images: Sequence[int], n: int) -> int:
    code = 0
    for x in images:
        code = code * n + x
    return code


def decode(code: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        code, out[i] = divmod(code, n)
    return tuple(out)
