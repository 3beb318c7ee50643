"""Automata as lettered transformation semigroups: collapsibility, reset words, Gr(S)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _kernels
from .core import Transformation
from .errors import NotSynchronizingError, ResourceLimitError
from .graph import DEFAULT_TIMEOUT, Graph, chromatic_number, clique_number, is_endomorphism
from .notation import parse_transformation

SUBSET_DEGREE_CAP = 24


@dataclass(frozen=True)
class Automaton:
    state_count: int
    letters: tuple[tuple[str, Transformation], ...]

    def __post_init__(self):
        letters = tuple((str(label), a) for label, a in self.letters)
        labels = [label for label, _ in letters]
        if len(set(labels)) != len(labels):
            raise ValueError(f"letter labels must be unique: {labels}")
        for label, a in letters:
            if a.degree != self.state_count:
                raise ValueError(f"letter {label!r} has degree {a.degree}, expected {self.state_count}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_maps(cls, maps: Sequence[Transformation], labels: Sequence[str] | None = None) -> "Automaton":
        if not maps:
            raise ValueError("an automaton needs at least one letter")
        if labels is None:
            labels = [chr(ord("a") + i) if i < 26 else f"x{i}" for i in range(len(maps))]
        return cls(maps[0].degree, tuple(zip(labels, maps)))

    @classmethod
    def cerny(cls, n: int) -> "Automaton":
        """Rotation ``a: x -> x+1`` and merge ``b: 0 -> 1`` (other states fixed)."""
        a = Transformation(tuple((x + 1) % n for x in range(n)))
        b = Transformation((1 % n,) + tuple(range(1, n)))
        return cls(n, (("a", a), ("b", b)))

    @classmethod
    def from_json(cls, data: dict) -> "Automaton":
        n = data["n"]
        letters = tuple((item["label"], parse_transformation("[" + ",".join(map(str, item["images"])) + "]", n))
                        for item in data["letters"])
        return cls(n, letters)

    def to_json(self) -> dict:
        return {"n": self.state_count,
                "letters": [{"label": label, "images": [x + 1 for x in a.images]} for label, a in self.letters]}

    def maps(self) -> list[Transformation]:
        return [a for _, a in self.letters]

    def letter_bytes(self) -> list[bytes]:
        return [a.to_bytes() for _, a in self.letters]

    def act(self, word: Iterable[str]) -> Transformation:
        table = dict(self.letters)
        out = Transformation.identity(self.state_count)
        for label in word:
            out = out * table[label]
        return out


def collapsible_pairs(a: Automaton) -> set[tuple[int, int]]:
    n = a.state_count
    flags = _kernels.collapsible(a.letter_bytes(), n)
    return {(v, w) for v in range(n) for w in range(v + 1, n) if flags[v * n + w]}


def is_synchronizing(a: Automaton) -> bool:
    n = a.state_count
    flags = _kernels.collapsible(a.letter_bytes(), n)
    return all(flags[v * n + w] for v in range(n) for w in range(v + 1, n))


def _check_subset_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ResourceLimitError("subset search degree", n, cap)


def shortest_reset_word(a: Automaton, degree_cap: int = SUBSET_DEGREE_CAP) -> list[str]:
    """A shortest word of rank 1; among those, least under letter order then lexicographically."""
    _check_subset_cap(a.state_count, degree_cap)
    word = _kernels.shortest_reset(a.letter_bytes(), a.state_count)
    if word is None:
        raise NotSynchronizingError("automaton is not synchronizing")
    labels = [label for label, _ in a.letters]
    return [labels[i] for i in word]


def format_word(word: Sequence[str]) -> str:
    if all(len(x) == 1 for x in word):
        return "".join(word)
    return " ".join(word)


def min_rank(a: Automaton, degree_cap: int = SUBSET_DEGREE_CAP) -> int:
    _check_subset_cap(a.state_count, degree_cap)
    return _kernels.min_image_size(a.letter_bytes(), a.state_count)


def graph_of_semigroup(a: Automaton) -> Graph:
    """Gr(S): v ~ w iff no element of S sends v and w to the same state."""
    n = a.state_count
    flags = _kernels.collapsible(a.letter_bytes(), n)
    return Graph(n, ((v, w) for v in range(n) for w in range(v + 1, n) if not flags[v * n + w]))


@dataclass
class ObstructionReport:
    synchronizing: bool
    graph: Graph
    graph_null: bool
    omega: int | None = None
    chi: int | None = None
    min_rank: int | None = None
    letters_are_endomorphisms: bool | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"synchronizing": self.synchronizing, "graph": self.graph.to_json(), "omega": self.omega,
                "chi": self.chi, "min_rank": self.min_rank,
                "letters_are_endomorphisms": self.letters_are_endomorphisms, "checks": self.checks, "ok": self.ok}


def check_obstruction(a: Automaton, timeout: float | None = DEFAULT_TIMEOUT) -> ObstructionReport:
    """Verify the graph obstruction to synchronization on one automaton."""
    sync = is_synchronizing(a)
    x = graph_of_semigroup(a)
    report = ObstructionReport(synchronizing=sync, graph=x, graph_null=x.is_null())
    if sync:
        report.checks["graph_null"] = x.is_null()
        return report
    report.omega = clique_number(x, timeout)
    report.chi = chromatic_number(x, timeout)
    report.min_rank = min_rank(a)
    report.letters_are_endomorphisms = all(is_endomorphism(x, m) for m in a.maps())
    report.checks.update(
        graph_non_null=not x.is_null(),
        omega_equals_chi=report.omega == report.chi,
        letters_are_endomorphisms=report.letters_are_endomorphisms,
        omega_equals_min_rank=report.omega == report.min_rank,
    )
    return report


def load_automaton(path: str) -> Automaton:
    with open(path) as fh:
        return Automaton.from_json(json.load(fh))
