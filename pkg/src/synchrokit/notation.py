"""1-based text notation for permutations and transformations.

Two forms are accepted: cycle notation ``(1 2 3)(4 5)`` and image notation
``[2,3,1,5,4]``. Everything inside the library is 0-based.
"""
from __future__ import annotations

import re

from .core import Permutation, Transformation

_CYCLE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str) -> list[list[int]]:
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(stripped):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            cycle = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
        if cycle:
            cycles.append(cycle)
    return cycles


def _parse_images(text: str) -> list[int]:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed image notation: {text!r}")
    tokens = [t for t in re.split(r"[\s,]+", body[1:-1].strip()) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"malformed image notation: {text!r}") from None


def parse_transformation(text: str, degree: int | None = None) -> Transformation:
    """Image notation only; a transformation need not be a bijection."""
    images = _parse_images(text)
    if degree is not None and len(images) != degree:
        raise ValueError(f"{text!r} has {len(images)} images, expected degree {degree}")
    if any(not 1 <= x <= len(images) for x in images):
        raise ValueError(f"point out of range in {text!r}")
    return Transformation(tuple(x - 1 for x in images))


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse a permutation in either notation.

    For cycle notation the degree defaults to the largest point mentioned.
    """
    if text.strip().startswith("["):
        t = parse_transformation(text, degree)
        return Permutation(t.images)
    cycles = _parse_cycles(text)
    points = [x for c in cycles for x in c]
    if any(x < 1 for x in points):
        raise ValueError(f"point out of range in {text!r}")
    largest = max(points, default=0)
    n = largest if degree is None else degree
    if largest > n:
        raise ValueError(f"point {largest} exceeds degree {n} in {text!r}")
    if len(set(points)) != len(points):
        raise ValueError(f"point repeated within one permutation: {text!r}")
    if n == 0:
        raise ValueError("cannot infer degree of the identity; give it explicitly")
    return Permutation.from_cycles(n, [[x - 1 for x in c] for c in cycles])


def format_images(a: Transformation) -> str:
    return str(a)


def format_cycles(g: Permutation) -> str:
    return g.cycle_string()
