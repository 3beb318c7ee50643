"""Small multiplicative subgroups of GF(p)*.

For primes p = 11 (mod 12) we look for c with <-1, c, c-1> a proper subgroup.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from sympy import isprime, primerange


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def multiplicative_subgroup_order(p: int, gens) -> int:
    """Order of the subgroup of GF(p)* generated by ``gens``, by closure."""
    _require_prime(p)
    return _closure_order(p, gens)


def _closure_order(p: int, gens) -> int:
    gs = [g % p for g in gens]
    if any(g == 0 for g in gs):
        raise ValueError("generators must be nonzero mod p")
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gs:
                y = x * g % p
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        # a subgroup bigger than half of GF(p)* is all of it
        if 2 * len(seen) > p - 1:
            return p - 1
    return len(seen)


@dataclass
class PrimeSearchResult:
    prime: int
    witnesses: list[int] = field(default_factory=list)
    subgroup_order: list[int] = field(default_factory=list)

    @property
    def least_witness(self) -> int:
        return self.witnesses[0]

    def to_json(self) -> dict:
        return {"p": self.prime, "c": self.witnesses[0], "order": self.subgroup_order[0]}


def witnesses(p: int, first_only: bool = True) -> PrimeSearchResult:
    """Every c in 2..p-1 with |<-1, c, c-1>| < p-1 (or just the least one)."""
    _require_prime(p)
    res = PrimeSearchResult(p)
    for c in range(2, p):
        order = _closure_order(p, (p - 1, c, c - 1))
        if order < p - 1:
            res.witnesses.append(c)
            res.subgroup_order.append(order)
            if first_only:
                break
    return res


def special_primes(limit: int) -> list[PrimeSearchResult]:
    if limit < 11:
        raise ValueError("limit must be at least 11")
    out = []
    for p in primerange(11, limit + 1):
        if p % 12 != 11:
            continue
        res = witnesses(p)
        if res.witnesses:
            out.append(res)
    return out
