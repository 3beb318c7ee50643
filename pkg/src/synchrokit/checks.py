"""Desk-scale verification runs for the known theorems.

Each check returns a :class:`CheckResult`; ``passed`` is false as soon as one
instance disagrees, and the first disagreement is kept as ``counterexample``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

from .core import Permutation, Transformation
from .graph import DEFAULT_TIMEOUT, chromatic_number, clique_number, is_endomorphism
from .groupsync import rystsov_check
from .maps import conjugacy_representatives, non_units
from .permgroup import PermutationGroup, _orbits, catalog
from .semigroup import (conjugate_closure_semigroup, generated_semigroup, ideal_without_units, is_idempotent_generated,
                        is_inverse, is_orthodox, is_regular_element, is_regular_in_generated, is_regular_semigroup,
                        mcalister_prediction, rank_n_minus_1_idempotent)
from .sync import Automaton, graph_of_semigroup, is_synchronizing, min_rank


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def fail(self, **witness) -> None:
        if self.passed:
            self.counterexample = witness
        self.passed = False

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample, "details": self.details}


def _img(a) -> list[int]:
    return [x + 1 for x in a.images]


def _gens(g: PermutationGroup) -> list[list[int]]:
    return [_img(h) for h in g.generators]


def _ts(a: Transformation | None):
    return None if a is None else _img(a)


# -- semigroups generated by conjugates ----------------------------------------

def _sym_maps(n: int, exhaustive: bool) -> list[Transformation]:
    if exhaustive:
        return non_units(n)
    return conjugacy_representatives(PermutationGroup.symmetric(n), ranks=range(1, n))


def levi_mcfadden(degree: int, exhaustive_upto: int = 4, with_alternating: bool = True) -> CheckResult:
    """Conjugate closures under S_n: regular, idempotent-generated, equal to <a, S_n> minus S_n."""
    res = CheckResult("levi-mcfadden")
    sn = PermutationGroup.symmetric(degree)
    an = PermutationGroup.alternating(degree)
    maps = _sym_maps(degree, degree <= exhaustive_upto)
    res.details["exhaustive"] = degree <= exhaustive_upto
    for a in maps:
        res.checked += 1
        s = conjugate_closure_semigroup(a, sn)
        facts = {
            "regular": is_regular_semigroup(s),
            "idempotent_generated": is_idempotent_generated(s),
            "equals_ideal": s.elements == ideal_without_units(a, sn),
        }
        if with_alternating and degree >= 3:
            facts["equals_alternating_closure"] = conjugate_closure_semigroup(a, an).elements == s.elements
        if not all(facts.values()):
            res.fail(map=_img(a), facts=facts)
    return res


def sn_an_conjugates(degree: int, exhaustive_upto: int = 4) -> CheckResult:
    """The S_n and A_n conjugate closures coincide (needs n >= 3; A_2 is trivial)."""
    res = CheckResult("sn-an-conjugates")
    if degree < 3:
        raise ValueError("the alternating group is trivial below degree 3")
    sn = PermutationGroup.symmetric(degree)
    an = PermutationGroup.alternating(degree)
    for a in _sym_maps(degree, degree <= exhaustive_upto):
        res.checked += 1
        if conjugate_closure_semigroup(a, sn).elements != conjugate_closure_semigroup(a, an).elements:
            res.fail(map=_img(a))
    return res


# -- primitivity ------------------------------------------------------------------

def _random_blocks(n: int, m: int, rng: random.Random) -> list[list[int]]:
    """A random partition of range(n) into m equal blocks."""
    order = list(_random_perm(n, rng))
    size = n // m
    return [order[i * size:(i + 1) * size] for i in range(m)]


def _block_permutation(blocks: list[list[int]], rng: random.Random) -> tuple[int, ...]:
    out = [0] * sum(len(b) for b in blocks)
    target = _random_perm(len(blocks), rng)
    for i, b in enumerate(blocks):
        dest = blocks[target[i]][:]
        rng.shuffle(dest)
        for x, y in zip(b, dest):
            out[x] = y
    return tuple(out)


def random_group(n: int, rng: random.Random, max_gens: int = 3) -> PermutationGroup:
    """Random generators, sometimes constrained to preserve blocks or a subset."""
    kind = rng.choice(["free", "blocks", "split"])
    divisors = [m for m in range(2, n) if n % m == 0]
    blocks = _random_blocks(n, rng.choice(divisors), rng) if kind == "blocks" and divisors else None
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        if blocks:
            gens.append(Permutation(_block_permutation(blocks, rng)))
        elif kind == "split":
            cut = rng.randint(1, n - 1)
            left, right = list(_random_perm(cut, rng)), [cut + x for x in _random_perm(n - cut, rng)]
            gens.append(Permutation(tuple(left + right)))
        else:
            gens.append(Permutation(_random_perm(n, rng)))
    return PermutationGroup(n, gens)


def higman(degree: int, samples: int = 0, seed: int = 0, min_degree: int = 2) -> CheckResult:
    """Orbital graphs connected == no nontrivial blocks == 2-ut, on the catalog and random groups."""
    res = CheckResult("higman")
    rng = random.Random(seed)
    groups = [g for g in catalog(degree, min_degree)]
    groups += [random_group(rng.randint(max(min_degree, 4), max(degree, 4)), rng) for _ in range(samples)]
    for g in groups:
        res.checked += 1
        higman_side = g.is_primitive()
        blocks_side = g.is_primitive_by_blocks()
        ut_side = bool(g.has_k_ut(2)) if g.degree >= 4 else higman_side
        if not higman_side == blocks_side == ut_side:
            res.fail(group=g.name, generators=_gens(g), orbital=higman_side, blocks=blocks_side, ut2=ut_side)
    return res


def nut_transitive(degree: int, min_degree: int = 4) -> CheckResult:
    """(n-1)-ut holds exactly for the transitive groups."""
    res = CheckResult("nut-transitive")
    groups = catalog(degree, min_degree)
    groups += [g.direct_product(h) for g in catalog(degree - 1, 2) for h in (PermutationGroup.trivial(1),)]
    for g in groups:
        if not min_degree <= g.degree <= degree:
            continue
        res.checked += 1
        if bool(g.has_k_ut(g.degree - 1)) != g.is_transitive():
            res.fail(group=g.name, generators=_gens(g))
    return res


# -- k-ut and regularity ------------------------------------------------------------

def kut_regularity(degree: int, groups: list[PermutationGroup] | None = None, all_conditions: bool = False) -> CheckResult:
    """k-ut against 'every rank k map a is regular in <a, G>' for k <= n/2.

    With ``all_conditions`` the other three equivalent regularity conditions
    are tested as well.
    """
    res = CheckResult("kut-regularity")
    groups = catalog(degree, 2) if groups is None else groups
    for g in groups:
        n = g.degree
        for k in range(1, n // 2 + 1):
            res.checked += 1
            ut = bool(g.has_k_ut(k))
            key = "with_ut" if ut else "without_ut"
            res.details[key] = res.details.get(key, 0) + 1
            maps = conjugacy_representatives(g, ranks=[k])
            bad = next((a for a in maps if not is_regular_in_generated(a, g)), None)
            sides = {"a_regular_in_generated": bad is None}
            if all_conditions:
                sides["generated_regular"] = all(is_regular_semigroup(generated_semigroup(a, g)) for a in maps)
                closures = [(a, conjugate_closure_semigroup(a, g)) for a in maps]
                sides["a_regular_in_closure"] = all(is_regular_element(a, s) for a, s in closures)
                sides["closure_regular"] = all(is_regular_semigroup(s) for _, s in closures)
            if any(v != ut for v in sides.values()):
                res.fail(group=g.name, generators=_gens(g), k=k, ut=ut, sides=sides, irregular=_ts(bad))
    return res


# -- automata and Gr(S) ----------------------------------------------------------------

def _random_perm(n: int, rng: random.Random) -> tuple[int, ...]:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def _block_preserving_map(blocks: list[list[int]], rng: random.Random) -> tuple[int, ...]:
    """A map sending each block into a distinct block (an endomorphism of the multipartite graph)."""
    n = sum(len(b) for b in blocks)
    target = _random_perm(len(blocks), rng)
    out = [0] * n
    for i, b in enumerate(blocks):
        for x in b:
            out[x] = rng.choice(blocks[target[i]])
    return tuple(out)


def random_automaton(rng: random.Random, max_degree: int = 7) -> tuple[str, Automaton]:
    """A seeded automaton from one of three families, so every Gr outcome occurs."""
    n = rng.randint(2, max_degree)
    letters = rng.randint(1, 3)
    kind = rng.choice(["random", "permutations", "block-preserving"])
    if kind == "permutations":
        maps = [_random_perm(n, rng) for _ in range(letters)]
    elif kind == "block-preserving":
        order = _random_perm(n, rng)
        m = rng.randint(2, max(2, n - 1))
        cuts = sorted(rng.sample(range(1, n), m - 1))
        blocks = [list(order[i:j]) for i, j in zip([0] + cuts, cuts + [n])]
        maps = [_block_preserving_map(blocks, rng) for _ in range(letters)]
    else:
        maps = [_random_perm(n, rng) if rng.random() < 0.4 else tuple(rng.randrange(n) for _ in range(n))
                for _ in range(letters)]
    return kind, Automaton.from_maps([Transformation(m) for m in maps])


def gr_properties(samples: int = 100, degree: int = 7, seed: int = 0,
                  timeout: float | None = DEFAULT_TIMEOUT) -> CheckResult:
    res = CheckResult("gr-properties")
    rng = random.Random(seed)
    kinds: dict[str, int] = {}
    outcomes = {"complete": 0, "null": 0, "other": 0}
    for _ in range(samples):
        kind, auto = random_automaton(rng, degree)
        kinds[kind] = kinds.get(kind, 0) + 1
        x = graph_of_semigroup(auto)
        outcomes["complete" if x.is_complete() else "null" if x.is_null() else "other"] += 1
        facts = {
            "complete_iff_permutations": x.is_complete() == all(a.is_permutation() for a in auto.maps()),
            "null_iff_synchronizing": x.is_null() == is_synchronizing(auto),
            "letters_are_endomorphisms": all(is_endomorphism(x, a) for a in auto.maps()),
        }
        w, c, r = clique_number(x, timeout), chromatic_number(x, timeout), min_rank(auto)
        facts["omega_chi_min_rank"] = w == c == r
        res.checked += 1
        if not all(facts.values()):
            res.fail(automaton=auto.to_json(), facts=facts, omega=w, chi=c, min_rank=r)
    res.details.update(families=dict(sorted(kinds.items())), graphs=outcomes)
    return res


# -- group synchronization -----------------------------------------------------------

def rystsov(degree: int, reduction: str = "conjugacy") -> CheckResult:
    res = CheckResult("rystsov")
    for g in catalog(degree, 2):
        if not g.is_transitive():
            continue
        res.checked += 1
        r = rystsov_check(g, reduction)
        if not r.agrees:
            res.fail(group=g.name, generators=_gens(g), primitive=r.primitive, unsynchronized=_ts(r.unsynchronized))
    return res


# -- McAlister's idempotents ------------------------------------------------------------

def mcalister_groups(degree: int) -> list[PermutationGroup]:
    """Catalog groups plus intransitive products of smaller ones, all of degree <= bound."""
    smalls = [PermutationGroup.trivial(1), PermutationGroup.trivial(2), PermutationGroup.cyclic(2),
              PermutationGroup.cyclic(3)]
    out = [g for g in catalog(degree, 2)]
    for g in catalog(degree - 1, 2) + [PermutationGroup.trivial(1), PermutationGroup.trivial(2)]:
        for h in smalls:
            if g.degree + h.degree <= degree:
                out.append(g.direct_product(h))
    return out


def mcalister(degree: int) -> CheckResult:
    """<e, G> for rank n-1 idempotents e: always regular; orthodox and inverse as predicted."""
    res = CheckResult("mcalister")
    for g in mcalister_groups(degree):
        # conjugating e by G conjugates <e, G>, so one ordered pair per orbit is enough
        moves = [(lambda t, im=h.images: (im[t[0]], im[t[1]])) for h in g.generators]
        for orbit in _orbits(itertools.permutations(range(g.degree), 2), moves):
            alpha, beta = orbit[0]
            e = rank_n_minus_1_idempotent(g.degree, alpha, beta)
            s = generated_semigroup(e, g)
            pred = mcalister_prediction(g, alpha, beta)
            seen = {"regular": is_regular_semigroup(s), "orthodox": is_orthodox(s), "inverse": is_inverse(s)}
            res.checked += 1
            if not seen["regular"] or (pred["orthodox_if"] and not seen["orthodox"]) or seen["inverse"] != pred["inverse"]:
                res.fail(group=g.name, generators=_gens(g), alpha=alpha + 1, beta=beta + 1, predicted=pred, seen=seen)
    return res


THEOREMS: dict[str, Callable[..., CheckResult]] = {
    "gr-properties": gr_properties,
    "higman": higman,
    "kut-regularity": kut_regularity,
    "levi-mcfadden": levi_mcfadden,
    "mcalister": mcalister,
    "nut-transitive": nut_transitive,
    "rystsov": rystsov,
    "sn-an-conjugates": sn_an_conjugates,
}
