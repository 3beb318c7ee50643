"""Command-line front end.

Exit status: 0 when every requested check passes, 1 on a mathematical failure,
2 when a cap or timeout stops the computation, 3 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import checks, groupsync, numbertheory
from .core import Shape
from .errors import ResourceLimitError, SolverTimeout
from .graph import DEFAULT_TIMEOUT
from .notation import parse_permutation, parse_transformation
from .permgroup import PermutationGroup, catalog, catalog_group
from .semigroup import (DEFAULT_CAP, conjugate_closure_semigroup, ideal_without_units, is_generated_regular,
                        is_idempotent_generated, is_normalising_pair, is_regular_in_generated, is_regular_semigroup)
from .sync import Automaton, check_obstruction, format_word, load_automaton, min_rank, shortest_reset_word

EXIT_OK, EXIT_FAIL, EXIT_LIMIT, EXIT_INPUT = 0, 1, 2, 3
SCHEMA = 1


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# -- input parsing ----------------------------------------------------------------

def _largest_point(text: str) -> int:
    import re
    return max((int(t) for t in re.findall(r"\d+", text)), default=0)


def parse_group(text: str, degree: int | None = None, name: str | None = None) -> PermutationGroup:
    """A group from a JSON file path, a catalog name, or ';'-separated generators."""
    if os.path.isfile(text):
        with open(text) as fh:
            data = json.load(fh)
        if data.get("schema", SCHEMA) != SCHEMA:
            raise InputError(f"unsupported schema {data.get('schema')!r}")
        file_degree = data.get("degree")
        if degree is not None and file_degree is not None and degree != file_degree:
            raise InputError(f"degree conflict: file says {file_degree}, option says {degree}")
        return _group_from_generators(data["generators"], file_degree or degree, data.get("name") or name)
    try:
        g = catalog_group(text)
    except KeyError:
        pass
    else:
        if degree is not None and degree != g.degree:
            raise InputError(f"degree conflict: {text} has degree {g.degree}")
        return g
    gens = [s for s in (part.strip() for part in text.split(";")) if s]
    if not gens:
        raise InputError(f"no generators in {text!r}")
    return _group_from_generators(gens, degree, name)


def _group_from_generators(gens: Sequence[str], degree: int | None, name: str | None) -> PermutationGroup:
    if degree is None:
        sizes = {len(parse_transformation(s).images) for s in gens if s.strip().startswith("[")}
        if len(sizes) > 1:
            raise InputError(f"generators have different degrees: {sorted(sizes)}")
        degree = sizes.pop() if sizes else max(_largest_point(s) for s in gens)
    try:
        perms = [parse_permutation(s, degree) for s in gens]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return PermutationGroup(degree, perms, name=name)


def _group_json(g: PermutationGroup) -> dict:
    return {"name": g.name, "degree": g.degree, "generators": [str(h) for h in g.generators]}


def _parse_shape(text: str) -> Shape:
    try:
        return Shape(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
    except ValueError as exc:
        raise InputError(f"bad shape {text!r}: {exc}") from None


def _parse_map(text: str, degree: int | None):
    try:
        return parse_transformation(text, degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- output ---------------------------------------------------------------------------

def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _yes(flag) -> str:
    return "yes" if flag else "no"


def _img(a) -> list[int]:
    return [x + 1 for x in a.images]


# -- commands -------------------------------------------------------------------------------

def cmd_group_report(args) -> int:
    g = parse_group(args.group, args.degree)
    n = g.degree
    order = g.order
    if order is None:
        try:
            order = len(g.elements(args.cap))
        except ResourceLimitError:
            order = None
    homogeneous = [k for k in range(1, n // 2 + 1) if g.is_k_homogeneous(k)]
    ut = {k: bool(g.has_k_ut(k)) for k in range(1, n // 2 + 1)} if n >= 2 else {}
    blocks = g.block_system()
    report = {
        "group": _group_json(g),
        "order": order,
        "transitive": g.is_transitive(),
        "primitive": g.is_primitive(),
        "block_system": [[x + 1 for x in b] for b in blocks] if blocks else None,
        "orbits_on_pairs": len(g.orbits_on_ksubsets(2)) if n >= 2 else 0,
        "homogeneous_k": homogeneous,
        "ut_k": {str(k): v for k, v in ut.items()},
    }
    lines = [
        f"group        {g.name or '-'} (degree {n}, order {order if order is not None else '?'})",
        f"transitive   {_yes(report['transitive'])}",
        f"primitive    {_yes(report['primitive'])}",
        f"blocks       {report['block_system'] or '-'}",
        f"pair orbits  {report['orbits_on_pairs']}",
        f"k-homogeneous for k in {homogeneous}",
        f"k-ut for k in {[k for k, v in ut.items() if v]}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_kut(args) -> int:
    g = parse_group(args.group, args.degree)
    ks = [args.k] if args.k else list(range(1, g.degree))
    rows = []
    lines = []
    for k in ks:
        r = g.has_k_ut(k)
        weak = g.weak_k_ut_witnesses(k)
        row = {"k": k, "ut": r.holds, "weak_ut": bool(weak),
               "universal_sets": [[x + 1 for x in s.members] for s in weak]}
        if r.witness is not None:
            subset, part = r.witness
            row["missed_orbit"] = [x + 1 for x in subset.members]
            row["partition"] = [[x + 1 for x in b] for b in part.blocks]
        rows.append(row)
        line = f"k={k}: ut {_yes(r.holds)}, weak ut {_yes(weak)}"
        if r.witness is not None:
            line += f"; orbit of {row['missed_orbit']} has no section of {row['partition']}"
        lines.append(line)
    _emit(args, {"group": _group_json(g), "results": rows}, lines)
    return EXIT_OK


def cmd_lambda(args) -> int:
    g = parse_group(args.group, args.degree)
    shape = _parse_shape(args.shape)
    if shape.degree != g.degree:
        raise InputError(f"shape {shape.parts} does not partition {g.degree} points")
    unordered, _ = g.orbits_on_shaped_partitions(shape)
    ordered, _ = g.orbits_on_shaped_partitions(shape, ordered=True)
    report = {"group": _group_json(g), "shape": list(shape.parts), "orbits": unordered, "ordered_orbits": ordered,
              "homogeneous": unordered == 1, "transitive": ordered == 1}
    lines = [f"shape {list(shape.parts)}: {unordered} orbit(s) on partitions, {ordered} on ordered partitions",
             f"homogeneous {_yes(unordered == 1)}, transitive {_yes(ordered == 1)}"]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    a = _parse_map(args.map, None)
    g = parse_group(args.group, a.degree) if args.group else PermutationGroup.trivial(a.degree)
    if g.degree != a.degree:
        raise InputError("map and group have different degrees")
    if a.is_permutation():
        raise InputError(f"{a} is a permutation")
    ideal = ideal_without_units(a, g, args.cap)
    closure = conjugate_closure_semigroup(a, g, args.cap)
    report = {
        "group": _group_json(g),
        "map": _img(a),
        "non_units": len(ideal),
        "rank_spectrum": {str(r): c for r, c in ideal.ranks().items()},
        "map_regular": is_regular_in_generated(a, g, args.cap),
        "generated_regular": is_generated_regular(a, g, args.cap),
        "non_units_idempotent_generated": is_idempotent_generated(ideal, args.cap),
        "conjugate_closure_size": len(closure),
        "conjugate_closure_regular": is_regular_semigroup(closure),
        "normalising": is_normalising_pair(a, g, args.cap),
    }
    lines = [f"<a,G> minus G: {report['non_units']} elements, ranks {ideal.ranks()}",
             f"a regular in <a,G>       {_yes(report['map_regular'])}",
             f"<a,G> regular            {_yes(report['generated_regular'])}",
             f"non-units idempotent-generated {_yes(report['non_units_idempotent_generated'])}",
             f"conjugate closure: {len(closure)} elements, regular {_yes(report['conjugate_closure_regular'])}",
             f"conjugate closure equals <a,G> minus G  {_yes(report['normalising'])}"]
    _emit(args, report, lines)
    return EXIT_OK


def _automaton(args) -> Automaton:
    if getattr(args, "cerny", None):
        return Automaton.cerny(args.cerny)
    if not args.automaton:
        raise InputError("give an automaton file or --cerny N")
    try:
        return load_automaton(args.automaton)
    except (OSError, KeyError, ValueError) as exc:
        raise InputError(f"cannot read automaton: {exc}") from None


def cmd_sync_auto(args) -> int:
    auto = _automaton(args)
    report = check_obstruction(auto, args.timeout_secs)
    payload = report.to_json()
    lines = [f"synchronizing  {_yes(report.synchronizing)}"]
    if report.synchronizing and auto.state_count <= 24:
        word = shortest_reset_word(auto)
        payload["reset_word"] = word
        lines.append(f"reset word     {format_word(word)} (length {len(word)})")
    else:
        lines.append(f"Gr(S) edges    {[[v + 1, w + 1] for v, w in report.graph.sorted_edges()]}")
        lines.append(f"omega {report.omega}, chi {report.chi}, min rank {report.min_rank}")
    for name in sorted(report.checks):
        lines.append(f"{'PASS' if report.checks[name] else 'FAIL'}  {name}")
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_reset_word(args) -> int:
    auto = _automaton(args)
    try:
        word = shortest_reset_word(auto)
    except ValueError as exc:
        _emit(args, {"synchronizing": False, "word": None}, [str(exc)])
        return EXIT_FAIL
    _emit(args, {"synchronizing": True, "word": word, "length": len(word), "min_rank": min_rank(auto)},
          [f"{format_word(word)}", f"length {len(word)}"])
    return EXIT_OK


def cmd_sync_group(args) -> int:
    g = parse_group(args.group, args.degree)
    res = groupsync.is_synchronizing_group(g, args.timeout_secs)
    payload = {"group": _group_json(g), **res.to_json(), "primitive": g.is_primitive()}
    lines = [f"synchronizing  {_yes(res.synchronizing)}", f"primitive      {_yes(payload['primitive'])}"]
    if res.witness is not None:
        lines.append(f"witness graph  {[[v + 1, w + 1] for v, w in res.witness.sorted_edges()]}")
        lines.append(f"omega = chi = {res.omega}")
    consistent = not res.synchronizing or payload["primitive"]
    payload["consistent"] = consistent
    _emit(args, payload, lines)
    return EXIT_OK if consistent else EXIT_FAIL


def cmd_rystsov(args) -> int:
    g = parse_group(args.group, args.degree)
    r = groupsync.rystsov_check(g)
    payload = {"group": _group_json(g), "primitive": r.primitive, "synchronizes_rank_n_minus_1": r.synchronizes_all,
               "maps_checked": r.checked, "agrees": r.agrees,
               "unsynchronized": _img(r.unsynchronized) if r.unsynchronized else None}
    lines = [f"primitive {_yes(r.primitive)}; synchronizes every rank n-1 map {_yes(r.synchronizes_all)} "
             f"({r.checked} maps up to conjugacy)"]
    if r.unsynchronized is not None:
        lines.append(f"not synchronized: {r.unsynchronized}")
    lines.append("PASS" if r.agrees else "FAIL")
    _emit(args, payload, lines)
    return EXIT_OK if r.agrees else EXIT_FAIL


def cmd_conjecture_scan(args) -> int:
    groups = [parse_group(s) for s in args.groups] if args.groups else catalog(args.degree)
    reports, found = groupsync.nonuniform_conjecture_scan(args.degree, groups)
    payload = {"degree": args.degree, "reports": [r.to_json() for r in reports],
               "counterexamples": [{"group": name, "map": _img(a)} for name, a in found]}
    lines = [f"{r.group:<12} {r.checked:>8} maps  {'ok' if r.ok else 'COUNTEREXAMPLE'}" for r in reports]
    lines += [f"COUNTEREXAMPLE {name}: {a}" for name, a in found]
    lines.append(f"{len(found)} counterexample(s)")
    _emit(args, payload, lines)
    return EXIT_FAIL if found else EXIT_OK


def cmd_primes(args) -> int:
    found = numbertheory.special_primes(args.limit)
    payload = {"limit": args.limit, "primes": [r.to_json() for r in found]}
    lines = [f"{'p':>8} {'c':>8} {'order':>8}"] + [f"{r.prime:>8} {r.least_witness:>8} {r.subgroup_order[0]:>8}"
                                                    for r in found]
    _emit(args, payload, lines)
    return EXIT_OK


THEOREM_DEFAULTS = {
    "gr-properties": 7, "higman": 8, "kut-regularity": 6, "levi-mcfadden": 4, "mcalister": 5,
    "nut-transitive": 8, "rystsov": 7, "sn-an-conjugates": 4,
}


def run_theorem(name: str, degree: int | None = None, samples: int | None = None, seed: int = 0,
                timeout: float | None = DEFAULT_TIMEOUT) -> checks.CheckResult:
    if name not in checks.THEOREMS:
        raise InputError(f"unknown theorem {name!r}; choose from {sorted(checks.THEOREMS)}")
    d = degree or THEOREM_DEFAULTS[name]
    if name == "gr-properties":
        return checks.gr_properties(100 if samples is None else samples, d, seed, timeout)
    if name == "higman":
        return checks.higman(d, 0 if samples is None else samples, seed)
    return checks.THEOREMS[name](d)


def cmd_check_theorem(args) -> int:
    names = sorted(checks.THEOREMS) if args.name == "all" else [args.name]
    results = [run_theorem(n, args.degree, args.samples, args.seed, args.timeout_secs) for n in names]
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.checked} instances)")
        if r.counterexample:
            lines.append(f"      counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
    _emit(args, {"results": [r.to_json() for r in results]}, lines)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--degree", type=int, help="degree of the input, or the bound for a scan")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for enumerations")
    common.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT, help="per graph solve")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int)
    common.add_argument("--limit", type=int, default=500)

    parser = _Parser(prog="synchrokit", description="Permutation groups, transformation semigroups and synchronization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    group_help = "JSON group file, catalog name, or ';'-separated generators in 1-based notation"

    p = sub.add_parser("group-report", parents=[common], help="orbit and homogeneity summary")
    p.add_argument("group", help=group_help)
    p.set_defaults(func=cmd_group_report)

    p = sub.add_parser("kut", parents=[common], help="k-universal transversal property")
    p.add_argument("group", help=group_help)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_kut)

    p = sub.add_parser("lambda", parents=[common], help="orbits on partitions of a given shape")
    p.add_argument("group", help=group_help)
    p.add_argument("--shape", required=True, help="block sizes, e.g. 2,2,1")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("semigroup", parents=[common], help="properties of <a, G>")
    p.add_argument("group", nargs="?", help=group_help + " (default: trivial)")
    p.add_argument("--map", required=True, help="image notation, e.g. [1,1,2,3]")
    p.set_defaults(func=cmd_semigroup)

    for name, func, text in (("sync-auto", cmd_sync_auto, "synchronization and the Gr(S) obstruction"),
                             ("reset-word", cmd_reset_word, "shortest reset word")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("automaton", nargs="?", help="automaton JSON file")
        p.add_argument("--cerny", type=int, metavar="N", help="use the n-state Cerny automaton")
        p.set_defaults(func=func)

    p = sub.add_parser("sync-group", parents=[common], help="is G a synchronizing group")
    p.add_argument("group", help=group_help)
    p.set_defaults(func=cmd_sync_group)

    p = sub.add_parser("rystsov", parents=[common], help="primitive iff every rank n-1 map is synchronized")
    p.add_argument("group", help=group_help)
    p.set_defaults(func=cmd_rystsov)

    p = sub.add_parser("conjecture-scan", parents=[common], help="primitive groups against non-uniform maps")
    p.add_argument("groups", nargs="*", help=group_help)
    p.set_defaults(func=cmd_conjecture_scan)

    p = sub.add_parser("primes", parents=[common], help="primes p = 11 mod 12 with a small <-1, c, c-1>")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("check-theorem", parents=[common], help="run a desk-scale verification")
    p.add_argument("name", choices=sorted(checks.THEOREMS) + ["all"])
    p.set_defaults(func=cmd_check_theorem)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "conjecture-scan" and args.degree is None:
        args.degree = 7
    try:
        return args.func(args)
    except (ResourceLimitError, SolverTimeout) as exc:
        print(f"limit reached: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
