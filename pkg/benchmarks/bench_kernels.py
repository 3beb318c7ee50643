"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import itertools
import timeit

from synchrokit._kernels import available_backends
from synchrokit.core import Transformation
from synchrokit.permgroup import catalog_group
from synchrokit.sync import Automaton


def workloads():
    s5 = [p.to_bytes() for p in catalog_group("S5").generators]
    a = Transformation((0, 0, 2, 3, 4)).to_bytes()
    ideal_seed = [a]
    s4 = catalog_group("S4")
    n4 = 4
    maps4 = [bytes(t) for t in itertools.product(range(n4), repeat=n4)]
    perms4 = [bytes(p.images) for p in s4.elements()]
    codes4 = list(range(n4 ** n4))
    cerny = [x.to_bytes() for _, x in Automaton.cerny(16).letters]
    pgl = catalog_group("PGL(2,7)").induced_action_on_ksubsets(2)
    map28 = Transformation(tuple(min(i, 20) for i in range(28))).to_bytes()
    letters28 = pgl.generator_bytes() + [map28]

    def closure(k):
        return k.closure(ideal_seed, s5 + [a], s5 + [a], 10 ** 6)

    return {
        "closure <a,S5>": closure,
        "regular_flags T4": lambda k: k.regular_flags(maps4, maps4),
        "collapsible PGL(2,7) on 28": lambda k: k.collapsible(letters28, 28),
        "shortest_reset Cerny 16": lambda k: k.shortest_reset(cerny, 16),
        "min_image_size Cerny 16": lambda k: k.min_image_size(cerny, 16),
        "conjugacy_reps T4 under S4": lambda k: k.conjugacy_reps(n4, [p for p in perms4], codes4),
    }


def _norm(r):
    return repr(r if r is None or isinstance(r, int) else list(r))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    names = sorted(backends)
    print(f"{'workload':32}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads().items():
        results = {b: fn(backends[b]) for b in names}
        if len({_norm(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        times = {b: min(timeit.repeat(lambda: fn(backends[b]), number=1, repeat=args.repeat)) for b in names}
        row = f"{label:32}" + "".join(f"{times[b] * 1e3:10.1f}ms" for b in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
