"""Compare the compiled and pure-Python search kernels on the same instances.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import random
import time

from indom.enumerate import enumerate_cubic
from indom.families import build_bad, example_graph, extremal_family, random_bad_spec, random_subcubic
from indom.solver import KERNEL, domination_number, independent_domination_number


def instances() -> list[tuple[str, object]]:
    rng = random.Random(0)
    out = [
        ("fig11", example_graph("fig11")),
        ("bad k=8", build_bad(random_bad_spec(8, rng)).graph),
        ("fig3 blocks=3", extremal_family("fig3", 3, validate=False)),
        ("random n=30", random_subcubic(30, rng)),
        ("random n=40", random_subcubic(40, rng)),
    ]
    cubic12 = list(enumerate_cubic(12))
    out.append(("all cubic n=12", cubic12))
    return out


def _solve_all(graphs, pure: bool) -> tuple[int, int]:
    total = nodes = 0
    for G in graphs:
        r = independent_domination_number(G, pure_python=pure)
        g = domination_number(G, pure_python=pure)
        total += r.value + g.value
        nodes += r.node_count + g.node_count
    return total, nodes


def bench(repeat: int) -> list[dict]:
    rows = []
    for name, G in instances():
        graphs = G if isinstance(G, list) else [G]
        row = {"instance": name}
        values = {}
        for label, pure in (("python", True), ("compiled", False)):
            if label == "compiled" and KERNEL != "cython":
                row[label] = None
                continue
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                values[label] = _solve_all(graphs, pure)
                best = min(best, time.perf_counter() - t0)
            row[label] = best
        if len(values) == 2 and values["python"][0] != values["compiled"][0]:
            raise AssertionError(f"kernels disagree on {name}")
        row["nodes"] = values["python"][1]
        row["speedup"] = row["python"] / row["compiled"] if row.get("compiled") else None
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = bench(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"active kernel: {KERNEL}")
    print(f"{'instance':<18}{'nodes':>10}{'python s':>12}{'compiled s':>12}{'speedup':>9}")
    for r in rows:
        comp = f"{r['compiled']:.4f}" if r["compiled"] is not None else "n/a"
        sp = f"{r['speedup']:.1f}x" if r["speedup"] else "n/a"
        print(f"{r['instance']:<18}{r['nodes']:>10}{r['python']:>12.4f}{comp:>12}{sp:>9}")


if __name__ == "__main__":
    main()
