"""Exhaustive and randomised verification sweeps behind the CLI.

Every record of a violation or an equality case carries the graph6 string
of its graph and is re-checked from that string before the report is
returned, so reports can be replayed independently with ``indom solve``.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .enumerate import enumerate_cubic, enumerate_subcubic_connected
from .families import (
    BadGraphSpec,
    apply_o1,
    build_bad,
    build_troublesome,
    k23,
    random_bad_spec,
    random_subcubic,
)
from .graph import SubcubicGraph, VertexSet, delete_vertices, disjoint_union
from .graph6 import decode_graph6, encode_graph6
from .recognition import contains_subgraph, is_bad_graph, weight_report
from .solver import (
    domination_number,
    i_number,
    independent_domination_number,
    is_independent,
    is_independent_dominating,
)
from .theorems import has_exceptional_component, has_prism5_component, is_k33, is_prism5
from .weights import degree_profile, exit_edge_count, graph_weight, removal_cost


@dataclass
class SweepReport:
    theorem: str
    params: dict[str, Any]
    checked: int = 0
    skipped: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    equality: list[dict[str, Any]] = field(default_factory=list)
    allowed_exceptions: list[str] = field(default_factory=list)
    unexpected: int = 0
    wall_time: float = 0.0
    seed: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.unexpected == 0

    def to_json(self) -> dict[str, Any]:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
            "equality": self.equality,
            "allowed_exceptions": self.allowed_exceptions,
            "unexpected": self.unexpected,
            "ok": self.ok,
            "wall_time": round(self.wall_time, 3),
            "seed": self.seed,
        }
        out.update(self.extra)
        return out


def default_jobs() -> int:
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1)


def parse_shard(text: str | None) -> tuple[int, int]:
    """``"i/k"`` -> ``(i, k)``; ``None`` means the whole sweep."""
    if not text:
        return 0, 1
    try:
        a, b = text.split("/")
        i, k = int(a), int(b)
    except ValueError as exc:
        raise ValueError(f"shard must look like i/k, got {text!r}") from exc
    if k < 1 or not 0 <= i < k:
        raise ValueError(f"shard index {i} out of range for {k} shards")
    return i, k


def _map(fn: Callable[[str], Any], items: Sequence[str], jobs: int) -> list[Any]:
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _select(graphs: Iterable[SubcubicGraph], shard: tuple[int, int]) -> list[str]:
    i, k = shard
    return [encode_graph6(G) for j, G in enumerate(graphs) if j % k == i]


# ---------------------------------------------------------------------------
# cubic sweep


def _cubic_worker(g6: str) -> tuple[int, int, int]:
    G = decode_graph6(g6)
    return G.n, independent_domination_number(G).value, domination_number(G).value


def _record(g6: str, lhs: int, rhs: int, with_report: bool = True) -> dict[str, Any]:
    rec: dict[str, Any] = {"graph6": g6, "lhs": lhs, "rhs": rhs}
    if with_report:
        rec["report"] = weight_report(decode_graph6(g6)).to_json()
    return rec


def _replay(records: list[dict[str, Any]], recompute: Callable[[SubcubicGraph], tuple[int, int]]) -> None:
    for rec in records:
        lhs, rhs = recompute(decode_graph6(rec["graph6"]))
        if (lhs, rhs) != (rec["lhs"], rec["rhs"]):
            raise AssertionError(f"record for {rec['graph6']} does not replay: {(lhs, rhs)}")
        rec["replayed"] = True


def cmd_verify_cubic(max_n: int = 14, jobs: int = 1, shard: str | None = None) -> dict[str, Any]:
    """Check the three cubic bounds on every connected cubic graph of order <= ``max_n``."""
    if max_n > 14:
        raise ValueError("cubic sweeps stop at n = 14")
    start = time.perf_counter()
    part = parse_shard(shard)
    params = {"max_n": max_n, "shard": f"{part[0]}/{part[1]}"}
    main = SweepReport("i<=3n/8 (connected cubic)", dict(params))
    reed = SweepReport("gamma<=3n/8 (cubic)", dict(params))
    lss = SweepReport("i<=2n/5 (connected cubic)", dict(params))
    counts: dict[str, int] = {}
    for n in range(4, max_n + 1, 2):
        graphs = list(enumerate_cubic(n))
        counts[str(n)] = len(graphs)
        items = _select(graphs, part)
        for g6, (order, i, g) in zip(items, _map(_cubic_worker, items, jobs)):
            for rep in (main, reed, lss):
                rep.checked += 1
            if 8 * i > 3 * order:
                main.violations.append(_record(g6, 8 * i, 3 * order))
            elif 8 * i == 3 * order:
                main.equality.append(_record(g6, 8 * i, 3 * order, with_report=False))
            if 8 * g > 3 * order:
                reed.violations.append(_record(g6, 8 * g, 3 * order))
            elif 8 * g == 3 * order:
                reed.equality.append(_record(g6, 8 * g, 3 * order, with_report=False))
            if 5 * i > 2 * order:
                lss.violations.append(_record(g6, 5 * i, 2 * order))
            elif 5 * i == 2 * order:
                lss.equality.append(_record(g6, 5 * i, 2 * order))

    def eight_i(G):
        return 8 * i_number(G), 3 * G.n

    def eight_g(G):
        return 8 * domination_number(G).value, 3 * G.n

    def five_i(G):
        return 5 * i_number(G), 2 * G.n

    _replay(main.violations + main.equality, eight_i)
    _replay(reed.violations + reed.equality, eight_g)
    _replay(lss.violations + lss.equality, five_i)
    main.allowed_exceptions = ["K33", "C5xK2"]
    main.unexpected = sum(
        1 for r in main.violations if not (is_k33(decode_graph6(r["graph6"])) or is_prism5(decode_graph6(r["graph6"])))
    )
    reed.unexpected = len(reed.violations)
    lss.allowed_exceptions = ["K33"]
    lss.unexpected = sum(1 for r in lss.violations if not is_k33(decode_graph6(r["graph6"])))
    wall = time.perf_counter() - start
    for rep in (main, reed, lss):
        rep.wall_time = wall
    ok = all(rep.ok for rep in (main, reed, lss))
    return {
        "command": "verify-cubic",
        "params": params,
        "counts": counts,
        "reports": [main.to_json(), reed.to_json(), lss.to_json()],
        "ok": ok,
        "wall_time": round(wall, 3),
    }


# ---------------------------------------------------------------------------
# subcubic sweeps


def _omega_worker(g6: str) -> tuple[bool, int, int]:
    G = decode_graph6(g6)
    if has_exceptional_component(G):
        return False, 0, 0
    r = weight_report(G)
    return True, 8 * r.i, r.omega


def _omega_pair(G: SubcubicGraph) -> tuple[int, int]:
    r = weight_report(G)
    return 8 * r.i, r.omega


def cmd_verify_subcubic(
    max_n: int = 9, jobs: int = 1, allow_ten: bool = False, shard: str | None = None
) -> dict[str, Any]:
    """8i <= Omega on every connected subcubic graph of order <= ``max_n``."""
    limit = 10 if allow_ten else 9
    if max_n > limit:
        raise ValueError(f"subcubic sweeps stop at n = {limit} (n = 10 needs the explicit flag)")
    start = time.perf_counter()
    part = parse_shard(shard)
    rep = SweepReport("8i<=Omega (connected subcubic)", {"max_n": max_n, "shard": f"{part[0]}/{part[1]}"})
    counts: dict[str, int] = {}
    for n in range(1, max_n + 1):
        graphs = list(enumerate_subcubic_connected(n))
        counts[str(n)] = len(graphs)
        items = _select(graphs, part)
        for g6, (applies, lhs, rhs) in zip(items, _map(_omega_worker, items, jobs)):
            if not applies:
                rep.skipped += 1
                continue
            rep.checked += 1
            if lhs > rhs:
                rep.violations.append(_record(g6, lhs, rhs))
            elif lhs == rhs:
                rep.equality.append(_record(g6, lhs, rhs))
    _replay(rep.violations + rep.equality, _omega_pair)
    rep.unexpected = len(rep.violations)
    rep.wall_time = time.perf_counter() - start
    rep.extra["counts"] = counts
    out = rep.to_json()
    out["command"] = "verify-subcubic"
    return out


def _dorbec_worker(g6: str) -> tuple[bool, int, int]:
    G = decode_graph6(g6)
    if contains_subgraph(G, k23()) or has_prism5_component(G):
        return False, 0, 0
    return True, 8 * i_number(G), graph_weight(G)


def cmd_verify_dorbec(max_n: int = 10, jobs: int = 1, shard: str | None = None) -> dict[str, Any]:
    """8i <= w on connected subcubic graphs with no K_{2,3} subgraph and no 5-prism component."""
    if max_n > 10:
        raise ValueError("subcubic sweeps stop at n = 10")
    start = time.perf_counter()
    part = parse_shard(shard)
    rep = SweepReport("8i<=w (K23-free subcubic)", {"max_n": max_n, "shard": f"{part[0]}/{part[1]}"})
    for n in range(1, max_n + 1):
        items = _select(enumerate_subcubic_connected(n), part)
        for g6, (applies, lhs, rhs) in zip(items, _map(_dorbec_worker, items, jobs)):
            if not applies:
                rep.skipped += 1
                continue
            rep.checked += 1
            if lhs > rhs:
                rep.violations.append(_record(g6, lhs, rhs))
            elif lhs == rhs:
                rep.equality.append(_record(g6, lhs, rhs, with_report=False))
    _replay(rep.violations + rep.equality, lambda G: (8 * i_number(G), graph_weight(G)))
    rep.unexpected = len(rep.violations)
    rep.wall_time = time.perf_counter() - start
    out = rep.to_json()
    out["command"] = "verify-dorbec"
    return out


# ---------------------------------------------------------------------------
# randomised property suites


def _random_proper_subset(G: SubcubicGraph, rng: random.Random) -> VertexSet:
    size = rng.randrange(0, G.n)
    return VertexSet.of(G.n, rng.sample(range(G.n), size))


def random_isolate_free(rng: random.Random, max_n: int = 12) -> SubcubicGraph:
    while True:
        G = random_subcubic(rng.randint(2, max_n), rng)
        if not degree_profile(G).n0:
            return G


def _suite_removal_cost(trials: int, rng: random.Random) -> list[str]:
    """Removal cost on isolate-free graphs, plus the general form counting only new isolates."""
    failures = []
    for t in range(trials):
        G = random_isolate_free(rng)
        X = _random_proper_subset(G, rng)
        H, _ = delete_vertices(G, X)
        if removal_cost(G, X) != exit_edge_count(G, X) + 2 * degree_profile(H).n0:
            failures.append(f"trial {t}: {encode_graph6(G)} X={X.sorted()}")
        F = random_subcubic(rng.randint(1, 12), rng)
        Y = _random_proper_subset(F, rng)
        H, mapping = delete_vertices(F, Y)
        fresh = sum(1 for old, new in mapping.items() if H.degree(new) == 0 and F.degree(old) > 0)
        if removal_cost(F, Y) != exit_edge_count(F, Y) + 2 * fresh:
            failures.append(f"trial {t} (general): {encode_graph6(F)} X={Y.sorted()}")
    return failures


def random_isolate_free_host(rng: random.Random, max_n: int = 10) -> tuple[SubcubicGraph, int]:
    """A random isolate-free subcubic graph and a vertex of degree <= 2 in it."""
    while True:
        G = random_subcubic(rng.randint(2, max_n), rng)
        if degree_profile(G).n0:
            continue
        slots = [v for v in range(G.n) if G.degree(v) <= 2]
        if slots:
            return G, rng.choice(slots)


def _suite_unit_attachment(trials: int, rng: random.Random) -> list[str]:
    failures = []
    for t in range(trials):
        H, v = random_isolate_free_host(rng)
        G = apply_o1(H, v)
        di = i_number(G) - i_number(H)
        dw = graph_weight(G) - graph_weight(H)
        if (di, dw) != (2, 16):
            failures.append(f"trial {t}: host {encode_graph6(H)} at {v}: di={di}, dw={dw}")
    return failures


def check_bad_graph_properties(spec: BadGraphSpec) -> list[str]:
    """Every listed property of a constructed bad graph; returns the failed ones."""
    A = build_bad(spec)
    G, k = A.graph, spec.k
    bad = []
    res = independent_domination_number(G)
    if res.value != 2 * k + 1 or graph_weight(G) != 16 * k + 6:
        bad.append("(a) i or w")
    if 8 * res.value != graph_weight(G) + 2:
        bad.append("(a) 8i = w + 2")
    if len(A.canonical_id_set) != res.value or not is_independent_dominating(G, A.canonical_id_set):
        bad.append("(b) canonical set")
    nc = A.non_canonical_set | VertexSet.of(G.n, [A.root])
    if len(nc) != res.value or not is_independent_dominating(G, nc):
        bad.append("(c) non-canonical set plus root")
    for v in [A.root] + [u for u in range(G.n) if G.degree(u) == 2]:
        H, _ = delete_vertices(G, [v])
        if i_number(H) != res.value - 1:
            bad.append(f"(d) vertex {v}")
    deg2 = [u for u in range(G.n) if G.degree(u) == 2]
    H, mapping = delete_vertices(G, deg2)
    if not is_independent_dominating(H, [mapping[c] for c in A.core_set]):
        bad.append("(e) core set")
    if degree_profile(G).n1 > 1 or any(G.degree(a) == 2 and G.degree(b) == 2 for a, b in G.edges):
        bad.append("(f) degree pattern")
    if not is_independent(G, A.non_canonical_set) or not is_independent(G, A.core_set):
        bad.append("distinguished sets not independent")
    if len(A.canonical_id_set) + len(A.non_canonical_set) + len(A.core_set) != G.n:
        bad.append("distinguished sets do not partition V")
    return bad


def _suite_bad_graph(trials: int, rng: random.Random) -> list[str]:
    failures = []
    for t in range(trials):
        spec = random_bad_spec(rng.randint(1, 6), rng)
        for msg in check_bad_graph_properties(spec):
            failures.append(f"trial {t}: {spec}: {msg}")
    return failures


def check_template_properties(kind: int, spec: BadGraphSpec, rng: random.Random, w2: int | None = None) -> list[str]:
    T = build_troublesome(kind, spec, w2)
    G = T.graph
    bad = []
    iT = i_number(G)
    iB = i_number(T.bad.graph)
    if iT != iB:
        bad.append("(a) i(T) != i(B)")
    if len(T.bad.canonical_id_set) != iT or not is_independent_dominating(G, T.bad.canonical_id_set.sorted()):
        bad.append("(b) canonical set")
    if independent_domination_number(G, include=[T.v2]).value != iT:
        bad.append("(c) no i-set through v2")
    deg2 = [v for v in range(G.n) if G.degree(v) == 2 and v not in (T.v1, T.v2)]
    S = [v for v in deg2 if rng.random() < 0.5]
    H, mapping = delete_vertices(G, S)
    target = iT - len(S)
    if i_number(H) != target:
        bad.append(f"(d) i(T-S) with S={S}")
    else:
        a, b = mapping[T.v1], mapping[T.v2]
        if independent_domination_number(H, exclude=[a, b]).value != target:
            bad.append(f"(d) no i-set avoiding links, S={S}")
        for j, v in ((1, a), (2, b)):
            if independent_domination_number(H, include=[v]).value != target:
                bad.append(f"(d) no i-set through v{j}, S={S}")
    # degrees as seen by the host: each stub carries one external edge
    host_deg = G.degrees()
    for s in T.stubs:
        host_deg[s] += 1
    if min(host_deg) < 2 or any(host_deg[x] == 2 and host_deg[y] == 2 for x, y in G.edges):
        bad.append("(f) degree pattern")
    return bad


def _suite_templates(trials: int, rng: random.Random) -> list[str]:
    failures = []
    for t in range(trials):
        spec = random_bad_spec(rng.randint(1, 5), rng, root_degree=1)
        kind = rng.choice((1, 2))
        B = build_bad(spec).graph
        w2 = rng.choice([v for v in range(1, B.n) if B.degree(v) == 2])
        for msg in check_template_properties(kind, spec, rng, w2):
            failures.append(f"trial {t}: type {kind} {spec} w2={w2}: {msg}")
    return failures


def _suite_unions(trials: int, rng: random.Random) -> list[str]:
    """8i <= Omega on random disjoint unions of small graphs, including bad graphs."""
    failures = []
    for t in range(trials):
        parts = []
        for _ in range(rng.randint(2, 3)):
            if rng.random() < 0.3:
                parts.append(build_bad(random_bad_spec(rng.randint(1, 2), rng)).graph)
            else:
                parts.append(random_subcubic(rng.randint(1, 7), rng))
        G = disjoint_union(*parts)
        if has_exceptional_component(G):
            continue
        r = weight_report(G)
        if 8 * r.i > r.omega:
            failures.append(f"trial {t}: {encode_graph6(G)}")
    return failures


def _suite_recognition(trials: int, rng: random.Random) -> list[str]:
    failures = []
    for t in range(trials):
        spec = random_bad_spec(rng.randint(1, 6), rng)
        A = build_bad(spec)
        perm = list(range(A.graph.n))
        rng.shuffle(perm)
        cls = is_bad_graph(A.graph.relabel(perm))
        if not cls or (cls.subfamily, cls.k) != (A.subfamily, spec.k):
            failures.append(f"trial {t}: {spec}")
    return failures


SUITES = {
    "removal-cost": _suite_removal_cost,
    "unit-attachment": _suite_unit_attachment,
    "bad-graph": _suite_bad_graph,
    "templates": _suite_templates,
    "recognition": _suite_recognition,
    "disjoint-unions": _suite_unions,
}


def cmd_verify_props(trials: int = 200, seed: int = 0) -> dict[str, Any]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    start = time.perf_counter()
    suites = []
    total = 0
    for name, fn in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        failures = fn(trials, rng)
        total += len(failures)
        suites.append({
            "suite": name,
            "trials": trials,
            "failures": len(failures),
            "examples": failures[:5],
            "wall_time": round(time.perf_counter() - t0, 3),
        })
    return {
        "command": "verify-props",
        "params": {"trials": trials},
        "seed": seed,
        "suites": suites,
        "failures": total,
        "ok": total == 0,
        "wall_time": round(time.perf_counter() - start, 3),
    }
