from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indom.enumerate import enumerate_subcubic_connected
from indom.families import build_bad, edgeless, k23, k33, prism, random_bad_spec
from indom.graph import disjoint_union
from indom.solver import (
    KERNEL,
    InfeasibleConstraints,
    domination_number,
    independent_domination_number,
    is_dominating,
    is_independent,
    is_independent_dominating,
    is_maximal_independent,
)

from oracles import brute_gamma, brute_i
from strategies import subcubic_graphs


def test_predicates_on_k23():
    G = k23()
    assert is_dominating(G, [0, 1])
    assert not is_dominating(G, [2])
    assert is_dominating(G, range(5))
    assert is_independent_dominating(G, [2, 3, 4])
    assert not is_independent_dominating(G, [0, 2])


def test_prism_has_four_vertex_maximal_independent_set():
    G = prism(5)
    found = [S for S in combinations(range(10), 4) if is_independent_dominating(G, S)]
    assert found
    # brute force confirms no 3-set works
    assert not any(is_independent_dominating(G, S) for S in combinations(range(10), 3))


def test_values():
    assert independent_domination_number(k23()).value == 2
    assert independent_domination_number(prism(5)).value == 4
    assert independent_domination_number(k33()).value == 3
    assert domination_number(k23()).value == 2
    assert domination_number(prism(5)).value == 3
    assert domination_number(edgeless(4)).value == 4


def test_oracle_values_for_fixed_graphs():
    for G in (k33(), prism(5)):
        assert independent_domination_number(G).value == brute_i(G.n, list(G.edges))
        assert domination_number(G).value == brute_gamma(G.n, list(G.edges))


@pytest.mark.parametrize("k", range(1, 7))
def test_bad_graph_value(k):
    spec = random_bad_spec(k, random.Random(k))
    assert independent_domination_number(build_bad(spec).graph).value == 2 * k + 1


def test_isolated_vertices_are_forced():
    G = disjoint_union(edgeless(2), k23())
    r = independent_domination_number(G)
    assert r.value == 4 and {0, 1} <= set(r.certificate)
    assert domination_number(G).value == 4


def test_empty_graph():
    G = edgeless(0)
    assert independent_domination_number(G).value == 0
    assert domination_number(G).value == 0


def _constrained_oracle(G, inc, exc):
    best = None
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if set(inc) <= set(S) and not set(exc) & set(S) and is_independent_dominating(G, S):
                return k
    return best


@settings(max_examples=150, deadline=None)
@given(subcubic_graphs(max_n=8), st.data())
def test_constrained_solver_matches_oracle(G, data):
    inc = data.draw(st.sets(st.integers(0, G.n - 1), max_size=2))
    exc = data.draw(st.sets(st.integers(0, G.n - 1), max_size=3)) - inc
    expect = _constrained_oracle(G, inc, exc)
    if expect is None:
        with pytest.raises(InfeasibleConstraints):
            independent_domination_number(G, include=inc, exclude=exc)
    else:
        r = independent_domination_number(G, include=inc, exclude=exc)
        assert r.value == expect
        assert set(inc) <= set(r.certificate) and not set(exc) & set(r.certificate)


def test_forced_adjacent_pair_is_infeasible():
    with pytest.raises(InfeasibleConstraints):
        independent_domination_number(k23(), include=[0, 2])


@settings(max_examples=200, deadline=None)
@given(subcubic_graphs(max_n=14))
def test_certificates_and_gamma_at_most_i(G):
    ri = independent_domination_number(G)
    rg = domination_number(G)
    assert is_independent_dominating(G, ri.certificate) and len(ri.certificate) == ri.value
    assert is_dominating(G, rg.certificate) and len(rg.certificate) == rg.value
    assert rg.value <= ri.value


@settings(max_examples=200, deadline=None)
@given(subcubic_graphs(max_n=8), st.data())
def test_maximal_independent_equals_independent_dominating(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1)))
    assert is_maximal_independent(G, S) == (is_independent(G, S) and is_dominating(G, S))


def test_oracle_equivalence_up_to_seven_vertices():
    for n in range(1, 8):
        for G in enumerate_subcubic_connected(n):
            e = list(G.edges)
            assert independent_domination_number(G).value == brute_i(n, e)
            assert domination_number(G).value == brute_gamma(n, e)


@settings(max_examples=100, deadline=None)
@given(subcubic_graphs(max_n=16))
def test_kernels_agree(G):
    a = independent_domination_number(G, pure_python=True)
    b = independent_domination_number(G)
    assert a.value == b.value
    assert domination_number(G, pure_python=True).value == domination_number(G).value


def test_kernel_selection_at_import():
    import importlib.util
    import os
    import subprocess
    import sys

    code = "import indom.solver as s; print(s.KERNEL)"
    env = dict(os.environ, INDOM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    built = importlib.util.find_spec("indom.solver._ckernel") is not None
    assert KERNEL == ("cython" if built else "python")
