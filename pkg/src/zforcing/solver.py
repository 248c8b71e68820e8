"""Exact forcing numbers by plain exhaustive search.

Candidate sets are tried in size-ascending, lexicographic order and the
first closure that colors everything wins, so the witness is the
lexicographically least minimum set. No pruning beyond early exit on the
first success per size: correctness and auditability outrank speed here.
Disconnected inputs are solved per component and summed.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .graphs import Graph, bits, components, induced_subgraph
from .forcing import Rule, _close_psd, _close_standard, _rule


@dataclass(frozen=True)
class SolverReport:
    rule: Rule
    value: int
    witness: int
    tested: int
    elapsed_ms: float


def _search_min(adj: tuple[int, ...], n: int, rule: Rule) -> tuple[int, int, int]:
    """(size, witness mask, candidates tested) for one whole graph."""
    full = (1 << n) - 1
    close = _close_standard if rule is Rule.STANDARD else _close_psd
    tested = 0
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            blue = 0
            for v in combo:
                blue |= 1 << v
            tested += 1
            if close(adj, blue, full) == full:
                return k, blue, tested
    raise AssertionError("the full vertex set always forces")


def forcing_number(g: Graph, rule: "Rule | str") -> SolverReport:
    """Minimum forcing set size, with the lex-least witness. The witness of
    a disconnected graph is the union of per-component witnesses, which is
    again the lex-least minimum set."""
    rule = _rule(rule)
    start = time.perf_counter()
    comps = components(g, g.full_mask)
    if len(comps) == 1:
        value, witness, tested = _search_min(g.adj, g.n, rule)
    else:
        value = 0
        witness = 0
        tested = 0
        for comp in comps:
            sub, index = induced_subgraph(g, comp)
            k, wit, t = _search_min(sub.adj, sub.n, rule)
            back = {new: old for old, new in index.items()}
            value += k
            tested += t
            for v in bits(wit):
                witness |= 1 << back[v]
    elapsed_ms = (time.perf_counter() - start) * 1e3
    return SolverReport(rule, value, witness, tested, elapsed_ms)


def all_minimum_sets(g: Graph, rule: "Rule | str", cap: int = 1000) -> list[int]:
    """Up to cap minimum forcing sets, lexicographic order."""
    rule = _rule(rule)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    z = forcing_number(g, rule).value
    full = g.full_mask
    close = _close_standard if rule is Rule.STANDARD else _close_psd
    out = []
    for combo in itertools.combinations(range(g.n), z):
        blue = 0
        for v in combo:
            blue |= 1 << v
        if close(g.adj, blue, full) == full:
            out.append(blue)
            if len(out) == cap:
                break
    return out
