"""Rewiring a psd forcing set so its complement becomes connected.

Given a connected graph, a psd forcing set s, and a component c of g - s,
one enlargement step picks a boundary vertex x of c that also sees the
rest of the graph, finds the first time the run from s has all of x's
neighborhood blue or inside c, and re-sorts the forces so that x itself
performs the force at that step. The terminus of the resulting bundle is
a same-size psd forcing set whose removal leaves x's side strictly larger
than c. If the saturation time is 0, s was not minimum and a strictly
smaller forcing set falls out instead. Iterating the step from a minimum
set yields a minimum psd forcing set with connected complement.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, components, is_connected, reach
from .forcing import (Force, Rule, chronological_list, expansion_sequence,
                      is_forcing_set, valid_forces)
from .bundles import build_bundle, terminus
from .solver import forcing_number


@dataclass(frozen=True)
class ReconnectionStep:
    s: int
    c: int
    boundary: int
    x: int
    t: int
    w_star: int
    s_prime: int


@dataclass(frozen=True)
class MinimalityRefutation:
    """Witness that s was not minimum: removing y leaves a forcing set."""

    y: int
    smaller: int


def boundary_set(g: Graph, s: int, c: int) -> int:
    """Members of s with a neighbor in c."""
    out = 0
    for v in bits(s):
        if g.adj[v] & c:
            out |= 1 << v
    return out


def find_pivot(g: Graph, s: int, c: int) -> int:
    """Least boundary vertex of c that is also adjacent to a vertex outside
    the boundary and outside c. One exists whenever g is connected and
    g - s has another component besides c."""
    s0 = boundary_set(g, s, c)
    outside = g.full_mask & ~(s0 | c)
    for x in bits(s0):
        if g.adj[x] & outside:
            return x
    raise ValueError("no pivot: boundary plus component sees nothing else")


def first_saturation_time(g: Graph, f, x: int, c: int) -> int:
    """Least t with N[x] contained in E[t] union c."""
    closed = g.adj[x] | 1 << x
    for t, state in enumerate(expansion_sequence(f)):
        if not closed & ~(state | c):
            return t
    raise ValueError("closed neighborhood never saturates; not a forcing run")


def _validate_component(g: Graph, s: int, c: int) -> None:
    if not c:
        raise ValueError("component is empty")
    if c & s:
        raise ValueError("component overlaps s")
    white = g.full_mask & ~s
    if reach(g.adj, c & -c, white) != c:
        raise ValueError("c is not a component of g - s")


def improve_component(g: Graph, s: int, c: int) -> "ReconnectionStep | MinimalityRefutation":
    """One component-enlargement step; see the module docstring.

    Preconditions: g connected, s a psd forcing set, c a component of
    g - s, and g - s disconnected.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if not is_forcing_set(g, s, Rule.PSD):
        raise ValueError("s is not a psd forcing set")
    _validate_component(g, s, c)
    if len(components(g, g.full_mask & ~s)) < 2:
        raise ValueError("g - s is already connected")

    s0 = boundary_set(g, s, c)
    x = find_pivot(g, s, c)
    f = chronological_list(g, s, Rule.PSD)
    t = first_saturation_time(g, f, x, c)

    if t == 0:
        # every neighbor of x is already in s or c, yet x also sees past the
        # boundary; dropping that neighbor keeps a forcing set one smaller
        outside = g.full_mask & ~(s0 | c)
        y_mask = g.adj[x] & outside
        y = (y_mask & -y_mask).bit_length() - 1
        smaller = s & ~(1 << y)
        assert is_forcing_set(g, smaller, Rule.PSD)
        return MinimalityRefutation(y, smaller)

    # the single force at step t colors the last white vertex of N[x]
    # outside c, so its target is a neighbor of x
    (step_force,) = f.steps[t - 1]
    w_star = step_force.target
    assert g.adj[x] >> w_star & 1 and not c >> w_star & 1

    order = [next(iter(step)) for step in f.steps[: t - 1]]
    order.append(Force(x, w_star))
    blue = s
    for fc in order:
        blue |= 1 << fc.target
    # regenerate the tail: replay the original force when still valid,
    # otherwise fall back to the lex-least valid force
    pending = [next(iter(step)) for step in f.steps[t:]]
    while blue != g.full_mask:
        pending = [fc for fc in pending if not blue >> fc.target & 1]
        valid = valid_forces(g, blue, Rule.PSD)
        chosen = None
        for fc in pending:
            if fc in valid:
                chosen = fc
                break
        if chosen is None:
            chosen = min(valid)
        order.append(chosen)
        blue |= 1 << chosen.target
        if chosen in pending:
            pending.remove(chosen)

    f_prime = chronological_list(g, s, Rule.PSD, replay=order)
    bundle = build_bundle(g, f_prime, w_star)
    s_prime = terminus(g, f_prime, bundle)

    assert is_forcing_set(g, s_prime, Rule.PSD)
    assert s_prime.bit_count() == s.bit_count()
    assert not s_prime & c
    assert not s_prime >> x & 1
    grown = reach(g.adj, 1 << x, g.full_mask & ~s_prime)
    assert c & ~grown == 0 and grown != c
    return ReconnectionStep(s, c, s0, x, t, w_star, s_prime)


def connected_complement_trace(g: Graph) -> tuple[int, list[ReconnectionStep]]:
    """Minimum psd forcing set with connected complement, with the steps
    that got there. Starts from the solver witness and repeatedly enlarges
    around the largest component (ties to the least member), which
    strictly grows each round, so at most n steps happen."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    s = forcing_number(g, Rule.PSD).witness
    steps: list[ReconnectionStep] = []
    for _ in range(g.n):
        comps = components(g, g.full_mask & ~s)
        if len(comps) <= 1:
            return s, steps
        c = max(comps, key=lambda m: m.bit_count())  # list is least-member sorted
        result = improve_component(g, s, c)
        # a minimum set can never trigger the refutation branch
        assert isinstance(result, ReconnectionStep)
        steps.append(result)
        s = result.s_prime
    raise AssertionError("component enlargement failed to terminate")


def connected_complement_set(g: Graph) -> int:
    return connected_complement_trace(g)[0]
