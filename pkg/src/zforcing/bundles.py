"""Path bundles: how the forces of a chronology chain toward one vertex.

Fix a chronology F from an initial blue set B and a vertex x forced at
step t_x. While x is still white it lives in a shrinking component of the
white subgraph; the bundle starts one path at every vertex of B and
extends a path whenever its current endpoint forces a vertex of that
component. The terminus collects the bundle vertices that perform no
force in the restriction of F to the bundle, one per path.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, mask_of, reach
from .forcing import Chronology, expansion_sequence, restrict_chronology


@dataclass(frozen=True)
class ComponentHistory:
    """comps[t] is the component of the white subgraph holding x at time t,
    for t = 0..t_x-1. Empty when x starts blue (t_x = 0)."""

    x: int
    t_x: int
    comps: tuple[int, ...]


@dataclass(frozen=True)
class PathBundle:
    x: int
    t_x: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def vertex_mask(self) -> int:
        m = 0
        for path in self.paths:
            m |= mask_of(path)
        return m


def _forcing_step_of(f: Chronology, x: int) -> int:
    for t, step in enumerate(f.steps):
        if any(fc.target == x for fc in step):
            return t + 1
    raise ValueError(f"vertex {x} is never forced by this chronology")


def component_history(g: Graph, f: Chronology, x: int) -> ComponentHistory:
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} outside the graph")
    if f.initial >> x & 1:
        return ComponentHistory(x, 0, ())
    t_x = _forcing_step_of(f, x)
    states = expansion_sequence(f)
    comps = tuple(reach(g.adj, 1 << x, g.full_mask & ~states[t])
                  for t in range(t_x))
    return ComponentHistory(x, t_x, comps)


def build_bundle(g: Graph, f: Chronology, x: int) -> PathBundle:
    """One path per initial blue vertex, extended through the component
    history of x up to the step that forces x."""
    hist = component_history(g, f, x)
    paths = [[v] for v in bits(f.initial)]
    endpoint_of = {v: i for i, v in enumerate(bits(f.initial))}
    for s in range(1, hist.t_x + 1):
        comp = hist.comps[s - 1]
        snapshot = dict(endpoint_of)
        moved: set[int] = set()
        for force in sorted(f.steps[s - 1]):
            if not comp >> force.target & 1:
                continue
            i = snapshot.get(force.source)
            if i is None:
                continue  # forced by a vertex no path currently ends at
            # one extension per path per step: a source has a unique psd
            # target inside a single white component
            assert i not in moved
            moved.add(i)
            del endpoint_of[force.source]
            endpoint_of[force.target] = i
            paths[i].append(force.target)
    if hist.t_x:
        assert sum(p[-1] == x for p in paths) == 1, "x must end exactly one path"
    return PathBundle(x, hist.t_x, tuple(tuple(p) for p in paths))


def terminus(g: Graph, f: Chronology, bundle: PathBundle) -> int:
    """Mask of bundle vertices that source no force in the restriction of
    the chronology to the bundle. Always one vertex per path."""
    q = bundle.vertex_mask
    sources = 0
    for step in restrict_chronology(f, q):
        for force in step:
            sources |= 1 << force.source
    members = q & ~sources
    assert members.bit_count() == len(bundle.paths)
    return members
