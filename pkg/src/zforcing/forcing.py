"""Color change rules, force chronologies, and closures.

Both rules act on a blue/white coloring of a graph. Under the standard
rule a blue vertex with exactly one white neighbor forces that neighbor.
Under the positive semidefinite (psd) rule the white set is first split
into the components of the subgraph it induces; a blue vertex u forces a
white vertex w when w is u's only neighbor inside w's component. A
chronology records the set of forces applied at each time step, and its
expansion sequence records the blue set after each step.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graphs import Graph, bits, reach


class Rule(enum.Enum):
    STANDARD = "standard"
    PSD = "psd"


def _rule(rule: "Rule | str") -> Rule:
    return rule if isinstance(rule, Rule) else Rule(rule)


class Force(NamedTuple):
    source: int
    target: int


@dataclass(frozen=True)
class ColorState:
    blue: int
    time: int = 0


class ChronologyError(ValueError):
    """A force sequence violates the rule; `step` is the 1-based offender."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class Chronology:
    """Per-step force sets. steps[t] holds the forces applied going from
    time t to time t+1; every step is nonempty."""

    initial: int
    steps: tuple[frozenset[Force], ...]
    rule: Rule

    @property
    def tau(self) -> int:
        return len(self.steps)

    def forces(self) -> list[Force]:
        """All forces in step order, sorted inside each step."""
        out: list[Force] = []
        for step in self.steps:
            out.extend(sorted(step))
        return out


def expansion_sequence(chron: Chronology) -> tuple[int, ...]:
    """Blue masks after 0..tau steps; index t is the blue set at time t."""
    states = [chron.initial]
    blue = chron.initial
    for step in chron.steps:
        for force in step:
            blue |= 1 << force.target
        states.append(blue)
    return tuple(states)


def valid_forces(g: Graph, blue: int, rule: "Rule | str") -> set[Force]:
    """Every force the rule admits at this coloring."""
    rule = _rule(rule)
    full = g.full_mask
    if blue & ~full:
        raise ValueError("blue set mentions vertices outside the graph")
    white = full & ~blue
    out: set[Force] = set()
    if rule is Rule.STANDARD:
        for u in bits(blue):
            wn = g.adj[u] & white
            if wn and not wn & (wn - 1):
                out.add(Force(u, wn.bit_length() - 1))
        return out
    rem = white
    while rem:
        comp = reach(g.adj, rem & -rem, white)
        rem &= ~comp
        for u in bits(blue):
            inter = g.adj[u] & comp
            if inter and not inter & (inter - 1):
                out.add(Force(u, inter.bit_length() - 1))
    return out


def apply_step(g: Graph, state: ColorState, chosen: Iterable[Force],
               rule: "Rule | str") -> ColorState:
    """Apply one step's worth of forces. The chosen set must be a nonempty
    subset of the currently valid forces with pairwise distinct targets."""
    rule = _rule(rule)
    chosen = set(chosen)
    if not chosen:
        raise ValueError("empty force step")
    valid = valid_forces(g, state.blue, rule)
    bad = chosen - valid
    if bad:
        raise ValueError(f"forces not valid at time {state.time}: {sorted(bad)}")
    targets = {f.target for f in chosen}
    if len(targets) != len(chosen):
        raise ValueError("duplicate targets within one step")
    new_blue = state.blue
    for t in targets:
        new_blue |= 1 << t
    return ColorState(new_blue, state.time + 1)


def closure(g: Graph, initial: int, rule: "Rule | str") -> tuple[Chronology, tuple[int, ...]]:
    """Greedy maximal run: at each step apply every valid force, resolving
    duplicate targets in favor of the smallest source id, until no force
    remains. Returns the chronology and its expansion sequence."""
    rule = _rule(rule)
    blue = initial
    steps: list[frozenset[Force]] = []
    states = [blue]
    while True:
        valid = valid_forces(g, blue, rule)
        if not valid:
            break
        by_target: dict[int, int] = {}
        for f in sorted(valid):
            by_target.setdefault(f.target, f.source)
        step = frozenset(Force(s, t) for t, s in by_target.items())
        steps.append(step)
        for t in by_target:
            blue |= 1 << t
        states.append(blue)
    return Chronology(initial, tuple(steps), rule), tuple(states)


# ---------------------------------------------------------------------------
# tight mask-only closures: these recompute what closure() computes but skip
# all force bookkeeping; agreement of the final blue masks is property-tested


def _close_standard(adj: Sequence[int], blue: int, full: int) -> int:
    while True:
        prev = blue
        b = blue
        white = full ^ blue
        while b:
            low = b & -b
            b ^= low
            wn = adj[low.bit_length() - 1] & white
            if wn and not wn & (wn - 1):
                blue |= wn
                white ^= wn
        if blue == prev:
            return blue


def _close_psd(adj: Sequence[int], blue: int, full: int) -> int:
    while True:
        white = full ^ blue
        if not white:
            return blue
        newly = 0
        rem = white
        while rem:
            seed = rem & -rem
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    f ^= low
                    nxt |= adj[low.bit_length() - 1]
                nxt &= white & ~comp
                comp |= nxt
                frontier = nxt
            rem &= ~comp
            boundary = 0
            cc = comp
            while cc:
                low = cc & -cc
                cc ^= low
                boundary |= adj[low.bit_length() - 1]
            boundary &= blue
            while boundary:
                low = boundary & -boundary
                boundary ^= low
                inter = adj[low.bit_length() - 1] & comp
                if not inter & (inter - 1):
                    newly |= inter
        if not newly:
            return blue
        blue |= newly


def closure_mask(g: Graph, initial: int, rule: "Rule | str") -> int:
    """Final blue mask of the closure, without the chronology."""
    if initial & ~g.full_mask:
        raise ValueError("blue set mentions vertices outside the graph")
    if _rule(rule) is Rule.STANDARD:
        return _close_standard(g.adj, initial, g.full_mask)
    return _close_psd(g.adj, initial, g.full_mask)


def is_forcing_set(g: Graph, b: int, rule: "Rule | str") -> bool:
    return closure_mask(g, b, rule) == g.full_mask


def chronological_list(g: Graph, b: int, rule: "Rule | str",
                       replay: Sequence[Force] | None = None) -> Chronology:
    """One force per step until everything is blue. Without `replay` the
    lexicographically least (source, target) valid force is picked each
    step; with `replay` the given forces are validated and applied in
    order and must themselves finish the run."""
    rule = _rule(rule)
    if not is_forcing_set(g, b, rule):
        raise ChronologyError("initial set does not force the whole graph")
    full = g.full_mask
    blue = b
    steps: list[frozenset[Force]] = []
    if replay is None:
        while blue != full:
            force = min(valid_forces(g, blue, rule))
            steps.append(frozenset([force]))
            blue |= 1 << force.target
        return Chronology(b, tuple(steps), rule)
    for i, force in enumerate(replay):
        if force not in valid_forces(g, blue, rule):
            raise ChronologyError(f"force {force} not valid at step {i + 1}", step=i + 1)
        steps.append(frozenset([force]))
        blue |= 1 << force.target
    if blue != full:
        raise ChronologyError("replayed forces stop before the graph is blue")
    return Chronology(b, tuple(steps), rule)


def restrict_chronology(f: Chronology, h: int) -> list[frozenset[Force]]:
    """Per-step force subsets with both endpoints inside the mask h. The
    step count is preserved; steps may come back empty."""
    out = []
    for step in f.steps:
        out.append(frozenset(fc for fc in step
                             if h >> fc.source & 1 and h >> fc.target & 1))
    return out


def make_chronology(g: Graph, initial: int, steps: Iterable[Iterable[Force]],
                    rule: "Rule | str") -> Chronology:
    """Validate externally supplied per-step force sets and wrap them."""
    rule = _rule(rule)
    chron = Chronology(initial, tuple(frozenset(s) for s in steps), rule)
    check_chronology(g, chron)
    return chron


def check_chronology(g: Graph, chron: Chronology) -> None:
    """Raise ChronologyError unless every step is a nonempty set of forces
    valid at its own time with pairwise distinct targets."""
    state = ColorState(chron.initial, 0)
    for i, step in enumerate(chron.steps):
        try:
            state = apply_step(g, state, step, chron.rule)
        except ValueError as exc:
            raise ChronologyError(f"step {i + 1}: {exc}", step=i + 1) from None
