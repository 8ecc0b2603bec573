"""Exact C_ell search on the twin quotient.

Two vertices are twins when they share both neighbourhoods. A twin class is
independent (an edge inside it would be a loop of the quotient), so a closed
walk in the quotient that visits every class ``c`` at most ``|c|`` times lifts
to a directed cycle by handing out distinct members of each class. Blow-up
style graphs collapse to a handful of classes, which turns an exponential
search into a small dynamic programme.

With every class a singleton the same code is the classic exhaustive
(vertex, visited-subset) DP.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SearchBudgetExceeded
from .graph import OrientedGraph, iter_bits


@dataclass(frozen=True)
class TwinQuotient:
    classes: tuple[tuple[int, ...], ...]  # members ascending; classes ordered by first member
    succ: tuple[tuple[int, ...], ...]     # class -> successor classes, ascending


def twin_quotient(g: OrientedGraph, merge: bool = True) -> TwinQuotient:
    if merge:
        groups: dict[tuple[int, int], list[int]] = {}
        for v in range(g.n):
            groups.setdefault((g.out_mask(v), g.in_mask(v)), []).append(v)
        classes = sorted((tuple(m) for m in groups.values()), key=lambda c: c[0])
    else:
        classes = [(v,) for v in range(g.n)]
    owner = [0] * g.n
    for ci, members in enumerate(classes):
        for v in members:
            owner[v] = ci
    succ = []
    for members in classes:
        succ.append(tuple(sorted({owner[w] for w in iter_bits(g.out_mask(members[0]))})))
    return TwinQuotient(tuple(classes), tuple(succ))


def _shortest_return(succ, c, limit):
    # length of the shortest closed walk through class c (None if none within limit)
    seen = {c}
    frontier = [c]
    for d in range(1, limit + 1):
        nxt = []
        for u in frontier:
            for w in succ[u]:
                if w == c:
                    return d
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
        if not frontier:
            return None
    return None


def quotient_state_bound(q: TwinQuotient, length: int) -> int:
    """Rough upper bound on DP states per layer, used by engine selection."""
    caps = _capacities(q, length)
    bound = len(q.classes)
    for cap in caps.values():
        bound *= cap + 1
    return bound


def _capacities(q: TwinQuotient, length: int) -> dict[int, int]:
    """Classes whose multiplicity can bind, mapped to their size."""
    caps = {}
    for c, members in enumerate(q.classes):
        g_c = _shortest_return(q.succ, c, length)
        if g_c is None:
            continue
        if len(members) < length // g_c:
            caps[c] = len(members)
    return caps


def quotient_cycle(g: OrientedGraph, length: int, budget: int = 10**8, merge: bool = True,
                   q: TwinQuotient | None = None):
    """Return a cycle of exactly ``length`` vertices as a vertex list, or None.

    The returned cycle starts at its smallest quotient class and is otherwise
    determined by ascending exploration order, so it is reproducible.
    """
    if q is None:
        q = twin_quotient(g, merge)
    caps = _capacities(q, length)
    live = {c for c in range(len(q.classes)) if _shortest_return(q.succ, c, length) is not None}
    slot = {c: i for i, c in enumerate(sorted(caps))}
    work = 0
    for s in sorted(live):
        # walks whose smallest class is s: only classes >= s may appear
        start_counts = [0] * len(slot)
        if s in slot:
            start_counts[slot[s]] = 1
        start = (s, tuple(start_counts))
        layers = [{start: None}]
        for step in range(1, length):
            cur = layers[-1]
            nxt: dict = {}
            for state in cur:
                u, counts = state
                for w in q.succ[u]:
                    if w < s or w not in live:
                        continue
                    if w in slot:
                        i = slot[w]
                        if counts[i] >= caps[w]:
                            continue
                        nc = counts[:i] + (counts[i] + 1,) + counts[i + 1:]
                    else:
                        nc = counts
                    key = (w, nc)
                    if key not in nxt:
                        nxt[key] = state
                        work += 1
                        if work > budget:
                            raise SearchBudgetExceeded(budget, "quotient cycle search")
            if not nxt:
                break
            layers.append(nxt)
        if len(layers) < length:
            continue
        for state in layers[-1]:
            if s in q.succ[state[0]]:
                walk = [state]
                for layer in range(length - 1, 0, -1):
                    walk.append(layers[layer][walk[-1]])
                walk.reverse()
                return _lift([st[0] for st in walk], q)
    return None


def _lift(class_walk, q: TwinQuotient) -> list[int]:
    used = [0] * len(q.classes)
    out = []
    for c in class_walk:
        out.append(q.classes[c][used[c]])
        used[c] += 1
    return out
