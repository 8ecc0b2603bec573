"""Homomorphisms to directed cycles, oriented cycle words, and the graphs D, D^l."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InternalInvariantViolation, ParseError, PreconditionViolation, SearchBudgetExceeded
from .graph import OrientedGraph, blow_up, directed_cycle


def k_of(t: int) -> int:
    """Smallest integer j > 2 with t mod j != 0."""
    if t < 1:
        raise PreconditionViolation(f"k_of needs a positive integer, got {t}")
    j = 3
    while t % j == 0:
        j += 1
    return j


# -- C_k labelings -------------------------------------------------------------

@dataclass(frozen=True)
class CkLabeling:
    k: int
    labels: tuple[int, ...]

    def validate(self, g: OrientedGraph) -> None:
        for u, v in g.edges:
            if (self.labels[v] - self.labels[u]) % self.k != 1:
                raise InternalInvariantViolation(f"edge {u}->{v} breaks the C_{self.k} labeling")


def hom_to_ck(g: OrientedGraph, k: int) -> CkLabeling | None:
    """Label vertices by Z_k so that every edge advances the label by one.

    Potentials are propagated from the smallest vertex of each weak component;
    the map exists iff no edge is inconsistent with them.
    """
    if k < 3:
        raise PreconditionViolation(f"k must be at least 3, got {k}")
    labels = [-1] * g.n
    for root in range(g.n):
        if labels[root] >= 0:
            continue
        labels[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.out_lists[v]:
                want = (labels[v] + 1) % k
                if labels[w] < 0:
                    labels[w] = want
                    queue.append(w)
                elif labels[w] != want:
                    return None
            for w in g.in_lists[v]:
                want = (labels[v] - 1) % k
                if labels[w] < 0:
                    labels[w] = want
                    queue.append(w)
                elif labels[w] != want:
                    return None
    lab = CkLabeling(k, tuple(labels))
    lab.validate(g)
    return lab


def brute_force_hom_to_ck(g: OrientedGraph, k: int) -> bool:
    """Try all k^n labelings at once (numpy). Oracle for small n only."""
    if g.n == 0:
        return True
    grids = np.indices((k,) * g.n, dtype=np.int16).reshape(g.n, -1)
    ok = np.ones(grids.shape[1], dtype=bool)
    for u, v in g.edges:
        ok &= (grids[v] - grids[u]) % k == 1
    return bool(ok.any())


# -- oriented cycle words ------------------------------------------------------

@dataclass(frozen=True)
class OrientedCycleWord:
    """Cyclic word over {+1, -1}; entry i orients the edge between positions i and i+1."""

    word: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) < 3:
            raise PreconditionViolation(f"cycle words need length >= 3, got {len(self.word)}")
        if any(x not in (1, -1) for x in self.word):
            raise PreconditionViolation("cycle word entries must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> "OrientedCycleWord":
        text = text.strip()
        bad = set(text) - {"+", "-"}
        if bad or not text:
            raise ParseError(f"cycle word must be a string over '+' and '-', got {text!r}")
        return cls(tuple(1 if ch == "+" else -1 for ch in text))

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return "".join("+" if x > 0 else "-" for x in self.word)

    def as_graph(self) -> OrientedGraph:
        L = len(self.word)
        edges = [(i, (i + 1) % L) if x > 0 else ((i + 1) % L, i) for i, x in enumerate(self.word)]
        return OrientedGraph(L, edges)

    def canonical(self) -> "OrientedCycleWord":
        """Least rotation; two words name the same rooted-free cycle iff these agree."""
        w = self.word
        return OrientedCycleWord(min(w[i:] + w[:i] for i in range(len(w))))

    def normalize(self) -> "OrientedCycleWord":
        """Least rotation of the word or of its reversed, sign-flipped reading.

        Both readings describe the same oriented graph walked in opposite directions.
        """
        flipped = OrientedCycleWord(tuple(-x for x in reversed(self.word)))
        return min(self.canonical(), flipped.canonical(), key=lambda c: c.word)


def cycle_type(c: OrientedCycleWord) -> int:
    return abs(sum(c.word))


def all_cycle_words(length: int):
    """Every word of the given length (as tuples), in lexicographic order of '+' < '-'."""
    for bits in range(1 << length):
        yield OrientedCycleWord(tuple(-1 if (bits >> (length - 1 - i)) & 1 else 1 for i in range(length)))


# -- D and D^l -----------------------------------------------------------------

D_WORD = "++++-"
D_SOURCE = 0
D_SINK = 4


def build_d() -> OrientedGraph:
    """The 4-shortcut 0->1->2->3->4 with chord 0->4."""
    return OrientedCycleWord.parse(D_WORD).as_graph()


def build_d_ell(ell: int) -> OrientedGraph:
    """D with an ell-edge path leaving the sink and an ell-edge path entering the source.

    Vertices 5..4+ell continue from the sink; the next ell vertices lead into
    the source, numbered in path order.
    """
    if ell < 1:
        raise PreconditionViolation(f"ell must be positive, got {ell}")
    edges = list(build_d().edges)
    prev = D_SINK
    for i in range(ell):
        v = 5 + i
        edges.append((prev, v))
        prev = v
    tail = [5 + ell + i for i in range(ell)]
    for a, b in zip(tail, tail[1:] + [D_SOURCE]):
        edges.append((a, b))
    return OrientedGraph(5 + 2 * ell, edges)


# -- embeddings ------------------------------------------------------------------

def _twin_ids(g: OrientedGraph) -> list[int]:
    ids: dict[tuple[int, int], int] = {}
    return [ids.setdefault((g.out_mask(v), g.in_mask(v)), len(ids)) for v in range(g.n)]


def find_cycle_embedding(host: OrientedGraph, c: OrientedCycleWord, injective: bool = True,
                         budget: int = 10**7) -> tuple[int, ...] | None:
    """Map position i of ``c`` to host vertex ``phi[i]`` so that every edge of
    the cycle lands on a host edge with the same orientation.

    ``injective=True`` asks for a subgraph copy; ``False`` for a homomorphism.
    Backtracking over positions; in injective mode only the lowest unused
    member of each twin class is tried, which loses no solutions because
    swapping twins is an automorphism of the host.
    """
    word = c.word
    L = len(word)
    twin = _twin_ids(host)
    phi = [-1] * L
    used = bytearray(host.n)
    spent = 0

    def candidates(i: int):
        prev = phi[i - 1]
        return host.out_lists[prev] if word[i - 1] > 0 else host.in_lists[prev]

    def closes() -> bool:
        last, first = phi[L - 1], phi[0]
        return host.has_edge(last, first) if word[L - 1] > 0 else host.has_edge(first, last)

    def place(i: int) -> bool:
        nonlocal spent
        if i == L:
            return closes()
        pool = candidates(i) if i else range(host.n)
        tried_classes = set()
        for v in pool:
            if injective:
                if used[v]:
                    continue
                if twin[v] in tried_classes:
                    continue
                tried_classes.add(twin[v])
            spent += 1
            if spent > budget:
                raise SearchBudgetExceeded(budget, "cycle embedding")
            phi[i] = v
            used[v] = 1
            if place(i + 1):
                return True
            used[v] = 0
        phi[i] = -1
        return False

    if not place(0):
        return None
    result = tuple(phi)
    if injective and len(set(result)) != L:
        raise InternalInvariantViolation("embedding is not injective")
    return result


def validate_embedding(host: OrientedGraph, c: OrientedCycleWord, phi: Sequence[int], injective: bool = True) -> bool:
    L = len(c.word)
    if len(phi) != L or (injective and len(set(phi)) != L):
        return False
    for i, x in enumerate(c.word):
        a, b = phi[i], phi[(i + 1) % L]
        if not (host.has_edge(a, b) if x > 0 else host.has_edge(b, a)):
            return False
    return True


def blown_up_cycle(t: int, b: int) -> OrientedGraph:
    return blow_up(directed_cycle(t), [b] * t)
