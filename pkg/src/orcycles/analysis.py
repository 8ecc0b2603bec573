"""Blob partitions and sidewalks.

A sidewalk is a 2-edge path x -> t -> y with t exceptional and x in blob i,
y in blob j. Its value (i - j + 2) mod k is the residue it adds to a cycle
that otherwise walks forward through the blobs. Blob indices are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .cycles import CycleWitness, validate_cycle
from .errors import BlobTooSmall, IncompatibleSidewalks, NotExceptional, ParseError, PreconditionViolation
from .graph import OrientedGraph, iter_bits


@dataclass(frozen=True)
class BlobPartition:
    blobs: tuple[tuple[int, ...], ...]
    exceptional: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.blobs)

    def __post_init__(self):
        if len(self.blobs) < 3:
            raise PreconditionViolation(f"need at least 3 blobs, got {len(self.blobs)}")
        seen = set()
        for part in (*self.blobs, self.exceptional):
            for v in part:
                if v in seen:
                    raise PreconditionViolation(f"vertex {v} appears in two parts")
                seen.add(v)

    @classmethod
    def parse(cls, text: str) -> "BlobPartition":
        """k lines of blob members followed by one line (possibly empty) for T."""
        lines = text.split("\n")
        while lines and lines[-1] == "":
            lines.pop()
        if len(lines) < 4:
            raise ParseError("partition needs at least 3 blob lines and one exceptional line")
        try:
            rows = [tuple(sorted(int(x) for x in line.split())) for line in lines]
        except ValueError:
            raise ParseError("partition lines must hold whitespace-separated integers") from None
        return cls(tuple(rows[:-1]), rows[-1])

    def format(self) -> str:
        return "".join(" ".join(map(str, part)) + "\n" for part in (*self.blobs, self.exceptional))

    def blob_index(self) -> dict[int, int]:
        return {v: i for i, blob in enumerate(self.blobs) for v in blob}

    def check_cover(self, n: int) -> None:
        covered = sorted(v for part in (*self.blobs, self.exceptional) for v in part)
        if covered != list(range(n)):
            raise PreconditionViolation("partition does not cover the vertex set exactly")


@dataclass(frozen=True)
class Sidewalk:
    entry: int
    middle: int
    exit: int
    entry_blob: int
    exit_blob: int
    value: int

    def vertices(self) -> tuple[int, int, int]:
        return (self.entry, self.middle, self.exit)

    def __str__(self):
        return f"{self.entry} {self.middle} {self.exit} value={self.value}"


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def classify_blobs(g: OrientedGraph, p: BlobPartition, t: int, threshold: int | None = None):
    """(in-pointing, out-pointing) blob indices for exceptional vertex ``t``.

    Blob i is in-pointing when at least ``threshold`` of its vertices send an
    edge to t, out-pointing when at least ``threshold`` receive one. The
    default threshold is 2k.
    """
    if t not in p.exceptional:
        raise NotExceptional(f"vertex {t} is not in the exceptional set")
    thr = 2 * p.k if threshold is None else threshold
    ins, outs = [], []
    for i, blob in enumerate(p.blobs):
        bm = _mask(blob)
        if (g.in_mask(t) & bm).bit_count() >= thr:
            ins.append(i)
        if (g.out_mask(t) & bm).bit_count() >= thr:
            outs.append(i)
    return tuple(ins), tuple(outs)


def enumerate_sidewalks(g: OrientedGraph, p: BlobPartition) -> list[Sidewalk]:
    """All sidewalks, ordered by (middle, entry, exit)."""
    where = p.blob_index()
    k = p.k
    found = []
    for t in sorted(p.exceptional):
        entries = [x for x in g.in_lists[t] if x in where]
        exits = [y for y in g.out_lists[t] if y in where]
        for x in entries:
            for y in exits:
                i, j = where[x], where[y]
                found.append(Sidewalk(x, t, y, i, j, (i - j + 2) % k))
    return found


def validate_sidewalk(g: OrientedGraph, p: BlobPartition, s: Sidewalk) -> bool:
    where = p.blob_index()
    return (
        g.has_edge(s.entry, s.middle)
        and g.has_edge(s.middle, s.exit)
        and s.middle in p.exceptional
        and where.get(s.entry) == s.entry_blob
        and where.get(s.exit) == s.exit_blob
        and s.value == (s.entry_blob - s.exit_blob + 2) % p.k
    )


def check_pairwise_compatible(chosen: Sequence[Sidewalk]) -> None:
    """Two sidewalks may be disjoint or meet in one vertex that is the exit
    of one and the entry of the other."""
    for a, b in itertools.combinations(chosen, 2):
        shared = set(a.vertices()) & set(b.vertices())
        if not shared:
            continue
        if len(shared) == 1:
            (v,) = shared
            if (v == a.exit and v == b.entry) or (v == b.exit and v == a.entry):
                if v != a.middle and v != b.middle:
                    continue
        raise IncompatibleSidewalks(f"sidewalks ({a}) and ({b}) overlap illegally")


def _route_gaps(order, k, ell):
    """Per-gap blob-path lengths for a cyclic order of sidewalks, or None."""
    m = len(order)
    gaps = []
    for idx, s in enumerate(order):
        nxt = order[(idx + 1) % m]
        if nxt.entry == s.exit:
            gaps.append(0)
            continue
        g0 = (nxt.entry_blob - s.exit_blob) % k
        gaps.append(g0 if g0 else k)
    extra = ell - 2 * m - sum(gaps)
    if extra < 0 or extra % k:
        return None
    wraps = extra // k
    # spread extra laps over gaps that are real blob paths, round robin
    spots = [i for i, gp in enumerate(gaps) if gp > 0] or list(range(m))
    for w in range(wraps):
        i = spots[w % len(spots)]
        if gaps[i] == 0:
            return None  # cannot wrap through a shared vertex
        gaps[i] += k
    return gaps


def _walk_blobs(g, p, start, target, start_blob, length, used):
    """Forward blob path start -> target with ``length`` edges through fresh
    lowest-index vertices; returns the intermediate vertices or None."""
    k = p.k
    inter = []
    prev = start
    for step in range(1, length):
        blob = p.blobs[(start_blob + step) % k]
        last = step == length - 1
        pick = None
        for w in blob:
            if w in used or not g.has_edge(prev, w):
                continue
            if last and not g.has_edge(w, target):
                continue
            pick = w
            break
        if pick is None:
            return None
        used.add(pick)
        inter.append(pick)
        prev = pick
    if not g.has_edge(prev, target):
        return None
    return inter


def realize_sidewalk_combination(g: OrientedGraph, p: BlobPartition, chosen: Sequence[Sidewalk],
                                 ell: int) -> CycleWitness | None:
    """A C_ell using every chosen sidewalk once and forward blob paths between them.

    Orders of the sidewalks are tried with the first one fixed; extra laps
    around the blobs are spread over the gaps. Returns None when the residue
    or the length rules it out; raises BlobTooSmall when only blob capacity
    stands in the way.
    """
    k = p.k
    for s in chosen:
        if not validate_sidewalk(g, p, s):
            raise IncompatibleSidewalks(f"({s}) is not a sidewalk of this graph and partition")
    check_pairwise_compatible(chosen)
    if ell < 3:
        return None
    if (ell - sum(s.value for s in chosen)) % k:
        return None
    if not chosen:
        if ell % k:
            return None
        used: set[int] = set()
        start = next((v for v in p.blobs[0]), None)
        if start is None:
            raise BlobTooSmall("blob 0 is empty")
        used.add(start)
        inter = _walk_blobs(g, p, start, start, 0, ell, used)
        if inter is None:
            raise BlobTooSmall(f"blobs cannot host {ell // k} laps")
        cyc = [start] + inter
        validate_cycle(g, cyc)
        return CycleWitness(tuple(cyc))

    capacity_blocked = False
    first, rest = chosen[0], list(chosen[1:])
    for perm in itertools.permutations(rest):
        order = [first, *perm]
        gaps = _route_gaps(order, k, ell)
        if gaps is None:
            continue
        used = {v for s in order for v in s.vertices()}
        cyc: list[int] = []
        ok = True
        for idx, s in enumerate(order):
            nxt = order[(idx + 1) % len(order)]
            cyc.extend([s.entry, s.middle])
            if gaps[idx] == 0:
                continue  # next sidewalk starts at this exit
            cyc.append(s.exit)
            inter = _walk_blobs(g, p, s.exit, nxt.entry, s.exit_blob, gaps[idx], used)
            if inter is None:
                ok = False
                break
            cyc.extend(inter)
        if not ok:
            capacity_blocked = True
            continue
        validate_cycle(g, cyc)
        if len(cyc) != ell:
            continue
        return CycleWitness(tuple(cyc))
    if capacity_blocked:
        raise BlobTooSmall(f"blobs are too small to route a C_{ell} through {len(chosen)} sidewalks")
    return None


def plant_sidewalks(k: int, b: int, values: Sequence[int], width: int = 1):
    """Blow-up of C_k with one exceptional vertex per value.

    Exceptional vertex i receives edges from ``width`` vertices of blob 0 and
    sends edges to ``width`` vertices of blob (2 - value) mod k, so every
    sidewalk through it has the requested value. Planted neighbours are
    taken from the top of each blob, disjoint across exceptional vertices.
    """
    from .constructions import balanced_blowup_ck

    base = balanced_blowup_ck(k, b)
    n = k * b + len(values)
    edges = list(base.edges)
    taken = [0] * k
    blobs = tuple(tuple(range(j * b, (j + 1) * b)) for j in range(k))

    def grab(j):
        if taken[j] + width > b:
            raise BlobTooSmall(f"blob {j} cannot host {taken[j] + width} planted neighbours")
        top = blobs[j][b - taken[j] - width:b - taken[j]]
        taken[j] += width
        return top

    for i, val in enumerate(values):
        t = k * b + i
        src = grab(0)
        dst_blob = (2 - val) % k
        dst = grab(dst_blob)
        edges += [(x, t) for x in src] + [(t, y) for y in dst]
    g = OrientedGraph(n, edges)
    part = BlobPartition(blobs, tuple(range(k * b, n)))
    return g, part


def sidewalks_for_values(g: OrientedGraph, p: BlobPartition, values: Sequence[int]) -> list[Sidewalk]:
    """One sidewalk per exceptional vertex, paired in order with ``values``."""
    walks = enumerate_sidewalks(g, p)
    picked = []
    for t, val in zip(sorted(p.exceptional), values):
        cand = [s for s in walks if s.middle == t and s.value == val]
        if not cand:
            raise PreconditionViolation(f"no sidewalk of value {val} through {t}")
        picked.append(cand[0])
    return picked
