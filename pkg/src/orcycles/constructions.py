"""Extremal C_ell-free generators built from blow-ups of directed cycles.

All semidegree constructions start from a balanced blow-up of C_k with blobs
P_0, ..., P_{k-1} (blob j occupies a consecutive block of vertex ids) and
apply local maneuvers. Each maneuver deletes blob vertices and compensates the
lost degree with new vertices or extra edges into whole blobs, for a net loss
of exactly one vertex.

Why the result is C_ell-free: give every vertex of P_j (and each maneuver
vertex replacing a vertex of P_j) the potential j. A blob edge raises the
potential by one; a maneuver edge raises it by ``1 - e`` for some excess e.
Around a directed cycle the potentials cancel, so its length is congruent to
the total excess mod k. Maneuver vertices and anchors are visited at most
once, so cycle lengths mod k lie in the sumset of the per-maneuver shift sets,
which the plan checks does not contain ell mod k.

Maneuver catalogue (d, s are blob offsets, base blob a):

* middle(d): delete one vertex of P_a and one of P_{a+d}; a new vertex takes
  all of P_{a-1} and P_{a+d-1} as in-neighbours and all of P_{a+1} and
  P_{a+d+1} as out-neighbours. Shifts {0, d, -d}. Needs d != +-2 mod k.
* skip(s_u, s_v): delete one vertex of P_a; an anchor u in P_{a-s_u} gains
  all of P_{a-1} as in-neighbours and an anchor v in P_{a+s_v} gains all of
  P_{a+1} as out-neighbours. Shifts {0, s_u, s_v, s_u+s_v}. Needs 3 <= s <= k-1.
* even-second (k = 4 only): delete one vertex from each of P_0, P_1, P_2 and
  add m0, m1 with P_0, P_1 -> m0 -> P_3, P_3 -> m1 -> P_1, P_2 and m1 -> m0.
  Shifts {0, 2, 3}.
* out-anchor(s): delete one vertex of P_a; an anchor u in P_{a-s} gains all
  of P_{a-1} as in-neighbours. Only outdegrees are preserved. Shifts {0, s}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .additive import sumset_mask
from .errors import InfeasibleN, InternalInvariantViolation, UnsupportedLength
from .graph import OrientedGraph, blow_up, degree_summary, directed_cycle
from .homomorphism import k_of


class ManeuverKind(enum.Enum):
    ODD_FIRST = "OddFirst"
    ODD_SECOND = "OddSecond"
    ODD_THIRD = "OddThird"
    ODD_NEAR = "OddNear"
    ODD_BACK = "OddBack"
    EVEN_FIRST = "EvenFirst"
    EVEN_SECOND = "EvenSecond"
    OUT_FIRST = "OutFirst"
    OUT_SECOND = "OutSecond"

    @property
    def vertex_delta(self) -> int:
        return -1

    def shape(self, k: int):
        """(family, parameters) realising this kind for modulus k."""
        h = (k - 1) // 2
        table = {
            ManeuverKind.ODD_FIRST: ("middle", (h,)),
            ManeuverKind.ODD_SECOND: ("skip", (h, h)),
            ManeuverKind.ODD_THIRD: ("skip", (h + 1, h + 1)),
            ManeuverKind.ODD_NEAR: ("middle", (1,)),
            ManeuverKind.ODD_BACK: ("skip", (k - 1, k - 1)),
            ManeuverKind.EVEN_FIRST: ("middle", (1,)),
            ManeuverKind.EVEN_SECOND: ("even-second", ()),
            ManeuverKind.OUT_FIRST: ("out-anchor", ((k + 1) // 2,)),
            ManeuverKind.OUT_SECOND: ("out-anchor", (k // 2,)),
        }
        return table[self]

    def feasible(self, k: int) -> bool:
        family, params = self.shape(k)
        if family == "middle":
            (d,) = params
            return k >= 4 and d % k not in (0, 2 % k, (k - 2) % k)
        if family == "skip":
            return all(3 <= s <= k - 1 for s in params)
        if family == "out-anchor":
            return k >= 4 and 3 <= params[0] <= k - 1
        return k == 4

    def shifts(self, k: int) -> frozenset[int]:
        family, params = self.shape(k)
        if family == "middle":
            (d,) = params
            return frozenset({0, d % k, (-d) % k})
        if family == "skip":
            su, sv = params
            return frozenset({0, su % k, sv % k, (su + sv) % k})
        if family == "out-anchor":
            return frozenset({0, params[0] % k})
        return frozenset({0, 2, 3})


@dataclass(frozen=True)
class ConstructionPlan:
    ell: int
    k: int
    n: int
    branch: str
    maneuver_counts: tuple[tuple[str, int], ...]
    start_size: int
    blob_size: int
    degree_target: int
    degree_kind: str                      # "semidegree" or "outdegree"
    residues: tuple[int, ...]             # attainable cycle lengths mod k
    notes: tuple[str, ...] = ()

    @property
    def target_residue(self) -> int:
        return self.ell % self.k

    @property
    def total_maneuvers(self) -> int:
        return sum(c for _, c in self.maneuver_counts)

    def count(self, kind: ManeuverKind) -> int:
        return dict(self.maneuver_counts).get(kind.value, 0)

    def audit(self) -> str:
        counts = ",".join(f"{name}:{c}" for name, c in self.maneuver_counts if c) or "none"
        lines = [
            f"plan.ell={self.ell}",
            f"plan.k={self.k}",
            f"plan.n={self.n}",
            f"plan.branch={self.branch}",
            f"plan.maneuvers={counts}",
            f"plan.start_size={self.start_size}",
            f"plan.blob_size={self.blob_size}",
            f"plan.{self.degree_kind}={self.degree_target}",
            f"plan.residues={','.join(map(str, self.residues))}",
            f"plan.target_residue={self.target_residue}",
        ]
        lines.extend(f"plan.note={note}" for note in self.notes)
        return "\n".join(lines) + "\n"


@dataclass
class BuiltConstruction:
    graph: OrientedGraph
    plan: ConstructionPlan
    blobs: tuple[tuple[int, ...], ...]   # surviving blob members, final labels
    extra: tuple[int, ...]               # maneuver vertices, final labels
    anchors: tuple[int, ...] = field(default=())


# -- plain families ------------------------------------------------------------

def balanced_blowup_ck(k: int, b: int) -> OrientedGraph:
    if k < 3:
        raise UnsupportedLength(f"k must be at least 3, got {k}")
    if b < 1:
        raise InfeasibleN(f"part size must be positive, got {b}")
    return blow_up(directed_cycle(k), [b] * k)


def construct_c6_bipartite_blob(n: int) -> OrientedGraph:
    """Balanced blow-up of C_4 whose blob 0 also carries a one-way K_{n/8,n/8}:
    the first half of blob 0 sends every edge to the second half."""
    if n <= 0 or n % 8:
        raise InfeasibleN(f"n must be a positive multiple of 8, got {n}")
    b = n // 4
    h = n // 8
    base = balanced_blowup_ck(4, b)
    extra = [(i, h + j) for i in range(h) for j in range(h)]
    return OrientedGraph(n, list(base.edges) + extra)


# -- plan resolution -------------------------------------------------------------

def _odd_counts(ell: int, k: int):
    """Branch name and counts per maneuver kind for odd k (before k=5 fixes)."""
    r = ell % k
    F, S, T = ManeuverKind.ODD_FIRST, ManeuverKind.ODD_SECOND, ManeuverKind.ODD_THIRD
    if 4 * r == k or 2 * r == k or 4 * r == 3 * k:
        raise InternalInvariantViolation(f"interval endpoint hit for odd k={k}, residue {r}")
    if 4 * r < k:
        return "odd-1", {F: 2 * r - 1, S: (k - 1) // 2 - 2 * r}
    if 2 * r < k:
        return "odd-2", {F: k - 1 - 2 * r, T: 2 * r - (k + 1) // 2}
    if 4 * r < 3 * k:
        return "odd-3", {F: 2 * r - k - 1, S: (3 * k - 1) // 2 - 2 * r}
    return "odd-4", {F: 2 * k - 1 - 2 * r, T: 2 * r - (3 * k + 1) // 2}


# Replacements for k = 5, where the middle(2) and skip(2, 2) gadgets would need
# antiparallel edges. Each uses one maneuver and avoids the target residue.
_K5_SUBSTITUTES = {
    1: ManeuverKind.ODD_BACK,
    2: ManeuverKind.ODD_THIRD,
    3: ManeuverKind.ODD_NEAR,
    4: ManeuverKind.ODD_THIRD,
}


def _residue_closure(k: int, kinds: dict[ManeuverKind, int]) -> tuple[int, ...]:
    mask = 1
    for kind, c in kinds.items():
        m = 0
        for x in kind.shifts(k):
            m |= 1 << x
        for _ in range(c):
            mask = sumset_mask(mask, m, k)
    return tuple(x for x in range(k) if (mask >> x) & 1)


def _ordered_counts(kinds: dict[ManeuverKind, int]) -> tuple[tuple[str, int], ...]:
    return tuple((kind.value, kinds.get(kind, 0)) for kind in ManeuverKind if kinds.get(kind, 0))


def semidegree_plan_shape(ell: int):
    """(k, branch, counts, removed, notes, degree numerator offset) for the semidegree family."""
    if ell < 4:
        raise UnsupportedLength(f"ell must be at least 4, got {ell}")
    k = k_of(ell)
    r = ell % k
    notes: list[str] = []
    if k % 2:
        branch, counts = _odd_counts(ell, k)
        if sum(counts.values()) != (k - 3) // 2:
            raise InternalInvariantViolation("odd-k maneuver total differs from (k-3)/2")
        if any(not kind.feasible(k) for kind, c in counts.items() if c):
            if k != 5:
                raise InternalInvariantViolation(f"infeasible maneuver for k={k}")
            sub = _K5_SUBSTITUTES[r]
            notes.append(f"k=5 substitution: {sub.value} replaces " + "+".join(
                f"{c}x{kind.value}" for kind, c in counts.items() if c))
            counts = {sub: 1}
        return k, branch, counts, (k - 3) // 2, notes
    if 2 * r == k:
        return k, "even-half", {ManeuverKind.EVEN_FIRST: (k - 2) // 2}, (k - 2) // 2, notes
    if k != 4:
        raise UnsupportedLength(f"no construction for ell={ell} with even k={k}, residue {r}")
    if ell % 4 == 1:
        return k, "even-1mod4", {ManeuverKind.EVEN_SECOND: 1}, 1, notes
    return k, "even-3mod4", {}, 0, notes


def outdegree_plan_shape(ell: int):
    if ell < 4:
        raise UnsupportedLength(f"ell must be at least 4, got {ell}")
    k = k_of(ell)
    if ell % 3:
        raise UnsupportedLength(f"the outdegree family needs 3 | ell, got ell={ell}")
    if k % 2 == 0:
        raise UnsupportedLength(f"the outdegree family is implemented for odd k only (ell={ell} gives k={k})")
    r = ell % k
    F, S = ManeuverKind.OUT_FIRST, ManeuverKind.OUT_SECOND
    if 2 * r < k:
        branch, counts = "outdeg-low", {F: 2 * r - 1, S: k - 2 * r - 1}
    else:
        branch, counts = "outdeg-high", {F: 2 * r - k - 1, S: 2 * k - 2 * r - 1}
    if sum(counts.values()) != k - 2:
        raise InternalInvariantViolation("outdegree maneuver total differs from k-2")
    bad = [kind.value for kind, c in counts.items() if c and not kind.feasible(k)]
    if bad:
        raise UnsupportedLength(
            f"ell={ell} (k={k}, residue {r}) needs {', '.join(bad)}, whose anchor offset "
            f"{k // 2} would force antiparallel edges when k={k}; no substitute gadget is known"
        )
    return k, branch, counts, k - 2


# -- gadget placement ---------------------------------------------------------------

class _Builder:
    """Mutable blob layout; all edges validated by OrientedGraph at the end."""

    def __init__(self, k: int, b: int):
        self.k = k
        self.b = b
        self.blob_of = {}
        self.members = [[j * b + i for i in range(b)] for j in range(k)]
        for j in range(k):
            for v in self.members[j]:
                self.blob_of[v] = j
        self.next_id = k * b
        self.removed: set[int] = set()
        self.reserved: set[int] = set()
        self.new_vertices: list[int] = []
        self.extra_edges: list[tuple[str, int, int]] = []  # ("blob->v" | "v->blob" | "v->v", x, y)
        self.anchors: list[int] = []

    def _take(self, blob: int) -> int:
        # highest unused index is removed; anchors are taken lowest-first
        for v in reversed(self.members[blob]):
            if v not in self.removed and v not in self.reserved:
                self.removed.add(v)
                return v
        raise InfeasibleN(f"blob {blob} ran out of vertices")

    def _anchor(self, blob: int) -> int:
        for v in self.members[blob]:
            if v not in self.removed and v not in self.reserved:
                self.reserved.add(v)
                self.anchors.append(v)
                return v
        raise InfeasibleN(f"blob {blob} ran out of anchor vertices")

    def _new(self) -> int:
        v = self.next_id
        self.next_id += 1
        self.new_vertices.append(v)
        return v

    def apply(self, kind: ManeuverKind, a: int) -> None:
        k = self.k
        family, params = kind.shape(k)
        if family == "middle":
            (d,) = params
            self._take(a % k)
            self._take((a + d) % k)
            m = self._new()
            for src in ((a - 1) % k, (a + d - 1) % k):
                self.extra_edges.append(("blob->v", src, m))
            for dst in ((a + 1) % k, (a + d + 1) % k):
                self.extra_edges.append(("v->blob", m, dst))
        elif family == "skip":
            su, sv = params
            self._take(a % k)
            u = self._anchor((a - su) % k)
            v = self._anchor((a + sv) % k)
            self.extra_edges.append(("blob->v", (a - 1) % k, u))
            self.extra_edges.append(("v->blob", v, (a + 1) % k))
        elif family == "out-anchor":
            (s,) = params
            self._take(a % k)
            u = self._anchor((a - s) % k)
            self.extra_edges.append(("blob->v", (a - 1) % k, u))
        else:  # even-second, k == 4
            for j in (0, 1, 2):
                self._take((a + j) % 4)
            m0 = self._new()
            m1 = self._new()
            self.extra_edges += [
                ("blob->v", a % 4, m0), ("blob->v", (a + 1) % 4, m0), ("v->blob", m0, (a + 3) % 4),
                ("blob->v", (a + 3) % 4, m1), ("v->blob", m1, (a + 1) % 4), ("v->blob", m1, (a + 2) % 4),
                ("v->v", m1, m0),
            ]

    def usage(self) -> list[int]:
        use = [0] * self.k
        for v in self.removed | self.reserved:
            use[self.blob_of[v]] += 1
        return use

    def finish(self):
        k = self.k
        alive = [[v for v in self.members[j] if v not in self.removed] for j in range(k)]
        order = [v for blob in alive for v in blob] + self.new_vertices
        label = {v: i for i, v in enumerate(order)}
        edges = []
        for j in range(k):
            nxt = alive[(j + 1) % k]
            for u in alive[j]:
                edges.extend((label[u], label[w]) for w in nxt)
        for tag, x, y in self.extra_edges:
            if tag == "blob->v":
                edges.extend((label[u], label[y]) for u in alive[x])
            elif tag == "v->blob":
                edges.extend((label[x], label[w]) for w in alive[y])
            else:
                edges.append((label[x], label[y]))
        g = OrientedGraph(len(order), edges)
        blobs = tuple(tuple(label[v] for v in blob) for blob in alive)
        extra = tuple(label[v] for v in self.new_vertices)
        anchors = tuple(sorted(label[v] for v in self.anchors))
        return g, blobs, extra, anchors


def _expand(counts: dict[ManeuverKind, int]) -> list[ManeuverKind]:
    seq = []
    for kind in ManeuverKind:
        seq.extend([kind] * counts.get(kind, 0))
    return seq


def _place(k: int, b: int, counts: dict[ManeuverKind, int]) -> _Builder:
    builder = _Builder(k, b)
    # maneuver i uses base blob i mod k
    for i, kind in enumerate(_expand(counts)):
        builder.apply(kind, i % k)
    return builder


def _min_blob(k: int, counts: dict[ManeuverKind, int]) -> int:
    """Smallest blob size that leaves every blob a vertex untouched by maneuvers."""
    b = 1
    while True:
        try:
            builder = _place(k, b, counts)
        except InfeasibleN:
            b += 1
            continue
        if all(u < b for u in builder.usage()):
            return b
        b += 1


def _admissible_message(ell, k, offset, min_n, what):
    res = (-offset) % k
    return (f"{what} for ell={ell} (k={k}) needs n = {res} mod {k} and n >= {min_n}")


def admissible_sizes(ell: int, limit: int, outdegree: bool = False) -> list[int]:
    """All n <= limit accepted by the corresponding constructor."""
    out = []
    for n in range(1, limit + 1):
        try:
            _resolve(ell, n, outdegree)
        except InfeasibleN:
            continue
        out.append(n)
    return out


def _resolve(ell: int, n: int, outdegree: bool):
    if outdegree:
        k, branch, counts, removed = outdegree_plan_shape(ell)
        notes: list[str] = []
        kind_name = "outdegree"
    else:
        k, branch, counts, removed, notes = semidegree_plan_shape(ell)
        kind_name = "semidegree"
    start = n + removed
    min_b = _min_blob(k, counts)
    if start % k or start // k < min_b:
        raise InfeasibleN(_admissible_message(ell, k, removed, min_b * k - removed, f"the {kind_name} construction"))
    return k, branch, counts, removed, notes, start, kind_name


def _build(ell: int, n: int, outdegree: bool) -> BuiltConstruction:
    k, branch, counts, removed, notes, start, kind_name = _resolve(ell, n, outdegree)
    b = start // k
    builder = _place(k, b, counts)
    g, blobs, extra, anchors = builder.finish()
    residues = _residue_closure(k, counts)
    plan = ConstructionPlan(
        ell=ell, k=k, n=n, branch=branch, maneuver_counts=_ordered_counts(counts),
        start_size=start, blob_size=b, degree_target=b, degree_kind=kind_name,
        residues=residues, notes=tuple(notes),
    )
    # bookkeeping identities
    if g.n != start - plan.total_maneuvers or g.n != n:
        raise InternalInvariantViolation(f"built {g.n} vertices, expected {n}")
    if ell % k in residues:
        raise InternalInvariantViolation(f"target residue {ell % k} is attainable in plan {residues}")
    summary = degree_summary(g)
    got = summary.min_outdegree if outdegree else summary.min_semidegree
    if got != b:
        raise InternalInvariantViolation(f"{kind_name} {got} differs from the target {b}")
    return BuiltConstruction(g, plan, blobs, extra, anchors)


def build_semidegree_extremal(ell: int, n: int) -> BuiltConstruction:
    return _build(ell, n, outdegree=False)


def build_outdegree_extremal(ell: int, n: int) -> BuiltConstruction:
    return _build(ell, n, outdegree=True)


def construct_semidegree_extremal(ell: int, n: int) -> tuple[OrientedGraph, ConstructionPlan]:
    """n-vertex C_ell-free graph whose minimum semidegree equals the extremal value.

    The value is n/k + (k-3)/(2k) for odd k, n/k + (k-2)/(2k) for even k with
    ell not 3 mod 4, and n/4 when ell = 3 mod 4, where k = k_of(ell).
    """
    built = build_semidegree_extremal(ell, n)
    return built.graph, built.plan


def construct_outdegree_extremal(ell: int, n: int) -> tuple[OrientedGraph, ConstructionPlan]:
    """n-vertex C_ell-free graph with minimum outdegree n/k + (k-2)/k (odd k, 3 | ell)."""
    built = build_outdegree_extremal(ell, n)
    return built.graph, built.plan


def extremal_value(ell: int, n: int, outdegree: bool = False) -> Fraction:
    """Closed-form degree value the constructions attain (may be fractional for bad n)."""
    k = k_of(ell)
    if outdegree:
        return Fraction(n, k) + Fraction(k - 2, k)
    if k % 2:
        return Fraction(n, k) + Fraction(k - 3, 2 * k)
    if ell % 4 == 3 and k == 4:
        return Fraction(n, 4)
    return Fraction(n, k) + Fraction(k - 2, 2 * k)
