"""Residue arithmetic in Z_k: sumsets, stabilizers and subset-sum certificates.

Sets are stored as k-bit masks, so a translate ``x + A`` is a cyclic rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptySet, InternalInvariantViolation, ModulusMismatch, PreconditionViolation
from .homomorphism import k_of

MAX_MODULUS = 64


def _rot(mask: int, x: int, k: int) -> int:
    full = (1 << k) - 1
    x %= k
    return ((mask << x) | (mask >> (k - x))) & full


@dataclass(frozen=True)
class ResidueSet:
    k: int
    mask: int

    @classmethod
    def of(cls, k: int, members: Iterable[int]) -> "ResidueSet":
        if not 2 <= k <= MAX_MODULUS:
            raise PreconditionViolation(f"modulus must lie in [2,{MAX_MODULUS}], got {k}")
        m = 0
        for x in members:
            m |= 1 << (int(x) % k)
        return cls(k, m)

    @classmethod
    def full(cls, k: int) -> "ResidueSet":
        return cls(k, (1 << k) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.k) if (self.mask >> x) & 1)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, x):
        return bool((self.mask >> (x % self.k)) & 1)

    def __iter__(self):
        return iter(self.members)

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class ResidueMultiset:
    k: int
    elements: tuple[int, ...]

    @classmethod
    def of(cls, k: int, elements: Iterable[int]) -> "ResidueMultiset":
        els = tuple(sorted(int(x) for x in elements))
        for x in els:
            if not 1 <= x < k:
                raise PreconditionViolation(f"multiset elements must be non-zero residues in [1,{k}), got {x}")
        return cls(k, els)

    def __len__(self):
        return len(self.elements)


def _check_pair(a: ResidueSet, b: ResidueSet) -> None:
    if a.k != b.k:
        raise ModulusMismatch(f"moduli differ: {a.k} vs {b.k}")
    if not a.mask or not b.mask:
        raise EmptySet("sumset operands must be nonempty")


def sumset_mask(a: int, b: int, k: int) -> int:
    out = 0
    x = 0
    while b:
        if b & 1:
            out |= _rot(a, x, k)
        b >>= 1
        x += 1
    return out


def sumset(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    _check_pair(a, b)
    return ResidueSet(a.k, sumset_mask(a.mask, b.mask, a.k))


def stabilizer(s: ResidueSet) -> ResidueSet:
    if not s.mask:
        raise EmptySet("stabilizer of the empty set is undefined here")
    m = 0
    for x in range(s.k):
        if _rot(s.mask, x, s.k) == s.mask:
            m |= 1 << x
    return ResidueSet(s.k, m)


def kneser_holds(a: ResidueSet, b: ResidueSet) -> bool:
    """Check |A+B| >= |A+H| + |B+H| - |H| with H the stabilizer of A+B."""
    ab = sumset(a, b)
    h = stabilizer(ab)
    return len(ab) >= len(sumset(a, h)) + len(sumset(b, h)) - len(h)


# -- reachable residues --------------------------------------------------------

@dataclass(frozen=True)
class ReachOutcome:
    k: int
    target: int
    target_reachable: bool
    certificate: tuple[int, ...] | None  # chosen residue per input set, 0 = skipped
    reachable: ResidueSet                # full sumset of the B_i = A_i u {0}
    nonzero: tuple[int, ...]

    def summary(self) -> str:
        if self.target_reachable:
            picks = " ".join(map(str, self.certificate))
            return f"target {self.target} reachable via picks {picks}"
        return "target {} unreachable; non-zero reachable {}".format(
            self.target, " ".join(map(str, self.nonzero))
        )


def _validate_modulus(k: int, ell: int) -> None:
    kk = k_of(ell)
    if kk != k:
        raise PreconditionViolation(f"k={k} is not the smallest integer > 2 not dividing {ell} (that is {kk})")
    if k < 5:
        raise PreconditionViolation(f"the residue guarantee needs k >= 5, got k={k} for ell={ell}")


def reachable_residues(sets: Sequence[ResidueSet], ell: int, check_modulus: bool = True) -> ReachOutcome:
    """Sum of the sets ``A_i u {0}`` with a pick-per-set certificate for ``ell mod k``.

    When the target is missed, the number of non-zero reachable residues is
    at least ``min(sum |A_i|, k-1)``; that bound is asserted.
    """
    if not sets:
        raise EmptySet("need at least one residue set")
    k = sets[0].k
    for a in sets:
        if a.k != k:
            raise ModulusMismatch(f"moduli differ: {k} vs {a.k}")
        if not a.mask:
            raise EmptySet("residue sets must be nonempty")
        if a.mask & 1:
            raise PreconditionViolation("residue sets must not contain 0")
    if check_modulus:
        _validate_modulus(k, ell)
    target = ell % k
    # parents[i][r] = residue picked from set i to first reach r after i+1 sets
    reach = {0: None}
    layers = []
    for a in sets:
        nxt = dict.fromkeys(reach, 0)
        for r in sorted(reach):
            for x in a.members:
                nxt.setdefault((r + x) % k, x)
        layers.append(nxt)
        reach = nxt
    mask = 0
    for r in reach:
        mask |= 1 << r
    nonzero = tuple(sorted(r for r in reach if r))
    if target in reach:
        picks = []
        r = target
        for nxt in reversed(layers):
            x = nxt[r]
            picks.append(x)
            r = (r - x) % k
        if r != 0:
            raise InternalInvariantViolation("certificate reconstruction failed")
        cert = tuple(reversed(picks))
        return ReachOutcome(k, target, True, cert, ResidueSet(k, mask), nonzero)
    need = min(sum(len(a) for a in sets), k - 1)
    if len(nonzero) < need:
        raise InternalInvariantViolation(
            f"only {len(nonzero)} non-zero residues reachable, guaranteed at least {need}"
        )
    return ReachOutcome(k, target, False, None, ResidueSet(k, mask), nonzero)


# -- subset sums -----------------------------------------------------------------

def subset_sum_residue(s: ResidueMultiset, ell: int, check_size: bool = True) -> tuple[int, ...]:
    """Smallest sub-multiset of ``s`` whose sum is congruent to ``ell`` mod k.

    Among subsets of equal size the one found first when scanning elements in
    sorted order wins. Failure is impossible for |s| = k-1 and is reported as
    an internal error.
    """
    k = s.k
    _validate_modulus(k, ell)
    if check_size and len(s) != k - 1:
        raise PreconditionViolation(f"multiset must have k-1 = {k - 1} elements, got {len(s)}")
    target = ell % k
    # best[r] = shortest index tuple reaching residue r
    best: dict[int, tuple[int, ...]] = {0: ()}
    for i, x in enumerate(s.elements):
        for r, picks in sorted(best.items()):
            nr = (r + x) % k
            cand = picks + (i,)
            old = best.get(nr)
            if old is None or len(cand) < len(old):
                best[nr] = cand
    if target not in best:
        raise InternalInvariantViolation(f"no sub-multiset of {s.elements} sums to {target} mod {k}")
    chosen = tuple(s.elements[i] for i in best[target])
    if sum(chosen) % k != target:
        raise InternalInvariantViolation("subset sum certificate is wrong")
    return chosen


def brute_subset_sum_exists(elements: Sequence[int], k: int, target: int) -> bool:
    n = len(elements)
    return any(sum(elements[i] for i in range(n) if (m >> i) & 1) % k == target % k for m in range(1 << n))
