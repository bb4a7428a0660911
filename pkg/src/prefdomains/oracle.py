"""Semantics-defining brute force and seeded profile generation.

bruteforce_contains_minor enumerates minors directly from the definitions
and anchors what the fast recognizers must agree with. bruteforce_kpartition
searches group assignments exhaustively (with pruning that only skips
provably dead branches) under an explicit node budget. generate produces
profiles deterministically from a 64-bit seed.

The generator PRNG is splitmix64: state advances by 0x9E3779B97F4A7C15 and
the output mix xors-shifts by 30/27/31 with multipliers 0xBF58476D1CE4E5B9
and 0x94D049BB133111EB. Bounded draws take next() modulo the bound;
shuffles run Fisher-Yates from the top index down. Models consume draws in
the documented order so a (seed, params) pair pins the profile exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .domains import DomainId, domain_spec, is_member_subset
from .errors import BadParams
from .minors import MinorWitness, joint_minor_masks, pair_conflict
from .profiles import Profile, Vote, dedupe


@dataclass(frozen=True)
class KPartition:
    """Assignment of every vote index to one of k groups (some may be empty)."""

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise BadParams("k must be positive")
        for g in self.assignment:
            if not (0 <= g < self.k):
                raise BadParams("group index %d out of range" % g)

    def groups(self) -> tuple[tuple[int, ...], ...]:
        out: tuple[list[int], ...] = tuple([] for _ in range(self.k))
        for i, g in enumerate(self.assignment):
            out[g].append(i)
        return tuple(tuple(g) for g in out)


class BudgetExceeded:
    """Sentinel result: the search hit its node budget before deciding."""

    _instance: "BudgetExceeded | None" = None

    def __new__(cls) -> "BudgetExceeded":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BUDGET_EXCEEDED"


BUDGET_EXCEEDED = BudgetExceeded()

DEFAULT_BUDGET = 10**8


MODELS = ("impartial", "sp-union", "gs-union", "catgs-union")


@dataclass(frozen=True)
class GenParams:
    """Seeded generation request: k groups of n votes over m candidates."""

    n: int
    m: int
    k: int
    seed: int
    model: str

    def __post_init__(self) -> None:
        if self.n < 0:
            raise BadParams("n must be nonnegative")
        if self.m < 1:
            raise BadParams("m must be positive")
        if self.k < 1:
            raise BadParams("k must be positive")
        if not (0 <= self.seed < 2**64):
            raise BadParams("seed must fit in 64 bits")
        if self.model not in MODELS:
            raise BadParams("model must be one of %s" % (MODELS,))


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The fixed generator documented in the module docstring."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _vote_impartial(rng: SplitMix64, m: int) -> Vote:
    order = list(range(m))
    rng.shuffle(order)
    return tuple(order)


def _votes_sp_group(rng: SplitMix64, n: int, m: int) -> list[Vote]:
    # one shuffled axis per group; each vote picks a peak and walks outward,
    # drawing the next frontier end with one coin per contested step
    axis = list(range(m))
    rng.shuffle(axis)
    votes = []
    for _ in range(n):
        peak = rng.below(m)
        left, right = peak - 1, peak + 1
        seq = [axis[peak]]
        while left >= 0 and right < m:
            if rng.below(2) == 0:
                seq.append(axis[left])
                left -= 1
            else:
                seq.append(axis[right])
                right += 1
        while left >= 0:
            seq.append(axis[left])
            left -= 1
        while right < m:
            seq.append(axis[right])
            right += 1
        votes.append(tuple(seq))
    return votes


def _votes_gs_group(rng: SplitMix64, n: int, m: int) -> list[Vote]:
    # one random ordered tree per group (leaves = shuffled candidates,
    # splits drawn preorder); each vote flips every internal node
    leaves = list(range(m))
    rng.shuffle(leaves)

    def build(lo: int, hi: int):
        if hi - lo == 1:
            return leaves[lo]
        cut = lo + 1 + rng.below(hi - lo - 1)
        return (build(lo, cut), build(cut, hi))

    tree = build(0, m)
    votes = []
    for _ in range(n):
        seq: list[int] = []

        def emit(node) -> None:
            if isinstance(node, int):
                seq.append(node)
                return
            first, second = node
            if rng.below(2) == 1:
                first, second = second, first
            emit(first)
            emit(second)

        emit(tree)
        votes.append(tuple(seq))
    return votes


def _votes_catgs_group(rng: SplitMix64, n: int, m: int) -> list[Vote]:
    # one shuffled caterpillar order per group; each vote draws one coin
    # per candidate to rank it with the ascending head or descending tail
    order = list(range(m))
    rng.shuffle(order)
    votes = []
    for _ in range(n):
        head = []
        tail = []
        for c in order:
            if rng.below(2) == 0:
                head.append(c)
            else:
                tail.append(c)
        votes.append(tuple(head + tail[::-1]))
    return votes


def generate(params: GenParams) -> Profile:
    """Deterministic profile for params; groups are laid out consecutively.

    Group g occupies vote indices g*n .. g*n + n - 1. The sp-union,
    gs-union and catgs-union models draw each group from one structure, so
    assigning the votes back to their groups is a valid k-partition for
    the matching domain.
    """
    rng = SplitMix64(params.seed)
    names = tuple("c%d" % i for i in range(params.m))
    votes: list[Vote] = []
    for _group in range(params.k):
        if params.model == "impartial":
            votes.extend(_vote_impartial(rng, params.m) for _ in range(params.n))
        elif params.model == "sp-union":
            votes.extend(_votes_sp_group(rng, params.n, params.m))
        elif params.model == "gs-union":
            votes.extend(_votes_gs_group(rng, params.n, params.m))
        else:
            votes.extend(_votes_catgs_group(rng, params.n, params.m))
    return Profile(names, tuple(votes))


def bruteforce_contains_minor(p: Profile, d: DomainId | str) -> MinorWitness | None:
    """Exhaustive minor search straight from the definitions.

    Checks position minors (each triple member at position j exactly once
    across three votes) for every flagged j, then explicit patterns over
    every candidate subset and vote pair. Exponential in nothing, but
    O(n^3 m^3): only suitable as an oracle at test scale.
    """
    spec = domain_spec(d)
    ranks = [_rank_of(vote, p.m) for vote in p.votes]
    for j in sorted(spec.j_flags):
        for vi, vj, vk in combinations(range(p.n), 3):
            for trip in combinations(range(p.m), 3):
                occupants = {
                    sorted(trip, key=ranks[v].__getitem__)[j - 1]
                    for v in (vi, vj, vk)
                }
                if len(occupants) == 3:
                    return MinorWitness((vi, vj, vk), trip, "%d-minor" % j)
    for pat in spec.explicit_patterns:
        q = pat.cols
        if q > p.m:
            continue
        for combo in combinations(range(p.m), q):
            for u, v in combinations(range(p.n), 2):
                for x, y in ((u, v), (v, u)):
                    order_x = sorted(combo, key=ranks[x].__getitem__)
                    assign = {pat.pattern[0][t]: c for t, c in enumerate(order_x)}
                    order_y = sorted(combo, key=ranks[y].__getitem__)
                    if [assign[s] for s in pat.pattern[1]] == order_y:
                        return MinorWitness((u, v), combo, pat.name)
    return None


def _rank_of(vote: Vote, m: int) -> list[int]:
    r = [0] * m
    for pos, c in enumerate(vote):
        r[c] = pos
    return r


def bruteforce_kpartition(
    p: Profile, d: DomainId | str, k: int, budget: int = DEFAULT_BUDGET
) -> KPartition | BudgetExceeded | None:
    """Exhaustive k-group split with sound pruning, or None, or the budget
    sentinel.

    Duplicate votes are pinned to one group (collapsing them never loses a
    solution). Canonical group numbering (a vote may only open the next
    unused group) removes group-relabeling symmetry. A vote joins a group
    only when doing so creates no two-vote pattern conflict and completes
    no flagged position minor inside the group; every placement attempt
    costs one budget node.
    """
    if k < 1:
        raise BadParams("k must be positive")
    spec = domain_spec(d)
    dm = dedupe(p)
    rep = dm.representative
    n = rep.n
    if n == 0:
        return KPartition(k, ())
    wmask = joint_minor_masks(rep, spec.j_flags)
    conflict = [
        [
            u != v and pair_conflict(rep, u, v, spec)
            for v in range(n)
        ]
        for u in range(n)
    ]
    conflict_mask = [
        sum(1 << v for v in range(n) if conflict[u][v]) for u in range(n)
    ]
    group_mask = [0] * k
    assignment = [-1] * n
    nodes = 0

    def place(v: int, g: int) -> bool:
        mask = group_mask[g]
        if conflict_mask[v] & mask:
            return False
        rest = mask
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if wmask[v][u] & mask:
                return False
        return True

    def search(v: int, used: int) -> object:
        nonlocal nodes
        if v == n:
            return tuple(assignment)
        limit = min(used + 1, k)
        for g in range(limit):
            nodes += 1
            if nodes > budget:
                return BUDGET_EXCEEDED
            if place(v, g):
                group_mask[g] |= 1 << v
                assignment[v] = g
                got = search(v + 1, max(used, g + 1))
                if got is not None:
                    return got
                group_mask[g] &= ~(1 << v)
                assignment[v] = -1
        return None

    got = search(0, 0)
    if got is BUDGET_EXCEEDED or got is None:
        return got
    full = [0] * p.n
    for rep_idx, group in enumerate(dm.groups):
        for orig in group:
            full[orig] = got[rep_idx]
    result = KPartition(k, tuple(full))
    for grp in result.groups():
        assert is_member_subset(p, d, grp) is None
    return result
