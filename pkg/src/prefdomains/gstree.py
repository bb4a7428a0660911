"""Ordered-tree and caterpillar explanations for group-separable profiles.

A profile is group-separable exactly when some ordered binary tree with
candidates at the leaves is consistent with every vote: at each internal
node, every vote ranks all leaves of one child above all leaves of the
other. The caterpillar subfamily restricts the shape to a path: an order
c_1, ..., c_m such that every vote places each c_i above or below all the
later candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import LabelMismatch, NotGroupSeparable, PreconditionViolated
from .minors import CATGS_PATTERNS, MinorWitness, _rows_match, _tables
from .profiles import Profile


@dataclass(frozen=True)
class TreeLeaf:
    candidate: int


@dataclass(frozen=True)
class TreeNode:
    left: "OrderedBinaryTree"
    right: "OrderedBinaryTree"


OrderedBinaryTree = Union[TreeLeaf, TreeNode]


@dataclass(frozen=True)
class CaterpillarOrder:
    """Candidate order c_1..c_m; every vote is monotone along it.

    The final two candidates carry no orientation, so recognition emits
    them smaller id first.
    """

    order: tuple[int, ...]


def tree_leaves(t: OrderedBinaryTree) -> tuple[int, ...]:
    if isinstance(t, TreeLeaf):
        return (t.candidate,)
    return tree_leaves(t.left) + tree_leaves(t.right)


def format_tree(t: OrderedBinaryTree, names: Sequence[str]) -> str:
    """Nested-parentheses form, e.g. "((a,b),(c,d))"."""
    if isinstance(t, TreeLeaf):
        return names[t.candidate]
    return "(%s,%s)" % (format_tree(t.left, names), format_tree(t.right, names))


def build_gs_tree(p: Profile) -> OrderedBinaryTree:
    """Consistent ordered binary tree for p, built greedily.

    At each step the shortest prefix of the first vote that every vote
    ranks entirely on top or entirely at the bottom becomes the left child.
    Raises NotGroupSeparable (carrying the unsplittable candidate set) when
    no prefix works, and PreconditionViolated when p has no votes (any tree
    would do, so the choice would be arbitrary).
    """
    if not p.votes:
        raise PreconditionViolated("tree building needs at least one vote")

    def split(votes: list[tuple[int, ...]]) -> OrderedBinaryTree:
        size = len(votes[0])
        if size == 1:
            return TreeLeaf(votes[0][0])
        lead = votes[0]
        for width in range(1, size):
            block = frozenset(lead[:width])
            if all(
                frozenset(v[:width]) == block or frozenset(v[size - width :]) == block
                for v in votes
            ):
                inside = [tuple(c for c in v if c in block) for v in votes]
                outside = [tuple(c for c in v if c not in block) for v in votes]
                return TreeNode(split(inside), split(outside))
        raise NotGroupSeparable(frozenset(lead))

    return split([tuple(v) for v in p.votes])


def check_t_consistent(p: Profile, t: OrderedBinaryTree) -> bool:
    """Whether every vote separates the two children at every node.

    Raises LabelMismatch unless the leaves are exactly p's candidates.
    """
    leaves = tree_leaves(t)
    if sorted(leaves) != list(range(p.m)):
        raise LabelMismatch("tree leaves do not match the candidate set")
    ranks = _tables(p).ranks

    def ok(node: OrderedBinaryTree) -> bool:
        if isinstance(node, TreeLeaf):
            return True
        left = list(tree_leaves(node.left))
        right = list(tree_leaves(node.right))
        for vi in range(p.n):
            r = ranks[vi]
            lmin, lmax = min(r[c] for c in left), max(r[c] for c in left)
            rmin, rmax = min(r[c] for c in right), max(r[c] for c in right)
            if not (lmax < rmin or rmax < lmin):
                return False
        return ok(node.left) and ok(node.right)

    return ok(t)


def _polarizing(vote: tuple[int, ...]) -> tuple[int, int]:
    return vote[0], vote[-1]


def _pattern_witness(p: Profile, votes: tuple[int, int], cands: tuple[int, ...]) -> MinorWitness:
    tables = _tables(p)
    u, v = votes
    for pat in CATGS_PATTERNS:
        if _rows_match(tables, u, v, cands, pat) or _rows_match(tables, v, u, cands, pat):
            return MinorWitness(votes, cands, pat.name)
    raise AssertionError("extracted pair does not realize a caterpillar pattern")


def recognize_caterpillar(p: Profile) -> CaterpillarOrder | MinorWitness:
    """Caterpillar order for p, or a witness explaining the failure.

    Peels off a candidate that is first or last in every remaining vote,
    smallest id on ties; m - 2 successful steps leave the final pair,
    reported smaller id first. On a stuck step the failure witness is
    either a position-2 minor or a two-vote 2x4 pattern, assembled from the
    polarizing pairs of three specific votes. Requires m >= 2.
    """
    if p.m < 2:
        raise PreconditionViolated("caterpillar orders need at least two candidates")
    votes = [tuple(v) for v in p.votes]
    remaining = list(range(p.m))
    order: list[int] = []
    while len(remaining) > 2:
        pick = -1
        for c in remaining:
            if all(v[0] == c or v[-1] == c for v in votes):
                pick = c
                break
        if pick < 0:
            return _stuck_witness(p, votes)
        order.append(pick)
        remaining.remove(pick)
        votes = [tuple(c for c in v if c != pick) for v in votes]
    order.extend(sorted(remaining))
    return CaterpillarOrder(tuple(order))


def _stuck_witness(p: Profile, votes: list[tuple[int, ...]]) -> MinorWitness:
    # No remaining candidate polarizes every vote, so chase three votes
    # whose polarizing pairs clash; their union always contains a forbidden
    # structure on the remaining candidates.
    pol = [_polarizing(v) for v in votes]
    a, b = pol[0]
    v = next(i for i in range(len(votes)) if a not in pol[i])
    if b not in pol[v]:
        cands = tuple(sorted({a, b} | set(pol[v])))
        return _pattern_witness(p, (0, v), cands)
    c = pol[v][0] if pol[v][1] == b else pol[v][1]
    w = next(i for i in range(len(votes)) if b not in pol[i])
    if set(pol[w]) == {a, c}:
        return MinorWitness(tuple(sorted((0, v, w))), tuple(sorted((a, b, c))), "2-minor")
    if a not in pol[w]:
        cands = tuple(sorted({a, b} | set(pol[w])))
        return _pattern_witness(p, (0, w), cands)
    # pol[w] = {a, d} with d outside {a, b, c}; pair it with v's {b, c}
    cands = tuple(sorted(set(pol[v]) | set(pol[w])))
    return _pattern_witness(p, tuple(sorted((v, w))), cands)


def verify_caterpillar(p: Profile, order: CaterpillarOrder) -> bool:
    """Whether every vote ranks each order member above or below the rest.

    Raises LabelMismatch unless the order is a permutation of p's
    candidates.
    """
    seq = order.order
    if sorted(seq) != list(range(p.m)):
        raise LabelMismatch("order does not match the candidate set")
    ranks = _tables(p).ranks
    for vi in range(p.n):
        r = [int(ranks[vi][c]) for c in seq]
        suf_min = [0] * (p.m + 1)
        suf_max = [0] * (p.m + 1)
        suf_min[p.m] = p.m
        suf_max[p.m] = -1
        for i in range(p.m - 1, -1, -1):
            suf_min[i] = min(r[i], suf_min[i + 1])
            suf_max[i] = max(r[i], suf_max[i + 1])
        for i in range(p.m - 1):
            if not (r[i] < suf_min[i + 1] or r[i] > suf_max[i + 1]):
                return False
    return True
