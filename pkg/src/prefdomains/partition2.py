"""Split a profile into two groups that both lie in a domain.

The decision runs on the deduplicated profile (identical votes must land
together) and proceeds in three stages over the dangerous triples, i.e. the
(triple, position) pairs whose three position classes are all nonempty:

1. any dangerous triple with two or more non-member classes kills every
   bipartition, so answer None;
2. a dangerous triple whose three classes are all members forces the two
   groups to merge classes pairwise; each of the three pairings becomes a
   2-SAT instance over the third class's votes, and the first satisfiable
   one decodes to an answer (none satisfiable: None);
3. otherwise every dangerous triple has exactly one non-member class, and
   an edge graph (pattern-conflict edges plus complete member-class-to-
   member-class edges per dangerous triple) is 2-colorable iff a valid
   bipartition exists; the coloring is the answer.

Returned bipartitions are always verified before being handed back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .domains import DomainId, domain_spec, is_member_subset
from .errors import BadIndex, PreconditionViolated
from .minors import (
    TripleSplit,
    _tables,
    joint_minor_masks,
    pair_conflict,
    triple_split,
)
from .profiles import Profile, dedupe
from .satgraph import Clause, TwoSatInstance, VoteGraph, solve_2sat, two_color


@dataclass(frozen=True)
class Bipartition:
    """Two vote-index groups over the original (pre-dedup) profile.

    part1 holds vote 0 whenever there is one; either part may be empty.
    """

    part1: tuple[int, ...]
    part2: tuple[int, ...]


@dataclass(frozen=True)
class DangerousTriple:
    """A (triple, position) record plus per-class membership flags.

    member_flags[t] tells whether the class of votes putting triple[t] at
    the position is itself a member of the domain under test.
    """

    triple: tuple[int, int, int]
    position: int
    split: TripleSplit
    member_flags: tuple[bool, bool, bool]


def _mask(indices: Sequence[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def dangerous_triples(p: Profile, d: DomainId | str) -> list[DangerousTriple]:
    """All dangerous (triple, position) records of p for d, with flags.

    Ordered by candidate triple, then position. p is used as given; callers
    wanting duplicate votes pinned together should pass a deduplicated
    profile.
    """
    spec = domain_spec(d)
    out: list[DangerousTriple] = []
    tables = _tables(p)
    entries = []
    for j in sorted(spec.j_flags):
        for x, y, z, ma, mb, mc in tables.dangerous(j):
            entries.append(((x, y, z), j, (ma, mb, mc)))
    entries.sort(key=lambda e: (e[0], e[1]))
    for triple, j, masks in entries:
        classes = tuple(tuple(_bits_list(m)) for m in masks)
        split = TripleSplit(triple, j, classes)  # type: ignore[arg-type]
        flags = tuple(
            is_member_subset(p, d, cls) is None for cls in classes
        )
        out.append(DangerousTriple(triple, j, split, flags))  # type: ignore[arg-type]
    return out


def _bits_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_case2_instance(
    p: Profile,
    d: DomainId | str,
    triple: Sequence[int],
    i: int,
    a_in_first: int,
    b_in_second: int,
) -> tuple[TwoSatInstance, tuple[int, ...]]:
    """2-SAT instance deciding how the third class splits between groups.

    Preconditions (PreconditionViolated otherwise): (triple, i) is
    dangerous in p, all three classes are members of d, and a_in_first /
    b_in_second are two distinct triple members. Their classes seed the
    first and second group; variable t is true when the t-th remaining
    third-class vote joins the first group. Returns the instance plus the
    third-class vote indices in variable order.

    Clauses: a third-class vote clashing with a seeded class (two-vote
    pattern conflict, or a flagged position minor completed inside that
    class) is pinned away from it; a third-class pair whose position minor
    completes inside a seeded class may not both join that group.
    """
    spec = domain_spec(d)
    split = triple_split(p, triple, i)
    if a_in_first not in split.triple or b_in_second not in split.triple:
        raise PreconditionViolated("anchors must be triple members")
    if a_in_first == b_in_second:
        raise PreconditionViolated("anchors must differ")
    if any(not cls for cls in split.classes):
        raise PreconditionViolated("triple is not dangerous at this position")
    for cls in split.classes:
        if is_member_subset(p, d, cls) is not None:
            raise PreconditionViolated("all three classes must be members")
    first_cls = split.classes[split.triple.index(a_in_first)]
    second_cls = split.classes[split.triple.index(b_in_second)]
    (third_cls,) = (
        cls
        for t, cls in enumerate(split.classes)
        if split.triple[t] not in (a_in_first, b_in_second)
    )
    wmask = joint_minor_masks(p, spec.j_flags)
    first_mask = _mask(first_cls)
    second_mask = _mask(second_cls)
    clauses: list[Clause] = []
    for t, v in enumerate(third_cls):
        pinned_off_first = any(
            pair_conflict(p, v, u, spec) or (wmask[v][u] & first_mask)
            for u in first_cls
        )
        if pinned_off_first:
            clauses.append(((t, False), (t, False)))
        pinned_off_second = any(
            pair_conflict(p, v, u, spec) or (wmask[v][u] & second_mask)
            for u in second_cls
        )
        if pinned_off_second:
            clauses.append(((t, True), (t, True)))
    for t1 in range(len(third_cls)):
        for t2 in range(t1 + 1, len(third_cls)):
            u, v = third_cls[t1], third_cls[t2]
            if wmask[u][v] & first_mask:
                clauses.append(((t1, False), (t2, False)))
            if wmask[u][v] & second_mask:
                clauses.append(((t1, True), (t2, True)))
    return TwoSatInstance(len(third_cls), tuple(clauses)), tuple(third_cls)


def partition2(p: Profile, d: DomainId | str) -> Bipartition | None:
    """A bipartition whose halves both lie in d, or None when impossible.

    Runs in polynomial time; the returned bipartition is verified. A
    profile already in d comes back as (everything, empty).
    """
    dm = dedupe(p)
    rep = dm.representative
    records = dangerous_triples(rep, d)

    for rec in records:
        if sum(1 for f in rec.member_flags if not f) >= 2:
            return None

    all_member = next(
        (rec for rec in records if all(rec.member_flags)), None
    )
    if all_member is not None:
        a, b, c = all_member.triple
        i = all_member.position
        for x, y in ((a, b), (a, c), (b, c)):
            inst, third = build_case2_instance(rep, d, all_member.triple, i, x, y)
            asg = solve_2sat(inst)
            if asg is None:
                continue
            first = set(all_member.split.classes[all_member.triple.index(x)])
            for t, v in enumerate(third):
                if asg.values[t]:
                    first.add(v)
            return _checked(p, d, _expand(p, dm, first))
        return None

    spec = domain_spec(d)
    graph = VoteGraph(rep.n)
    for u in range(rep.n):
        for v in range(u + 1, rep.n):
            if pair_conflict(rep, u, v, spec):
                graph.add_edge(u, v, "conflict")
    for rec in records:
        bad = rec.member_flags.index(False)
        good = [t for t in range(3) if t != bad]
        for u in rec.split.classes[good[0]]:
            for v in rec.split.classes[good[1]]:
                graph.add_edge(u, v, "triple")
    coloring = two_color(graph)
    if coloring is None:
        return None
    return _checked(p, d, _expand(p, dm, set(coloring[0])))


def _expand(p: Profile, dm, first_reps: set[int]) -> Bipartition:
    part1: list[int] = []
    part2: list[int] = []
    for rep_idx, group in enumerate(dm.groups):
        (part1 if rep_idx in first_reps else part2).extend(group)
    part1.sort()
    part2.sort()
    if part2 and (not part1 or part2[0] == 0):
        part1, part2 = part2, part1
    return Bipartition(tuple(part1), tuple(part2))


def _checked(p: Profile, d: DomainId | str, b: Bipartition) -> Bipartition:
    assert verify_bipartition(p, d, b)
    return b


def verify_bipartition(p: Profile, d: DomainId | str, b: Bipartition) -> bool:
    """Whether b's parts partition p's votes and both lie in d.

    Raises BadIndex for out-of-range indices; overlapping or incomplete
    parts return False.
    """
    seen = set()
    for part in (b.part1, b.part2):
        for i in part:
            if not (0 <= i < p.n):
                raise BadIndex("vote index %r out of range" % (i,))
            if i in seen:
                return False
            seen.add(i)
    if len(seen) != p.n:
        return False
    return (
        is_member_subset(p, d, b.part1) is None
        and is_member_subset(p, d, b.part2) is None
    )
