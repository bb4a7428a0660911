"""Preference profiles: complete strict rankings over a fixed candidate set.

Candidates are dense integer ids 0..m-1; human-facing names live next to the
votes in the Profile and in the text format:

    # comment
    candidates: a,b,c
    vote: b>a>c
    vote: a>b>c

Blank lines and '#' comments are ignored. Exactly one candidates line must
appear before any vote line. Votes may repeat; a profile may have no votes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateCandidate,
    EmptyCandidateSet,
    MalformedLine,
    NotAPermutation,
    UnknownCandidate,
)

Vote = tuple[int, ...]


def _check_name(name: str) -> None:
    if not name:
        raise MalformedLine("empty candidate name")
    for ch in name:
        if ch in ">," or ch.isspace():
            raise MalformedLine("candidate name %r contains a reserved character" % name)


@dataclass(frozen=True)
class Profile:
    """An ordered candidate roster plus a sequence of strict rankings.

    names[i] is the display name of candidate id i. Every vote is a
    permutation of 0..m-1, most preferred first. Hashable, so profiles can
    key caches.
    """

    names: tuple[str, ...]
    votes: tuple[Vote, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise EmptyCandidateSet("a profile needs at least one candidate")
        seen: set[str] = set()
        for name in self.names:
            _check_name(name)
            if name in seen:
                raise DuplicateCandidate(name)
            seen.add(name)
        full = frozenset(range(len(self.names)))
        for vote in self.votes:
            if len(vote) != len(self.names) or frozenset(vote) != full:
                raise NotAPermutation(
                    "vote %r is not a permutation of 0..%d" % (vote, len(self.names) - 1)
                )

    @property
    def m(self) -> int:
        return len(self.names)

    @property
    def n(self) -> int:
        return len(self.votes)


@dataclass(frozen=True)
class DedupMap:
    """Result of collapsing duplicate votes.

    representative: profile over the same candidates keeping the first
        occurrence of each distinct vote, in first-occurrence order.
    groups: groups[i] lists the original vote indices (ascending) that
        collapsed onto representative vote i; together they partition the
        original index range.
    """

    representative: Profile
    groups: tuple[tuple[int, ...], ...]


def parse_profile(text: str) -> Profile:
    """Parse the text profile format.

    Raises MalformedLine for structural problems, DuplicateCandidate /
    UnknownCandidate / NotAPermutation for name-level ones.
    """
    names: tuple[str, ...] | None = None
    ids: dict[str, int] = {}
    votes: list[Vote] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise MalformedLine("missing ':' in line %r" % raw)
        directive = head.strip()
        if directive == "candidates":
            if names is not None:
                raise MalformedLine("second candidates line")
            parts = [p.strip() for p in body.split(",")]
            for p in parts:
                _check_name(p)
            names = tuple(parts)
            for i, p in enumerate(parts):
                if p in ids:
                    raise DuplicateCandidate(p)
                ids[p] = i
        elif directive == "vote":
            if names is None:
                raise MalformedLine("vote before candidates line")
            entries = [p.strip() for p in body.split(">")]
            vote = []
            for p in entries:
                if p not in ids:
                    raise UnknownCandidate(p)
                vote.append(ids[p])
            if len(vote) != len(names) or len(set(vote)) != len(vote):
                raise NotAPermutation("vote line %r" % raw)
            votes.append(tuple(vote))
        else:
            raise MalformedLine("unknown directive %r" % directive)
    if names is None:
        raise MalformedLine("no candidates line")
    return Profile(names, tuple(votes))


def emit_profile(p: Profile) -> str:
    """Canonical text form; parse_profile(emit_profile(p)) reproduces p."""
    lines = ["candidates: " + ",".join(p.names)]
    for vote in p.votes:
        lines.append("vote: " + ">".join(p.names[c] for c in vote))
    return "\n".join(lines) + "\n"


def restrict(p: Profile, keep: Iterable[int]) -> Profile:
    """Project every vote onto a candidate subset, preserving order.

    keep holds candidate ids; the result renumbers them densely in ascending
    id order and keeps their names. Raises EmptyCandidateSet for an empty
    subset and UnknownCandidate for an out-of-range id.
    """
    kept = sorted(set(keep))
    if not kept:
        raise EmptyCandidateSet("restriction to an empty candidate set")
    for c in kept:
        if not (0 <= c < p.m):
            raise UnknownCandidate(str(c))
    new_id = {c: i for i, c in enumerate(kept)}
    keep_set = frozenset(kept)
    names = tuple(p.names[c] for c in kept)
    votes = tuple(
        tuple(new_id[c] for c in vote if c in keep_set) for vote in p.votes
    )
    return Profile(names, votes)


def dedupe(p: Profile) -> DedupMap:
    """Collapse duplicate votes, keeping first occurrences in order."""
    first: dict[Vote, int] = {}
    groups: list[list[int]] = []
    reps: list[Vote] = []
    for i, vote in enumerate(p.votes):
        j = first.get(vote)
        if j is None:
            first[vote] = len(reps)
            reps.append(vote)
            groups.append([i])
        else:
            groups[j].append(i)
    rep = Profile(p.names, tuple(reps))
    return DedupMap(rep, tuple(tuple(g) for g in groups))


def subprofile(p: Profile, vote_indices: Sequence[int]) -> Profile:
    """Profile over the same candidates keeping only the given votes."""
    return Profile(p.names, tuple(p.votes[i] for i in vote_indices))
