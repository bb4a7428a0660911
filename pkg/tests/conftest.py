"""Shared test helpers: compact profile builders and independent checkers.

The checkers here re-derive answers straight from definitions (injection
enumeration, exhaustive truth tables) so the package's fast paths are
always measured against something that cannot share their bugs.
"""

from __future__ import annotations

from itertools import combinations, permutations

from prefdomains import Profile


def P(names: str, *votes: str) -> Profile:
    """P("a,b,c", "b>a>c", ...) -> Profile."""
    name_list = tuple(s.strip() for s in names.split(","))
    ids = {s: i for i, s in enumerate(name_list)}
    parsed = tuple(
        tuple(ids[s.strip()] for s in vote.split(">")) for vote in votes
    )
    return Profile(name_list, parsed)


def ranks_of(p: Profile) -> list[list[int]]:
    out = []
    for vote in p.votes:
        r = [0] * p.m
        for pos, c in enumerate(vote):
            r[c] = pos
        out.append(r)
    return out


def pair_realizes_pattern(p: Profile, u: int, v: int, rows) -> bool:
    """Definition-level check: some candidate injection matches the rows.

    rows is a pair of slot permutations. Tries every ordered choice of
    cols distinct candidates and both row orders.
    """
    q = len(rows[0])
    if q > p.m:
        return False
    ranks = ranks_of(p)
    for x, y in ((u, v), (v, u)):
        for combo in combinations(range(p.m), q):
            order_x = sorted(combo, key=ranks[x].__getitem__)
            assign = {rows[0][t]: c for t, c in enumerate(order_x)}
            order_y = sorted(combo, key=ranks[y].__getitem__)
            if [assign[s] for s in rows[1]] == order_y:
                return True
    return False


def sequence_contains(seq, tau) -> bool:
    """Definition-level permutation-pattern containment."""
    n, q = len(seq), len(tau)
    for positions in combinations(range(n), q):
        vals = [seq[i] for i in positions]
        rel = sorted(range(q), key=vals.__getitem__)
        rank = [0] * q
        for r, t in enumerate(rel):
            rank[t] = r
        if tuple(rank) == tuple(tau):
            return True
    return False


def all_tiny_profiles(m: int, n: int):
    """Every profile with exactly n votes over m candidates (with repeats)."""
    votes = list(permutations(range(m)))
    names = tuple("c%d" % i for i in range(m))

    def rec(chosen):
        if len(chosen) == n:
            yield Profile(names, tuple(chosen))
            return
        for v in votes:
            yield from rec(chosen + [v])

    yield from rec([])
