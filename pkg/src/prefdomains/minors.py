"""Forbidden-minor machinery for preference profiles.

Two minor families drive every recognition question in this package:

* position minors ("j-minors"): three votes and three candidates such that
  each candidate takes position j exactly once in the three restrictions,
  for a position flag j in {1, 2, 3};
* explicit two-row patterns: a pair of votes whose restriction to q
  candidates matches a fixed pair of rankings over abstract slots, up to
  renaming and up to swapping the two rows.

The scan work is shared through per-profile tables: a rank matrix, pairwise
dominance bitmasks, the dangerous-triple records per position flag (a triple
is dangerous when all three of its position classes are nonempty), and memo
tables for two-row pattern queries. Profiles are hashable, so the tables are
cached per profile and reused across membership, partition and witness
calls.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _scan
from .errors import BadTriple
from .profiles import Profile


@dataclass(frozen=True)
class MinorPattern:
    """A two-row forbidden pattern over abstract candidate slots.

    pattern holds the two rows; each row is a permutation of 0..cols-1,
    most preferred first. A pair of votes realizes the pattern when some
    injection of slots into candidates makes the restrictions equal the
    rows, in either row order.
    """

    name: str
    pattern: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.pattern) != 2:
            raise ValueError("patterns are two-row")
        q = len(self.pattern[0])
        for row in self.pattern:
            if sorted(row) != list(range(q)):
                raise ValueError("pattern row is not a slot permutation")

    @property
    def rows(self) -> int:
        return len(self.pattern)

    @property
    def cols(self) -> int:
        return len(self.pattern[0])


@dataclass(frozen=True)
class DomainSpec:
    """What a domain forbids: position flags plus explicit patterns."""

    name: str
    j_flags: frozenset[int]
    explicit_patterns: tuple[MinorPattern, ...]


@dataclass(frozen=True)
class TripleSplit:
    """Votes split by which triple member they put at position i.

    classes[t] lists (ascending) the vote indices placing triple[t] at
    position i among the triple; the three classes partition all votes.
    """

    triple: tuple[int, int, int]
    position: int
    classes: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class MinorWitness:
    """A concrete forbidden substructure inside a profile.

    vote_indices and candidates cite the profile the witness was found in;
    source names what they realize ("1-minor", "2-minor", "3-minor", or an
    explicit pattern name).
    """

    vote_indices: tuple[int, ...]
    candidates: tuple[int, ...]
    source: str


# Pattern catalog. Brace notation in the defining rankings is expanded here,
# one pattern per concrete order; sp-* come from {a,d}>b>c vs {c,d}>b>a,
# gs-2x4 from a>b>c>d vs b>d>a>c, catgs-* from a>{b,c}>d vs b>{a,d}>c
# (slots a,b,c,d = 0,1,2,3).
SP_PATTERNS = (
    MinorPattern("sp-2x4-1", ((0, 3, 1, 2), (2, 3, 1, 0))),
    MinorPattern("sp-2x4-2", ((0, 3, 1, 2), (3, 2, 1, 0))),
    MinorPattern("sp-2x4-3", ((3, 0, 1, 2), (2, 3, 1, 0))),
    MinorPattern("sp-2x4-4", ((3, 0, 1, 2), (3, 2, 1, 0))),
)
GS_PATTERNS = (MinorPattern("gs-2x4", ((0, 1, 2, 3), (1, 3, 0, 2))),)
CATGS_PATTERNS = (
    MinorPattern("catgs-2x4-1", ((0, 1, 2, 3), (1, 3, 0, 2))),
    MinorPattern("catgs-2x4-2", ((0, 2, 1, 3), (1, 3, 0, 2))),
    MinorPattern("catgs-2x4-3", ((0, 1, 2, 3), (1, 0, 3, 2))),
    MinorPattern("catgs-2x4-4", ((0, 2, 1, 3), (1, 0, 3, 2))),
)

PATTERNS_BY_NAME = {
    pat.name: pat for pat in SP_PATTERNS + GS_PATTERNS + CATGS_PATTERNS
}


class _Tables:
    """Per-profile scan state; obtained through _tables(p)."""

    def __init__(self, p: Profile):
        n, m = p.n, p.m
        self.profile = p
        self.ranks = np.empty((n, m), dtype=np.int32)
        pos = np.arange(m, dtype=np.int32)
        for i, vote in enumerate(p.votes):
            self.ranks[i, list(vote)] = pos
        self._dom: np.ndarray | None = None
        self._danger: dict[int, list[_scan.Record]] = {}
        self._pair_hits: dict[tuple[int, int, tuple], bool] = {}
        self._wmasks: dict[frozenset[int], list[list[int]]] = {}

    @property
    def dom(self) -> np.ndarray:
        if self._dom is None:
            self._dom = _scan.dominance_masks(self.ranks)
        return self._dom

    def dangerous(self, j: int) -> list[_scan.Record]:
        recs = self._danger.get(j)
        if recs is None:
            recs = _scan.dangerous_scan(self.dom, j)
            self._danger[j] = recs
        return recs


@lru_cache(maxsize=256)
def _tables(p: Profile) -> _Tables:
    return _Tables(p)


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def triple_split(p: Profile, triple: Sequence[int], i: int) -> TripleSplit:
    """Classify every vote by the triple member it puts at position i.

    Raises BadTriple unless triple is three distinct candidate ids of p.
    i must be 1, 2 or 3.
    """
    ids = tuple(sorted(set(triple)))
    if len(ids) != 3 or any(not (0 <= c < p.m) for c in ids):
        raise BadTriple("need three distinct candidates of the profile, got %r" % (triple,))
    if i not in (1, 2, 3):
        raise ValueError("position must be 1, 2 or 3")
    ranks = _tables(p).ranks
    classes: tuple[list[int], ...] = ([], [], [])
    for vi in range(p.n):
        r = ranks[vi]
        occupant = sorted(ids, key=lambda c: r[c])[i - 1]
        classes[ids.index(occupant)].append(vi)
    return TripleSplit(ids, i, tuple(tuple(c) for c in classes))


def _subset_mask(p: Profile, subset: frozenset[int] | None) -> int:
    if subset is None:
        return (1 << p.n) - 1
    mask = 0
    for i in subset:
        mask |= 1 << i
    return mask


def _j_minor_subset(
    p: Profile, j: int, subset: frozenset[int] | None
) -> MinorWitness | None:
    mask = _subset_mask(p, subset)
    for x, y, z, ma, mb, mc in _tables(p).dangerous(j):
        ia, ib, ic = ma & mask, mb & mask, mc & mask
        if ia and ib and ic:
            votes = tuple(sorted((_low_bit(ia), _low_bit(ib), _low_bit(ic))))
            return MinorWitness(votes, (x, y, z), "%d-minor" % j)
    return None


def find_j_minor(p: Profile, j: int) -> MinorWitness | None:
    """First position-j minor by sorted candidate ids, then vote indices."""
    if j not in (1, 2, 3):
        raise ValueError("position must be 1, 2 or 3")
    return _j_minor_subset(p, j, None)


# Two-row pattern containment. With vote u fixed as the pattern's first row,
# write seq[t] for the rank (in vote v) of u's t-th candidate; the pair
# realizes the pattern iff seq contains tau as a classical permutation
# pattern, where tau[t] is the second-row position of the slot at first-row
# position t. Swapping the roles of u and v is the same query with tau's
# inverse, so one seq and one set of prefix/suffix tables answer both
# orientations in O(m^2).


def _tau(pat: MinorPattern) -> tuple[int, ...]:
    r1, r2 = pat.pattern
    pos2 = {slot: t for t, slot in enumerate(r2)}
    return tuple(pos2[slot] for slot in r1)


def _inverse(tau: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(tau)
    for i, t in enumerate(tau):
        inv[t] = i
    return tuple(inv)


class _SeqTables:
    """Prefix/suffix count and bounded-extreme tables for one sequence.

    For values v in -1..m (shifted by one where needed):
      cnt_pre[p][v]      = #(q < p with seq[q] < v)
      mn_pre[p][v + 1]   = min seq[q] over q < p with seq[q] > v, else m
      mx_pre[p][v]       = max seq[q] over q < p with seq[q] < v, else -1
    and the suffix versions indexed so row r covers q >= r.
    """

    def __init__(self, seq: np.ndarray, m: int):
        size = m + 1
        self.cnt_pre = np.zeros((m + 1, size), dtype=np.int32)
        self.mn_pre = np.full((m + 1, size), m, dtype=np.int32)
        self.mx_pre = np.full((m + 1, size), -1, dtype=np.int32)
        self.cnt_suf = np.zeros((m + 1, size), dtype=np.int32)
        self.mn_suf = np.full((m + 1, size), m, dtype=np.int32)
        self.mx_suf = np.full((m + 1, size), -1, dtype=np.int32)
        for pidx in range(m):
            v = int(seq[pidx])
            self.cnt_pre[pidx + 1] = self.cnt_pre[pidx]
            self.cnt_pre[pidx + 1, v + 1 :] += 1
            self.mn_pre[pidx + 1] = self.mn_pre[pidx]
            np.minimum(self.mn_pre[pidx + 1, : v + 1], v, out=self.mn_pre[pidx + 1, : v + 1])
            self.mx_pre[pidx + 1] = self.mx_pre[pidx]
            np.maximum(self.mx_pre[pidx + 1, v + 1 :], v, out=self.mx_pre[pidx + 1, v + 1 :])
        for pidx in range(m - 1, -1, -1):
            v = int(seq[pidx])
            self.cnt_suf[pidx] = self.cnt_suf[pidx + 1]
            self.cnt_suf[pidx, v + 1 :] += 1
            self.mn_suf[pidx] = self.mn_suf[pidx + 1]
            np.minimum(self.mn_suf[pidx, : v + 1], v, out=self.mn_suf[pidx, : v + 1])
            self.mx_suf[pidx] = self.mx_suf[pidx + 1]
            np.maximum(self.mx_suf[pidx, v + 1 :], v, out=self.mx_suf[pidx, v + 1 :])


def _category(val: int, r1: int, r2: int) -> int:
    # 0 below both anchors, 1 between, 2 above
    lo, hi = (r1, r2) if r1 < r2 else (r2, r1)
    if val < lo:
        return 0
    if val > hi:
        return 2
    return 1


def _band(cat: int, lo: np.ndarray, hi: np.ndarray, m: int):
    # open interval (a, b) per pair
    if cat == 0:
        return np.full_like(lo, -1), lo
    if cat == 1:
        return lo, hi
    return hi, np.full_like(lo, m)


def _contains_q3(seq: np.ndarray, st: _SeqTables, tau: tuple[int, ...]) -> bool:
    m = seq.shape[0]
    if m < 3:
        return False
    pos = np.arange(m)
    anchor = seq
    c0 = 0 if tau[0] < tau[1] else 2
    c2 = 0 if tau[2] < tau[1] else 2
    lo0, hi0 = _band(c0, anchor, anchor, m)
    lo2, hi2 = _band(c2, anchor, anchor, m)
    if c0 != c2:
        cnt0 = st.cnt_pre[pos, hi0] - st.cnt_pre[pos, lo0 + 1]
        cnt2 = st.cnt_suf[pos + 1, hi2] - st.cnt_suf[pos + 1, lo2 + 1]
        hit = (cnt0 > 0) & (cnt2 > 0)
    elif tau[0] < tau[2]:
        hit = st.mn_pre[pos, lo0 + 1] < st.mx_suf[pos + 1, hi0]
    else:
        hit = st.mx_pre[pos, hi0] > st.mn_suf[pos + 1, lo0 + 1]
    return bool(hit.any())


def _contains_q4(seq: np.ndarray, st: _SeqTables, tau: tuple[int, ...]) -> bool:
    m = seq.shape[0]
    if m < 4:
        return False
    p1, p2 = np.triu_indices(m, k=1)
    b1 = seq[p1]
    b2 = seq[p2]
    keep = (b1 < b2) if tau[1] < tau[2] else (b1 > b2)
    if not keep.any():
        return False
    p1, p2, b1, b2 = p1[keep], p2[keep], b1[keep], b2[keep]
    lo = np.minimum(b1, b2)
    hi = np.maximum(b1, b2)
    c0 = _category(tau[0], tau[1], tau[2])
    c3 = _category(tau[3], tau[1], tau[2])
    lo0, hi0 = _band(c0, lo, hi, m)
    lo3, hi3 = _band(c3, lo, hi, m)
    if c0 != c3:
        cnt0 = st.cnt_pre[p1, hi0] - st.cnt_pre[p1, lo0 + 1]
        cnt3 = st.cnt_suf[p2 + 1, hi3] - st.cnt_suf[p2 + 1, lo3 + 1]
        hit = (cnt0 > 0) & (cnt3 > 0)
    elif tau[0] < tau[3]:
        hit = st.mn_pre[p1, lo0 + 1] < st.mx_suf[p2 + 1, hi0]
    else:
        hit = st.mx_pre[p1, hi0] > st.mn_suf[p2 + 1, lo0 + 1]
    return bool(hit.any())


def _contains_brute(seq: np.ndarray, tau: tuple[int, ...]) -> bool:
    vals = [int(x) for x in seq]
    order = list(range(len(tau)))
    for combo in combinations(vals, len(tau)):
        rel = sorted(order, key=lambda t: combo[t])
        rank = [0] * len(tau)
        for r, t in enumerate(rel):
            rank[t] = r
        if tuple(rank) == tau:
            return True
    return False


def _contains(seq: np.ndarray, st: _SeqTables | None, tau: tuple[int, ...]) -> bool:
    q = len(tau)
    m = seq.shape[0]
    if q > m:
        return False
    if q <= 1:
        return True
    if q == 2:
        diffs = np.diff(seq)
        return bool((diffs > 0).any()) if tau == (0, 1) else bool((diffs < 0).any())
    if st is None:
        st = _SeqTables(seq, m)
    if q == 3:
        return _contains_q3(seq, st, tau)
    if q == 4:
        return _contains_q4(seq, st, tau)
    return _contains_brute(seq, tau)


def _pair_any(
    tables: _Tables, u: int, v: int, patterns: Sequence[MinorPattern]
) -> bool:
    """Whether votes u, v realize any of the patterns (either row order)."""
    missing = [
        pat for pat in patterns if (u, v, pat.pattern) not in tables._pair_hits
    ]
    if missing:
        m = tables.ranks.shape[1]
        order_u = np.argsort(tables.ranks[u], kind="stable")
        seq = tables.ranks[v][order_u]
        st = _SeqTables(seq, m) if any(pat.cols >= 3 for pat in missing) else None
        for pat in missing:
            tau = _tau(pat)
            hit = _contains(seq, st, tau) or _contains(seq, st, _inverse(tau))
            tables._pair_hits[(u, v, pat.pattern)] = hit
    return any(tables._pair_hits[(u, v, pat.pattern)] for pat in patterns)


def _rows_match(
    tables: _Tables, x: int, y: int, cands: Sequence[int], pat: MinorPattern
) -> bool:
    # vote x plays pattern row 1, vote y row 2
    r1, r2 = pat.pattern
    rx = tables.ranks[x]
    ry = tables.ranks[y]
    order_x = sorted(cands, key=lambda c: rx[c])
    assign = {r1[t]: c for t, c in enumerate(order_x)}
    order_y = sorted(cands, key=lambda c: ry[c])
    return [assign[s] for s in r2] == order_y


def _explicit_minor_subset(
    p: Profile, pat: MinorPattern, subset: frozenset[int] | None
) -> MinorWitness | None:
    tables = _tables(p)
    idxs = list(range(p.n)) if subset is None else sorted(subset)
    pairs = [
        (u, v)
        for ui, u in enumerate(idxs)
        for v in idxs[ui + 1 :]
        if _pair_any(tables, u, v, (pat,))
    ]
    if not pairs:
        return None
    # Witness enumeration is candidate-major so results are lex-first by
    # sorted candidate ids; only runs once a realizing pair is known.
    for combo in combinations(range(p.m), pat.cols):
        for u, v in pairs:
            for x, y in ((u, v), (v, u)):
                if _rows_match(tables, x, y, combo, pat):
                    return MinorWitness((u, v), combo, pat.name)
    raise AssertionError("pair-level containment without a witness")


def find_explicit_minor(p: Profile, pat: MinorPattern) -> MinorWitness | None:
    """First realization of pat, lex-first by candidates then vote pair.

    Worst case enumerates all cols-sized candidate subsets once a realizing
    pair exists, so extracting a witness from a wide profile is the slow
    path; the yes/no question itself is answered per pair in O(m^2).
    """
    return _explicit_minor_subset(p, pat, None)


def conflict_pairs(p: Profile, spec: DomainSpec) -> np.ndarray:
    """Boolean matrix: entry (u, v) iff the pair realizes an explicit pattern."""
    tables = _tables(p)
    out = np.zeros((p.n, p.n), dtype=bool)
    for u in range(p.n):
        for v in range(u + 1, p.n):
            if _pair_any(tables, u, v, spec.explicit_patterns):
                out[u, v] = out[v, u] = True
    return out


def pair_conflict(p: Profile, u: int, v: int, spec: DomainSpec) -> bool:
    """Memoized single-pair version of conflict_pairs."""
    if u == v:
        return False
    return _pair_any(_tables(p), min(u, v), max(u, v), spec.explicit_patterns)


def joint_minor_masks(p: Profile, j_flags: Iterable[int]) -> list[list[int]]:
    """W[u][v]: bitmask of votes w completing a position minor with u and v.

    Covers every flagged position; W is symmetric with empty diagonal.
    """
    tables = _tables(p)
    key = frozenset(j_flags)
    cached = tables._wmasks.get(key)
    if cached is not None:
        return cached
    n = p.n
    wmask: list[list[int]] = [[0] * n for _ in range(n)]
    for j in sorted(key):
        for _x, _y, _z, ma, mb, mc in tables.dangerous(j):
            for mu, mv, rest in ((ma, mb, mc), (ma, mc, mb), (mb, mc, ma)):
                for u in _bits(mu):
                    row = wmask[u]
                    for v in _bits(mv):
                        row[v] |= rest
                        wmask[v][u] |= rest
    tables._wmasks[key] = wmask
    return wmask


def dangerous_count(p: Profile, j_flags: Iterable[int]) -> int:
    """Number of (triple, position) records across the flagged positions."""
    tables = _tables(p)
    return sum(len(tables.dangerous(j)) for j in sorted(set(j_flags)))


def witness_matches(p: Profile, w: MinorWitness) -> bool:
    """Replay a witness against p; False instead of raising on bad cites."""
    votes = w.vote_indices
    cands = w.candidates
    if len(set(votes)) != len(votes) or len(set(cands)) != len(cands):
        return False
    if any(not (0 <= i < p.n) for i in votes):
        return False
    if any(not (0 <= c < p.m) for c in cands):
        return False
    tables = _tables(p)
    if w.source.endswith("-minor"):
        try:
            j = int(w.source[: -len("-minor")])
        except ValueError:
            return False
        if j not in (1, 2, 3) or len(votes) != 3 or len(cands) != 3:
            return False
        occupants = set()
        for vi in votes:
            r = tables.ranks[vi]
            occupants.add(sorted(cands, key=lambda c: r[c])[j - 1])
        return len(occupants) == 3
    pat = PATTERNS_BY_NAME.get(w.source)
    if pat is None or len(votes) != 2 or len(cands) != pat.cols:
        return False
    u, v = votes
    return _rows_match(tables, u, v, cands, pat) or _rows_match(
        tables, v, u, cands, pat
    )
