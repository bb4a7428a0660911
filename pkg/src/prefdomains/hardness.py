"""Clique covers and the graph-to-profile reduction.

The reduction turns "partition G's vertices into k cliques" into "partition
the reduced profile's votes into k structured groups": the graph is first
augmented with k fresh (k+2)-cliques whose vertices see every original
vertex, then each non-adjacent pair {i, j} of the augmented graph
contributes three candidates a, b, c ranked c>a>b by every vote except
vote i (a>b>c) and vote j (b>c>a). Vote ids coincide with vertex ids.

Graph text format (0-based ids, '#' comments, blank lines ignored):

    vertices: 5
    edge: 0 3
    edge: 1 2
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BadK, EmptyCandidateSet, MalformedLine, SizeMismatch
from .oracle import KPartition
from .profiles import Profile, Vote


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError("edge (%d,%d) is not an ordered in-range pair" % (u, v))

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v) for u, v in combinations(range(self.n), 2) if (u, v) not in self.edges
        ]


@dataclass(frozen=True)
class CliquePartition:
    """Assignment of every vertex to one of k classes; classes may be empty."""

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise BadK("k must be positive")
        for g in self.assignment:
            if not (0 <= g < self.k):
                raise BadK("class index %d out of range" % g)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: tuple[list[int], ...] = tuple([] for _ in range(self.k))
        for i, g in enumerate(self.assignment):
            out[g].append(i)
        return tuple(tuple(c) for c in out)


@dataclass(frozen=True)
class ReductionOutput:
    """Reduced instance plus the bookkeeping to read answers back.

    triple_index maps each non-edge (u, v) of graph to the ids of its
    three candidates (a, b, c).
    """

    graph: Graph
    profile: Profile
    triple_index: dict[tuple[int, int], tuple[int, int, int]]


def parse_graph(text: str) -> Graph:
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise MalformedLine("missing ':' in line %r" % raw)
        directive = head.strip()
        if directive == "vertices":
            if n is not None:
                raise MalformedLine("second vertices line")
            try:
                n = int(body.strip())
            except ValueError:
                raise MalformedLine("bad vertex count %r" % body) from None
            if n < 0:
                raise MalformedLine("negative vertex count")
        elif directive == "edge":
            if n is None:
                raise MalformedLine("edge before vertices line")
            parts = body.split()
            if len(parts) != 2:
                raise MalformedLine("edge line needs two ids: %r" % raw)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise MalformedLine("bad edge ids %r" % raw) from None
            if u == v:
                raise MalformedLine("self-loop at %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedLine("edge (%d,%d) out of range" % (u, v))
            edges.add((min(u, v), max(u, v)))
        else:
            raise MalformedLine("unknown directive %r" % directive)
    if n is None:
        raise MalformedLine("no vertices line")
    return Graph(n, frozenset(edges))


def emit_graph(g: Graph) -> str:
    lines = ["vertices: %d" % g.n]
    for u, v in sorted(g.edges):
        lines.append("edge: %d %d" % (u, v))
    return "\n".join(lines) + "\n"


def augment_graph(g: Graph, k: int) -> Graph:
    """Append k cliques of size k+2, each fully joined to the originals.

    Clique t occupies vertices g.n + t*(k+2) .. g.n + (t+1)*(k+2) - 1.
    Distinct new cliques are not adjacent to each other.
    """
    if k < 1:
        raise BadK("k must be positive")
    size = k + 2
    n2 = g.n + k * size
    edges = set(g.edges)
    for t in range(k):
        base = g.n + t * size
        members = range(base, base + size)
        for u, v in combinations(members, 2):
            edges.add((u, v))
        for u in members:
            for orig in range(g.n):
                edges.add((orig, u))
    return Graph(n2, frozenset(edges))


def reduce_to_profile(g: Graph, k: int) -> ReductionOutput:
    """Profile whose k-group partitions mirror clique k-partitions of g.

    Augments g first, then emits one vote per augmented vertex and one
    candidate triple per non-edge, ranked as in the module docstring.
    Non-edges are taken in lexicographic order. Raises BadK for k < 1 and
    EmptyCandidateSet when the augmented graph is complete (no non-edge
    means no candidates; only possible for k = 1 over a complete graph).
    """
    if k < 1:
        raise BadK("k must be positive")
    aug = augment_graph(g, k)
    non_edges = aug.non_edges()
    if not non_edges:
        raise EmptyCandidateSet("augmented graph is complete")
    names: list[str] = []
    triple_index: dict[tuple[int, int], tuple[int, int, int]] = {}
    for u, v in non_edges:
        base = len(names)
        names.extend(("a%d_%d" % (u, v), "b%d_%d" % (u, v), "c%d_%d" % (u, v)))
        triple_index[(u, v)] = (base, base + 1, base + 2)
    votes: list[Vote] = []
    for ell in range(aug.n):
        vote: list[int] = []
        for u, v in non_edges:
            a, b, c = triple_index[(u, v)]
            if ell == u:
                vote.extend((a, b, c))
            elif ell == v:
                vote.extend((b, c, a))
            else:
                vote.extend((c, a, b))
        votes.append(tuple(vote))
    return ReductionOutput(aug, Profile(tuple(names), tuple(votes)), triple_index)


def clique_kpartition(g: Graph, k: int) -> CliquePartition | None:
    """Exhaustive search for a partition of the vertices into k cliques.

    Canonical numbering (a vertex may only open the next unused class)
    removes relabeling symmetry; a vertex joins a class only when adjacent
    to all its members.
    """
    if k < 1:
        raise BadK("k must be positive")
    if g.n == 0:
        return CliquePartition(k, ())
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    class_mask = [0] * k
    assignment = [-1] * g.n

    def search(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(used + 1, k)):
            if class_mask[c] & ~adj[v]:
                continue
            class_mask[c] |= 1 << v
            assignment[v] = c
            if search(v + 1, max(used, c + 1)):
                return True
            class_mask[c] &= ~(1 << v)
            assignment[v] = -1
        return False

    if not search(0, 0):
        return None
    return CliquePartition(k, tuple(assignment))


def map_clique_partition_to_votes(r: ReductionOutput, cp: CliquePartition) -> KPartition:
    """Vote groups induced by a clique partition (each vote follows its vertex).

    Raises SizeMismatch unless cp covers exactly the augmented vertices.
    """
    if len(cp.assignment) != r.profile.n:
        raise SizeMismatch(
            "clique partition covers %d vertices, profile has %d votes"
            % (len(cp.assignment), r.profile.n)
        )
    return KPartition(cp.k, cp.assignment)
