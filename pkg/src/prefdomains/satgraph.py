"""Small verified solvers: 2-SAT and graph 2-coloring.

Both solvers re-check their own output before returning, so a returned
Assignment always satisfies every clause and a returned coloring never has a
monochromatic edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

# A literal is (variable index, polarity); polarity True means the positive
# literal. A unit clause is written (lit, lit).
Literal = tuple[int, bool]
Clause = tuple[Literal, Literal]


@dataclass(frozen=True)
class TwoSatInstance:
    """A conjunction of 2-literal clauses over variables 0..var_count-1."""

    var_count: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for var, _pol in clause:
                if not (0 <= var < self.var_count):
                    raise ValueError("literal variable %d out of range" % var)


@dataclass(frozen=True)
class Assignment:
    """Truth values, indexed by variable."""

    values: tuple[bool, ...]


def satisfies(inst: TwoSatInstance, asg: Assignment) -> bool:
    vals = asg.values
    if len(vals) != inst.var_count:
        return False
    return all(
        (vals[a] == pa) or (vals[b] == pb) for (a, pa), (b, pb) in inst.clauses
    )


def _lit_node(var: int, pol: bool) -> int:
    return 2 * var + (0 if pol else 1)


def solve_2sat(inst: TwoSatInstance) -> Assignment | None:
    """Satisfying assignment via strongly connected components, or None.

    Implication graph on 2*var_count literal nodes: clause (x or y) adds
    !x -> y and !y -> x. Unsatisfiable iff some variable shares a component
    with its negation; otherwise a literal is set true when its component
    comes later in topological order than its negation's.
    """
    n = 2 * inst.var_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for (a, pa), (b, pb) in inst.clauses:
        adj[_lit_node(a, not pa)].append(_lit_node(b, pb))
        adj[_lit_node(b, not pb)].append(_lit_node(a, pa))

    # Iterative Tarjan; component ids are assigned in reverse topological
    # order (an edge u -> v implies comp[u] >= comp[v]).
    UNSET = -1
    index = [UNSET] * n
    low = [0] * n
    comp = [UNSET] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != UNSET:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, ei = work[-1]
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while ei < len(adj[v]):
                w = adj[v][ei]
                ei += 1
                if index[w] == UNSET:
                    work[-1] = (v, ei)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent, _ = work[-1]
                low[parent] = min(low[parent], low[v])

    values = []
    for var in range(inst.var_count):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        values.append(pos < neg)
    asg = Assignment(tuple(values))
    assert satisfies(inst, asg)
    return asg


@dataclass
class VoteGraph:
    """Undirected simple graph whose vertices stand for distinct votes.

    Edges carry a provenance tag ("conflict" for two-vote pattern clashes,
    "triple" for edges induced by a three-vote pattern). The first tag set
    for an edge wins; re-adding is a no-op.
    """

    vertex_count: int
    _edges: dict[tuple[int, int], str] = field(default_factory=dict)

    def add_edge(self, u: int, v: int, tag: str) -> None:
        if u == v:
            raise ValueError("self-loop at %d" % u)
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise ValueError("edge (%d,%d) out of range" % (u, v))
        key = (u, v) if u < v else (v, u)
        self._edges.setdefault(key, tag)

    def edges(self) -> list[tuple[int, int, str]]:
        return [(u, v, tag) for (u, v), tag in sorted(self._edges.items())]

    @property
    def edge_count(self) -> int:
        return len(self._edges)


def two_color(g: VoteGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split vertices into two sets with no internal edge, or None.

    Isolated vertices land in the first set. BFS component by component in
    vertex order, so the output is deterministic.
    """
    color = [-1] * g.vertex_count
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v, _tag in g.edges():
        adj[u].append(v)
        adj[v].append(u)
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    first = frozenset(v for v in range(g.vertex_count) if color[v] == 0)
    second = frozenset(v for v in range(g.vertex_count) if color[v] == 1)
    for u, v, _tag in g.edges():
        assert (u in first) != (v in first)
    return first, second
