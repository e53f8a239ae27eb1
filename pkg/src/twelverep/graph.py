"""Labeled graphs on [n], reduced forms, forbidden patterns and bad vertices."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from twelverep.errors import InvalidGraph, InvalidSelection

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledGraph:
    """Undirected simple graph whose vertices are exactly the labels 1..n.

    Edges are stored once, as ``(smaller, larger)`` pairs in sorted order.
    A dense adjacency matrix (index 0 unused) backs :meth:`adjacent`.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    _adj: tuple[tuple[bool, ...], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InvalidGraph(f"vertex count must be a positive integer, got {n!r}")
        seen: set[Edge] = set()
        for pair in self.edges:
            try:
                u, v = pair
            except (TypeError, ValueError):
                raise InvalidGraph(f"edge {pair!r} is not a pair") from None
            for x in (u, v):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise InvalidGraph(f"edge {pair!r} has a non-integer label")
                if not 1 <= x <= n:
                    raise InvalidGraph(f"label {x} outside [1, {n}]")
            if u == v:
                raise InvalidGraph(f"self-loop on {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidGraph(f"duplicate edge {e}")
            seen.add(e)
        rows = [[False] * (n + 1) for _ in range(n + 1)]
        for u, v in seen:
            rows[u][v] = rows[v][u] = True
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj", tuple(tuple(r) for r in rows))

    def adjacent(self, u: int, v: int) -> bool:
        return self._adj[u][v]

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        row = self._adj[v]
        return [u for u in self.vertices if row[u]]

    def relabel(self, labeling: Sequence[int]) -> "LabeledGraph":
        """Return the graph where vertex ``v`` carries label ``labeling[v - 1]``."""
        if sorted(labeling) != list(self.vertices):
            raise InvalidGraph(f"labeling {tuple(labeling)} is not a permutation of [1, {self.n}]")
        return LabeledGraph(self.n, tuple((labeling[u - 1], labeling[v - 1]) for u, v in self.edges))

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def new_labeled_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> LabeledGraph:
    return LabeledGraph(n, tuple(tuple(e) for e in edges))


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, tuple(combinations(range(1, n + 1), 2)))


def edgeless_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n)


def graph_from_dict(data: object) -> LabeledGraph:
    """Load the ``{"n": int, "edges": [[u, v], ...]}`` format; unknown keys are rejected."""
    if not isinstance(data, dict):
        raise InvalidGraph("graph JSON must be an object")
    extra = set(data) - {"n", "edges"}
    if extra:
        raise InvalidGraph(f"unknown fields: {sorted(extra)}")
    if "n" not in data or "edges" not in data:
        raise InvalidGraph("graph JSON needs both 'n' and 'edges'")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise InvalidGraph("'edges' must be an array")
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise InvalidGraph(f"edge {e!r} is not a 2-element array")
    return new_labeled_graph(data["n"], edges)


def graph_from_json(text: str) -> LabeledGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraph(f"malformed JSON: {exc}") from None
    return graph_from_dict(data)


@dataclass(frozen=True)
class InducedSubgraph:
    """Induced subgraph that keeps the labels of its parent graph."""

    labels: tuple[int, ...]
    edges: tuple[Edge, ...]


def induced_subgraph(g: LabeledGraph, labels: Sequence[int]) -> InducedSubgraph:
    if not labels:
        raise InvalidSelection("selection is empty")
    if len(set(labels)) != len(labels):
        raise InvalidSelection(f"repeated label in {tuple(labels)}")
    for x in labels:
        if not 1 <= x <= g.n:
            raise InvalidSelection(f"label {x} outside [1, {g.n}]")
    chosen = tuple(sorted(labels))
    edges = tuple((u, v) for u, v in combinations(chosen, 2) if g.adjacent(u, v))
    return InducedSubgraph(chosen, edges)


def reduced_form(h: Union[InducedSubgraph, LabeledGraph]) -> LabeledGraph:
    """Relabel so that the i-th smallest label becomes i."""
    if isinstance(h, LabeledGraph):
        return h
    rank = {label: i for i, label in enumerate(h.labels, start=1)}
    return LabeledGraph(len(h.labels), tuple((rank[u], rank[v]) for u, v in h.edges))


class PatternKind(enum.Enum):
    I3 = "I3"
    J4 = "J4"
    Q4 = "Q4"


PATTERNS: dict[PatternKind, LabeledGraph] = {
    PatternKind.I3: LabeledGraph(3, ((1, 2), (2, 3))),
    PatternKind.J4: LabeledGraph(4, ((1, 3), (2, 4))),
    PatternKind.Q4: LabeledGraph(4, ((1, 4), (2, 3))),
}


@dataclass(frozen=True)
class PatternWitness:
    kind: PatternKind
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}

    @classmethod
    def from_dict(cls, data: dict) -> "PatternWitness":
        return cls(PatternKind(data["kind"]), tuple(data["vertices"]))


def matches_pattern(g: LabeledGraph, witness: PatternWitness) -> bool:
    red = reduced_form(induced_subgraph(g, witness.vertices))
    return red == PATTERNS[witness.kind]


def _i3_witnesses(g: LabeledGraph) -> Iterator[tuple[int, ...]]:
    # a < b < c with ab, bc edges and ac a non-edge; yielded in lexicographic order
    for a, b, c in combinations(g.vertices, 3):
        if g.adjacent(a, b) and g.adjacent(b, c) and not g.adjacent(a, c):
            yield (a, b, c)


def _two_edge_witnesses(g: LabeledGraph) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Scan pairs of disjoint edges inducing exactly those two edges (2K2).

    Sorted quadruple a<b<c<d: J4 pairs {a,c},{b,d}; Q4 pairs {a,d},{b,c}.
    """
    j4: list[tuple[int, ...]] = []
    q4: list[tuple[int, ...]] = []
    for (u1, v1), (u2, v2) in combinations(g.edges, 2):
        quad = (u1, v1, u2, v2)
        if len(set(quad)) < 4:
            continue
        if any(g.adjacent(x, y) for x in (u1, v1) for y in (u2, v2)):
            continue
        a, b, c, d = sorted(quad)
        pair = {(u1, v1), (u2, v2)}
        if pair == {(a, c), (b, d)}:
            j4.append((a, b, c, d))
        elif pair == {(a, d), (b, c)}:
            q4.append((a, b, c, d))
    return j4, q4


def find_forbidden_pattern(g: LabeledGraph) -> Optional[PatternWitness]:
    """Return the first forbidden induced pattern, or None if the labeling is valid.

    I3 is searched before J4 before Q4; within a kind the smallest vertex tuple wins.
    """
    for triple in _i3_witnesses(g):
        return PatternWitness(PatternKind.I3, triple)
    j4, q4 = _two_edge_witnesses(g)
    if j4:
        return PatternWitness(PatternKind.J4, min(j4))
    if q4:
        return PatternWitness(PatternKind.Q4, min(q4))
    return None


def is_valid_labeling(g: LabeledGraph) -> bool:
    return find_forbidden_pattern(g) is None


@dataclass(frozen=True)
class BadVertexReport:
    bad: frozenset[int]
    witnesses: dict[int, tuple[int, int, int]]

    @property
    def b_count(self) -> int:
        return len(self.bad)

    def to_dict(self) -> dict:
        return {
            "bad": sorted(self.bad),
            "witnesses": {str(b): list(t) for b, t in sorted(self.witnesses.items())},
            "b_count": self.b_count,
        }


def bad_vertices(g: LabeledGraph) -> BadVertexReport:
    """Classify each vertex b: bad iff some a < b < c has ab, bc non-edges and ac an edge."""
    witnesses: dict[int, tuple[int, int, int]] = {}
    adj = g.adjacent
    for b in g.vertices:
        found = None
        for a in range(1, b):
            if adj(a, b):
                continue
            for c in range(b + 1, g.n + 1):
                if adj(a, c) and not adj(b, c):
                    found = (a, b, c)
                    break
            if found:
                break
        if found:
            witnesses[b] = found
    return BadVertexReport(frozenset(witnesses), witnesses)


def bad_count(g: LabeledGraph) -> int:
    return bad_vertices(g).b_count


def length_lower_bound(g: LabeledGraph) -> int:
    return g.n + bad_count(g)
