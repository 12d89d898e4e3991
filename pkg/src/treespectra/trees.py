"""Labeled trees and the combinatorial helpers everything else builds on.

A :class:`Tree` lives on the contiguous label set ``1..n``.  Construction
goes through :func:`from_edge_list`, which relabels arbitrary positive
integer labels by first appearance and rejects anything that is not a tree.
All surgery helpers (:func:`glue_at_vertex`, :func:`remove_branch`) return
new trees; nothing here mutates.

Matrix- and vector-valued modules index arrays by ``label - 1``; everything
in this module speaks labels directly.
"""

from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    AnchorNotOnPath,
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    EmptyInput,
    InvalidIdentification,
    LabelOutOfRange,
    NotPendant,
    ParseError,
    SelfLoop,
)

__all__ = [
    "Tree",
    "TreePath",
    "VertexClassification",
    "from_edge_list",
    "single_vertex",
    "parse_edge_list_text",
    "classify_vertices",
    "distance",
    "path_between",
    "glue_at_vertex",
    "glue_label_map",
    "remove_branch",
    "nodes_mod3",
]


@dataclass(frozen=True)
class Tree:
    """Immutable tree on labels ``1..n``.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v`` (index 0 is a
    placeholder).  ``original_labels[i-1]`` remembers what label ``i`` was
    called before :func:`from_edge_list` relabeled, purely for reporting.

    Breadth-first distance rows are memoized in ``_dist_rows``; each row is
    written atomically under the interpreter lock, so concurrent readers in
    threads are safe, and worker processes simply rebuild their own cache.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    original_labels: tuple[int, ...] = field(compare=False, repr=False, default=())
    _dist_rows: dict = field(default_factory=dict, compare=False, repr=False)

    def degree(self, v: int) -> int:
        _check_label(self, v)
        return len(self.adjacency[v])

    def distance_row(self, u: int) -> tuple[int, ...]:
        """All distances from ``u``, indexed by label (slot 0 unused)."""
        _check_label(self, u)
        row = self._dist_rows.get(u)
        if row is None:
            dist = [-1] * (self.n + 1)
            dist[u] = 0
            queue = deque([u])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            row = tuple(dist)
            self._dist_rows[u] = row
        return row


@dataclass(frozen=True)
class TreePath:
    """A path given by its vertex sequence; ``length`` counts edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class VertexClassification:
    """Degree-based vertex classes.  All label tuples are sorted.

    pendants: degree 1; majors: degree >= 3; quasi_pendants: vertices
    adjacent to at least one pendant.  ``degrees[v]`` is the degree of ``v``
    (slot 0 unused).
    """

    pendants: tuple[int, ...]
    majors: tuple[int, ...]
    quasi_pendants: tuple[int, ...]
    degrees: tuple[int, ...]


def _check_label(tree: Tree, v) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= tree.n:
        raise LabelOutOfRange(f"label {v!r} not in 1..{tree.n}")


def _as_label(x) -> int:
    try:
        x = operator.index(x)
    except TypeError:
        raise LabelOutOfRange(f"vertex label {x!r} is not an integer") from None
    if x < 1:
        raise LabelOutOfRange(f"vertex label {x} is not positive")
    return x


def _build(n: int, edges, original_labels=None) -> Tree:
    # Internal constructor: callers guarantee edges already form a tree on 1..n.
    adj = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    if original_labels is None:
        original_labels = tuple(range(1, n + 1))
    return Tree(
        n=n,
        edges=tuple((min(u, v), max(u, v)) for u, v in edges),
        adjacency=adjacency,
        original_labels=tuple(original_labels),
    )


def single_vertex() -> Tree:
    """The one-vertex tree (no edges, no pendants)."""
    return _build(1, ())


def from_edge_list(pairs) -> Tree:
    """Validate an iterable of label pairs and return the relabeled tree.

    Labels may be any positive integers; they are mapped to ``1..n`` in
    order of first appearance.  Raises SelfLoop, DuplicateEdge,
    CycleDetected or Disconnected as appropriate, EmptyInput for an empty
    iterable (a single vertex has no edge-list form; use
    :func:`single_vertex`).
    """
    pairs = list(pairs)
    if not pairs:
        raise EmptyInput("empty edge list; use single_vertex() for the one-vertex tree")
    relabel: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for a, b in pairs:
        a = _as_label(a)
        b = _as_label(b)
        if a == b:
            raise SelfLoop(f"edge ({a}, {b}) is a self-loop")
        for x in (a, b):
            if x not in relabel:
                relabel[x] = len(relabel) + 1
        u, v = relabel[a], relabel[b]
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge ({a}, {b}) appears more than once")
        seen.add(key)
        edges.append(key)

    n = len(relabel)
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        parent[ru] = rv
    if len({find(v) for v in range(1, n + 1)}) > 1:
        raise Disconnected("edge list spans more than one component")

    return _build(n, edges, original_labels=tuple(relabel))


def parse_edge_list_text(text: str) -> tuple[tuple[int, int], ...]:
    """Parse the plain edge-list format: one ``u v`` pair per line.

    Blank lines are skipped and lines whose first non-space character is
    ``#`` are comments.  Raises :class:`ParseError` carrying the 1-based
    line number on anything else.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected two labels, got {len(tokens)} tokens",
                line=lineno,
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: labels must be integers", line=lineno) from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: labels must be positive", line=lineno)
        pairs.append((u, v))
    return tuple(pairs)


def classify_vertices(tree: Tree) -> VertexClassification:
    degrees = tuple(len(a) for a in tree.adjacency)
    pendants = tuple(v for v in range(1, tree.n + 1) if degrees[v] == 1)
    majors = tuple(v for v in range(1, tree.n + 1) if degrees[v] >= 3)
    quasi = tuple(
        v
        for v in range(1, tree.n + 1)
        if any(degrees[w] == 1 for w in tree.adjacency[v])
    )
    return VertexClassification(
        pendants=pendants, majors=majors, quasi_pendants=quasi, degrees=degrees
    )


def distance(tree: Tree, u: int, v: int) -> int:
    _check_label(tree, v)
    return tree.distance_row(u)[v]


def path_between(tree: Tree, u: int, v: int) -> TreePath:
    """The unique path from ``u`` to ``v`` as a vertex sequence."""
    _check_label(tree, u)
    _check_label(tree, v)
    if u == v:
        return TreePath((u,))
    parent = [0] * (tree.n + 1)
    parent[u] = u
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in tree.adjacency[x]:
            if parent[y] == 0:
                parent[y] = x
                queue.append(y)
    walk = [v]
    while walk[-1] != u:
        walk.append(parent[walk[-1]])
    return TreePath(tuple(reversed(walk)))


def glue_label_map(n1: int, n2: int, v1: int, v2: int) -> dict[int, int]:
    """Deterministic relabeling used by :func:`glue_at_vertex`.

    Maps the second operand's labels into the glued tree: ``v2`` lands on
    ``v1``, every other label keeps its relative order above ``n1``.
    """
    out = {}
    for w in range(1, n2 + 1):
        if w == v2:
            out[w] = v1
        elif w < v2:
            out[w] = n1 + w
        else:
            out[w] = n1 + w - 1
    return out


def glue_at_vertex(t1: Tree, t2: Tree, shared) -> Tree:
    """Identify one vertex of ``t1`` with one vertex of ``t2``.

    ``shared`` is either a pair ``(v1, v2)`` or a one-item mapping
    ``{v1: v2}``.  Labels of ``t1`` survive unchanged; the rest of ``t2``
    is appended per :func:`glue_label_map`.
    """
    if isinstance(shared, dict):
        if len(shared) != 1:
            raise InvalidIdentification("exactly one vertex pair must be identified")
        (v1, v2), = shared.items()
    else:
        try:
            v1, v2 = shared
        except (TypeError, ValueError):
            raise InvalidIdentification(f"cannot read {shared!r} as a vertex pair") from None
    if not (isinstance(v1, int) and 1 <= v1 <= t1.n):
        raise InvalidIdentification(f"label {v1!r} not in the first tree")
    if not (isinstance(v2, int) and 1 <= v2 <= t2.n):
        raise InvalidIdentification(f"label {v2!r} not in the second tree")
    mapping = glue_label_map(t1.n, t2.n, v1, v2)
    edges = list(t1.edges) + [(mapping[a], mapping[b]) for a, b in t2.edges]
    return _build(t1.n + t2.n - 1, edges)


def remove_branch(tree: Tree, path, keep_anchor: int):
    """Delete a pendant path except its final (anchor) vertex.

    ``path`` runs from a pendant to ``keep_anchor``; every vertex on it but
    the anchor is removed, and the component containing the anchor is
    returned relabeled to ``1..n'`` (ascending old-label order), together
    with the old-to-new label map.
    """
    vertices = tuple(path.vertices) if isinstance(path, TreePath) else tuple(path)
    if not vertices:
        raise AnchorNotOnPath("empty path")
    for v in vertices:
        _check_label(tree, v)
    for a, b in zip(vertices, vertices[1:]):
        if b not in tree.adjacency[a]:
            raise ValueError(f"{a} and {b} are not adjacent; not a path in the tree")
    if keep_anchor != vertices[-1]:
        raise AnchorNotOnPath(f"anchor {keep_anchor} is not the last path vertex")
    if tree.degree(vertices[0]) != 1:
        raise NotPendant(f"path must start at a pendant, {vertices[0]} has degree {tree.degree(vertices[0])}")

    removed = set(vertices[:-1])
    component = {keep_anchor}
    queue = deque([keep_anchor])
    while queue:
        x = queue.popleft()
        for y in tree.adjacency[x]:
            if y not in removed and y not in component:
                component.add(y)
                queue.append(y)
    survivors = sorted(component)
    label_map = {old: i for i, old in enumerate(survivors, start=1)}
    edges = [
        (label_map[a], label_map[b])
        for a, b in tree.edges
        if a in component and b in component
    ]
    originals = tuple(tree.original_labels[old - 1] for old in survivors)
    return _build(len(survivors), edges, original_labels=originals), label_map


def nodes_mod3(tree: Tree) -> tuple[int, ...]:
    """Vertices at distance 1 (mod 3) from every pendant.

    A pendant is never a node (its distance to itself is 0), so trees with
    any pendant at the wrong residue simply have fewer nodes.  The
    one-vertex tree has no pendants and its lone vertex qualifies vacuously.
    """
    pendants = classify_vertices(tree).pendants
    out = []
    for v in range(1, tree.n + 1):
        row = tree.distance_row(v)
        if all(row[u] % 3 == 1 for u in pendants):
            out.append(v)
    return tuple(out)


def pendant_pairs(tree: Tree):
    """Iterate sorted pendant pairs ``(u, w)`` with ``u < w``."""
    return combinations(classify_vertices(tree).pendants, 2)
