"""Exhaustive generation of unlabeled trees and the cross-checked catalog.

Free trees are produced from the classic rooted level-sequence successor
rule, filtered down to one representative per isomorphism class by keeping
only sequences that equal the centroid-rooted canonical form of their own
underlying tree.  An independent brute-force count (decode every Prufer
sequence, bucket by canonical shape) backs the census for small orders.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .classify import classify_m1
from .errors import CapExceeded, OracleDisagreement
from .exact import laplacian, multiplicity_exact, rational_nullity
from .numeric import cluster_multiplicity, eigen_symmetric
from .trees import Tree, classify_vertices, from_edge_list, single_vertex

__all__ = [
    "ORDER_CAP",
    "CatalogEntry",
    "free_trees",
    "canonical_levels",
    "canonical_form",
    "canonical_relabel",
    "prufer_count_oracle",
    "tree_name",
    "build_catalog",
    "FILTERS",
]

ORDER_CAP = 16

FILTERS = ("all", "extremal", "unit_p1", "unit_p2")


@dataclass(frozen=True)
class CatalogEntry:
    """One isomorphism class with its verdicts, in canonical labeling."""

    canonical: str
    n: int
    p: int
    extremal: bool
    lambda_ratios: tuple[str, ...]
    m1_class: str
    m1_exact: int
    name: str
    edges: tuple[tuple[int, int], ...]


def _level_sequences(n: int):
    # Successor rule on level sequences (root at level 1), reverse
    # lexicographic order starting from the path (1, 2, ..., n).
    seq = list(range(1, n + 1))
    while True:
        yield tuple(seq)
        p = max((i for i in range(n) if seq[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        period = p - q
        for i in range(p, n):
            seq[i] = seq[i - period]


def _tree_from_levels(levels) -> Tree:
    # Parent of each position is the most recent position one level up.
    last_at = {levels[0]: 1}
    edges = []
    for pos in range(1, len(levels)):
        level = levels[pos]
        edges.append((last_at[level - 1], pos + 1))
        last_at[level] = pos + 1
    return from_edge_list(edges)


def _centroids(tree: Tree) -> tuple[int, ...]:
    n = tree.n
    if n == 1:
        return (1,)
    order = []
    parent = [0] * (n + 1)
    parent[1] = 1
    stack = [1]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in tree.adjacency[v]:
            if parent[w] == 0:
                parent[w] = v
                stack.append(w)
    size = [1] * (n + 1)
    for v in reversed(order):
        if v != 1:
            size[parent[v]] += size[v]
    best = None
    out = []
    for v in range(1, n + 1):
        heaviest = n - size[v]
        for w in tree.adjacency[v]:
            if parent[w] == v and w != 1:
                heaviest = max(heaviest, size[w])
        if best is None or heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return tuple(sorted(out))


def _block(tree: Tree, v: int, parent: int, depth: int) -> tuple[int, ...]:
    children = sorted(
        (_block(tree, w, v, depth + 1) for w in tree.adjacency[v] if w != parent),
        reverse=True,
    )
    out = (depth,)
    for child in children:
        out += child
    return out


def canonical_levels(tree: Tree) -> tuple[int, ...]:
    """Centroid-rooted maximal level sequence; equal iff trees isomorphic."""
    return max(_block(tree, c, 0, 1) for c in _centroids(tree))


def canonical_form(tree: Tree) -> str:
    return ",".join(map(str, canonical_levels(tree)))


def canonical_relabel(tree: Tree) -> Tree:
    """The same tree rebuilt with labels 1..n in canonical preorder."""
    if tree.n == 1:
        return single_vertex()
    return _tree_from_levels(canonical_levels(tree))


def free_trees(n: int, cap: int = ORDER_CAP):
    """Yield one representative per isomorphism class of trees on n vertices.

    A rooted level sequence survives exactly when it coincides with the
    canonical form of its own underlying free tree, so each class shows up
    once, in the successor rule's order.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"order {n} above the supported cap {cap}")
    if n == 1:
        yield single_vertex()
        return
    for seq in _level_sequences(n):
        tree = _tree_from_levels(seq)
        if canonical_levels(tree) == seq:
            yield tree


def _decode_prufer(code, n: int):
    # Heap-based decode; returns adjacency lists over 0..n-1.
    remaining = [0] * n
    for x in code:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(leaves)
    adj = [[] for _ in range(n)]
    for x in code:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(x)
        adj[x].append(leaf)
        remaining[x] -= 1
        if remaining[x] == 0:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    adj[u].append(v)
    adj[v].append(u)
    return adj


def _free_key(adj, n: int, memo: dict) -> int:
    # Interned canonical id: same id within one memo iff isomorphic.
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for v in order:
        for w in adj[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    size = [1] * n
    for v in reversed(order):
        if v:
            size[parent[v]] += size[v]
    best = n + 1
    centroids = []
    for v in range(n):
        heaviest = n - size[v]
        for w in adj[v]:
            if parent[w] == v and w != 0:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best = heaviest
            centroids = [v]
        elif heaviest == best:
            centroids.append(v)

    def rooted_id(v: int, par: int) -> int:
        key = tuple(sorted(rooted_id(w, v) for w in adj[v] if w != par))
        rid = memo.get(key)
        if rid is None:
            rid = len(memo)
            memo[key] = rid
        return rid

    return min(rooted_id(c, -1) for c in centroids)


def prufer_count_oracle(n: int) -> int:
    """Count isomorphism classes by brute force over all n^(n-2) labeled trees.

    Only sensible for n in 2..9; each decoded tree is bucketed by an
    interned centroid-canonical shape id.
    """
    if not 2 <= n <= 9:
        raise CapExceeded(f"brute-force census supports 2..9, got {n}")
    if n == 2:
        return 1
    memo: dict = {}
    seen: set[int] = set()
    for code in product(range(n), repeat=n - 2):
        adj = _decode_prufer(code, n)
        seen.add(_free_key(adj, n, memo))
    return len(seen)


def tree_name(tree: Tree) -> str:
    """Human name for the common shapes: P_n, K_{1,k}, spider(...); else ''."""
    classes = classify_vertices(tree)
    if not classes.majors:
        return f"P_{tree.n}"
    if len(classes.majors) == 1:
        center = classes.majors[0]
        row = tree.distance_row(center)
        legs = sorted(row[u] for u in classes.pendants)
        if all(leg == 1 for leg in legs):
            return f"K_{{1,{len(legs)}}}"
        return "spider(" + ",".join(map(str, legs)) + ")"
    return ""


def _entry_for_edges(edges, tol: float = 1e-12) -> CatalogEntry:
    tree = from_edge_list(edges) if edges else single_vertex()
    if tree.n == 1:
        return CatalogEntry(
            canonical=canonical_form(tree),
            n=1,
            p=0,
            extremal=False,
            lambda_ratios=(),
            m1_class="other",
            m1_exact=rational_nullity(laplacian(tree), 1),
            name="P_1",
            edges=(),
        )

    report = classify_m1(tree)
    p = report.p
    spectrum = eigen_symmetric(laplacian(tree), tol=tol)
    has_big_cluster = any(mult == p - 1 for _, mult in spectrum.clusters)
    if report.extremal != has_big_cluster:
        raise OracleDisagreement(
            f"extremal verdict {report.extremal} but numeric clusters "
            f"{spectrum.clusters} {'reach' if has_big_cluster else 'miss'} p-1={p - 1}",
            edges=tree.edges,
        )
    for param in report.lambda_set:
        if multiplicity_exact(tree, param) != p - 1:
            raise OracleDisagreement(
                f"exact multiplicity of ratio {param.ratio} is not p-1",
                edges=tree.edges,
            )
        if cluster_multiplicity(spectrum, param.value) != p - 1:
            raise OracleDisagreement(
                f"numeric multiplicity at {param.value:.6f} is not p-1",
                edges=tree.edges,
            )
    if cluster_multiplicity(spectrum, 1.0) != report.m1_exact:
        raise OracleDisagreement(
            f"numeric multiplicity at 1 disagrees with exact {report.m1_exact}",
            edges=tree.edges,
        )

    return CatalogEntry(
        canonical=canonical_form(tree),
        n=tree.n,
        p=p,
        extremal=report.extremal,
        lambda_ratios=tuple(str(prm.ratio) for prm in report.lambda_set),
        m1_class=report.m1_class,
        m1_exact=report.m1_exact,
        name=tree_name(tree),
        edges=tree.edges,
    )


def _matches(entry: CatalogEntry, filter_name: str) -> bool:
    if filter_name == "all":
        return True
    if filter_name == "extremal":
        return entry.extremal
    if filter_name == "unit_p1":
        return entry.m1_class == "p-1"
    if filter_name == "unit_p2":
        return entry.m1_class == "p-2"
    raise ValueError(f"unknown filter {filter_name!r}; choose from {FILTERS}")


def build_catalog(max_n: int, filter_name: str = "all", jobs: int = 1, tol: float = 1e-12):
    """Catalog every tree of order <= max_n with cross-checked verdicts.

    Each entry passes the full oracle gauntlet (combinatorial class vs
    exact nullity vs numeric clusters); any disagreement raises
    OracleDisagreement carrying the offending edge list.  Entries are
    sorted by (n, canonical form).  ``jobs > 1`` fans the per-tree work out
    to worker processes, order preserved.
    """
    if filter_name not in FILTERS:
        raise ValueError(f"unknown filter {filter_name!r}; choose from {FILTERS}")
    if max_n > ORDER_CAP:
        raise CapExceeded(f"order {max_n} above the supported cap {ORDER_CAP}")
    all_edges = []
    for n in range(1, max_n + 1):
        for tree in free_trees(n):
            all_edges.append(tree.edges)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_entry_for_edges, all_edges, chunksize=16))
    else:
        entries = [_entry_for_edges(edges) for edges in all_edges]

    entries = [e for e in entries if _matches(e, filter_name)]
    entries.sort(key=lambda e: (e.n, e.canonical))
    return entries
