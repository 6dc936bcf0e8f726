"""Shortest multi-layered paths.

A multi-layered path hops along aggregated edges; its length is the sum of
their distances. Two strategies compute single-source shortest paths and must
agree on lengths and reachability for every input:

* ``dap_sssp`` aggregates the whole network first, then runs a binary-heap
  Dijkstra over the resulting simple digraph (preprocessing approach).
* ``mda_sssp`` never materializes the aggregated graph: during the search it
  expands the multi-layer neighborhood of each settled node, applying the
  layer-count threshold, computing the pair distance on demand, and applying
  the distance threshold, edge by edge.

``ml_floyd_warshall`` produces the all-pairs matrix over the same aggregated
edge relation, and ``brute_force_sp`` is a deliberately naive simple-path
enumerator kept around as a test oracle.

All distances are non-negative, so Dijkstra is exact; unreachable nodes are
reported as absent from the result map rather than as a sentinel number.
Ties between frontier nodes with equal tentative length settle the lowest
node id first, which makes runs reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush
from math import inf

import numpy as np

from .aggregate import AggregatedGraph, AggregationParams, aggregate_graph
from .core import MultiLayeredNetwork, POSITIVE
from .errors import SizeGuardExceededError, UnknownNodeError

DEFAULT_APSP_NODE_CAP = 2_000
DEFAULT_BRUTE_FORCE_NODE_CAP = 10


@dataclass
class ShortestPathResult:
    """Single-source shortest path lengths and predecessor tree.

    ``lengths`` maps every reachable node (the source included, at 0.0) to its
    shortest path length; nodes absent from the map are unreachable.
    ``predecessors`` maps each reachable node to the node before it on a
    shortest path, with the source mapped to None.
    """

    source: int
    lengths: dict[int, float]
    predecessors: dict[int, int | None]
    nodes: frozenset[int]
    params: AggregationParams | None = None

    @property
    def reachable(self) -> set[int]:
        """All nodes with a finite shortest path length, source included."""
        return set(self.lengths)

    def length(self, v: int) -> float:
        """Shortest path length to ``v``; ``inf`` if unreachable."""
        if v in self.lengths:
            return self.lengths[v]
        if v not in self.nodes:
            raise UnknownNodeError(f"unknown node {v!r}")
        return inf

    def path_to(self, target: int) -> list[int]:
        """Node sequence from source to target, empty if unreachable."""
        if target not in self.nodes:
            raise UnknownNodeError(f"unknown node {target!r}")
        if target not in self.lengths:
            return []
        path = [target]
        seen = 0
        v = self.predecessors[target]
        while v is not None:
            path.append(v)
            v = self.predecessors[v]
            seen += 1
            if seen > len(self.nodes):
                raise RuntimeError("predecessor chain does not terminate")
        path.reverse()
        return path


def reconstruct_path(result: ShortestPathResult, target: int) -> list[int]:
    """Follow predecessors back from ``target``; see ``path_to``."""
    return result.path_to(target)


@dataclass
class DistanceMatrix:
    """All-pairs shortest lengths; rows and columns follow ``order``."""

    order: list[int]
    values: np.ndarray
    params: AggregationParams | None = None
    _index: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {v: i for i, v in enumerate(self.order)}

    def entry(self, x: int, y: int) -> float:
        try:
            return float(self.values[self._index[x], self._index[y]])
        except KeyError:
            raise UnknownNodeError(f"unknown node in pair ({x!r}, {y!r})") from None


def _dijkstra(adj: dict[int, dict[int, float]], source: int):
    """Heap Dijkstra over a {src: {dst: distance}} adjacency map.

    Lazy-deletion variant: a node may sit in the heap several times; stale
    entries are skipped once the node is settled. Only finite tentative
    lengths ever enter the heap, so draining it is equivalent to stopping as
    soon as the extracted minimum would be infinite.
    """
    lengths = {source: 0.0}
    preds: dict[int, int | None] = {source: None}
    settled = set()
    heap = [(0.0, source)]
    while heap:
        dist, v = heappop(heap)
        if v in settled:
            continue
        settled.add(v)
        targets = adj.get(v)
        if not targets:
            continue
        for w, d in targets.items():
            cand = dist + d
            cur = lengths.get(w)
            if cur is None or cand < cur:
                lengths[w] = cand
                preds[w] = v
                heappush(heap, (cand, w))
    return lengths, preds


def aggregated_sssp(graph: AggregatedGraph, source: int) -> ShortestPathResult:
    """Dijkstra over an already aggregated graph (the search half of DAP)."""
    if source not in graph.nodes:
        raise UnknownNodeError(f"unknown source node {source!r}")
    lengths, preds = _dijkstra(graph._adj, source)
    return ShortestPathResult(source, lengths, preds, graph.nodes, graph.params)


def dap_sssp(
    net: MultiLayeredNetwork,
    source: int,
    params: AggregationParams | None = None,
) -> ShortestPathResult:
    """Preprocessing strategy: aggregate every qualifying pair, then search.

    Aggregation cost is paid once per call; when running many sources against
    the same thresholds, call ``aggregate_graph`` once and reuse it with
    ``aggregated_sssp``.
    """
    net.require_sealed()
    if not net.has_node(source):
        raise UnknownNodeError(f"unknown source node {source!r}")
    if params is None:
        params = AggregationParams()
    return aggregated_sssp(aggregate_graph(net, params), source)


def mda_sssp(
    net: MultiLayeredNetwork,
    source: int,
    params: AggregationParams | None = None,
) -> ShortestPathResult:
    """On-the-fly strategy: threshold and price edges during the search.

    Expands each settled node's multi-layer out-neighborhood under the
    layer-count threshold, computes the pair distance on demand, and drops
    edges beyond the distance threshold, so the searched edge relation is
    exactly the one ``aggregate_graph`` would materialize. No aggregated
    graph is built.
    """
    net.require_sealed()
    if not net.has_node(source):
        raise UnknownNodeError(f"unknown source node {source!r}")
    if params is None:
        params = AggregationParams()
    alpha = params.effective_alpha
    beta = params.effective_beta
    num_layers = net.num_layers
    positive = net.polarity == POSITIVE
    pairs = net._pairs

    lengths = {source: 0.0}
    preds: dict[int, int | None] = {source: None}
    settled = set()
    heap = [(0.0, source)]
    while heap:
        dist, v = heappop(heap)
        if v in settled:
            continue
        settled.add(v)
        targets = pairs.get(v)
        if not targets:
            continue
        for w, (count, wsum) in targets.items():
            if count < alpha:
                continue
            # mirrors aggregate._distance_from_summary, kept inline for the
            # hot loop; both sides must stay arithmetically identical
            if positive:
                d = 1.0 - wsum / num_layers
            else:
                d = min(1.0, max(0.0, wsum / num_layers))
            if d > beta:
                continue
            cand = dist + d
            cur = lengths.get(w)
            if cur is None or cand < cur:
                lengths[w] = cand
                preds[w] = v
                heappush(heap, (cand, w))
    return ShortestPathResult(source, lengths, preds, net.nodes, params)


def ml_floyd_warshall(
    net: MultiLayeredNetwork,
    params: AggregationParams | None = None,
    *,
    max_nodes: int = DEFAULT_APSP_NODE_CAP,
) -> DistanceMatrix:
    """All-pairs shortest lengths over the aggregated edge relation.

    Classic O(|V|^3) relaxation on a dense matrix; guarded by ``max_nodes``
    because the cube grows quickly. Rows and columns are ordered by
    ascending node id.
    """
    net.require_sealed()
    if params is None:
        params = AggregationParams()
    n = net.num_nodes
    if n > max_nodes:
        raise SizeGuardExceededError(
            f"{n} nodes exceed the all-pairs cap of {max_nodes}; "
            "raise max_nodes to override"
        )
    order = sorted(net.nodes)
    index = {v: i for i, v in enumerate(order)}
    values = np.full((n, n), np.inf, dtype=np.float64)
    np.fill_diagonal(values, 0.0)
    for src, dst, dist, _ in aggregate_graph(net, params).edges():
        values[index[src], index[dst]] = dist
    for k in range(n):
        np.minimum(values, values[:, k, None] + values[None, k, :], out=values)
    return DistanceMatrix(order, values, params)


def apsp_repeated_dijkstra(
    net: MultiLayeredNetwork,
    params: AggregationParams | None = None,
    *,
    max_nodes: int = DEFAULT_APSP_NODE_CAP,
    jobs: int = 1,
) -> DistanceMatrix:
    """All-pairs matrix by running Dijkstra once per source.

    Aggregates once, then fans the per-source searches across ``jobs`` worker
    threads. Row assembly is indexed by source, so the matrix is identical
    for any job count. Must agree with ``ml_floyd_warshall`` on every entry.
    """
    net.require_sealed()
    if params is None:
        params = AggregationParams()
    n = net.num_nodes
    if n > max_nodes:
        raise SizeGuardExceededError(
            f"{n} nodes exceed the all-pairs cap of {max_nodes}; "
            "raise max_nodes to override"
        )
    order = sorted(net.nodes)
    index = {v: i for i, v in enumerate(order)}
    values = np.full((n, n), np.inf, dtype=np.float64)
    graph = aggregate_graph(net, params)

    def fill_row(source: int) -> None:
        row = values[index[source]]
        for v, length in aggregated_sssp(graph, source).lengths.items():
            row[index[v]] = length

    if jobs > 1 and n > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            list(pool.map(fill_row, order))
    else:
        for source in order:
            fill_row(source)
    return DistanceMatrix(order, values, params)


def brute_force_sp(
    net: MultiLayeredNetwork,
    source: int,
    params: AggregationParams | None = None,
    *,
    max_nodes: int = DEFAULT_BRUTE_FORCE_NODE_CAP,
) -> ShortestPathResult:
    """Test oracle: exhaustive enumeration of simple paths, no pruning.

    Runtime is exponential in the node count, hence the hard cap. Kept free
    of any Dijkstra-style shortcut so it can stand as an independent check.
    """
    net.require_sealed()
    if not net.has_node(source):
        raise UnknownNodeError(f"unknown source node {source!r}")
    if net.num_nodes > max_nodes:
        raise SizeGuardExceededError(
            f"{net.num_nodes} nodes exceed the brute-force cap of {max_nodes}"
        )
    if params is None:
        params = AggregationParams()
    adj = aggregate_graph(net, params)._adj

    lengths = {source: 0.0}
    preds: dict[int, int | None] = {source: None}
    on_path = {source}

    def explore(v: int, acc: float) -> None:
        for w, d in adj.get(v, {}).items():
            if w in on_path:
                continue
            cand = acc + d
            if cand < lengths.get(w, inf):
                lengths[w] = cand
                preds[w] = v
            on_path.add(w)
            explore(w, cand)
            on_path.discard(w)

    explore(source, 0.0)
    return ShortestPathResult(source, lengths, preds, net.nodes, params)
