"""Distance conversion and collapse of parallel layered edges.

The pairwise distance averages the per-layer closeness weights over all
layers of the network (absent layers count as weight 0) and, for positive
polarity, flips closeness into distance:

    d(x, y) = 1 - (sum of w(x, y, l) over all layers) / |L|

For negative polarity the weights already behave like distances, so the sum
is only normalized, never subtracted from 1.

A pair of nodes survives aggregation into a single weighted edge when it
meets the configured thresholds: at least ``alpha`` layers, distance at most
``beta``, or both. The aggregated edge weight is always d(x, y).

One rule is load-bearing and deliberate: a pair with no layered edge at all
never receives an aggregated edge, even though its distance is 1 and a
``beta`` of 1 would formally admit it. Admitting such pairs would turn every
aggregation with beta = 1 into a complete digraph, which contradicts how
out-degrees behave under loose thresholds. Tests pin this behavior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .core import MultiLayeredNetwork, POSITIVE, _coerce_alpha
from .errors import InvalidBetaError, SameNodeError

LAYERS_ONLY = "layers_only"
DISTANCE_ONLY = "distance_only"
COMBINED = "combined"
_MODES = (LAYERS_ONLY, DISTANCE_ONLY, COMBINED)


def _coerce_beta(beta) -> float:
    try:
        beta = float(beta)
    except (TypeError, ValueError):
        raise InvalidBetaError(f"beta must be a real number, got {beta!r}") from None
    if math.isnan(beta) or not 0.0 <= beta <= 1.0:
        raise InvalidBetaError(f"beta must lie in [0, 1], got {beta}")
    return beta


@dataclass(frozen=True)
class AggregationParams:
    """Thresholds selecting which pairs survive aggregation.

    ``mode`` picks the active thresholds: ``layers_only`` applies alpha,
    ``distance_only`` applies beta, ``combined`` (default) applies both.
    """

    alpha: int = 1
    beta: float = 1.0
    mode: str = COMBINED

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _coerce_alpha(self.alpha))
        object.__setattr__(self, "beta", _coerce_beta(self.beta))
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")

    @property
    def effective_alpha(self) -> int:
        return self.alpha if self.mode != DISTANCE_ONLY else 1

    @property
    def effective_beta(self) -> float:
        return self.beta if self.mode != LAYERS_ONLY else 1.0


class AggregatedEdge(NamedTuple):
    src: int
    dst: int
    distance: float
    layer_count: int


class AggregatedGraph:
    """Simple weighted digraph produced by collapsing layered edges."""

    def __init__(self, nodes: frozenset[int], params: AggregationParams) -> None:
        self._nodes = nodes
        self._params = params
        # src -> {dst: distance}; parallel layer counts per pair
        self._adj: dict[int, dict[int, float]] = {}
        self._counts: dict[int, dict[int, int]] = {}
        self._num_edges = 0

    def _add(self, src: int, dst: int, dist: float, count: int) -> None:
        self._adj.setdefault(src, {})[dst] = dist
        self._counts.setdefault(src, {})[dst] = count
        self._num_edges += 1

    @property
    def nodes(self) -> frozenset[int]:
        return self._nodes

    @property
    def params(self) -> AggregationParams:
        return self._params

    @property
    def num_edges(self) -> int:
        return self._num_edges

    def out_edges(self, x: int) -> dict[int, float]:
        """Aggregated {target: distance} map of x (do not mutate)."""
        return self._adj.get(x, {})

    def out_degree(self, x: int) -> int:
        return len(self._adj.get(x, ()))

    def edge(self, x: int, y: int) -> AggregatedEdge | None:
        dist = self._adj.get(x, {}).get(y)
        if dist is None:
            return None
        return AggregatedEdge(x, y, dist, self._counts[x][y])

    def edges(self) -> Iterator[AggregatedEdge]:
        for src, targets in self._adj.items():
            counts = self._counts[src]
            for dst, dist in targets.items():
                yield AggregatedEdge(src, dst, dist, counts[dst])


def _distance_from_summary(wsum: float, num_layers: int, positive: bool) -> float:
    if positive:
        return 1.0 - wsum / num_layers
    # negative polarity: weights already express distance, only normalize
    return min(1.0, max(0.0, wsum / num_layers))


def distance(net: MultiLayeredNetwork, x: int, y: int) -> float:
    """Layer-averaged distance between two distinct nodes, in [0, 1].

    A pair with no edge on any layer has distance 1 under positive polarity
    (maximal strangeness) and 0 under negative polarity.
    """
    if x == y:
        raise SameNodeError("distance is defined for distinct nodes only")
    count, wsum = net.pair_summary(x, y)
    del count
    return _distance_from_summary(wsum, net.num_layers, net.polarity == POSITIVE)


def me_layers(net: MultiLayeredNetwork, x: int, y: int, alpha: int) -> AggregatedEdge | None:
    """Aggregated edge for (x, y) if it spans at least ``alpha`` layers."""
    alpha = _coerce_alpha(alpha)
    count, wsum = net.pair_summary(x, y)
    if count < alpha:
        return None
    dist = _distance_from_summary(wsum, net.num_layers, net.polarity == POSITIVE)
    return AggregatedEdge(x, y, dist, count)


def me_distance(net: MultiLayeredNetwork, x: int, y: int, beta: float) -> AggregatedEdge | None:
    """Aggregated edge for (x, y) if its distance is at most ``beta``.

    Pairs without any layered edge return None regardless of beta (see the
    module docstring).
    """
    beta = _coerce_beta(beta)
    count, wsum = net.pair_summary(x, y)
    if count < 1:
        return None
    dist = _distance_from_summary(wsum, net.num_layers, net.polarity == POSITIVE)
    if dist > beta:
        return None
    return AggregatedEdge(x, y, dist, count)


def me_combined(
    net: MultiLayeredNetwork, x: int, y: int, alpha: int, beta: float
) -> AggregatedEdge | None:
    """Aggregated edge for (x, y) if both thresholds hold."""
    alpha = _coerce_alpha(alpha)
    beta = _coerce_beta(beta)
    count, wsum = net.pair_summary(x, y)
    if count < alpha:
        return None
    dist = _distance_from_summary(wsum, net.num_layers, net.polarity == POSITIVE)
    if dist > beta:
        return None
    return AggregatedEdge(x, y, dist, count)


def aggregate_graph(net: MultiLayeredNetwork, params: AggregationParams) -> AggregatedGraph:
    """Collapse every qualifying pair into a single aggregated edge.

    Only pairs carrying at least one layered edge are visited; the beta
    comparison is exact (no epsilon). Requires a sealed network.
    """
    net.require_sealed()
    alpha = params.effective_alpha
    beta = params.effective_beta
    num_layers = net.num_layers
    positive = net.polarity == POSITIVE

    graph = AggregatedGraph(net.nodes, params)
    for src, targets in net._pairs.items():
        for dst, (count, wsum) in targets.items():
            if count < alpha:
                continue
            dist = _distance_from_summary(wsum, num_layers, positive)
            if dist > beta:
                continue
            graph._add(src, dst, dist, count)
    return graph
