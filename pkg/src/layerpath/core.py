"""Storage and neighborhood queries for multi-layered directed networks.

A network holds a node set, an ordered list of layers, and directed weighted
edges keyed by (src, dst, layer). Each ordered node pair may carry at most one
edge per layer, so the multiplicity of any pair is bounded by the number of
layers. Loops are rejected. Weights are relationship strengths in [0, 1].

Networks are built single-writer, then sealed. All path algorithms require a
sealed network; a sealed network is immutable and safe to share across
threads.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import (
    DuplicateEdgeError,
    GraphError,
    InvalidAlphaError,
    LoopEdgeError,
    SealedNetworkError,
    UnknownLayerError,
    UnknownNodeError,
    UnsealedNetworkError,
    WeightOutOfRangeError,
)

POSITIVE = "positive"
NEGATIVE = "negative"
_POLARITIES = (POSITIVE, NEGATIVE)


class LayerId(NamedTuple):
    """Dense layer index paired with its human-readable label."""

    index: int
    label: str


@dataclass(frozen=True, slots=True)
class LayeredEdge:
    """One directed edge on one layer."""

    src: int
    dst: int
    layer: LayerId
    weight: float


def _coerce_node(node) -> int:
    try:
        node = operator.index(node)
    except TypeError:
        raise TypeError(f"node id must be an integer, got {node!r}") from None
    if node < 0:
        raise ValueError(f"node id must be non-negative, got {node}")
    return node


def _coerce_alpha(alpha) -> int:
    try:
        alpha = operator.index(alpha)
    except TypeError:
        raise InvalidAlphaError(f"alpha must be an integer, got {alpha!r}") from None
    if alpha < 1:
        raise InvalidAlphaError(f"alpha must be >= 1, got {alpha}")
    return alpha


def _coerce_weight(weight) -> float:
    try:
        weight = float(weight)
    except (TypeError, ValueError):
        raise WeightOutOfRangeError(f"weight must be a real number, got {weight!r}") from None
    if math.isnan(weight) or not 0.0 <= weight <= 1.0:
        raise WeightOutOfRangeError(f"weight must lie in [0, 1], got {weight}")
    return weight


class MultiLayeredNetwork:
    """Directed multi-layer network with per-pair layer bookkeeping.

    Adjacency is indexed by source node for O(out-degree) scans. Alongside the
    per-layer weights, every ordered pair caches its layer count and weight
    sum, so threshold tests and distance evaluation are O(1) per pair.

    ``polarity`` records how raw weights are read downstream: ``"positive"``
    weights express closeness and are converted to distances, ``"negative"``
    weights already behave like distances and are only averaged.
    """

    def __init__(self, layers: tuple | list = (), polarity: str = POSITIVE) -> None:
        if polarity not in _POLARITIES:
            raise ValueError(f"polarity must be one of {_POLARITIES}, got {polarity!r}")
        self._polarity = polarity
        self._labels: list[str] = []
        self._label_index: dict[str, int] = {}
        self._nodes: set[int] = set()
        # src -> dst -> {layer index: weight}
        self._adj: dict[int, dict[int, dict[int, float]]] = {}
        # src -> dst -> (layer count, weight sum); kept in sync with _adj
        self._pairs: dict[int, dict[int, tuple[int, float]]] = {}
        self._layer_edge_counts: list[int] = []
        self._num_edges = 0
        self._sealed = False
        self._frozen_nodes: frozenset[int] | None = None
        for label in layers:
            self.add_layer(label)

    # -- construction -----------------------------------------------------

    def add_layer(self, label: str | None = None) -> LayerId:
        """Register a new layer; returns its dense index and label."""
        self._check_mutable()
        index = len(self._labels)
        if label is None:
            label = f"l{index + 1}"
        label = str(label)
        if label in self._label_index:
            raise ValueError(f"duplicate layer label {label!r}")
        self._labels.append(label)
        self._label_index[label] = index
        self._layer_edge_counts.append(0)
        return LayerId(index, label)

    def add_node(self, node: int) -> int:
        """Register a node explicitly; isolated nodes are legal."""
        self._check_mutable()
        node = _coerce_node(node)
        self._nodes.add(node)
        return node

    def add_edge(self, src: int, dst: int, layer, weight: float) -> LayeredEdge:
        """Add one directed edge on one layer.

        Endpoints are auto-registered. Raises ``LoopEdgeError`` for src == dst,
        ``DuplicateEdgeError`` if the (src, dst, layer) triple already exists,
        ``WeightOutOfRangeError`` for weights outside [0, 1], and
        ``UnknownLayerError`` for unregistered layers.
        """
        self._check_mutable()
        src = _coerce_node(src)
        dst = _coerce_node(dst)
        if src == dst:
            raise LoopEdgeError(f"loop edge {src} -> {dst} is not allowed")
        lid = self.layer(layer)
        weight = _coerce_weight(weight)

        per_layer = self._adj.setdefault(src, {}).setdefault(dst, {})
        if lid.index in per_layer:
            raise DuplicateEdgeError(
                f"edge {src} -> {dst} already present on layer {lid.label!r}"
            )
        per_layer[lid.index] = weight
        count, wsum = self._pairs.setdefault(src, {}).get(dst, (0, 0.0))
        self._pairs[src][dst] = (count + 1, wsum + weight)
        self._nodes.add(src)
        self._nodes.add(dst)
        self._layer_edge_counts[lid.index] += 1
        self._num_edges += 1
        return LayeredEdge(src, dst, lid, weight)

    def seal(self) -> "MultiLayeredNetwork":
        """Freeze the network; required before running any path algorithm."""
        if not self._sealed:
            if not self._labels:
                raise GraphError("cannot seal a network with no layers")
            self._sealed = True
            self._frozen_nodes = frozenset(self._nodes)
        return self

    def _check_mutable(self) -> None:
        if self._sealed:
            raise SealedNetworkError("network is sealed; build a new one to modify")

    def require_sealed(self) -> None:
        if not self._sealed:
            raise UnsealedNetworkError("operation requires a sealed network; call seal()")

    # -- introspection ----------------------------------------------------

    @property
    def sealed(self) -> bool:
        return self._sealed

    @property
    def polarity(self) -> str:
        return self._polarity

    @property
    def nodes(self) -> frozenset[int]:
        if self._frozen_nodes is not None:
            return self._frozen_nodes
        return frozenset(self._nodes)

    @property
    def layers(self) -> tuple[LayerId, ...]:
        return tuple(LayerId(i, lbl) for i, lbl in enumerate(self._labels))

    @property
    def num_nodes(self) -> int:
        return len(self._nodes)

    @property
    def num_layers(self) -> int:
        return len(self._labels)

    @property
    def num_edges(self) -> int:
        return self._num_edges

    def layer_edge_counts(self) -> list[int]:
        """Edges per layer, indexed like ``layers``."""
        return list(self._layer_edge_counts)

    def has_node(self, node: int) -> bool:
        return node in self._nodes

    def has_layer(self, layer) -> bool:
        try:
            self.layer(layer)
        except UnknownLayerError:
            return False
        return True

    def layer(self, ref) -> LayerId:
        """Resolve an int index, str label, or LayerId to a LayerId."""
        if isinstance(ref, LayerId):
            if 0 <= ref.index < len(self._labels) and self._labels[ref.index] == ref.label:
                return ref
            raise UnknownLayerError(f"layer {ref!r} does not belong to this network")
        if isinstance(ref, str):
            index = self._label_index.get(ref)
            if index is None:
                raise UnknownLayerError(f"unknown layer label {ref!r}")
            return LayerId(index, ref)
        try:
            index = operator.index(ref)
        except TypeError:
            raise UnknownLayerError(f"cannot resolve layer {ref!r}") from None
        if not 0 <= index < len(self._labels):
            raise UnknownLayerError(
                f"layer index {index} out of range for {len(self._labels)} layers"
            )
        return LayerId(index, self._labels[index])

    def _check_node(self, node: int) -> int:
        if node not in self._nodes:
            raise UnknownNodeError(f"unknown node {node!r}")
        return node

    def edges(self) -> Iterator[LayeredEdge]:
        """All edges in insertion order."""
        layers = self.layers
        for src, targets in self._adj.items():
            for dst, per_layer in targets.items():
                for lidx, weight in per_layer.items():
                    yield LayeredEdge(src, dst, layers[lidx], weight)

    def layer_weights(self, x: int, y: int) -> dict[LayerId, float]:
        """Per-layer weights of the ordered pair (x, y); empty if unconnected."""
        self._check_node(x)
        self._check_node(y)
        per_layer = self._adj.get(x, {}).get(y, {})
        layers = self.layers
        return {layers[lidx]: w for lidx, w in per_layer.items()}

    def pair_summary(self, x: int, y: int) -> tuple[int, float]:
        """(layer count, weight sum) for the ordered pair (x, y)."""
        self._check_node(x)
        self._check_node(y)
        return self._pairs.get(x, {}).get(y, (0, 0.0))

    # -- neighborhood queries ----------------------------------------------

    def out_neighbors(self, x: int, layer) -> set[int]:
        """Targets of edges leaving x on one layer."""
        self._check_node(x)
        lidx = self.layer(layer).index
        return {
            dst
            for dst, per_layer in self._adj.get(x, {}).items()
            if lidx in per_layer
        }

    def multi_neighborhood_out(self, x: int, alpha: int) -> set[int]:
        """Nodes that x points to on at least ``alpha`` layers."""
        self._check_node(x)
        alpha = _coerce_alpha(alpha)
        return {
            dst
            for dst, (count, _) in self._pairs.get(x, {}).items()
            if count >= alpha
        }

    # -- comparison ---------------------------------------------------------

    def edge_set(self) -> frozenset[tuple[int, int, str, float]]:
        """Edges as (src, dst, layer label, weight) tuples, order-free."""
        return frozenset(
            (e.src, e.dst, e.layer.label, e.weight) for e in self.edges()
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiLayeredNetwork):
            return NotImplemented
        return (
            self._polarity == other._polarity
            and self._nodes == other._nodes
            and set(self._labels) == set(other._labels)
            and self.edge_set() == other.edge_set()
        )

    __hash__ = None  # mutable container

    def __repr__(self) -> str:
        state = "sealed" if self._sealed else "building"
        return (
            f"MultiLayeredNetwork(nodes={len(self._nodes)}, layers={len(self._labels)}, "
            f"edges={self._num_edges}, polarity={self._polarity!r}, {state})"
        )
