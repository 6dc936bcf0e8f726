"""Network construction, validation, and neighborhood queries."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from layerpath import (
    NEGATIVE,
    POSITIVE,
    DuplicateEdgeError,
    GraphError,
    InvalidAlphaError,
    LayerId,
    LoopEdgeError,
    MultiLayeredNetwork,
    SealedNetworkError,
    UnknownLayerError,
    UnknownNodeError,
    UnsealedNetworkError,
    WeightOutOfRangeError,
)
from netgen import build_net, layered_networks
from oracles import naive_neighborhood, recount_pairs

X, Y, Z, U, V = range(5)


def demo_net():
    """Five people, three relationship layers.

    On the first layer everyone has a few mutual ties; on the other two only
    X keeps in touch with the rest. X reaches Y and Z on all three layers but
    U and V on just two, which the threshold tests below rely on.
    """
    net = MultiLayeredNetwork(layers=("work", "lunch", "tennis"))
    for src, dst in [(X, Y), (Y, X), (X, Z), (Z, X), (Y, Z), (U, Z), (U, V), (V, U)]:
        net.add_edge(src, dst, "work", 0.5)
    for src, dst in [(X, Y), (X, Z), (X, U), (X, V)]:
        net.add_edge(src, dst, "lunch", 0.6)
        net.add_edge(src, dst, "tennis", 0.7)
    return net.seal()


class TestLayers:
    def test_explicit_labels(self):
        net = MultiLayeredNetwork(layers=("a", "b"))
        assert net.num_layers == 2
        assert [l.label for l in net.layers] == ["a", "b"]
        assert [l.index for l in net.layers] == [0, 1]

    def test_auto_labels_count_from_one(self):
        net = MultiLayeredNetwork()
        assert net.add_layer() == LayerId(0, "l1")
        assert net.add_layer() == LayerId(1, "l2")

    def test_duplicate_label_rejected(self):
        net = MultiLayeredNetwork(layers=("a",))
        with pytest.raises(ValueError):
            net.add_layer("a")

    def test_layer_resolution(self):
        net = MultiLayeredNetwork(layers=("a", "b"))
        assert net.layer(0) == LayerId(0, "a")
        assert net.layer("b") == LayerId(1, "b")
        assert net.layer(LayerId(1, "b")) == LayerId(1, "b")
        for bad in (2, "c", LayerId(0, "b")):
            with pytest.raises(UnknownLayerError):
                net.layer(bad)

    def test_has_layer(self):
        net = MultiLayeredNetwork(layers=("a",))
        assert net.has_layer("a") and net.has_layer(0)
        assert not net.has_layer("z") and not net.has_layer(5)


class TestNodes:
    def test_add_node_idempotent(self):
        net = MultiLayeredNetwork(layers=("a",))
        net.add_node(3)
        net.add_node(3)
        assert net.nodes == frozenset({3})

    def test_isolated_nodes_are_legal(self):
        net = build_net(("a",), [(0, 1, "a", 0.5)], extra_nodes=(7,))
        assert 7 in net.nodes
        assert net.num_nodes == 3

    def test_node_id_validation(self):
        net = MultiLayeredNetwork(layers=("a",))
        with pytest.raises(ValueError):
            net.add_node(-1)
        with pytest.raises(TypeError):
            net.add_node("zero")
        with pytest.raises(TypeError):
            net.add_node(1.0)


class TestEdges:
    def test_add_edge_returns_resolved_edge(self):
        net = MultiLayeredNetwork(layers=("a",))
        edge = net.add_edge(0, 1, "a", 0.25)
        assert edge.src == 0 and edge.dst == 1
        assert edge.layer == LayerId(0, "a")
        assert edge.weight == 0.25
        assert net.nodes == frozenset({0, 1})

    def test_loop_rejected(self):
        net = MultiLayeredNetwork(layers=("a",))
        with pytest.raises(LoopEdgeError):
            net.add_edge(4, 4, "a", 0.5)

    def test_duplicate_triple_rejected(self):
        net = MultiLayeredNetwork(layers=("a", "b"))
        net.add_edge(0, 1, "a", 0.5)
        with pytest.raises(DuplicateEdgeError):
            net.add_edge(0, 1, "a", 0.9)
        # same pair on another layer, and the reverse direction, are fine
        net.add_edge(0, 1, "b", 0.9)
        net.add_edge(1, 0, "a", 0.9)
        assert net.num_edges == 3

    @pytest.mark.parametrize("weight", [-0.1, 1.0001, float("nan"), float("inf")])
    def test_weight_range(self, weight):
        net = MultiLayeredNetwork(layers=("a",))
        with pytest.raises(WeightOutOfRangeError):
            net.add_edge(0, 1, "a", weight)

    def test_boundary_weights_are_legal(self):
        net = MultiLayeredNetwork(layers=("a", "b"))
        net.add_edge(0, 1, "a", 0.0)
        net.add_edge(0, 1, "b", 1.0)
        assert net.pair_summary(0, 1) == (2, 1.0)

    def test_unknown_layer(self):
        net = MultiLayeredNetwork(layers=("a",))
        with pytest.raises(UnknownLayerError):
            net.add_edge(0, 1, "nope", 0.5)

    def test_edges_iterate_in_insertion_order(self):
        net = MultiLayeredNetwork(layers=("a", "b"))
        net.add_edge(2, 0, "b", 0.1)
        net.add_edge(0, 2, "a", 0.2)
        assert [(e.src, e.dst) for e in net.edges()] == [(2, 0), (0, 2)]


class TestSealing:
    def test_queries_require_seal(self):
        net = MultiLayeredNetwork(layers=("a",))
        net.add_edge(0, 1, "a", 0.5)
        with pytest.raises(UnsealedNetworkError):
            net.require_sealed()
        net.seal()
        net.require_sealed()

    def test_sealed_network_is_immutable(self):
        net = build_net(("a",), [(0, 1, "a", 0.5)])
        with pytest.raises(SealedNetworkError):
            net.add_edge(1, 2, "a", 0.5)
        with pytest.raises(SealedNetworkError):
            net.add_node(9)
        with pytest.raises(SealedNetworkError):
            net.add_layer("b")

    def test_seal_is_idempotent(self):
        net = build_net(("a",), [(0, 1, "a", 0.5)])
        assert net.seal() is net
        assert net.sealed

    def test_seal_requires_a_layer(self):
        with pytest.raises(GraphError):
            MultiLayeredNetwork().seal()


class TestQueries:
    def test_counts(self):
        net = demo_net()
        assert net.num_nodes == 5
        assert net.num_layers == 3
        assert net.num_edges == 16
        assert net.layer_edge_counts() == [8, 4, 4]

    def test_layer_weights_and_pair_summary(self):
        net = demo_net()
        weights = net.layer_weights(X, Y)
        assert {l.label: w for l, w in weights.items()} == {
            "work": 0.5, "lunch": 0.6, "tennis": 0.7,
        }
        count, wsum = net.pair_summary(X, Y)
        assert count == 3
        assert wsum == 0.5 + 0.6 + 0.7
        assert net.pair_summary(Y, V) == (0, 0.0)

    def test_pair_summary_unknown_node(self):
        net = demo_net()
        with pytest.raises(UnknownNodeError):
            net.pair_summary(X, 99)

    def test_out_neighbors_per_layer(self):
        net = demo_net()
        assert net.out_neighbors(X, "work") == {Y, Z}
        assert net.out_neighbors(X, "lunch") == {Y, Z, U, V}
        assert net.out_neighbors(U, "tennis") == set()

    def test_multi_neighborhood_thresholds(self):
        net = demo_net()
        assert net.multi_neighborhood_out(X, 1) == {Y, Z, U, V}
        assert net.multi_neighborhood_out(X, 2) == {Y, Z, U, V}
        assert net.multi_neighborhood_out(X, 3) == {Y, Z}
        # more layers than the network has: nothing qualifies
        assert net.multi_neighborhood_out(X, 4) == set()
        assert net.multi_neighborhood_out(V, 1) == {U}

    def test_multi_neighborhood_alpha_validation(self):
        net = demo_net()
        with pytest.raises(InvalidAlphaError):
            net.multi_neighborhood_out(X, 0)


class TestEquality:
    def test_insertion_order_does_not_matter(self):
        a = build_net(("a", "b"), [(0, 1, "a", 0.5), (1, 2, "b", 0.25)])
        b = build_net(("b", "a"), [(1, 2, "b", 0.25), (0, 1, "a", 0.5)])
        assert a == b

    def test_weight_and_polarity_matter(self):
        edges = [(0, 1, "a", 0.5)]
        base = build_net(("a",), edges)
        assert base != build_net(("a",), [(0, 1, "a", 0.75)])
        assert base != build_net(("a",), edges, polarity=NEGATIVE)
        assert base != build_net(("z",), [(0, 1, "z", 0.5)])

    def test_extra_isolated_node_matters(self):
        edges = [(0, 1, "a", 0.5)]
        assert build_net(("a",), edges) != build_net(("a",), edges, extra_nodes=(5,))


@settings(max_examples=60)
@given(layered_networks(polarities=(POSITIVE, NEGATIVE)), st.integers(1, 4))
def test_neighborhood_matches_naive_recount(net, alpha):
    for x in net.nodes:
        assert net.multi_neighborhood_out(x, alpha) == naive_neighborhood(net, x, alpha)


@settings(max_examples=60)
@given(layered_networks(polarities=(POSITIVE, NEGATIVE)))
def test_pair_cache_matches_edge_recount(net):
    recounted = recount_pairs(net)
    for (src, dst), (count, wsum) in recounted.items():
        assert net.pair_summary(src, dst) == (count, wsum)
    total = sum(count for count, _ in recounted.values())
    assert net.num_edges == total == len(list(net.edges()))
