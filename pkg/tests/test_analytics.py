"""Path statistics rows and threshold sweep grids."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from layerpath import (
    POSITIVE,
    AggregationParams,
    InconsistentInputError,
    MultiLayeredNetwork,
    ParameterError,
    PathStats,
    STATS_COLUMNS,
    aggregate_graph,
    dap_sssp,
    edge_count_sweep,
    path_stats,
    stats_table,
)
from netgen import build_net, layered_networks


def chain_net():
    """0 -> 1 -> 2 on one layer, both hops at distance 0.5."""
    return build_net(("a",), [(0, 1, "a", 0.5), (1, 2, "a", 0.5)])


class TestPathStats:
    def test_hand_worked_chain(self):
        net = chain_net()
        stats = path_stats(dap_sssp(net, 0), net)
        assert stats.source == 0
        assert stats.num_routes == 2
        assert stats.avg_len == (0.5 + 1.0) / 2
        assert stats.min_len == 0.5
        assert stats.max_len == 1.0
        assert stats.avg_handshakes == 1.5  # one direct hop, one two-hop
        assert stats.num_neighbors == 1
        assert stats.pct_connected == 1.0

    def test_middle_and_terminal_sources(self):
        net = chain_net()
        mid = path_stats(dap_sssp(net, 1), net)
        assert mid.num_routes == 1
        assert mid.pct_connected == 0.5
        end = path_stats(dap_sssp(net, 2), net)
        assert end == PathStats(
            source=2, alpha=1, beta=1.0, num_routes=0, avg_len=0.0,
            min_len=0.0, max_len=0.0, avg_handshakes=0.0, num_neighbors=0,
            pct_connected=0.0,
        )

    def test_alpha_above_layer_count_zeroes_the_row(self):
        net = chain_net()
        params = AggregationParams(2, 1.0)
        stats = path_stats(dap_sssp(net, 0, params), net)
        assert stats.num_routes == 0
        assert stats.num_neighbors == 0
        assert stats.pct_connected == 0.0

    def test_single_node_network_reports_zero_connectivity(self):
        net = MultiLayeredNetwork(layers=("a",))
        net.add_node(0)
        net.seal()
        stats = path_stats(dap_sssp(net, 0), net)
        assert stats.pct_connected == 0.0
        assert stats.num_routes == 0

    def test_neighbors_respect_both_thresholds(self):
        net = build_net(
            ("a", "b"),
            [
                (0, 1, "a", 0.9), (0, 1, "b", 0.9),   # count 2, d = 0.1
                (0, 2, "a", 0.9),                      # count 1, d = 0.55
                (0, 3, "a", 0.1),                      # count 1, d = 0.95
            ],
        )
        params = AggregationParams(1, 0.6)
        stats = path_stats(dap_sssp(net, 0, params), net, params)
        assert stats.num_neighbors == 2  # node 3 is beyond beta
        params = AggregationParams(2, 1.0)
        stats = path_stats(dap_sssp(net, 0, params), net, params)
        assert stats.num_neighbors == 1

    def test_mismatched_network_is_rejected(self):
        result = dap_sssp(chain_net(), 0)
        other = build_net(("a",), [(0, 1, "a", 0.5)])
        with pytest.raises(InconsistentInputError):
            path_stats(result, other)

    def test_conflicting_params_are_rejected(self):
        net = chain_net()
        result = dap_sssp(net, 0, AggregationParams(1, 0.5))
        with pytest.raises(InconsistentInputError):
            path_stats(result, net, AggregationParams(1, 1.0))

    def test_row_column_order(self):
        net = chain_net()
        stats = path_stats(dap_sssp(net, 0), net)
        row = stats.as_row()
        assert len(row) == len(STATS_COLUMNS)
        assert row[STATS_COLUMNS.index("num_routes")] == stats.num_routes
        assert row[0] == stats.source


class TestStatsTable:
    def test_one_row_per_source_ascending(self):
        net = chain_net()
        table = stats_table(net)
        assert [row.source for row in table] == [0, 1, 2]

    def test_source_subset_is_deduplicated_and_sorted(self):
        net = chain_net()
        table = stats_table(net, sources=[2, 0, 2])
        assert [row.source for row in table] == [0, 2]

    def test_rows_match_single_source_pipeline(self):
        net = build_net(
            ("a", "b"),
            [(0, 1, "a", 0.9), (1, 2, "b", 0.8), (2, 0, "a", 0.7), (1, 0, "b", 0.6)],
        )
        params = AggregationParams(1, 0.75)
        table = stats_table(net, params)
        for row in table:
            expected = path_stats(dap_sssp(net, row.source, params), net, params)
            assert row == expected


class TestSweep:
    def test_counts_match_individual_aggregations(self):
        net = build_net(
            ("a", "b", "c"),
            [
                (0, 1, "a", 0.9), (0, 1, "b", 0.9), (0, 1, "c", 0.9),
                (1, 2, "a", 0.9), (1, 2, "b", 0.2),
                (2, 3, "a", 0.4),
                (3, 0, "b", 1.0),
            ],
        )
        alphas = [1, 2, 3]
        betas = [1.0, 0.7, 0.4]
        report = edge_count_sweep(net, alphas, betas)
        assert report.alphas == (1, 2, 3)
        assert report.betas == (1.0, 0.7, 0.4)
        for i, alpha in enumerate(alphas):
            for j, beta in enumerate(betas):
                expected = aggregate_graph(net, AggregationParams(alpha, beta)).num_edges
                assert report.counts[i][j] == expected
                assert report.count(alpha, beta) == expected

    def test_grid_order_is_preserved_not_sorted(self):
        net = chain_net()
        report = edge_count_sweep(net, [3, 1], [0.25, 1.0])
        assert report.alphas == (3, 1)
        assert report.betas == (0.25, 1.0)

    def test_off_grid_lookup_is_rejected(self):
        report = edge_count_sweep(chain_net(), [1], [1.0])
        with pytest.raises(ParameterError):
            report.count(2, 1.0)

    def test_empty_grids_are_rejected(self):
        net = chain_net()
        with pytest.raises(ParameterError):
            edge_count_sweep(net, [], [1.0])
        with pytest.raises(ParameterError):
            edge_count_sweep(net, [1], [])


@settings(max_examples=50, deadline=None)
@given(layered_networks(), st.integers(1, 3), st.sampled_from((0.25, 0.5, 1.0)))
def test_stats_figures_are_internally_consistent(net, alpha, beta):
    params = AggregationParams(alpha, beta)
    for source in sorted(net.nodes):
        result = dap_sssp(net, source, params)
        stats = path_stats(result, net, params)
        assert stats.num_routes == len(result.reachable) - 1
        assert 0.0 <= stats.pct_connected <= 1.0
        if stats.num_routes:
            assert stats.min_len <= stats.avg_len <= stats.max_len
            assert stats.avg_handshakes >= 1.0
            assert stats.num_neighbors >= 1
        else:
            assert stats.avg_len == stats.min_len == stats.max_len == 0.0
            assert stats.avg_handshakes == 0.0 and stats.num_neighbors == 0


@settings(max_examples=40, deadline=None)
@given(layered_networks(max_layers=3))
def test_sweep_counts_are_antitone_in_alpha_monotone_in_beta(net):
    report = edge_count_sweep(net, [1, 2, 3], [0.25, 0.5, 0.75, 1.0])
    for j in range(4):
        assert report.counts[0][j] >= report.counts[1][j] >= report.counts[2][j]
    for i in range(3):
        row = report.counts[i]
        assert row[0] <= row[1] <= row[2] <= row[3]
