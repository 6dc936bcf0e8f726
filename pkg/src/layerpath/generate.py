"""Random multi-layer network generation for experiments and tests."""

from __future__ import annotations

import random

from .core import MultiLayeredNetwork, POSITIVE
from .errors import ParameterError


def random_network(
    num_nodes: int,
    num_layers: int,
    density: float,
    *,
    seed=None,
    polarity: str = POSITIVE,
) -> MultiLayeredNetwork:
    """Build a sealed random network with the given per-layer edge density.

    Every layer independently receives exactly
    ``round(density * num_nodes * (num_nodes - 1))`` directed edges, sampled
    uniformly without replacement from the ordered node pairs, each with a
    uniform weight in [0, 1). Layers are labeled ``l1`` .. ``lk`` and all of
    ``0 .. num_nodes - 1`` are registered even when isolated. The same seed
    reproduces the same network.
    """
    if num_nodes < 1:
        raise ParameterError(f"num_nodes must be >= 1, got {num_nodes!r}")
    if num_layers < 1:
        raise ParameterError(f"num_layers must be >= 1, got {num_layers!r}")
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density must be within [0, 1], got {density!r}")

    rng = random.Random(seed)
    net = MultiLayeredNetwork(polarity=polarity)
    for _ in range(num_layers):
        net.add_layer()
    for node in range(num_nodes):
        net.add_node(node)

    # Pairs are indexed 0 .. n(n-1)-1 and decoded on demand, so dense node
    # counts never materialize the full pair list.
    num_pairs = num_nodes * (num_nodes - 1)
    edges_per_layer = round(density * num_pairs)
    for lid in net.layers:
        for pair in sorted(rng.sample(range(num_pairs), edges_per_layer)):
            src, rem = divmod(pair, num_nodes - 1)
            dst = rem if rem < src else rem + 1
            net.add_edge(src, dst, lid, rng.random())
    return net.seal()
