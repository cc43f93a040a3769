import hashlib
import random

from tightcycles.hypergraph import Hypergraph, gen_random
from itertools import combinations


def seeded_rng(*parts) -> random.Random:
    key = ":".join(str(p) for p in parts).encode()
    return random.Random(int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big"))


def random_graph(n: int, k: int, seed: int, p=None) -> Hypergraph:
    """Seeded binomial graph; p defaults to 1/2."""
    from fractions import Fraction

    return gen_random(n, k, Fraction(1, 2) if p is None else p, seed)


def graph_from_mask(n: int, k: int, mask: int) -> Hypergraph:
    """The mask-th subgraph of the complete k-graph on n vertices."""
    all_edges = list(combinations(range(n), k))
    edges = tuple(e for i, e in enumerate(all_edges) if (mask >> i) & 1)
    return Hypergraph(n, k, edges)
