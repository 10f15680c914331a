"""Regenerate corpus.g6: 1000 graph6 lines written by networkx (reference encoder)."""

import random
from itertools import combinations
from pathlib import Path

import networkx as nx


def main():
    rng = random.Random(20240101)
    lines = []
    for n in range(1, 7):
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == n and (n == 1 or nx.is_connected(g)):
                lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    while len(lines) < 1000:
        n = rng.randint(1, 64)
        p = rng.random()
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(e for e in combinations(range(n), 2) if rng.random() < p)
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    Path(__file__).with_name("corpus.g6").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
