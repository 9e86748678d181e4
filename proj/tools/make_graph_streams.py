#!/usr/bin/env python3
"""Writes the graph6 streams and decoder fixtures consumed by the test suites.

  data/graphs/connected_n{1..7}.g6   all connected graphs of each order (graph atlas)
  tests/data/graph6_random.txt       100 random graphs: graph6 record, n, edge list
"""
import pathlib
import random

import networkx as nx

ROOT = pathlib.Path(__file__).resolve().parent.parent


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def write_streams():
    by_order = {n: [] for n in range(1, 8)}
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n in by_order and nx.is_connected(graph):
            by_order[n].append(g6(graph))
    out = ROOT / "data" / "graphs"
    out.mkdir(parents=True, exist_ok=True)
    for n, records in by_order.items():
        (out / f"connected_n{n}.g6").write_text("".join(r + "\n" for r in records))
        print(f"n={n}: {len(records)} connected graphs")


def write_decoder_fixture():
    rng = random.Random(20240613)
    lines = []
    for i in range(100):
        n = rng.randint(1, 70 if i % 10 == 0 else 20)
        graph = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
        edges = sorted(tuple(sorted(e)) for e in graph.edges())
        flat = " ".join(f"{u} {v}" for u, v in edges)
        lines.append(f"{g6(graph)}\t{n}\t{flat}")
    (ROOT / "tests" / "data" / "graph6_random.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    write_streams()
    write_decoder_fixture()
