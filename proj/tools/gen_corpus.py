#!/usr/bin/env python3
"""Write every simple graph on n vertices (up to isomorphism) as graph6 lines.

n <= 7 comes straight from the networkx graph atlas. n = 8 is obtained by
adding one vertex to every 7-vertex graph in all possible ways and removing
isomorphic duplicates (Weisfeiler-Lehman buckets, then exact isomorphism).

Usage: gen_corpus.py MAX_N OUT_DIR
"""
import sys
from pathlib import Path

import networkx as nx

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def atlas_by_order():
    by_n = {}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        by_n.setdefault(g.number_of_nodes(), []).append(g)
    return by_n


def extend(graphs):
    buckets = {}
    out = []
    for g in graphs:
        n = g.number_of_nodes()
        for mask in range(1 << n):
            h = g.copy()
            h.add_node(n)
            h.add_edges_from((n, v) for v in range(n) if mask >> v & 1)
            key = (tuple(sorted(d for _, d in h.degree())),
                   nx.weisfeiler_lehman_graph_hash(h, iterations=3))
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return out


def to_g6(g):
    return nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g),
                              header=False).decode().strip()


def main():
    max_n = int(sys.argv[1])
    out_dir = Path(sys.argv[2])
    by_n = atlas_by_order()
    for n in range(8, max_n + 1):
        by_n[n] = extend(by_n[n - 1])
    for n in range(1, max_n + 1):
        graphs = by_n[n]
        if len(graphs) != EXPECTED.get(n, len(graphs)):
            sys.exit(f"n={n}: got {len(graphs)} graphs, expected {EXPECTED[n]}")
        lines = sorted(to_g6(g) for g in graphs)
        (out_dir / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
