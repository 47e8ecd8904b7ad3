"""Regenerates graph6_corpus.txt with networkx as an independent encoder.

Each line: graph6 <TAB> order <TAB> space-separated edges "u-v".
"""
import random

import networkx as nx


def graphs():
    yield nx.empty_graph(1)
    yield nx.empty_graph(2)
    yield nx.complete_graph(2)
    yield nx.petersen_graph()
    yield nx.cubical_graph()
    yield nx.heawood_graph()
    yield nx.dodecahedral_graph()
    for n in range(3, 65, 4):
        yield nx.cycle_graph(n)
        yield nx.path_graph(n)
        yield nx.star_graph(n - 1)
    for n in (61, 62, 63, 64):
        yield nx.complete_graph(n)
        yield nx.empty_graph(n)
    rng = random.Random(20240917)
    for _ in range(400):
        n = rng.choice([rng.randint(1, 12), rng.randint(1, 64)])
        p = rng.random()
        yield nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))


def main():
    with open("graph6_corpus.txt", "w") as out:
        for g in graphs():
            g = nx.convert_node_labels_to_integers(g)
            code = nx.to_graph6_bytes(g, header=False).decode().strip()
            edges = " ".join(f"{min(u, v)}-{max(u, v)}" for u, v in sorted(g.edges()))
            out.write(f"{code}\t{g.number_of_nodes()}\t{edges}\n")


if __name__ == "__main__":
    main()
