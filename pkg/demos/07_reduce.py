"""Shrink long degree-2 paths without changing what the graph avoids.

Contracting an edge in the middle of a long enough induced path (at least
5h vertices for patterns on up to h vertices) cannot create any forbidden
induced subgraph that was absent before.  The reducer below applies that
rule to a heavily subdivided K4 until no run is long enough.
"""

from sepscope import Graph, find_induced_subgraph, reduce_degree_two_paths
from sepscope.families import subdivide


def main():
    base = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    g = subdivide(base, 40)
    print(f"subdivided K4: n={g.n} m={g.m}")
    h = 6
    reduced = reduce_degree_two_paths(g, h)
    print(f"reduced at h={h}: n={reduced.n} m={reduced.m}")

    patterns = {
        "K3": Graph(3, [(0, 1), (0, 2), (1, 2)]),
        "C4": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        "C6": Graph(6, [(i, (i + 1) % 6) for i in range(6)]),
    }
    for name, p in patterns.items():
        before = find_induced_subgraph(g, p).status
        after = find_induced_subgraph(reduced, p).status
        print(f"  {name}: before={before} after={after}")

    again = reduce_degree_two_paths(reduced, h)
    print(f"idempotent: second pass keeps n={again.n}")


if __name__ == "__main__":
    main()
