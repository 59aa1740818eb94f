"""Three routes to the same answer: oracle, closure, branching.

The oracle checks every vertex subset, the closure grows close separators
under component neighborhoods, and the branching route walks a bounded
search tree and filters to minimal separators.  On anything small they
must agree exactly.
"""

from sepscope import (
    Graph,
    domination_number,
    enumerate_branching,
    enumerate_closure,
    enumerate_oracle,
)


def show(name, g):
    oracle = enumerate_oracle(g)
    closure = enumerate_closure(g)
    kdom = max((domination_number(g, s, range(g.n))[0] for s in oracle), default=1)
    res = enumerate_branching(g, kdom)
    print(f"{name}: n={g.n} m={g.m}")
    print(f"  oracle    {len(oracle):3d}  {oracle if len(oracle) <= 6 else '...'}")
    print(f"  closure   {len(closure):3d}  agree={closure == oracle}")
    print(f"  branching {len(res.filtered):3d}  raw={len(res.raw)} nodes={res.nodes} "
          f"complete={res.complete} agree={sorted(res.filtered) == oracle}")
    print()


def main():
    show("path P6", Graph(6, [(i, i + 1) for i in range(5)]))
    show("cycle C6", Graph(6, [(i, (i + 1) % 6) for i in range(6)]))
    show("complete K5", Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)]))
    grid = Graph(9, [(r * 3 + c, r * 3 + c + 1) for r in range(3) for c in range(2)]
                 + [(r * 3 + c, (r + 1) * 3 + c) for r in range(2) for c in range(3)])
    show("3x3 grid", grid)


if __name__ == "__main__":
    main()
