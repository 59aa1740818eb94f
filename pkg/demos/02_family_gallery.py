"""Build one instance of every named family and verify its witness."""

from sepscope import FamilySpec, Graph, generate, verify_witness

SPECS = [
    FamilySpec("theta", k=3),
    FamilySpec("prism", k=3),
    FamilySpec("pyramid", k=3),
    FamilySpec("ladder_theta", k=4),
    FamilySpec("ladder_prism", k=4),
    FamilySpec("ladder", k=4),
    FamilySpec("claw", k=2),
    FamilySpec("paw", k=2),
    FamilySpec("long_claw", arm_length=4),
    FamilySpec("long_paw", arm_length=4),
    FamilySpec("skinny_ladder", k=4),
    FamilySpec("almost_skinny_ladder", k=4, layout_seed=11),
    FamilySpec("twisted_ladder", k=3),
    FamilySpec("claw_feral", c=2),
    FamilySpec("paw_feral", c=2),
    FamilySpec("subdivision", k=3, base_graph=Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])),
]


def main():
    for spec in SPECS:
        g, w = generate(spec)
        ok, violations = verify_witness(g, spec, w)
        roles = ", ".join(sorted(w.role_map)[:6])
        more = "..." if len(w.role_map) > 6 else ""
        print(f"{spec.family:22s} n={g.n:3d} m={g.m:3d} witness_ok={ok} roles: {roles}{more}")
        if not ok:
            for v in violations:
                print("   !!", v)


if __name__ == "__main__":
    main()
