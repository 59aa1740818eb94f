import random

import pytest

from sepscope.families import (
    FAMILY_NAMES,
    FamilySpec,
    almost_skinny_ladder,
    claw,
    claw_feral,
    feral_choice_separators,
    generate,
    ladder,
    ladder_prism,
    ladder_theta,
    long_claw,
    long_paw,
    paw,
    paw_feral,
    prism,
    pyramid,
    sampled_ladder_instance,
    skinny_ladder,
    subdivide,
    subdivide_with_witness,
    theta,
    twisted_choice_separators,
    twisted_ladder,
    verify_witness,
)
from sepscope.graphs import Graph, are_isomorphic
from sepscope.separators import enumerate_closure, is_minimal_separator


def spec_for(fam, **kw):
    return FamilySpec(fam, **kw)


def test_theta_shape():
    g, w = theta((4, 4, 4))
    # two hubs plus 2 inner vertices per path
    assert g.n == 8 and g.m == 9
    a, b = w.one("a"), w.one("b")
    assert not g.has_edge(a, b)
    assert g.degree(a) == 3 and g.degree(b) == 3


def test_theta_rejects_short_paths():
    with pytest.raises(ValueError):
        theta((3, 4, 4))
    with pytest.raises(ValueError):
        theta((4, 4))


def test_prism_shape():
    g, w = prism((2, 2, 2))
    assert g.n == 6 and g.m == 9
    # length-2 paths collapse to the rung edges of the triangular prism
    for i in (1, 2, 3):
        assert g.has_edge(w.one(f"a_{i}"), w.one(f"b_{i}"))
    with pytest.raises(ValueError):
        prism((1, 2, 2))


def test_pyramid_shape():
    g, w = pyramid((3, 3, 3))
    apex = w.one("a")
    assert g.degree(apex) == 3
    with pytest.raises(ValueError):
        pyramid((2, 3, 3))


def test_ladder_types_verify():
    for fam, maker in (("ladder_theta", ladder_theta), ("ladder_prism", ladder_prism),
                       ("ladder", ladder)):
        for k in (3, 4):
            g, w = maker(k)
            ok, violations = verify_witness(g, spec_for(fam, k=k), w)
            assert ok, f"{fam}(k={k}): {violations}"


def test_claw_paw_copies():
    g, _ = claw(3)
    single, _ = long_claw(3)
    assert g.n == 3 * single.n and g.m == 3 * single.m
    g, _ = paw(2)
    single, _ = long_paw(2)
    assert g.n == 2 * single.n and g.m == 2 * single.m
    with pytest.raises(ValueError):
        long_claw(1)


def test_skinny_ladder_shape():
    g, w = skinny_ladder(3)
    assert g.n == 9 and g.m == 10
    # spokes are an induced matching between the two paths
    spokes = w.role_map["S"]
    assert len(spokes) == 3


def test_almost_skinny_layouts_verify():
    for seed in (None, 1, 2, 3, 17):
        g, w = almost_skinny_ladder(4, layout_seed=seed)
        ok, violations = verify_witness(g, spec_for("almost_skinny_ladder", k=4, layout_seed=seed), w)
        assert ok, f"seed {seed}: {violations}"
    canonical, _ = almost_skinny_ladder(3, layout_seed=None)
    plain, _ = skinny_ladder(3)
    assert canonical == plain


def test_every_family_generates_and_verifies():
    table = {
        "theta": spec_for("theta", k=3),
        "prism": spec_for("prism", k=3),
        "pyramid": spec_for("pyramid", k=3),
        "ladder_theta": spec_for("ladder_theta", k=3),
        "ladder_prism": spec_for("ladder_prism", k=3),
        "ladder": spec_for("ladder", k=3),
        "claw": spec_for("claw", k=2),
        "paw": spec_for("paw", k=2),
        "long_claw": spec_for("long_claw", arm_length=3),
        "long_paw": spec_for("long_paw", arm_length=3),
        "skinny_ladder": spec_for("skinny_ladder", k=3),
        "almost_skinny_ladder": spec_for("almost_skinny_ladder", k=3, layout_seed=5),
        "twisted_ladder": spec_for("twisted_ladder", k=2),
        "claw_feral": spec_for("claw_feral", c=2),
        "paw_feral": spec_for("paw_feral", c=2),
        "subdivision": spec_for("subdivision", k=2,
                                base_graph=Graph(3, [(0, 1), (1, 2), (0, 2)])),
    }
    assert set(table) == set(FAMILY_NAMES)
    for fam, spec in table.items():
        g, w = generate(spec)
        ok, violations = verify_witness(g, spec, w)
        assert ok, f"{fam}: {violations}"


def test_generate_rejects_unknown_family():
    with pytest.raises(ValueError):
        generate(FamilySpec("mystery", k=3))


def test_twisted_ladder_counts_are_pinned():
    # regression values; also the >= 2^k guarantee
    for k, expected in ((2, 64), (3, 210)):
        g, _ = twisted_ladder(k)
        count = len(enumerate_closure(g))
        assert count == expected
        assert count >= 2 ** k


def test_twisted_choice_separators_are_minimal_and_distinct():
    for k in (2, 3):
        g, w = twisted_ladder(k)
        choice = twisted_choice_separators(k, w)
        assert len(set(choice)) == 2 ** k
        for s in choice:
            assert is_minimal_separator(g, s)


def test_feral_sizes_and_choice_separators():
    g, w = claw_feral(2, 6)
    assert (g.n, g.m) == (92, 94)
    h, wp = paw_feral(2, 6)
    assert (h.n, h.m) == (104, 112)
    for gg, ww in ((g, w), (h, wp)):
        choice = feral_choice_separators(2, ww)
        assert len(set(choice)) == 16
        for s in choice:
            assert is_minimal_separator(gg, s)


def test_subdivision():
    base = Graph(3, [(0, 1), (1, 2), (0, 2)])
    g = subdivide(base, 2)
    assert g.n == 3 + 3 * 2 and g.m == 3 * 3
    assert subdivide(base, 0) == base
    _, w = subdivide_with_witness(base, 1)
    assert w.role_map["base"] == (0, 1, 2)


def test_sampled_ladder_instances_verify():
    rng = random.Random(2024)
    for fam in ("ladder_theta", "ladder_prism", "ladder"):
        for _ in range(6):
            g, w = sampled_ladder_instance(fam, 3, rng, max_len=5)
            ok, violations = verify_witness(g, spec_for(fam, k=3), w)
            assert ok, f"{fam}: {violations}"


def test_ladder_monotonicity_small():
    # canonical instance of order k embeds in the one of order k+1
    from sepscope.detectors import find_induced_subgraph

    small, _ = skinny_ladder(2)
    big, _ = skinny_ladder(3)
    assert find_induced_subgraph(big, small).found
