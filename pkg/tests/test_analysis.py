import random
from fractions import Fraction

import pytest

from localhomology import (
    SimplicialComplex,
    UnknownSimplexError,
    classify,
    filtration_persistence,
    flag_complex,
    generalized_degree,
    global_betti,
    is_homology_n_manifold,
    local_betti,
    local_betti_at,
    local_profile,
    neighborhood,
    neighborhood_filtration,
    planar_grid_graph,
    profile_many,
    profiles_to_csv,
)

from util import (
    annulus_complex,
    cone_over,
    fan_disk,
    graph_as_one_complex,
    random_complex,
    random_connected_complex,
    random_connected_graph,
    random_tree,
    tetrahedron_boundary,
    torus_complex,
    triple_triangle,
    wedge_of_two_circles,
)


@pytest.fixture
def five_path():
    return SimplicialComplex.from_maximal([[i, i + 1] for i in range(4)])


# -- neighborhoods -----------------------------------------------------------


def test_level_zero_is_star(five_path):
    seed = [(2,)]
    assert neighborhood(five_path, seed, 0).members == five_path.star(seed).members


def test_neighborhood_of_everything_is_everything(five_path):
    full = five_path.full_set()
    for m in range(3):
        assert neighborhood(five_path, full, m).members == full.members


def test_five_path_neighborhood_expansion(five_path):
    # Hand expansion around the midpoint: the star, then one more ring of
    # edges, then the whole complex.
    c = (2,)
    n0 = neighborhood(five_path, [c], 0)
    assert n0.members == {(2,), (1, 2), (2, 3)}
    n1 = neighborhood(five_path, [c], 1)
    assert n1.members == {(1,), (2,), (3,), (0, 1), (1, 2), (2, 3), (3, 4)}
    n2 = neighborhood(five_path, [c], 2)
    assert n2.members == five_path.full_set().members


def test_filtration_is_monotone_and_open():
    rng = random.Random(3)
    for _ in range(15):
        x = random_complex(rng)
        if x.dim < 0:
            continue
        seed = [random.Random(1).choice(sorted(x.all_faces()))]
        levels = neighborhood_filtration(x, seed, 3).levels
        for m, level in enumerate(levels):
            assert level.is_open()
            if m:
                assert levels[m - 1].members <= level.members


def test_negative_level_rejected(five_path):
    with pytest.raises(ValueError):
        neighborhood(five_path, [(2,)], -1)


# -- profiles ----------------------------------------------------------------


def test_annulus_interior_triangle_profile():
    complex, _, interior = annulus_complex()
    triangle = next(s for s in sorted(interior) if len(s) == 3)
    profile = local_profile(complex, triangle, 0)
    assert profile.betti_by_level[0] == (0, 0, 1)
    assert profile.classification == "manifold-interior(2)"


def test_isolated_vertex_profile_every_level():
    x = SimplicialComplex.from_maximal([[0]])
    profile = local_profile(x, (0,), 3)
    assert all(values == (1,) for values in profile.betti_by_level)


def test_unknown_simplex_profile(five_path):
    with pytest.raises(UnknownSimplexError):
        local_profile(five_path, (9,), 0)


def test_profile_many_matches_threads(five_path):
    serial = profile_many(five_path, m_max=1, threads=1)
    parallel = profile_many(five_path, m_max=1, threads=4)
    assert serial == parallel
    assert [p.simplex for p in serial] == sorted(five_path.all_faces())


def test_profiles_csv_shape(five_path):
    profiles = profile_many(five_path, m_max=1)
    text = profiles_to_csv(five_path, profiles)
    lines = text.splitlines()
    assert lines[0] == "simplex;dim;m;beta_0;beta_1;class"
    assert len(lines) == 1 + 2 * len(profiles)
    assert lines[1].startswith("0;0;0;")


# -- generalized degree ------------------------------------------------------


def test_generalized_degree_is_vertex_degree_on_graphs():
    rng = random.Random(5)
    for _ in range(10):
        graph = random_connected_graph(rng, rng.randint(2, 9))
        x = graph_as_one_complex(graph)
        for v in range(graph.n):
            assert generalized_degree(x, (v,)) == graph.degree(v)


def test_generalized_degree_interior_disk_edge():
    disk = fan_disk(6)
    spoke = disk.simplex_with_labels([0, 1])
    assert generalized_degree(disk, spoke) == 1


def test_triple_triangle_components_match_bound():
    x = triple_triangle()
    shared = x.simplex_with_labels([0, 1])
    star = x.star([shared])
    outside = star.complement()
    beta_1 = local_betti(x, star)[1]
    assert outside.connected_components() == beta_1 + 1 == 1


# -- classification ----------------------------------------------------------


def test_classify_annulus():
    complex, boundary, interior = annulus_complex()
    for simplex in sorted(interior):
        assert classify(complex, simplex, 2) == "manifold-interior(2)"
    for simplex in sorted(boundary):
        assert classify(complex, simplex, 2) == "boundary-like"


def test_classify_ramification_edge():
    x = triple_triangle()
    assert classify(x, x.simplex_with_labels([0, 1]), 2) == "ramification"


def test_sphere_is_homology_2_manifold():
    ok, offenders = is_homology_n_manifold(tetrahedron_boundary(), 2)
    assert ok
    assert offenders == []


def test_torus_is_homology_2_manifold():
    torus = torus_complex()
    assert global_betti(torus) == (1, 2, 1)
    ok, offenders = is_homology_n_manifold(torus, 2)
    assert ok and offenders == []


def test_circle_is_homology_1_manifold():
    circle = SimplicialComplex.from_maximal([[0, 1], [1, 2], [0, 2]])
    ok, offenders = is_homology_n_manifold(circle, 1)
    assert ok and offenders == []


def test_annulus_fails_manifold_check_at_boundary():
    complex, boundary, _ = annulus_complex()
    ok, offenders = is_homology_n_manifold(complex, 2)
    assert not ok
    assert set(offenders) == set(boundary)


def test_wedge_ramifies_at_shared_vertex():
    wedge = wedge_of_two_circles()
    hub = wedge.simplex_with_labels([0])
    assert local_betti_at(wedge, hub)[1] == 3
    ok, offenders = is_homology_n_manifold(wedge, 1)
    assert not ok
    assert offenders == [hub]
    assert classify(wedge, hub, 1) == "ramification"


# -- filtration persistence ---------------------------------------------------


def test_persistence_stabilized_levels_have_full_rank():
    x = tetrahedron_boundary()
    # One step of the recurrence already reaches the whole sphere.
    pairs = filtration_persistence(x, (0,), 2, 2)
    assert pairs[1][0] == pairs[2][0] == 1
    assert pairs[1][1] == 1


def test_persistence_on_five_path(five_path):
    pairs = filtration_persistence(five_path, (2,), 1, 2)
    assert [b for b, _ in pairs] == [1, 1, 0]
    assert pairs[0][1] == 1  # the surviving relative circle
    assert pairs[1][1] == 0  # nothing arrives from the whole-tree level
    assert pairs[2][1] is None


def test_persistence_rank_bounded_by_adjacent_betti():
    rng = random.Random(7)
    for _ in range(10):
        x = random_connected_complex(rng, n_vertices=6, n_maximal=4, max_size=3)
        simplex = random.Random(11).choice(sorted(x.all_faces()))
        for k in range(x.dim + 1):
            pairs = filtration_persistence(x, simplex, k, 2)
            for m, (b, r) in enumerate(pairs):
                if r is None:
                    continue
                assert r <= min(b, pairs[m + 1][0] if m + 1 < len(pairs) else b)


# -- the component bound ------------------------------------------------------


def assert_component_bound(x, expect_equality):
    full = x.full_set()
    for simplex in sorted(x.all_faces()):
        star = x.star([simplex])
        if star.members == full.members:
            continue
        outside = star.complement()
        components = outside.connected_components()
        bound = local_betti(x, star)[1] + 1
        assert components <= bound
        if expect_equality:
            assert components == bound


def test_component_bound_equality_on_trees():
    rng = random.Random(13)
    for _ in range(15):
        tree = random_tree(rng, rng.randint(2, 10))
        assert_component_bound(graph_as_one_complex(tree), expect_equality=True)


def test_component_bound_equality_on_cones():
    rng = random.Random(17)
    for _ in range(15):
        base = random_complex(rng, n_vertices=5, n_maximal=3, max_size=3)
        if base.dim < 0:
            continue
        assert_component_bound(cone_over(base), expect_equality=True)


def test_component_bound_inequality_in_general():
    rng = random.Random(19)
    for _ in range(15):
        x = random_connected_complex(rng, n_vertices=6, n_maximal=5, max_size=3)
        if x.dim < 0:
            continue
        assert_component_bound(x, expect_equality=False)


def test_tree_components_equal_local_circle_count_plus_one():
    rng = random.Random(23)
    for _ in range(10):
        tree = random_tree(rng, rng.randint(2, 10))
        x = graph_as_one_complex(tree)
        for v in range(tree.n):
            star = x.star([(v,)])
            if star.members == x.full_set().members:
                continue
            outside = star.complement()
            assert outside.connected_components() == local_betti(x, star)[1] + 1


# -- planar clustering bounds --------------------------------------------------


def test_planar_clustering_and_local_homology_bounds():
    # Both two-sided bounds, checked with exact rationals on seeded planar
    # graphs; local homology is taken in the flag complex, where the
    # component identity behind the bound holds at every vertex.
    identity_violations = 0
    for seed in range(8):
        graph = planar_grid_graph(4, 4, 0.5, seed)
        flag = flag_complex(graph)
        for v in range(graph.n):
            d = graph.degree(v)
            if d < 2:
                continue
            cc = graph.clustering_coefficient(v)
            pi0 = graph.open_neighborhood(v).connected_components()
            low = Fraction(2 * (d - pi0), d * (d - 1))
            high = Fraction(6 * (d - pi0), d * (d - 1))
            assert low <= cc <= high
            h = local_betti_at(flag, (v,))[1]
            if pi0 != h + 1:
                identity_violations += 1
            assert d - 1 - Fraction(d * (d - 1), 2) * cc <= h
            assert h <= d - 1 - Fraction(d * (d - 1), 6) * cc
    # Recorded rather than asserted: the component identity held everywhere.
    if identity_violations:
        print(f"component identity violations on planar graphs: {identity_violations}")
