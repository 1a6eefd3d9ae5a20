import pytest

from asua.errors import (
    GraphError,
    IdOutOfRange,
    ParseError,
    SameVertex,
    SelfLoop,
    UnreachableAbsorber,
)
from asua.families import gen_cycle, gen_path, gen_sea_dragon, gen_star
from asua.formulas import SeaDragonSpec
from asua.graph import (
    Stem,
    build_graph,
    check_invariants,
    contracted_id,
    degree_profile,
    find_stems,
    format_graph,
    is_sea_dragon,
    is_tree,
    merge_absorbers,
    parse_graph,
    read_graph,
    stranded_vertices,
    validate_reachability,
    with_absorbing,
    write_graph,
)


@pytest.fixture
def intro_graph():
    """The five-vertex introductory graph, absorbing at v5."""
    return build_graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4)], {4})


# --- construction ---

def test_build_graph_sums_repeated_edges():
    """Repeated pairs add up, in either orientation."""
    g = build_graph(2, [(0, 1), (1, 0, 2)], {1})
    assert g.edge_multiplicity(0, 1) == 3
    assert g.degree(0) == 3
    assert g.edges() == [(0, 1, 3)]


def test_build_graph_rejects_self_loop():
    with pytest.raises(SelfLoop):
        build_graph(2, [(1, 1)], {0})


def test_build_graph_rejects_out_of_range_id():
    with pytest.raises(IdOutOfRange, match="vertex id 4 outside 1..3"):
        build_graph(3, [(0, 3)], {0})


def test_build_graph_rejects_bad_multiplicity():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 1, 0)], {1})


def test_degree_profile_of_intro_graph(intro_graph):
    """v3 carries three edges, the absorber one."""
    profile = degree_profile(intro_graph)
    assert profile.degrees == (2, 2, 3, 2, 1)
    assert profile.neighbors[2] == (0, 3, 4)


def test_degree_profile_repeats_parallel_neighbors():
    g = build_graph(3, [(0, 1, 2), (1, 2)], {2})
    assert degree_profile(g).neighbors[1] == (0, 0, 2)


def test_generated_graphs_have_no_invariant_violations(intro_graph):
    for g in (intro_graph, gen_path(6), gen_cycle(5), build_graph(3, [(0, 1, 4), (1, 2)], {2})):
        assert check_invariants(g) == []


# --- reachability ---

def test_stranded_vertices_lists_disconnected_part():
    g = build_graph(4, [(0, 1), (2, 3)], {1})
    assert stranded_vertices(g) == [2, 3]
    with pytest.raises(UnreachableAbsorber) as info:
        validate_reachability(g)
    assert info.value.stranded == [2, 3]
    assert "v3, v4" in str(info.value)


def test_connected_graph_passes_reachability(intro_graph):
    validate_reachability(intro_graph)


def test_with_absorbing_keeps_edges(intro_graph):
    g = with_absorbing(intro_graph, {0, 3})
    assert g.absorbing == frozenset({0, 3})
    assert g.edges() == intro_graph.edges()


# --- contraction ---

def test_merge_absorbers_on_path():
    """Merging both ends of P_3 gives a double edge to the middle vertex."""
    g = build_graph(3, [(0, 1), (1, 2)], {0, 2})
    merged = merge_absorbers(g, 0, 2)
    assert merged.vertex_count == 2
    assert merged.edges() == [(0, 1, 2)]
    assert merged.absorbing == frozenset({0})


def test_merge_absorbers_drops_edge_between_them():
    g = build_graph(3, [(0, 1), (0, 2), (1, 2)], {1, 2})
    merged = merge_absorbers(g, 2, 1)
    assert merged.edges() == [(0, 1, 2)]
    assert merged.absorbing == frozenset({1})


def test_contracted_id_shifts_above_dropped_vertex():
    assert contracted_id(4, 1, 3) == 3
    assert contracted_id(3, 1, 3) == 1
    assert contracted_id(2, 1, 3) == 2
    assert contracted_id(0, 3, 1) == 0


def test_merge_absorbers_rejects_same_vertex(intro_graph):
    with pytest.raises(SameVertex):
        merge_absorbers(intro_graph, 4, 4)


# --- stems and sea dragons ---

def test_find_stems_on_sd3():
    """T(5,2^(2)): v1 and the two-vertex stem both hang off v2."""
    g = gen_sea_dragon(SeaDragonSpec.sd3(5, 2, 2))
    assert find_stems(g) == [Stem(attachment=1, vertices=(0,)), Stem(attachment=1, vertices=(6, 5))]


def test_find_stems_includes_path_to_absorber():
    stems = find_stems(gen_path(4))
    assert stems == [Stem(attachment=3, vertices=(0, 1, 2))]
    assert stems[0].length == 3


def test_find_stems_skips_parallel_edges():
    g = build_graph(3, [(0, 1, 2), (1, 2)], {2})
    assert find_stems(g) == []


def test_is_tree():
    assert is_tree(gen_path(4))
    assert not is_tree(gen_cycle(4))
    assert not is_tree(build_graph(2, [(0, 1, 2)], {1}))


def test_sd4_spine_is_the_long_path():
    """T(6,3,(1,2)) has its spine along v1..v6."""
    result = is_sea_dragon(gen_sea_dragon(SeaDragonSpec.sd4(6, 3, (1, 2))))
    assert result.is_sea_dragon
    assert result.spine == (0, 1, 2, 3, 4, 5)


def test_path_is_its_own_spine():
    assert is_sea_dragon(gen_path(5)).spine == (0, 1, 2, 3, 4)


def test_star_is_a_sea_dragon():
    """S_5: the single branch vertex lies on any path through it."""
    result = is_sea_dragon(gen_star(5))
    assert result.is_sea_dragon
    assert result.spine == (1, 0, 2)


def test_three_leg_spider_is_a_sea_dragon():
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    result = is_sea_dragon(build_graph(7, edges, {6}))
    assert result.is_sea_dragon
    assert result.spine == (2, 1, 0, 3, 4)


def test_h_tree_is_a_sea_dragon():
    """Two adjacent degree-3 vertices, each with two legs of length 2."""
    edges = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)]
    result = is_sea_dragon(build_graph(10, edges, {9}))
    assert result.kind == "sea-dragon"
    assert result.spine == (3, 2, 0, 1, 6, 7)


def test_branching_core_has_no_spine():
    """A center with three branch neighbors cannot put them on one path."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]
    result = is_sea_dragon(build_graph(10, edges, {9}))
    assert result.kind == "no-spine"
    assert not result.is_sea_dragon


def test_cycle_is_not_a_tree():
    assert is_sea_dragon(gen_cycle(5)).kind == "not-a-tree"


# --- edge-list format ---

def test_parse_graph_with_comments_and_multiplicity():
    text = "# demo\nvertices 3\nabsorb 3\n\n1 2 2\n2 3\n"
    g = parse_graph(text)
    assert g.vertex_count == 3
    assert g.absorbing == frozenset({2})
    assert g.edges() == [(0, 1, 2), (1, 2, 1)]


def test_format_graph_parses_back(intro_graph):
    text = format_graph(intro_graph, comment="intro")
    assert text.startswith("# intro\nvertices 5\nabsorb 5\n")
    assert parse_graph(text) == intro_graph


def test_read_and_write_graph(tmp_path, intro_graph):
    path = tmp_path / "g.txt"
    write_graph(intro_graph, path)
    assert read_graph(path) == intro_graph


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("states 3\nabsorb 1\n", "expected 'vertices N'"),
        ("vertices 3\n1 2\n", "missing 'absorb'"),
        ("vertices 3\nabsorb 1\nabsorb 2\n", "duplicate"),
        ("vertices 3\nabsorb 1\n1 x\n", "integer ids"),
        ("vertices 3\nabsorb 1\n1 2 3 4\n", "expected 'i j [m]'"),
        ("vertices 3\nabsorb 1\n0 2\n", "ids start at 1"),
        ("vertices 3\nabsorb 0\n1 2\n", "ids start at 1"),
        ("vertices 3\nabsorb 1\n-2 3\n", "ids start at 1"),
    ],
)
def test_parse_graph_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_graph(text)


def test_parse_graph_reports_line_number():
    with pytest.raises(ParseError) as info:
        parse_graph("vertices 2\nabsorb 2\n1 two\n")
    assert info.value.line == 3
