import pytest

from treespectra import (
    TreePath,
    classify_vertices,
    distance,
    from_edge_list,
    glue_at_vertex,
    nodes_mod3,
    parse_edge_list_text,
    path_between,
    remove_branch,
    single_vertex,
)
from treespectra.errors import (
    AnchorNotOnPath,
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    EmptyInput,
    InvalidIdentification,
    LabelOutOfRange,
    NotPendant,
    ParseError,
    SelfLoop,
)


def path(n):
    return from_edge_list([(i, i + 1) for i in range(1, n)])


def star(k):
    return from_edge_list([(1, i) for i in range(2, k + 2)])


class TestFromEdgeList:
    def test_relabels_by_first_appearance(self):
        t = from_edge_list([(10, 7), (7, 99)])
        assert t.n == 3
        assert t.edges == ((1, 2), (2, 3))
        assert t.original_labels == (10, 7, 99)

    def test_adjacency_sorted(self):
        t = from_edge_list([(1, 4), (1, 2), (1, 3)])
        assert t.adjacency[1] == (2, 3, 4)

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            from_edge_list([(1, 2), (2, 2)])

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            from_edge_list([(1, 2), (2, 3), (3, 2)])

    def test_cycle(self):
        with pytest.raises(CycleDetected):
            from_edge_list([(1, 2), (2, 3), (3, 1)])

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            from_edge_list([(1, 2), (3, 4)])

    def test_empty(self):
        with pytest.raises(EmptyInput):
            from_edge_list([])

    def test_bad_label(self):
        with pytest.raises(LabelOutOfRange):
            from_edge_list([(0, 1)])

    def test_single_vertex(self):
        t = single_vertex()
        assert t.n == 1 and t.edges == ()
        assert classify_vertices(t).pendants == ()


class TestClassifyVertices:
    def test_star(self):
        cls = classify_vertices(star(3))
        assert cls.pendants == (2, 3, 4)
        assert cls.majors == (1,)
        assert cls.quasi_pendants == (1,)
        assert cls.degrees[1] == 3

    def test_path_has_no_majors(self):
        cls = classify_vertices(path(5))
        assert cls.majors == ()
        assert cls.pendants == (1, 5)
        assert cls.quasi_pendants == (2, 4)

    def test_quasi_pendants_need_not_be_major(self):
        # spider(2,2,2): only the mid-leg vertices touch a pendant
        t = from_edge_list([(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
        cls = classify_vertices(t)
        assert cls.majors == (1,)
        assert cls.quasi_pendants == (2, 4, 6)

    def test_both_ends_of_an_edge_can_be_quasi(self):
        assert classify_vertices(path(2)).quasi_pendants == (1, 2)


class TestDistanceAndPaths:
    def test_distance(self):
        t = path(6)
        assert distance(t, 1, 6) == 5
        assert distance(t, 3, 3) == 0

    def test_distance_bad_label(self):
        with pytest.raises(LabelOutOfRange):
            distance(path(3), 1, 9)

    def test_path_between(self):
        t = star(3)
        assert path_between(t, 2, 3).vertices == (2, 1, 3)
        assert path_between(t, 2, 3).length == 2

    def test_triangle_equality_through_tree(self):
        t = from_edge_list([(1, 2), (2, 3), (2, 4), (4, 5)])
        for u in range(1, 6):
            for v in range(1, 6):
                walk = path_between(t, u, v)
                assert walk.length == distance(t, u, v)
                assert walk.vertices[0] == u and walk.vertices[-1] == v


class TestGlue:
    def test_p3_plus_p2_makes_star(self):
        p3, p2 = path(3), path(2)
        glued = glue_at_vertex(p3, p2, (2, 1))
        assert glued.n == 4
        assert sorted(len(a) for a in glued.adjacency[1:]) == [1, 1, 1, 3]

    def test_accepts_mapping(self):
        glued = glue_at_vertex(path(2), path(2), {2: 1})
        assert glued.n == 3
        assert classify_vertices(glued).majors == ()

    def test_rejects_bad_identification(self):
        with pytest.raises(InvalidIdentification):
            glue_at_vertex(path(2), path(2), (5, 1))
        with pytest.raises(InvalidIdentification):
            glue_at_vertex(path(2), path(2), {1: 1, 2: 2})


class TestRemoveBranch:
    def test_path_example(self):
        t = path(5)
        sub, label_map = remove_branch(t, TreePath((1, 2, 3)), keep_anchor=3)
        assert sub.n == 3
        assert sub.edges == ((1, 2), (2, 3))
        assert label_map == {3: 1, 4: 2, 5: 3}

    def test_drops_side_branches_beyond_anchor(self):
        # removing a full leg of a star leaves the rest intact
        t = star(3)
        sub, label_map = remove_branch(t, TreePath((2, 1)), keep_anchor=1)
        assert sub.n == 3
        assert set(label_map) == {1, 3, 4}

    def test_anchor_must_be_last(self):
        with pytest.raises(AnchorNotOnPath):
            remove_branch(path(5), TreePath((1, 2, 3)), keep_anchor=2)

    def test_must_start_at_pendant(self):
        with pytest.raises(NotPendant):
            remove_branch(path(5), TreePath((2, 3)), keep_anchor=3)


class TestNodesMod3:
    def test_spider_1_1_4(self):
        t = from_edge_list([(1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (6, 7)])
        # center plus the long-leg vertex at distance 3 from it
        assert nodes_mod3(t) == (1, 6)

    def test_path_4(self):
        # middle vertices are at distances 1 and 2 from the two ends
        assert nodes_mod3(path(4)) == ()

    def test_star(self):
        assert nodes_mod3(star(4)) == (1,)

    def test_single_vertex_vacuous(self):
        assert nodes_mod3(single_vertex()) == (1,)


class TestParseText:
    def test_comments_and_blanks(self):
        pairs = parse_edge_list_text("# a star\n\n1 2\n1 3\n\n1 4\n")
        assert pairs == ((1, 2), (1, 3), (1, 4))

    def test_bad_token_count(self):
        with pytest.raises(ParseError) as info:
            parse_edge_list_text("1 2\n1 2 3\n")
        assert info.value.line == 2

    def test_non_integer(self):
        with pytest.raises(ParseError) as info:
            parse_edge_list_text("1 x\n")
        assert info.value.line == 1

    def test_non_positive(self):
        with pytest.raises(ParseError):
            parse_edge_list_text("0 2\n")
