import pytest
from hypothesis import given, strategies as st

from hdtl import (
    BOTTOM,
    TOP,
    BoundaryConfig,
    Edge,
    ParseError,
    join,
    parse_boundary,
    region_tree,
    render_boundary,
)
from oracles import balanced_strings, catalan, parents_of


def test_parse_examples():
    assert len(parse_boundary("")) == 0
    assert parse_boundary("(())").parents == (0, 1)
    assert parse_boundary("()()").parents == (0, 0)


@pytest.mark.parametrize("text, offset", [("(()", 3), (")", 0), ("())(", 2), ("(x)", 1)])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_boundary(text)
    assert info.value.offset == offset


def test_render_examples():
    assert render_boundary(BoundaryConfig((0, 1))) == "(())"
    assert render_boundary(BoundaryConfig()) == ""
    assert render_boundary(BoundaryConfig((0, 0, 0))) == "()()()"


def test_rejects_non_preorder_parents():
    with pytest.raises(ValueError):
        BoundaryConfig((0, 2, 0))


@pytest.mark.parametrize("n", range(6))
def test_round_trip_exhaustive(n):
    strings = balanced_strings(n)
    assert len(strings) == catalan(n)
    for s in strings:
        cfg = parse_boundary(s)
        assert render_boundary(cfg) == s
        assert list(cfg.parents) == parents_of(s)
        assert parse_boundary(render_boundary(cfg)) == cfg


def _balanced(draw_tree):
    return "".join("(" + inner + ")" for inner in draw_tree)


balanced = st.recursive(
    st.just(""),
    lambda inner: st.lists(inner, max_size=3).map(_balanced),
    max_leaves=10,
).filter(lambda s: len(s) <= 20)


@given(balanced)
def test_round_trip_random(s):
    cfg = parse_boundary(s)
    assert cfg.text == s
    assert len(region_tree(cfg).edges) == s.count("(")


def test_region_tree_shapes():
    assert region_tree(parse_boundary("(())")).edges == [(1, 1, 0), (2, 2, 1)]
    assert region_tree(parse_boundary("()()")).edges == [(1, 1, 0), (2, 2, 0)]
    empty = region_tree(parse_boundary(""))
    assert empty.edges == [] and list(empty.vertices) == [0]


def test_join_nested_is_a_path():
    tree = join(parse_boundary("(())"), parse_boundary("(())"))
    t1, t2, b1, b2 = tree.edges
    assert [str(e) for e in tree.edges] == ["t1", "t2", "b1", "b2"]
    assert tree.up(t2) == t1 and tree.up(t1) is None
    assert tree.up(b2) == b1 and tree.up(b1) is None


def test_join_star_and_single_edge():
    star = join(parse_boundary("()()"), parse_boundary("()()"))
    assert all(star.up(e) is None for e in star.edges)
    assert len(star.edges) == 4
    single = join(parse_boundary(""), parse_boundary("()"))
    assert single.edges == (Edge(BOTTOM, 1),)


@given(balanced, balanced)
def test_join_preserves_subtrees(top, bottom):
    tree = join(parse_boundary(top), parse_boundary(bottom))
    assert len(tree.edges) == top.count("(") + bottom.count("(")
    for side, text in ((TOP, top), (BOTTOM, bottom)):
        for e in tree.edges:
            if e.side == side:
                up = tree.up(e)
                assert (0 if up is None else up.index) == parents_of(text)[e.index - 1]
                assert up is None or up.side == side


def test_edge_labels():
    assert str(Edge(TOP, 3)) == "t3"
    assert Edge.parse(" b12 ") == Edge(BOTTOM, 12)
    assert Edge(TOP, 9) < Edge(BOTTOM, 1)
    for bad in ("x1", "t", "t0", "b-1"):
        with pytest.raises(ValueError):
            Edge.parse(bad)
