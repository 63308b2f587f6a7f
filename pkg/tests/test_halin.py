import pytest
from hypothesis import given
from hypothesis import strategies as st

from halinspan import (
    DegreeTwoVertexError,
    HalinGraph,
    LeafOrderMismatchError,
    NotATreeError,
    ValidationError,
    build_halin,
    check_depth_bound,
    depth,
    parse_halin,
    random_halin,
    serialize_halin,
)
from halinspan.errors import InfeasibleParamsError, ParseError

from .conftest import halin_graphs, reflect


def test_k4_structure(k4):
    assert (k4.n, k4.p, k4.d) == (4, 3, 1)
    assert k4.cycle_edges == ((1, 2), (2, 3), (1, 3))
    assert len(k4.edges) == 6


def test_smallest_depth_two_graph(six):
    assert (six.n, six.p, six.d) == (6, 4, 2)
    assert depth(six) == 2
    assert check_depth_bound(six)


def test_degree_two_vertex_is_named():
    with pytest.raises(DegreeTwoVertexError) as info:
        build_halin("u", {"u": ["a"], "a": ["leaf"]})
    assert info.value.vertex == "a"


def test_root_with_two_children_is_degree_two():
    with pytest.raises(DegreeTwoVertexError):
        build_halin("u", {"u": ["a", "v3"], "a": ["v1", "v2"]})


def test_not_a_tree():
    with pytest.raises(NotATreeError):
        build_halin("u", {"u": ["a", "b", "c"], "a": ["b", "d"]})
    with pytest.raises(NotATreeError):
        build_halin("u", {"u": ["a", "b", "c"], "x": ["y", "z"]})


def test_too_small():
    with pytest.raises(ValidationError):
        build_halin("u", {"u": []})


def test_explicit_leaf_order_rotation_and_reflection(k4):
    rotated = build_halin("u", {"u": ["v1", "v2", "v3"]}, ["v2", "v3", "v1"])
    assert rotated.leaf_order == (2, 3, 1)
    mirrored = build_halin("u", {"u": ["v1", "v2", "v3", "v4"]}, ["v4", "v3", "v2", "v1"])
    assert mirrored.leaf_order == (4, 3, 2, 1)


def test_leaf_order_must_follow_embedding():
    with pytest.raises(LeafOrderMismatchError):
        build_halin("u", {"u": ["v1", "v2", "v3", "v4"]}, ["v1", "v3", "v2", "v4"])
    with pytest.raises(LeafOrderMismatchError):
        build_halin("u", {"u": ["v1", "v2", "v3"]}, ["v1", "v2"])


def test_with_sigma_start(k4):
    h = k4.with_sigma_start(1)
    assert h.leaf_order == (2, 3, 1)
    assert h.edges == k4.edges
    assert h.cycle_edges[0] == k4.cycle_edges[1]


def test_random_halin_n4_is_k4(k4):
    h = random_halin(1, 4, 3)
    assert (h.root, h.children, h.leaf_order) == (k4.root, k4.children, k4.leaf_order)


def test_random_halin_is_deterministic():
    assert random_halin(7, 12, 4) == random_halin(7, 12, 4)
    h = random_halin(7, 12, 4)
    assert h.d <= 5


def test_random_halin_rejects_bad_params():
    with pytest.raises(InfeasibleParamsError):
        random_halin(0, 3, 4)
    with pytest.raises(InfeasibleParamsError):
        random_halin(0, 10, 2)


@given(seed=st.integers(0, 10**6), n=st.integers(4, 40), max_children=st.integers(3, 6))
def test_generated_graphs_are_valid(seed, n, max_children):
    h = random_halin(seed, n, max_children)
    assert n <= h.n <= n + 1
    leaves = [v for v in range(h.n) if not h.children[v]]
    assert sorted(h.leaf_order) == leaves
    assert len(h.edges) == h.n - 1 + h.p
    assert not (h.tree_edges & set(h.cycle_edges))
    assert check_depth_bound(h)
    # round trip through the validator
    again = build_halin(h.root, {v: list(cs) for v, cs in enumerate(h.children) if cs})
    assert again.children == h.children


def _strip_deepest_leaves(h: HalinGraph) -> HalinGraph:
    deepest = {v for v in range(h.n) if h.vertex_depths[v] == h.d}
    spec = {
        h.label(v): [h.label(c) for c in cs if c not in deepest]
        for v, cs in enumerate(h.children)
    }
    spec = {v: cs for v, cs in spec.items() if cs}
    return build_halin(h.label(h.root), spec)


@given(h=halin_graphs(max_n=30))
def test_stripping_deepest_leaves_keeps_a_halin_graph(h):
    if h.d < 2:
        return
    smaller = _strip_deepest_leaves(h)
    assert smaller.d == h.d - 1
    assert smaller.n <= h.n - 2
    assert check_depth_bound(smaller)


K4_TEXT = "# the 4-vertex Halin graph\nhalin 4\nu : v1 v2 v3\n"


def test_parse_k4(k4):
    h = parse_halin(K4_TEXT)
    assert h == k4
    assert serialize_halin(h) == "halin 4\nu : v1 v2 v3\n"


def test_parse_with_cycle_line():
    h = parse_halin("halin 5\nu : v1 v2 v3 v4\ncycle: v3 v4 v1 v2\n")
    assert [h.label(v) for v in h.leaf_order] == ["v3", "v4", "v1", "v2"]
    assert parse_halin(serialize_halin(h)) == h


@pytest.mark.parametrize(
    "text, line",
    [
        ("hello\n", 1),
        ("halin x\n", 1),
        ("halin 4\nu v1 v2 v3\n", 2),
        ("halin 4\nu : v1 v2 v3\nu : a b\n", 3),
        ("# c\n\nhalin 4\nu :\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_halin(text)
    assert info.value.line == line


def test_header_count_must_match():
    with pytest.raises(ValidationError):
        parse_halin("halin 5\nu : v1 v2 v3\n")


@given(h=halin_graphs(max_n=30))
def test_serialize_parse_round_trip(h):
    text = serialize_halin(h)
    parsed = parse_halin(text)
    assert parsed.children == h.children
    assert parsed.leaf_order == h.leaf_order
    assert serialize_halin(parsed) == text


def test_reflect_helper_is_valid(six):
    r = reflect(six)
    build_halin(six.label(0), {six.label(v): [six.label(c) for c in cs]
                               for v, cs in enumerate(six.children) if cs},
                [six.label(v) for v in r.leaf_order])
