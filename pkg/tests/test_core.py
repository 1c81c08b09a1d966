import pytest
from hypothesis import given, strategies as st

from forestperm.core import (
    PermGraph,
    PermutationError,
    ReconstructionError,
    build_bar_diagram,
    build_graph,
    final_ascent,
    identity,
    inverse,
    make_permutation,
    parse_permutation,
    reconstruct,
    rl_minima,
)

from conftest import all_perms, nx_graph_of, perms

FIG1 = "64375182"


def P(s):
    return parse_permutation(s)


def test_make_permutation_accepts_and_rejects():
    assert make_permutation([1]).n == 1
    assert make_permutation([6, 4, 3, 7, 5, 1, 8, 2]).n == 8
    for bad in ([], [1, 1, 2], [0, 1], [1, 3]):
        with pytest.raises(PermutationError):
            make_permutation(bad)


@pytest.mark.parametrize("text", ["6 4 3 7 5 1 8 2", "6,4,3,7,5,1,8,2", " 64375182 ", "6, 4 3,7 5 1 8 2"])
def test_parse_formats(text):
    assert P(text).values == (6, 4, 3, 7, 5, 1, 8, 2)


def test_compact_form_limited_to_nine():
    with pytest.raises(PermutationError):
        P("1234567891")
    assert P("10 9 8 7 6 5 4 3 2 1").n == 10
    assert str(P("10 9 8 7 6 5 4 3 2 1")) == "10 9 8 7 6 5 4 3 2 1"


def test_graph_of_figure_one():
    g = build_graph(P(FIG1))
    assert g.sorted_edges() == [(1, 4), (2, 4), (2, 5), (3, 4), (3, 5), (4, 7), (5, 7), (6, 7), (6, 8)]


@pytest.mark.parametrize("n", range(1, 7))
def test_identity_and_reverse_graphs(n):
    assert build_graph(identity(n)).sorted_edges() == [(i, i + 1) for i in range(1, n)]
    assert build_graph(make_permutation(range(n, 0, -1))).e == 0


def test_2143_is_a_four_cycle():
    g = build_graph(P("2143"))
    assert g.sorted_edges() == [(1, 3), (1, 4), (2, 3), (2, 4)]
    assert sorted(g.find_cycle()) == [1, 2, 3, 4]


def test_bar_diagram():
    d = build_bar_diagram(P(FIG1))
    assert len(d.bars) == 9 and d.bars[0] == (1, 4)
    assert [div for div in d.dividers if (1, 4) in d.crossing(div)] == [1, 2, 3]
    one = build_bar_diagram(P("1"))
    assert one.bars == () and list(one.dividers) == []
    d2 = build_bar_diagram(P("2143"))
    assert len(d2.crossing(2)) == 4
    assert d2.crossing_counts() == [2, 4, 2]


def test_bar_order_is_lexicographic_and_matches_edges(s7):
    for p in s7[::7]:
        d = build_bar_diagram(p)
        assert list(d.bars) == sorted(d.bars)
        assert set(d.bars) == build_graph(p).edges


def test_graph_matches_independent_oracle(s7):
    for p in s7:
        assert build_graph(p).edges == {tuple(sorted(e)) for e in nx_graph_of(p).edges}


@pytest.mark.parametrize(
    "perm, positions, a",
    [("123", [1, 2, 3], 3), ("2143", [2, 4], 1), ("321", [3], 1), ("1", [1], 1)],
)
def test_rl_minima_and_final_ascent(perm, positions, a):
    p = P(perm)
    assert rl_minima(p) == positions
    assert final_ascent(p) == a


def test_statistics_always_positive_and_last_position_is_rl_minimum(s7):
    for p in s7:
        mins = rl_minima(p)
        assert mins and mins[-1] == p.n
        assert final_ascent(p) >= 1


def test_inverse():
    assert inverse(P("312")) == P("231")
    assert inverse(P("2143")) == P("2143")
    p = P(FIG1)
    assert inverse(inverse(p)) == p


def test_relabelling_gives_graph_of_inverse(s7):
    for p in s7:
        assert build_graph(p).relabel(p.values).edges == build_graph(inverse(p)).edges


def test_reconstruct_examples():
    assert reconstruct(build_graph(P(FIG1))) == P(FIG1)
    assert reconstruct(PermGraph.from_edges(5, [])) == P("54321")
    assert reconstruct(PermGraph.from_edges(3, [(1, 2), (2, 3)])) == P("123")


def test_reconstruct_round_trip_s8():
    for p in perms(8):
        assert reconstruct(build_graph(p)) == p


def test_reconstruct_rejects_unrealizable():
    # the order whose only relation is 1 < 3 is not two-dimensional
    with pytest.raises(ReconstructionError):
        reconstruct(PermGraph.from_edges(3, [(1, 3)]))
    with pytest.raises(ReconstructionError):
        reconstruct(PermGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)]))


def test_triangle_free_and_edge_bound():
    for n in range(1, 9):
        best = 0
        for p in perms(n):
            g = build_graph(p)
            assert not g.has_triangle()
            assert g.e <= n * n // 4
            best = max(best, g.e)
        assert best == n * n // 4


def test_monotone_bar_path_exists(s7):
    for p in s7:
        succ = build_graph(p).successors()
        reach = {}
        for v in range(p.n, 0, -1):
            r = {v}
            for w in succ[v]:
                r |= reach[w]
            reach[v] = r
        for a in range(1, p.n + 1):
            for b in range(a + 1, p.n + 1):
                assert (b in reach[a]) == (p[a] < p[b])


@given(st.permutations(list(range(1, 11))))
def test_reconstruct_round_trip_random(vals):
    p = make_permutation(vals)
    assert reconstruct(build_graph(p)) == p
