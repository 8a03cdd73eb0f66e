from __future__ import annotations

import pytest

from ecgraph.core import color_profile, min_color_degree, save_ecg
from ecgraph.generators import (
    GeneratorSpec,
    gen_complete_multipartite,
    gen_example1,
    gen_proper_complete,
    gen_random_colored,
    generate,
)
from ecgraph.rainbow import find_book, find_fan, max_book, max_fan


def _is_properly_colored(g) -> bool:
    return all(color_profile(g, v).dmon <= 1 for v in range(g.n))


class TestExample1:
    def test_k2_is_rainbow_triangle(self):
        g = gen_example1(2)
        assert g.n == 3 and g.edge_count == 3
        assert len(g.colors()) == 3
        assert min_color_degree(g) == 2

    def test_k3_matches_extremal_statement(self):
        g = gen_example1(3)
        assert g.n == 6
        assert len(g.colors()) == 6
        assert all(color_profile(g, v).dc == 4 for v in range(6))
        assert find_book(g, 3) is None
        assert find_fan(g, 3) is None
        assert max_book(g) == 2 and max_fan(g) == 2

    def test_k5_degree_equals_half_bound(self):
        g = gen_example1(5)
        assert g.n == 12
        dc = min_color_degree(g)
        assert dc == 8
        assert 2 * dc == g.n + 5 - 1

    @pytest.mark.parametrize("k", range(2, 8))
    def test_coloring_is_proper_and_balanced(self, k):
        g = gen_example1(k)
        assert g.n == 3 * (k - 1)
        assert _is_properly_colored(g)
        assert all(g.degree(v) == 2 * k - 2 for v in range(g.n))

    @pytest.mark.parametrize("k", range(2, 8))
    def test_common_neighborhood_size_is_k_minus_1(self, k):
        g = gen_example1(k)
        for u, v in g.edges:
            common = set(g.neighbors(u)) & set(g.neighbors(v))
            assert len(common) == k - 1

    def test_rejects_k_below_2(self):
        with pytest.raises(ValueError):
            gen_example1(1)


class TestRandomColored:
    def test_deterministic_in_seed(self):
        a = gen_random_colored(10, 0.8, 12, seed=7)
        b = gen_random_colored(10, 0.8, 12, seed=7)
        assert a == b
        assert save_ecg(a) == save_ecg(b)
        assert a != gen_random_colored(10, 0.8, 12, seed=8)

    def test_forced_monochromatic_complete(self):
        g = gen_random_colored(5, 1.0, 1, seed=3)
        assert g.edge_count == 10
        assert g.colors() == {1}
        assert min_color_degree(g) == 1

    def test_empty_graph(self):
        g = gen_random_colored(4, 0.0, 3, seed=3)
        assert g.edge_count == 0

    def test_palette_respected(self):
        g = gen_random_colored(12, 0.7, 5, seed=1)
        assert g.colors() <= set(range(1, 6))

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            gen_random_colored(0, 0.5, 3, 0)
        with pytest.raises(ValueError):
            gen_random_colored(5, 1.5, 3, 0)
        with pytest.raises(ValueError):
            gen_random_colored(5, 0.5, 0, 0)


class TestProperComplete:
    def test_n3_is_rainbow_triangle(self):
        g = gen_proper_complete(3, 0)
        assert min_color_degree(g) == 2
        assert len({g.color(*e) for e in g.edges}) == 3

    def test_n4_colors_are_perfect_matchings(self):
        g = gen_proper_complete(4, 11)
        assert len(g.colors()) == 3
        by_color: dict[int, list] = {}
        for u, v in g.edges:
            by_color.setdefault(g.color(u, v), []).append((u, v))
        for pairs in by_color.values():
            hit = [w for e in pairs for w in e]
            assert sorted(hit) == [0, 1, 2, 3]

    def test_n5_min_color_degree(self):
        g = gen_proper_complete(5, 2)
        assert g.edge_count == 10
        assert min_color_degree(g) == 4
        assert _is_properly_colored(g)

    @pytest.mark.parametrize("n", range(2, 12))
    def test_properness_and_color_count(self, n):
        g = gen_proper_complete(n, 5)
        assert g.edge_count == n * (n - 1) // 2
        assert _is_properly_colored(g)
        assert min_color_degree(g) == n - 1
        assert len(g.colors()) == (n - 1 if n % 2 == 0 else n)

    def test_seed_permutes_colors(self):
        a = gen_proper_complete(6, 1)
        b = gen_proper_complete(6, 2)
        assert a == gen_proper_complete(6, 1)
        assert _is_properly_colored(b)

    def test_rejects_n_below_2(self):
        with pytest.raises(ValueError):
            gen_proper_complete(1, 0)


class TestCompleteMultipartite:
    def test_balanced_three_parts(self):
        g = gen_complete_multipartite([2, 2, 2])
        assert g.n == 6 and g.edge_count == 12
        assert len(g.colors()) == 12  # injective
        assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
        assert g.has_edge(0, 2) and g.has_edge(1, 5)

    def test_rejects_empty_or_bad_parts(self):
        with pytest.raises(ValueError):
            gen_complete_multipartite([])
        with pytest.raises(ValueError):
            gen_complete_multipartite([2, 0])


class TestGeneratorSpec:
    def test_byte_identical_for_same_spec_and_seed(self):
        spec = GeneratorSpec(kind="random_colored",
                             parameters={"n": 9, "p": 0.6, "c": 7}, seed=42)
        assert save_ecg(generate(spec)) == save_ecg(generate(spec))

    def test_dispatch(self):
        assert generate(GeneratorSpec("example1", {"k": 3})).n == 6
        assert generate(GeneratorSpec("proper_complete", {"n": 5}, seed=1)).n == 5
        assert generate(GeneratorSpec("complete_multipartite",
                                      {"parts": [1, 2]})).edge_count == 2

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            GeneratorSpec(kind="mystery")
