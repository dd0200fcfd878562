#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "bgph/hochster.hpp"

using namespace bgph;

namespace {

simplicial_complex four_cycle() {
    return simplicial_complex::from_faces(4, {0b0011, 0b0110, 0b1100, 0b1001});
}

simplicial_complex discrete(std::size_t m) {
    return simplicial_complex::flag(m, std::vector<vertex_set>(m, 0));
}

simplicial_complex random_flag(std::mt19937& rng, std::size_t m, double edge_prob = 0.5) {
    std::bernoulli_distribution e(edge_prob);
    std::vector<vertex_set> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (e(rng)) {
                adj[i] |= vertex_set{1} << j;
                adj[j] |= vertex_set{1} << i;
            }
    return simplicial_complex::flag(m, std::move(adj));
}

using table = std::map<bigrade, int>;

}  // namespace

TEST_CASE("full simplices carry only the origin class") {
    prime_field f2(2);
    for (std::size_t m : {1u, 2u, 3u, 4u}) {
        table t = betti_table(simplicial_complex::full_simplex(m), f2);
        CHECK(t == table{{{0, 0}, 1}});
    }
}

TEST_CASE("two disjoint points: Z_K is the 3-sphere") {
    prime_field f2(2);
    table t = betti_table(discrete(2), f2);
    CHECK(t == table{{{0, 0}, 1}, {{1, 2}, 1}});
}

TEST_CASE("three disjoint points") {
    prime_field f2(2);
    table t = betti_table(discrete(3), f2);
    CHECK(t == table{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
}

TEST_CASE("4-cycle bigraded Betti numbers") {
    for (unsigned p : {2u, 3u}) {
        prime_field F(p);
        table t = betti_table(four_cycle(), F);
        CHECK(t == table{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
    }
}

TEST_CASE("top level recovers the reduced homology of K") {
    std::mt19937 rng(41);
    prime_field f2(2);
    for (int rep = 0; rep < 10; ++rep) {
        auto k = random_flag(rng, 5);
        auto h = reduced_homology(k, f2);
        table t = betti_table(k, f2);
        for (int i = 1; i <= 4; ++i) {
            int expect = h->dim(5 - i - 1);
            auto it = t.find({i, 5});
            CHECK((it == t.end() ? 0 : it->second) == expect);
        }
    }
}

TEST_CASE("total degree resummation oracle") {
    std::mt19937 rng(42);
    prime_field f2(2);
    for (int rep = 0; rep < 8; ++rep) {
        auto k = random_flag(rng, 5);
        table t = betti_table(k, f2);
        // independently: sum over J of dim H_{p-|J|-1}(K_J) per total degree p
        std::map<int, int> direct;
        for (vertex_set J = 0; J < 32; ++J) {
            auto h = reduced_homology(k.restrict_to(J), f2);
            int j = std::popcount(J);
            for (int d = -1; d <= h->max_degree(); ++d)
                if (h->dim(d) > 0) direct[d + j + 1] += h->dim(d);
        }
        std::map<int, int> from_table;
        for (const auto& [g, dim] : t) from_table[-g.i + 2 * g.j] += dim;
        CHECK(from_table == direct);
    }
}

TEST_CASE("trapezoid bounds hold on random flag complexes") {
    std::mt19937 rng(43);
    prime_field f2(2);
    for (int rep = 0; rep < 20; ++rep) {
        auto k = random_flag(rng, 6);
        table t = betti_table(k, f2);  // throws if outside the trapezoid
        auto it = t.find({0, 0});
        REQUIRE(it != t.end());
        CHECK(it->second == 1);
        for (const auto& [g, dim] : t) {
            if (g == bigrade{0, 0}) continue;
            CHECK(g.i >= 1);
            CHECK(g.j >= g.i + 1);
            CHECK(g.j <= 6);
        }
    }
}

TEST_CASE("induced bigraded map blocks") {
    prime_field f2(2);
    homology_cache cache;

    auto k = discrete(3);
    auto gk = bigraded_homology(k, f2, cache);
    auto id = induced_bigraded_map(gk, gk);
    CHECK(id.at({1, 2}) == fmatrix::identity(3));

    // edge {0,1} plus isolated point: the {0,1} summand dies, two survive
    std::vector<vertex_set> adj = {0b010, 0b001, 0};
    auto l = simplicial_complex::flag(3, adj);
    auto gl = bigraded_homology(l, f2, cache);
    auto step = induced_bigraded_map(gk, gl);
    const fmatrix& block = step.at({1, 2});
    CHECK(block.rows() == 2);
    CHECK(block.cols() == 3);
    CHECK(rank(f2, block) == 2);
}

TEST_CASE("functoriality of bigraded maps along a 3-step filtration") {
    prime_field f2(2);
    homology_cache cache;
    auto k0 = discrete(4);
    auto k1 = simplicial_complex::flag(4, {0b0010, 0b0001, 0, 0});
    auto k2 = four_cycle();  // contains the edge {0,1}? 0b0011 yes

    auto g0 = bigraded_homology(k0, f2, cache);
    auto g1 = bigraded_homology(k1, f2, cache);
    auto g2 = bigraded_homology(k2, f2, cache);

    auto m01 = induced_bigraded_map(g0, g1);
    auto m12 = induced_bigraded_map(g1, g2);
    auto m02 = induced_bigraded_map(g0, g2);
    for (const auto& [g, mat] : m02) {
        auto a = m12.find(g);
        auto b = m01.find(g);
        if (a == m12.end() || b == m01.end()) {
            CHECK(is_zero(mat));
            continue;
        }
        CHECK(mat == mat_mul(f2, a->second, b->second));
    }
}
