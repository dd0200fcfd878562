#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bgph/metric.hpp"

using namespace bgph;

namespace {

pseudo_metric_space x1() {
    return pseudo_metric_space::from_points({{0, 0}, {2, 0}, {0, 4}});
}
pseudo_metric_space x2() {
    return pseudo_metric_space::from_points({{0, 0}, {2, 0}, {1, std::sqrt(15.0)}});
}

// rectangle with two sides 1 and diagonals n, when n > 2
pseudo_metric_space rectangle(double n) {
    double s = std::sqrt(n * n - 1.0);
    std::vector<double> d = {0, 1, n, s,
                             1, 0, s, n,
                             n, s, 0, 1,
                             s, n, 1, 0};
    return pseudo_metric_space::from_matrix(d, 4);
}

// tetrahedron over an equilateral base with side 1 and legs n
pseudo_metric_space tetrahedron(double n) {
    std::vector<double> d = {0, 1, 1, n,
                             1, 0, 1, n,
                             1, 1, 0, n,
                             n, n, n, 0};
    return pseudo_metric_space::from_matrix(d, 4);
}

pseudo_metric_space random_space(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> c(0.0, 2.0);
    std::vector<std::vector<double>> pts(n);
    for (auto& p : pts) p = {c(rng), c(rng)};
    return pseudo_metric_space::from_points(pts);
}

}  // namespace

TEST_CASE("from_points distances of the two 3-point clouds") {
    auto a = x1();
    CHECK(a.dist(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(a.dist(0, 2) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(a.dist(1, 2) == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));

    auto b = x2();
    CHECK(b.dist(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.dist(0, 2) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(b.dist(1, 2) == doctest::Approx(4.0).epsilon(1e-12));

    auto single = pseudo_metric_space::from_points({{3, 1}});
    CHECK(single.size() == 1);
    CHECK(single.dist(0, 0) == 0.0);

    CHECK_THROWS_AS(pseudo_metric_space::from_points({{0, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("diameters") {
    CHECK(pseudo_metric_space::from_points({{7, 7}}).diameter() == 0.0);
    CHECK(x1().diameter() == doctest::Approx(2.0 * std::sqrt(5.0)));
    CHECK(x2().diameter() == doctest::Approx(4.0));
}

TEST_CASE("doubling") {
    auto one = pseudo_metric_space::from_points({{5, 5}});
    auto two = one.doubling(0);
    CHECK(two.size() == 2);
    CHECK(two.dist(0, 1) == 0.0);

    auto d = x1().doubling(0);
    REQUIRE(d.size() == 4);
    CHECK(d.dist(0, 3) == 0.0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(d.dist(3, j) == d.dist(0, j));
    CHECK(d.diameter() == x1().diameter());

    CHECK_THROWS_AS(one.doubling(5), std::out_of_range);
}

TEST_CASE("doubling leaves the GH distance at zero") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        auto x = random_space(rng, 4);
        auto xd = x.doubling(rep % 4);
        CHECK(gromov_hausdorff(x, xd) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("rectangle vs tetrahedron golden values") {
    auto x = rectangle(3.0);
    auto y = tetrahedron(3.0);
    CHECK(gromov_hausdorff(x, y, 30) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gromov_hausdorff_bijective(x, y) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("GH basics and symmetry") {
    std::mt19937 rng(4);
    auto x = random_space(rng, 4);
    CHECK(gromov_hausdorff(x, x) == 0.0);
    CHECK(gromov_hausdorff_bijective(x, x) == 0.0);

    auto y = random_space(rng, 5);
    CHECK(gromov_hausdorff(x, y) == doctest::Approx(gromov_hausdorff(y, x)).epsilon(1e-12));

    auto y4 = random_space(rng, 4);
    CHECK(gromov_hausdorff_bijective(x, y4) ==
          doctest::Approx(gromov_hausdorff_bijective(y4, x)).epsilon(1e-12));
    CHECK(gromov_hausdorff_bijective(x, y4) >= gromov_hausdorff(x, y4) - 1e-12);
}

TEST_CASE("GH optimum is realized by the reported correspondence") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        auto x = random_space(rng, 3 + rep % 3);
        auto y = random_space(rng, 3 + (rep + 1) % 3);
        auto r = gromov_hausdorff_full(x, y);
        REQUIRE(r.opt.covers(x.size(), y.size()));
        CHECK(distortion(x, y, r.opt) == doctest::Approx(2.0 * r.value).epsilon(1e-12));
    }
}

TEST_CASE("GH caps and errors") {
    std::mt19937 rng(6);
    auto x = random_space(rng, 6);
    auto y = random_space(rng, 6);
    CHECK_THROWS_AS((void)gromov_hausdorff(x, y, 30), cap_exceeded);
    auto y5 = random_space(rng, 5);
    CHECK_THROWS_WITH_AS((void)gromov_hausdorff_bijective(x, y5), "d'_GH requires equal cardinality",
                         std::invalid_argument);
}

TEST_CASE("strong outliers") {
    auto line = pseudo_metric_space::from_points({{0}, {1}, {10}});
    CHECK(line.is_strong_outlier(2));
    CHECK_FALSE(line.is_strong_outlier(0));
    CHECK_FALSE(line.is_strong_outlier(1));

    // equilateral: the inequality holds with equality, so ties count
    auto eq = pseudo_metric_space::from_points({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
    for (std::size_t i = 0; i < 3; ++i) CHECK(eq.is_strong_outlier(i));

    auto single = pseudo_metric_space::from_points({{0}});
    CHECK_THROWS_AS((void)single.is_strong_outlier(0), std::invalid_argument);
}

TEST_CASE("equalize_by_doubling on a bijection is the identity") {
    std::mt19937 rng(7);
    auto x = random_space(rng, 4);
    auto y = random_space(rng, 4);
    correspondence c;
    for (std::size_t i = 0; i < 4; ++i) c.pairs.emplace_back(i, (i + 1) % 4);
    auto eq = equalize_by_doubling(x, y, c);
    CHECK(eq.x.size() == 4);
    CHECK(eq.y.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(eq.bijection[i] == (i + 1) % 4);
}

TEST_CASE("equalize_by_doubling on the 2x3 correspondence") {
    std::mt19937 rng(8);
    auto x = random_space(rng, 2);
    auto y = random_space(rng, 3);
    correspondence c;
    c.pairs = {{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
    CHECK(c.multiplicity_x(1) == 3);
    auto eq = equalize_by_doubling(x, y, c);
    CHECK(eq.x.size() == 5);
    CHECK(eq.y.size() == 5);

    // distortion of the bijection equals the distortion of C, as multisets
    correspondence cb;
    for (std::size_t i = 0; i < eq.x.size(); ++i) cb.pairs.emplace_back(i, eq.bijection[i]);
    CHECK(distortion(eq.x, eq.y, cb) == doctest::Approx(distortion(x, y, c)).epsilon(1e-12));
}

TEST_CASE("equalizing the optimal correspondence matches d_GH") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 8; ++rep) {
        auto x = random_space(rng, 3 + rep % 2);
        auto y = random_space(rng, 4);
        auto r = gromov_hausdorff_full(x, y);
        auto eq = equalize_by_doubling(x, y, r.opt);
        double dprime = gromov_hausdorff_bijective(eq.x, eq.y);
        CHECK(dprime <= distortion(x, y, r.opt) / 2.0 + 1e-9);
        CHECK(dprime == doctest::Approx(r.value).epsilon(1e-9));
    }
}

TEST_CASE("matrix ingestion validation") {
    CHECK_THROWS_AS(pseudo_metric_space::from_matrix({0, 1, 2, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(pseudo_metric_space::from_matrix({1, 1, 1, 0}, 2), std::invalid_argument);
    std::string warn;
    auto ok = pseudo_metric_space::from_matrix({0, 1, 1, 0}, 2, &warn);
    CHECK(warn.empty());
    CHECK(ok.dist(0, 1) == 1.0);
    // triangle violation warns but does not throw
    auto bad = pseudo_metric_space::from_matrix({0, 1, 5, 1, 0, 1, 5, 1, 0}, 3, &warn);
    CHECK(!warn.empty());
    CHECK(bad.size() == 3);
}
