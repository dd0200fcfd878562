#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgph/distances.hpp"
#include "bgph/selftest.hpp"

using namespace bgph;

TEST_CASE("property suite passes on the default model") {
    prime_field f2(2);
    random_model model;
    model.seed = 1;
    auto rep = run_property_suite(model, 10, f2);
    CHECK(rep.ok());
    CHECK(rep.failing_seeds.empty());
    CHECK(rep.lines.size() == 5);
    for (const auto& l : rep.lines) CHECK(l.find("PASS") != std::string::npos);
}

TEST_CASE("property suite passes over an odd field") {
    prime_field f3(3);
    random_model model;
    model.seed = 33;
    CHECK(run_property_suite(model, 5, f3).ok());
}

TEST_CASE("zero perturbation makes every stability inequality tight") {
    prime_field f2(2);
    random_model model;
    model.seed = 5;
    model.perturbation = 0.0;
    auto rep = run_property_suite(model, 5, f2);
    CHECK(rep.ok());
}

TEST_CASE("adding a far point keeps the double-homology bound") {
    prime_field f2(2);
    auto x = pseudo_metric_space::from_points({{0, 0}, {1, 0}, {0.3, 0.8}, {0.9, 0.4}});
    auto far = pseudo_metric_space::from_points({{0, 0}, {1, 0}, {0.3, 0.8}, {0.9, 0.4}, {50, 50}});
    REQUIRE(far.is_strong_outlier(4));
    double lhs = bottleneck(phhz(x, f2), phhz(far, f2));
    double rhs = 2.0 * gromov_hausdorff(x, far, 30);
    CHECK(lhs <= rhs + 1e-9);
}

TEST_CASE("report formatting carries reproduction data") {
    prime_field f2(2);
    random_model model;
    model.seed = 99;
    auto rep = run_property_suite(model, 3, f2);
    std::string s = rep.to_string();
    CHECK(s.find("surgery") != std::string::npos);
    CHECK(s.find("all properties PASS") != std::string::npos);
}
