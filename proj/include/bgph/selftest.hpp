#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgph/field.hpp"

namespace bgph {

// Seeded generator model for the property suite.
struct random_model {
    std::uint64_t seed = 1;
    std::size_t min_points = 3;
    std::size_t max_points = 7;
    double box = 2.0;          // coordinate range of generated clouds
    double perturbation = 0.1; // max point displacement for stability trials
};

struct property_report {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> lines;           // one summary line per property
    std::vector<std::uint64_t> failing_seeds; // reproduction data

    bool ok() const { return failures == 0; }
    std::string to_string() const;
};

// Per trial: surgery on a random glued complex, nilpotency of the second
// differential, doubling invariance of HH and of the double-homology
// barcode, both stability inequalities on a perturbed pair, and the
// bar-count/dimension consistency of the bigraded barcode.
property_report run_property_suite(const random_model& model, int trials, const prime_field& F);

}  // namespace bgph
