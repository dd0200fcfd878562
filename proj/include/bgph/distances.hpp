#pragma once

#include "bgph/persistence.hpp"

namespace bgph {

// Interval [birth, death) with death possibly infinite, or the empty
// interval used to pad matchings.
struct extended_interval {
    bool is_empty = true;
    double birth = 0;
    double death = 0;

    static extended_interval empty() { return {}; }
    static extended_interval make(double b, double d) { return {false, b, d}; }
    bool infinite() const { return !is_empty && death == kInfiniteDeath; }
};

// The matching cost table: endpoint sup-distance between finite intervals,
// |a-a'| between infinite ones, half-length against the empty interval, and
// infinity across the finite/infinite divide.
double pi_distance(const extended_interval& a, const extended_interval& b);

// Interleaving distance between the two interval modules: the endpoint
// distance when the intervals overlap enough, otherwise the larger
// half-length (matching both to zero-length intervals at their midpoints).
double interval_interleaving(const extended_interval& a, const extended_interval& b);

struct bottleneck_options {
    // persistence-module morphisms preserve the grading, so only same-grade
    // bars (or the empty interval) may be matched; the ungraded variant
    // pools every bar for experimentation
    bool grade_matched = true;
    // use interval_interleaving instead of pi as the matching cost; the
    // optimum is the same, which the tests exercise
    bool interleaving_cost = false;
    double tol = kDefaultTolerance;
};

// infinity-Wasserstein distance: each side is padded with empty intervals,
// then the max matched cost is minimized exactly via binary search over the
// candidate costs with a bipartite matching feasibility test per probe.
double bottleneck(const barcode& a, const barcode& b, const bottleneck_options& opt = {});

// d_IL computed through the isometry theorem; same value as bottleneck, the
// separate name records how the interleaving distance is obtained.
double interleaving_via_isometry(const barcode& a, const barcode& b,
                                 const bottleneck_options& opt = {});

}  // namespace bgph
