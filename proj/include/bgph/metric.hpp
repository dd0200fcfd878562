#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgph/config.hpp"

namespace bgph {

// Finite pseudo-metric space: symmetric distance matrix with zero diagonal.
// Distinct points may sit at distance zero, which is what the doubling
// operation produces.
class pseudo_metric_space {
public:
    static pseudo_metric_space from_points(const std::vector<std::vector<double>>& coords);
    // Validates symmetry and zero diagonal (hard errors); triangle-inequality
    // violations beyond the tolerance only produce a warning via `warning`.
    static pseudo_metric_space from_matrix(std::vector<double> dist, std::size_t n,
                                           std::string* warning = nullptr,
                                           double tol = kDefaultTolerance);

    std::size_t size() const { return n_; }
    double dist(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // X together with a copy x' of point x at distance 0; the new point gets
    // index size().
    pseudo_metric_space doubling(std::size_t x) const;

    pseudo_metric_space restrict_to(const std::vector<std::size_t>& idx) const;

    double diameter() const;

    // d(x,y) >= max_{y' != x} d(y,y') for every y != x, compared with the
    // global tolerance, so ties count as outliers.
    bool is_strong_outlier(std::size_t x, double tol = kDefaultTolerance) const;

private:
    pseudo_metric_space(std::size_t n, std::vector<double> d) : n_(n), d_(std::move(d)) {}

    std::size_t n_ = 0;
    std::vector<double> d_;
    std::vector<std::string> labels_;
};

// Subset of X x Y covering both factors.
struct correspondence {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    bool covers(std::size_t nx, std::size_t ny) const;
    std::size_t multiplicity_x(std::size_t x) const;
    std::size_t multiplicity_y(std::size_t y) const;
};

double distortion(const pseudo_metric_space& x, const pseudo_metric_space& y,
                  const correspondence& c);

struct gh_result {
    double value = 0;
    correspondence opt;
};

// Exact Gromov-Hausdorff distance: half the minimal max-distortion over
// correspondences. Enumerates the minimal correspondences (a map X -> Y
// together with a map Y -> X, whose union is both-surjective and realizes
// the optimum) with branch-and-bound pruning. |X|*|Y| <= pair_cap.
gh_result gromov_hausdorff_full(const pseudo_metric_space& x, const pseudo_metric_space& y,
                                std::size_t pair_cap = 30);
double gromov_hausdorff(const pseudo_metric_space& x, const pseudo_metric_space& y,
                        std::size_t pair_cap = 30);

struct gh_bijective_result {
    double value = 0;
    std::vector<std::size_t> bijection;  // image of each point of X
};

// Modified distance over bijective correspondences only; |X| = |Y| <= 9.
gh_bijective_result gromov_hausdorff_bijective_full(const pseudo_metric_space& x,
                                                    const pseudo_metric_space& y,
                                                    std::size_t size_cap = 9);
double gromov_hausdorff_bijective(const pseudo_metric_space& x, const pseudo_metric_space& y,
                                  std::size_t size_cap = 9);

// Iterated doublings turning a correspondence into a bijection of equal-size
// spaces with the same distortion: first every x with D_C(x) > 1 is doubled
// D_C(x)-1 times, then every y still multiply covered.
struct equalized {
    pseudo_metric_space x;
    pseudo_metric_space y;
    std::vector<std::size_t> bijection;  // from points of x to points of y
};

equalized equalize_by_doubling(const pseudo_metric_space& x, const pseudo_metric_space& y,
                               const correspondence& c);

}  // namespace bgph
