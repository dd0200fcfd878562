#pragma once

#include <limits>
#include <vector>

#include "bgph/double_homology.hpp"
#include "bgph/metric.hpp"

namespace bgph {

enum class grading_kind { degree, bigraded };

inline constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

// One interval. For degree-graded barcodes the grade stores the homological
// degree in `i` (j stays 0); bigraded bars use (i, j) for bidegree (-i, 2j).
struct bar {
    bigrade grade;
    double birth = 0;
    double death = kInfiniteDeath;

    bool infinite() const { return death == kInfiniteDeath; }
};

struct barcode {
    grading_kind kind = grading_kind::degree;
    filtration_grid grid;
    std::vector<bar> bars;

    void sort_canonical();
    // number of bars of the grade containing t (birth <= t < death)
    int count_at(bigrade g, double t) const;
};

// Multiset equality with exact grades and endpoint tolerance.
bool barcodes_match(const barcode& a, const barcode& b, double tol = kDefaultTolerance);

// Persistence tower on a critical-value grid: dims per index and one
// transition matrix per consecutive pair (shape dims[k+1] x dims[k]).
struct tower {
    bigrade grade;
    std::vector<int> dims;
    std::vector<fmatrix> steps;
};

// Interval multiset of the tower via the rank function of the composites:
// bars [g_b, g_d) counted by r(b,d-1) - r(b,d) - r(b-1,d-1) + r(b-1,d);
// classes surviving past the last grid index die at infinity.
std::vector<bar> tower_barcode(const prime_field& F, const tower& t, const filtration_grid& grid);

struct pipeline_options {
    unsigned threads = 1;
    std::size_t vertex_cap = 20;
    double tol = kDefaultTolerance;
};

// Reduced persistent homology of the Vietoris-Rips filtration, graded by
// homological degree. Finite spaces leave no infinite bars.
barcode persistent_homology(const pseudo_metric_space& x, const prime_field& F,
                            const pipeline_options& opt = {});

// Bigraded persistent homology assembled from the per-subset decomposition:
// a degree-p bar of the subspace J lands at bidegree (-(|J|-p-1), 2|J|), and
// the empty subset contributes the infinite bar at (0,0).
barcode phz(const pseudo_metric_space& x, const prime_field& F, const pipeline_options& opt = {});

// Bigraded persistent double homology: HH towers over the full critical
// grid. The only infinite bar sits at (0,0).
barcode phhz(const pseudo_metric_space& x, const prime_field& F, const pipeline_options& opt = {});

}  // namespace bgph
