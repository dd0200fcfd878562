#pragma once

#include <compare>
#include <map>
#include <vector>

#include "bgph/homology.hpp"

namespace bgph {

// Bidegree (-i, 2j), stored through the nonnegative pair (i, j).
struct bigrade {
    int i = 0;
    int j = 0;
    auto operator<=>(const bigrade&) const = default;
};

// One Hochster summand: the reduced homology of K_I in degree p sits at
// bidegree (-i, 2j) with j = |I| and p = j - i - 1.
struct hochster_summand {
    vertex_set mask = 0;
    int p = 0;
    int dim = 0;
    int offset = 0;  // coordinate offset inside the bigrade block
};

// Bigraded homology of the moment-angle complex of K: reduced homology of
// every full subcomplex K_I, indexed by bidegree. Subsets are enumerated in
// increasing cardinality, ascending mask within a cardinality, so blocks the
// same bigrade assemble identically across complexes on the same vertex set.
struct hochster_group {
    prime_field F;
    simplicial_complex K;
    std::vector<sub_homology_ptr> sub;                    // indexed by subset mask
    std::map<bigrade, std::vector<hochster_summand>> grades;
    homology_cache* cache = nullptr;  // non-owning; must outlive the group

    int dim(bigrade g) const {
        auto it = grades.find(g);
        if (it == grades.end()) return 0;
        int d = 0;
        for (const auto& s : it->second) d += s.dim;
        return d;
    }
    const hochster_summand* find_summand(bigrade g, vertex_set mask) const {
        auto it = grades.find(g);
        if (it == grades.end()) return nullptr;
        for (const auto& s : it->second)
            if (s.mask == mask) return &s;
        return nullptr;
    }
};

hochster_group bigraded_homology(const simplicial_complex& k, const prime_field& F,
                                 homology_cache& cache, unsigned threads = 1);

// Dimensions per bidegree; verifies that nothing lands outside the allowed
// trapezoid ((0,0), or 1 <= i < j <= m).
std::map<bigrade, int> betti_table(const hochster_group& g);
std::map<bigrade, int> betti_table(const simplicial_complex& k, const prime_field& F);

// Per-bigrade matrices of the map induced by an inclusion K subset L on the
// same vertex set; block-diagonal over the index subsets.
std::map<bigrade, fmatrix> induced_bigraded_map(const hochster_group& from,
                                                const hochster_group& to);

}  // namespace bgph
