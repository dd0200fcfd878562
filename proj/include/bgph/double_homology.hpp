#pragma once

#include <map>

#include "bgph/hochster.hpp"

namespace bgph {

// Sign (-1)^{#{i in I : i < j}} attached to the summand map that inserts
// vertex j into the index subset I. Requires j outside I.
int sign_epsilon(std::size_t j, vertex_set I);

// The second differential on the Hochster summands, assembled per source
// bidegree: d' maps (-i, 2j) to (-i-1, 2j+2), block (I -> I u {v}) equal to
// (-1)^{p+1} eps(v, I) times the map induced by K_I into K_{I u {v}}.
struct double_chain_complex {
    std::map<bigrade, fmatrix> dprime;  // keyed by source bidegree

    const fmatrix* out_of(bigrade g) const {
        auto it = dprime.find(g);
        return it == dprime.end() ? nullptr : &it->second;
    }
};

// Assembles every block and verifies d' o d' = 0.
double_chain_complex build_partial_prime(const hochster_group& g);

// Double homology HH = ker d' / im d' per bidegree, with representatives in
// the Hochster coordinates of the bigrade.
struct double_homology_t {
    std::map<bigrade, quotient_basis_result> groups;

    int dim(bigrade g) const {
        auto it = groups.find(g);
        return it == groups.end() ? 0 : static_cast<int>(it->second.dim());
    }
    std::map<bigrade, int> dims() const {
        std::map<bigrade, int> out;
        for (const auto& [g, q] : groups)
            if (q.dim() > 0) out[g] = static_cast<int>(q.dim());
        return out;
    }
};

double_homology_t double_homology(const hochster_group& g, const double_chain_complex& d);

// Everything the persistent pipelines need per filtration stage.
struct double_package {
    hochster_group G;
    double_chain_complex D;
    double_homology_t HH;
};

double_package compute_double_package(const simplicial_complex& k, const prime_field& F,
                                      homology_cache& cache, unsigned threads = 1);

std::map<bigrade, int> double_homology_dims(const simplicial_complex& k, const prime_field& F);

// Map on HH induced by an inclusion on the same vertex set: representatives
// are pushed through the bigraded block map and re-expressed in the target
// HH basis. Commutation of the block map with both differentials is checked
// everywhere in debug builds and on the j <= 4 bigrades in release builds.
std::map<bigrade, fmatrix> induced_map_hh(const double_package& from, const double_package& to);

}  // namespace bgph
