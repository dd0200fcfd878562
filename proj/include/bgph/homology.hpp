#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bgph/complex.hpp"
#include "bgph/field.hpp"
#include "bgph/matrix.hpp"

namespace bgph {

// Reduced simplicial homology of one complex over F_p, with stored cycle
// representatives and a projection that expresses any cycle in the chosen
// basis modulo boundaries. The chain complex is augmented: degree -1 is
// spanned by the empty simplex, so H_{-1} = k exactly for the empty complex.
// Simplices are oriented by increasing vertex order.
//
// Index shift: containers are indexed by d+1 for degree d >= -1.
struct sub_homology {
    std::vector<std::vector<vertex_set>> faces;  // faces[d+1]: sorted d-faces
    std::vector<fmatrix> reps;                   // reps[d+1]: basis cycles as columns
    std::vector<quotient_basis_result> quot;     // projection modulo boundaries
    std::vector<int> dims;                       // dims[d+1] = dim H_d

    int max_degree() const { return static_cast<int>(dims.size()) - 2; }
    int dim(int d) const {
        return (d + 1 < 0 || d + 1 >= static_cast<int>(dims.size())) ? 0 : dims[d + 1];
    }
    std::size_t chain_dim(int d) const {
        return (d + 1 < 0 || d + 1 >= static_cast<int>(faces.size())) ? 0 : faces[d + 1].size();
    }
};

using sub_homology_ptr = std::shared_ptr<const sub_homology>;

sub_homology_ptr reduced_homology(const simplicial_complex& k, const prime_field& F);

// Matrix of H_d(K) -> H_d(L) for K a subcomplex of L on the same labels:
// representative cycles are pushed into L's chains and re-expressed in L's
// basis modulo boundaries.
fmatrix induced_map(const sub_homology& from, const sub_homology& to, int d, const prime_field& F);

// Content-addressed store so that a subcomplex whose faces do not change
// between filtration steps keeps the exact same basis object; induced maps
// between identical objects short-circuit to the identity.
//
// Induced-map matrices are memoized by the identity of the two basis
// objects. The cache keeps every basis alive, so the pointers stay valid
// for its lifetime; a filtration recomputes a block only when one endpoint
// actually changed.
class homology_cache {
public:
    sub_homology_ptr get_or_compute(const simplicial_complex& k, const prime_field& F);

    const fmatrix& induced(const sub_homology_ptr& from, const sub_homology_ptr& to, int d,
                           const prime_field& F);

private:
    std::map<std::vector<std::uint32_t>, sub_homology_ptr> map_;
    std::map<std::tuple<const sub_homology*, const sub_homology*, int>, fmatrix> induced_;
    std::mutex mu_;
};

}  // namespace bgph
