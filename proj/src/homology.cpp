#include "bgph/homology.hpp"

#include <algorithm>
#include <bit>

#include "bgph/config.hpp"

namespace bgph {

namespace {

std::size_t face_index(const std::vector<vertex_set>& level, vertex_set f) {
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) throw internal_error("face missing from chain basis");
    return static_cast<std::size_t>(it - level.begin());
}

// boundary C_d -> C_{d-1} of the augmented complex; for d = 0 this is the
// augmentation sending every vertex to the empty simplex.
fmatrix boundary_matrix(const std::vector<vertex_set>& lower, const std::vector<vertex_set>& upper,
                        const prime_field& F) {
    fmatrix d(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        vertex_set f = upper[j];
        std::size_t r = 0;
        for (vertex_set rest = f; rest; ++r) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            vertex_set sub = f & ~(vertex_set{1} << v);
            d.at(face_index(lower, sub), j) = F.from_int(r % 2 == 0 ? 1 : -1);
        }
        if (f == 0) continue;  // the empty simplex has empty boundary
    }
    return d;
}

}  // namespace

sub_homology_ptr reduced_homology(const simplicial_complex& k, const prime_field& F) {
    const int v = std::popcount(k.active());
    const int top = std::max(-1, v - 2);  // higher reduced groups vanish
    auto out = std::make_shared<sub_homology>();
    out->faces = k.faces_up_to(static_cast<std::size_t>(top + 2));

    // boundaries[d+1]: C_d -> C_{d-1}
    std::vector<fmatrix> bnd(static_cast<std::size_t>(top + 3));
    bnd[0] = fmatrix(0, 1);  // C_{-1} -> 0
    for (int d = 0; d <= top + 1; ++d)
        bnd[static_cast<std::size_t>(d + 1)] =
            boundary_matrix(out->faces[static_cast<std::size_t>(d)],
                            out->faces[static_cast<std::size_t>(d + 1)], F);

    for (int d = -1; d <= top; ++d) {
        fmatrix cycles = kernel_basis(F, bnd[static_cast<std::size_t>(d + 1)]);
        auto q = quotient_basis(F, cycles, bnd[static_cast<std::size_t>(d + 2)]);
        out->dims.push_back(static_cast<int>(q.dim()));
        out->reps.push_back(q.reps);
        out->quot.push_back(std::move(q));
    }
    return out;
}

fmatrix induced_map(const sub_homology& from, const sub_homology& to, int d, const prime_field& F) {
    const int n = from.dim(d), m = to.dim(d);
    fmatrix map(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    if (n == 0 || &from == &to) {
        if (&from == &to) return fmatrix::identity(static_cast<std::size_t>(n));
        return map;
    }
    if (m == 0) return map;

    const auto& source_faces = from.faces[static_cast<std::size_t>(d + 1)];
    const auto& target_faces = to.faces[static_cast<std::size_t>(d + 1)];
    std::vector<std::size_t> pos(source_faces.size());
    for (std::size_t i = 0; i < source_faces.size(); ++i)
        pos[i] = face_index(target_faces, source_faces[i]);

    for (int j = 0; j < n; ++j) {
        std::vector<std::uint16_t> chain(target_faces.size(), 0);
        for (std::size_t i = 0; i < source_faces.size(); ++i)
            chain[pos[i]] = from.reps[static_cast<std::size_t>(d + 1)].at(i, static_cast<std::size_t>(j));
        auto coeff = to.quot[static_cast<std::size_t>(d + 1)].project(F, chain.data(), chain.size());
        for (int i = 0; i < m; ++i) map.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            coeff[static_cast<std::size_t>(i)];
    }
    return map;
}

sub_homology_ptr homology_cache::get_or_compute(const simplicial_complex& k, const prime_field& F) {
    std::vector<std::uint32_t> key;
    key.push_back(F.p());
    auto ck = k.content_key();
    key.insert(key.end(), ck.begin(), ck.end());
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    sub_homology_ptr value = reduced_homology(k, F);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(std::move(key), std::move(value));
    return it->second;
}

const fmatrix& homology_cache::induced(const sub_homology_ptr& from, const sub_homology_ptr& to,
                                       int d, const prime_field& F) {
    std::tuple<const sub_homology*, const sub_homology*, int> key{from.get(), to.get(), d};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = induced_.find(key);
        if (it != induced_.end()) return it->second;
    }
    fmatrix value = induced_map(*from, *to, d, F);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = induced_.emplace(std::move(key), std::move(value));
    return it->second;
}

}  // namespace bgph
