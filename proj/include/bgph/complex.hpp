#pragma once

#include <cstdint>
#include <vector>

#include "bgph/config.hpp"
#include "bgph/metric.hpp"

namespace bgph {

// Faces are bitmasks over at most 24 labeled vertices.
using vertex_set = std::uint32_t;

// Abstract simplicial complex in one of two representations:
//  - flag: an adjacency bit-matrix; faces are the cliques, enumerated on
//    demand up to a requested dimension (Vietoris-Rips complexes at large t
//    hold exponentially many faces, homology only needs low dimensions),
//  - explicit: the complete face list, used for glued complexes that are not
//    clique complexes.
// `active` marks the vertices that actually carry faces; restrictions keep
// the ambient labeling so chains of a subcomplex embed by identity. The
// empty face is always a face, and a complex may have zero active vertices
// (the carrier of the empty full subcomplex).
class simplicial_complex {
public:
    static simplicial_complex flag(std::size_t m, std::vector<vertex_set> adjacency);
    static simplicial_complex from_faces(std::size_t m, const std::vector<vertex_set>& generators);
    static simplicial_complex empty_complex();
    static simplicial_complex full_simplex(std::size_t m);

    std::size_t vertex_count() const { return m_; }
    vertex_set active() const { return active_; }
    bool is_flag() const { return flag_; }

    bool contains(vertex_set face) const;
    bool is_simplex() const;  // equal to the full simplex on its active vertices

    // faces_up_to(k)[c] lists the faces with c vertices, each sorted by mask;
    // index 0 is the empty face.
    std::vector<std::vector<vertex_set>> faces_up_to(std::size_t max_card) const;
    std::vector<vertex_set> all_faces() const;

    // Restriction K_I on the same labels (used by the Hochster machinery).
    simplicial_complex restrict_to(vertex_set I) const;
    // K_I re-indexed over the vertices of I in ascending order.
    simplicial_complex full_subcomplex(vertex_set I) const;

    simplicial_complex double_vertex(std::size_t i) const;

    // K u_I simplex with n+1 vertices; the n+1-|I| vertices outside I are
    // fresh labels appended after the current ones.
    simplicial_complex glue_simplex(vertex_set I, unsigned n) const;

    // Content key for homology caching: identical keys imply identical face
    // sets over identical labels.
    std::vector<std::uint32_t> content_key() const;

    const std::vector<vertex_set>& adjacency() const { return adj_; }

private:
    simplicial_complex() = default;

    std::size_t m_ = 0;
    bool flag_ = true;
    vertex_set active_ = 0;
    std::vector<vertex_set> adj_;                    // flag mode
    std::vector<std::vector<vertex_set>> by_card_;   // explicit mode, by vertex count
};

// Edge rule d(x,y) <= t, applied with the global comparison tolerance.
simplicial_complex vietoris_rips(const pseudo_metric_space& x, double t,
                                 double tol = kDefaultTolerance);

struct filtration_grid {
    std::vector<double> values;  // starts at 0, strictly increasing, gaps > tol

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t k) const { return values[k]; }
};

// {0} united with the pairwise distances, deduplicated at the tolerance.
// Within a cluster of nearby values the largest one represents it, so the
// complex is constant on [values[k], values[k+1]).
filtration_grid critical_values(const pseudo_metric_space& x, double tol = kDefaultTolerance);

}  // namespace bgph
