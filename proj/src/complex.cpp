#include "bgph/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bgph {

namespace {
constexpr std::size_t kMaxVertices = 24;

vertex_set bit(std::size_t i) { return vertex_set{1} << i; }
}  // namespace

simplicial_complex simplicial_complex::flag(std::size_t m, std::vector<vertex_set> adjacency) {
    if (m > kMaxVertices) throw cap_exceeded("complex exceeds the 24-vertex representation limit");
    if (adjacency.size() != m) throw std::invalid_argument("adjacency row count mismatch");
    simplicial_complex k;
    k.m_ = m;
    k.flag_ = true;
    k.active_ = m == 0 ? 0 : (m == 32 ? ~vertex_set{0} : (bit(m) - 1));
    k.adj_ = std::move(adjacency);
    for (std::size_t i = 0; i < m; ++i) {
        k.adj_[i] &= ~bit(i);
        for (std::size_t j = 0; j < m; ++j)
            if ((k.adj_[i] >> j) & 1u) {
                if (((k.adj_[j] >> i) & 1u) == 0) throw std::invalid_argument("adjacency not symmetric");
            }
    }
    return k;
}

simplicial_complex simplicial_complex::from_faces(std::size_t m,
                                                  const std::vector<vertex_set>& generators) {
    if (m > kMaxVertices) throw cap_exceeded("complex exceeds the 24-vertex representation limit");
    simplicial_complex k;
    k.m_ = m;
    k.flag_ = false;
    k.by_card_.assign(m + 1, {});
    // downward closure of the generators
    std::vector<bool> seen(std::size_t{1} << m, false);
    std::vector<vertex_set> stack = generators;
    stack.push_back(0);
    while (!stack.empty()) {
        vertex_set f = stack.back();
        stack.pop_back();
        if (f >= (vertex_set{1} << m)) throw std::invalid_argument("face outside vertex range");
        if (seen[f]) continue;
        seen[f] = true;
        k.by_card_[static_cast<std::size_t>(std::popcount(f))].push_back(f);
        for (std::size_t i = 0; i < m; ++i)
            if (f & bit(i)) stack.push_back(f & ~bit(i));
    }
    for (auto& level : k.by_card_) std::sort(level.begin(), level.end());
    k.active_ = 0;
    if (m >= 1)
        for (vertex_set v : k.by_card_[1]) k.active_ |= v;
    return k;
}

simplicial_complex simplicial_complex::empty_complex() { return from_faces(0, {}); }

simplicial_complex simplicial_complex::full_simplex(std::size_t m) {
    std::vector<vertex_set> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) adj[i] |= bit(j);
    return flag(m, std::move(adj));
}

bool simplicial_complex::contains(vertex_set face) const {
    if ((face & ~active_) != 0) return false;
    if (flag_) {
        for (vertex_set rest = face; rest;) {
            std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= ~bit(i);
            if ((face & ~bit(i) & ~adj_[i]) != 0) return false;
        }
        return true;
    }
    const auto& level = by_card_[static_cast<std::size_t>(std::popcount(face))];
    return std::binary_search(level.begin(), level.end(), face);
}

bool simplicial_complex::is_simplex() const { return contains(active_); }

std::vector<std::vector<vertex_set>> simplicial_complex::faces_up_to(std::size_t max_card) const {
    std::vector<std::vector<vertex_set>> out(max_card + 1);
    out[0].push_back(0);
    if (!flag_) {
        for (std::size_t c = 1; c <= max_card && c < by_card_.size(); ++c) out[c] = by_card_[c];
        return out;
    }
    if (max_card == 0 || active_ == 0) return out;
    // depth-first clique listing, extending by larger vertices only
    struct walker {
        const std::vector<vertex_set>& adj;
        std::size_t max_card;
        std::vector<std::vector<vertex_set>>& out;
        void grow(vertex_set clique, std::size_t card, vertex_set candidates) {
            out[card].push_back(clique);
            if (card == max_card) return;
            for (vertex_set rest = candidates; rest;) {
                std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
                rest &= ~bit_of(v);
                grow(clique | bit_of(v), card + 1,
                     candidates & adj[v] & ~(bit_of(v) | (bit_of(v) - 1)));
            }
        }
        static vertex_set bit_of(std::size_t v) { return vertex_set{1} << v; }
    } w{adj_, max_card, out};
    for (vertex_set rest = active_; rest;) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= ~bit(v);
        w.grow(bit(v), 1, active_ & adj_[v] & ~(bit(v) | (bit(v) - 1)));
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

std::vector<vertex_set> simplicial_complex::all_faces() const {
    auto levels = faces_up_to(m_);
    std::vector<vertex_set> out;
    for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
    std::sort(out.begin(), out.end());
    return out;
}

simplicial_complex simplicial_complex::restrict_to(vertex_set I) const {
    simplicial_complex k;
    k.m_ = m_;
    k.flag_ = flag_;
    k.active_ = active_ & I;
    if (flag_) {
        k.adj_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (k.active_ & bit(i)) k.adj_[i] = adj_[i] & k.active_;
    } else {
        k.by_card_.assign(by_card_.size(), {});
        for (std::size_t c = 0; c < by_card_.size(); ++c)
            for (vertex_set f : by_card_[c])
                if ((f & ~I) == 0) k.by_card_[c].push_back(f);
    }
    return k;
}

simplicial_complex simplicial_complex::full_subcomplex(vertex_set I) const {
    I &= active_;
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < m_; ++i)
        if (I & bit(i)) verts.push_back(i);
    const std::size_t mm = verts.size();
    if (flag_) {
        std::vector<vertex_set> adj(mm, 0);
        for (std::size_t a = 0; a < mm; ++a)
            for (std::size_t b = 0; b < mm; ++b)
                if (a != b && ((adj_[verts[a]] >> verts[b]) & 1u)) adj[a] |= bit(b);
        return flag(mm, std::move(adj));
    }
    std::vector<vertex_set> gens;
    for (const auto& level : by_card_)
        for (vertex_set f : level)
            if ((f & ~I) == 0) {
                vertex_set g = 0;
                for (std::size_t a = 0; a < mm; ++a)
                    if (f & bit(verts[a])) g |= bit(a);
                gens.push_back(g);
            }
    return from_faces(mm, gens);
}

simplicial_complex simplicial_complex::double_vertex(std::size_t i) const {
    if (i >= m_ || !contains(bit(i))) throw std::invalid_argument("doubling at a non-vertex");
    if (m_ + 1 > kMaxVertices) throw cap_exceeded("doubling exceeds the vertex limit");
    const std::size_t twin = m_;
    if (flag_) {
        std::vector<vertex_set> adj = adj_;
        adj.push_back(adj_[i] | bit(i));
        for (vertex_set rest = adj_[i]; rest;) {
            std::size_t w = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= ~bit(w);
            adj[w] |= bit(twin);
        }
        adj[i] |= bit(twin);
        return flag(m_ + 1, std::move(adj));
    }
    // faces' = K + {J + i' : J in K and J u {i} in K}
    std::vector<vertex_set> gens;
    for (const auto& level : by_card_)
        for (vertex_set f : level) {
            gens.push_back(f);
            if (contains(f | bit(i))) gens.push_back(f | bit(twin));
        }
    return from_faces(m_ + 1, gens);
}

simplicial_complex simplicial_complex::glue_simplex(vertex_set I, unsigned n) const {
    if (!contains(I)) throw std::invalid_argument("gluing face is not a face of the complex");
    const std::size_t shared = static_cast<std::size_t>(std::popcount(I));
    if (shared > n) throw std::invalid_argument("gluing face must be a proper face of the simplex");
    const std::size_t fresh = n + 1 - shared;
    if (m_ + fresh > kMaxVertices) throw cap_exceeded("glued complex exceeds the vertex limit");
    const std::size_t mm = m_ + fresh;
    vertex_set simplex = I;
    for (std::size_t t = 0; t < fresh; ++t) simplex |= bit(m_ + t);
    std::vector<vertex_set> gens = all_faces();
    gens.push_back(simplex);
    return from_faces(mm, gens);
}

std::vector<std::uint32_t> simplicial_complex::content_key() const {
    std::vector<std::uint32_t> key;
    key.push_back(flag_ ? 1u : 0u);
    key.push_back(static_cast<std::uint32_t>(m_));
    key.push_back(active_);
    if (flag_) {
        for (std::size_t i = 0; i < m_; ++i)
            key.push_back((active_ & bit(i)) ? (adj_[i] & active_) : 0);
    } else {
        for (const auto& level : by_card_) {
            key.push_back(static_cast<std::uint32_t>(level.size()));
            key.insert(key.end(), level.begin(), level.end());
        }
    }
    return key;
}

simplicial_complex vietoris_rips(const pseudo_metric_space& x, double t, double tol) {
    if (t < 0) throw std::invalid_argument("filtration parameter must be nonnegative");
    const std::size_t n = x.size();
    std::vector<vertex_set> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (x.dist(i, j) <= t + tol) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
    return simplicial_complex::flag(n, std::move(adj));
}

filtration_grid critical_values(const pseudo_metric_space& x, double tol) {
    std::vector<double> vals;
    vals.push_back(0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) vals.push_back(x.dist(i, j));
    std::sort(vals.begin(), vals.end());

    filtration_grid g;
    std::size_t k = 0;
    while (k < vals.size()) {
        std::size_t end = k;
        while (end + 1 < vals.size() && vals[end + 1] - vals[end] <= tol) ++end;
        g.values.push_back(k == 0 ? 0.0 : vals[end]);  // cluster containing 0 is pinned at 0
        k = end + 1;
    }
    return g;
}

}  // namespace bgph
