#include "bgph/double_homology.hpp"

#include <bit>
#include <stdexcept>

#include "bgph/config.hpp"

namespace bgph {

int sign_epsilon(std::size_t j, vertex_set I) {
    if ((I >> j) & 1u) throw std::invalid_argument("sign_epsilon requires j outside I");
    vertex_set below = I & ((vertex_set{1} << j) - 1);
    return std::popcount(below) % 2 == 0 ? 1 : -1;
}

double_chain_complex build_partial_prime(const hochster_group& g) {
    const prime_field& F = g.F;
    const std::size_t m = g.K.vertex_count();

    double_chain_complex dcc;
    for (const auto& [src, list] : g.grades) {
        bigrade dst{src.i + 1, src.j + 1};
        int rows = g.dim(dst), cols = g.dim(src);
        if (rows == 0 || cols == 0) continue;
        fmatrix mat(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        for (const auto& s : list) {
            const std::uint16_t global = F.from_int(s.p % 2 == 0 ? -1 : 1);  // (-1)^{p+1}
            for (std::size_t v = 0; v < m; ++v) {
                if ((s.mask >> v) & 1u) continue;
                vertex_set tm = s.mask | (vertex_set{1} << v);
                const hochster_summand* t = g.find_summand(dst, tm);
                if (!t || t->dim == 0) continue;
                std::uint16_t sign = F.mul(global, F.from_int(sign_epsilon(v, s.mask)));
                fmatrix block = g.cache ? g.cache->induced(g.sub[s.mask], g.sub[tm], s.p, F)
                                        : induced_map(*g.sub[s.mask], *g.sub[tm], s.p, F);
                for (int r = 0; r < t->dim; ++r)
                    for (int c = 0; c < s.dim; ++c) {
                        std::uint16_t val = F.mul(sign, block.at(static_cast<std::size_t>(r),
                                                                 static_cast<std::size_t>(c)));
                        mat.at(static_cast<std::size_t>(t->offset + r),
                               static_cast<std::size_t>(s.offset + c)) = val;
                    }
            }
        }
        dcc.dprime.emplace(src, std::move(mat));
    }

    for (const auto& [src, mat] : dcc.dprime) {
        const fmatrix* next = dcc.out_of({src.i + 1, src.j + 1});
        if (next && !is_zero(mat_mul(F, *next, mat)))
            throw internal_error("second differential does not square to zero");
    }
    return dcc;
}

double_homology_t double_homology(const hochster_group& g, const double_chain_complex& d) {
    const prime_field& F = g.F;
    double_homology_t hh;
    for (const auto& [bg, list] : g.grades) {
        int dim = g.dim(bg);
        if (dim == 0) continue;
        const fmatrix* out = d.out_of(bg);
        fmatrix outgoing = out ? *out : fmatrix(0, static_cast<std::size_t>(dim));
        const fmatrix* in = d.out_of({bg.i - 1, bg.j - 1});
        fmatrix incoming = in ? *in : fmatrix(static_cast<std::size_t>(dim), 0);
        hh.groups.emplace(bg, quotient_basis(F, kernel_basis(F, outgoing), incoming));
    }
    return hh;
}

double_package compute_double_package(const simplicial_complex& k, const prime_field& F,
                                      homology_cache& cache, unsigned threads) {
    double_package p{bigraded_homology(k, F, cache, threads), {}, {}};
    p.D = build_partial_prime(p.G);
    p.HH = double_homology(p.G, p.D);
    return p;
}

std::map<bigrade, int> double_homology_dims(const simplicial_complex& k, const prime_field& F) {
    homology_cache cache;
    return compute_double_package(k, F, cache).HH.dims();
}

namespace {

bool verify_this_bigrade(bigrade g) {
#ifndef NDEBUG
    (void)g;
    return true;
#else
    return g.j <= 4;
#endif
}

}  // namespace

std::map<bigrade, fmatrix> induced_map_hh(const double_package& from, const double_package& to) {
    const prime_field& F = from.G.F;
    std::map<bigrade, fmatrix> blocks = induced_bigraded_map(from.G, to.G);

    // chain-map commutation with both second differentials
    for (const auto& [g, f] : blocks) {
        if (!verify_this_bigrade(g)) continue;
        bigrade t{g.i + 1, g.j + 1};
        const fmatrix* dk = from.D.out_of(g);
        const fmatrix* dl = to.D.out_of(g);
        auto bt = blocks.find(t);
        fmatrix lhs = (bt != blocks.end() && dk) ? mat_mul(F, bt->second, *dk)
                                                 : fmatrix(static_cast<std::size_t>(to.G.dim(t)),
                                                           static_cast<std::size_t>(from.G.dim(g)));
        fmatrix rhs = dl ? mat_mul(F, *dl, f)
                         : fmatrix(static_cast<std::size_t>(to.G.dim(t)),
                                   static_cast<std::size_t>(from.G.dim(g)));
        if (!(lhs == rhs)) throw internal_error("bigraded map does not commute with d'");
    }

    std::map<bigrade, fmatrix> out;
    std::map<bigrade, bool> keys;
    for (const auto& [g, q] : from.HH.groups) keys[g] = true;
    for (const auto& [g, q] : to.HH.groups) keys[g] = true;
    for (const auto& [g, unused] : keys) {
        const int cols = from.HH.dim(g), rows = to.HH.dim(g);
        fmatrix mat(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        if (rows > 0 && cols > 0) {
            const auto& qk = from.HH.groups.at(g);
            const auto& ql = to.HH.groups.at(g);
            const fmatrix& f = blocks.at(g);
            for (int c = 0; c < cols; ++c) {
                auto pushed = mat_vec(F, f, qk.reps.column(static_cast<std::size_t>(c)));
                auto coeff = ql.project(F, pushed.data(), pushed.size());
                for (int r = 0; r < rows; ++r)
                    mat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        coeff[static_cast<std::size_t>(r)];
            }
        }
        out.emplace(g, std::move(mat));
    }
    return out;
}

}  // namespace bgph
