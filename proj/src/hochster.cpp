#include "bgph/hochster.hpp"

#include <algorithm>
#include <bit>

#include "bgph/config.hpp"

namespace bgph {

hochster_group bigraded_homology(const simplicial_complex& k, const prime_field& F,
                                 homology_cache& cache, unsigned threads) {
    const std::size_t m = k.vertex_count();
    const std::size_t subsets = std::size_t{1} << m;

    hochster_group g{F, k, {}, {}, &cache};
    g.sub.resize(subsets);
    parallel_for(subsets, threads, [&](std::size_t mask) {
        g.sub[mask] = cache.get_or_compute(k.restrict_to(static_cast<vertex_set>(mask)), F);
    });

    // increasing cardinality, ascending mask: the offsets this produces are
    // the coordinate convention every consumer shares
    for (std::size_t card = 0; card <= m; ++card) {
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != card) continue;
            const sub_homology& sh = *g.sub[mask];
            const int j = static_cast<int>(card);
            for (int p = -1; p <= sh.max_degree(); ++p) {
                int d = sh.dim(p);
                if (d == 0) continue;
                bigrade bg{j - p - 1, j};
                auto& list = g.grades[bg];
                int offset = 0;
                for (const auto& s : list) offset += s.dim;
                list.push_back({static_cast<vertex_set>(mask), p, d, offset});
            }
        }
    }
    return g;
}

std::map<bigrade, int> betti_table(const hochster_group& g) {
    const int m = static_cast<int>(g.K.vertex_count());
    std::map<bigrade, int> out;
    for (const auto& [bg, list] : g.grades) {
        int d = 0;
        for (const auto& s : list) d += s.dim;
        if (d == 0) continue;
        const bool origin = bg.i == 0 && bg.j == 0;
        const bool inside = bg.i >= 1 && bg.j >= bg.i + 1 && bg.j <= m;
        if (!origin && !inside) throw internal_error("bigraded Betti number outside the trapezoid");
        out[bg] = d;
    }
    return out;
}

std::map<bigrade, int> betti_table(const simplicial_complex& k, const prime_field& F) {
    homology_cache cache;
    return betti_table(bigraded_homology(k, F, cache));
}

std::map<bigrade, fmatrix> induced_bigraded_map(const hochster_group& from,
                                                const hochster_group& to) {
    if (from.K.vertex_count() != to.K.vertex_count())
        throw std::invalid_argument("induced bigraded map needs a common vertex set");
    if (!(from.F == to.F)) throw std::invalid_argument("field mismatch");

    std::map<bigrade, fmatrix> out;
    auto keys = [&](const hochster_group& g) {
        for (const auto& [bg, list] : g.grades)
            if (out.find(bg) == out.end())
                out.emplace(bg, fmatrix(static_cast<std::size_t>(to.dim(bg)),
                                        static_cast<std::size_t>(from.dim(bg))));
    };
    keys(from);
    keys(to);

    homology_cache* memo = (from.cache && from.cache == to.cache) ? from.cache : nullptr;
    for (auto& [bg, mat] : out) {
        auto it = from.grades.find(bg);
        if (it == from.grades.end()) continue;
        for (const auto& s : it->second) {
            const hochster_summand* t = to.find_summand(bg, s.mask);
            if (!t || t->dim == 0) continue;
            fmatrix block = memo ? memo->induced(from.sub[s.mask], to.sub[s.mask], s.p, from.F)
                                 : induced_map(*from.sub[s.mask], *to.sub[s.mask], s.p, from.F);
            for (int r = 0; r < t->dim; ++r)
                for (int c = 0; c < s.dim; ++c)
                    mat.at(static_cast<std::size_t>(t->offset + r),
                           static_cast<std::size_t>(s.offset + c)) =
                        block.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return out;
}

}  // namespace bgph
