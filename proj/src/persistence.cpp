#include "bgph/persistence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bgph/config.hpp"

namespace bgph {

void barcode::sort_canonical() {
    std::sort(bars.begin(), bars.end(), [](const bar& a, const bar& b) {
        if (a.grade != b.grade) return a.grade < b.grade;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
}

int barcode::count_at(bigrade g, double t) const {
    int n = 0;
    for (const auto& b : bars)
        if (b.grade == g && b.birth <= t && t < b.death) ++n;
    return n;
}

bool barcodes_match(const barcode& a, const barcode& b, double tol) {
    if (a.kind != b.kind || a.bars.size() != b.bars.size()) return false;
    barcode sa = a, sb = b;
    sa.sort_canonical();
    sb.sort_canonical();
    for (std::size_t k = 0; k < sa.bars.size(); ++k) {
        const bar& x = sa.bars[k];
        const bar& y = sb.bars[k];
        if (x.grade != y.grade) return false;
        if (std::abs(x.birth - y.birth) > tol) return false;
        if (x.infinite() != y.infinite()) return false;
        if (!x.infinite() && std::abs(x.death - y.death) > tol) return false;
    }
    return true;
}

std::vector<bar> tower_barcode(const prime_field& F, const tower& t, const filtration_grid& grid) {
    const std::size_t n = t.dims.size();
    if (n != grid.size()) throw std::invalid_argument("tower does not match the grid");
    if (t.steps.size() + 1 != n) throw std::invalid_argument("tower step count mismatch");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (t.steps[k].rows() != static_cast<std::size_t>(t.dims[k + 1]) ||
            t.steps[k].cols() != static_cast<std::size_t>(t.dims[k]))
            throw std::invalid_argument("tower step shape mismatch");

    // r[s][t] = rank of the composite map index s -> index t
    std::vector<std::vector<std::size_t>> r(n, std::vector<std::size_t>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
        r[s][s] = static_cast<std::size_t>(t.dims[s]);
        fmatrix comp = fmatrix::identity(static_cast<std::size_t>(t.dims[s]));
        for (std::size_t u = s + 1; u < n; ++u) {
            comp = mat_mul(F, t.steps[u - 1], comp);
            r[s][u] = rank(F, comp);
        }
    }
    auto rk = [&](std::ptrdiff_t s, std::size_t u) -> std::size_t {
        return s < 0 ? 0 : r[static_cast<std::size_t>(s)][u];
    };

    std::vector<bar> bars;
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t d = b + 1; d < n; ++d) {
            std::ptrdiff_t mult = static_cast<std::ptrdiff_t>(rk(static_cast<std::ptrdiff_t>(b), d - 1)) -
                                  static_cast<std::ptrdiff_t>(rk(static_cast<std::ptrdiff_t>(b), d)) -
                                  static_cast<std::ptrdiff_t>(rk(static_cast<std::ptrdiff_t>(b) - 1, d - 1)) +
                                  static_cast<std::ptrdiff_t>(rk(static_cast<std::ptrdiff_t>(b) - 1, d));
            if (mult < 0) throw internal_error("negative interval multiplicity");
            for (std::ptrdiff_t c = 0; c < mult; ++c)
                bars.push_back({t.grade, grid[b], grid[d]});
        }
        std::ptrdiff_t inf_mult = static_cast<std::ptrdiff_t>(rk(static_cast<std::ptrdiff_t>(b), n - 1)) -
                                  static_cast<std::ptrdiff_t>(rk(static_cast<std::ptrdiff_t>(b) - 1, n - 1));
        if (inf_mult < 0) throw internal_error("negative interval multiplicity");
        for (std::ptrdiff_t c = 0; c < inf_mult; ++c)
            bars.push_back({t.grade, grid[b], kInfiniteDeath});
    }
    return bars;
}

barcode persistent_homology(const pseudo_metric_space& x, const prime_field& F,
                            const pipeline_options& opt) {
    if (x.size() > opt.vertex_cap) throw cap_exceeded("space exceeds the vertex cap");
    barcode bc;
    bc.kind = grading_kind::degree;
    bc.grid = critical_values(x, opt.tol);
    const std::size_t n = bc.grid.size();

    homology_cache cache;
    std::vector<sub_homology_ptr> stages(n);
    parallel_for(n, opt.threads, [&](std::size_t k) {
        stages[k] = cache.get_or_compute(vietoris_rips(x, bc.grid[k], opt.tol), F);
    });

    const int top = std::max(0, static_cast<int>(x.size()) - 2);
    for (int d = 0; d <= top; ++d) {
        tower t;
        t.grade = {d, 0};
        t.dims.resize(n);
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
            t.dims[k] = stages[k]->dim(d);
            any = any || t.dims[k] > 0;
        }
        if (!any) continue;
        for (std::size_t k = 0; k + 1 < n; ++k)
            t.steps.push_back(induced_map(*stages[k], *stages[k + 1], d, F));
        auto bars = tower_barcode(F, t, bc.grid);
        for (const auto& b : bars)
            if (b.infinite()) throw internal_error("reduced persistent homology produced an infinite bar");
        bc.bars.insert(bc.bars.end(), bars.begin(), bars.end());
    }
    bc.sort_canonical();
    return bc;
}

barcode phz(const pseudo_metric_space& x, const prime_field& F, const pipeline_options& opt) {
    if (x.size() > opt.vertex_cap) throw cap_exceeded("space exceeds the vertex cap");
    const std::size_t n = x.size();
    const std::size_t subsets = std::size_t{1} << n;

    barcode bc;
    bc.kind = grading_kind::bigraded;
    bc.grid = critical_values(x, opt.tol);

    std::vector<std::vector<bar>> per_subset(subsets);
    parallel_for(subsets - 1, opt.threads, [&](std::size_t idx) {
        const std::size_t mask = idx + 1;
        std::vector<std::size_t> members;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1u) members.push_back(v);
        const int j = static_cast<int>(members.size());

        pipeline_options sub_opt = opt;
        sub_opt.threads = 1;
        barcode sub = persistent_homology(x.restrict_to(members), F, sub_opt);
        for (const auto& b : sub.bars) {
            int p = b.grade.i;
            per_subset[mask].push_back({{j - p - 1, j}, b.birth, b.death});
        }
    });

    bc.bars.push_back({{0, 0}, 0.0, kInfiniteDeath});  // the empty subset
    for (std::size_t mask = 1; mask < subsets; ++mask)
        bc.bars.insert(bc.bars.end(), per_subset[mask].begin(), per_subset[mask].end());
    bc.sort_canonical();
    return bc;
}

barcode phhz(const pseudo_metric_space& x, const prime_field& F, const pipeline_options& opt) {
    if (x.size() > opt.vertex_cap) throw cap_exceeded("space exceeds the vertex cap");
    barcode bc;
    bc.kind = grading_kind::bigraded;
    bc.grid = critical_values(x, opt.tol);
    const std::size_t n = bc.grid.size();

    homology_cache cache;
    std::vector<double_package> stages;
    stages.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        stages.push_back(
            compute_double_package(vietoris_rips(x, bc.grid[k], opt.tol), F, cache, opt.threads));

    std::vector<std::map<bigrade, fmatrix>> step_maps;
    step_maps.reserve(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        step_maps.push_back(induced_map_hh(stages[k], stages[k + 1]));

    std::map<bigrade, bool> grades;
    for (const auto& s : stages)
        for (const auto& [g, q] : s.HH.groups)
            if (q.dim() > 0) grades[g] = true;

    for (const auto& [g, unused] : grades) {
        tower t;
        t.grade = g;
        t.dims.resize(n);
        for (std::size_t k = 0; k < n; ++k) t.dims[k] = stages[k].HH.dim(g);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            auto it = step_maps[k].find(g);
            if (it != step_maps[k].end())
                t.steps.push_back(it->second);
            else
                t.steps.push_back(fmatrix(static_cast<std::size_t>(t.dims[k + 1]),
                                          static_cast<std::size_t>(t.dims[k])));
        }
        auto bars = tower_barcode(F, t, bc.grid);
        for (const auto& b : bars)
            if (b.infinite() && !(g == bigrade{0, 0}))
                throw internal_error("infinite bar away from bidegree (0,0)");
        bc.bars.insert(bc.bars.end(), bars.begin(), bars.end());
    }
    bc.sort_canonical();
    return bc;
}

}  // namespace bgph
