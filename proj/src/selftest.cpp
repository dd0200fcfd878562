#include "bgph/selftest.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "bgph/distances.hpp"
#include "bgph/persistence.hpp"

namespace bgph {

namespace {

pseudo_metric_space random_cloud(std::mt19937_64& rng, std::size_t n, double box) {
    std::uniform_real_distribution<double> c(0.0, box);
    std::vector<std::vector<double>> pts(n);
    for (auto& p : pts) p = {c(rng), c(rng)};
    return pseudo_metric_space::from_points(pts);
}

pseudo_metric_space perturb(std::mt19937_64& rng, const pseudo_metric_space& x, double eps,
                            double* max_shift) {
    // shift every distance by at most 2*eps via fresh coordinates is not
    // possible from a bare matrix, so perturb the matrix entries directly
    // within [-eps, eps] while keeping symmetry and the triangle inequality
    // slack; rejection keeps it a pseudo-metric.
    std::uniform_real_distribution<double> d(-eps, eps);
    const std::size_t n = x.size();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> m(n * n, 0.0);
        double shift = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double delta = d(rng);
                double v = std::max(0.0, x.dist(i, j) + delta);
                shift = std::max(shift, std::abs(v - x.dist(i, j)));
                m[i * n + j] = m[j * n + i] = v;
            }
        bool triangle = true;
        for (std::size_t i = 0; i < n && triangle; ++i)
            for (std::size_t j = 0; j < n && triangle; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (m[i * n + k] > m[i * n + j] + m[j * n + k] + 1e-12) {
                        triangle = false;
                        break;
                    }
        if (triangle) {
            if (max_shift) *max_shift = shift;
            return pseudo_metric_space::from_matrix(std::move(m), n);
        }
    }
    if (max_shift) *max_shift = 0.0;
    return x;
}

simplicial_complex random_flag(std::mt19937_64& rng, std::size_t m, double edge_prob) {
    std::bernoulli_distribution e(edge_prob);
    std::vector<vertex_set> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (e(rng)) {
                adj[i] |= vertex_set{1} << j;
                adj[j] |= vertex_set{1} << i;
            }
    return simplicial_complex::flag(m, std::move(adj));
}

}  // namespace

std::string property_report::to_string() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    out += failures == 0 ? "all properties PASS\n" : "FAILURES: " + std::to_string(failures) + "\n";
    for (auto s : failing_seeds) out += "  reproduce with seed " + std::to_string(s) + "\n";
    return out;
}

property_report run_property_suite(const random_model& model, int trials, const prime_field& F) {
    property_report rep;
    rep.trials = trials;
    int surgery_ok = 0, nilpotent_ok = 0, doubling_ok = 0, stability_ok = 0, counts_ok = 0;

    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t seed = model.seed + static_cast<std::uint64_t>(trial);
        std::mt19937_64 rng(seed);
        bool trial_ok = true;

        // surgery: gluing a simplex leaves k + k_{(-1,4)} unless a simplex
        {
            auto base = random_flag(rng, 1 + rng() % 4, 0.6);
            auto faces = base.all_faces();
            vertex_set I = faces[rng() % faces.size()];
            unsigned n = static_cast<unsigned>(std::popcount(I)) + rng() % 2;
            auto glued = base.glue_simplex(I, n);
            auto dims = double_homology_dims(glued, F);
            std::map<bigrade, int> expect;
            if (glued.is_simplex())
                expect = {{{0, 0}, 1}};
            else
                expect = {{{0, 0}, 1}, {{1, 2}, 1}};
            if (dims == expect)
                ++surgery_ok;
            else
                trial_ok = false;
        }

        // nilpotency of the second differential (checked inside the builder)
        {
            homology_cache cache;
            auto k = random_flag(rng, 3 + rng() % 4, 0.5);
            try {
                (void)build_partial_prime(bigraded_homology(k, F, cache));
                ++nilpotent_ok;
            } catch (const std::exception&) {
                trial_ok = false;
            }
        }

        // pipelines with exact GH stay feasible only on tiny spaces
        const std::size_t lo = std::min<std::size_t>(model.min_points, 5);
        const std::size_t hi = std::max(lo, std::min<std::size_t>(model.max_points, 5));

        // doubling invariance of HH dims and of the double-homology barcode
        {
            std::size_t n = lo + rng() % (hi - lo + 1);
            auto x = random_cloud(rng, n, model.box);
            std::size_t pt = rng() % n;
            auto xd = x.doubling(pt);
            bool same = barcodes_match(phhz(x, F), phhz(xd, F));
            auto grid = critical_values(x);
            double t = grid[rng() % grid.size()];
            auto k = vietoris_rips(x, t);
            same = same && double_homology_dims(k, F) ==
                               double_homology_dims(k.double_vertex(pt), F);
            if (same)
                ++doubling_ok;
            else
                trial_ok = false;
        }

        // stability of both bigraded pipelines under perturbation
        {
            std::size_t n = lo + rng() % (hi - lo + 1);
            auto x = random_cloud(rng, n, model.box);
            double eps = model.perturbation * std::uniform_real_distribution<double>(0, 1)(rng);
            auto y = perturb(rng, x, eps, nullptr);

            double lhs_hh = bottleneck(phhz(x, F), phhz(y, F));
            double rhs_hh = 2.0 * gromov_hausdorff(x, y);
            double lhs_z = bottleneck(phz(x, F), phz(y, F));
            double rhs_z = 2.0 * gromov_hausdorff_bijective(x, y);
            if (lhs_hh <= rhs_hh + 1e-9 && lhs_z <= rhs_z + 1e-9)
                ++stability_ok;
            else
                trial_ok = false;
        }

        // bar count at each grid value equals the bigraded Betti number
        {
            auto x = random_cloud(rng, model.min_points, model.box);
            auto bz = phz(x, F);
            auto grid = critical_values(x);
            bool ok = true;
            for (std::size_t k = 0; k < grid.size() && ok; ++k) {
                auto tbl = betti_table(vietoris_rips(x, grid[k]), F);
                std::map<bigrade, int> counts;
                for (const auto& b : bz.bars)
                    if (b.birth <= grid[k] && grid[k] < b.death) counts[b.grade] += 1;
                ok = counts == tbl;
            }
            if (ok)
                ++counts_ok;
            else
                trial_ok = false;
        }

        if (!trial_ok) {
            ++rep.failures;
            rep.failing_seeds.push_back(seed);
        }
    }

    auto line = [&](const char* name, int ok) {
        rep.lines.push_back(std::string(name) + ": " + std::to_string(ok) + "/" +
                            std::to_string(trials) + (ok == trials ? " PASS" : " FAIL"));
    };
    line("surgery", surgery_ok);
    line("nilpotency", nilpotent_ok);
    line("doubling-invariance", doubling_ok);
    line("stability", stability_ok);
    line("bar-count-consistency", counts_ok);
    return rep;
}

}  // namespace bgph
