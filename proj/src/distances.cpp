#include "bgph/distances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bgph {

double pi_distance(const extended_interval& a, const extended_interval& b) {
    if (a.is_empty && b.is_empty) return 0.0;
    if (a.is_empty || b.is_empty) {
        const extended_interval& x = a.is_empty ? b : a;
        if (x.infinite()) return kInfiniteDeath;
        return (x.death - x.birth) / 2.0;
    }
    if (a.infinite() && b.infinite()) return std::abs(a.birth - b.birth);
    if (a.infinite() || b.infinite()) return kInfiniteDeath;
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double interval_interleaving(const extended_interval& a, const extended_interval& b) {
    if (a.is_empty && b.is_empty) return 0.0;
    if (a.is_empty || b.is_empty) {
        const extended_interval& x = a.is_empty ? b : a;
        if (x.infinite()) return kInfiniteDeath;
        return (x.death - x.birth) / 2.0;
    }
    if (a.infinite() && b.infinite()) return std::abs(a.birth - b.birth);
    if (a.infinite() || b.infinite()) return kInfiniteDeath;
    double far = std::max((a.death - a.birth) / 2.0, (b.death - b.birth) / 2.0);
    double close = std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
    return std::min(far, close);
}

namespace {

bool kuhn_augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
                  std::vector<std::ptrdiff_t>& match_r, std::vector<bool>& visited) {
    for (std::size_t v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (match_r[v] < 0 ||
            kuhn_augment(static_cast<std::size_t>(match_r[v]), adj, match_r, visited)) {
            match_r[v] = static_cast<std::ptrdiff_t>(u);
            return true;
        }
    }
    return false;
}

bool perfect_matching_at(const std::vector<std::vector<double>>& cost, double threshold, double tol) {
    const std::size_t k = cost.size();
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (cost[i][j] <= threshold + tol) adj[i].push_back(j);
    std::vector<std::ptrdiff_t> match_r(k, -1);
    for (std::size_t u = 0; u < k; ++u) {
        std::vector<bool> visited(k, false);
        if (!kuhn_augment(u, adj, match_r, visited)) return false;
    }
    return true;
}

// min over bijections of the max cost, for one grade group
double group_bottleneck(const std::vector<extended_interval>& a,
                        const std::vector<extended_interval>& b, const bottleneck_options& opt) {
    std::size_t inf_a = 0, inf_b = 0;
    for (const auto& x : a) inf_a += x.infinite();
    for (const auto& x : b) inf_b += x.infinite();
    if (inf_a != inf_b) return kInfiniteDeath;

    std::vector<extended_interval> left = a, right = b;
    left.insert(left.end(), b.size(), extended_interval::empty());
    right.insert(right.end(), a.size(), extended_interval::empty());
    const std::size_t k = left.size();
    if (k == 0) return 0.0;

    std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));
    std::vector<double> candidates{0.0};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double c = opt.interleaving_cost ? interval_interleaving(left[i], right[j])
                                             : pi_distance(left[i], right[j]);
            cost[i][j] = c;
            if (c != kInfiniteDeath) candidates.push_back(c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;
    if (!perfect_matching_at(cost, candidates[hi], opt.tol)) return kInfiniteDeath;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (perfect_matching_at(cost, candidates[mid], opt.tol))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

}  // namespace

double bottleneck(const barcode& a, const barcode& b, const bottleneck_options& opt) {
    if (a.kind != b.kind) throw std::invalid_argument("cannot match barcodes of different gradings");

    std::map<bigrade, std::pair<std::vector<extended_interval>, std::vector<extended_interval>>> groups;
    auto push = [&](const barcode& src, bool to_left) {
        for (const auto& br : src.bars) {
            bigrade key = opt.grade_matched ? br.grade : bigrade{0, 0};
            auto& g = groups[key];
            (to_left ? g.first : g.second).push_back(extended_interval::make(br.birth, br.death));
        }
    };
    push(a, true);
    push(b, false);

    double worst = 0.0;
    for (const auto& [key, g] : groups)
        worst = std::max(worst, group_bottleneck(g.first, g.second, opt));
    return worst;
}

double interleaving_via_isometry(const barcode& a, const barcode& b, const bottleneck_options& opt) {
    return bottleneck(a, b, opt);
}

}  // namespace bgph
