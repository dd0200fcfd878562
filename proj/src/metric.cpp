#include "bgph/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bgph {

pseudo_metric_space pseudo_metric_space::from_points(const std::vector<std::vector<double>>& coords) {
    if (coords.empty()) throw std::invalid_argument("need at least one point");
    const std::size_t n = coords.size();
    const std::size_t dim = coords[0].size();
    for (const auto& p : coords)
        if (p.size() != dim) throw std::invalid_argument("ragged coordinate input");
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                double t = coords[i][k] - coords[j][k];
                s += t * t;
            }
            d[i * n + j] = d[j * n + i] = std::sqrt(s);
        }
    return pseudo_metric_space(n, std::move(d));
}

pseudo_metric_space pseudo_metric_space::from_matrix(std::vector<double> dist, std::size_t n,
                                                     std::string* warning, double tol) {
    if (n == 0) throw std::invalid_argument("need at least one point");
    if (dist.size() != n * n) throw std::invalid_argument("distance matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(dist[i * n + i]) > tol) throw std::invalid_argument("nonzero diagonal in distance matrix");
        dist[i * n + i] = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i * n + j] < -tol || dist[j * n + i] < -tol)
                throw std::invalid_argument("negative distance");
            if (std::abs(dist[i * n + j] - dist[j * n + i]) > tol)
                throw std::invalid_argument("non-symmetric distance matrix");
            dist[j * n + i] = dist[i * n + j] = std::max(0.0, dist[i * n + j]);
        }
    }
    if (warning) {
        for (std::size_t i = 0; i < n && warning->empty(); ++i)
            for (std::size_t j = 0; j < n && warning->empty(); ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (dist[i * n + k] > dist[i * n + j] + dist[j * n + k] + tol) {
                        *warning = "triangle inequality violated at points (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
                        break;
                    }
    }
    return pseudo_metric_space(n, std::move(dist));
}

void pseudo_metric_space::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_) throw std::invalid_argument("label count mismatch");
    labels_ = std::move(labels);
}

pseudo_metric_space pseudo_metric_space::doubling(std::size_t x) const {
    if (x >= n_) throw std::out_of_range("doubling point index out of range");
    const std::size_t m = n_ + 1;
    std::vector<double> d(m * m, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d[i * m + j] = d_[i * n_ + j];
    for (std::size_t i = 0; i < n_; ++i) d[i * m + n_] = d[n_ * m + i] = d_[i * n_ + x];
    d[x * m + n_] = d[n_ * m + x] = 0.0;
    d[n_ * m + n_] = 0.0;
    pseudo_metric_space out(m, std::move(d));
    if (!labels_.empty()) {
        out.labels_ = labels_;
        out.labels_.push_back(labels_[x] + "'");
    }
    return out;
}

pseudo_metric_space pseudo_metric_space::restrict_to(const std::vector<std::size_t>& idx) const {
    if (idx.empty()) throw std::invalid_argument("cannot restrict to the empty set");
    const std::size_t m = idx.size();
    std::vector<double> d(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) d[i * m + j] = dist(idx[i], idx[j]);
    pseudo_metric_space out(m, std::move(d));
    if (!labels_.empty()) {
        out.labels_.reserve(m);
        for (std::size_t i : idx) out.labels_.push_back(labels_[i]);
    }
    return out;
}

double pseudo_metric_space::diameter() const {
    double m = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, dist(i, j));
    return m;
}

bool pseudo_metric_space::is_strong_outlier(std::size_t x, double tol) const {
    if (n_ < 2) throw std::invalid_argument("strong outlier needs at least two points");
    for (std::size_t y = 0; y < n_; ++y) {
        if (y == x) continue;
        double reach = 0;
        for (std::size_t z = 0; z < n_; ++z)
            if (z != x) reach = std::max(reach, dist(y, z));
        if (dist(x, y) + tol < reach) return false;
    }
    return true;
}

bool correspondence::covers(std::size_t nx, std::size_t ny) const {
    std::vector<bool> cx(nx, false), cy(ny, false);
    for (auto [x, y] : pairs) {
        if (x >= nx || y >= ny) return false;
        cx[x] = cy[y] = true;
    }
    return std::all_of(cx.begin(), cx.end(), [](bool b) { return b; }) &&
           std::all_of(cy.begin(), cy.end(), [](bool b) { return b; });
}

std::size_t correspondence::multiplicity_x(std::size_t x) const {
    std::size_t k = 0;
    for (auto [a, b] : pairs) k += (a == x);
    return k;
}

std::size_t correspondence::multiplicity_y(std::size_t y) const {
    std::size_t k = 0;
    for (auto [a, b] : pairs) k += (b == y);
    return k;
}

double distortion(const pseudo_metric_space& x, const pseudo_metric_space& y,
                  const correspondence& c) {
    double m = 0;
    for (std::size_t a = 0; a < c.pairs.size(); ++a)
        for (std::size_t b = a; b < c.pairs.size(); ++b) {
            auto [x1, y1] = c.pairs[a];
            auto [x2, y2] = c.pairs[b];
            m = std::max(m, std::abs(x.dist(x1, x2) - y.dist(y1, y2)));
        }
    return m;
}

namespace {

// An optimal correspondence can be taken minimal: dropping pairs never
// increases the max distortion while both-surjectivity is preserved by
// keeping one pair per x and one per y. So it suffices to enumerate unions
// graph(f) + graph(g) for maps f: X -> Y and g: Y -> X, depth-first with the
// running max distortion as bound.
struct gh_search {
    const pseudo_metric_space& X;
    const pseudo_metric_space& Y;
    std::size_t n, m;
    std::vector<std::size_t> f, g;
    std::vector<std::size_t> best_f, best_g;
    double best = std::numeric_limits<double>::infinity();

    gh_search(const pseudo_metric_space& x, const pseudo_metric_space& y)
        : X(x), Y(y), n(x.size()), m(y.size()), f(n), g(m) {}

    void run() { assign_f(0, 0.0); }

    void assign_f(std::size_t k, double cur) {
        if (cur >= best) return;
        if (k == n) {
            assign_g(0, cur);
            return;
        }
        for (std::size_t y = 0; y < m; ++y) {
            double c = cur;
            for (std::size_t i = 0; i < k && c < best; ++i)
                c = std::max(c, std::abs(X.dist(k, i) - Y.dist(y, f[i])));
            if (c < best) {
                f[k] = y;
                assign_f(k + 1, c);
            }
        }
    }

    void assign_g(std::size_t l, double cur) {
        if (cur >= best) return;
        if (l == m) {
            best = cur;
            best_f = f;
            best_g = g;
            return;
        }
        for (std::size_t x = 0; x < n; ++x) {
            double c = cur;
            for (std::size_t i = 0; i < n && c < best; ++i)
                c = std::max(c, std::abs(X.dist(x, i) - Y.dist(l, f[i])));
            for (std::size_t j = 0; j < l && c < best; ++j)
                c = std::max(c, std::abs(X.dist(x, g[j]) - Y.dist(l, j)));
            if (c < best) {
                g[l] = x;
                assign_g(l + 1, c);
            }
        }
    }
};

}  // namespace

gh_result gromov_hausdorff_full(const pseudo_metric_space& x, const pseudo_metric_space& y,
                                std::size_t pair_cap) {
    if (x.size() * y.size() > pair_cap)
        throw cap_exceeded("|X|*|Y| exceeds the exact enumeration bound " + std::to_string(pair_cap) +
                           "; use gromov_hausdorff_bijective or subsample the spaces");
    gh_search s(x, y);
    s.run();
    gh_result r;
    r.value = s.best / 2.0;
    for (std::size_t i = 0; i < x.size(); ++i) r.opt.pairs.emplace_back(i, s.best_f[i]);
    for (std::size_t j = 0; j < y.size(); ++j) {
        auto pr = std::make_pair(s.best_g[j], j);
        if (std::find(r.opt.pairs.begin(), r.opt.pairs.end(), pr) == r.opt.pairs.end())
            r.opt.pairs.push_back(pr);
    }
    return r;
}

double gromov_hausdorff(const pseudo_metric_space& x, const pseudo_metric_space& y,
                        std::size_t pair_cap) {
    return gromov_hausdorff_full(x, y, pair_cap).value;
}

namespace {

struct bijective_search {
    const pseudo_metric_space& X;
    const pseudo_metric_space& Y;
    std::size_t n;
    std::vector<std::size_t> theta, best_theta;
    std::vector<bool> used;
    double best = std::numeric_limits<double>::infinity();

    bijective_search(const pseudo_metric_space& x, const pseudo_metric_space& y)
        : X(x), Y(y), n(x.size()), theta(n), used(n, false) {}

    void go(std::size_t k, double cur) {
        if (cur >= best) return;
        if (k == n) {
            best = cur;
            best_theta = theta;
            return;
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y]) continue;
            double c = cur;
            for (std::size_t i = 0; i < k && c < best; ++i)
                c = std::max(c, std::abs(X.dist(k, i) - Y.dist(y, theta[i])));
            if (c < best) {
                used[y] = true;
                theta[k] = y;
                go(k + 1, c);
                used[y] = false;
            }
        }
    }
};

}  // namespace

gh_bijective_result gromov_hausdorff_bijective_full(const pseudo_metric_space& x,
                                                    const pseudo_metric_space& y,
                                                    std::size_t size_cap) {
    if (x.size() != y.size()) throw std::invalid_argument("d'_GH requires equal cardinality");
    if (x.size() > size_cap)
        throw cap_exceeded("|X| exceeds the bijection enumeration bound " + std::to_string(size_cap));
    bijective_search s(x, y);
    s.go(0, 0.0);
    return {s.best / 2.0, s.best_theta};
}

double gromov_hausdorff_bijective(const pseudo_metric_space& x, const pseudo_metric_space& y,
                                  std::size_t size_cap) {
    return gromov_hausdorff_bijective_full(x, y, size_cap).value;
}

equalized equalize_by_doubling(const pseudo_metric_space& x, const pseudo_metric_space& y,
                               const correspondence& c) {
    if (!c.covers(x.size(), y.size())) throw std::invalid_argument("not a correspondence");

    // Phase 1: every x with D_C(x) > 1 is doubled D_C(x)-1 times so that each
    // pair of C owns one copy; matches are consumed in ascending y order.
    pseudo_metric_space xh = x;
    std::vector<std::pair<std::size_t, std::size_t>> cprime;  // (index in xh, y)
    for (std::size_t xi = 0; xi < x.size(); ++xi) {
        std::vector<std::size_t> ys;
        for (auto [a, b] : c.pairs)
            if (a == xi) ys.push_back(b);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        cprime.emplace_back(xi, ys[0]);
        for (std::size_t t = 1; t < ys.size(); ++t) {
            std::size_t copy = xh.size();
            xh = xh.doubling(xi);
            cprime.emplace_back(copy, ys[t]);
        }
    }

    // Phase 2: same for the points of Y still covered more than once.
    pseudo_metric_space yh = y;
    std::vector<std::size_t> bij(xh.size(), 0);
    for (std::size_t yi = 0; yi < y.size(); ++yi) {
        std::vector<std::size_t> xs;
        for (auto [a, b] : cprime)
            if (b == yi) xs.push_back(a);
        std::sort(xs.begin(), xs.end());
        bij[xs[0]] = yi;
        for (std::size_t t = 1; t < xs.size(); ++t) {
            std::size_t copy = yh.size();
            yh = yh.doubling(yi);
            bij[xs[t]] = copy;
        }
    }
    if (xh.size() != yh.size()) throw internal_error("equalize_by_doubling cardinality mismatch");
    return {std::move(xh), std::move(yh), std::move(bij)};
}

}  // namespace bgph
