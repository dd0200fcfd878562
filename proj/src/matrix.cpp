#include "bgph/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bgph/config.hpp"
#include "bgph/kernels.hpp"

namespace bgph {

fmatrix fmatrix::from_columns(std::size_t rows, const std::vector<std::vector<std::uint16_t>>& cols) {
    fmatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<std::uint16_t> fmatrix::column(std::size_t j) const {
    std::vector<std::uint16_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

fmatrix fmatrix::transposed() const {
    fmatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

fmatrix hcat(const fmatrix& a, const fmatrix& b) {
    std::size_t rows = std::max(a.rows(), b.rows());
    if (a.cols() > 0 && b.cols() > 0 && a.rows() != b.rows())
        throw std::invalid_argument("hcat row mismatch");
    fmatrix m(rows, a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    return m;
}

fmatrix mat_mul(const prime_field& F, const fmatrix& a, const fmatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul shape mismatch");
    fmatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint16_t f = a.at(i, k);
            if (f) kernels::active().axpy(c.row(i), b.row(k), f, b.cols(), F.p());
        }
    return c;
}

std::vector<std::uint16_t> mat_vec(const prime_field& F, const fmatrix& a,
                                   const std::vector<std::uint16_t>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec shape mismatch");
    std::vector<std::uint16_t> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += std::uint32_t(a.at(i, j)) * v[j] % F.p();
        out[i] = static_cast<std::uint16_t>(acc % F.p());
    }
    return out;
}

bool is_zero(const fmatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j)) return false;
    return true;
}

echelon echelonize(const prime_field& F, const fmatrix& m) {
    const auto& k = kernels::active();
    const std::size_t rows = m.rows(), cols = m.cols();
    fmatrix aug = hcat(m, fmatrix::identity(rows));
    const std::size_t w = aug.cols();

    echelon e;
    e.nrows = rows;
    e.ncols = cols;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r)
            if (aug.at(r, c)) { sel = r; break; }
        if (sel == rows) continue;
        if (sel != pr)
            std::swap_ranges(aug.row(sel), aug.row(sel) + w, aug.row(pr));
        std::uint16_t piv = aug.at(pr, c);
        if (piv != 1) k.scale(aug.row(pr), F.inv(piv), w, F.p());
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            std::uint16_t f = aug.at(r, c);
            if (f) k.axpy(aug.row(r), aug.row(pr), F.neg(f), w, F.p());
        }
        e.pivot_cols.push_back(c);
        ++pr;
    }

    e.rref = fmatrix(rows, cols);
    e.transform = fmatrix(rows, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) e.rref.at(i, j) = aug.at(i, j);
        for (std::size_t j = 0; j < rows; ++j) e.transform.at(i, j) = aug.at(i, cols + j);
    }
    return e;
}

std::optional<std::vector<std::uint16_t>> echelon_solve(const prime_field& F, const echelon& e,
                                                        const std::uint16_t* v, std::size_t n) {
    if (n != e.nrows) throw std::invalid_argument("echelon_solve dimension mismatch");
    std::vector<std::uint16_t> w(e.nrows, 0);
    for (std::size_t i = 0; i < e.nrows; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < e.nrows; ++j) acc += std::uint32_t(e.transform.at(i, j)) * v[j] % F.p();
        w[i] = static_cast<std::uint16_t>(acc % F.p());
    }
    for (std::size_t r = e.rank(); r < e.nrows; ++r)
        if (w[r]) return std::nullopt;
    std::vector<std::uint16_t> x(e.ncols, 0);
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_cols[r]] = w[r];
    return x;
}

std::size_t rank(const prime_field& F, fmatrix a) {
    const auto& k = kernels::active();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r)
            if (a.at(r, c)) { sel = r; break; }
        if (sel == rows) continue;
        if (sel != pr) std::swap_ranges(a.row(sel), a.row(sel) + cols, a.row(pr));
        std::uint16_t inv = F.inv(a.at(pr, c));
        for (std::size_t r = pr + 1; r < rows; ++r) {
            std::uint16_t f = a.at(r, c);
            if (f) k.axpy(a.row(r), a.row(pr), F.neg(F.mul(f, inv)), cols, F.p());
        }
        ++pr;
    }
    return pr;
}

fmatrix kernel_basis(const prime_field& F, const fmatrix& a) {
    echelon e = echelonize(F, a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<std::uint16_t>> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint16_t> x(a.cols(), 0);
        x[c] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_cols[r]] = F.neg(e.rref.at(r, c));
        basis.push_back(std::move(x));
    }
    return fmatrix::from_columns(a.cols(), basis);
}

std::optional<std::vector<std::uint16_t>> solve_in_span(const prime_field& F, const fmatrix& b,
                                                        const std::vector<std::uint16_t>& v) {
    if (v.size() != b.rows()) throw std::invalid_argument("solve_in_span dimension mismatch");
    echelon e = echelonize(F, b);
    return echelon_solve(F, e, v.data(), v.size());
}

quotient_basis_result quotient_basis(const prime_field& F, const fmatrix& z, const fmatrix& bd) {
    if (!bd.empty() && !z.empty() && bd.rows() != z.rows())
        throw std::invalid_argument("quotient_basis dimension mismatch");
    const std::size_t ambient = std::max(z.rows(), bd.rows());

    // Precondition: span(Bd) subset of span(Z).
    std::size_t rz = rank(F, z);
    if (rank(F, hcat(z, bd)) != rz) throw std::invalid_argument("boundary not contained in cycles");

    fmatrix combined = hcat(bd, z);
    echelon ce = echelonize(F, combined);

    quotient_basis_result q;
    q.bd_cols = bd.cols();
    std::vector<std::vector<std::uint16_t>> reps;
    for (std::size_t c : ce.pivot_cols) {
        if (c >= bd.cols()) {
            q.rep_cols.push_back(c - bd.cols());
            reps.push_back(z.column(c - bd.cols()));
        }
    }
    q.reps = fmatrix::from_columns(ambient, reps);
    q.solver = echelonize(F, hcat(bd, q.reps));
    return q;
}

std::vector<std::uint16_t> quotient_basis_result::project(const prime_field& F,
                                                          const std::uint16_t* v, std::size_t n) const {
    auto sol = echelon_solve(F, solver, v, n);
    if (!sol) throw internal_error("projection target outside cycle span");
    return std::vector<std::uint16_t>(sol->begin() + static_cast<std::ptrdiff_t>(bd_cols), sol->end());
}

}  // namespace bgph
