#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bgph/field.hpp"

namespace bgph {

// Dense row-major matrix of F_p residues. The field context is passed to the
// operations rather than stored, so boundary and transition matrices stay
// plain data.
class fmatrix {
public:
    fmatrix() = default;
    fmatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static fmatrix identity(std::size_t n) {
        fmatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static fmatrix from_columns(std::size_t rows, const std::vector<std::vector<std::uint16_t>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint16_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint16_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint16_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint16_t* row(std::size_t i) const { return a_.data() + i * cols_; }

    std::vector<std::uint16_t> column(std::size_t j) const;
    fmatrix transposed() const;

    bool operator==(const fmatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint16_t> a_;
};

fmatrix hcat(const fmatrix& a, const fmatrix& b);
fmatrix mat_mul(const prime_field& F, const fmatrix& a, const fmatrix& b);
std::vector<std::uint16_t> mat_vec(const prime_field& F, const fmatrix& a,
                                   const std::vector<std::uint16_t>& v);
bool is_zero(const fmatrix& a);

// Reduced row echelon form R = T * M with the transform recorded, computed
// with deterministic pivoting: columns left to right, first row with a
// nonzero entry.
struct echelon {
    fmatrix rref;
    fmatrix transform;
    std::vector<std::size_t> pivot_cols;
    std::size_t nrows = 0, ncols = 0;
    std::size_t rank() const { return pivot_cols.size(); }
};

echelon echelonize(const prime_field& F, const fmatrix& m);

// Solves M x = v with free variables set to zero; nullopt if v is outside
// the column span.
std::optional<std::vector<std::uint16_t>> echelon_solve(const prime_field& F, const echelon& e,
                                                        const std::uint16_t* v, std::size_t n);

std::size_t rank(const prime_field& F, fmatrix a);

// Columns form a basis of the null space {x : Ax = 0}.
fmatrix kernel_basis(const prime_field& F, const fmatrix& a);

// Coefficients c with B c = v, or nullopt when v is not in the span.
std::optional<std::vector<std::uint16_t>> solve_in_span(const prime_field& F, const fmatrix& b,
                                                        const std::vector<std::uint16_t>& v);

// Basis of span(Z)/span(Bd) with a projection that expresses any vector of
// span(Z) in that basis. Throws if span(Bd) is not contained in span(Z).
struct quotient_basis_result {
    fmatrix reps;                       // chosen representative columns of Z
    std::vector<std::size_t> rep_cols;  // their indices in Z
    echelon solver;                     // echelon of [Bd | reps]
    std::size_t bd_cols = 0;

    std::size_t dim() const { return rep_cols.size(); }
    std::vector<std::uint16_t> project(const prime_field& F, const std::uint16_t* v, std::size_t n) const;
};

quotient_basis_result quotient_basis(const prime_field& F, const fmatrix& z, const fmatrix& bd);

}  // namespace bgph
