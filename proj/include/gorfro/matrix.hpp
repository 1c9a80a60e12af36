#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gorfro/field.hpp"

namespace gorfro {

/// Sparse exact vector: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, FieldElement>>;

/// Sparse exact matrix in triplet form. Elimination uses fraction-free
/// integer arithmetic over the rationals (rows scaled integral, content
/// removed after each update) and plain modular arithmetic over a prime
/// field. Pivots are chosen column-minimal, then row-minimal, so all
/// derived bases are deterministic.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec fs)
        : rows_(rows), cols_(cols), fs_(fs) {}

    static ExactMatrix identity(std::size_t n, FieldSpec fs);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return fs_; }

    void set(std::size_t r, std::size_t c, const FieldElement& v);
    void add(std::size_t r, std::size_t c, const FieldElement& v);
    FieldElement at(std::size_t r, std::size_t c) const;
    std::size_t nonzeros() const { return entries_.size(); }
    const std::map<std::pair<std::size_t, std::size_t>, FieldElement>& entries() const {
        return entries_;
    }

    ExactMatrix transpose() const;
    bool is_zero() const { return entries_.empty(); }

    struct RankKernel {
        std::size_t rank = 0;
        std::vector<SparseVector> kernel; // echelonized, one leader per free column
    };

    /// Rank and an echelonized kernel basis; verifies
    /// rank + |kernel| == cols before returning.
    RankKernel rank_and_kernel() const;

    /// Rank only (skips kernel assembly).
    std::size_t rank() const;

    bool is_invertible() const { return rows_ == cols_ && rank() == cols_; }

    /// Echelonized basis of the column space, as vectors over the row
    /// coordinates, pivots normalized to 1.
    std::vector<SparseVector> column_space_echelon() const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    SparseVector apply(const SparseVector& v) const;

private:
    std::size_t rows_, cols_;
    FieldSpec fs_;
    std::map<std::pair<std::size_t, std::size_t>, FieldElement> entries_;
};

namespace detail {

/// Reduced row echelon form data: pivot rows normalized to leading
/// coefficient 1 with all other pivot-column entries eliminated.
struct EchelonResult {
    std::size_t rank = 0;
    std::vector<SparseVector> rows;       // ordered by pivot column
    std::vector<std::size_t> pivot_cols;  // parallel to rows
    std::vector<std::size_t> free_cols;
};

EchelonResult reduced_echelon(std::size_t nrows, std::size_t ncols, const FieldSpec& fs,
                              const std::vector<SparseVector>& rows);

/// Rank of the span of `rows`; skips the backward reduction pass.
std::size_t echelon_rank(const FieldSpec& fs, const std::vector<SparseVector>& rows);

/// Kernel basis of the matrix whose reduced echelon form is `ech`.
std::vector<SparseVector> kernel_from_echelon(const EchelonResult& ech, const FieldSpec& fs);

} // namespace detail

} // namespace gorfro
