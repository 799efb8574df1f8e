#pragma once

#include <cstddef>
#include <vector>

#include <pellmat/gaussint.hpp>

namespace pellmat {

/// Strictly increasing 1-based row/column selection, matching the
/// bracket notation used for submatrices and minors.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> indices);

    /// [1, 2, ..., k].
    static IndexSet first(std::size_t k);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    std::size_t operator[](std::size_t pos) const { return idx_[pos]; }
    const std::vector<std::size_t>& values() const { return idx_; }

    std::size_t sum() const;

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> idx_;
};

/// Row-major dense matrix over Z[i]. Immutable once built via from_rows
/// or the fill constructor plus set() during construction code.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols);

    static DenseMatrix from_rows(const std::vector<std::vector<GaussInt>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const GaussInt& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, GaussInt v) { e_[r * cols_ + c] = std::move(v); }

    DenseMatrix transpose() const;
    DenseMatrix with_swapped_rows(std::size_t r1, std::size_t r2) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<GaussInt> e_;
};

/// Tridiagonal matrix given by its bands; diag has length n,
/// sub and sup length n-1.
struct TridiagSpec {
    std::vector<GaussInt> diag;
    std::vector<GaussInt> sub;
    std::vector<GaussInt> sup;

    std::size_t size() const { return diag.size(); }
};

/// The n x n tridiagonal matrix with 2i on the diagonal and 1 on both
/// off-diagonals, whose determinant carries the (n+1)th Pell number.
TridiagSpec build_pell_matrix(std::size_t n);

DenseMatrix materialize(const TridiagSpec& spec);

/// k x k submatrix on the selected rows and columns (1-based, in order).
DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols);

/// (n-k) x (n-k) matrix on the complementary rows and columns.
/// k = n is rejected; determinant engines handle the empty case by convention.
DenseMatrix complementary_minor(const DenseMatrix& a, const IndexSet& rows,
                                const IndexSet& cols);

/// (-1)^(sum of selected row and column indices), as a real unit phase.
UnitPhase cofactor_sign(const IndexSet& rows, const IndexSet& cols);

}  // namespace pellmat
