#include <pellmat/matrix.hpp>

#include <numeric>
#include <string>

namespace pellmat {

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    for (std::size_t p = 0; p < idx_.size(); ++p) {
        if (idx_[p] < 1) throw IndexOutOfRange("index sets are 1-based");
        if (p > 0 && idx_[p] <= idx_[p - 1])
            throw IndexOutOfRange("index set must be strictly increasing");
    }
}

IndexSet IndexSet::first(std::size_t k) {
    std::vector<std::size_t> v(k);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return IndexSet(std::move(v));
}

std::size_t IndexSet::sum() const {
    return std::accumulate(idx_.begin(), idx_.end(), std::size_t{0});
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0) throw ZeroDimension("matrix dimensions must be >= 1");
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<GaussInt>>& rows) {
    if (rows.empty()) throw ZeroDimension("matrix dimensions must be >= 1");
    DenseMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw Error("ragged row lengths");
        for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

DenseMatrix DenseMatrix::with_swapped_rows(std::size_t r1, std::size_t r2) const {
    DenseMatrix m = *this;
    for (std::size_t c = 0; c < cols_; ++c) {
        m.set(r1, c, at(r2, c));
        m.set(r2, c, at(r1, c));
    }
    return m;
}

TridiagSpec build_pell_matrix(std::size_t n) {
    if (n == 0) throw ZeroDimension("Pell matrix needs n >= 1");
    TridiagSpec spec;
    spec.diag.assign(n, GaussInt(0, 2));
    spec.sub.assign(n - 1, GaussInt(1));
    spec.sup.assign(n - 1, GaussInt(1));
    return spec;
}

DenseMatrix materialize(const TridiagSpec& spec) {
    const std::size_t n = spec.size();
    if (n == 0) throw ZeroDimension("empty tridiagonal spec");
    if (spec.sub.size() != n - 1 || spec.sup.size() != n - 1)
        throw Error("band lengths must be n-1");
    DenseMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m.set(k, k, spec.diag[k]);
        if (k + 1 < n) {
            m.set(k + 1, k, spec.sub[k]);
            m.set(k, k + 1, spec.sup[k]);
        }
    }
    return m;
}

namespace {

void check_bounds(const IndexSet& s, std::size_t dim, const char* what) {
    for (std::size_t i : s)
        if (i > dim)
            throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) +
                                  " exceeds dimension " + std::to_string(dim));
}

std::vector<std::size_t> complement_of(const IndexSet& s, std::size_t dim) {
    std::vector<bool> chosen(dim + 1, false);
    for (std::size_t i : s) chosen[i] = true;
    std::vector<std::size_t> out;
    out.reserve(dim - s.size());
    for (std::size_t i = 1; i <= dim; ++i)
        if (!chosen[i]) out.push_back(i);
    return out;
}

}  // namespace

DenseMatrix submatrix(const DenseMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw UnequalSelection("row and column selections differ in size");
    if (rows.empty()) throw ZeroDimension("empty selection");
    check_bounds(rows, a.rows(), "row");
    check_bounds(cols, a.cols(), "column");
    DenseMatrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s.set(r, c, a.at(rows[r] - 1, cols[c] - 1));
    return s;
}

DenseMatrix complementary_minor(const DenseMatrix& a, const IndexSet& rows,
                                const IndexSet& cols) {
    if (!a.square()) throw NotSquare("minor needs a square matrix");
    if (rows.size() != cols.size())
        throw UnequalSelection("row and column selections differ in size");
    const std::size_t n = a.rows();
    check_bounds(rows, n, "row");
    check_bounds(cols, n, "column");
    if (rows.size() == n)
        throw FullSelection("complement of a full selection is the 0x0 matrix");
    IndexSet crows{complement_of(rows, n)};
    IndexSet ccols{complement_of(cols, n)};
    return submatrix(a, crows, ccols);
}

UnitPhase cofactor_sign(const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size())
        throw UnequalSelection("row and column selections differ in size");
    return (rows.sum() + cols.sum()) % 2 == 0 ? UnitPhase::One : UnitPhase::MinusOne;
}

}  // namespace pellmat
