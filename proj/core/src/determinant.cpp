#include <pellmat/determinant.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace pellmat {

GaussInt det_permutation(const DenseMatrix& a) {
    if (!a.square()) throw NotSquare("determinant needs a square matrix");
    const std::size_t n = a.rows();
    if (n > 9) throw TooLargeForOracle("permutation oracle capped at n = 9");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    GaussInt det;
    do {
        // Parity by inversion count; n <= 9 keeps this cheap.
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;

        GaussInt term(1);
        for (std::size_t k = 0; k < n && !term.is_zero(); ++k) term *= a.at(k, perm[k]);
        if (inversions % 2 == 0)
            det += term;
        else
            det -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

GaussInt det_bareiss(const DenseMatrix& a) {
    if (!a.square()) throw NotSquare("determinant needs a square matrix");
    const std::size_t n = a.rows();

    std::vector<GaussInt> m;
    m.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.push_back(a.at(r, c));
    auto at = [&](std::size_t r, std::size_t c) -> GaussInt& { return m[r * n + c]; };

    bool negate = false;
    GaussInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot: first row with a nonzero entry in column k.
        std::size_t pivot = k;
        while (pivot < n && at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return GaussInt();
        if (pivot != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                GaussInt num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = GaussInt::divexact(num, prev);
            }
            at(i, k) = GaussInt();
        }
        prev = at(k, k);
    }
    GaussInt det = at(n - 1, n - 1);
    return negate ? -det : det;
}

GaussInt det_continuant(const TridiagSpec& spec) {
    const std::size_t n = spec.size();
    if (n == 0) throw ZeroDimension("empty tridiagonal spec");
    if (spec.sub.size() != n - 1 || spec.sup.size() != n - 1)
        throw Error("band lengths must be n-1");

    GaussInt prev2(1);          // D_0
    GaussInt prev = spec.diag[0];  // D_1
    for (std::size_t k = 1; k < n; ++k) {
        GaussInt cur = spec.diag[k] * prev - spec.sub[k - 1] * spec.sup[k - 1] * prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

GaussInt generalized_cofactor(const DenseMatrix& a, const IndexSet& rows,
                              const IndexSet& cols) {
    if (!a.square()) throw NotSquare("cofactor needs a square matrix");
    if (rows.size() != cols.size())
        throw UnequalSelection("row and column selections differ in size");
    if (rows.size() == a.rows()) return GaussInt(1);  // det of the empty matrix
    GaussInt minor_det = det_bareiss(complementary_minor(a, rows, cols));
    return cofactor_sign(rows, cols) == UnitPhase::One ? minor_det : -minor_det;
}

namespace {

// C(n, k), exact; mpz avoids intermediate overflow.
mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Lexicographic successor of a k-combination of {1..n}; false when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - 1 - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

RowExpansion laplace_expand(const DenseMatrix& a, const IndexSet& rows,
                            bool include_zero_terms, std::uint64_t max_terms) {
    if (!a.square()) throw NotSquare("Laplace expansion needs a square matrix");
    const std::size_t n = a.rows();
    const std::size_t k = rows.size();
    if (k == 0 || k > n) throw IndexOutOfRange("row set size must be in [1, n]");
    for (std::size_t r : rows)
        if (r > n) throw IndexOutOfRange("row index exceeds dimension");

    if (binomial(n, k) > max_terms)
        throw ExpansionTooLarge("C(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds the expansion limit");

    RowExpansion out;
    out.rows = rows;

    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), std::size_t{1});
    do {
        IndexSet cols{comb};
        GaussInt block = det_bareiss(submatrix(a, rows, cols));
        if (block.is_zero() && !include_zero_terms) continue;
        GaussInt cof = generalized_cofactor(a, rows, cols);
        GaussInt product = block * cof;
        out.total += product;
        out.terms.push_back({std::move(cols), std::move(block), std::move(cof),
                             std::move(product)});
    } while (next_combination(comb, n));
    return out;
}

}  // namespace pellmat
