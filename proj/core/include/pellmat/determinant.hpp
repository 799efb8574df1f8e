#pragma once

#include <cstdint>
#include <vector>

#include <pellmat/matrix.hpp>

namespace pellmat {

/// Brute-force permanent-style determinant, the independent oracle for
/// the other engines. Guarded at n <= 9.
GaussInt det_permutation(const DenseMatrix& a);

/// Fraction-free Bareiss elimination; every division is exact in Z[i].
GaussInt det_bareiss(const DenseMatrix& a);

/// Three-term continuant recurrence on the bands, O(n) ring operations.
GaussInt det_continuant(const TridiagSpec& spec);

struct ExpansionTerm {
    IndexSet cols;
    GaussInt block_det;
    GaussInt cofactor;
    GaussInt signed_product;
};

/// One multi-row Laplace expansion: det(A) as a sum over column subsets
/// of block determinant times generalized cofactor.
struct RowExpansion {
    IndexSet rows;
    std::vector<ExpansionTerm> terms;
    GaussInt total;
};

inline constexpr std::uint64_t kDefaultExpansionLimit = std::uint64_t{1} << 20;

/// Expands det(A) along the given row set. Column subsets are enumerated
/// in lexicographic order; terms with a zero block determinant are kept
/// only when include_zero_terms is set. Throws ExpansionTooLarge when
/// C(n, k) exceeds max_terms.
RowExpansion laplace_expand(const DenseMatrix& a, const IndexSet& rows,
                            bool include_zero_terms = false,
                            std::uint64_t max_terms = kDefaultExpansionLimit);

/// Signed complementary-minor determinant; 1 when the selection is full
/// (the empty determinant convention).
GaussInt generalized_cofactor(const DenseMatrix& a, const IndexSet& rows,
                              const IndexSet& cols);

}  // namespace pellmat
