#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <pellmat/determinant.hpp>
#include <pellmat/gaussint.hpp>

namespace pellmat {

/// P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
mpz_class pell(unsigned long n);

/// P_0 .. P_n in one pass.
std::vector<mpz_class> pell_upto(unsigned long n);

/// The unit m with P_{n+1} = m * det(N(n)), determined by n mod 4:
/// 1, -i, -1, i for residues 0, 1, 2, 3.
UnitPhase unit_multiplier(unsigned long n);

/// P_{n+1} through the determinant route: m * det(N(n)), which is always
/// purely real and non-negative. NonRealResult signals an engine bug.
mpz_class pell_via_det(unsigned long n);

enum class IdentityId { Convolution, Doubling, DetEquation, CofactorTable };
enum class Engine { Continuant, Bareiss, Laplace, Recurrence };

const char* identity_str(IdentityId id);
const char* engine_str(Engine e);

/// Machine-readable verdict for one identity or table-entry instance.
struct IdentityReport {
    IdentityId id;
    std::map<std::string, long long> params;
    GaussInt lhs;
    GaussInt rhs;
    Engine engine;
    bool verdict = false;
    std::vector<std::string> notes;
};

/// Unit-corrected determinant equation: m(n-1) * det(N(n-1)) against
/// 2 P_{n-1} + P_{n-2}. Requires n >= 2.
IdentityReport verify_det_equation(unsigned long n);

/// Convolution identity P_n = P_k P_{n-k+1} + P_{k-1} P_{n-k} for
/// 1 <= k <= n. With via_laplace set the left side is recomputed from a
/// Laplace expansion of N(n-1) along its first k rows.
IdentityReport verify_convolution(unsigned long n, long long k, bool via_laplace = false);

/// Doubling identity P_{2n} = P_n (P_{n+1} + P_{n-1}). With via_laplace
/// set (n >= 2) the left side comes from expanding N(2n-1) along its
/// first n-1 rows.
IdentityReport verify_doubling(unsigned long n, bool via_laplace = false);

enum class CofactorTable { FirstRow, TwoRow, ThreeRow, DoublingBlocks };

const char* table_str(CofactorTable t);

/// Checks each entry of one of the closed-form cofactor tables against a
/// value computed on the materialized matrix. The computation is the
/// ground truth; a table mismatch yields verdict = false rather than an
/// exception. FirstRow/TwoRow need n >= 4, ThreeRow n >= 5,
/// DoublingBlocks n >= 2.
std::vector<IdentityReport> verify_cofactor_tables(unsigned long n, CofactorTable t);

}  // namespace pellmat
