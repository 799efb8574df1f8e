#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include <pellmat/matrix.hpp>

#include "test_util.hpp"

using namespace pellmat;
using pellmat::testutil::random_matrix;

namespace {

const GaussInt two_i(0, 2);
const GaussInt one(1);
const GaussInt zero;

DenseMatrix pell_dense(std::size_t n) { return materialize(build_pell_matrix(n)); }

std::vector<std::string> entry_multiset(const DenseMatrix& m) {
    std::vector<std::string> v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c).str());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("index sets are 1-based and strictly increasing") {
    CHECK(IndexSet({1, 3, 4}).sum() == 8);
    CHECK(IndexSet::first(3) == IndexSet({1, 2, 3}));
    CHECK_THROWS_AS(IndexSet({0, 1}), IndexOutOfRange);
    CHECK_THROWS_AS(IndexSet({2, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(IndexSet({3, 1}), IndexOutOfRange);
}

TEST_CASE("build_pell_matrix") {
    TridiagSpec s1 = build_pell_matrix(1);
    CHECK(s1.diag == std::vector<GaussInt>{two_i});
    CHECK(s1.sub.empty());
    CHECK(s1.sup.empty());

    CHECK(pell_dense(2) == DenseMatrix::from_rows({{two_i, one}, {one, two_i}}));
    CHECK(pell_dense(3) == DenseMatrix::from_rows({{two_i, one, zero},
                                                   {one, two_i, one},
                                                   {zero, one, two_i}}));
    CHECK_THROWS_AS(build_pell_matrix(0), ZeroDimension);
}

TEST_CASE("materialize") {
    CHECK(pell_dense(1) == DenseMatrix::from_rows({{two_i}}));

    GaussInt a(1, 2), b(3), c(0, -1), d(5, 5);
    TridiagSpec spec{{a, b}, {c}, {d}};
    CHECK(materialize(spec) == DenseMatrix::from_rows({{a, d}, {c, b}}));
}

TEST_CASE("submatrix follows the bracket notation") {
    DenseMatrix n3 = pell_dense(3);
    CHECK(submatrix(n3, IndexSet({1, 2}), IndexSet({1, 3})) ==
          DenseMatrix::from_rows({{two_i, zero}, {one, one}}));
    CHECK(submatrix(n3, IndexSet({1, 2}), IndexSet({2, 3})) ==
          DenseMatrix::from_rows({{one, zero}, {two_i, one}}));
    CHECK(submatrix(n3, IndexSet::first(3), IndexSet::first(3)) == n3);

    CHECK_THROWS_AS(submatrix(n3, IndexSet({1, 4}), IndexSet({1, 2})), IndexOutOfRange);
    CHECK_THROWS_AS(submatrix(n3, IndexSet({1, 2}), IndexSet({1})), UnequalSelection);
}

TEST_CASE("complementary minor") {
    CHECK(complementary_minor(pell_dense(3), IndexSet({1}), IndexSet({1})) ==
          pell_dense(2));
    CHECK(complementary_minor(pell_dense(4), IndexSet({1, 2}), IndexSet({1, 2})) ==
          pell_dense(2));
    // remaining entry sits at row 3, column 2 of N(3)
    CHECK(complementary_minor(pell_dense(3), IndexSet({1, 2}), IndexSet({1, 3})) ==
          DenseMatrix::from_rows({{one}}));

    CHECK_THROWS_AS(
        complementary_minor(pell_dense(3), IndexSet::first(3), IndexSet::first(3)),
        FullSelection);
    CHECK_THROWS_AS(complementary_minor(pell_dense(3), IndexSet({4}), IndexSet({1})),
                    IndexOutOfRange);
}

TEST_CASE("cofactor sign") {
    CHECK(cofactor_sign(IndexSet({1}), IndexSet({1})) == UnitPhase::One);
    CHECK(cofactor_sign(IndexSet({1}), IndexSet({2})) == UnitPhase::MinusOne);
    CHECK(cofactor_sign(IndexSet({1, 2}), IndexSet({1, 3})) == UnitPhase::MinusOne);
    CHECK_THROWS_AS(cofactor_sign(IndexSet({1, 2}), IndexSet({1})), UnequalSelection);
}

TEST_CASE("cofactor sign squares to one and depends only on parity") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<std::size_t> pool{1, 2, 3, 4, 5, 6};
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t k = 1 + iter % 4;
        std::vector<std::size_t> r(pool.begin(), pool.begin() + k);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> c(pool.begin(), pool.begin() + k);
        std::sort(r.begin(), r.end());
        std::sort(c.begin(), c.end());
        IndexSet rs{r}, cs{c};
        UnitPhase s = cofactor_sign(rs, cs);
        CHECK(unit_mul(s, s) == UnitPhase::One);
        CHECK(s == unit_pow_i(2 * static_cast<long long>(rs.sum() + cs.sum())));
    }
}

TEST_CASE("submatrix and complementary minor partition the entries") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 30; ++iter) {
        DenseMatrix a = random_matrix(rng, 6);
        std::vector<std::size_t> pool{1, 2, 3, 4, 5, 6};
        std::size_t k = 1 + iter % 5;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> r(pool.begin(), pool.begin() + k);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> c(pool.begin(), pool.begin() + k);
        std::sort(r.begin(), r.end());
        std::sort(c.begin(), c.end());
        IndexSet rs{r}, cs{c};

        // The selected block, its complement, and the two mixed blocks
        // tile A; here we check the diagonal pair covers disjoint cells
        // by entry count and by multiset inclusion in A.
        DenseMatrix block = submatrix(a, rs, cs);
        DenseMatrix minor = complementary_minor(a, rs, cs);
        CHECK(block.rows() * block.cols() + minor.rows() * minor.cols() +
                  2 * k * (6 - k) ==
              36);
        auto all = entry_multiset(a);
        for (const auto& e : entry_multiset(block))
            CHECK(std::find(all.begin(), all.end(), e) != all.end());
        for (const auto& e : entry_multiset(minor))
            CHECK(std::find(all.begin(), all.end(), e) != all.end());
    }
}

TEST_CASE("N(n) is symmetric") {
    for (std::size_t n = 1; n <= 8; ++n) {
        DenseMatrix a = pell_dense(n);
        CHECK(a == a.transpose());
    }
}
