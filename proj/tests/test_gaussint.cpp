#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <pellmat/gaussint.hpp>

using namespace pellmat;

namespace {

GaussInt gi(long r, long i = 0) { return GaussInt(r, i); }

// Independent schoolbook multiplication over gmp rationals of the
// components; deliberately not the operator* path.
GaussInt schoolbook_mul(const GaussInt& a, const GaussInt& b) {
    mpz_class ac = a.re * b.re, bd = a.im * b.im;
    mpz_class ad = a.re * b.im, bc = a.im * b.re;
    return GaussInt(ac - bd, ad + bc);
}

GaussInt random_wide(gmp_randclass& rng, unsigned bits) {
    mpz_class re = rng.get_z_bits(bits), im = rng.get_z_bits(bits);
    if (rng.get_z_bits(1) == 1) re = -re;
    if (rng.get_z_bits(1) == 1) im = -im;
    return GaussInt(re, im);
}

}  // namespace

TEST_CASE("addition") {
    CHECK(gi(0, 2) + gi(0, 2) == gi(0, 4));
    CHECK(gi(3, 4) + gi(-3, -4) == gi(0));
    CHECK(gi(-5) + gi(0) == gi(-5));
}

TEST_CASE("multiplication") {
    CHECK(gi(0, 2) * gi(0, 2) == gi(-4));
    CHECK(gi(0, -1) * gi(0, 2) == gi(2));
    CHECK(gi(0, 2) * gi(-5) == schoolbook_mul(gi(0, 2), gi(-5)));
    CHECK(gi(0, 2) * gi(-5) == gi(0, -10));
}

TEST_CASE("unit_pow_i") {
    CHECK(unit_pow_i(0) == UnitPhase::One);
    CHECK(unit_pow_i(2) == UnitPhase::MinusOne);
    CHECK(unit_pow_i(-1) == UnitPhase::MinusI);
    CHECK(unit_pow_i(5) == UnitPhase::I);
    CHECK(unit_pow_i(-4) == UnitPhase::One);
}

TEST_CASE("classify_unit") {
    CHECK(classify_unit(gi(0, -1)) == UnitPhase::MinusI);
    CHECK(classify_unit(gi(1)) == UnitPhase::One);
    CHECK_THROWS_AS(classify_unit(gi(0, 2)), NotAUnit);
    CHECK_THROWS_AS(classify_unit(gi(0)), NotAUnit);
    CHECK_THROWS_AS(classify_unit(gi(1, 1)), NotAUnit);
}

TEST_CASE("strip_unit") {
    CHECK(strip_unit(gi(0, -12), UnitPhase::MinusI) == gi(12));
    CHECK(strip_unit(gi(-5), UnitPhase::MinusOne) == gi(5));
    CHECK(strip_unit(gi(7, 3), UnitPhase::One) == gi(7, 3));
}

TEST_CASE("phase group is cyclic of order four") {
    CHECK(unit_mul(UnitPhase::I, UnitPhase::I) == UnitPhase::MinusOne);
    CHECK(unit_mul(UnitPhase::MinusI, UnitPhase::I) == UnitPhase::One);
    const UnitPhase all[] = {UnitPhase::One, UnitPhase::I, UnitPhase::MinusOne,
                             UnitPhase::MinusI};
    for (UnitPhase a : all) {
        CHECK(classify_unit(as_gauss(a)) == a);
        CHECK(unit_mul(a, unit_inverse(a)) == UnitPhase::One);
        for (UnitPhase b : all) {
            // group product matches ring product
            CHECK(as_gauss(unit_mul(a, b)) == as_gauss(a) * as_gauss(b));
            CHECK(mpz_class(as_gauss(unit_mul(a, b)).norm()) == 1);
        }
    }
}

TEST_CASE("ring axioms on wide random operands") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260823);
    for (int iter = 0; iter < 200; ++iter) {
        GaussInt a = random_wide(rng, 512), b = random_wide(rng, 512),
                 c = random_wide(rng, 512);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == schoolbook_mul(a, b));
    }
}

TEST_CASE("exact division and unit stripping round-trip") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(42);
    const UnitPhase all[] = {UnitPhase::One, UnitPhase::I, UnitPhase::MinusOne,
                             UnitPhase::MinusI};
    for (int iter = 0; iter < 100; ++iter) {
        GaussInt z = random_wide(rng, 256);
        for (UnitPhase u : all) CHECK(strip_unit(z * as_gauss(u), u) == z);

        GaussInt d = random_wide(rng, 64);
        if (!d.is_zero()) CHECK(GaussInt::divexact(z * d, d) == z);
    }
}

TEST_CASE("text form") {
    CHECK(gi(0).str() == "0");
    CHECK(gi(3).str() == "3");
    CHECK(gi(-5).str() == "-5");
    CHECK(gi(0, 1).str() == "i");
    CHECK(gi(0, -1).str() == "-i");
    CHECK(gi(0, 2).str() == "2i");
    CHECK(gi(3, -4).str() == "3-4i");
    CHECK(gi(3, 1).str() == "3+i");
    CHECK(gi(7, 3).str() == "7+3i");
}

TEST_CASE("parsing") {
    CHECK(GaussInt::parse("i") == gi(0, 1));
    CHECK(GaussInt::parse("-i") == gi(0, -1));
    CHECK(GaussInt::parse("2i") == gi(0, 2));
    CHECK(GaussInt::parse("3") == gi(3));
    CHECK(GaussInt::parse("3-4i") == gi(3, -4));
    CHECK(GaussInt::parse("0") == gi(0));
    CHECK(GaussInt::parse("-12i") == gi(0, -12));
    CHECK(GaussInt::parse(" 7+3i ") == gi(7, 3));
    CHECK_THROWS_AS(GaussInt::parse(""), ParseError);
    CHECK_THROWS_AS(GaussInt::parse("3+4"), ParseError);
    CHECK_THROWS_AS(GaussInt::parse("i+i"), ParseError);
}

TEST_CASE("parse inverts str on random values") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(7);
    for (int iter = 0; iter < 200; ++iter) {
        GaussInt z = random_wide(rng, 128);
        CHECK(GaussInt::parse(z.str()) == z);
    }
}
