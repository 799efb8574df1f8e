#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include <pellmat/errors.hpp>

namespace pellmat {

/// Exact Gaussian integer a + bi with arbitrary-precision components.
/// Immutable value type; all arithmetic is closed over Z[i].
struct GaussInt {
    mpz_class re;
    mpz_class im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r) : re(r), im(0) {}
    GaussInt(mpz_class r) : re(std::move(r)), im(0) {}
    GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r, long i) : re(r), im(i) {}

    static GaussInt unit_i() { return GaussInt(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussInt conj() const { return GaussInt(re, -im); }

    /// |z|^2 = re^2 + im^2, always a non-negative rational integer.
    mpz_class norm() const { return re * re + im * im; }

    GaussInt operator-() const { return GaussInt(-re, -im); }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re + b.re, a.im + b.im);
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re - b.re, a.im - b.im);
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }

    GaussInt& operator+=(const GaussInt& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& b) {
        re -= b.re;
        im -= b.im;
        return *this;
    }
    GaussInt& operator*=(const GaussInt& b) {
        *this = *this * b;
        return *this;
    }

    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

    /// Exact quotient a / b; b must divide a in Z[i].
    static GaussInt divexact(const GaussInt& a, const GaussInt& b);

    /// Canonical text form: "0", "3", "-4", "i", "-i", "2i", "3+4i", "3-i".
    std::string str() const;

    /// Inverse of str(); also accepts any sum of a real and an imaginary part.
    static GaussInt parse(std::string_view text);
};

/// The four invertible elements of Z[i], i.e. the powers of i.
enum class UnitPhase { One, I, MinusOne, MinusI };

GaussInt as_gauss(UnitPhase u);

/// i^k for any integer k (period 4, negatives allowed).
UnitPhase unit_pow_i(long long k);

UnitPhase unit_mul(UnitPhase a, UnitPhase b);
UnitPhase unit_inverse(UnitPhase u);

/// Phase of z when z is one of {1, i, -1, -i}; throws NotAUnit otherwise.
UnitPhase classify_unit(const GaussInt& z);

/// Exact z / u. Units are invertible so this is total.
GaussInt strip_unit(const GaussInt& z, UnitPhase u);

const char* unit_str(UnitPhase u);

}  // namespace pellmat
