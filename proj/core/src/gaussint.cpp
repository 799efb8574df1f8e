#include <pellmat/gaussint.hpp>

#include <cctype>
#include <cstddef>

namespace pellmat {

GaussInt GaussInt::divexact(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw Error("division by zero in Z[i]");
    const mpz_class n = b.norm();
    const GaussInt p = a * b.conj();
    mpz_class qr, qi;
    mpz_divexact(qr.get_mpz_t(), p.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qi.get_mpz_t(), p.im.get_mpz_t(), n.get_mpz_t());
    return GaussInt(std::move(qr), std::move(qi));
}

std::string GaussInt::str() const {
    if (im == 0) return re.get_str();

    std::string imag;
    if (im == 1) {
        imag = "i";
    } else if (im == -1) {
        imag = "-i";
    } else {
        imag = im.get_str() + "i";
    }
    if (re == 0) return imag;
    if (im > 0) return re.get_str() + "+" + imag;
    return re.get_str() + imag;
}

namespace {

// One signed term of the form [+-]digits, [+-]digits i, or [+-]i.
struct Term {
    mpz_class value;
    bool imaginary;
};

Term parse_term(std::string_view s, size_t& pos) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -sign;
        ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits(s.substr(start, pos - start));

    bool imaginary = false;
    if (pos < s.size() && s[pos] == 'i') {
        imaginary = true;
        ++pos;
    }
    if (digits.empty()) {
        if (!imaginary) throw ParseError("expected digits in Gaussian integer literal");
        digits = "1";
    }
    return Term{mpz_class(digits) * sign, imaginary};
}

}  // namespace

GaussInt GaussInt::parse(std::string_view text) {
    // Strip surrounding whitespace; the grammar itself has none.
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) throw ParseError("empty Gaussian integer literal");

    GaussInt out;
    size_t pos = 0;
    bool seen_real = false, seen_imag = false;
    while (pos < s.size()) {
        Term t = parse_term(s, pos);
        if (t.imaginary) {
            if (seen_imag) throw ParseError("duplicate imaginary part");
            out.im = t.value;
            seen_imag = true;
        } else {
            if (seen_real) throw ParseError("duplicate real part");
            out.re = t.value;
            seen_real = true;
        }
    }
    return out;
}

GaussInt as_gauss(UnitPhase u) {
    switch (u) {
        case UnitPhase::One: return GaussInt(1);
        case UnitPhase::I: return GaussInt(0, 1);
        case UnitPhase::MinusOne: return GaussInt(-1);
        case UnitPhase::MinusI: return GaussInt(0, -1);
    }
    throw Error("bad UnitPhase");
}

UnitPhase unit_pow_i(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return UnitPhase::One;
        case 1: return UnitPhase::I;
        case 2: return UnitPhase::MinusOne;
        default: return UnitPhase::MinusI;
    }
}

namespace {

long long unit_exp(UnitPhase u) {
    switch (u) {
        case UnitPhase::One: return 0;
        case UnitPhase::I: return 1;
        case UnitPhase::MinusOne: return 2;
        default: return 3;
    }
}

}  // namespace

UnitPhase unit_mul(UnitPhase a, UnitPhase b) { return unit_pow_i(unit_exp(a) + unit_exp(b)); }

UnitPhase unit_inverse(UnitPhase u) { return unit_pow_i(-unit_exp(u)); }

UnitPhase classify_unit(const GaussInt& z) {
    if (z.re == 1 && z.im == 0) return UnitPhase::One;
    if (z.re == 0 && z.im == 1) return UnitPhase::I;
    if (z.re == -1 && z.im == 0) return UnitPhase::MinusOne;
    if (z.re == 0 && z.im == -1) return UnitPhase::MinusI;
    throw NotAUnit("not a unit of Z[i]: " + z.str());
}

GaussInt strip_unit(const GaussInt& z, UnitPhase u) {
    return z * as_gauss(unit_inverse(u));
}

const char* unit_str(UnitPhase u) {
    switch (u) {
        case UnitPhase::One: return "1";
        case UnitPhase::I: return "i";
        case UnitPhase::MinusOne: return "-1";
        default: return "-i";
    }
}

}  // namespace pellmat
