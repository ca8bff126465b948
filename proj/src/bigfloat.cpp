#include "sbd/bigfloat.hpp"

#include <algorithm>
#include <utility>

#include "sbd/errors.hpp"
#include "sbd/scalar.hpp"

namespace sbd {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const mpq_class& v, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_q(out.v_, v.get_mpq_t(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_d(out.v_, v, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec) {
    // Fractions go through the exact rational parser; decimals are rounded
    // directly by mpfr so huge exponents stay cheap.
    if (text.find('/') != std::string_view::npos)
        return from_rational(parse_rational(text), prec);
    BigFloat out(prec);
    std::string t(text);
    // trim, mpfr_set_str rejects surrounding whitespace
    auto b = t.find_first_not_of(" \t\r\n");
    auto e = t.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("empty scalar text");
    t = t.substr(b, e - b + 1);
    if (mpfr_set_str(out.v_, t.c_str(), 10, MPFR_RNDN) != 0 || !out.is_finite())
        throw ParseError("malformed scalar \"" + std::string(text) + "\"");
    return out;
}

mpfr_prec_t BigFloat::precision() const { return mpfr_get_prec(v_); }

bool BigFloat::is_finite() const { return mpfr_number_p(v_) != 0; }

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

mpq_class BigFloat::to_rational() const {
    if (!is_finite()) throw ParseError("cannot lift a non-finite big-float value");
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), v_);
    return out;
}

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str() const {
    if (is_zero()) return "0";
    if (!is_finite()) throw ParseError("cannot serialize a non-finite big-float value");
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, 0, v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!digits.empty() && digits.front() == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    // drop cosmetic trailing zeros; the value (and hence the round trip) is unchanged
    auto last = digits.find_last_not_of('0');
    digits.erase(std::min(digits.size(), last + 1));
    if (digits.empty()) digits = "0";
    // value = 0.digits * 10^exp10, rendered as d.ddd e(exp10-1)
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(static_cast<long>(exp10 - 1));
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(std::max(a.precision(), b.precision()));
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

} // namespace sbd
