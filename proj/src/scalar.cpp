#include "sbd/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace sbd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// signed integer text -> mpz
Integer parse_integer_text(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

Rational parse_fraction(std::string_view s, std::string_view whole) {
    auto slash = s.find('/');
    Integer p = parse_integer_text(s.substr(0, slash), whole);
    Integer q = parse_integer_text(s.substr(slash + 1), whole);
    if (sgn(q) == 0) throw ZeroDenominator("zero denominator in \"" + std::string(whole) + "\"");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long expo = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view etext = s.substr(epos + 1);
        s = s.substr(0, epos);
        std::string_view digits = etext;
        if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
        if (!all_digits(digits) || digits.size() > 6)
            throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
        expo = std::strtol(std::string(etext).c_str(), nullptr, 10);
    }
    std::string_view int_part = s, frac_part;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
        if (frac_part.find('.') != std::string_view::npos)
            throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
    }
    if (int_part.empty() && frac_part.empty())
        throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw ParseError("malformed scalar \"" + std::string(whole) + "\"");

    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer mant(digits.empty() ? "0" : digits, 10);
    long shift = expo - static_cast<long>(frac_part.size());

    Rational r;
    if (shift >= 0) {
        Integer pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        r = Rational(mant * pow10);
    } else {
        Integer pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        r = Rational(mant, pow10);
        r.canonicalize();
    }
    return neg ? Rational(-r) : r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty scalar text");
    if (s.find('/') != std::string_view::npos) return parse_fraction(s, text);
    return parse_decimal(s, text);
}

double parse_double(std::string_view text) {
    double d = round_to_double(parse_rational(text));
    if (!std::isfinite(d)) throw ParseError("value \"" + std::string(text) + "\" overflows binary64");
    return d;
}

std::string canonical(const Rational& v) {
    return v.get_str(); // "p" or "p/q", canonical form
}

std::string canonical(double v) {
    if (!std::isfinite(v)) throw ParseError("cannot serialize a non-finite binary64 value");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double round_to_double(const Rational& v) {
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, v.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

Rational lift(double v) {
    if (!std::isfinite(v)) throw ParseError("cannot lift a non-finite binary64 value");
    Rational r;
    mpq_set_d(r.get_mpq_t(), v); // exact
    return r;
}

Rational lift(const Rational& v) { return v; }

Rational lift(const BigFloat& v) { return v.to_rational(); }

ScalarValue parse_scalar(std::string_view text, ScalarKind kind) {
    switch (kind.tag) {
    case ScalarKind::Tag::rational: return parse_rational(text);
    case ScalarKind::Tag::binary64: return parse_double(text);
    case ScalarKind::Tag::bigfloat: return BigFloat::parse(text, kind.precision_bits);
    }
    throw ParseError("unknown scalar kind");
}

std::string canonical(const ScalarValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigFloat>)
                return x.str();
            else
                return canonical(x);
        },
        v);
}

RelativeError relative_error(const Rational& computed, const Rational& exact) {
    if (sgn(exact) == 0)
        return sgn(computed) == 0 ? RelativeError() : RelativeError::infinity();
    Rational diff = computed - exact;
    return RelativeError::finite(abs(diff) / abs(exact));
}

RelativeError relative_error(double computed, const Rational& exact) {
    return relative_error(lift(computed), exact);
}

RelativeError relative_error(const ScalarValue& computed, const ScalarValue& exact) {
    auto as_rational = [](const ScalarValue& v) {
        return std::visit([](const auto& x) { return lift(x); }, v);
    };
    return relative_error(as_rational(computed), as_rational(exact));
}

} // namespace sbd
