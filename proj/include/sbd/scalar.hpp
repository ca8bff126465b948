#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "sbd/bigfloat.hpp"
#include "sbd/errors.hpp"

namespace sbd {

// Exact rational scalar, kept canonical (lowest terms, positive denominator)
// so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

// ---- parsing and canonical text -------------------------------------------
//
// Accepted text: decimal literals ("0.1", "-3", "2.5e-7") and fractions
// ("p/q"). Decimals parse exactly into rationals (0.1 -> 1/10).
// Canonical text: rationals as "p" or "p/q"; binary64 as the shortest
// round-trip decimal.

Rational parse_rational(std::string_view text);
double parse_double(std::string_view text); // exact rational parse, then round to nearest

std::string canonical(const Rational& v);
std::string canonical(double v);

double round_to_double(const Rational& v); // round to nearest, ties to even
Rational lift(double v);                   // exact (binary64 values are dyadic rationals)
Rational lift(const Rational& v);
Rational lift(const BigFloat& v);

// ---- scalar kinds ----------------------------------------------------------

struct ScalarKind {
    enum class Tag { binary64, rational, bigfloat };
    Tag tag = Tag::rational;
    unsigned precision_bits = BigFloat::default_precision; // bigfloat only

    static ScalarKind binary64() { return {Tag::binary64}; }
    static ScalarKind rational() { return {Tag::rational}; }
    static ScalarKind bigfloat(unsigned bits = BigFloat::default_precision) {
        return {Tag::bigfloat, bits};
    }
};

using ScalarValue = std::variant<double, Rational, BigFloat>;

ScalarValue parse_scalar(std::string_view text, ScalarKind kind);
std::string canonical(const ScalarValue& v);

// ---- relative error --------------------------------------------------------
//
// relerr(computed, exact) = |computed - exact| / |exact| when exact != 0,
// 0 when both are 0, and infinity when exact = 0 != computed. Always
// evaluated in exact arithmetic after lifting the computed value.

class RelativeError {
  public:
    RelativeError() : value_(0), infinite_(false) {}

    static RelativeError infinity() {
        RelativeError e;
        e.infinite_ = true;
        return e;
    }
    static RelativeError finite(Rational v) {
        RelativeError e;
        e.value_ = std::move(v);
        return e;
    }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const { return value_; } // meaningful only when finite
    std::string str() const { return infinite_ ? "inf" : canonical(value_); }

    friend bool operator<(const RelativeError& a, const RelativeError& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator==(const RelativeError& a, const RelativeError& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<=(const RelativeError& a, const RelativeError& b) {
        return a < b || a == b;
    }
    friend bool operator>(const RelativeError& a, const RelativeError& b) { return b < a; }

  private:
    Rational value_;
    bool infinite_;
};

RelativeError relative_error(const Rational& computed, const Rational& exact);
RelativeError relative_error(double computed, const Rational& exact);
RelativeError relative_error(const ScalarValue& computed, const ScalarValue& exact);

// ---- traits used by the generic kernels ------------------------------------

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_rational(const Rational& v) { return v; }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static bool is_one(const Rational& v) { return v == 1; }
};

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_rational(const Rational& v) { return round_to_double(v); }
    static bool is_zero(double v) { return v == 0.0; }
    static bool is_one(double v) { return v == 1.0; }
};

} // namespace sbd
