#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace sbd {

// Correctly rounded multiple-precision float (MPFR, round-to-nearest).
// Value-semantic wrapper; the precision travels with the value.
class BigFloat {
  public:
    // ~64 decimal digits, comfortably above a 60-digit verification scale.
    static constexpr mpfr_prec_t default_precision = 212;

    BigFloat() : BigFloat(default_precision) {}
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const mpq_class& v, mpfr_prec_t prec = default_precision);
    static BigFloat from_double(double v, mpfr_prec_t prec = default_precision);
    // Accepts decimal literals (with exponent) and "p/q" fractions.
    static BigFloat parse(std::string_view text, mpfr_prec_t prec = default_precision);

    mpfr_prec_t precision() const;
    bool is_finite() const;
    bool is_zero() const;

    mpq_class to_rational() const; // exact; throws on non-finite values
    double to_double() const;
    // Decimal string with enough digits that parsing it back at the same
    // precision recovers the value exactly.
    std::string str() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  private:
    mpfr_t v_;
};

} // namespace sbd
