#ifndef SVLAB_LAURENT_HPP
#define SVLAB_LAURENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svlab/field.hpp"

namespace svlab::charp {

/*
 * Truncated Laurent series sum_{k >= v} c_k t^k over a finite field, known
 * modulo t^N (N = absolute precision). After normalization the leading
 * stored coefficient is nonzero; a series with no nonzero known coefficient
 * is O(t^N) and has no valuation.
 */
class LaurentSeries {
    FieldPtr field_;
    long start_ = 0;
    long abs_precision_ = 0;
    std::vector<FieldElement> c_;  // coefficients of t^start .. t^(N-1)

    void normalize();

  public:
    LaurentSeries() = default;
    LaurentSeries(FieldPtr field, long start, std::vector<FieldElement> coeffs, long abs_precision);

    static LaurentSeries zero(FieldPtr const & field, long abs_precision);
    /* c t^k known modulo t^(k + relative_precision). */
    static LaurentSeries monomial(FieldElement const & c, long k, long relative_precision);
    static LaurentSeries one(FieldPtr const & field, long relative_precision);

    FieldPtr const & field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /* Throws CheckFailure on a series that vanishes to its precision. */
    long valuation() const;
    std::optional<long> valuation_if_known() const;
    long abs_precision() const { return abs_precision_; }
    long relative_precision() const { return abs_precision_ - valuation(); }
    FieldElement coefficient(long k) const;
    FieldElement leading() const { return coefficient(valuation()); }

    LaurentSeries truncated(long abs_precision) const;
    LaurentSeries shifted(long k) const;
    LaurentSeries scaled(FieldElement const & s) const;

    LaurentSeries & operator+=(LaurentSeries const & o);
    LaurentSeries & operator-=(LaurentSeries const & o);
    friend LaurentSeries operator+(LaurentSeries a, LaurentSeries const & b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, LaurentSeries const & b) { return a -= b; }
    friend LaurentSeries operator*(LaurentSeries const & a, LaurentSeries const & b);
    LaurentSeries operator-() const;

    LaurentSeries inverse() const;
    LaurentSeries pow(long n) const;
    /* d/dt */
    LaurentSeries derivative() const;
    /* Square root of a unit with leading coefficient 1 (odd characteristic). */
    LaurentSeries sqrt_unit() const;

    std::string str(int max_terms = 8) const;
};

LaurentSeries operator/(LaurentSeries const & a, LaurentSeries const & b);

}  // namespace svlab::charp

#endif
