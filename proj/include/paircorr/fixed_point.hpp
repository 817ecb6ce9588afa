#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "paircorr/errors.hpp"

namespace paircorr {

inline constexpr unsigned kDefaultScaleBits = 128;

// 2^bits as an arbitrary-precision integer.
mpz_class pow2(unsigned long bits);

// Exact coordinate in [0,1): numerator / 2^scale_bits.
//
// All sequence families are rendered onto this one binary grid so that
// comparisons, distances and thresholds are single exact integer operations.
class FixedPoint {
  public:
    FixedPoint(mpz_class numerator, unsigned scale_bits);

    // num/den reduced mod 1 and rounded to the nearest grid point
    // (a value that rounds up to 1 wraps to 0, which is the nearest
    // point on the circle).
    static FixedPoint from_ratio(const mpz_class& num, const mpz_class& den,
                                 unsigned scale_bits);

    const mpz_class& numerator() const { return num_; }
    unsigned scale_bits() const { return bits_; }
    mpq_class value() const;
    double to_double() const;

    bool operator==(const FixedPoint& o) const;
    bool operator!=(const FixedPoint& o) const { return !(*this == o); }

  private:
    mpz_class num_;
    unsigned bits_;
};

// Distance to the nearest integer between two coordinates on the circle,
// exact, in [0, 1/2]. Throws PrecisionMismatchError on unequal scales.
mpq_class frac_dist(const FixedPoint& x, const FixedPoint& y);

// Ordered finite list of coordinates sharing one scale.
class PointSet {
  public:
    PointSet(std::vector<mpz_class> numerators, unsigned scale_bits,
             std::string provenance);

    std::size_t size() const { return nums_.size(); }
    unsigned scale_bits() const { return bits_; }
    const std::vector<mpz_class>& numerators() const { return nums_; }
    FixedPoint at(std::size_t i) const;  // 0-based
    const std::string& provenance() const { return provenance_; }

    // First n points, same scale and provenance.
    PointSet prefix(std::size_t n) const;

  private:
    std::vector<mpz_class> nums_;
    unsigned bits_;
    std::string provenance_;
};

// Decimal rendering of num/2^bits with sig_digits significant digits.
// Output convenience only; never parsed back.
std::string decimal_string(const mpz_class& num, unsigned bits, int sig_digits = 20);

// Exact rational -> rounded-to-nearest numerator on the 2^bits grid,
// reduced mod 1 first. Shared by every non-binary generator.
mpz_class dyadic_from_ratio(const mpz_class& num, const mpz_class& den, unsigned bits);

}  // namespace paircorr
