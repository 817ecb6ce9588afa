#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paircorr/fixed_point.hpp"

namespace paircorr {

// Binary approximation of alpha_{2,3} = sum 1/(3^m 2^(3^m)):
// |numerator/2^bits - alpha| <= error_ulps * 2^-bits.
struct StonehamBits {
    mpz_class numerator;
    unsigned bits = 0;
    unsigned error_ulps = 2;
};

// Partial sum with 64 guard bits, rounded to `bits`.
StonehamBits stoneham_bits(unsigned bits);

// c / 3^q in [0,1), reduced so that 3 does not divide c (c = 0 has q = 0).
struct TernaryRational {
    mpz_class c;
    unsigned q = 0;

    bool operator==(const TernaryRational& o) const { return q == o.q && c == o.c; }
};

// z_0 = 0; z_n = {2 z_{n-1} + r_n} with r_n = 1/n when n is a power of 3,
// else 0. Returns z_0..z_{n_max}, exact.
std::vector<TernaryRational> z_sequence(std::uint64_t n_max);

// Structure of z_0 .. z_{3^(q+1)-1}: every element is a multiple of 1/3^q,
// every attained value occurs exactly three times, and the reduced
// numerators are coprime to 3 (zero excepted).
struct ZStructureReport {
    unsigned q = 0;
    std::uint64_t checked = 0;
    std::uint64_t distinct_values = 0;
    bool multiples_ok = true;
    bool triples_ok = true;
    bool coprime_ok = true;
    std::optional<std::uint64_t> counterexample;

    bool ok() const { return multiples_ok && triples_ok && coprime_ok; }
};

ZStructureReport verify_z_structure(unsigned q);

// x_n = {2^n alpha_{2,3}} for n = 0..2^w - 1, extracted by shifting one
// high-precision rendering of alpha (alpha_bits 0 = automatic 2^w + 128).
// Every point carries scale_bits true fractional bits; insufficient
// alpha_bits raise InsufficientPrecisionError rather than degrade.
PointSet stoneham_points(unsigned w, unsigned long alpha_bits = 0,
                         unsigned scale_bits = kDefaultScaleBits);

// (value >> low_bit) mod 2^width without copying the whole number.
mpz_class extract_bits(const mpz_class& value, unsigned long low_bit, unsigned width);

}  // namespace paircorr
