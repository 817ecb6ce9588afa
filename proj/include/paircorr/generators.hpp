#pragma once

#include <cstdint>
#include <vector>

#include "paircorr/fixed_point.hpp"
#include "paircorr/words.hpp"

namespace paircorr {

// L long intervals of length beta, then S short ones of length beta^2,
// where beta solves L*beta + S*beta^2 = 1 in (0,1).
struct LSParams {
    unsigned L = 1;
    unsigned S = 1;
};

// Interval counts after n refinements: t = l + s intervals, l of length
// beta^n and s of length beta^(n+1).
struct LSState {
    unsigned level = 0;
    std::uint64_t t = 1;
    std::uint64_t l = 1;
    std::uint64_t s = 0;
};

// beta truncated to `bits` fractional binary digits (numerator over 2^bits).
mpz_class ls_beta_numerator(const LSParams& p, unsigned bits);

// Counting recursion: l' = L*l + s, s' = S*l.
LSState ls_counts(const LSParams& p, unsigned level);

// Generator-matrix digits over Z mod base (base prime); row i produces the
// digit placed at base^-(i+1). t is descriptive quality, not used to build.
struct DigitalParams {
    unsigned base = 2;
    std::vector<std::vector<unsigned>> matrix;
    unsigned t_quality = 0;
};

DigitalParams digital_identity(unsigned base, unsigned m);
// identity with row 1 replaced by row 0 (quality t = 1).
DigitalParams digital_duplicated_row(unsigned base, unsigned m);

// x_n = {n * alpha}, n = 1..N, exact on alpha's grid. alpha_spec labels the
// provenance; when empty the truncated numerator is recorded in hex.
PointSet kronecker(const FixedPoint& alpha, std::uint64_t n,
                   const std::string& alpha_spec = "");

// Radical inverse of n in base b, n = 1..N.
PointSet van_der_corput(unsigned base, std::uint64_t n,
                        unsigned scale_bits = kDefaultScaleBits);

// First N points of the LS-sequence (left endpoints of the refinement
// levels in their canonical order, starting at 0).
PointSet ls_sequence(const LSParams& p, std::uint64_t n,
                     unsigned scale_bits = kDefaultScaleBits);

// y_n for n = 0..N-1 from the digital method.
PointSet digital_sequence(const DigitalParams& p, std::uint64_t n,
                          unsigned scale_bits = kDefaultScaleBits);

// x_n = {b^n alpha} for n = 1..N where alpha = 0.a1 a2 ... is read from the
// stream; each point is rendered from scale-filling digits plus guard
// digits, so the stored rounding equals the rounding of the true value
// unless the discarded tail crosses a rounding boundary.
PointSet shift_sequence(const DigitStream& stream, std::uint64_t n,
                        unsigned guard_digits = 64,
                        unsigned scale_bits = kDefaultScaleBits);

// Seeded uniform points; identical seed -> identical set.
PointSet random_points(std::uint64_t n, std::uint64_t seed,
                       unsigned scale_bits = kDefaultScaleBits);

// Common alpha constructions for kronecker (all truncated to scale_bits).
FixedPoint golden_ratio_alpha(unsigned scale_bits = kDefaultScaleBits);
FixedPoint sqrt_alpha(unsigned long k, unsigned scale_bits = kDefaultScaleBits);

}  // namespace paircorr
