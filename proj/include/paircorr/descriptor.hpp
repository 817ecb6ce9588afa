#pragma once

#include <cstdint>
#include <string>

#include "paircorr/fixed_point.hpp"

namespace paircorr {

// alpha-spec grammar: golden | sqrt:<k> | ratio:<p>/<q> | bits:<hex>
FixedPoint parse_alpha_spec(const std::string& spec, unsigned scale_bits);

// Generator descriptors:
//   kronecker:<alpha-spec>
//   vdc:<b>
//   ls:<L>,<S>
//   digital:<b>,<matrix>      matrix = identity[:<m>] | duprow[:<m>] | file path
//   shift:<stream-spec>,<b>   stream = champernowne | debruijn:<k>[:<M>] |
//                             word:<path> | periodic:<digits> | literal:<digits> | zeros
//   random:<seed>
//   stoneham[:<w>]
// Unsized digital matrices and stoneham grow to cover the requested N.
PointSet generate_points(const std::string& descriptor, std::uint64_t n,
                         unsigned scale_bits = kDefaultScaleBits);

}  // namespace paircorr
