#pragma once

#include <string>
#include <vector>

#include "paircorr/correlation.hpp"
#include "paircorr/energy.hpp"
#include "paircorr/fixed_point.hpp"
#include "paircorr/gaps.hpp"
#include "paircorr/stoneham.hpp"
#include "paircorr/words.hpp"

namespace paircorr {

// All writers emit the final file atomically (temp file + rename).
void atomic_write(const std::string& path, const std::string& content);

// header: index,numerator,scale_bits,decimal  (decimal is informational)
std::string points_csv(const PointSet& ps);
void write_points_csv(const std::string& path, const PointSet& ps);
PointSet read_points_csv(const std::string& path);

// header: s,count,f
std::string correlation_csv(const std::vector<CorrelationSample>& samples);

// header: length_numerator,scale_bits,multiplicity
std::string gap_csv(const GapProfile& profile);

// header: N,distinct_gaps
std::string scan_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows);

// header: N,energy,ratio
std::string energy_csv(const std::vector<EnergyReport>& reports);

// header: n,numerator,exponent
std::string z_csv(const std::vector<TernaryRational>& zs);

// Word file: "k m" then the symbols (contiguous digits for k <= 10,
// space-separated otherwise). m records the order the word claims.
void write_word_file(const std::string& path, const Word& w, unsigned order);
std::pair<Word, unsigned> read_word_file(const std::string& path);

// Plain-text digit matrix, one row per line, space-separated.
std::vector<std::vector<unsigned>> read_matrix_file(const std::string& path);

// Rational text: "2", "0.25" or "8/3".
mpq_class parse_rational(const std::string& text);

// Exact decimal when the denominator is 2^a 5^b, otherwise "p/q".
std::string format_rational(const mpq_class& q);

// Deterministic fixed-point decimal with 12 fractional digits.
std::string format_rational_fixed(const mpq_class& q);

}  // namespace paircorr
