#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paircorr/fixed_point.hpp"

namespace paircorr {

// Distinct circular neighbour-gap lengths with multiplicities, ascending.
// Lengths are numerators on the point set's 2^scale_bits grid; clustering
// is single-linkage with the given absolute tolerance (0 = exact).
struct GapProfile {
    struct Entry {
        mpz_class length_num;  // cluster minimum
        std::uint64_t multiplicity = 0;
    };
    std::vector<Entry> entries;
    unsigned scale_bits = 0;
    mpq_class tolerance;
    std::uint64_t n_points = 0;

    std::size_t distinct() const { return entries.size(); }
    mpq_class length(std::size_t i) const;
};

// Default clustering tolerance for base-converted generators: 2^-(P-16).
mpq_class default_gap_tolerance(unsigned scale_bits);

GapProfile gap_profile(const PointSet& ps, const mpq_class& tolerance);

// Incremental exact (tolerance 0) gap counting; one O(log N) update per
// appended point, so whole prefix families scan in near-linear time.
class GapScanner {
  public:
    explicit GapScanner(unsigned scale_bits);

    void insert(const mpz_class& numerator);
    std::size_t distinct_gaps() const { return gaps_.size(); }
    std::uint64_t size() const { return n_; }

  private:
    std::map<mpz_class, std::uint64_t> points_;  // value -> multiplicity
    std::map<mpz_class, std::uint64_t> gaps_;    // gap length -> count
    mpz_class modulus_;
    std::uint64_t n_ = 0;

    void remove_gap(const mpz_class& g);
};

// Distinct-gap counts of the first N points of a generated sequence for
// each N in the ascending list. Exact-tolerance scans run incrementally.
std::vector<std::pair<std::uint64_t, std::uint64_t>> gap_scan(
    const std::string& descriptor, const std::vector<std::uint64_t>& n_list,
    const mpq_class& tolerance, unsigned scale_bits = kDefaultScaleBits);

// Sufficient-condition screen for the structured non-Poissonian witnesses:
// (a) the set itself shows at most s_max distinct gaps, or (b) a supplied
// reference does and the set shares at least kappa * N of its values.
struct ScreenVerdict {
    struct Row {
        std::string which;
        std::uint64_t n = 0;
        std::uint64_t distinct_gaps = 0;
        std::optional<mpq_class> intersection;
    };
    bool witness = false;
    std::string route;  // "gap-structure", "intersection" or ""
    std::vector<Row> evidence;

    const char* verdict() const {
        return witness ? "structured-non-poissonian-witness" : "no-witness-found";
    }
};

ScreenVerdict screen_structured(const PointSet& ps, const PointSet* reference,
                                unsigned s_max, const mpq_class& kappa,
                                const mpq_class& tolerance);

}  // namespace paircorr
