#include "paircorr/correlation.hpp"

#include <algorithm>
#include <map>

namespace paircorr {

namespace {

// Ordered-pair count at integer threshold radius on the 2^P circle.
//
// doubled holds the sorted numerators followed by the same values + 2^P.
// For each point we count elements of the forward window [a_i, a_i + radius]
// (one representative per other point lands there when radius < 2^(P-1)),
// which sees every unordered pair with 0 < gap <= radius once and every
// zero-gap pair twice; ordered count = 2*forward - 2*zero_pairs.
unsigned long long count_within(const std::vector<mpz_class>& doubled, std::size_t n,
                                const mpz_class& radius,
                                unsigned long long zero_pairs) {
    unsigned long long forward = 0;
    std::size_t lo = 0, hi = 0;
    mpz_class upper;
    for (std::size_t i = 0; i < n; ++i) {
        upper = doubled[i] + radius;
        while (lo < i && doubled[lo] < doubled[i]) ++lo;
        if (hi < lo) hi = lo;
        while (hi < 2 * n && doubled[hi] <= upper) ++hi;
        forward += (hi - lo) - 1;  // window always contains the point itself
    }
    return 2 * forward - 2 * zero_pairs;
}

unsigned long long count_zero_pairs(const std::vector<mpz_class>& sorted, std::size_t n) {
    unsigned long long pairs = 0, run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && sorted[i] == sorted[i - 1]) {
            ++run;
        } else {
            pairs += run * (run - 1) / 2;
            run = 1;
        }
    }
    return pairs;
}

// ceil(s * 2^P / N): the inclusive integer radius equivalent to "<= s/N".
mpz_class threshold_radius(const mpq_class& s, std::size_t n, unsigned bits) {
    mpz_class num = s.get_num() << bits;
    mpz_class den = s.get_den() * static_cast<unsigned long>(n);
    mpz_class t;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return t;
}

}  // namespace

std::vector<CorrelationSample> pair_correlation_curve(const PointSet& ps,
                                                      const std::vector<mpq_class>& s_grid) {
    const std::size_t n = ps.size();
    if (n < 2) throw DegenerateInputError("pair correlation requires N >= 2");
    if (s_grid.empty()) throw InvalidGridError("empty s grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (s_grid[i] < 0) throw InvalidGridError("negative s value");
        if (i > 0 && !(s_grid[i - 1] < s_grid[i]))
            throw InvalidGridError("s grid must be strictly ascending");
    }

    const mpz_class modulus = pow2(ps.scale_bits());
    std::vector<mpz_class> doubled(ps.numerators());
    std::sort(doubled.begin(), doubled.end());
    const unsigned long long zero_pairs = count_zero_pairs(doubled, n);
    doubled.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) doubled.push_back(doubled[i] + modulus);

    const mpz_class half = modulus >> 1;
    std::vector<CorrelationSample> out;
    out.reserve(s_grid.size());
    for (const mpq_class& s : s_grid) {
        CorrelationSample cs;
        cs.s = s;
        const mpz_class radius = threshold_radius(s, n, ps.scale_bits());
        if (radius >= half) {
            // every circular distance is <= 1/2 <= s/N
            cs.count = static_cast<unsigned long long>(n) * (n - 1);
        } else {
            cs.count = count_within(doubled, n, radius, zero_pairs);
        }
        cs.f_value = mpq_class(static_cast<unsigned long>(cs.count),
                               static_cast<unsigned long>(n));
        cs.f_value.canonicalize();
        out.push_back(std::move(cs));
    }
    return out;
}

CorrelationSample pair_correlation(const PointSet& ps, const mpq_class& s) {
    if (s < 0) throw InvalidGridError("negative s value");
    return pair_correlation_curve(ps, {s}).front();
}

mpq_class equidist_deviation(const PointSet& ps, unsigned long bins) {
    if (bins == 0) throw InvalidParamsError("bins must be >= 1");
    std::vector<unsigned long long> counts(bins, 0);
    mpz_class idx;
    for (const mpz_class& num : ps.numerators()) {
        idx = num * bins;
        mpz_tdiv_q_2exp(idx.get_mpz_t(), idx.get_mpz_t(), ps.scale_bits());
        ++counts[idx.get_ui()];
    }
    const mpq_class uniform(1, bins);
    mpq_class best = 0;
    for (unsigned long k = 0; k < bins; ++k) {
        mpq_class dev(static_cast<unsigned long>(counts[k]),
                      static_cast<unsigned long>(ps.size()));
        dev.canonicalize();
        dev -= uniform;
        if (dev < 0) dev = -dev;
        if (dev > best) best = dev;
    }
    return best;
}

mpq_class intersection_fraction(const PointSet& a, const PointSet& b) {
    if (a.scale_bits() != b.scale_bits())
        throw PrecisionMismatchError("intersection_fraction: scale_bits mismatch");
    std::vector<mpz_class> va(a.numerators()), vb(b.numerators());
    std::sort(va.begin(), va.end());
    va.erase(std::unique(va.begin(), va.end()), va.end());
    std::sort(vb.begin(), vb.end());
    vb.erase(std::unique(vb.begin(), vb.end()), vb.end());
    unsigned long long shared = 0;
    std::size_t i = 0, j = 0;
    while (i < va.size() && j < vb.size()) {
        const int c = cmp(va[i], vb[j]);
        if (c == 0) {
            ++shared;
            ++i;
            ++j;
        } else if (c < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    mpq_class r(static_cast<unsigned long>(shared), static_cast<unsigned long>(a.size()));
    r.canonicalize();
    return r;
}

}  // namespace paircorr
