#include "paircorr/gaps.hpp"

#include <algorithm>

#include "paircorr/correlation.hpp"
#include "paircorr/descriptor.hpp"

namespace paircorr {

mpq_class GapProfile::length(std::size_t i) const {
    mpq_class v(entries.at(i).length_num, pow2(scale_bits));
    v.canonicalize();
    return v;
}

mpq_class default_gap_tolerance(unsigned scale_bits) {
    if (scale_bits <= 16) return 0;
    mpq_class t(1, pow2(scale_bits - 16));
    t.canonicalize();
    return t;
}

GapProfile gap_profile(const PointSet& ps, const mpq_class& tolerance) {
    const std::size_t n = ps.size();
    if (n < 2) throw DegenerateInputError("gap profile requires N >= 2");
    if (tolerance < 0) throw InvalidParamsError("tolerance must be non-negative");

    std::vector<mpz_class> sorted(ps.numerators());
    std::sort(sorted.begin(), sorted.end());
    std::vector<mpz_class> gaps;
    gaps.reserve(n);
    for (std::size_t i = 1; i < n; ++i) gaps.push_back(sorted[i] - sorted[i - 1]);
    gaps.push_back(pow2(ps.scale_bits()) - sorted[n - 1] + sorted[0]);  // wraparound
    std::sort(gaps.begin(), gaps.end());

    // single-linkage: a new cluster starts where the successive difference
    // exceeds the tolerance; tolerance * 2^P as an exact rational bound
    const mpz_class tol_num = tolerance.get_num() << ps.scale_bits();
    const mpz_class tol_den = tolerance.get_den();

    GapProfile prof;
    prof.scale_bits = ps.scale_bits();
    prof.tolerance = tolerance;
    prof.n_points = n;
    GapProfile::Entry cur{gaps[0], 1};
    for (std::size_t i = 1; i < n; ++i) {
        if ((gaps[i] - gaps[i - 1]) * tol_den > tol_num) {
            prof.entries.push_back(std::move(cur));
            cur = GapProfile::Entry{gaps[i], 1};
        } else {
            ++cur.multiplicity;
        }
    }
    prof.entries.push_back(std::move(cur));
    return prof;
}

GapScanner::GapScanner(unsigned scale_bits) : modulus_(pow2(scale_bits)) {
    if (scale_bits == 0) throw InvalidParamsError("scale_bits must be positive");
}

void GapScanner::remove_gap(const mpz_class& g) {
    auto it = gaps_.find(g);
    if (it == gaps_.end()) throw Error("gap bookkeeping lost a gap");
    if (--it->second == 0) gaps_.erase(it);
}

void GapScanner::insert(const mpz_class& numerator) {
    if (numerator < 0 || numerator >= modulus_)
        throw InvalidParamsError("numerator outside [0, 2^scale_bits)");
    ++n_;
    if (points_.empty()) {
        points_.emplace(numerator, 1);
        gaps_.emplace(modulus_, 1);  // a single point spans the whole circle
        return;
    }
    auto hit = points_.find(numerator);
    if (hit != points_.end()) {
        ++hit->second;
        ++gaps_[mpz_class(0)];
        return;
    }
    auto succ = points_.upper_bound(numerator);
    auto pred = succ;
    if (pred == points_.begin()) pred = points_.end();
    --pred;
    if (succ == points_.end()) succ = points_.begin();

    const mpz_class& p = pred->first;
    const mpz_class& s = succ->first;
    mpz_class old_gap;
    if (points_.size() == 1) {
        old_gap = modulus_;
    } else {
        old_gap = s - p;
        if (old_gap <= 0) old_gap += modulus_;
    }
    remove_gap(old_gap);
    mpz_class g1 = numerator - p;
    if (g1 <= 0) g1 += modulus_;
    mpz_class g2 = s - numerator;
    if (g2 <= 0) g2 += modulus_;
    ++gaps_[g1];
    ++gaps_[g2];
    points_.emplace(numerator, 1);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> gap_scan(
    const std::string& descriptor, const std::vector<std::uint64_t>& n_list,
    const mpq_class& tolerance, unsigned scale_bits) {
    if (n_list.empty()) throw InvalidParamsError("empty N list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] == 0 || (i > 0 && n_list[i] <= n_list[i - 1]))
            throw InvalidParamsError("N list must be positive and strictly ascending");
    }
    const PointSet ps = generate_points(descriptor, n_list.back(), scale_bits);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(n_list.size());
    if (tolerance == 0) {
        GapScanner scan(scale_bits);
        std::size_t want = 0;
        for (std::uint64_t i = 0; i < ps.size() && want < n_list.size(); ++i) {
            scan.insert(ps.numerators()[i]);
            if (scan.size() == n_list[want]) {
                out.emplace_back(n_list[want], scan.distinct_gaps());
                ++want;
            }
        }
    } else {
        for (std::uint64_t n : n_list)
            out.emplace_back(n, gap_profile(ps.prefix(n), tolerance).distinct());
    }
    return out;
}

ScreenVerdict screen_structured(const PointSet& ps, const PointSet* reference,
                                unsigned s_max, const mpq_class& kappa,
                                const mpq_class& tolerance) {
    if (reference && reference->scale_bits() != ps.scale_bits())
        throw PrecisionMismatchError("screen_structured: scale_bits mismatch");

    ScreenVerdict v;
    const GapProfile own = gap_profile(ps, tolerance);
    v.evidence.push_back({"primary", ps.size(), own.distinct(), std::nullopt});
    if (own.distinct() <= s_max) {
        v.witness = true;
        v.route = "gap-structure";
        return v;
    }
    if (reference) {
        const GapProfile ref = gap_profile(*reference, tolerance);
        const mpq_class inter = intersection_fraction(ps, *reference);
        v.evidence.push_back({"reference", reference->size(), ref.distinct(), inter});
        if (ref.distinct() <= s_max && inter >= kappa) {
            v.witness = true;
            v.route = "intersection";
        }
    }
    return v;
}

}  // namespace paircorr
