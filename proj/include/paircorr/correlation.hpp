#pragma once

#include <vector>

#include "paircorr/fixed_point.hpp"

namespace paircorr {

// One evaluation of F_N(s) = count / N, where count is the number of
// ordered pairs l != m with ||x_l - x_m|| <= s/N.
struct CorrelationSample {
    mpq_class s;
    unsigned long long count = 0;
    mpq_class f_value;

    double f() const { return f_value.get_d(); }
};

// Exact pair counting by a sorted circular sweep: O(N log N) regardless of
// the count. Distances exactly equal to s/N are included; the rational
// threshold is rounded up to the coordinate grid, so a pair whose ideal
// distance ties the threshold still counts after its points were rounded
// onto the grid (exactly representable thresholds are unaffected).
CorrelationSample pair_correlation(const PointSet& ps, const mpq_class& s);

// Shares one sort across a strictly ascending non-negative grid.
std::vector<CorrelationSample> pair_correlation_curve(const PointSet& ps,
                                                      const std::vector<mpq_class>& s_grid);

// max over k of |#{points in [k/bins,(k+1)/bins)}/N - 1/bins|, exact.
mpq_class equidist_deviation(const PointSet& ps, unsigned long bins);

// |distinct values of a  ∩  distinct values of b| / |a|, exact.
mpq_class intersection_fraction(const PointSet& a, const PointSet& b);

}  // namespace paircorr
