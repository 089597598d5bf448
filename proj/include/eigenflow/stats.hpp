#pragma once

#include <map>
#include <vector>

#include "eigenflow/common.hpp"
#include "eigenflow/spectra.hpp"

namespace eigenflow::stats {

struct UnitCircleRow {
    int n = 0;
    double pct_within = 0.0;
    long total = 0;
    long within = 0;
    long left_out = 0;
};

struct BinHistogram {
    int n = 0;
    double bin_start = 0.0;
    double bin_width = 0.0;
    int bin_count = 0;
    std::map<int, long> counts;   // bin index -> count; zero bins retained
    long out_of_range = 0;

    double lower_edge(int index) const { return bin_start + index * bin_width; }
    double upper_edge(int index) const { return bin_start + (index + 1) * bin_width; }
    long total() const;
};

struct LogisticFit {
    double L = 0.0;
    double k = 0.0;
    double x0 = 0.0;
    double sse = 0.0;
};

// Anchored model f(x) = (100 - c) e^{-b(x-10)} + c, so f(10) = 100 holds by
// construction.
struct ExpDecayFit {
    double b = 0.0;
    double c = 0.0;
    double sse = 0.0;
};

// Membership rule: 1-eps <= modulus_recip < 1+eps (half-open, matching the
// [0.99, 1.01) histogram bin).
std::vector<UnitCircleRow> unit_circle_table(const spectra::EigenSet& es, double eps,
                                             const std::vector<int>& sizes);

BinHistogram bin_histogram(const spectra::EigenSet& es, int n, double bin_start = 0.49,
                           double bin_width = 0.02, int bin_count = 57);

LogisticFit fit_logistic(const std::vector<double>& xs, const std::vector<double>& ys);

ExpDecayFit fit_exp_decay_constrained(const std::vector<double>& xs,
                                      const std::vector<double>& ys);

// Minimum Euclidean distance from e^{i angle} to any reciprocal in the set,
// one entry per angle. The distance runs over every record: restricting to
// the [1-eps_ring, 1+eps_ring) band would leave whole arcs uncovered below
// n_max ~ 200, so eps_ring is validated but does not filter.
std::vector<double> density_probe(const spectra::EigenSet& es,
                                  const std::vector<double>& angles, double eps_ring = 0.01);

double logistic_eval(double L, double k, double x0, double x);
double exp_decay_eval(double b, double c, double x);
double logistic_sse(double L, double k, double x0, const std::vector<double>& xs,
                    const std::vector<double>& ys);

}  // namespace eigenflow::stats
