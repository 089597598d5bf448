#include "eigenflow/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

namespace eigenflow::stats {

long BinHistogram::total() const {
    long sum = out_of_range;
    for (const auto& [idx, c] : counts) sum += c;
    return sum;
}

std::vector<UnitCircleRow> unit_circle_table(const spectra::EigenSet& es, double eps,
                                             const std::vector<int>& sizes) {
    if (eps <= 0.0) throw InvalidArgument("eps must be > 0");
    for (int n : sizes) {
        if (n < 2) throw InvalidArgument("table size must be >= 2");
        if (n > es.n_max) throw RangeError("table size exceeds eigenset n_max");
    }
    const double lo = 1.0 - eps;
    const double hi = 1.0 + eps;
    std::vector<UnitCircleRow> rows;
    rows.reserve(sizes.size());
    for (int n : sizes) {
        UnitCircleRow row;
        row.n = n;
        for (const auto& rec : es.records) {
            if (rec.k > n) continue;
            ++row.total;
            if (rec.modulus_recip >= lo && rec.modulus_recip < hi) ++row.within;
        }
        row.left_out = row.total - row.within;
        row.pct_within = row.total > 0 ? 100.0 * static_cast<double>(row.within) /
                                             static_cast<double>(row.total)
                                       : 0.0;
        rows.push_back(row);
    }
    return rows;
}

BinHistogram bin_histogram(const spectra::EigenSet& es, int n, double bin_start,
                           double bin_width, int bin_count) {
    if (bin_width <= 0.0) throw InvalidArgument("bin_width must be > 0");
    if (bin_count < 1) throw InvalidArgument("bin_count must be >= 1");
    if (n < 2) throw InvalidArgument("n must be >= 2");
    if (n > es.n_max) throw RangeError("n exceeds eigenset n_max");

    BinHistogram h;
    h.n = n;
    h.bin_start = bin_start;
    h.bin_width = bin_width;
    h.bin_count = bin_count;
    for (int j = 0; j < bin_count; ++j) h.counts[j] = 0;

    for (const auto& rec : es.records) {
        if (rec.k > n) continue;
        const double m = rec.modulus_recip;
        int j = static_cast<int>(std::floor((m - bin_start) / bin_width));
        // Snap to the half-open edge convention [start + j*w, start + (j+1)*w)
        // in case the division rounded across an edge.
        while (j >= 0 && m < h.lower_edge(j)) --j;
        while (m >= h.upper_edge(j)) ++j;
        if (j >= 0 && j < bin_count)
            ++h.counts[j];
        else
            ++h.out_of_range;
    }
    return h;
}

namespace {

// Gaussian elimination with partial pivoting for the tiny LM normal systems.
template <std::size_t P>
bool solve_linear(std::array<std::array<double, P>, P> a, std::array<double, P> b,
                  std::array<double, P>& x) {
    for (std::size_t col = 0; col < P; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < P; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0 || !std::isfinite(a[piv][col])) return false;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < P; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < P; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t ri = P; ri-- > 0;) {
        double acc = b[ri];
        for (std::size_t c = ri + 1; c < P; ++c) acc -= a[ri][c] * x[c];
        x[ri] = acc / a[ri][ri];
    }
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

// Damped least squares on a model with P parameters. `eval` fills the model
// value and the jacobian row for one data point.
template <std::size_t P>
struct LevMar {
    using Eval = std::function<void(const std::array<double, P>&, double x, double& value,
                                    std::array<double, P>& jac)>;

    static double sse_of(const Eval& eval, const std::array<double, P>& params,
                         const std::vector<double>& xs, const std::vector<double>& ys) {
        double sse = 0.0;
        std::array<double, P> jac{};
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double value = 0.0;
            eval(params, xs[i], value, jac);
            const double r = value - ys[i];
            sse += r * r;
        }
        return sse;
    }

    static std::pair<std::array<double, P>, double> minimize(
        const Eval& eval, std::array<double, P> params, const std::vector<double>& xs,
        const std::vector<double>& ys) {
        double sse = sse_of(eval, params, xs, ys);
        double lambda = 1e-3;
        for (int iter = 0; iter < 400; ++iter) {
            std::array<std::array<double, P>, P> hess{};
            std::array<double, P> grad{};
            std::array<double, P> jac{};
            for (std::size_t i = 0; i < xs.size(); ++i) {
                double value = 0.0;
                eval(params, xs[i], value, jac);
                const double r = value - ys[i];
                for (std::size_t a = 0; a < P; ++a) {
                    grad[a] += jac[a] * r;
                    for (std::size_t b = 0; b < P; ++b) hess[a][b] += jac[a] * jac[b];
                }
            }
            bool advanced = false;
            for (int raise = 0; raise < 40; ++raise) {
                auto damped = hess;
                for (std::size_t a = 0; a < P; ++a) {
                    const double d = hess[a][a] > 0.0 ? hess[a][a] : 1.0;
                    damped[a][a] += lambda * d;
                }
                std::array<double, P> rhs{};
                for (std::size_t a = 0; a < P; ++a) rhs[a] = -grad[a];
                std::array<double, P> step{};
                if (solve_linear<P>(damped, rhs, step)) {
                    auto trial = params;
                    for (std::size_t a = 0; a < P; ++a) trial[a] += step[a];
                    const double trial_sse = sse_of(eval, trial, xs, ys);
                    if (std::isfinite(trial_sse) && trial_sse <= sse) {
                        const double gain = sse - trial_sse;
                        params = trial;
                        sse = trial_sse;
                        lambda = std::max(lambda * 0.1, 1e-14);
                        advanced = true;
                        if (gain <= 1e-15 * std::max(1.0, sse)) return {params, sse};
                        break;
                    }
                }
                lambda *= 10.0;
                if (lambda > 1e14) return {params, sse};
            }
            if (!advanced) return {params, sse};
        }
        return {params, sse};
    }
};

double clamped_exp(double u) { return std::exp(std::clamp(u, -700.0, 700.0)); }

}  // namespace

double logistic_eval(double L, double k, double x0, double x) {
    return L / (1.0 + clamped_exp(-k * (x - x0)));
}

double exp_decay_eval(double b, double c, double x) {
    return (100.0 - c) * clamped_exp(-b * (x - 10.0)) + c;
}

double logistic_sse(double L, double k, double x0, const std::vector<double>& xs,
                    const std::vector<double>& ys) {
    double sse = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = logistic_eval(L, k, x0, xs[i]) - ys[i];
        sse += r * r;
    }
    return sse;
}

LogisticFit fit_logistic(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw InvalidArgument("xs and ys must have equal length");
    if (xs.size() < 4) throw InvalidArgument("logistic fit needs at least 4 points");
    for (double y : ys)
        if (!(y >= 0.0 && y <= 110.0))
            throw InvalidArgument("logistic fit expects percentages in [0, 110]");
    const auto [min_y, max_y] = std::minmax_element(ys.begin(), ys.end());
    if (*min_y == *max_y)
        throw FitError("ill-conditioned logistic fit: zero-variance data", {}, 0.0);

    const LevMar<3>::Eval eval = [](const std::array<double, 3>& p, double x, double& value,
                                    std::array<double, 3>& jac) {
        const double s = 1.0 / (1.0 + clamped_exp(-p[1] * (x - p[2])));
        value = p[0] * s;
        const double ds = s * (1.0 - s);
        jac[0] = s;
        jac[1] = p[0] * ds * (x - p[2]);
        jac[2] = -p[0] * ds * p[1];
    };

    // Deterministic multistart over the fixed grid; keeps the best minimum.
    bool have = false;
    std::array<double, 3> best{};
    double best_sse = std::numeric_limits<double>::infinity();
    for (double L0 : {50.0, 80.0, 100.0})
        for (double k0 : {0.01, 0.03, 0.1})
            for (double x00 : {50.0, 100.0, 200.0}) {
                const auto [p, sse] = LevMar<3>::minimize(eval, {L0, k0, x00}, xs, ys);
                if (std::isfinite(sse) && sse < best_sse) {
                    best = p;
                    best_sse = sse;
                    have = true;
                }
            }
    if (!have)
        throw FitError("logistic fit did not converge from any start",
                       {best[0], best[1], best[2]}, best_sse);
    return LogisticFit{best[0], best[1], best[2], best_sse};
}

ExpDecayFit fit_exp_decay_constrained(const std::vector<double>& xs,
                                      const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw InvalidArgument("xs and ys must have equal length");
    if (xs.size() < 3) throw InvalidArgument("exponential fit needs at least 3 points");
    if (*std::max_element(xs.begin(), xs.end()) < 10.0)
        throw InvalidArgument("exponential fit expects xs reaching the anchor x = 10");

    const LevMar<2>::Eval eval = [](const std::array<double, 2>& p, double x, double& value,
                                    std::array<double, 2>& jac) {
        const double e = clamped_exp(-p[0] * (x - 10.0));
        value = (100.0 - p[1]) * e + p[1];
        jac[0] = (100.0 - p[1]) * -(x - 10.0) * e;
        jac[1] = 1.0 - e;
    };

    bool have = false;
    std::array<double, 2> best{};
    double best_sse = std::numeric_limits<double>::infinity();
    for (double b0 : {0.005, 0.02, 0.05, 0.1})
        for (double c0 : {0.0, 5.0, 50.0}) {
            const auto [p, sse] = LevMar<2>::minimize(eval, {b0, c0}, xs, ys);
            if (std::isfinite(sse) && sse < best_sse) {
                best = p;
                best_sse = sse;
                have = true;
            }
        }
    if (!have)
        throw FitError("exponential fit did not converge from any start", {best[0], best[1]},
                       best_sse);
    return ExpDecayFit{best[0], best[1], best_sse};
}

std::vector<double> density_probe(const spectra::EigenSet& es,
                                  const std::vector<double>& angles, double eps_ring) {
    if (es.records.empty()) throw InvalidArgument("density probe needs a non-empty eigenset");
    if (eps_ring <= 0.0) throw InvalidArgument("eps_ring must be > 0");
    for (double th : angles)
        if (!(th >= 0.0 && th < 2.0 * M_PI))
            throw InvalidArgument("angles must lie in [0, 2*pi)");

    std::vector<double> out;
    out.reserve(angles.size());
    for (double th : angles) {
        const Complex target(std::cos(th), std::sin(th));
        double best = std::numeric_limits<double>::infinity();
        for (const auto& rec : es.records) best = std::min(best, std::abs(rec.reciprocal - target));
        out.push_back(best);
    }
    return out;
}

}  // namespace eigenflow::stats
