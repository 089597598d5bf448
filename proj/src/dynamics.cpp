#include "eigenflow/dynamics.hpp"

#include <cmath>

namespace eigenflow::dynamics {

const char* dyn_class_name(DynClass tag) {
    switch (tag) {
        case DynClass::hyperbolic: return "hyperbolic";
        case DynClass::misiurewicz_proxy: return "misiurewicz_proxy";
        case DynClass::parabolic: return "parabolic";
        case DynClass::siegel: return "siegel";
        case DynClass::other: return "other";
    }
    throw InvalidArgument("unknown DynClass enumerator");
}

namespace {

bool near_some_rational(double a, double tol, int cap) {
    for (int q = 1; q <= cap; ++q) {
        const double p = std::round(a * q);
        if (std::abs(a - p / q) <= tol) return true;
    }
    return false;
}

}  // namespace

DynClass classify_point(Complex z, const ClassThresholds& th) {
    if (z == Complex(0.0, 0.0)) throw InvalidArgument("cannot classify the origin");
    if (th.eps_ring <= 0.0 || th.arg_tol <= 0.0 || th.denominator_cap < 2)
        throw InvalidArgument("malformed classification thresholds");

    const double m = std::abs(z);
    if (m < 1.0 - th.eps_ring) return DynClass::hyperbolic;
    if (m >= 1.0 + th.eps_ring) return DynClass::misiurewicz_proxy;

    const double a = std::atan2(z.imag(), z.real()) / M_PI;   // in (-1, 1]
    if (std::abs(a) <= th.arg_tol) return DynClass::parabolic;
    if (!near_some_rational(a, th.arg_tol, th.denominator_cap)) return DynClass::siegel;
    return DynClass::other;
}

std::vector<ClassTableRow> classification_table(const spectra::EigenSet& es,
                                                const std::vector<int>& sizes,
                                                const ClassThresholds& th) {
    for (int n : sizes) {
        if (n < 2) throw InvalidArgument("table size must be >= 2");
        if (n > es.n_max) throw RangeError("table size exceeds eigenset n_max");
    }

    // Classify each reciprocal once, then aggregate per requested size.
    std::vector<DynClass> tags;
    tags.reserve(es.records.size());
    for (const auto& rec : es.records) tags.push_back(classify_point(rec.reciprocal, th));

    std::vector<ClassTableRow> rows;
    rows.reserve(sizes.size());
    for (int n : sizes) {
        ClassTableRow row;
        row.n = n;
        for (std::size_t i = 0; i < es.records.size(); ++i) {
            if (es.records[i].k > n) continue;
            ++row.grand_total;
            switch (tags[i]) {
                case DynClass::hyperbolic: ++row.hyperbolic; break;
                case DynClass::misiurewicz_proxy: ++row.misiurewicz; break;
                case DynClass::parabolic: ++row.parabolic; break;
                case DynClass::siegel: ++row.siegel; break;
                case DynClass::other: ++row.others; break;
            }
        }
        row.classified_total = row.hyperbolic + row.misiurewicz + row.parabolic + row.siegel;
        rows.push_back(row);
    }
    return rows;
}

EscapeResult mandelbrot_escape(Complex c, int max_iter, double radius) {
    if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
    if (radius < 2.0) throw InvalidArgument("escape radius must be >= 2");

    const double r2 = radius * radius;
    Complex z(0.0, 0.0);
    for (int it = 1; it <= max_iter; ++it) {
        z = z * z + c;
        if (std::norm(z) > r2) return EscapeResult{true, it, std::abs(z)};
    }
    return EscapeResult{false, max_iter, std::abs(z)};
}

bool in_main_cardioid(Complex c) {
    const Complex mu = Complex(1.0, 0.0) - std::sqrt(Complex(1.0, 0.0) - 4.0 * c);
    return std::abs(mu) <= 1.0;
}

bool in_period2_bulb(Complex c) { return std::abs(c + Complex(1.0, 0.0)) < 0.25; }

}  // namespace eigenflow::dynamics
