#pragma once

#include <string>
#include <vector>

#include "eigenflow/common.hpp"
#include "eigenflow/spectra.hpp"

namespace eigenflow::dynamics {

enum class DynClass { hyperbolic, misiurewicz_proxy, parabolic, siegel, other };

const char* dyn_class_name(DynClass tag);

struct ClassThresholds {
    double eps_ring = 0.01;
    // Angle tolerance in normalized units: (1/pi) * atan2(im, re).
    double arg_tol = 0.01;
    int denominator_cap = 64;
};

struct ClassTableRow {
    int n = 0;
    long hyperbolic = 0;
    long misiurewicz = 0;
    long parabolic = 0;
    long siegel = 0;
    long others = 0;
    long classified_total = 0;   // hyperbolic + misiurewicz + parabolic + siegel
    long grand_total = 0;        // n(n+1)/2 - 1
};

struct EscapeResult {
    bool escaped = false;
    int iterations = 0;
    double final_modulus = 0.0;
};

// Modulus bands first (hyperbolic below the ring, misiurewicz proxy above);
// inside the ring the normalized angle decides parabolic / siegel / other.
// Note: with the default arg_tol = 0.01 and denominator_cap = 64 every angle
// is within tolerance of some p/q (Farey gaps are at most 1/64), so the
// siegel count is structurally zero; the thresholds are configurable.
DynClass classify_point(Complex z, const ClassThresholds& th = {});

std::vector<ClassTableRow> classification_table(const spectra::EigenSet& es,
                                                const std::vector<int>& sizes,
                                                const ClassThresholds& th = {});

EscapeResult mandelbrot_escape(Complex c, int max_iter = 1000, double radius = 2.0);

// |1 - sqrt(1 - 4c)| <= 1 with the principal square root; the boundary
// (|mu| = 1) counts as inside so homotopy landing targets are members.
bool in_main_cardioid(Complex c);

bool in_period2_bulb(Complex c);

}  // namespace eigenflow::dynamics
