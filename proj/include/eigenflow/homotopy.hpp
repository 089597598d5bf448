#pragma once

#include <string>
#include <utility>

#include "eigenflow/common.hpp"

namespace eigenflow::homotopy {

struct TuningParams {
    Complex c0{-0.75, 0.0};
    Complex c_prime{-0.1575, 1.0325};
    double scale = 0.01;
};

struct RotatedCardioidParams {
    Complex center{-0.1575, 1.0325};
    double rotation = -M_PI / 6.0;   // 30 degrees clockwise
    double s_start = 0.01;
    double s_end = 0.0055;
};

struct RadialBulbParams {
    Complex center{-0.122, 0.744};
    double r0 = 0.050;
    double r1 = 0.093;
};

// Every time-dependent map below returns its input bit-for-bit at t = 0 and
// the exact target formula at t = 1; the lerp only runs strictly inside.

Complex linear_homotopy(Complex p, Complex q, double t);

// Boundary of the main cardioid: (1/4)(2cos t - cos 2t) + (i/4)(2sin t - sin 2t).
Complex cardioid_param(double theta);

// |z| > 0.5: pull toward the cardioid boundary point at arg z;
// otherwise the literal second branch (1 - 0.5 t) z - t.
Complex cardioid_homotopy(Complex z, double t);

Complex tuning_map(Complex c, const TuningParams& tp = {});

// Target: center + s(t) e^{i rotation} C(arg(z - center)) with
// s(t) = (1-t) s_start + t s_end. `translate_to_center = false` drops the
// center term for the literal untranslated formula.
Complex tuned_cardioid_homotopy(Complex z, double t, const RotatedCardioidParams& rp = {},
                                bool translate_to_center = true);

// center + ((1-t) r0 + t r1) e^{i arg(z - center)} for t > 0; the identity
// endpoint takes precedence at t = 0 (the formula itself only reproduces z
// when z already sits on the r0 circle).
Complex radial_bulb_homotopy(Complex z, double t, const RadialBulbParams& bp = {});

std::pair<double, double> piecewise_scale(double x, double y);

std::pair<double, double> scale_homotopy(double x, double y, double t);

// C(arg z): the conjectural boundary correspondence.
Complex boundary_map(Complex z);

enum class HomotopyKind { linear, cardioid, jungreis, tuned_cardioid, radial_bulb, scale };

const char* kind_name(HomotopyKind kind);
HomotopyKind parse_kind(const std::string& name);

// One dispatchable bundle of a kind plus its parameters, used by snapshot
// generation and the CLI.
struct HomotopySpec {
    HomotopyKind kind = HomotopyKind::cardioid;
    Complex linear_target{0.0, 0.0};   // only for kind == linear
    int jungreis_m = 65;               // only for kind == jungreis
    RotatedCardioidParams rotated;
    RadialBulbParams radial;
    bool rotated_translate = true;

    Complex apply(Complex z, double t) const;
};

}  // namespace eigenflow::homotopy
