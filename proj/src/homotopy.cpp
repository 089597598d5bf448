#include "eigenflow/homotopy.hpp"

#include <cmath>

#include "eigenflow/jungreis.hpp"

namespace eigenflow::homotopy {

namespace {

void check_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw RangeError("homotopy parameter t must lie in [0, 1]");
}

}  // namespace

Complex linear_homotopy(Complex p, Complex q, double t) {
    check_t(t);
    if (t == 0.0) return p;
    if (t == 1.0) return q;
    return p + t * (q - p);
}

Complex cardioid_param(double theta) {
    return Complex(0.25 * (2.0 * std::cos(theta) - std::cos(2.0 * theta)),
                   0.25 * (2.0 * std::sin(theta) - std::sin(2.0 * theta)));
}

Complex cardioid_homotopy(Complex z, double t) {
    check_t(t);
    if (t == 0.0) return z;
    // The branch is decided on the input point for every t, so a path never
    // switches branches mid-deformation.
    if (std::abs(z) > 0.5) {
        const Complex target = cardioid_param(std::atan2(z.imag(), z.real()));
        if (t == 1.0) return target;
        return z + t * (target - z);
    }
    return (1.0 - 0.5 * t) * z - Complex(t, 0.0);
}

Complex tuning_map(Complex c, const TuningParams& tp) {
    if (tp.scale == 0.0) throw InvalidArgument("tuning scale must be nonzero");
    return tp.c_prime + tp.scale * (c - tp.c0);
}

Complex tuned_cardioid_homotopy(Complex z, double t, const RotatedCardioidParams& rp,
                                bool translate_to_center) {
    check_t(t);
    if (!(rp.s_start > 0.0) || !(rp.s_end > 0.0))
        throw InvalidArgument("cardioid scales must be positive");
    if (z == rp.center) throw SingularityError("angle undefined at the deformation center");
    if (t == 0.0) return z;

    const Complex d = z - rp.center;
    const double theta = std::atan2(d.imag(), d.real());
    const double s = (1.0 - t) * rp.s_start + t * rp.s_end;
    Complex target = s * std::polar(1.0, rp.rotation) * cardioid_param(theta);
    if (translate_to_center) target += rp.center;
    if (t == 1.0) return target;
    return z + t * (target - z);
}

Complex radial_bulb_homotopy(Complex z, double t, const RadialBulbParams& bp) {
    check_t(t);
    if (!(bp.r0 > 0.0) || !(bp.r1 > 0.0)) throw InvalidArgument("bulb radii must be positive");
    if (z == bp.center) throw SingularityError("angle undefined at the bulb center");
    if (t == 0.0) return z;

    const Complex d = z - bp.center;
    const double radius = (1.0 - t) * bp.r0 + t * bp.r1;
    return bp.center + d * (radius / std::abs(d));
}

std::pair<double, double> piecewise_scale(double x, double y) {
    const bool on_axis = std::abs(y) <= 1e-12;
    if (x >= 0.5 && on_axis) return {(0.25 / 0.618) * x, y};
    if (x <= -1.0 && on_axis) return {(-1.95 / -1.6) * x, y};
    return {0.7 * x, (0.25 / 0.4) * y};
}

std::pair<double, double> scale_homotopy(double x, double y, double t) {
    check_t(t);
    if (t == 0.0) return {x, y};
    const auto [sx, sy] = piecewise_scale(x, y);
    if (t == 1.0) return {sx, sy};
    return {x + t * (sx - x), y + t * (sy - y)};
}

Complex boundary_map(Complex z) {
    if (z == Complex(0.0, 0.0)) throw SingularityError("angle undefined at the origin");
    return cardioid_param(std::atan2(z.imag(), z.real()));
}

const char* kind_name(HomotopyKind kind) {
    switch (kind) {
        case HomotopyKind::linear: return "linear";
        case HomotopyKind::cardioid: return "cardioid";
        case HomotopyKind::jungreis: return "jungreis";
        case HomotopyKind::tuned_cardioid: return "tuned_cardioid";
        case HomotopyKind::radial_bulb: return "radial_bulb";
        case HomotopyKind::scale: return "scale";
    }
    throw InvalidArgument("unknown homotopy kind enumerator");
}

HomotopyKind parse_kind(const std::string& name) {
    if (name == "linear") return HomotopyKind::linear;
    if (name == "cardioid") return HomotopyKind::cardioid;
    if (name == "jungreis") return HomotopyKind::jungreis;
    if (name == "tuned_cardioid") return HomotopyKind::tuned_cardioid;
    if (name == "radial_bulb") return HomotopyKind::radial_bulb;
    if (name == "scale") return HomotopyKind::scale;
    throw InvalidArgument("unknown homotopy kind: " + name);
}

Complex HomotopySpec::apply(Complex z, double t) const {
    switch (kind) {
        case HomotopyKind::linear: return linear_homotopy(z, linear_target, t);
        case HomotopyKind::cardioid: return cardioid_homotopy(z, t);
        case HomotopyKind::jungreis: return jungreis::jungreis_homotopy(z, t, jungreis_m);
        case HomotopyKind::tuned_cardioid:
            return tuned_cardioid_homotopy(z, t, rotated, rotated_translate);
        case HomotopyKind::radial_bulb: return radial_bulb_homotopy(z, t, radial);
        case HomotopyKind::scale: {
            const auto [x, y] = scale_homotopy(z.real(), z.imag(), t);
            return Complex(x, y);
        }
    }
    throw InvalidArgument("unknown homotopy kind enumerator");
}

}  // namespace eigenflow::homotopy
