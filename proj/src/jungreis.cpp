#include "eigenflow/jungreis.hpp"

#include <cmath>

namespace eigenflow::jungreis {

namespace {

struct RawCoeff {
    const char* num;
    const char* den;
};

constexpr RawCoeff kRawTable[] = {
#include "jungreis_table.inc"
};

double rational_to_double(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw InvalidArgument("coefficient denominator must be positive");
    if ((den & (den - 1)) == 0) {
        // Power-of-two denominator: divide by an exact 2^k scale so the only
        // rounding is the 53-bit truncation of the numerator.
        return big_ldexp_to_double(num, -(big_bits(den) - 1));
    }
    return big_to_double(num) / big_to_double(den);
}

JungreisSeries build_series() {
    JungreisSeries series;
    series.coefficients.reserve(std::size(kRawTable));
    for (const RawCoeff& raw : kRawTable) {
        Rational r;
        r.numerator = BigInt(raw.num);
        r.denominator = BigInt(raw.den);
        r.double_value = rational_to_double(r.numerator, r.denominator);
        series.coefficients.push_back(std::move(r));
    }
    return series;
}

}  // namespace

const JungreisSeries& coefficients() {
    static const JungreisSeries series = build_series();
    return series;
}

Complex psi_truncated(Complex w, int m) {
    if (w == Complex(0.0, 0.0)) throw SingularityError("psi is undefined at w = 0");
    const JungreisSeries& series = coefficients();
    if (m < 1 || m > static_cast<int>(series.coefficients.size()))
        throw RangeError("truncation order must lie in [1, 65]");

    // Horner in u = 1/w over sum_{k=1}^{m} a_k u^{k-1}.
    const Complex u = Complex(1.0, 0.0) / w;
    Complex acc(series.coefficients[static_cast<std::size_t>(m) - 1].double_value, 0.0);
    for (int k = m - 1; k >= 1; --k)
        acc = acc * u + Complex(series.coefficients[static_cast<std::size_t>(k) - 1].double_value,
                                0.0);
    return w + acc;
}

ModulusPartition partition_by_modulus(const spectra::EigenSet& es, double eps) {
    if (eps <= 0.0) throw InvalidArgument("eps must be > 0");
    ModulusPartition part;
    for (const auto& rec : es.records) {
        if (rec.modulus_recip < 1.0 - eps)
            part.inside.push_back(rec);
        else if (rec.modulus_recip >= 1.0 + eps)
            part.outside.push_back(rec);
        else
            part.unit_ring.push_back(rec);
    }
    return part;
}

Complex jungreis_homotopy(Complex z, double t, int m) {
    if (z == Complex(0.0, 0.0)) throw SingularityError("homotopy is undefined at z = 0");
    if (!(t >= 0.0 && t <= 1.0)) throw RangeError("homotopy parameter t must lie in [0, 1]");
    if (t == 0.0) return z;
    const Complex target = psi_truncated(z, m);
    if (t == 1.0) return target;
    return z + t * (target - z);
}

}  // namespace eigenflow::jungreis
