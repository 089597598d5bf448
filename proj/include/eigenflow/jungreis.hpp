#pragma once

#include <vector>

#include "eigenflow/bigint.hpp"
#include "eigenflow/common.hpp"
#include "eigenflow/spectra.hpp"

namespace eigenflow::jungreis {

// Exact coefficient of the truncated uniformization series. Denominators are
// powers of two and numerators reach 37 decimal digits, hence big integers.
struct Rational {
    BigInt numerator;
    BigInt denominator;
    double double_value = 0.0;   // nearest double, converted once via exact 2^k scaling
};

struct JungreisSeries {
    std::vector<Rational> coefficients;   // a_1 .. a_65

    const Rational& a(int k) const {      // 1-based, matching the series index
        if (k < 1 || k > static_cast<int>(coefficients.size()))
            throw RangeError("coefficient index out of range");
        return coefficients[static_cast<std::size_t>(k) - 1];
    }
};

struct ModulusPartition {
    std::vector<spectra::EigenRecord> unit_ring;   // modulus in [1-eps, 1+eps)
    std::vector<spectra::EigenRecord> inside;      // modulus < 1-eps
    std::vector<spectra::EigenRecord> outside;     // modulus >= 1+eps
};

// The embedded 65-entry exact table.
const JungreisSeries& coefficients();

// w + sum_{k=1}^{m} a_k w^{-(k-1)}; truncation order m defaults to the full
// table. The sum is finite, so evaluation inside the unit disk is allowed;
// callers exporting such values label them extrapolated.
Complex psi_truncated(Complex w, int m = 65);

ModulusPartition partition_by_modulus(const spectra::EigenSet& es, double eps = 0.01);

// z + t * (psi_truncated(z, m) - z), with the t = 0 and t = 1 endpoints
// returned exactly.
Complex jungreis_homotopy(Complex z, double t, int m = 65);

}  // namespace eigenflow::jungreis
