#pragma once

#include <vector>

#include "eigenflow/common.hpp"

namespace eigenflow::roots {

struct RootFindOptions {
    double tol = 1e-12;   // scaled-residual target |p(z)| / sum_k |c_k||z|^k
    int max_sweeps = 400;
    int polish_steps = 3;
    // Mirror lower-half-plane roots from their upper-half partners so
    // conjugate pairs are bit-identical. Requires real coefficients.
    bool enforce_conjugate_symmetry = true;
};

struct RootSet {
    std::vector<Complex> roots;      // sorted by (re, im)
    std::vector<double> residuals;   // scaled residual per root
    int sweeps = 0;
};

// Simultaneous Aberth–Ehrlich iteration with Newton polishing.
// coeffs are ascending, coeffs[N] == 1 (monic), N >= 1.
// Throws ConvergenceError when the worst scaled residual stays above tol.
RootSet find_roots_monic(const std::vector<double>& coeffs,
                         const RootFindOptions& options = {});

// Scaled residual of z as a root of the monic polynomial.
double scaled_residual(const std::vector<double>& coeffs, Complex z);

}  // namespace eigenflow::roots
