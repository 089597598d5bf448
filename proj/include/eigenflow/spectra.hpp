#pragma once

#include <string>
#include <vector>

#include "eigenflow/bigint.hpp"
#include "eigenflow/common.hpp"
#include "eigenflow/roots.hpp"

namespace eigenflow::spectra {

// The four generalized-Lucas companion families. `fibonacci` is the family
// whose reciprocal spectra form the main eigenset.
enum class SequenceFamily { fibonacci, pell_lucas, narayana, padovan };

const char* family_name(SequenceFamily family);
SequenceFamily parse_family(const std::string& name);

// Sparse companion matrix: everything off the first row and the subdiagonal
// is zero, so only those two vectors are stored.
struct MatrixSpec {
    int degree = 0;
    std::vector<std::int64_t> first_row;     // N entries
    std::vector<std::int64_t> subdiagonal;   // N-1 entries
};

// Monic integer characteristic polynomial, ascending coefficients,
// coeffs[degree] == 1. Exact arithmetic; pell_lucas coefficients grow
// geometrically and overflow any fixed-width integer.
struct CharPoly {
    int degree = 0;
    std::vector<BigInt> coeffs;

    const BigInt& constant_term() const { return coeffs.front(); }
    BigInt evaluate(const BigInt& x) const;
};

struct EigenRecord {
    SequenceFamily family;
    int k = 0;        // matrix size
    int index = 0;    // root index within size k, sorted by (re, im)
    Complex lambda;
    Complex reciprocal;
    double modulus_recip = 0.0;
    double residual = 0.0;
};

// Realization of the reciprocal eigenset: the union over k = 2..n_max of the
// reciprocals of the eigenvalues of the family's companion matrices.
struct EigenSet {
    SequenceFamily family = SequenceFamily::fibonacci;
    int n_max = 0;
    double tol = 0.0;
    std::vector<EigenRecord> records;   // ordered by (k, index)

    static std::size_t expected_count(int n_max) {
        return static_cast<std::size_t>(n_max) * (n_max + 1) / 2 - 1;
    }
};

MatrixSpec build_matrix(SequenceFamily family, int degree);

CharPoly build_char_poly(SequenceFamily family, int degree);

// All complex roots with scaled residual <= tol, sorted by (re, im);
// non-real roots arrive in bit-identical conjugate pairs.
roots::RootSet find_roots(const CharPoly& poly, double tol = 1e-12);

EigenSet build_eigenset(SequenceFamily family, int n_max, double tol = 1e-12);

// Unique root of modulus > 1 of the fibonacci polynomial (real, in (1,2)).
double dominant_root(SequenceFamily family, int degree);

// Largest |Im lambda| per matrix size, for the reality-of-spectrum report.
std::vector<std::pair<int, double>> max_imag_by_size(const EigenSet& es);

}  // namespace eigenflow::spectra
