#include "eigenflow/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "eigenflow/threads.hpp"

namespace eigenflow::spectra {

const char* family_name(SequenceFamily family) {
    switch (family) {
        case SequenceFamily::fibonacci: return "fibonacci";
        case SequenceFamily::pell_lucas: return "pell_lucas";
        case SequenceFamily::narayana: return "narayana";
        case SequenceFamily::padovan: return "padovan";
    }
    throw InvalidArgument("unknown family enumerator");
}

SequenceFamily parse_family(const std::string& name) {
    if (name == "fibonacci") return SequenceFamily::fibonacci;
    if (name == "pell_lucas") return SequenceFamily::pell_lucas;
    if (name == "narayana") return SequenceFamily::narayana;
    if (name == "padovan") return SequenceFamily::padovan;
    throw InvalidArgument("unknown family: " + name);
}

BigInt CharPoly::evaluate(const BigInt& x) const {
    BigInt acc = coeffs.back();
    for (int k = degree - 1; k >= 0; --k) acc = acc * x + coeffs[static_cast<std::size_t>(k)];
    return acc;
}

MatrixSpec build_matrix(SequenceFamily family, int degree) {
    if (degree < 2) throw InvalidArgument("companion degree must be >= 2");
    MatrixSpec spec;
    spec.degree = degree;
    const auto n = static_cast<std::size_t>(degree);
    switch (family) {
        case SequenceFamily::fibonacci:
            spec.first_row.assign(n, 1);
            spec.subdiagonal.assign(n - 1, 1);
            break;
        case SequenceFamily::pell_lucas:
            spec.first_row.assign(n, 4);
            spec.subdiagonal.assign(n - 1, 2);
            spec.subdiagonal.front() = 4;
            break;
        case SequenceFamily::narayana:
            spec.first_row.assign(n, 1);
            if (n > 1) spec.first_row[1] = 0;
            spec.subdiagonal.assign(n - 1, 1);
            break;
        case SequenceFamily::padovan:
            spec.first_row.assign(n, 1);
            spec.first_row[0] = 0;
            spec.subdiagonal.assign(n - 1, 1);
            break;
    }
    return spec;
}

CharPoly build_char_poly(SequenceFamily family, int degree) {
    const MatrixSpec spec = build_matrix(family, degree);
    CharPoly poly;
    poly.degree = degree;
    poly.coeffs.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
    poly.coeffs[static_cast<std::size_t>(degree)] = 1;
    // Expansion along the first row: the x^{N-1-k} coefficient picks up
    // -first_row[k] times the product of the first k subdiagonal entries.
    BigInt chain = 1;
    for (int k = 0; k < degree; ++k) {
        if (k > 0) chain *= spec.subdiagonal[static_cast<std::size_t>(k) - 1];
        poly.coeffs[static_cast<std::size_t>(degree - 1 - k)] =
            -chain * spec.first_row[static_cast<std::size_t>(k)];
    }
    return poly;
}

namespace {

bool complex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

roots::RootSet find_roots(const CharPoly& poly, double tol) {
    if (poly.degree < 1 || poly.coeffs.size() != static_cast<std::size_t>(poly.degree) + 1)
        throw InvalidArgument("malformed characteristic polynomial");
    if (poly.coeffs.back() != 1) throw InvalidArgument("characteristic polynomial must be monic");

    // Factor out roots at the origin so the Aberth stage sees a nonzero
    // constant term.
    std::size_t zero_count = 0;
    while (zero_count < static_cast<std::size_t>(poly.degree) && poly.coeffs[zero_count] == 0)
        ++zero_count;

    const int reduced_degree = poly.degree - static_cast<int>(zero_count);
    roots::RootSet combined;
    if (reduced_degree > 0) {
        // Variable scaling x = 2^m y keeps the scaled coefficients within
        // double range even when the integer coefficients do not fit (the
        // pell_lucas constant term is ~2^{N+2}). m is exact, so the rescaled
        // roots keep conjugate pairs bit-identical.
        const BigInt& c0 = poly.coeffs[zero_count];
        long m = 0;
        const std::size_t bits = big_bits(c0);
        if (bits > 1) m = std::lround(static_cast<double>(bits - 1) / reduced_degree);
        if (m < 0) m = 0;

        std::vector<double> scaled(static_cast<std::size_t>(reduced_degree) + 1);
        for (int k = 0; k <= reduced_degree; ++k) {
            const BigInt& ck = poly.coeffs[zero_count + static_cast<std::size_t>(k)];
            const double value = big_ldexp_to_double(ck, -m * (reduced_degree - k));
            if (!std::isfinite(value))
                throw RangeError("characteristic coefficients overflow double even after scaling");
            scaled[static_cast<std::size_t>(k)] = value;
        }

        roots::RootFindOptions options;
        options.tol = tol;
        combined = roots::find_roots_monic(scaled, options);
        if (m != 0) {
            for (auto& z : combined.roots)
                z = Complex(std::ldexp(z.real(), static_cast<int>(m)),
                            std::ldexp(z.imag(), static_cast<int>(m)));
        }
    }

    for (std::size_t i = 0; i < zero_count; ++i) {
        combined.roots.emplace_back(0.0, 0.0);
        combined.residuals.push_back(0.0);
    }

    if (zero_count > 0) {
        std::vector<std::size_t> order(combined.roots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return complex_less(combined.roots[a], combined.roots[b]);
        });
        roots::RootSet sorted;
        sorted.sweeps = combined.sweeps;
        sorted.roots.reserve(order.size());
        sorted.residuals.reserve(order.size());
        for (std::size_t i : order) {
            sorted.roots.push_back(combined.roots[i]);
            sorted.residuals.push_back(combined.residuals[i]);
        }
        return sorted;
    }
    return combined;
}

EigenSet build_eigenset(SequenceFamily family, int n_max, double tol) {
    if (n_max < 2) throw InvalidArgument("n_max must be >= 2");
    EigenSet es;
    es.family = family;
    es.n_max = n_max;
    es.tol = tol;

    std::vector<std::vector<EigenRecord>> per_size(static_cast<std::size_t>(n_max) + 1);
    parallel_for(static_cast<std::size_t>(n_max) - 1, [&](std::size_t job) {
        const int k = static_cast<int>(job) + 2;
        const CharPoly poly = build_char_poly(family, k);
        const roots::RootSet rs = find_roots(poly, tol);
        auto& bucket = per_size[static_cast<std::size_t>(k)];
        bucket.reserve(rs.roots.size());
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            EigenRecord rec;
            rec.family = family;
            rec.k = k;
            rec.index = static_cast<int>(i);
            rec.lambda = rs.roots[i];
            // Reciprocals of a bit-identical conjugate pair must again be
            // bit-identical conjugates, so the lower-half value is mirrored
            // from its partner instead of divided independently. Real
            // eigenvalues invert on the real axis (avoids -0 imaginary parts).
            if (rec.lambda.imag() == 0.0) {
                rec.reciprocal = Complex(1.0 / rec.lambda.real(), 0.0);
            } else if (rec.lambda.imag() < 0.0) {
                const Complex upper = std::conj(rec.lambda);
                rec.reciprocal = std::conj(Complex(1.0, 0.0) / upper);
            } else {
                rec.reciprocal = Complex(1.0, 0.0) / rec.lambda;
            }
            rec.modulus_recip = std::abs(rec.reciprocal);
            rec.residual = rs.residuals[i];
            bucket.push_back(rec);
        }
    });

    es.records.reserve(EigenSet::expected_count(n_max));
    for (int k = 2; k <= n_max; ++k)
        for (auto& rec : per_size[static_cast<std::size_t>(k)]) es.records.push_back(rec);
    return es;
}

double dominant_root(SequenceFamily family, int degree) {
    if (family != SequenceFamily::fibonacci)
        throw InvalidArgument("dominant_root is only defined for the fibonacci family");
    if (degree < 2) throw InvalidArgument("companion degree must be >= 2");

    // (x - 1) p_N(x) = x^{N+1} - 2 x^N + 1, so the dominant root solves
    // N ln x + ln(2 - x) = 0 on (1.5, 2); the left side is positive at 1.5
    // and falls to -inf at 2, crossing zero exactly once.
    const auto h = [degree](double x) { return degree * std::log(x) + std::log(2.0 - x); };
    double lo = 1.5;
    double hi = std::nextafter(2.0, 1.0);
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (h(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<std::pair<int, double>> max_imag_by_size(const EigenSet& es) {
    std::vector<std::pair<int, double>> out;
    for (const auto& rec : es.records) {
        if (out.empty() || out.back().first != rec.k) out.emplace_back(rec.k, 0.0);
        out.back().second = std::max(out.back().second, std::abs(rec.lambda.imag()));
    }
    return out;
}

}  // namespace eigenflow::spectra
