#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "eigenflow/spectra.hpp"

using eigenflow::BigInt;
using eigenflow::Complex;
namespace spectra = eigenflow::spectra;
using spectra::SequenceFamily;

namespace {

// Frozen oracle constants (50-digit bisection / closed forms, rounded to
// nearest double).
constexpr double kGolden = 1.6180339887498949;
constexpr double kGoldenRecip = 0.6180339887498948;
constexpr double kFibDom3 = 1.8392867552141611;
constexpr double kFibDom5 = 1.9659482366454853;
constexpr double kPlastic = 1.3247179572447460;
constexpr double kNarayana3 = 1.4655712318767680;
constexpr double kPell3 = 6.9596314975102911;
constexpr double kDomRecip5 = 0.508660391642004;

double max_real_root(const spectra::CharPoly& poly) {
    const auto rs = spectra::find_roots(poly);
    double best = -1e300;
    for (const Complex& z : rs.roots)
        if (z.imag() == 0.0) best = std::max(best, z.real());
    return best;
}

}  // namespace

TEST_CASE("matrix specs match the four family definitions") {
    const auto fib = spectra::build_matrix(SequenceFamily::fibonacci, 4);
    CHECK(fib.first_row == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(fib.subdiagonal == std::vector<std::int64_t>{1, 1, 1});

    const auto pell = spectra::build_matrix(SequenceFamily::pell_lucas, 4);
    CHECK(pell.first_row == std::vector<std::int64_t>{4, 4, 4, 4});
    CHECK(pell.subdiagonal == std::vector<std::int64_t>{4, 2, 2});

    const auto nar = spectra::build_matrix(SequenceFamily::narayana, 4);
    CHECK(nar.first_row == std::vector<std::int64_t>{1, 0, 1, 1});
    CHECK(nar.subdiagonal == std::vector<std::int64_t>{1, 1, 1});

    const auto pad = spectra::build_matrix(SequenceFamily::padovan, 4);
    CHECK(pad.first_row == std::vector<std::int64_t>{0, 1, 1, 1});
    CHECK(pad.subdiagonal == std::vector<std::int64_t>{1, 1, 1});

    CHECK_THROWS_AS(spectra::build_matrix(SequenceFamily::fibonacci, 1),
                    eigenflow::InvalidArgument);
}

TEST_CASE("characteristic polynomials for small degrees") {
    const auto check_coeffs = [](const spectra::CharPoly& p, std::vector<long> want) {
        REQUIRE(p.coeffs.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(p.coeffs[i] == BigInt(want[i]));
    };
    check_coeffs(spectra::build_char_poly(SequenceFamily::fibonacci, 2), {-1, -1, 1});
    check_coeffs(spectra::build_char_poly(SequenceFamily::fibonacci, 5),
                 {-1, -1, -1, -1, -1, 1});
    check_coeffs(spectra::build_char_poly(SequenceFamily::pell_lucas, 3), {-32, -16, -4, 1});
    check_coeffs(spectra::build_char_poly(SequenceFamily::narayana, 3), {-1, 0, -1, 1});
    check_coeffs(spectra::build_char_poly(SequenceFamily::padovan, 3), {-1, -1, 0, 1});
}

TEST_CASE("telescoping identity (x-1) p_N = x^{N+1} - 2x^N + 1 is exact for N <= 50") {
    for (int n = 2; n <= 50; ++n) {
        const auto p = spectra::build_char_poly(SequenceFamily::fibonacci, n);
        // multiply by (x - 1)
        std::vector<BigInt> prod(p.coeffs.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            prod[i + 1] += p.coeffs[i];
            prod[i] -= p.coeffs[i];
        }
        for (std::size_t i = 0; i < prod.size(); ++i) {
            BigInt want = 0;
            if (i == 0) want = 1;
            if (i == static_cast<std::size_t>(n)) want = -2;
            if (i == static_cast<std::size_t>(n) + 1) want = 1;
            CHECK(prod[i] == want);
        }
    }
}

TEST_CASE("degree-2 roots match the quadratic formula to 1e-12") {
    const auto rs = spectra::find_roots(spectra::build_char_poly(SequenceFamily::fibonacci, 2));
    REQUIRE(rs.roots.size() == 2);
    const double lo = (1.0 - std::sqrt(5.0)) / 2.0;
    const double hi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(rs.roots[0] - Complex(lo, 0.0)) < 1e-12);
    CHECK(std::abs(rs.roots[1] - Complex(hi, 0.0)) < 1e-12);
    CHECK(rs.roots[1].real() == doctest::Approx(kGolden).epsilon(1e-14));
}

TEST_CASE("dominant roots match frozen bisection oracles") {
    CHECK(max_real_root(spectra::build_char_poly(SequenceFamily::fibonacci, 3)) ==
          doctest::Approx(kFibDom3).epsilon(1e-12));
    CHECK(max_real_root(spectra::build_char_poly(SequenceFamily::fibonacci, 5)) ==
          doctest::Approx(kFibDom5).epsilon(1e-12));
    CHECK(max_real_root(spectra::build_char_poly(SequenceFamily::padovan, 3)) ==
          doctest::Approx(kPlastic).epsilon(1e-12));
    CHECK(max_real_root(spectra::build_char_poly(SequenceFamily::narayana, 3)) ==
          doctest::Approx(kNarayana3).epsilon(1e-12));
    CHECK(max_real_root(spectra::build_char_poly(SequenceFamily::pell_lucas, 3)) ==
          doctest::Approx(kPell3).epsilon(1e-12));
}

TEST_CASE("dominant_root: closed forms, range law, and errors") {
    CHECK(std::abs(spectra::dominant_root(SequenceFamily::fibonacci, 2) - kGolden) < 1e-12);
    CHECK(spectra::dominant_root(SequenceFamily::fibonacci, 3) ==
          doctest::Approx(kFibDom3).epsilon(1e-10));
    CHECK(spectra::dominant_root(SequenceFamily::fibonacci, 5) ==
          doctest::Approx(kFibDom5).epsilon(1e-10));
    CHECK(1.0 / spectra::dominant_root(SequenceFamily::fibonacci, 5) ==
          doctest::Approx(kDomRecip5).epsilon(1e-12));

    // reciprocal of the dominant root sits in [0.49, 0.51) for all k >= 5
    for (int k : {5, 6, 10, 50, 100, 500, 1000}) {
        const double recip = 1.0 / spectra::dominant_root(SequenceFamily::fibonacci, k);
        CHECK(recip >= 0.49);
        CHECK(recip < 0.51);
    }
    // while k = 2, 3, 4 land above the bin
    for (int k : {2, 3, 4})
        CHECK(1.0 / spectra::dominant_root(SequenceFamily::fibonacci, k) >= 0.51);

    CHECK_THROWS_AS(spectra::dominant_root(SequenceFamily::pell_lucas, 3),
                    eigenflow::InvalidArgument);
    CHECK_THROWS_AS(spectra::dominant_root(SequenceFamily::fibonacci, 1),
                    eigenflow::InvalidArgument);
}

TEST_CASE("pell_lucas large degree exercises the power-of-two scaling path") {
    // Constant term 2^{N+2} with N = 400 cannot be represented as a double;
    // the scaled solve must still deliver residual-clean roots.
    const int n = 400;
    const auto poly = spectra::build_char_poly(SequenceFamily::pell_lucas, n);
    CHECK(eigenflow::big_bits(poly.constant_term()) == static_cast<std::size_t>(n) + 3);
    const auto rs = spectra::find_roots(poly);
    REQUIRE(rs.roots.size() == static_cast<std::size_t>(n));
    for (double r : rs.residuals) CHECK(r <= 1e-12);
    // product of root moduli equals |constant term| = 2^{N+2}
    double log_sum = 0.0;
    for (const Complex& z : rs.roots) log_sum += std::log(std::abs(z));
    CHECK(log_sum == doctest::Approx((n + 2) * std::log(2.0)).epsilon(1e-9));
    // conjugate closure is exact
    for (const Complex& z : rs.roots) {
        if (z.imag() == 0.0) continue;
        bool found = false;
        for (const Complex& w : rs.roots)
            if (w.real() == z.real() && w.imag() == -z.imag()) found = true;
        CHECK(found);
    }
}

TEST_CASE("roots at the origin are stripped and merged back") {
    spectra::CharPoly poly;
    poly.degree = 3;
    poly.coeffs = {BigInt(0), BigInt(0), BigInt(-1), BigInt(1)};  // x^3 - x^2
    const auto rs = spectra::find_roots(poly);
    REQUIRE(rs.roots.size() == 3);
    CHECK(rs.roots[0] == Complex(0.0, 0.0));
    CHECK(rs.roots[1] == Complex(0.0, 0.0));
    CHECK(std::abs(rs.roots[2] - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("eigenset counts, ordering, and reciprocal mirroring") {
    const auto es = spectra::build_eigenset(SequenceFamily::fibonacci, 10);
    CHECK(es.records.size() == spectra::EigenSet::expected_count(10));
    CHECK(es.records.size() == 54);

    std::map<int, int> per_k;
    int prev_k = 0, prev_index = -1;
    for (const auto& rec : es.records) {
        // ordered by (k, index)
        CHECK((rec.k > prev_k || (rec.k == prev_k && rec.index == prev_index + 1)));
        prev_k = rec.k;
        prev_index = rec.index;
        ++per_k[rec.k];
        CHECK(rec.modulus_recip == std::abs(rec.reciprocal));
        CHECK(rec.residual <= 1e-12);
    }
    for (int k = 2; k <= 10; ++k) CHECK(per_k[k] == k);

    // complex records appear as exact conjugate pairs in lambda and reciprocal
    for (const auto& a : es.records) {
        if (a.lambda.imag() == 0.0) continue;
        bool found = false;
        for (const auto& b : es.records) {
            if (b.k != a.k) continue;
            if (b.lambda.real() == a.lambda.real() && b.lambda.imag() == -a.lambda.imag() &&
                b.reciprocal.real() == a.reciprocal.real() &&
                b.reciprocal.imag() == -a.reciprocal.imag())
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("exactly one eigenvalue of modulus > 1 per fibonacci size") {
    const auto es = spectra::build_eigenset(SequenceFamily::fibonacci, 60);
    std::map<int, int> outside;
    for (const auto& rec : es.records)
        if (std::abs(rec.lambda) > 1.0) ++outside[rec.k];
    for (int k = 2; k <= 60; ++k) CHECK(outside[k] == 1);
}

TEST_CASE("eigenset construction is deterministic across thread schedules") {
    const auto a = spectra::build_eigenset(SequenceFamily::fibonacci, 30);
    const auto b = spectra::build_eigenset(SequenceFamily::fibonacci, 30);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].lambda.real() == b.records[i].lambda.real());
        CHECK(a.records[i].lambda.imag() == b.records[i].lambda.imag());
        CHECK(a.records[i].reciprocal.real() == b.records[i].reciprocal.real());
        CHECK(a.records[i].reciprocal.imag() == b.records[i].reciprocal.imag());
    }
}

TEST_CASE("family names round-trip") {
    for (auto fam : {SequenceFamily::fibonacci, SequenceFamily::pell_lucas,
                     SequenceFamily::narayana, SequenceFamily::padovan})
        CHECK(spectra::parse_family(spectra::family_name(fam)) == fam);
    CHECK_THROWS_AS(spectra::parse_family("lucas"), eigenflow::InvalidArgument);
}

TEST_CASE("max_imag_by_size reports the reality structure") {
    const auto es = spectra::build_eigenset(SequenceFamily::fibonacci, 6);
    const auto rows = spectra::max_imag_by_size(es);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].first == 2);
    CHECK(rows[0].second == 0.0);   // both golden roots are real
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].second > 0.0);
}
