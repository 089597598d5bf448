#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "eigenflow/jungreis.hpp"
#include "eigenflow/spectra.hpp"

using eigenflow::BigInt;
using eigenflow::Complex;
using eigenflow::RangeError;
using eigenflow::SingularityError;
namespace jungreis = eigenflow::jungreis;
namespace spectra = eigenflow::spectra;

namespace {

const spectra::EigenSet& fib100() {
    static const spectra::EigenSet es =
        spectra::build_eigenset(spectra::SequenceFamily::fibonacci, 100, 1e-12);
    return es;
}

// Upper bound on |psi(w, m2) - psi(w, m1)| from the coefficient magnitudes.
double tail_bound(double mod_w, int m1, int m2) {
    const auto& series = jungreis::coefficients();
    double bound = 0.0;
    for (int k = m1 + 1; k <= m2; ++k)
        bound += std::abs(series.a(k).double_value) * std::pow(mod_w, -(k - 1));
    return bound;
}

}  // namespace

TEST_CASE("coefficient table: leading entries, spot checks, and length") {
    const auto& series = jungreis::coefficients();
    REQUIRE(series.coefficients.size() == 65);

    CHECK(series.a(1).numerator == BigInt(-1));
    CHECK(series.a(1).denominator == BigInt(2));
    CHECK(series.a(2).numerator == BigInt(1));
    CHECK(series.a(2).denominator == BigInt(8));
    CHECK(series.a(3).numerator == BigInt(-1));
    CHECK(series.a(3).denominator == BigInt(4));
    CHECK(series.a(4).numerator == BigInt(15));
    CHECK(series.a(4).denominator == BigInt(128));
    CHECK(series.a(15).numerator == BigInt(-21));
    CHECK(series.a(15).denominator == BigInt(512));
    CHECK(series.a(65).numerator == BigInt(0));

    // Small dyadic entries convert exactly.
    CHECK(series.a(1).double_value == -0.5);
    CHECK(series.a(4).double_value == 15.0 / 128.0);
    CHECK(series.a(15).double_value == -21.0 / 512.0);

    CHECK_THROWS_AS(series.a(0), RangeError);
    CHECK_THROWS_AS(series.a(66), RangeError);
}

TEST_CASE("a_64's 36-digit numerator survives the big-integer float conversion") {
    // Frozen oracle: exact-rational value rounded to nearest double.
    const auto& a64 = jungreis::coefficients().a(64);
    CHECK(a64.numerator > BigInt(0));
    CHECK(a64.double_value == doctest::Approx(0.006371861782096671).epsilon(1e-15));
    // Denominators are powers of two throughout, so conversion is a pure
    // 2^k scaling of the numerator.
    for (int k = 1; k <= 65; ++k) {
        const BigInt& den = jungreis::coefficients().a(k).denominator;
        CHECK((den & (den - 1)) == BigInt(0));
    }
}

TEST_CASE("psi_truncated: frozen evaluation oracles") {
    CHECK(jungreis::psi_truncated(Complex(10.0, 0.0)).real() ==
          doctest::Approx(9.510116669016675636026967).epsilon(1e-13));
    CHECK(jungreis::psi_truncated(Complex(10.0, 0.0)).imag() == 0.0);
    CHECK(jungreis::psi_truncated(Complex(10.0, 0.0), 4).real() ==
          doctest::Approx(9.5101171875).epsilon(1e-14));
    CHECK(jungreis::psi_truncated(Complex(2.0, 0.0)).real() ==
          doctest::Approx(1.512464715466225886966204).epsilon(1e-13));
    const Complex z = jungreis::psi_truncated(std::polar(1.2, 1.0 / 3.0));
    CHECK(z.real() == doctest::Approx(0.6379500619138168785319296).epsilon(1e-12));
    CHECK(z.imag() == doctest::Approx(0.4371686765319391811196999).epsilon(1e-12));
}

TEST_CASE("psi_truncated at m=1 is exactly w - 1/2") {
    const std::vector<Complex> samples = {{10.0, 0.0}, {1.2, 0.0},   {-3.0, 4.0},
                                          {0.5, 0.5},  {2.0, -7.25}, {0.0, 1.0}};
    for (const Complex& w : samples) {
        const Complex got = jungreis::psi_truncated(w, 1);
        CHECK(got.real() == w.real() - 0.5);
        CHECK(got.imag() == w.imag());
    }
}

TEST_CASE("psi_truncated: conjugation equivariance (real coefficients)") {
    for (int i = 0; i < 12; ++i) {
        const Complex w = std::polar(1.2 + 0.2 * i, 0.37 * i + 0.1);
        for (int m : {1, 7, 33, 65}) {
            const Complex a = jungreis::psi_truncated(std::conj(w), m);
            const Complex b = std::conj(jungreis::psi_truncated(w, m));
            CHECK(a.real() == b.real());
            CHECK(a.imag() == b.imag());
        }
    }
}

TEST_CASE("psi_truncated input validation") {
    CHECK_THROWS_AS(jungreis::psi_truncated(Complex(0.0, 0.0)), SingularityError);
    CHECK_THROWS_AS(jungreis::psi_truncated(Complex(1.0, 0.0), 0), RangeError);
    CHECK_THROWS_AS(jungreis::psi_truncated(Complex(1.0, 0.0), 66), RangeError);
}

TEST_CASE("truncation tail bound holds for sampled w with |w| >= 1.2") {
    const std::vector<std::pair<int, int>> orders = {{1, 65}, {10, 33}, {32, 65}, {1, 2}};
    for (int i = 0; i < 24; ++i) {
        const double mod_w = 1.2 + 0.3 * (i % 5);
        const Complex w = std::polar(mod_w, 2.0 * M_PI * i / 24.0);
        for (const auto& [m1, m2] : orders) {
            const double diff =
                std::abs(jungreis::psi_truncated(w, m2) - jungreis::psi_truncated(w, m1));
            CHECK(diff <= tail_bound(mod_w, m1, m2) * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("partition_by_modulus splits the eigenset like the reference counts") {
    const auto part = jungreis::partition_by_modulus(fib100());
    CHECK(part.unit_ring.size() == 2054);
    CHECK(part.inside.size() == 99);   // the dominant-root reciprocals
    CHECK(part.outside.size() == 2896);
    CHECK(part.unit_ring.size() + part.inside.size() + part.outside.size() ==
          fib100().records.size());
    for (const auto& rec : part.inside) CHECK(rec.modulus_recip < 0.99);
    for (const auto& rec : part.unit_ring) {
        CHECK(rec.modulus_recip >= 0.99);
        CHECK(rec.modulus_recip < 1.01);
    }
    for (const auto& rec : part.outside) CHECK(rec.modulus_recip >= 1.01);
}

TEST_CASE("partition_by_modulus at n_max=10 isolates the nine inside points") {
    const auto es = spectra::build_eigenset(spectra::SequenceFamily::fibonacci, 10);
    const auto part = jungreis::partition_by_modulus(es);
    CHECK(part.inside.size() == 9);
    CHECK(part.unit_ring.size() == 0);
    CHECK(part.outside.size() == 45);
    CHECK_THROWS_AS(jungreis::partition_by_modulus(es, 0.0),
                    eigenflow::InvalidArgument);
}

TEST_CASE("jungreis homotopy: endpoints, midpoint, and exact linearity in t") {
    const std::vector<Complex> samples = {{1.3, 0.2}, {0.4, -0.9}, {2.0, 2.0}, {-1.01, 0.0}};
    for (const Complex& z : samples) {
        const Complex at0 = jungreis::jungreis_homotopy(z, 0.0);
        CHECK(at0.real() == z.real());
        CHECK(at0.imag() == z.imag());

        const Complex psi = jungreis::psi_truncated(z);
        const Complex at1 = jungreis::jungreis_homotopy(z, 1.0);
        CHECK(at1.real() == psi.real());
        CHECK(at1.imag() == psi.imag());

        for (double t : {0.25, 0.5, 0.75}) {
            const Complex expected = z + t * (psi - z);
            const Complex got = jungreis::jungreis_homotopy(z, t);
            CHECK(got.real() == expected.real());
            CHECK(got.imag() == expected.imag());
        }
    }
}

TEST_CASE("jungreis homotopy input validation") {
    CHECK_THROWS_AS(jungreis::jungreis_homotopy(Complex(0.0, 0.0), 0.5), SingularityError);
    CHECK_THROWS_AS(jungreis::jungreis_homotopy(Complex(1.0, 0.0), -0.1), RangeError);
    CHECK_THROWS_AS(jungreis::jungreis_homotopy(Complex(1.0, 0.0), 1.1), RangeError);
    CHECK_THROWS_AS(jungreis::jungreis_homotopy(Complex(1.0, 0.0), 0.5, 0), RangeError);
}
