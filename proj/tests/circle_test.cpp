#include "harmonic/circle.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

#include "harmonic/specfun.hpp"

using namespace harmonic;
using namespace std::complex_literals;

namespace {

// Brute-force wrap sum with a huge fixed radius, the oracle the adaptive
// truncation is checked against.
double wrap_sum_oracle(int n, double phi, int kmax = 50) {
  double acc = 0.0;
  for (int k = -kmax; k <= kmax; ++k) acc += hermite_fn(n, phi + 2.0 * k * M_PI);
  return acc;
}

}  // namespace

TEST_CASE("periodized hermite: direct wrap sum against the wide oracle") {
  // K0: neighbors at +-2pi are e^{-2pi^2}-suppressed, so the value sits
  // within 1e-8 of K0(0) = pi^{-1/4}
  double v0 = periodized_hermite_direct(0, 0.0, 1e-12);
  CHECK(std::abs(v0 - wrap_sum_oracle(0, 0.0)) < 1e-13);
  CHECK(std::abs(v0 - 0.7511255444649425) < 1e-8);
  CHECK(v0 != 0.7511255444649425);  // the neighbor terms do shift it

  // K1 is odd, so at phi = 0 the wrap terms cancel in pairs exactly
  double v1 = periodized_hermite_direct(1, 0.0, 1e-12);
  CHECK(v1 == wrap_sum_oracle(1, 0.0));
  CHECK(std::abs(v1) < 1e-15);

  for (int n : {0, 1, 2, 5, 9, 14, 20})
    for (double phi : {-3.0, -0.4, 0.0, 0.3, 1.2, 3.1})
      CHECK(std::abs(periodized_hermite_direct(n, phi, 1e-12) - wrap_sum_oracle(n, phi)) <
            1e-12);

  CHECK_THROWS_AS(periodized_hermite_direct(0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("periodized hermite: periodicity by construction") {
  for (int n : {0, 3, 8})
    for (double phi : {-2.0, 0.7}) {
      double a = periodized_hermite_direct(n, phi, 1e-12);
      double b = periodized_hermite_direct(n, phi + 2.0 * M_PI, 1e-12);
      CHECK(std::abs(a - b) < 1e-11);
    }
}

TEST_CASE("fourier coefficients i^n K_n(m)") {
  CircleFunc c1 = circle_fourier_coeffs(1, 5);
  CHECK(c1.at(0) == std::complex<double>(0.0, 0.0));  // i * K_1(0) = 0

  CircleFunc c0 = circle_fourier_coeffs(0, 5);
  CHECK(std::abs(c0.at(0) - std::complex<double>(0.7511255444649425, 0.0)) < 1e-14);

  CircleFunc c2 = circle_fourier_coeffs(2, 5);
  CHECK(std::abs(c2.at(1) - std::complex<double>(-hermite_fn(2, 1.0), 0.0)) < 1e-15);
}

TEST_CASE("fourier construction matches the direct wrap sum") {
  for (int n = 0; n <= 20; ++n) {
    for (double phi : {-2.4, 0.0, 0.3, 1.9}) {
      std::complex<double> f = periodized_hermite_fourier(n, phi, 30);
      double direct = periodized_hermite_direct(n, phi, 1e-12);
      CHECK(std::abs(f.real() - direct) < 1e-8);
      CHECK(std::abs(f.imag()) < 1e-10);
    }
  }
  // n = 1 at phi = 0: both constructions give the exact parity zero
  std::complex<double> f10 = periodized_hermite_fourier(1, 0.0, 30);
  CHECK(std::abs(f10) < 1e-15);
}

TEST_CASE("chi sequences") {
  ChiSeq chi1 = chi_seq(1, 10);
  CHECK(chi1.at(0) == 0.0);
  for (int m = 1; m <= 10; ++m) CHECK(chi1.at(-m) == -chi1.at(m));

  ChiSeq chi0 = chi_seq(0, 40);
  for (int m = -40; m <= 40; ++m)
    CHECK(chi0.at(m) ==
          doctest::Approx(0.7511255444649425 * std::exp(-0.5 * m * m)).epsilon(1e-14));

  double norm2 = 0.0;
  for (double s : chi0.samples) norm2 += s * s;
  CHECK(norm2 == doctest::Approx(1.0001034463724076).epsilon(1e-13));

  // declared tail: K_n(+-M) negligible for these M
  CHECK(std::abs(chi0.at(40)) < 1e-300);
}

TEST_CASE("gram matrix structure and quadrature cross-check") {
  const int N = 11, M = 40;
  GramMatrix g = gram_matrix(N, M);

  for (int n = 0; n < N; ++n) {
    CHECK(g.at(n, n).imag() == 0.0);
    CHECK(g.at(n, n).real() > 0.0);
    ChiSeq chi = chi_seq(n, M);
    double norm2 = 0.0;
    for (double s : chi.samples) norm2 += s * s;
    CHECK(std::abs(g.at(n, n).real() - norm2) < 1e-13);
  }

  // parity kills even-odd overlaps over the symmetric integers
  CHECK(std::abs(g.at(0, 1)) < 1e-15);

  // hermitian
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) CHECK(std::abs(g.at(n, m) - std::conj(g.at(m, n))) < 1e-15);

  // against direct circle quadrature of the periodized functions: the
  // integral of KK_n KK_m over the circle IS i^{m-n} (chi_n, chi_m)
  const int grid = 512;
  for (int n = 0; n <= 10; ++n)
    for (int m = n; m <= 10; ++m) {
      double acc = 0.0;
      for (int j = 0; j < grid; ++j) {
        double phi = -M_PI + 2.0 * M_PI * j / grid;
        acc += periodized_hermite_fourier(n, phi, 36).real() *
               periodized_hermite_fourier(m, phi, 36).real();
      }
      acc *= 2.0 * M_PI / grid;
      CHECK(std::abs(g.at(n, m) - acc) < 1e-8);
    }
}

TEST_CASE("gram condition number is finite and grows") {
  double c4 = gram_condition_number(4, 40);
  double c10 = gram_condition_number(10, 40);
  CHECK(c4 >= 1.0);
  CHECK(std::isfinite(c4));
  CHECK(c10 > c4);
}

TEST_CASE("gram-schmidt") {
  ChiSeq chi0 = chi_seq(0, 30), chi1 = chi_seq(1, 30), chi2 = chi_seq(2, 30);

  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  };

  // single vector: just normalized
  auto single = gram_schmidt({chi0.samples});
  CHECK(std::abs(dot(single[0], single[0]) - 1.0) < 1e-14);
  double scale0 = chi0.samples[30] / single[0][30];
  CHECK(scale0 > 0.0);

  // chi0, chi1 are already orthogonal by parity
  auto pair = gram_schmidt({chi0.samples, chi1.samples});
  CHECK(std::abs(dot(pair[0], pair[1])) < 1e-12);
  for (size_t i = 0; i < pair[1].size(); ++i)
    CHECK(pair[1][i] * dot(chi1.samples, chi1.samples) ==
          doctest::Approx(chi1.samples[i] * std::sqrt(dot(chi1.samples, chi1.samples)))
              .epsilon(1e-10));

  // chi0, chi2 overlap, so the second output is visibly deflated
  auto skew = gram_schmidt({chi0.samples, chi2.samples});
  CHECK(std::abs(dot(skew[0], skew[1])) < 1e-12);
  double overlap = dot(chi0.samples, chi2.samples);
  CHECK(std::abs(overlap) > 1e-3);  // the raw vectors are not orthogonal

  // orthonormality and span preservation for the first six chi's
  std::vector<std::vector<double>> inputs;
  for (int n = 0; n < 6; ++n) inputs.push_back(chi_seq(n, 30).samples);
  auto ortho = gram_schmidt(inputs);
  for (size_t i = 0; i < ortho.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      CHECK(std::abs(dot(ortho[i], ortho[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
  for (const auto& input : inputs) {
    std::vector<double> recon(input.size(), 0.0);
    for (const auto& u : ortho) {
      double proj = dot(u, input);
      for (size_t i = 0; i < recon.size(); ++i) recon[i] += proj * u[i];
    }
    for (size_t i = 0; i < recon.size(); ++i) CHECK(std::abs(recon[i] - input[i]) < 1e-10);
  }

  // a duplicate vector collapses the pivot
  CHECK_THROWS_WITH_AS(gram_schmidt({chi0.samples, chi0.samples}), doctest::Contains("1"),
                       std::runtime_error);
}

TEST_CASE("exact hermite-value determinants") {
  CHECK(hermite_integer_det(0, DetMode::Half) == "1");
  CHECK(hermite_integer_det(1, DetMode::Half) == "2");
  // det [[1,1,1],[-2,0,2],[2,-2,2]] expanded by hand and by an independent
  // exact-arithmetic oracle
  CHECK(hermite_integer_det(1, DetMode::Full) == "16");
  CHECK(hermite_integer_det(2, DetMode::Half) == "16");
  CHECK(hermite_integer_det(3, DetMode::Half) == "768");
  CHECK(hermite_integer_det(2, DetMode::Full) == "294912");

  for (int n = 0; n <= 6; ++n) {
    CHECK(hermite_integer_det(n, DetMode::Half) != "0");
    CHECK(hermite_integer_det(n, DetMode::Full) != "0");
  }

  CHECK_THROWS_AS(hermite_integer_det(-1, DetMode::Half), std::invalid_argument);
  CHECK_THROWS_AS(hermite_integer_det(40, DetMode::Full), std::invalid_argument);
}

TEST_CASE("fourier series on the circle") {
  // a single exponential is picked out at exactly one index
  CircleFunc c = fourier_series_analyze(
      [](double phi) { return std::exp(3.0i * phi); }, 5, 16);
  int hits = 0;
  for (int m = -5; m <= 5; ++m) {
    if (std::abs(c.at(m)) > 1e-14) {
      ++hits;
      CHECK(std::abs(std::abs(c.at(m)) - std::sqrt(2.0 * M_PI)) < 1e-13);
      CHECK(std::abs(m) == 3);
    }
  }
  CHECK(hits == 1);

  // unitarity: sum |c_m|^2 equals the circle norm squared
  CHECK(std::abs(circle_norm2(c) - 2.0 * M_PI) < 1e-12);

  // the periodized K2 comes back with coefficients i^2 K_2(m)
  CircleFunc k2 = fourier_series_analyze(
      [](double phi) { return std::complex<double>(periodized_hermite_fourier(2, phi, 36)); },
      8, 64);
  for (int m = -8; m <= 8; ++m)
    CHECK(std::abs(k2.at(m) - std::complex<double>(-hermite_fn(2, double(m)), 0.0)) < 1e-8);

  // zero function
  CircleFunc zero = fourier_series_analyze([](double) { return 0.0i; }, 3, 8);
  for (const auto& v : zero.coeffs) CHECK(v == std::complex<double>(0.0, 0.0));

  // band-limited round trip is exact to near machine precision
  CircleFunc mix;
  mix.mmax = 4;
  mix.coeffs.assign(9, 0.0);
  mix.at(-3) = std::complex<double>(0.5, -1.0);
  mix.at(0) = std::complex<double>(2.0, 0.0);
  mix.at(4) = std::complex<double>(0.0, 0.25);
  CircleFunc back = fourier_series_analyze(
      [&mix](double phi) { return fourier_series_synthesize(mix, phi); }, 4, 16);
  for (int m = -4; m <= 4; ++m) CHECK(std::abs(back.at(m) - mix.at(m)) < 1e-12);

  // aliasing guard
  CHECK_THROWS_WITH_AS(fourier_series_analyze([](double) { return 0.0i; }, 5, 10),
                       doctest::Contains("alias"), std::invalid_argument);
}
