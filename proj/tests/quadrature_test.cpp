#include "harmonic/quadrature.hpp"

#include <cmath>

#include "doctest.h"

#include "harmonic/specfun.hpp"

using namespace harmonic;

TEST_CASE("one-point rules from the moment conditions") {
  QuadRule gh = gauss_hermite(1);
  REQUIRE(gh.size() == 1);
  CHECK(gh.nodes[0] == 0.0);
  CHECK(gh.weights[0] == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));

  QuadRule gl = gauss_laguerre(1, 0.0);
  REQUIRE(gl.size() == 1);
  CHECK(gl.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gl.weights[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("gauss-hermite: weighted monomial moments to machine accuracy") {
  QuadRule rule = gauss_hermite(20);
  // integral x^{2j} e^{-x^2} dx = Gamma(j + 1/2), exact for 2j <= 39
  for (int j = 0; j <= 19; ++j) {
    cplx got = integrate(rule, [j](double x) {
      return cplx(std::pow(x, 2 * j) * std::exp(-x * x), 0.0);
    });
    double expected = std::tgamma(j + 0.5);
    CHECK(std::abs(got.real() - expected) / expected < 1e-12);
    // odd moments vanish by node symmetry, up to roundoff against the
    // one-sided mass Gamma(j + 3/2)
    cplx odd = integrate(rule, [j](double x) {
      return cplx(std::pow(x, 2 * j + 1) * std::exp(-x * x), 0.0);
    });
    CHECK(std::abs(odd.real()) < 1e-12 * std::tgamma(j + 1.5));
  }
  cplx gauss = integrate(rule, [](double x) { return cplx(std::exp(-x * x), 0.0); });
  CHECK(std::abs(gauss.real() - std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("gauss-laguerre: gamma moments for alpha = +-1/2") {
  for (double alpha : {-0.5, 0.5}) {
    QuadRule rule = gauss_laguerre(20, alpha);
    for (int j = 0; j <= 10; ++j) {
      cplx got = integrate(rule, [alpha, j](double y) {
        return cplx(std::pow(y, alpha + j) * std::exp(-y), 0.0);
      });
      double expected = std::tgamma(alpha + j + 1.0);
      CHECK(std::abs(got.real() - expected) / expected < 1e-12);
    }
  }
}

TEST_CASE("rule structure: ordering, positivity, symmetry") {
  QuadRule gh = gauss_hermite(33);
  for (int i = 0; i + 1 < gh.size(); ++i) CHECK(gh.nodes[i] < gh.nodes[i + 1]);
  for (double w : gh.weights) CHECK(w > 0.0);
  for (int i = 0, j = gh.size() - 1; i < j; ++i, --j) {
    CHECK(gh.nodes[i] == -gh.nodes[j]);
    CHECK(gh.weights[i] == gh.weights[j]);
  }
  CHECK(gh.nodes[16] == 0.0);

  QuadRule gl = gauss_laguerre(25, -0.5);
  for (int i = 0; i + 1 < gl.size(); ++i) CHECK(gl.nodes[i] < gl.nodes[i + 1]);
  CHECK(gl.nodes[0] > 0.0);
  for (double w : gl.weights) CHECK(w > 0.0);
}

TEST_CASE("orthonormality integrals through the plain-measure weights") {
  QuadRule gh64 = gauss_hermite(64);
  cplx k00 = integrate(gh64, [](double x) {
    double k = hermite_fn(0, x);
    return cplx(k * k, 0.0);
  });
  CHECK(std::abs(k00.real() - 1.0) < 1e-12);
  cplx k35 = integrate(gh64, [](double x) {
    return cplx(hermite_fn(3, x) * hermite_fn(5, x), 0.0);
  });
  CHECK(std::abs(k35.real()) < 1e-12);

  QuadRule gh40 = gauss_hermite(40);
  cplx k00b = integrate(gh40, [](double x) {
    double k = hermite_fn(0, x);
    return cplx(k * k, 0.0);
  });
  CHECK(std::abs(k00b.real() - 1.0) < 1e-12);

  QuadRule gl40 = gauss_laguerre(40, 0.5);
  cplx m00 = integrate(gl40, [](double y) {
    double m = laguerre_fn(0, 0.5, y);
    return cplx(m * m, 0.0);
  });
  CHECK(std::abs(m00.real() - 1.0) < 1e-12);
}

TEST_CASE("zero integrand and error naming the node") {
  QuadRule rule = gauss_hermite(8);
  cplx zero = integrate(rule, [](double) { return cplx(0.0, 0.0); });
  CHECK(zero == cplx(0.0, 0.0));

  CHECK_THROWS_WITH_AS(
      integrate(rule, [](double x) { return cplx(1.0 / (x - x), 0.0); }),
      doctest::Contains("node"), std::runtime_error);
}

TEST_CASE("quadrature error decreases with rule size until the floor") {
  // Genuine convergence on a non-polynomial integrand with a closed form:
  // integral cos(3x) e^{-x^2} dx = sqrt(pi) e^{-9/4}.
  const double exact = std::sqrt(M_PI) * std::exp(-2.25);
  auto cos_err = [exact](int m) {
    QuadRule rule = gauss_hermite(m);
    cplx got = integrate(rule, [](double x) {
      return cplx(std::cos(3.0 * x) * std::exp(-x * x), 0.0);
    });
    return std::abs(got.real() - exact);
  };
  double e4 = cos_err(4), e6 = cos_err(6), e8 = cos_err(8);
  CHECK(e4 > e6);
  CHECK(e6 > e8);
  CHECK(cos_err(24) < 1e-14);

  // K50*K50 needs 51 points for polynomial exactness; every rule from 64 up
  // sits at the floating-point floor.
  for (int m : {64, 96, 128}) {
    QuadRule rule = gauss_hermite(m);
    cplx got = integrate(rule, [](double x) {
      double k = hermite_fn(50, x);
      return cplx(k * k, 0.0);
    });
    CHECK(std::abs(got.real() - 1.0) < 1e-12);
  }
}

TEST_CASE("rule construction domain errors") {
  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(5, -1.0), std::invalid_argument);
}
