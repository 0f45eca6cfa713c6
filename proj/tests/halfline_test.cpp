#include "harmonic/halfline.hpp"

#include <cmath>

#include "doctest.h"

#include "harmonic/quadrature.hpp"
#include "harmonic/specfun.hpp"

using namespace harmonic;

namespace {

CoeffVec lag_vec(std::vector<cplx> values, double alpha) {
  CoeffVec c;
  c.basis = Basis::Laguerre;
  c.alpha = alpha;
  c.values = std::move(values);
  return c;
}

}  // namespace

TEST_CASE("kernel pairing constants") {
  CHECK(kernel_alpha(KernelSign::Plus) == -0.5);
  CHECK(kernel_alpha(KernelSign::Minus) == 0.5);
}

TEST_CASE("spectral involution flips odd coefficients") {
  CoeffVec c = lag_vec({1.0, 1.0, 1.0}, -0.5);
  CoeffVec t = t_transform_spectral(c, KernelSign::Plus);
  CHECK(t.values[0] == cplx(1.0, 0.0));
  CHECK(t.values[1] == cplx(-1.0, 0.0));
  CHECK(t.values[2] == cplx(1.0, 0.0));

  CoeffVec e0 = lag_vec({1.0}, -0.5);
  CHECK(t_transform_spectral(e0, KernelSign::Plus).values[0] == cplx(1.0, 0.0));
  CoeffVec e1 = lag_vec({0.0, 1.0}, 0.5);
  CHECK(t_transform_spectral(e1, KernelSign::Minus).values[1] == cplx(-1.0, 0.0));

  // involution: applying twice is the identity, bitwise
  CoeffVec twice = t_transform_spectral(t, KernelSign::Plus);
  for (int n = 0; n < 3; ++n) CHECK(twice.values[n] == c.values[n]);
}

TEST_CASE("fractional transform: identity, involution, group law") {
  CoeffVec c = lag_vec({cplx(0.5, 0.2), cplx(-1.0, 1.0), cplx(0.0, -0.7), cplx(2.0, 0.0)}, 0.5);
  CoeffVec id = frt_halfline(c, KernelSign::Minus, 0.0);
  CoeffVec full = frt_halfline(c, KernelSign::Minus, 4.0);
  for (int n = 0; n < 4; ++n) {
    CHECK(id.values[n] == c.values[n]);
    CHECK(full.values[n] == c.values[n]);
  }

  CoeffVec via_frt = frt_halfline(c, KernelSign::Minus, 2.0);
  CoeffVec via_inv = t_transform_spectral(c, KernelSign::Minus);
  for (int n = 0; n < 4; ++n) CHECK(via_frt.values[n] == via_inv.values[n]);

  CoeffVec lhs = frt_halfline(frt_halfline(c, KernelSign::Minus, 0.8), KernelSign::Minus, 1.4);
  CoeffVec rhs = frt_halfline(c, KernelSign::Minus, 2.2);
  for (int n = 0; n < 4; ++n) CHECK(std::abs(lhs.values[n] - rhs.values[n]) < 1e-14);

  CHECK(std::abs(energy(frt_halfline(c, KernelSign::Minus, 1.3)) - energy(c)) < 1e-13);
}

TEST_CASE("quadrature transform reproduces the eigenrelation") {
  // T+ M_0^{-1/2}(s) = M_0^{-1/2}(s)
  double got = t_transform_quadrature([](double y) { return laguerre_fn(0, -0.5, y); },
                                      KernelSign::Plus, 1.0, 96);
  CHECK(std::abs(got - laguerre_fn(0, -0.5, 1.0)) < 1e-8);

  // T- M_1^{+1/2}(s) = -M_1^{+1/2}(s)
  double m1 = t_transform_quadrature([](double y) { return laguerre_fn(1, 0.5, y); },
                                     KernelSign::Minus, 2.0, 96);
  CHECK(std::abs(m1 - (-laguerre_fn(1, 0.5, 2.0))) < 1e-6);

  double zero =
      t_transform_quadrature([](double) { return 0.0; }, KernelSign::Plus, 1.0, 64);
  CHECK(zero == 0.0);

  CHECK_THROWS_AS(t_transform_quadrature([](double) { return 0.0; }, KernelSign::Plus, 0.0, 64),
                  std::invalid_argument);
  CHECK_THROWS_AS(t_transform_quadrature([](double) { return 0.0; }, KernelSign::Plus, -1.0, 64),
                  std::invalid_argument);
}

TEST_CASE("spectral and quadrature routes agree on an in-span function") {
  for (KernelSign sign : {KernelSign::Plus, KernelSign::Minus}) {
    double alpha = kernel_alpha(sign);
    QuadRule rule = gauss_laguerre(default_rule_size(16), alpha);
    RealFn f = [alpha](double y) {
      auto b = laguerre_fn_batch(15, alpha, y);
      return cplx(b[0] - 0.4 * b[3] + 0.2 * b[8] + 0.7 * b[15], 0.0);
    };
    CoeffVec c = analyze_laguerre(f, 16, alpha, rule);
    CoeffVec tc = t_transform_spectral(c, sign);
    for (double s : {0.1, 0.5, 1.0, 3.0, 8.0, 20.0}) {
      double direct = t_transform_quadrature(
          [&f](double y) { return f(y).real(); }, sign, s, 128);
      cplx spectral = synthesize_laguerre(tc, {s})[0];
      CHECK(std::abs(spectral.real() - direct) < 1e-6);
      CHECK(std::abs(spectral.imag()) < 1e-12);
    }
  }
}

TEST_CASE("bridge consistency: hermite route equals laguerre route") {
  // [T+ M_n^{-1/2}](s) via the cos transform of K_{2n}: the even Hermite
  // identity turns u^{1/2} M_n^{-1/2}(u^2) into (-1)^n K_{2n}(u), so
  //   [T+ M_n^{-1/2}](s) = s^{-1/4} K_{2n}(sqrt(s)).
  QuadRule rule = gauss_hermite(256);
  for (int n = 0; n <= 8; ++n) {
    for (double s : {0.3, 1.0, 2.5, 6.0}) {
      double b = std::sqrt(s);
      cplx cosint = integrate(rule, [n, b](double u) {
        return cplx(u > 0.0 ? std::cos(b * u) * hermite_fn(2 * n, u) : 0.0, 0.0);
      });
      double sign = (n % 2 == 0) ? 1.0 : -1.0;
      double hermite_route =
          sign * 2.0 / std::sqrt(2.0 * M_PI) * std::pow(s, -0.25) * cosint.real();
      double laguerre_route = t_transform_quadrature(
          [n](double y) { return laguerre_fn(n, -0.5, y); }, KernelSign::Plus, s, 128);
      CHECK(std::abs(hermite_route - laguerre_route) < 1e-8);
      // both equal the eigenrelation value
      CHECK(std::abs(laguerre_route - sign * laguerre_fn(n, -0.5, s)) < 1e-8);
    }
  }
}

TEST_CASE("half-line decomposition") {
  CoeffVec c = lag_vec({1.0, 1.0, cplx(0.0, 1.0), -2.0, 0.5, 1.5}, -0.5);

  auto one = decompose_halfline(c, 1, KernelSign::Plus);
  REQUIRE(one.size() == 1);
  for (int n = 0; n < 6; ++n) CHECK(one[0].values[n] == c.values[n]);

  for (int k : {2, 3}) {
    auto parts = decompose_halfline(c, k, KernelSign::Plus);
    double total = 0.0;
    for (int r = 0; r < k; ++r) {
      CoeffVec t = frt_halfline(parts[r], KernelSign::Plus, 4.0 / k);
      cplx ev = std::polar(1.0, 2.0 * M_PI * r / k);
      for (int n = 0; n < 6; ++n)
        CHECK(std::abs(t.values[n] - ev * parts[r].values[n]) < 1e-13);
      total += energy(parts[r]);
    }
    CHECK(std::abs(total - energy(c)) < 1e-14);
  }

  // e0 is fixed, e1 flips under the k = 2 involution
  CoeffVec pair = lag_vec({1.0, 1.0}, -0.5);
  auto parts = decompose_halfline(pair, 2, KernelSign::Plus);
  CoeffVec t0 = frt_halfline(parts[0], KernelSign::Plus, 2.0);
  CoeffVec t1 = frt_halfline(parts[1], KernelSign::Plus, 2.0);
  CHECK(t0.values[0] == cplx(1.0, 0.0));
  CHECK(t1.values[1] == cplx(-1.0, 0.0));
}

TEST_CASE("pairing mismatches are rejected") {
  CoeffVec wrong = lag_vec({1.0}, 0.5);
  CHECK_THROWS_AS(t_transform_spectral(wrong, KernelSign::Plus), std::invalid_argument);
  CHECK_THROWS_AS(frt_halfline(wrong, KernelSign::Plus, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(decompose_halfline(wrong, 2, KernelSign::Plus), std::invalid_argument);

  CoeffVec herm;
  herm.values = {1.0};
  CHECK_THROWS_AS(t_transform_spectral(herm, KernelSign::Plus), std::invalid_argument);
}
