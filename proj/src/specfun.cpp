#include "harmonic/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace harmonic {

namespace {

constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^{-1/4}

void check_hermite_args(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_fn: index n must be >= 0");
  if (!std::isfinite(x)) throw std::invalid_argument("hermite_fn: x must be finite");
}

void check_laguerre_args(int n, double alpha, double y) {
  if (n < 0) throw std::invalid_argument("laguerre_fn: index n must be >= 0");
  if (!(alpha > -1.0)) throw std::invalid_argument("laguerre_fn: alpha must be > -1");
  if (!(y >= 0.0)) throw std::invalid_argument("laguerre_fn: y must be >= 0");
}

}  // namespace

double hermite_fn(int n, double x) {
  check_hermite_args(n, x);
  double km1 = kPiQuarterInv * std::exp(-0.5 * x * x);
  if (n == 0) return km1;
  double k = std::sqrt(2.0) * x * km1;
  for (int j = 2; j <= n; ++j) {
    double next = std::sqrt(2.0 / j) * x * k - std::sqrt((j - 1.0) / j) * km1;
    km1 = k;
    k = next;
  }
  return k;
}

std::vector<double> hermite_fn_batch(int nmax, double x) {
  check_hermite_args(nmax, x);
  std::vector<double> out(static_cast<size_t>(nmax) + 1);
  out[0] = kPiQuarterInv * std::exp(-0.5 * x * x);
  if (nmax >= 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int j = 2; j <= nmax; ++j)
    out[j] = std::sqrt(2.0 / j) * x * out[j - 1] - std::sqrt((j - 1.0) / j) * out[j - 2];
  return out;
}

double laguerre_fn_scaled(int n, double alpha, double y) {
  check_laguerre_args(n, alpha, y);
  // M_0^alpha / y^{alpha/2} = e^{-y/2} / sqrt(Gamma(alpha+1))
  double mm1 = std::exp(-0.5 * y - 0.5 * std::lgamma(alpha + 1.0));
  if (n == 0) return mm1;
  // L_1^alpha = alpha + 1 - y, normalization sqrt(1/(1+alpha)) on top of M_0.
  double m = (alpha + 1.0 - y) / std::sqrt(1.0 + alpha) * mm1;
  for (int j = 1; j < n; ++j) {
    double next = ((2.0 * j + 1.0 + alpha - y) * m - std::sqrt(j * (j + alpha)) * mm1) /
                  std::sqrt((j + 1.0) * (j + 1.0 + alpha));
    mm1 = m;
    m = next;
  }
  return m;
}

double laguerre_fn(int n, double alpha, double y) {
  double scaled = laguerre_fn_scaled(n, alpha, y);
  if (y == 0.0 && alpha == 0.0) return scaled;  // 0^0 := 1
  return std::pow(y, 0.5 * alpha) * scaled;
}

std::vector<double> laguerre_fn_batch(int nmax, double alpha, double y) {
  check_laguerre_args(nmax, alpha, y);
  double pow_factor = (y == 0.0 && alpha == 0.0) ? 1.0 : std::pow(y, 0.5 * alpha);
  std::vector<double> out(static_cast<size_t>(nmax) + 1);
  out[0] = std::exp(-0.5 * y - 0.5 * std::lgamma(alpha + 1.0));
  if (nmax >= 1) out[1] = (alpha + 1.0 - y) / std::sqrt(1.0 + alpha) * out[0];
  for (int j = 1; j < nmax; ++j)
    out[j + 1] = ((2.0 * j + 1.0 + alpha - y) * out[j] - std::sqrt(j * (j + alpha)) * out[j - 1]) /
                 std::sqrt((j + 1.0) * (j + 1.0 + alpha));
  for (auto& v : out) v *= pow_factor;
  return out;
}

double hermite_de_residual(int n, double x, double h) {
  if (h <= 0.0) throw std::invalid_argument("hermite_de_residual: step h must be > 0");
  check_hermite_args(n, x);
  double kp = hermite_fn(n, x + h);
  double k0 = hermite_fn(n, x);
  double km = hermite_fn(n, x - h);
  double second = (kp - 2.0 * k0 + km) / (h * h);
  return -second + (x * x - (2.0 * n + 1.0)) * k0;
}

BridgePair hermite_laguerre_bridge(int n, double x, bool odd_branch) {
  if (n < 0) throw std::invalid_argument("hermite_laguerre_bridge: n must be >= 0");
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  double y = x * x;
  BridgePair out{};
  if (!odd_branch) {
    // (x^2)^{1/4} M_n^{-1/2}(x^2) has the power cancelled by the scaled form.
    out.hermite = hermite_fn(2 * n, x);
    out.laguerre = sign * laguerre_fn_scaled(n, -0.5, y);
  } else {
    // x (x^2)^{-1/4} M_n^{1/2}(x^2) = x * scaled form; odd parity comes out
    // right for x < 0 automatically.
    out.hermite = hermite_fn(2 * n + 1, x);
    out.laguerre = sign * x * laguerre_fn_scaled(n, 0.5, y);
  }
  return out;
}

}  // namespace harmonic
