#include "harmonic/halfline.hpp"

#include <cmath>
#include <stdexcept>

#include "harmonic/frft.hpp"
#include "harmonic/quadrature.hpp"

namespace harmonic {

namespace {

void require_pairing(const CoeffVec& c, KernelSign sign, const char* who) {
  if (c.basis != Basis::Laguerre || c.alpha != kernel_alpha(sign))
    throw std::invalid_argument(std::string(who) +
                                ": coefficient basis does not match the kernel pairing");
}

}  // namespace

double kernel_alpha(KernelSign sign) { return sign == KernelSign::Plus ? -0.5 : 0.5; }

double t_transform_quadrature(const std::function<double(double)>& f, KernelSign sign,
                              double s, int m) {
  if (!(s > 0.0)) throw std::invalid_argument("t_transform_quadrature: need s > 0");
  if (m < 2) throw std::invalid_argument("t_transform_quadrature: need m >= 2 points");

  // After y = u^2 and the further scaling u = sqrt(2) v the integrand decays
  // like e^{-v^2}, matching the rule weight:
  //   [T f](s) = (2 / sqrt(2 pi)) s^{-1/4} 2^{3/4}
  //              integral_0^inf S(sqrt(2 s) v) v^{1/2} f(2 v^2) dv.
  // An even point count keeps the singular v = 0 endpoint off the rule.
  QuadRule rule = gauss_hermite(m % 2 == 0 ? m : m + 1);
  double b = std::sqrt(2.0 * s);
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    double v = rule.nodes[i];
    if (v <= 0.0) continue;
    double kernel = sign == KernelSign::Plus ? std::cos(b * v) : std::sin(b * v);
    acc += rule.weights[i] * kernel * std::sqrt(v) * f(2.0 * v * v);
  }
  return 2.0 / std::sqrt(2.0 * M_PI) * std::pow(s, -0.25) * std::pow(2.0, 0.75) * acc;
}

CoeffVec t_transform_spectral(const CoeffVec& c, KernelSign sign) {
  require_pairing(c, sign, "t_transform_spectral");
  CoeffVec out = c;
  for (int n = 1; n < out.size(); n += 2) out.values[n] = -out.values[n];
  return out;
}

CoeffVec frt_halfline(const CoeffVec& c, KernelSign sign, double a) {
  require_pairing(c, sign, "frt_halfline");
  CoeffVec out = c;
  for (int n = 0; n < out.size(); ++n) out.values[n] *= frft_phase(n, a);
  return out;
}

std::vector<CoeffVec> decompose_halfline(const CoeffVec& c, int k, KernelSign sign) {
  require_pairing(c, sign, "decompose_halfline");
  if (k < 1) throw std::invalid_argument("decompose_halfline: need k >= 1");
  std::vector<CoeffVec> parts;
  parts.reserve(k);
  for (int r = 0; r < k; ++r) {
    CoeffVec part = c;
    for (int n = 0; n < part.size(); ++n)
      if (n % k != r) part.values[n] = 0.0;
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace harmonic
