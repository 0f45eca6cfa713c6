#include "harmonic/frft.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonic {

cplx frft_phase(int n, double a) {
  double amod = std::fmod(a, 4.0);
  if (amod < 0.0) amod += 4.0;
  double t = std::fmod(n * amod, 4.0);
  if (t < 0.0) t += 4.0;
  double quarter = std::round(t);
  if (t == quarter) {
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int q = static_cast<int>(quarter) % 4;
    cplx p = table[q];
    return kFrftPhaseSign > 0 ? p : std::conj(p);
  }
  return std::polar(1.0, kFrftPhaseSign * 0.5 * M_PI * t);
}

CoeffVec frft(const CoeffVec& c, double a) {
  if (c.basis != Basis::Hermite)
    throw std::invalid_argument("frft: coefficient basis mismatch (need Hermite)");
  CoeffVec out = c;
  for (int n = 0; n < out.size(); ++n) out.values[n] *= frft_phase(n, a);
  return out;
}

cplx fourier_quadrature(const RealFn& f, double p, const QuadRule& rule) {
  if (rule.kind != QuadKind::GaussHermite)
    throw std::invalid_argument("fourier_quadrature: need a Gauss-Hermite rule");
  cplx acc = integrate(rule, [&](double x) {
    return std::polar(1.0, kFrftPhaseSign * p * x) * f(x);
  });
  return acc / std::sqrt(2.0 * M_PI);
}

CoeffVec project_subspace(const CoeffVec& c, SubspaceLabel s) {
  if (s.k < 1 || s.r < 0 || s.r >= s.k)
    throw std::invalid_argument("project_subspace: need 0 <= r < k");
  CoeffVec out = c;
  for (int n = 0; n < out.size(); ++n)
    if (n % s.k != s.r) out.values[n] = 0.0;
  return out;
}

std::vector<CoeffVec> decompose(const CoeffVec& c, int k) {
  if (k < 1) throw std::invalid_argument("decompose: need k >= 1");
  std::vector<CoeffVec> parts;
  parts.reserve(k);
  for (int r = 0; r < k; ++r) parts.push_back(project_subspace(c, {k, r}));
  return parts;
}

}  // namespace harmonic
