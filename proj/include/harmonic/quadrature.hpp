#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Gauss-Hermite and Gauss-Laguerre rules, used as the integration oracle
// behind every inner product on R and R+.
//
// Weights are stored for the PLAIN measure dx (resp. dy): the classical
// weight e^{-x^2} (resp. y^alpha e^{-y}) is folded into the weights, so
// sum_i w_i f(x_i) approximates the plain integral of f for integrands with
// the matching decay. The exponential folding happens in log space so large
// nodes do not overflow.

namespace harmonic {

using cplx = std::complex<double>;

enum class QuadKind { GaussHermite, GaussLaguerre };

struct QuadRule {
  QuadKind kind = QuadKind::GaussHermite;
  double alpha = 0.0;  // Laguerre parameter; unused for Gauss-Hermite
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// m-point rule with nodes at the roots of the degree-m Hermite polynomial
/// (Golub-Welsch on the symmetric tridiagonal Jacobi matrix). Nodes are
/// symmetrized exactly about 0.
QuadRule gauss_hermite(int m);

/// m-point rule on R+ for the Laguerre weight y^alpha e^{-y}, alpha > -1.
QuadRule gauss_laguerre(int m, double alpha);

/// sum_i w_i f(x_i). Throws if f is non-finite at a node, naming the node.
template <class F>
std::complex<double> integrate(const QuadRule& rule, F&& f) {
  std::complex<double> acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    std::complex<double> v = f(rule.nodes[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("integrate: integrand non-finite at node x=" +
                               std::to_string(rule.nodes[i]));
    acc += rule.weights[i] * v;
  }
  return acc;
}

/// Rule size used when projecting onto N modes: polynomial exactness for the
/// mode products plus a safety margin.
inline constexpr int default_rule_size(int modes) { return 2 * modes + 32; }

}  // namespace harmonic
