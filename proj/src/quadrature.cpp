#include "harmonic/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace harmonic {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix by QL with implicit shifts,
// tracking only the first component of each eigenvector (all Golub-Welsch
// needs for the weights). d: diagonal, e: subdiagonal (size n-1 on entry).
// On exit d holds the eigenvalues and z[i] the first component of the i-th
// normalized eigenvector.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  e.resize(n, 0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw std::runtime_error("tridiag_ql: eigenvalue iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

// Shared Golub-Welsch driver: eigen-decompose the Jacobi matrix, sort by
// node, return nodes plus log-weights log(mu0 * z_i^2).
void golub_welsch(std::vector<double> diag, std::vector<double> offdiag, double log_mu0,
                  std::vector<double>& nodes, std::vector<double>& log_weights) {
  const int m = static_cast<int>(diag.size());
  std::vector<double> z(m, 0.0);
  z[0] = 1.0;
  tridiag_ql(diag, offdiag, z);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return diag[a] < diag[b]; });

  nodes.resize(m);
  log_weights.resize(m);
  for (int i = 0; i < m; ++i) {
    nodes[i] = diag[order[i]];
    log_weights[i] = log_mu0 + 2.0 * std::log(std::abs(z[order[i]]));
  }
}

}  // namespace

QuadRule gauss_hermite(int m) {
  if (m < 1) throw std::invalid_argument("gauss_hermite: need at least one point");
  std::vector<double> diag(m, 0.0), offdiag(m > 1 ? m - 1 : 0);
  for (int i = 0; i + 1 < m; ++i) offdiag[i] = std::sqrt(0.5 * (i + 1));

  QuadRule rule;
  rule.kind = QuadKind::GaussHermite;
  std::vector<double> lw;
  golub_welsch(diag, offdiag, 0.5 * std::log(M_PI), rule.nodes, lw);

  // Enforce the exact +- node pairing the symmetric matrix guarantees in
  // exact arithmetic.
  for (int i = 0, j = m - 1; i < j; ++i, --j) {
    double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    double l = 0.5 * (lw[i] + lw[j]);
    lw[i] = lw[j] = l;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;

  rule.weights.resize(m);
  for (int i = 0; i < m; ++i)
    rule.weights[i] = std::exp(lw[i] + rule.nodes[i] * rule.nodes[i]);
  return rule;
}

QuadRule gauss_laguerre(int m, double alpha) {
  if (m < 1) throw std::invalid_argument("gauss_laguerre: need at least one point");
  if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must be > -1");
  std::vector<double> diag(m), offdiag(m > 1 ? m - 1 : 0);
  for (int i = 0; i < m; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 0; i + 1 < m; ++i) offdiag[i] = std::sqrt((i + 1.0) * (i + 1.0 + alpha));

  QuadRule rule;
  rule.kind = QuadKind::GaussLaguerre;
  rule.alpha = alpha;
  std::vector<double> lw;
  golub_welsch(diag, offdiag, std::lgamma(alpha + 1.0), rule.nodes, lw);

  rule.weights.resize(m);
  for (int i = 0; i < m; ++i)
    rule.weights[i] = std::exp(lw[i] - alpha * std::log(rule.nodes[i]) + rule.nodes[i]);
  return rule;
}

}  // namespace harmonic
