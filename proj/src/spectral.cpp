#include "harmonic/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "harmonic/specfun.hpp"

namespace harmonic {

namespace {

std::vector<double> basis_batch(Basis basis, double alpha, int nmax, double x) {
  return basis == Basis::Hermite ? hermite_fn_batch(nmax, x)
                                 : laguerre_fn_batch(nmax, alpha, x);
}

// Shared projection core. Nodes/weights may come from a Gauss rule or from a
// trapezoidal rule on a sample grid; summation is serial in node order within
// each coefficient, so results are reproducible bit for bit.
CoeffVec project(Basis basis, double alpha, int N, const std::vector<double>& nodes,
                 const std::vector<double>& weights, const std::vector<cplx>& fvals) {
  CoeffVec out;
  out.basis = basis;
  out.alpha = alpha;
  out.values.assign(N, 0.0);
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] == 0.0 || fvals[i] == 0.0) continue;
    std::vector<double> b = basis_batch(basis, alpha, N - 1, nodes[i]);
    cplx wf = weights[i] * fvals[i];
    for (int n = 0; n < N; ++n) out.values[n] += b[n] * wf;
  }
  return out;
}

CoeffVec analyze_callable(Basis basis, double alpha, const RealFn& f, int N,
                          const QuadRule& rule) {
  if (N < 1) throw std::invalid_argument("analyze: need N >= 1 modes");
  std::vector<cplx> fvals(rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i) fvals[i] = f(rule.nodes[i]);
  return project(basis, alpha, N, rule.nodes, rule.weights, fvals);
}

CoeffVec analyze_sampled(Basis basis, double alpha, const SampledSignal& sig, int N) {
  if (N < 1) throw std::invalid_argument("analyze: need N >= 1 modes");
  if (sig.values.empty()) throw std::invalid_argument("analyze: empty signal");
  if (!(sig.dx > 0.0)) throw std::invalid_argument("analyze: signal step must be > 0");
  // Trapezoid on the signal's own grid, zero extension outside it.
  std::vector<double> nodes(sig.values.size()), weights(sig.values.size(), sig.dx);
  for (int j = 0; j < sig.size(); ++j) nodes[j] = sig.grid(j);
  weights.front() = 0.5 * sig.dx;
  weights.back() = 0.5 * sig.dx;
  return project(basis, alpha, N, nodes, weights, sig.values);
}

void require_basis(const CoeffVec& c, Basis basis, const char* who) {
  if (c.basis != basis)
    throw std::invalid_argument(std::string(who) + ": coefficient basis mismatch");
}

std::vector<cplx> synth_grid(const CoeffVec& c, const std::vector<double>& grid) {
  std::vector<cplx> out(grid.size(), 0.0);
  if (c.values.empty()) return out;
  for (size_t j = 0; j < grid.size(); ++j) {
    std::vector<double> b = basis_batch(c.basis, c.alpha, c.size() - 1, grid[j]);
    cplx acc = 0.0;
    for (int n = 0; n < c.size(); ++n) acc += c.values[n] * b[n];
    out[j] = acc;
  }
  return out;
}

SampledSignal synth_uniform(const CoeffVec& c, double x0, double dx, int count) {
  std::vector<double> grid(count);
  for (int j = 0; j < count; ++j) grid[j] = x0 + j * dx;
  SampledSignal sig;
  sig.x0 = x0;
  sig.dx = dx;
  sig.values = synth_grid(c, grid);
  return sig;
}

}  // namespace

CoeffVec analyze_hermite(const RealFn& f, int N, const QuadRule& rule) {
  if (rule.kind != QuadKind::GaussHermite)
    throw std::invalid_argument("analyze_hermite: rule kind mismatch (need Gauss-Hermite)");
  return analyze_callable(Basis::Hermite, 0.0, f, N, rule);
}

CoeffVec analyze_hermite(const SampledSignal& sig, int N) {
  return analyze_sampled(Basis::Hermite, 0.0, sig, N);
}

CoeffVec analyze_laguerre(const RealFn& f, int N, double alpha, const QuadRule& rule) {
  if (rule.kind != QuadKind::GaussLaguerre)
    throw std::invalid_argument("analyze_laguerre: rule kind mismatch (need Gauss-Laguerre)");
  if (rule.alpha != alpha)
    throw std::invalid_argument("analyze_laguerre: rule alpha does not match request");
  return analyze_callable(Basis::Laguerre, alpha, f, N, rule);
}

CoeffVec analyze_laguerre(const SampledSignal& sig, int N, double alpha) {
  if (sig.x0 < 0.0)
    throw std::invalid_argument("analyze_laguerre: signal extends below y = 0");
  return analyze_sampled(Basis::Laguerre, alpha, sig, N);
}

std::vector<cplx> synthesize_hermite(const CoeffVec& c, const std::vector<double>& grid) {
  require_basis(c, Basis::Hermite, "synthesize_hermite");
  return synth_grid(c, grid);
}

SampledSignal synthesize_hermite(const CoeffVec& c, double x0, double dx, int count) {
  require_basis(c, Basis::Hermite, "synthesize_hermite");
  return synth_uniform(c, x0, dx, count);
}

std::vector<cplx> synthesize_laguerre(const CoeffVec& c, const std::vector<double>& grid) {
  require_basis(c, Basis::Laguerre, "synthesize_laguerre");
  return synth_grid(c, grid);
}

SampledSignal synthesize_laguerre(const CoeffVec& c, double x0, double dx, int count) {
  require_basis(c, Basis::Laguerre, "synthesize_laguerre");
  return synth_uniform(c, x0, dx, count);
}

cplx eval_series(const CoeffVec& c, double x) {
  if (c.values.empty()) return 0.0;
  std::vector<double> b = basis_batch(c.basis, c.alpha, c.size() - 1, x);
  cplx acc = 0.0;
  for (int n = 0; n < c.size(); ++n) acc += c.values[n] * b[n];
  return acc;
}

double energy(const CoeffVec& c) {
  double acc = 0.0;
  for (const cplx& v : c.values) acc += std::norm(v);
  return acc;
}

}  // namespace harmonic
