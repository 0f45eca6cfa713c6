#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "harmonic/quadrature.hpp"

// Conversion between functions (callable or sampled) and coefficient vectors
// in the Hermite or Laguerre basis, and back.
//
// Conventions: the analysis/synthesis pair is
//   a_n = integral K_n(x) f(x) dx,   f(x) = sum_n a_n K_n(x)
// (no (2pi)^{1/4} ket factors -- they cancel in every observable identity),
// and likewise with M_n^alpha on R+.

namespace harmonic {

enum class Basis { Hermite, Laguerre };

struct CoeffVec {
  Basis basis = Basis::Hermite;
  double alpha = 0.0;  // Laguerre parameter; ignored for Hermite
  std::vector<cplx> values;

  int size() const { return static_cast<int>(values.size()); }
};

/// Uniformly gridded samples: grid point j sits at x0 + j*dx.
struct SampledSignal {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<cplx> values;

  int size() const { return static_cast<int>(values.size()); }
  double grid(int j) const { return x0 + j * dx; }
};

using RealFn = std::function<cplx(double)>;

/// Project a callable onto K_0..K_{N-1} with a Gauss-Hermite rule:
/// values[n] = sum_i w_i K_n(x_i) f(x_i).
CoeffVec analyze_hermite(const RealFn& f, int N, const QuadRule& rule);

/// Project a sampled signal by trapezoidal quadrature on its own grid
/// (spectrally accurate for smooth signals that decay inside the window;
/// the signal is treated as zero outside its grid).
CoeffVec analyze_hermite(const SampledSignal& sig, int N);

CoeffVec analyze_laguerre(const RealFn& f, int N, double alpha, const QuadRule& rule);
CoeffVec analyze_laguerre(const SampledSignal& sig, int N, double alpha);

/// Pointwise sum_n a_n K_n(x_j); requires a Hermite-basis vector.
std::vector<cplx> synthesize_hermite(const CoeffVec& c, const std::vector<double>& grid);
SampledSignal synthesize_hermite(const CoeffVec& c, double x0, double dx, int count);

/// Pointwise sum_n a_n M_n^alpha(y_j); requires a Laguerre-basis vector.
std::vector<cplx> synthesize_laguerre(const CoeffVec& c, const std::vector<double>& grid);
SampledSignal synthesize_laguerre(const CoeffVec& c, double x0, double dx, int count);

/// Basis-dispatching series evaluation at one point.
cplx eval_series(const CoeffVec& c, double x);

/// sum_n |a_n|^2.
double energy(const CoeffVec& c);

}  // namespace harmonic
