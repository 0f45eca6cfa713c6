#pragma once

#include <complex>
#include <vector>

#include "harmonic/quadrature.hpp"
#include "harmonic/spectral.hpp"

// Fractional Fourier transform on the Hermite coefficient space and the
// (k, r) eigen-subspace decomposition of L2(R) it induces.
//
// The transform is purely spectral: [F^a f] multiplies the n-th Hermite
// coefficient by e^{i n a pi/2}. a = 1 is the classical Fourier transform
// with kernel e^{ipx}/sqrt(2 pi) (eigenvalue i^n), a = 4 the identity.

namespace harmonic {

/// Sign of the spectral phase e^{sign * i n a pi/2}. Positive matches the
/// e^{+ipx} Fourier kernel; flip here to get the conjugate convention.
inline constexpr double kFrftPhaseSign = +1.0;

/// Phase factor applied to coefficient n at transform order a. The order is
/// reduced mod 4 first, and phases that land on quarter turns are returned
/// exactly (1, i, -1, -i), so F^4 is the identity bit for bit.
cplx frft_phase(int n, double a);

/// Coefficient-space fractional Fourier transform; Hermite basis only.
CoeffVec frft(const CoeffVec& c, double a);

/// Independent oracle: (1/sqrt(2 pi)) sum_i w_i e^{i p x_i} f(x_i), the
/// classical Fourier transform by Gauss-Hermite quadrature.
cplx fourier_quadrature(const RealFn& f, double p, const QuadRule& rule);

struct SubspaceLabel {
  int k = 1;
  int r = 0;
};

/// Keep the coefficients with n = r (mod k), zero the rest.
CoeffVec project_subspace(const CoeffVec& c, SubspaceLabel s);

/// All k residue-class projections; they sum back to c bit for bit, and part
/// r is an eigenvector of F^{4/k} with eigenvalue e^{2 pi i r / k}.
std::vector<CoeffVec> decompose(const CoeffVec& c, int k);

}  // namespace harmonic
