#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "harmonic/quadrature.hpp"
#include "harmonic/spectral.hpp"

// Ladder and Lie-algebra operators acting on coefficient vectors: the
// oscillator algebra a, a+, N on the Hermite basis, the enveloping-algebra
// family A_{k,r} stepping by k inside one congruence class, and the su(1,1)
// generators on the Laguerre basis.
//
// Truncation contract: applying an operator to a length-N vector yields a
// length-N vector; any contribution whose source index falls outside [0, N)
// is zero. Algebraic identities are therefore asserted only on the interior,
// where band leakage cannot reach.

namespace harmonic {

using cplxl = std::complex<long double>;

/// One band of a banded operator: Op|n> includes amp(n) |n + offset>.
/// Amplitudes are served in extended precision so that operator compositions
/// (commutators, Casimir) can be measured below the double roundoff of the
/// sqrt factors.
struct Band {
  int offset = 0;
  std::function<cplxl(int)> amp;
};

struct BandedOp {
  std::string name;
  std::vector<Band> bands;

  CoeffVec apply(const CoeffVec& c) const;
  /// Largest |offset| over the bands.
  int reach() const;
};

/// s * op (amplitudes scaled).
BandedOp scale(cplx s, const BandedOp& op);

enum class OscillatorOp { Lower, Raise, Number, Position, Momentum, Identity };

BandedOp oscillator_op(OscillatorOp op);
CoeffVec oscillator_apply(OscillatorOp op, const CoeffVec& c);

struct QRLabel {
  int k = 1;
  int q = 0;
  int r = 0;
};

/// Euclidean split n = k*q + r with 0 <= r < k.
QRLabel qr_split(int k, int n);

enum class LadderDir { Raise, Lower };

/// A+_{k,r} / A_{k,r}: within the class n = k q + r, raise maps to
/// sqrt(q+1) |k(q+1)+r> and lower to sqrt(q) |k(q-1)+r>; components outside
/// the class map to zero.
BandedOp subspace_ladder_op(int k, int r, LadderDir dir);
CoeffVec subspace_ladder_apply(int k, int r, LadderDir dir, const CoeffVec& c);

/// Q: diagonal with eigenvalue q = floor(n/k).
BandedOp subspace_number_op(int k);
/// Diagonal projector onto indices congruent to r mod k.
BandedOp subspace_projector_op(int k, int r);

enum class Su11Op { JPlus, JMinus, J3 };

BandedOp su11_op(Su11Op op, double alpha);
CoeffVec su11_apply(Su11Op op, const CoeffVec& c);

/// J3^2 - (J+ J- + J- J+)/2 by composition; equals ((alpha^2 - 1)/4) id on
/// the truncation interior.
CoeffVec casimir_su11(double alpha, const CoeffVec& c);

/// max over interior basis vectors e_n of ||(AB - BA - expected) e_n||,
/// evaluated in extended precision so the measurement sits well below the
/// identities' target tolerances. interior_margin must cover the band reach
/// of the composition.
double commutator_residual(const BandedOp& op_a, const BandedOp& op_b,
                           const BandedOp& expected, int N, int interior_margin);

/// L2 discrepancy, via the given Gauss-Laguerre rule, between the algebraic
/// action Y = -(J+ + J-) + 2N + (alpha+1) id on coefficients and pointwise
/// multiplication by y on the synthesized function.
double y_operator_check(double alpha, const CoeffVec& c, const QuadRule& rule);

}  // namespace harmonic
