#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "harmonic/spectral.hpp"

// The Fourier-like involutions T+ (cos kernel) and T- (sin kernel) on R+,
// their spectral realization on the Laguerre bases, fractional powers, and
// the half-line subspace decomposition.
//
// Kernel-index pairing: T+ acts as (-1)^n on the alpha = -1/2 basis and
// T- on the alpha = +1/2 basis. The substitution y = u^2 together with the
// Hermite-Laguerre identities forces this pairing: even Hermite functions
// pull back to alpha = -1/2 under the cosine transform, odd to +1/2 under
// the sine transform.

namespace harmonic {

enum class KernelSign { Plus, Minus };  // Plus: cos kernel, Minus: sin kernel

/// Laguerre parameter paired with the kernel: -1/2 for Plus, +1/2 for Minus.
double kernel_alpha(KernelSign sign);

/// [T f](s) = (1/sqrt(2 pi)) integral_0^inf S(sqrt(s y)) (s y)^{-1/4} f(y) dy
/// evaluated after the substitution y = u^2 (which removes the algebraic
/// singularity) with the positive half of an m-point Gauss-Hermite rule.
double t_transform_quadrature(const std::function<double(double)>& f, KernelSign sign,
                              double s, int m);

/// Spectral action of the involution: coefficient n flips sign for odd n.
CoeffVec t_transform_spectral(const CoeffVec& c, KernelSign sign);

/// Fractional power: coefficient n gains e^{i n a pi/2}; a = 2 reproduces
/// the involution, a = 4 the identity.
CoeffVec frt_halfline(const CoeffVec& c, KernelSign sign, double a);

/// Residue-class split of the coefficients, as in the full-line decompose;
/// part r is an eigenvector of the a = 4/k fractional transform with
/// eigenvalue e^{2 pi i r / k}.
std::vector<CoeffVec> decompose_halfline(const CoeffVec& c, int k, KernelSign sign);

}  // namespace harmonic
