#pragma once

#include <vector>

// Pointwise evaluation of the L2-normalized Hermite functions K_n(x) and
// generalized Laguerre functions M_n^alpha(y), plus the analytic identities
// connecting the two families.
//
// All evaluators run the normalized three-term recurrences directly on the
// functions themselves; the unnormalized polynomials H_n / L_n^alpha are
// never formed (they overflow near n ~ 150).

namespace harmonic {

/// K_n(x) = e^{-x^2/2} H_n(x) / sqrt(2^n n! sqrt(pi)).
double hermite_fn(int n, double x);

/// K_0(x) .. K_nmax(x) in one recurrence pass; element n matches
/// hermite_fn(n, x) bitwise.
std::vector<double> hermite_fn_batch(int nmax, double x);

/// M_n^alpha(y) = sqrt(Gamma(n+1)/Gamma(n+alpha+1)) y^{alpha/2} e^{-y/2} L_n^alpha(y).
/// Requires alpha > -1 and y >= 0. At y = 0 with alpha = 0 the convention
/// 0^0 := 1 applies, so M_0^0(0) = 1.
double laguerre_fn(int n, double alpha, double y);

/// M_n^alpha(y) / y^{alpha/2}, i.e. the Laguerre function with the fractional
/// power split off. Finite at y = 0 for every alpha > -1; used by the
/// Hermite-Laguerre bridge where the power cancels algebraically.
double laguerre_fn_scaled(int n, double alpha, double y);

std::vector<double> laguerre_fn_batch(int nmax, double alpha, double y);

/// Central-difference evaluation of (-D^2 + x^2 - (2n+1)) K_n at x.
/// Exactly zero in the continuum; the returned residual is O(h^2).
double hermite_de_residual(int n, double x, double h);

struct BridgePair {
  double hermite;   // K_{2n}(x) or K_{2n+1}(x)
  double laguerre;  // the matching Laguerre-side expression
};

/// Both sides of the Hermite-Laguerre identity at index n:
///   even: K_{2n}(x)   vs (-1)^n (x^2)^{1/4} M_n^{-1/2}(x^2)
///   odd:  K_{2n+1}(x) vs (-1)^n x (x^2)^{-1/4} M_n^{+1/2}(x^2)
/// The fractional powers are cancelled analytically, so x = 0 is fine and
/// x < 0 follows the sign(x) sqrt(|x|) branch forced by parity.
BridgePair hermite_laguerre_bridge(int n, double x, bool odd_branch = false);

}  // namespace harmonic
