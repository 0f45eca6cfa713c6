#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

// Periodized Hermite functions on the unit circle, their Fourier
// coefficients through Hermite values at the integers, the chi_n sequences
// in l2(Z), the Gram identity, Gram-Schmidt orthogonalization, and the exact
// integer determinants certifying independence.
//
// Circle conventions: inner product <f|g> = integral_{-pi}^{pi} f* g dphi
// with orthonormal exponentials e^{i m phi}/sqrt(2 pi); a CircleFunc stores
// the two-sided coefficients of f(phi) = (1/sqrt(2 pi)) sum_m c_m e^{-i m phi}.

namespace harmonic {

struct CircleFunc {
  int mmax = 0;
  std::vector<std::complex<double>> coeffs;  // index m + mmax, m in [-mmax, mmax]

  std::complex<double>& at(int m) { return coeffs[m + mmax]; }
  const std::complex<double>& at(int m) const { return coeffs[m + mmax]; }
};

/// sum_m |c_m|^2, the squared circle norm of the represented function.
double circle_norm2(const CircleFunc& f);

/// Two-sided samples of K_n at the integers -M..M, an element of l2(Z).
struct ChiSeq {
  int n = 0;
  int mmax = 0;
  std::vector<double> samples;  // index m + mmax

  double at(int m) const { return samples[m + mmax]; }
  std::vector<double> as_vector() const { return samples; }
};

/// Wrap sum sum_k K_n(phi + 2 k pi), truncated once the discarded Gaussian
/// tail beyond the turning point sqrt(2n+1) is below tol.
double periodized_hermite_direct(int n, double phi, double tol);

/// Fourier coefficients of the periodized K_n: c_m = i^n K_n(m), |m| <= M.
CircleFunc circle_fourier_coeffs(int n, int M);

/// Truncated Fourier synthesis (i^n / sqrt(2 pi)) sum_m K_n(m) e^{-i m phi};
/// agrees with the direct wrap sum, with a vanishing imaginary part.
std::complex<double> periodized_hermite_fourier(int n, double phi, int M);

ChiSeq chi_seq(int n, int M);

struct GramMatrix {
  int dim = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int n, int m) { return data[n * dim + m]; }
  const std::complex<double>& at(int n, int m) const { return data[n * dim + m]; }
};

/// G[n][m] = i^{m-n} sum_{|j| <= M} K_n(j) K_m(j); Hermitian, and positive
/// definite while the chi sequences are independent.
GramMatrix gram_matrix(int N, int M);

/// Condition number of the Gram matrix (via its real symmetric similarity).
double gram_condition_number(int N, int M);

/// Modified Gram-Schmidt with a reorthogonalization pass. Throws when a
/// pivot collapses (numerical dependence), naming the offending index.
std::vector<std::vector<double>> gram_schmidt(const std::vector<std::vector<double>>& vectors);

enum class DetMode { Full, Half };

/// Exact integer determinant of the Hermite-polynomial value matrix:
///   Full: rows H_0..H_{2N} at columns -N..N,
///   Half: rows H_0..H_N  at columns  0..N.
/// Computed in arbitrary precision; returned as a decimal string.
std::string hermite_integer_det(int N, DetMode mode);

/// Trapezoidal Fourier analysis on a uniform circle grid (exact for
/// band-limited f once grid >= 2M+1) and the finite synthesis it inverts.
CircleFunc fourier_series_analyze(const std::function<std::complex<double>(double)>& f,
                                  int M, int grid);
std::complex<double> fourier_series_synthesize(const CircleFunc& c, double phi);

}  // namespace harmonic
