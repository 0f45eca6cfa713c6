#include "harmonic/circle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "harmonic/specfun.hpp"

namespace harmonic {

namespace {

using cplx = std::complex<double>;

const cplx kQuarterTurn[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

cplx i_power(int n) {
  int q = n % 4;
  if (q < 0) q += 4;
  return kQuarterTurn[q];
}

}  // namespace

double circle_norm2(const CircleFunc& f) {
  double acc = 0.0;
  for (const cplx& c : f.coeffs) acc += std::norm(c);
  return acc;
}

double periodized_hermite_direct(int n, double phi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("periodized_hermite_direct: need tol > 0");
  if (n < 0) throw std::invalid_argument("periodized_hermite_direct: need n >= 0");
  // Beyond the turning point sqrt(2n+1) the Hermite function is dominated by
  // 0.82 e^{-d^2/2} in the distance d past it; pick the wrap radius so the
  // first discarded term is below tol/10.
  double safety = std::sqrt(2.0 * std::log(8.2 / tol));
  double turning = std::sqrt(2.0 * n + 1.0);
  int kmax = 1;
  while ((2.0 * kmax - 1.0) * M_PI <= turning + safety) ++kmax;
  double acc = 0.0;
  for (int k = -kmax; k <= kmax; ++k) acc += hermite_fn(n, phi + 2.0 * k * M_PI);
  return acc;
}

CircleFunc circle_fourier_coeffs(int n, int M) {
  if (M < 1) throw std::invalid_argument("circle_fourier_coeffs: need M >= 1");
  CircleFunc f;
  f.mmax = M;
  f.coeffs.assign(2 * M + 1, 0.0);
  cplx phase = i_power(n);
  for (int m = -M; m <= M; ++m) f.at(m) = phase * hermite_fn(n, double(m));
  return f;
}

std::complex<double> periodized_hermite_fourier(int n, double phi, int M) {
  CircleFunc c = circle_fourier_coeffs(n, M);
  return fourier_series_synthesize(c, phi);
}

ChiSeq chi_seq(int n, int M) {
  if (M < 1) throw std::invalid_argument("chi_seq: need M >= 1");
  ChiSeq chi;
  chi.n = n;
  chi.mmax = M;
  chi.samples.resize(2 * M + 1);
  for (int m = -M; m <= M; ++m) chi.samples[m + M] = hermite_fn(n, double(m));
  return chi;
}

GramMatrix gram_matrix(int N, int M) {
  if (N < 1) throw std::invalid_argument("gram_matrix: need N >= 1");
  if (M < 1) throw std::invalid_argument("gram_matrix: need M >= 1");
  // Real overlaps S[n][m] = sum_j K_n(j) K_m(j) first, phases after.
  std::vector<double> overlap(N * N, 0.0);
  for (int j = -M; j <= M; ++j) {
    std::vector<double> b = hermite_fn_batch(N - 1, double(j));
    for (int n = 0; n < N; ++n)
      for (int m = n; m < N; ++m) overlap[n * N + m] += b[n] * b[m];
  }
  GramMatrix g;
  g.dim = N;
  g.data.assign(N * N, 0.0);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      double s = overlap[std::min(n, m) * N + std::max(n, m)];
      g.at(n, m) = i_power(m - n) * s;
    }
  return g;
}

double gram_condition_number(int N, int M) {
  // The diagonal similarity diag(i^n) turns G into the real symmetric
  // overlap matrix, so its eigenvalues give the condition number. Plain
  // Jacobi sweeps are plenty at these sizes.
  std::vector<double> s(N * N, 0.0);
  for (int j = -M; j <= M; ++j) {
    std::vector<double> b = hermite_fn_batch(N - 1, double(j));
    for (int n = 0; n < N; ++n)
      for (int m = 0; m < N; ++m) s[n * N + m] += b[n] * b[m];
  }
  auto a = [&](int i, int j) -> double& { return s[i * N + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-28) break;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) {
        if (a(p, q) == 0.0) continue;
        double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
        double c = std::cos(theta), sn = std::sin(theta);
        for (int i = 0; i < N; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - sn * aiq;
          a(i, q) = sn * aip + c * aiq;
        }
        for (int i = 0; i < N; ++i) {
          double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - sn * aqi;
          a(q, i) = sn * api + c * aqi;
        }
      }
  }
  double lo = a(0, 0), hi = a(0, 0);
  for (int i = 1; i < N; ++i) {
    lo = std::min(lo, a(i, i));
    hi = std::max(hi, a(i, i));
  }
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

std::vector<std::vector<double>> gram_schmidt(const std::vector<std::vector<double>>& vectors) {
  constexpr double kPivotTol = 1e-10;
  std::vector<std::vector<double>> out;
  out.reserve(vectors.size());
  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  };
  for (size_t idx = 0; idx < vectors.size(); ++idx) {
    std::vector<double> v = vectors[idx];
    if (!out.empty() && v.size() != out.front().size())
      throw std::invalid_argument("gram_schmidt: inconsistent vector lengths");
    // Two deflation passes; once is not always enough for 1e-12 pairwise.
    for (int pass = 0; pass < 2; ++pass)
      for (const std::vector<double>& u : out) {
        double proj = dot(u, v);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
      }
    double norm = std::sqrt(dot(v, v));
    if (norm <= kPivotTol)
      throw std::runtime_error("gram_schmidt: vector " + std::to_string(idx) +
                               " is numerically dependent on its predecessors");
    for (double& x : v) x /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

std::string hermite_integer_det(int N, DetMode mode) {
  if (N < 0) throw std::invalid_argument("hermite_integer_det: need N >= 0");
  if (N > 12)
    throw std::invalid_argument("hermite_integer_det: N too large (factorial growth)");

  const int dim = mode == DetMode::Full ? 2 * N + 1 : N + 1;
  const int rows = dim;  // H_0 .. H_{dim-1}
  const int col_lo = mode == DetMode::Full ? -N : 0;

  // Integer Hermite polynomial values by the exact recurrence
  // H_{n+1}(x) = 2 x H_n(x) - 2 n H_{n-1}(x).
  std::vector<mpz_class> a(dim * dim);
  for (int j = 0; j < dim; ++j) {
    mpz_class x = col_lo + j;
    mpz_class hm1 = 1, h = 2 * x;
    for (int i = 0; i < rows; ++i) {
      a[i * dim + j] = (i == 0) ? mpz_class(1) : h;
      if (i >= 1) {
        mpz_class next = 2 * x * h - 2 * i * hm1;
        hm1 = h;
        h = next;
      }
    }
  }

  // Bareiss fraction-free elimination: all divisions are exact.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < dim; ++k) {
    if (a[k * dim + k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < dim; ++i)
        if (a[i * dim + k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return "0";
      for (int j = 0; j < dim; ++j) std::swap(a[k * dim + j], a[pivot * dim + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        mpz_class num = a[i * dim + j] * a[k * dim + k] - a[i * dim + k] * a[k * dim + j];
        mpz_divexact(a[i * dim + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * dim + k] = 0;
    }
    prev = a[k * dim + k];
  }
  mpz_class det = sign * a[(dim - 1) * dim + (dim - 1)];
  return det.get_str();
}

CircleFunc fourier_series_analyze(const std::function<std::complex<double>(double)>& f,
                                  int M, int grid) {
  if (M < 1) throw std::invalid_argument("fourier_series_analyze: need M >= 1");
  if (grid < 2 * M + 1)
    throw std::invalid_argument("fourier_series_analyze: grid of " + std::to_string(grid) +
                                " points aliases modes up to " + std::to_string(M) +
                                " (need >= 2M+1)");
  CircleFunc out;
  out.mmax = M;
  out.coeffs.assign(2 * M + 1, 0.0);
  const double step = 2.0 * M_PI / grid;
  std::vector<cplx> fv(grid);
  for (int j = 0; j < grid; ++j) fv[j] = f(-M_PI + j * step);
  for (int m = -M; m <= M; ++m) {
    cplx acc = 0.0;
    for (int j = 0; j < grid; ++j) {
      double phi = -M_PI + j * step;
      acc += fv[j] * std::polar(1.0, m * phi);
    }
    out.at(m) = acc * step / std::sqrt(2.0 * M_PI);
  }
  return out;
}

std::complex<double> fourier_series_synthesize(const CircleFunc& c, double phi) {
  cplx acc = 0.0;
  for (int m = -c.mmax; m <= c.mmax; ++m) acc += c.at(m) * std::polar(1.0, -m * phi);
  return acc / std::sqrt(2.0 * M_PI);
}

}  // namespace harmonic
