#include "harmonic/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonic {

namespace {

long double ld(int n) { return static_cast<long double>(n); }

std::vector<cplxl> apply_ld(const BandedOp& op, const std::vector<cplxl>& c) {
  const int N = static_cast<int>(c.size());
  std::vector<cplxl> out(N, cplxl(0));
  for (const Band& band : op.bands) {
    for (int m = 0; m < N; ++m) {
      int src = m - band.offset;
      if (src < 0 || src >= N) continue;
      out[m] += band.amp(src) * c[src];
    }
  }
  return out;
}

}  // namespace

CoeffVec BandedOp::apply(const CoeffVec& c) const {
  CoeffVec out;
  out.basis = c.basis;
  out.alpha = c.alpha;
  out.values.assign(c.values.size(), 0.0);
  const int N = c.size();
  for (const Band& band : bands) {
    for (int m = 0; m < N; ++m) {
      int src = m - band.offset;
      if (src < 0 || src >= N) continue;
      cplxl contrib = band.amp(src) * cplxl(c.values[src]);
      out.values[m] += cplx(static_cast<double>(contrib.real()),
                            static_cast<double>(contrib.imag()));
    }
  }
  return out;
}

int BandedOp::reach() const {
  int r = 0;
  for (const Band& band : bands) r = std::max(r, std::abs(band.offset));
  return r;
}

BandedOp scale(cplx s, const BandedOp& op) {
  BandedOp out;
  out.name = op.name;
  cplxl sl(s);
  for (const Band& band : op.bands) {
    auto amp = band.amp;
    out.bands.push_back({band.offset, [sl, amp](int n) { return sl * amp(n); }});
  }
  return out;
}

BandedOp oscillator_op(OscillatorOp op) {
  const cplxl i{0.0L, 1.0L};
  switch (op) {
    case OscillatorOp::Lower:
      return {"a", {{-1, [](int n) { return cplxl(std::sqrt(ld(n))); }}}};
    case OscillatorOp::Raise:
      return {"a+", {{+1, [](int n) { return cplxl(std::sqrt(ld(n) + 1.0L)); }}}};
    case OscillatorOp::Number:
      return {"N", {{0, [](int n) { return cplxl(ld(n)); }}}};
    case OscillatorOp::Position:
      return {"X",
              {{-1, [](int n) { return cplxl(std::sqrt(0.5L * ld(n))); }},
               {+1, [](int n) { return cplxl(std::sqrt(0.5L * (ld(n) + 1.0L))); }}}};
    case OscillatorOp::Momentum:
      return {"P",
              {{-1, [i](int n) { return -i * std::sqrt(0.5L * ld(n)); }},
               {+1, [i](int n) { return i * std::sqrt(0.5L * (ld(n) + 1.0L)); }}}};
    case OscillatorOp::Identity:
      return {"I", {{0, [](int) { return cplxl(1.0L); }}}};
  }
  throw std::invalid_argument("oscillator_op: unknown operator");
}

CoeffVec oscillator_apply(OscillatorOp op, const CoeffVec& c) {
  if (c.basis != Basis::Hermite)
    throw std::invalid_argument("oscillator_apply: coefficient basis mismatch");
  return oscillator_op(op).apply(c);
}

QRLabel qr_split(int k, int n) {
  if (k < 1) throw std::invalid_argument("qr_split: need k >= 1");
  if (n < 0) throw std::invalid_argument("qr_split: need n >= 0");
  return {k, n / k, n % k};
}

BandedOp subspace_ladder_op(int k, int r, LadderDir dir) {
  if (k < 1) throw std::invalid_argument("subspace_ladder_op: need k >= 1");
  if (r < 0 || r >= k) throw std::invalid_argument("subspace_ladder_op: need 0 <= r < k");
  if (dir == LadderDir::Raise)
    return {"A+_{" + std::to_string(k) + "," + std::to_string(r) + "}",
            {{+k, [k, r](int n) {
                return n % k == r ? cplxl(std::sqrt(ld(n / k) + 1.0L)) : cplxl(0.0L);
              }}}};
  return {"A_{" + std::to_string(k) + "," + std::to_string(r) + "}",
          {{-k, [k, r](int n) {
              return n % k == r ? cplxl(std::sqrt(ld(n / k))) : cplxl(0.0L);
            }}}};
}

CoeffVec subspace_ladder_apply(int k, int r, LadderDir dir, const CoeffVec& c) {
  if (c.basis != Basis::Hermite)
    throw std::invalid_argument("subspace_ladder_apply: coefficient basis mismatch");
  return subspace_ladder_op(k, r, dir).apply(c);
}

BandedOp subspace_number_op(int k) {
  if (k < 1) throw std::invalid_argument("subspace_number_op: need k >= 1");
  return {"Q_" + std::to_string(k), {{0, [k](int n) { return cplxl(ld(n / k)); }}}};
}

BandedOp subspace_projector_op(int k, int r) {
  if (k < 1 || r < 0 || r >= k)
    throw std::invalid_argument("subspace_projector_op: need 0 <= r < k");
  return {"P_{" + std::to_string(k) + "," + std::to_string(r) + "}",
          {{0, [k, r](int n) { return n % k == r ? cplxl(1.0L) : cplxl(0.0L); }}}};
}

BandedOp su11_op(Su11Op op, double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("su11_op: alpha must be > -1");
  const long double a = alpha;
  switch (op) {
    case Su11Op::JPlus:
      return {"J+", {{+1, [a](int n) {
                return cplxl(std::sqrt((ld(n) + 1.0L) * (ld(n) + a + 1.0L)));
              }}}};
    case Su11Op::JMinus:
      return {"J-", {{-1, [a](int n) { return cplxl(std::sqrt(ld(n) * (ld(n) + a))); }}}};
    case Su11Op::J3:
      return {"J3", {{0, [a](int n) { return cplxl(ld(n) + 0.5L * (a + 1.0L)); }}}};
  }
  throw std::invalid_argument("su11_op: unknown operator");
}

CoeffVec su11_apply(Su11Op op, const CoeffVec& c) {
  if (c.basis != Basis::Laguerre)
    throw std::invalid_argument("su11_apply: coefficient basis mismatch");
  return su11_op(op, c.alpha).apply(c);
}

CoeffVec casimir_su11(double alpha, const CoeffVec& c) {
  if (c.basis != Basis::Laguerre)
    throw std::invalid_argument("casimir_su11: coefficient basis mismatch");
  if (c.alpha != alpha)
    throw std::invalid_argument("casimir_su11: alpha does not match coefficient basis");
  CoeffVec j3j3 = su11_apply(Su11Op::J3, su11_apply(Su11Op::J3, c));
  CoeffVec jpjm = su11_apply(Su11Op::JPlus, su11_apply(Su11Op::JMinus, c));
  CoeffVec jmjp = su11_apply(Su11Op::JMinus, su11_apply(Su11Op::JPlus, c));
  CoeffVec out = j3j3;
  for (int n = 0; n < out.size(); ++n)
    out.values[n] -= 0.5 * (jpjm.values[n] + jmjp.values[n]);
  return out;
}

double commutator_residual(const BandedOp& op_a, const BandedOp& op_b,
                           const BandedOp& expected, int N, int interior_margin) {
  int needed = std::max(op_a.reach() + op_b.reach(), expected.reach());
  if (interior_margin < needed) {
    int boundary = N - interior_margin - 1 + needed;
    throw std::invalid_argument(
        "commutator_residual: interior margin " + std::to_string(interior_margin) +
        " too small for band reach " + std::to_string(needed) +
        "; truncation leaks at index " + std::to_string(boundary));
  }
  if (N <= 2 * interior_margin)
    throw std::invalid_argument("commutator_residual: no interior indices at this N");

  long double worst = 0.0L;
  for (int n = interior_margin; n < N - interior_margin; ++n) {
    std::vector<cplxl> e(N, cplxl(0));
    e[n] = cplxl(1.0L);
    std::vector<cplxl> ab = apply_ld(op_a, apply_ld(op_b, e));
    std::vector<cplxl> ba = apply_ld(op_b, apply_ld(op_a, e));
    std::vector<cplxl> ex = apply_ld(expected, e);
    long double norm2 = 0.0L;
    for (int m = 0; m < N; ++m) {
      cplxl d = ab[m] - ba[m] - ex[m];
      norm2 += d.real() * d.real() + d.imag() * d.imag();
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  return static_cast<double>(worst);
}

double y_operator_check(double alpha, const CoeffVec& c, const QuadRule& rule) {
  if (c.basis != Basis::Laguerre || c.alpha != alpha)
    throw std::invalid_argument("y_operator_check: coefficient basis mismatch");
  if (rule.kind != QuadKind::GaussLaguerre || rule.alpha != alpha)
    throw std::invalid_argument("y_operator_check: rule does not match alpha");

  const long double a = alpha;
  BandedOp y_op{"Y",
                {{+1, [a](int n) {
                    return cplxl(-std::sqrt((ld(n) + 1.0L) * (ld(n) + a + 1.0L)));
                  }},
                 {-1, [a](int n) { return cplxl(-std::sqrt(ld(n) * (ld(n) + a))); }},
                 {0, [a](int n) { return cplxl(2.0L * ld(n) + a + 1.0L); }}}};
  CoeffVec yc = y_op.apply(c);
  cplx disc2 = integrate(rule, [&](double y) {
    cplx algebraic = eval_series(yc, y);
    cplx pointwise = y * eval_series(c, y);
    return cplx(std::norm(algebraic - pointwise), 0.0);
  });
  return std::sqrt(std::abs(disc2.real()));
}

}  // namespace harmonic
