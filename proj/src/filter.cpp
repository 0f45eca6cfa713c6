#include "harmonic/filter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "harmonic/algebra.hpp"
#include "harmonic/circle.hpp"
#include "harmonic/frft.hpp"
#include "harmonic/halfline.hpp"
#include "harmonic/specfun.hpp"

namespace harmonic {

namespace {

using nlohmann::json;

double plan_alpha(FilterBasis basis) {
  return basis == FilterBasis::LaguerrePlus ? 0.5 : -0.5;
}

KernelSign plan_kernel(FilterBasis basis) {
  // cos kernel pairs with alpha = -1/2, sin with +1/2.
  return basis == FilterBasis::LaguerreMinus ? KernelSign::Plus : KernelSign::Minus;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp);
    out << contents;
    if (!out.good()) throw IoError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("cannot rename " + tmp + " to " + path);
}

FilterStep parse_step(const json& j, size_t index) {
  auto where = [index](const std::string& field) {
    return "plan.steps[" + std::to_string(index) + "]." + field;
  };
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    throw ConfigError(where("op") + ": missing or not a string");
  std::string op = j["op"].get<std::string>();
  FilterStep step;
  if (op == "truncate") {
    step.op = FilterStep::Op::Truncate;
    if (!j.contains("nmax") || !j["nmax"].is_number_integer())
      throw ConfigError(where("nmax") + ": missing or not an integer");
    step.nmax = j["nmax"].get<int>();
    if (step.nmax < 0) throw ConfigError(where("nmax") + ": must be >= 0");
  } else if (op == "keep_subspaces") {
    step.op = FilterStep::Op::KeepSubspaces;
    if (!j.contains("k") || !j["k"].is_number_integer())
      throw ConfigError(where("k") + ": missing or not an integer");
    step.k = j["k"].get<int>();
    if (step.k < 1) throw ConfigError(where("k") + ": must be >= 1");
    if (!j.contains("r") || !j["r"].is_array())
      throw ConfigError(where("r") + ": missing or not an array");
    for (const auto& rv : j["r"]) {
      if (!rv.is_number_integer()) throw ConfigError(where("r") + ": entries must be integers");
      int r = rv.get<int>();
      if (r < 0 || r >= step.k)
        throw ConfigError(where("r") + ": entry " + std::to_string(r) +
                          " outside [0, k)");
      step.keep_r.push_back(r);
    }
  } else if (op == "frft") {
    step.op = FilterStep::Op::Frft;
    if (!j.contains("a") || !j["a"].is_number())
      throw ConfigError(where("a") + ": missing or not a number");
    step.a = j["a"].get<double>();
  } else if (op == "t_involution") {
    step.op = FilterStep::Op::TInvolution;
  } else {
    throw ConfigError(where("op") + ": unknown operation '" + op + "'");
  }
  return step;
}

}  // namespace

FilterPlan parse_plan_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("plan: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("plan: top level must be an object");

  FilterPlan plan;
  if (!j.contains("basis") || !j["basis"].is_string())
    throw ConfigError("plan.basis: missing or not a string");
  std::string basis = j["basis"].get<std::string>();
  if (basis == "hermite")
    plan.basis = FilterBasis::Hermite;
  else if (basis == "laguerre_plus")
    plan.basis = FilterBasis::LaguerrePlus;
  else if (basis == "laguerre_minus")
    plan.basis = FilterBasis::LaguerreMinus;
  else
    throw ConfigError("plan.basis: unknown basis '" + basis + "'");

  if (!j.contains("modes") || !j["modes"].is_number_integer())
    throw ConfigError("plan.modes: missing or not an integer");
  plan.modes = j["modes"].get<int>();
  if (plan.modes < 1) throw ConfigError("plan.modes: must be >= 1");

  if (j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_object() || !w.contains("center") || !w.contains("scale") ||
        !w["center"].is_number() || !w["scale"].is_number())
      throw ConfigError("plan.window: need numeric center and scale");
    WindowMap window;
    window.center = w["center"].get<double>();
    window.scale = w["scale"].get<double>();
    if (!(window.scale > 0.0)) throw ConfigError("plan.window.scale: must be > 0");
    plan.window = window;
  }

  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw ConfigError("plan.steps: must be an array");
    for (size_t i = 0; i < j["steps"].size(); ++i)
      plan.steps.push_back(parse_step(j["steps"][i], i));
  }

  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const FilterStep& s = plan.steps[i];
    if (s.op == FilterStep::Op::Truncate && s.nmax >= plan.modes)
      throw ConfigError("plan.steps[" + std::to_string(i) + "].nmax: must be < modes");
    if (s.op == FilterStep::Op::TInvolution && plan.basis == FilterBasis::Hermite)
      throw ConfigError("plan.steps[" + std::to_string(i) +
                        "].op: t_involution requires a Laguerre basis");
  }
  return plan;
}

FilterPlan load_plan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open plan: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_plan_json(ss.str());
}

SampledSignal read_signal_csv(const std::string& path, std::optional<double> t0_override,
                              std::optional<double> dt_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input: " + path);

  std::vector<double> t;
  std::vector<cplx> v;
  std::string line;
  size_t lineno = 0;
  bool has_t_column = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // strip whitespace
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
    line.erase(std::remove_if(line.begin(), line.end(), is_space), line.end());
    if (line.empty()) continue;

    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        double value = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        fields.push_back(value);
      } catch (const std::exception&) {
        throw IoError(path + ":" + std::to_string(lineno) + ": cannot parse '" + cell + "'");
      }
    }
    if (fields.size() == 1) {
      if (!t.empty() && has_t_column)
        throw IoError(path + ":" + std::to_string(lineno) + ": inconsistent column count");
      v.emplace_back(fields[0], 0.0);
    } else if (fields.size() == 2 || fields.size() == 3) {
      if (!v.empty() && !has_t_column && t.empty())
        throw IoError(path + ":" + std::to_string(lineno) + ": inconsistent column count");
      has_t_column = true;
      t.push_back(fields[0]);
      v.emplace_back(fields[1], fields.size() == 3 ? fields[2] : 0.0);
    } else {
      throw IoError(path + ":" + std::to_string(lineno) + ": expected 1-3 columns");
    }
  }
  if (v.empty()) throw IoError(path + ": no samples");
  for (size_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      throw NumericError(path + ": non-finite sample at row " + std::to_string(i));

  SampledSignal sig;
  sig.values = std::move(v);
  if (has_t_column) {
    if (t.size() >= 2) {
      double dx = (t.back() - t.front()) / double(t.size() - 1);
      if (!(dx > 0.0)) throw IoError(path + ": time column must be increasing");
      double tol = 1e-6 * std::max(1.0, std::abs(dx));
      for (size_t j = 0; j < t.size(); ++j)
        if (std::abs(t[j] - (t.front() + j * dx)) > tol)
          throw IoError(path + ": time grid is not uniform (row " + std::to_string(j) + ")");
      sig.dx = dx;
    } else {
      sig.dx = dt_override.value_or(1.0);
    }
    sig.x0 = t.front();
  } else {
    if (!dt_override)
      throw ConfigError(path + ": single-column input needs --dt (and --t0)");
    sig.dx = *dt_override;
    sig.x0 = t0_override.value_or(0.0);
  }
  if (t0_override && has_t_column) sig.x0 = *t0_override;
  if (dt_override && has_t_column) sig.dx = *dt_override;
  if (!(sig.dx > 0.0)) throw ConfigError(path + ": sample step must be > 0");
  return sig;
}

void write_signal_csv(const std::string& path, const SampledSignal& sig,
                      const std::vector<std::string>& header_comments) {
  double max_abs = 0.0, max_imag = 0.0;
  for (const cplx& z : sig.values) {
    max_abs = std::max(max_abs, std::abs(z));
    max_imag = std::max(max_imag, std::abs(z.imag()));
  }
  bool complex_out = max_imag > 1e-12 * std::max(max_abs, 1e-300);

  std::ostringstream out;
  for (const std::string& c : header_comments) out << "# " << c << "\n";
  out << (complex_out ? "# columns: t,re,im\n" : "# columns: t,value\n");
  for (int j = 0; j < sig.size(); ++j) {
    out << fmt_double(sig.grid(j)) << "," << fmt_double(sig.values[j].real());
    if (complex_out) out << "," << fmt_double(sig.values[j].imag());
    out << "\n";
  }
  atomic_write(path, out.str());
}

void write_report_json(const std::string& path, const FilterReport& report) {
  json j;
  j["input_energy"] = report.input_energy;
  j["output_energy"] = report.output_energy;
  json per = json::object();
  for (const auto& [key, value] : report.per_subspace_energy) per[key] = value;
  j["per_subspace_energy"] = per;
  j["residual_l2"] = report.residual_l2;
  j["coefficient_tail"] = report.coefficient_tail;
  j["tool_version"] = report.tool_version;
  atomic_write(path, j.dump(2) + "\n");
}

CoeffVec apply_steps(const FilterPlan& plan, const CoeffVec& c) {
  CoeffVec cur = c;
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const FilterStep& step = plan.steps[i];
    switch (step.op) {
      case FilterStep::Op::Truncate: {
        if (step.nmax < 0 || step.nmax >= cur.size())
          throw ConfigError("plan.steps[" + std::to_string(i) + "].nmax: must be < modes");
        for (int n = step.nmax + 1; n < cur.size(); ++n) cur.values[n] = 0.0;
        break;
      }
      case FilterStep::Op::KeepSubspaces: {
        std::vector<char> keep(step.k, 0);
        for (int r : step.keep_r) keep[r] = 1;
        for (int n = 0; n < cur.size(); ++n)
          if (!keep[n % step.k]) cur.values[n] = 0.0;
        break;
      }
      case FilterStep::Op::Frft: {
        if (plan.basis == FilterBasis::Hermite)
          cur = frft(cur, step.a);
        else
          cur = frt_halfline(cur, plan_kernel(plan.basis), step.a);
        break;
      }
      case FilterStep::Op::TInvolution: {
        if (plan.basis == FilterBasis::Hermite)
          throw ConfigError("plan.steps[" + std::to_string(i) +
                            "].op: t_involution requires a Laguerre basis");
        cur = t_transform_spectral(cur, plan_kernel(plan.basis));
        break;
      }
    }
  }
  return cur;
}

FilterReport run_filter(const FilterPlan& plan, const std::string& input_path,
                        const std::string& output_path) {
  if (plan.modes < 1) throw ConfigError("plan.modes: must be >= 1");
  SampledSignal input = read_signal_csv(input_path);

  const int count = input.size();
  const double t_first = input.x0;
  const double t_last = input.grid(count - 1);

  WindowMap window;
  if (plan.window) {
    window = *plan.window;
  } else if (plan.basis == FilterBasis::Hermite) {
    // Center the grid and squeeze it inside the Hermite turning point.
    window.center = 0.5 * (t_first + t_last);
    double half_span = 0.5 * (t_last - t_first);
    double band = std::sqrt(2.0 * plan.modes + 1.0);
    window.scale = half_span > 0.0 ? half_span / band : 1.0;
  } else {
    // Map onto [0, 4N+2], the oscillatory range of the first N Laguerre modes.
    window.center = t_first;
    double span = t_last - t_first;
    window.scale = span > 0.0 ? span / (4.0 * plan.modes + 2.0) : 1.0;
  }

  SampledSignal windowed;
  windowed.x0 = (input.x0 - window.center) / window.scale;
  windowed.dx = input.dx / window.scale;
  windowed.values = input.values;

  CoeffVec coeffs;
  if (plan.basis == FilterBasis::Hermite) {
    coeffs = analyze_hermite(windowed, plan.modes);
  } else {
    if (windowed.x0 < 0.0)
      throw NumericError("laguerre basis with negative-domain samples (x0 = " +
                         fmt_double(windowed.x0) + " after windowing)");
    coeffs = analyze_laguerre(windowed, plan.modes, plan_alpha(plan.basis));
  }

  FilterReport report;
  report.input_energy = energy(coeffs);
  report.coefficient_tail = std::abs(coeffs.values.back());

  // Unfiltered round trip on the sample grid, relative L2.
  {
    std::vector<double> grid(count);
    for (int j = 0; j < count; ++j) grid[j] = windowed.grid(j);
    std::vector<cplx> recon = plan.basis == FilterBasis::Hermite
                                  ? synthesize_hermite(coeffs, grid)
                                  : synthesize_laguerre(coeffs, grid);
    double num = 0.0, den = 0.0;
    for (int j = 0; j < count; ++j) {
      num += std::norm(recon[j] - input.values[j]);
      den += std::norm(input.values[j]);
    }
    report.residual_l2 = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
  }

  // Per-subspace energies of the analyzed input, for the first subspace step's
  // k (or k = 1 when the plan has none).
  int report_k = 1;
  for (const FilterStep& step : plan.steps)
    if (step.op == FilterStep::Op::KeepSubspaces) {
      report_k = step.k;
      break;
    }
  for (int r = 0; r < report_k; ++r) {
    double e = 0.0;
    for (int n = r; n < coeffs.size(); n += report_k) e += std::norm(coeffs.values[n]);
    report.per_subspace_energy[std::to_string(report_k) + ":" + std::to_string(r)] = e;
  }

  CoeffVec filtered = apply_steps(plan, coeffs);
  report.output_energy = energy(filtered);

  for (const cplx& z : filtered.values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericError("filtered coefficients are non-finite");

  SampledSignal output;
  output.x0 = input.x0;
  output.dx = input.dx;
  {
    std::vector<double> grid(count);
    for (int j = 0; j < count; ++j) grid[j] = windowed.grid(j);
    output.values = plan.basis == FilterBasis::Hermite ? synthesize_hermite(filtered, grid)
                                                       : synthesize_laguerre(filtered, grid);
  }
  write_signal_csv(output_path, output, {"filtered signal (tool_version " +
                                         std::string(kToolVersion) + ")"});
  return report;
}

SampledSignal synth_gaussian_pulse(const GridSpec& grid) {
  if (grid.n < 1 || !(grid.dt > 0.0)) throw ConfigError("synth: invalid grid");
  SampledSignal sig;
  sig.x0 = grid.t0;
  sig.dx = grid.dt;
  sig.values.resize(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    double t = sig.grid(j);
    sig.values[j] = std::exp(-0.5 * t * t);
  }
  return sig;
}

SampledSignal synth_chirp(const GridSpec& grid) {
  if (grid.n < 1 || !(grid.dt > 0.0)) throw ConfigError("synth: invalid grid");
  SampledSignal sig;
  sig.x0 = grid.t0;
  sig.dx = grid.dt;
  sig.values.resize(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    double t = sig.grid(j);
    sig.values[j] = std::exp(-t * t / 8.0) * std::cos(t + 0.25 * t * t);
  }
  return sig;
}

SampledSignal synth_hermite_mix(const GridSpec& grid, const std::map<int, double>& amps) {
  if (grid.n < 1 || !(grid.dt > 0.0)) throw ConfigError("synth: invalid grid");
  if (amps.empty()) throw ConfigError("synth: hermite_mix needs at least one mode");
  int nmax = 0;
  for (const auto& [n, amp] : amps) {
    if (n < 0) throw ConfigError("synth: hermite_mix mode indices must be >= 0");
    nmax = std::max(nmax, n);
    (void)amp;
  }
  SampledSignal sig;
  sig.x0 = grid.t0;
  sig.dx = grid.dt;
  sig.values.resize(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    std::vector<double> b = hermite_fn_batch(nmax, sig.grid(j));
    double acc = 0.0;
    for (const auto& [n, amp] : amps) acc += amp * b[n];
    sig.values[j] = acc;
  }
  return sig;
}

SampledSignal add_noise(const SampledSignal& base, double snr_db, std::uint64_t seed) {
  double power = 0.0;
  for (const cplx& z : base.values) power += std::norm(z);
  power /= std::max<size_t>(base.values.size(), 1);
  double sigma = power > 0.0 ? std::sqrt(power * std::pow(10.0, -snr_db / 10.0)) : 0.0;

  std::mt19937_64 rng(seed);
  // Explicit Box-Muller on 53-bit uniforms: std::normal_distribution is
  // implementation-defined, this is not.
  auto uniform01 = [&rng]() { return ((rng() >> 11) + 1.0) * 0x1.0p-53; };
  SampledSignal out = base;
  for (cplx& z : out.values) {
    double u1 = uniform01();
    double u2 = uniform01();
    double g = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    z += sigma * g;
  }
  return out;
}

namespace {

bool check(std::ostream& out, const std::string& name, bool ok, double value) {
  out << (ok ? "[ ok ] " : "[fail] ") << name << " (" << value << ")\n";
  return ok;
}

}  // namespace

bool verify_invariants(std::ostream& out) {
  bool all = true;

  {  // Hermite orthonormality through the quadrature oracle
    QuadRule rule = gauss_hermite(72);
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
      for (int m = n; m <= 20; ++m) {
        cplx g = integrate(rule, [&](double x) {
          return cplx(hermite_fn(n, x) * hermite_fn(m, x), 0.0);
        });
        worst = std::max(worst, std::abs(g.real() - (n == m ? 1.0 : 0.0)));
      }
    all &= check(out, "hermite orthonormality n,m<=20", worst < 1e-12, worst);
  }
  {  // Laguerre orthonormality, both kernel-paired alphas
    double worst = 0.0;
    for (double alpha : {-0.5, 0.5}) {
      QuadRule rule = gauss_laguerre(64, alpha);
      for (int n = 0; n <= 16; ++n)
        for (int m = n; m <= 16; ++m) {
          cplx g = integrate(rule, [&](double y) {
            return cplx(laguerre_fn(n, alpha, y) * laguerre_fn(m, alpha, y), 0.0);
          });
          worst = std::max(worst, std::abs(g.real() - (n == m ? 1.0 : 0.0)));
        }
    }
    all &= check(out, "laguerre orthonormality n,m<=16", worst < 1e-10, worst);
  }
  {  // fractional transform group law, period, unitarity
    CoeffVec c;
    c.values.resize(24);
    std::mt19937_64 rng(12345);
    for (cplx& z : c.values)
      z = cplx((rng() >> 11) * 0x1.0p-53 - 0.5, (rng() >> 11) * 0x1.0p-53 - 0.5);
    CoeffVec lhs = frft(frft(c, 0.7), 1.6);
    CoeffVec rhs = frft(c, 2.3);
    double worst = 0.0;
    for (int n = 0; n < c.size(); ++n)
      worst = std::max(worst, std::abs(lhs.values[n] - rhs.values[n]));
    CoeffVec full = frft(c, 4.0);
    for (int n = 0; n < c.size(); ++n)
      worst = std::max(worst, std::abs(full.values[n] - c.values[n]));
    worst = std::max(worst, std::abs(energy(frft(c, 1.3)) - energy(c)));
    all &= check(out, "frft group law / period / unitarity", worst < 1e-13, worst);

    // residue-class split: bitwise completeness and the eigenrelation
    auto parts = decompose(c, 4);
    double eig = 0.0;
    bool bitwise = true;
    for (int r = 0; r < 4; ++r) {
      CoeffVec f = frft(parts[r], 1.0);
      cplx ev = std::polar(1.0, 2.0 * M_PI * r / 4.0);
      for (int n = 0; n < c.size(); ++n)
        eig = std::max(eig, std::abs(f.values[n] - ev * parts[r].values[n]));
    }
    for (int n = 0; n < c.size(); ++n) {
      cplx sum = 0.0;
      for (int r = 0; r < 4; ++r) sum += parts[r].values[n];
      bitwise &= sum == c.values[n];
    }
    all &= check(out, "subspace split k=4 (sum bitwise, eigenrelation)",
                 bitwise && eig < 1e-13, eig);
  }
  {  // half-line involution against its fractional form
    CoeffVec c;
    c.basis = Basis::Laguerre;
    c.alpha = -0.5;
    c.values = {cplx(0.3, 0.1), cplx(-1.0, 0.0), cplx(0.0, 2.0), cplx(0.5, -0.5)};
    CoeffVec two = t_transform_spectral(t_transform_spectral(c, KernelSign::Plus),
                                        KernelSign::Plus);
    CoeffVec fr = frt_halfline(c, KernelSign::Plus, 2.0);
    CoeffVec sp = t_transform_spectral(c, KernelSign::Plus);
    double worst = 0.0;
    for (int n = 0; n < c.size(); ++n) {
      worst = std::max(worst, std::abs(two.values[n] - c.values[n]));
      worst = std::max(worst, std::abs(fr.values[n] - sp.values[n]));
    }
    all &= check(out, "half-line involution / a=2 equality", worst < 1e-15, worst);
  }
  {  // su(1,1) Casimir scalar
    CoeffVec c;
    c.basis = Basis::Laguerre;
    c.alpha = 0.5;
    c.values.assign(12, 0.0);
    c.values[4] = cplx(1.0, -2.0);
    c.values[5] = cplx(0.5, 0.0);
    CoeffVec cas = casimir_su11(0.5, c);
    double worst = 0.0;
    for (int n = 0; n < 10; ++n)
      worst = std::max(worst, std::abs(cas.values[n] - (-0.1875) * c.values[n]));
    all &= check(out, "su(1,1) casimir = (alpha^2-1)/4", worst < 1e-12, worst);
  }
  {  // commutators on the truncation interior
    double r1 = commutator_residual(oscillator_op(OscillatorOp::Lower),
                                    oscillator_op(OscillatorOp::Raise),
                                    oscillator_op(OscillatorOp::Identity), 48, 2);
    double r2 = commutator_residual(su11_op(Su11Op::JPlus, 0.5), su11_op(Su11Op::JMinus, 0.5),
                                    scale(-2.0, su11_op(Su11Op::J3, 0.5)), 48, 2);
    double worst = std::max(r1, r2);
    all &= check(out, "commutators [a,a+]=I and [J+,J-]=-2J3", worst < 1e-12, worst);
  }
  {  // periodized Hermite: wrap sum against Fourier synthesis
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n)
      for (double phi : {-2.0, 0.3, 1.7}) {
        double direct = periodized_hermite_direct(n, phi, 1e-12);
        std::complex<double> fourier = periodized_hermite_fourier(n, phi, 30);
        worst = std::max(worst, std::abs(fourier.real() - direct));
        worst = std::max(worst, std::abs(fourier.imag()));
      }
    all &= check(out, "periodized Hermite two constructions", worst < 1e-8, worst);
    std::string det = hermite_integer_det(4, DetMode::Half);
    all &= check(out, "Hermite integer determinant N=4 nonzero", det != "0", double(det != "0"));
  }
  {  // analysis/synthesis round trip on an in-span signal
    QuadRule rule = gauss_hermite(default_rule_size(16));
    CoeffVec c = analyze_hermite([](double x) { return cplx(hermite_fn(3, x), 0.0); }, 16, rule);
    double worst = std::abs(c.values[3] - 1.0);
    for (int n = 0; n < 16; ++n)
      if (n != 3) worst = std::max(worst, std::abs(c.values[n]));
    all &= check(out, "analyze picks out K3", worst < 1e-12, worst);
  }

  out << (all ? "verify: all checks passed\n" : "verify: FAILURES present\n");
  return all;
}

}  // namespace harmonic
