#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/spectral.hpp"

// The filtering pipeline behind the CLI: ingest a sampled signal, project
// onto Hermite or Laguerre modes, apply index-truncation / (k,r)-subspace /
// fractional-transform steps, reconstruct, and report energies.

namespace harmonic {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kNoiseAlgorithm = "mt19937_64+box-muller";

// Error taxonomy mirrors the CLI exit codes: config 2, I/O 3, numeric 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FilterBasis { Hermite, LaguerrePlus, LaguerreMinus };

/// Affine sample-to-basis coordinate map t -> x = (t - center) / scale.
struct WindowMap {
  double center = 0.0;
  double scale = 1.0;
};

struct FilterStep {
  enum class Op { Truncate, KeepSubspaces, Frft, TInvolution };
  Op op = Op::Truncate;
  int nmax = 0;             // Truncate
  int k = 1;                // KeepSubspaces
  std::vector<int> keep_r;  // KeepSubspaces
  double a = 0.0;           // Frft
};

struct FilterPlan {
  FilterBasis basis = FilterBasis::Hermite;
  int modes = 64;
  std::optional<WindowMap> window;  // defaulted from the data when absent
  std::vector<FilterStep> steps;
};

struct FilterReport {
  double input_energy = 0.0;
  double output_energy = 0.0;
  std::map<std::string, double> per_subspace_energy;  // keyed "k:r"
  double residual_l2 = 0.0;       // unfiltered round-trip error, relative L2
  double coefficient_tail = 0.0;  // |a_{N-1}|
  std::string tool_version = kToolVersion;
};

/// Parse and validate a plan from its JSON text; names the offending field.
FilterPlan parse_plan_json(const std::string& text);
FilterPlan load_plan(const std::string& path);

/// Uniform-grid CSV: `t,value` or `t,re,im`, `#` comments. A dt/t0 override
/// supports single-column files.
SampledSignal read_signal_csv(const std::string& path,
                              std::optional<double> t0_override = {},
                              std::optional<double> dt_override = {});
void write_signal_csv(const std::string& path, const SampledSignal& sig,
                      const std::vector<std::string>& header_comments = {});

void write_report_json(const std::string& path, const FilterReport& report);

/// The whole pipeline; deterministic given identical inputs. Writes the
/// filtered signal to output_path (atomically) and returns the report.
FilterReport run_filter(const FilterPlan& plan, const std::string& input_path,
                        const std::string& output_path);

/// Step application on bare coefficients (the core run_filter drives).
CoeffVec apply_steps(const FilterPlan& plan, const CoeffVec& c);

struct GridSpec {
  double t0 = -8.0;
  double dt = 0.0625;
  int n = 256;
};

SampledSignal synth_gaussian_pulse(const GridSpec& grid);
SampledSignal synth_chirp(const GridSpec& grid);
SampledSignal synth_hermite_mix(const GridSpec& grid, const std::map<int, double>& amps);

/// base + white Gaussian noise at the given SNR (dB); the generator is
/// mt19937_64 driving a Box-Muller transform, so a seed pins the output bit
/// for bit on any platform.
SampledSignal add_noise(const SampledSignal& base, double snr_db, std::uint64_t seed);

/// Embedded invariant suite behind `filter verify`; prints one line per
/// check and returns true when all pass.
bool verify_invariants(std::ostream& out);

}  // namespace harmonic
