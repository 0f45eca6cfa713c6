#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "harmonic/filter.hpp"

namespace {

// --mix "2:1.0,5:1.0" -> {2: 1.0, 5: 1.0}
std::map<int, double> parse_mix(const std::string& text) {
  std::map<int, double> amps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw harmonic::ConfigError("--mix: expected n:amp pairs, got '" + item + "'");
    try {
      int n = std::stoi(item.substr(0, colon));
      double amp = std::stod(item.substr(colon + 1));
      amps[n] = amp;
    } catch (const std::exception&) {
      throw harmonic::ConfigError("--mix: cannot parse '" + item + "'");
    }
  }
  if (amps.empty()) throw harmonic::ConfigError("--mix: no modes given");
  return amps;
}

harmonic::SampledSignal make_base(const std::string& kind, const harmonic::GridSpec& grid,
                                  const std::string& mix) {
  if (kind == "gaussian_pulse") return harmonic::synth_gaussian_pulse(grid);
  if (kind == "chirp") return harmonic::synth_chirp(grid);
  if (kind == "hermite_mix") return harmonic::synth_hermite_mix(grid, parse_mix(mix));
  throw harmonic::ConfigError("--kind/--base: unknown signal kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite/Laguerre spectral filtering"};
  app.require_subcommand(1);

  // run
  std::string config_path, input_path, output_path, report_path;
  CLI::App* run = app.add_subcommand("run", "apply a filter plan to a sampled signal");
  run->add_option("--config", config_path, "plan JSON")->required();
  run->add_option("--input", input_path, "input CSV")->required();
  run->add_option("--output", output_path, "output CSV")->required();
  run->add_option("--report", report_path, "report JSON");

  // synth
  std::string kind = "gaussian_pulse", base_kind = "gaussian_pulse", out_path, mix;
  harmonic::GridSpec grid;
  double snr_db = 20.0;
  std::uint64_t seed = 1;
  CLI::App* synth = app.add_subcommand("synth", "generate a test signal");
  synth->add_option("--kind", kind, "gaussian_pulse|chirp|hermite_mix|noisy");
  synth->add_option("--n", grid.n, "sample count");
  synth->add_option("--t0", grid.t0, "grid origin");
  synth->add_option("--dt", grid.dt, "grid step");
  synth->add_option("--out", out_path, "output CSV")->required();
  synth->add_option("--mix", mix, "hermite_mix amplitudes, e.g. 2:1.0,5:1.0");
  synth->add_option("--base", base_kind, "base signal for --kind noisy");
  synth->add_option("--snr", snr_db, "noisy: signal-to-noise ratio in dB");
  synth->add_option("--seed", seed, "noisy: PRNG seed");

  CLI::App* verify = app.add_subcommand("verify", "run the embedded invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      harmonic::FilterPlan plan = harmonic::load_plan(config_path);
      harmonic::FilterReport report = harmonic::run_filter(plan, input_path, output_path);
      if (!report_path.empty()) harmonic::write_report_json(report_path, report);
      std::cout << "input_energy=" << report.input_energy
                << " output_energy=" << report.output_energy
                << " residual_l2=" << report.residual_l2
                << " coefficient_tail=" << report.coefficient_tail << "\n";
    } else if (synth->parsed()) {
      harmonic::SampledSignal sig;
      std::vector<std::string> comments;
      if (kind == "noisy") {
        sig = harmonic::add_noise(make_base(base_kind, grid, mix), snr_db, seed);
        comments.push_back("synth kind=noisy base=" + base_kind +
                           " snr_db=" + std::to_string(snr_db) +
                           " seed=" + std::to_string(seed) +
                           " noise=" + harmonic::kNoiseAlgorithm);
      } else {
        sig = make_base(kind, grid, mix);
        comments.push_back("synth kind=" + kind);
      }
      harmonic::write_signal_csv(out_path, sig, comments);
    } else if (verify->parsed()) {
      if (!harmonic::verify_invariants(std::cout)) return 4;
    }
  } catch (const harmonic::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const harmonic::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const harmonic::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
