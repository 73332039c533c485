// Copyright 2026 The czgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "czgate/sweep.hpp"
#include "json.hpp"

namespace czgate::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Shortest decimal string that parses back to the identical double.
std::string format_double(double value) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value);
  return std::string(buf.data(), ptr);
}

constexpr const char* kCsvHeader =
    "d_theta1,d_psi1,d_phi1,d_theta2,d_psi2,d_phi2,d_theta3,d_psi3,d_phi3,"
    "p_main,p_anc,avg_fidelity";

std::array<double, kNumNoiseParams> noise_columns(
    const std::array<PulseNoise, 3>& noises) {
  return {noises[0].d_theta, noises[0].d_psi, noises[0].d_phi,
          noises[1].d_theta, noises[1].d_psi, noises[1].d_phi,
          noises[2].d_theta, noises[2].d_psi, noises[2].d_phi};
}

void append_csv_row(std::string& text, const ChannelReport& report) {
  for (const double v : noise_columns(report.noises)) {
    text += format_double(v);
    text += ',';
  }
  text += format_double(report.p_main);
  text += ',';
  text += format_double(report.p_anc);
  text += ',';
  text += format_double(report.avg_fidelity);
  text += '\n';
}

const char* mode_name(HadamardMode mode) {
  return mode == HadamardMode::kPaper ? "paper" : "physical";
}

ordered_json report_json(const ChannelReport& report) {
  static constexpr std::array<const char*, kNumNoiseParams> kKeys = {
      "d_theta1", "d_psi1", "d_phi1", "d_theta2", "d_psi2",
      "d_phi2",   "d_theta3", "d_psi3", "d_phi3"};

  ordered_json noise;
  const auto columns = noise_columns(report.noises);
  for (int i = 0; i < kNumNoiseParams; ++i) {
    noise[kKeys[static_cast<std::size_t>(i)]] =
        columns[static_cast<std::size_t>(i)];
  }

  ordered_json j;
  j["noise"] = std::move(noise);
  j["hadamard_mode"] = mode_name(report.mode);
  j["p_main"] = report.p_main;
  j["p_anc"] = report.p_anc;
  j["avg_fidelity"] = report.avg_fidelity;
  if (report.state_fidelity) j["state_fidelity"] = *report.state_fidelity;
  j["kraus_cross_residual"] = report.kraus_cross_residual;
  j["seed"] = report.seed;
  j["samples"] = report.fidelity_samples;
  return j;
}

ordered_json stats_json(const SummaryStats& stats) {
  ordered_json j;
  j["mean"] = stats.mean;
  j["min"] = stats.min;
  j["max"] = stats.max;
  j["p05"] = stats.p05;
  j["p50"] = stats.p50;
  j["p95"] = stats.p95;
  return j;
}

void append_stats_row(std::string& text, const char* label, double p_anc,
                      double avg_fidelity) {
  text += label;
  text += ',';
  text += format_double(p_anc);
  text += ',';
  text += format_double(avg_fidelity);
  text += '\n';
}

Mat4 load_matrix_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open input file: " + path);
  }

  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("input file " + path +
                                " is not valid JSON: " + e.what());
  }

  const auto shape_error = [&path]() {
    return std::invalid_argument("input file " + path +
                                 " must hold a 4x4 array of [re, im] pairs");
  };
  if (!j.is_array() || j.size() != 4) throw shape_error();

  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) throw shape_error();
    for (int c = 0; c < 4; ++c) {
      const auto& entry = row[static_cast<std::size_t>(c)];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw shape_error();
      }
      m(r, c) = Complex{entry[0].get<double>(), entry[1].get<double>()};
    }
  }
  return m;
}

InputSpec parse_input_spec(const std::string& text) {
  if (text == "mixed") return InputSpec::mixed();

  if (text.starts_with("basis:")) {
    const std::string digits = text.substr(6);
    int index = -1;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("basis index must be an integer (got '" +
                                  digits + "')");
    }
    return InputSpec::basis(index);
  }

  if (text.starts_with("file:")) {
    return InputSpec::matrix_input(load_matrix_file(text.substr(5)));
  }

  throw std::invalid_argument(
      "input must be 'mixed', 'basis:K', or 'file:PATH' (got '" + text + "')");
}

void emit(const std::string& text, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + output_path);
  }
  file << text;
}

/// Flags shared by the run-producing subcommands.
struct CommonFlags {
  std::array<double, kNumNoiseParams> noise{};
  std::string hadamard_mode = "paper";
  std::string input = "mixed";
  std::uint64_t seed = 0;
  std::string format;
  std::string output;

  HadamardMode mode() const {
    return hadamard_mode == "physical" ? HadamardMode::kPhysical
                                       : HadamardMode::kPaper;
  }

  void apply_to(RunConfig& config) const {
    for (int i = 0; i < kNumNoiseParams; ++i) {
      set_noise_param(config, static_cast<NoiseParam>(i),
                      noise[static_cast<std::size_t>(i)]);
    }
    config.mode = mode();
    config.input = parse_input_spec(input);
    config.seed = seed;
  }
};

void add_noise_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--dtheta1", flags.noise[0], "Impulse-area offset, pulse 1 (rad)");
  cmd->add_option("--dpsi1", flags.noise[1], "Detuning-phase offset, pulse 1 (rad)");
  cmd->add_option("--dphi1", flags.noise[2], "Laser-phase offset, pulse 1 (rad)");
  cmd->add_option("--dtheta2", flags.noise[3], "Impulse-area offset, pulse 2 (rad)");
  cmd->add_option("--dpsi2", flags.noise[4], "Detuning-phase offset, pulse 2 (rad)");
  cmd->add_option("--dphi2", flags.noise[5], "Laser-phase offset, pulse 2 (rad)");
  cmd->add_option("--dtheta3", flags.noise[6], "Impulse-area offset, pulse 3 (rad)");
  cmd->add_option("--dpsi3", flags.noise[7], "Detuning-phase offset, pulse 3 (rad)");
  cmd->add_option("--dphi3", flags.noise[8], "Laser-phase offset, pulse 3 (rad)");
}

void add_io_flags(CLI::App* cmd, CommonFlags& flags,
                  const std::string& default_format) {
  flags.format = default_format;

  cmd->add_option("--hadamard-mode", flags.hadamard_mode,
                  "Hadamard embedding: paper | physical")
      ->check(CLI::IsMember({"paper", "physical"}))
      ->capture_default_str();
  cmd->add_option("--input", flags.input,
                  "Input state: mixed | basis:K | file:PATH")
      ->capture_default_str();
  cmd->add_option("--seed", flags.seed, "Base seed for all sampling")
      ->capture_default_str();
  cmd->add_option("--format", flags.format, "Output format: csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", flags.output,
                  "Write machine output to this file instead of stdout");
}

struct CheckReporter {
  std::ostream& err;
  bool all_passed = true;

  void check(const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    all_passed = all_passed && ok;
    err << (ok ? "PASS" : "FAIL") << "  " << name
        << "  (residual " << format_double(residual) << ", tolerance "
        << format_double(tol) << ")\n";
  }
};

int cmd_ideal(std::ostream& err) {
  CheckReporter reporter{err};

  const GateMatrix v1 = embed_pulse(1, build_unitary(ideal_pulse_params(1)));
  const GateMatrix v2 = embed_pulse(2, build_unitary(ideal_pulse_params(2)));
  const GateMatrix v3 = embed_pulse(3, build_unitary(ideal_pulse_params(3)));

  // Mapping tables of the three-pulse protocol on the basis vectors each
  // pulse may touch. e(k) is the k-th level; amplitudes are tracked through
  // the composition starting from the four computational states.
  const auto e = [](int k) {
    Eigen::Matrix<Complex, 12, 1> v = Eigen::Matrix<Complex, 12, 1>::Zero();
    v(k) = 1.0;
    return v;
  };
  const Complex im{0.0, 1.0};

  reporter.check("pulse-1 map |00;0> -> |00;0>", (v1 * e(0) - e(0)).norm(), 1e-15);
  reporter.check("pulse-1 map |01;0> -> |01;0>", (v1 * e(1) - e(1)).norm(), 1e-15);
  reporter.check("pulse-1 map |10;0> -> i|00;1>", (v1 * e(2) - im * e(6)).norm(), 1e-15);
  reporter.check("pulse-1 map |11;0> -> i|01;1>", (v1 * e(3) - im * e(7)).norm(), 1e-15);

  reporter.check("pulse-2 map |00;0> -> |00;0>", (v2 * e(0) - e(0)).norm(), 1e-15);
  reporter.check("pulse-2 map |01;0> -> |01;0>", (v2 * e(1) - e(1)).norm(), 1e-15);
  reporter.check("pulse-2 map i|00;1> -> -i|00;1>",
                 (v2 * (im * e(6)) + im * e(6)).norm(), 1e-15);
  reporter.check("pulse-2 map i|01;1> -> i|01;1>",
                 (v2 * (im * e(7)) - im * e(7)).norm(), 1e-15);

  reporter.check("pulse-3 map |00;0> -> |00;0>", (v3 * e(0) - e(0)).norm(), 1e-15);
  reporter.check("pulse-3 map |01;0> -> |01;0>", (v3 * e(1) - e(1)).norm(), 1e-15);
  reporter.check("pulse-3 map -i|00;1> -> |10;0>",
                 (v3 * (-im * e(6)) - e(2)).norm(), 1e-15);
  reporter.check("pulse-3 map i|01;1> -> -|11;0>",
                 (v3 * (im * e(7)) + e(3)).norm(), 1e-15);

  Mat4 cminus = Mat4::Identity();
  cminus(3, 3) = -1.0;
  const GateMatrix inner = v3 * v2 * v1;
  reporter.check("three-pulse product = diag(1,1,1,-1) on computational block",
                 max_abs_diff(inner.block<4, 4>(0, 0), cminus), 1e-15);

  const GateMatrix gate = compose_gate({});
  reporter.check("composed gate top 4x4 = controlled-not",
                 max_abs_diff(gate.block<4, 4>(0, 0), cnot_matrix()), 1e-12);

  const KrausSet extracted = kraus_from_gate(gate);
  const KrausSet closed =
      kraus_closed_form(build_unitary(ideal_pulse_params(1)),
                        build_unitary(ideal_pulse_params(2)),
                        build_unitary(ideal_pulse_params(3)));

  reporter.check("A1 = controlled-not",
                 max_abs_diff(extracted.a1, cnot_matrix()), 1e-12);
  reporter.check("A3 = 0", max_abs(extracted.a3), 1e-12);
  reporter.check("C1 = 0", max_abs(extracted.c1), 1e-12);
  reporter.check("C3 = 0", max_abs(extracted.c3), 1e-12);

  const Mat4 completeness = extracted.a1.adjoint() * extracted.a1 +
                            extracted.a3.adjoint() * extracted.a3 +
                            extracted.c1.adjoint() * extracted.c1 +
                            extracted.c3.adjoint() * extracted.c3;
  reporter.check("Kraus completeness sum = identity",
                 max_abs_diff(completeness, Mat4::Identity()), 1e-12);

  const double cross =
      std::max({max_abs_diff(extracted.a1, closed.a1),
                max_abs_diff(extracted.a3, closed.a3),
                max_abs_diff(extracted.c1, closed.c1),
                max_abs_diff(extracted.c3, closed.c3)});
  reporter.check("closed-form Kraus = extracted Kraus", cross, 1e-12);

  RunConfig config;
  const ChannelReport report = run_single(config);
  reporter.check("zero-noise leakage p_anc = 0", report.p_anc, 1e-12);
  reporter.check("zero-noise average fidelity = 1", 1.0 - report.avg_fidelity,
                 1e-12);

  return reporter.all_passed ? 0 : 2;
}

int cmd_single(const CommonFlags& flags, int samples, std::ostream& out) {
  RunConfig config;
  flags.apply_to(config);
  config.fidelity_samples = samples;

  const ChannelReport report = run_single(config);

  std::string text;
  if (flags.format == "csv") {
    text = kCsvHeader;
    text += '\n';
    append_csv_row(text, report);
  } else {
    text = report_json(report).dump(2);
    text += '\n';
  }
  emit(text, flags.output, out);
  return 0;
}

int emit_table(const std::vector<ChannelReport>& reports,
               const CommonFlags& flags, std::ostream& out) {
  std::string text;
  if (flags.format == "csv") {
    text = kCsvHeader;
    text += '\n';
    for (const ChannelReport& report : reports) append_csv_row(text, report);
  } else {
    ordered_json rows = ordered_json::array();
    for (const ChannelReport& report : reports) {
      rows.push_back(report_json(report));
    }
    text = rows.dump(2);
    text += '\n';
  }
  emit(text, flags.output, out);
  return 0;
}

int cmd_montecarlo(const CommonFlags& flags, const MonteCarloSpec& spec,
                   bool emit_samples, int threads, std::ostream& out) {
  const MonteCarloResult result = run_montecarlo(spec, emit_samples, threads);

  std::string text;
  if (flags.format == "csv") {
    if (emit_samples) {
      text = kCsvHeader;
      text += '\n';
      for (const ChannelReport& report : result.rows) {
        append_csv_row(text, report);
      }
    } else {
      text = "statistic,p_anc,avg_fidelity\n";
      append_stats_row(text, "mean", result.p_anc.mean,
                       result.avg_fidelity.mean);
      append_stats_row(text, "min", result.p_anc.min, result.avg_fidelity.min);
      append_stats_row(text, "max", result.p_anc.max, result.avg_fidelity.max);
      append_stats_row(text, "p05", result.p_anc.p05, result.avg_fidelity.p05);
      append_stats_row(text, "p50", result.p_anc.p50, result.avg_fidelity.p50);
      append_stats_row(text, "p95", result.p_anc.p95, result.avg_fidelity.p95);
    }
  } else {
    ordered_json j;
    ordered_json sigma;
    sigma["theta"] = spec.sigma_theta;
    sigma["psi"] = spec.sigma_psi;
    sigma["phi"] = spec.sigma_phi;
    j["sigma"] = std::move(sigma);
    j["hadamard_mode"] = mode_name(spec.mode);
    j["samples"] = spec.samples;
    j["fidelity_samples"] = spec.fidelity_samples;
    j["seed"] = spec.seed;
    j["p_anc"] = stats_json(result.p_anc);
    j["avg_fidelity"] = stats_json(result.avg_fidelity);
    if (emit_samples) {
      ordered_json rows = ordered_json::array();
      for (const ChannelReport& report : result.rows) {
        rows.push_back(report_json(report));
      }
      j["rows"] = std::move(rows);
    }
    text = j.dump(2);
    text += '\n';
  }
  emit(text, flags.output, out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Error-model simulator for the five-pulse trapped-ion controlled-not "
      "gate"};
  app.require_subcommand(1);

  int exit_code = 0;

  CLI::App* ideal = app.add_subcommand(
      "ideal", "Verify the zero-noise protocol against its defining maps");
  ideal->callback([&] { exit_code = cmd_ideal(err); });

  // single
  auto single_flags = std::make_shared<CommonFlags>();
  auto single_samples = std::make_shared<int>(512);
  CLI::App* single =
      app.add_subcommand("single", "Evaluate one noise configuration");
  add_noise_flags(single, *single_flags);
  add_io_flags(single, *single_flags, "json");
  single->add_option("--samples", *single_samples,
                     "Haar samples for the fidelity average")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  single->callback(
      [&, single_flags, single_samples] {
        exit_code = cmd_single(*single_flags, *single_samples, out);
      });

  // sweep
  auto sweep_flags = std::make_shared<CommonFlags>();
  auto sweep_samples = std::make_shared<int>(512);
  auto sweep_param = std::make_shared<std::string>();
  auto sweep_axis = std::make_shared<SweepAxis>();
  auto sweep_threads = std::make_shared<int>(1);
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep one noise parameter over an inclusive range");
  add_noise_flags(sweep, *sweep_flags);
  add_io_flags(sweep, *sweep_flags, "csv");
  sweep->add_option("--param", *sweep_param, "Parameter to sweep")->required();
  sweep->add_option("--from", sweep_axis->from, "Range start (rad)")
      ->required();
  sweep->add_option("--to", sweep_axis->to, "Range end (rad)")->required();
  sweep->add_option("--steps", sweep_axis->steps, "Grid points (>= 2)")
      ->required();
  sweep->add_option("--samples", *sweep_samples,
                    "Haar samples for the fidelity average")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--threads", *sweep_threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->callback([&, sweep_flags, sweep_samples, sweep_param, sweep_axis,
                   sweep_threads] {
    SweepSpec spec;
    sweep_flags->apply_to(spec.base);
    spec.base.fidelity_samples = *sweep_samples;
    sweep_axis->param = parse_noise_param(*sweep_param);
    spec.axes = {*sweep_axis};
    exit_code = emit_table(run_sweep(spec, *sweep_threads), *sweep_flags, out);
  });

  // grid
  auto grid_flags = std::make_shared<CommonFlags>();
  auto grid_samples = std::make_shared<int>(512);
  auto grid_params = std::make_shared<std::array<std::string, 2>>();
  auto grid_axes = std::make_shared<std::array<SweepAxis, 2>>();
  auto grid_threads = std::make_shared<int>(1);
  CLI::App* grid = app.add_subcommand(
      "grid", "Sweep two noise parameters over an inclusive 2-d grid");
  add_noise_flags(grid, *grid_flags);
  add_io_flags(grid, *grid_flags, "csv");
  grid->add_option("--param1", (*grid_params)[0], "First (outer) parameter")
      ->required();
  grid->add_option("--from1", (*grid_axes)[0].from, "First range start (rad)")
      ->required();
  grid->add_option("--to1", (*grid_axes)[0].to, "First range end (rad)")
      ->required();
  grid->add_option("--steps1", (*grid_axes)[0].steps, "First grid points")
      ->required();
  grid->add_option("--param2", (*grid_params)[1], "Second (inner) parameter")
      ->required();
  grid->add_option("--from2", (*grid_axes)[1].from, "Second range start (rad)")
      ->required();
  grid->add_option("--to2", (*grid_axes)[1].to, "Second range end (rad)")
      ->required();
  grid->add_option("--steps2", (*grid_axes)[1].steps, "Second grid points")
      ->required();
  grid->add_option("--samples", *grid_samples,
                   "Haar samples for the fidelity average")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  grid->add_option("--threads", *grid_threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  grid->callback([&, grid_flags, grid_samples, grid_params, grid_axes,
                  grid_threads] {
    SweepSpec spec;
    grid_flags->apply_to(spec.base);
    spec.base.fidelity_samples = *grid_samples;
    (*grid_axes)[0].param = parse_noise_param((*grid_params)[0]);
    (*grid_axes)[1].param = parse_noise_param((*grid_params)[1]);
    spec.axes = {(*grid_axes)[0], (*grid_axes)[1]};
    exit_code = emit_table(run_sweep(spec, *grid_threads), *grid_flags, out);
  });

  // montecarlo
  auto mc_flags = std::make_shared<CommonFlags>();
  auto mc_spec = std::make_shared<MonteCarloSpec>();
  mc_spec->samples = 512;
  auto mc_emit_samples = std::make_shared<bool>(false);
  CLI::App* montecarlo = app.add_subcommand(
      "montecarlo", "Sample Gaussian noise ensembles and summarize");
  add_io_flags(montecarlo, *mc_flags, "csv");
  montecarlo->add_option("--sigma-theta", mc_spec->sigma_theta,
                         "Impulse-area noise sigma (rad)")
      ->capture_default_str();
  montecarlo->add_option("--sigma-psi", mc_spec->sigma_psi,
                         "Detuning-phase noise sigma (rad)")
      ->capture_default_str();
  montecarlo->add_option("--sigma-phi", mc_spec->sigma_phi,
                         "Laser-phase noise sigma (rad)")
      ->capture_default_str();
  montecarlo->add_option("--samples", mc_spec->samples, "Noise draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  montecarlo->add_option("--fidelity-samples", mc_spec->fidelity_samples,
                         "Haar samples for each fidelity average")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  montecarlo->add_flag("--emit-samples", *mc_emit_samples,
                       "Emit per-sample rows instead of the summary");
  auto mc_threads = std::make_shared<int>(1);
  montecarlo->add_option("--threads", *mc_threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  montecarlo->callback([&, mc_flags, mc_spec, mc_emit_samples, mc_threads] {
    mc_spec->seed = mc_flags->seed;
    mc_spec->mode = mc_flags->mode();
    mc_spec->input = parse_input_spec(mc_flags->input);
    exit_code = cmd_montecarlo(*mc_flags, *mc_spec, *mc_emit_samples,
                               *mc_threads, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}

}  // namespace czgate::cli
