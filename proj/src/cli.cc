// Copyright 2026 The phaseret Authors.
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

#include "phaseret/cli.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phaseret/ambiguity_oracle.hpp"
#include "phaseret/errors.hpp"
#include "phaseret/grid_signal.hpp"
#include "phaseret/io.hpp"
#include "phaseret/measurement.hpp"
#include "phaseret/reconstruct.hpp"
#include "phaseret/trigpoly.hpp"

namespace phaseret {
namespace {

using io::Json;

struct SignalConfig {
  std::string kind = "gauss";
  std::int64_t n = 2048;
  double extent = 16.0;
  std::uint64_t seed = 0;
  int terms = 8;
  int degree = 3;
  double center = 0.0;
  double radius = 1.0;
  std::string out;
};

struct MeasureConfig {
  std::string input;
  std::string family = "gauss";
  std::string a = "1/1";
  std::string b = "2/1";
  std::string out;
  bool csv = false;
};

struct ReconstructConfig {
  std::vector<std::string> records;
  std::string truth;
  std::string out;
  double zero_tol = 1e-10;
};

struct ClassifyConfig {
  std::string first;
  std::string second;
  double tol = 1e-6;
  std::string out;
};

struct DiscreteConfig {
  int N = 3;
  int M = 0;  // 0 selects the mode's default
  std::string kind;
  int trials = 50;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string input;
  std::string out;
};

struct BargmannConfig {
  std::int64_t n = 2048;
  double extent = 16.0;
  double tol = 1e-6;
  std::string out;
};

void emit(std::ostream& out, const Json& report, const std::string& path) {
  out << report.dump(2) << "\n";
  if (!path.empty()) io::write_json_file(path, report);
}

double max_modulus_gap(const GridSignal& x, const GridSignal& y) {
  double gap = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) gap = std::max(gap, std::abs(std::abs(x[k]) - std::abs(y[k])));
  return gap;
}

Json samples_json(const SampleArrays& s) {
  return Json{{"modulus", s.modulus}, {"derivative", s.derivative}};
}

std::vector<DerivKind> parse_kinds(const std::string& kind, bool allow_both) {
  if (kind == "continuous") return {DerivKind::kContinuous};
  if (kind == "discrete") return {DerivKind::kDiscrete};
  if (allow_both && kind == "both") return {DerivKind::kContinuous, DerivKind::kDiscrete};
  throw InvalidArgument("unknown derivative kind '" + kind + "'");
}

std::string kind_name(DerivKind k) { return k == DerivKind::kContinuous ? "continuous" : "discrete"; }

void require_discrete_N(int N) {
  if (N < 3) throw InvalidArgument("N must be at least 3, got " + std::to_string(N));
}

// -- subcommands ------------------------------------------------------------

void cmd_signal(const SignalConfig& cfg, std::ostream& out) {
  const Grid grid(cfg.n, cfg.extent);
  std::mt19937_64 rng(cfg.seed);
  GridSignal sig(grid);
  if (cfg.kind == "gauss") {
    sig = eval_mask(mask::Gauss{}, grid);
  } else if (cfg.kind == "hermite") {
    sig = random_hermite_combination(grid, cfg.terms, rng);
  } else if (cfg.kind == "poly") {
    sig = random_gaussian_polynomial(grid, cfg.degree, rng);
  } else if (cfg.kind == "bump") {
    sig = bump(grid, cfg.center, cfg.radius);
  } else if (cfg.kind == "bargmann_plus" || cfg.kind == "bargmann_minus") {
    const auto pair = bargmann_pair(grid);
    sig = cfg.kind == "bargmann_plus" ? pair.first : pair.second;
  } else {
    throw InvalidArgument("unknown signal kind '" + cfg.kind + "'");
  }
  io::write_json_file(cfg.out, io::to_json(sig));
  emit(out, Json{{"kind", cfg.kind}, {"n", grid.size()}, {"extent", grid.extent()},
                 {"norm", sig.norm()}, {"file", cfg.out}},
       "");
}

void cmd_measure(const MeasureConfig& cfg, std::ostream& out) {
  const GridSignal phi = io::signal_from_json(io::read_json_file(cfg.input));
  RecordTriple records = [&] {
    if (cfg.family == "gauss") return three_gaussian_measurements(phi);
    if (cfg.family == "sine") {
      return sine_measurements(phi, Rational::parse(cfg.a), Rational::parse(cfg.b));
    }
    throw InvalidArgument("unknown family '" + cfg.family + "'");
  }();
  Json files = Json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string base = cfg.out + "." + std::to_string(i + 1);
    io::write_json_file(base + ".json", io::to_json(records[i]));
    files.push_back(base + ".json");
    if (cfg.csv) {
      io::write_text_file(base + ".csv", io::record_to_csv(records[i]));
      files.push_back(base + ".csv");
    }
  }
  Json masks = Json::array();
  for (const auto& r : records) masks.push_back(io::to_json(r.mask()));
  emit(out, Json{{"family", cfg.family}, {"masks", masks}, {"files", files}}, "");
}

void cmd_reconstruct(const ReconstructConfig& cfg, std::ostream& out) {
  if (cfg.records.size() != 3) throw InvalidArgument("reconstruct needs exactly three record files");
  std::vector<MeasurementRecord> recs;
  for (const auto& path : cfg.records) recs.push_back(io::record_from_json(io::read_json_file(path)));
  ReconstructOptions options;
  options.phase.zero_tol = cfg.zero_tol;
  const std::vector<Complex> fpf = recover_fprime_fbar(recs[0], recs[1], recs[2]);
  const Spectrum spectrum = integrate_phase(fpf, recs[0], options.phase);
  const GridSignal phi = reconstruct_three(recs[0], recs[1], recs[2], options);
  Json report{{"n", phi.size()},
              {"extent", phi.grid().extent()},
              {"interval", Json::array({spectrum.interval_begin, spectrum.interval_end})}};
  if (!cfg.truth.empty()) {
    const GridSignal truth = io::signal_from_json(io::read_json_file(cfg.truth));
    if (!truth.grid().compatible_with(phi.grid())) throw InvalidArgument("ground truth lives on another grid");
    report["residual"] = aligned_relative_error(truth, phi);
  }
  if (!cfg.out.empty()) {
    io::write_json_file(cfg.out, io::to_json(phi));
    report["file"] = cfg.out;
  }
  emit(out, report, "");
}

void cmd_classify(const ClassifyConfig& cfg, std::ostream& out) {
  const GridSignal phi = io::signal_from_json(io::read_json_file(cfg.first));
  const GridSignal psi = io::signal_from_json(io::read_json_file(cfg.second));
  emit(out, io::to_json(classify_pair(phi, psi, cfg.tol)), cfg.out);
}

void cmd_bargmann(const BargmannConfig& cfg, std::ostream& out) {
  const Grid grid(cfg.n, cfg.extent);
  const auto [plus, minus] = bargmann_pair(grid);
  Json report{{"n", grid.size()},
              {"extent", grid.extent()},
              {"max_time_gap", max_modulus_gap(plus, minus)},
              {"max_frequency_gap", max_modulus_gap(fourier(plus), fourier(minus))},
              {"verdict", io::to_json(classify_pair(plus, minus, cfg.tol))}};
  emit(out, report, cfg.out);
}

void cmd_sufficiency(const DiscreteConfig& cfg, std::ostream& out) {
  require_discrete_N(cfg.N);
  if (cfg.trials < 1) throw InvalidArgument("trials must be positive");
  const int M = cfg.M > 0 ? cfg.M : 2 * cfg.N - 1;
  const auto kinds = parse_kinds(cfg.kind.empty() ? "both" : cfg.kind, true);
  std::mt19937_64 rng(cfg.seed);
  std::size_t candidates = 0;
  std::size_t survivors = 0;
  Json failures = Json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    const TrigPoly p = random_trigpoly(static_cast<std::size_t>(cfg.N), rng);
    const auto family = enumerate_ambiguities(p);
    candidates += family.size();
    for (DerivKind kind : kinds) {
      const auto kept = filter_by_measurements(family, M, kind, sample_measurements(p, M, kind), cfg.tol);
      survivors += kept.size();
      for (const TrigPoly& q : kept) {
        if (classify_poly_pair(p, q).kind != EquivalenceKind::kGlobalPhase) {
          failures.push_back(Json{{"trial", t}, {"kind", kind_name(kind)}, {"candidate", io::to_json(q)}});
        }
      }
    }
  }
  Json kind_names = Json::array();
  for (DerivKind k : kinds) kind_names.push_back(kind_name(k));
  emit(out,
       Json{{"N", cfg.N}, {"M", M}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"tol", cfg.tol},
            {"kinds", kind_names}, {"candidates", candidates}, {"survivors", survivors},
            {"all_global_phase", failures.empty()}, {"failures", failures}},
       cfg.out);
}

void cmd_counterexample(const DiscreteConfig& cfg, std::ostream& out) {
  require_discrete_N(cfg.N);
  const std::string kind_text = cfg.kind.empty() ? "continuous" : cfg.kind;
  const DerivKind kind = parse_kinds(kind_text, false).front();
  const int M = cfg.M > 0 ? cfg.M : 2 * cfg.N - 2;
  const auto [p, q] = kind == DerivKind::kContinuous ? counterexample_continuous(cfg.N)
                                                     : counterexample_discrete(cfg.N);
  const SampleArrays sp = sample_measurements(p, M, kind);
  const SampleArrays sq = sample_measurements(q, M, kind);
  emit(out,
       Json{{"N", cfg.N}, {"M", M}, {"kind", kind_text}, {"p", io::to_json(p)}, {"q", io::to_json(q)},
            {"p_samples", samples_json(sp)}, {"q_samples", samples_json(sq)},
            {"max_sample_gap", max_sample_gap(sp, sq)}, {"verdict", io::to_json(classify_poly_pair(p, q))}},
       cfg.out);
}

void cmd_oracle(const DiscreteConfig& cfg, std::ostream& out) {
  TrigPoly p = [&] {
    if (!cfg.input.empty()) return io::trigpoly_from_json(io::read_json_file(cfg.input));
    require_discrete_N(cfg.N);
    std::mt19937_64 rng(cfg.seed);
    return random_trigpoly(static_cast<std::size_t>(cfg.N), rng);
  }();
  const int N = static_cast<int>(p.N());
  const int M = cfg.M > 0 ? cfg.M : 2 * N - 1;
  const DerivKind kind = parse_kinds(cfg.kind.empty() ? "continuous" : cfg.kind, false).front();
  const auto family = enumerate_ambiguities(p);
  const auto kept = filter_by_measurements(family, M, kind, sample_measurements(p, M, kind), cfg.tol);
  Json verdicts = Json::array();
  for (const TrigPoly& q : kept) verdicts.push_back(io::to_json(classify_poly_pair(p, q)));
  Json report{{"N", N},
              {"M", M},
              {"kind", kind_name(kind)},
              {"tol", cfg.tol},
              {"polynomial", io::to_json(p)},
              {"flip_sets", enumerate_flip_sets(p).size()},
              {"candidates", io::to_json(family)},
              {"survivors", io::to_json(kept)},
              {"survivor_verdicts", verdicts}};
  emit(out, report, cfg.out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase retrieval from masked Fourier magnitudes"};
  app.require_subcommand(1);

  SignalConfig sig;
  auto* signal_cmd = app.add_subcommand("signal", "Write a test signal as JSON");
  signal_cmd->add_option("--kind", sig.kind, "gauss, hermite, poly, bump, bargmann_plus, bargmann_minus")
      ->capture_default_str();
  signal_cmd->add_option("--n", sig.n, "Number of grid points")->capture_default_str();
  signal_cmd->add_option("--extent", sig.extent, "Length of the time window")->capture_default_str();
  signal_cmd->add_option("--seed", sig.seed, "Seed for random signals")->capture_default_str();
  signal_cmd->add_option("--terms", sig.terms, "Hermite terms")->capture_default_str();
  signal_cmd->add_option("--degree", sig.degree, "Polynomial degree")->capture_default_str();
  signal_cmd->add_option("--center", sig.center, "Bump center")->capture_default_str();
  signal_cmd->add_option("--radius", sig.radius, "Bump radius")->capture_default_str();
  signal_cmd->add_option("--out", sig.out, "Output file")->required();

  MeasureConfig meas;
  auto* measure_cmd = app.add_subcommand("measure", "Simulate three coded diffraction patterns");
  measure_cmd->add_option("--input", meas.input, "Signal file")->required();
  measure_cmd->add_option("--family", meas.family, "gauss or sine")->capture_default_str();
  measure_cmd->add_option("--a", meas.a, "Sine frequency a as p/q")->capture_default_str();
  measure_cmd->add_option("--b", meas.b, "Sine frequency b as p/q")->capture_default_str();
  measure_cmd->add_option("--out", meas.out, "Output prefix; writes PREFIX.{1,2,3}.json")->required();
  measure_cmd->add_flag("--csv", meas.csv, "Also write PREFIX.{1,2,3}.csv");

  ReconstructConfig rec;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover a signal from three Gaussian records");
  reconstruct_cmd->add_option("records", rec.records, "Record files for gauss, gauss_deriv, gauss_affine")
      ->expected(3)
      ->required();
  reconstruct_cmd->add_option("--truth", rec.truth, "Ground-truth signal for the residual");
  reconstruct_cmd->add_option("--out", rec.out, "Output signal file");
  reconstruct_cmd->add_option("--tol", rec.zero_tol, "Relative zero threshold on record 1")
      ->capture_default_str();

  ClassifyConfig cls;
  auto* classify_cmd = app.add_subcommand("classify", "Compare two signals up to phase and reflection");
  classify_cmd->add_option("first", cls.first, "Signal file")->required();
  classify_cmd->add_option("second", cls.second, "Signal file")->required();
  classify_cmd->add_option("--tol", cls.tol, "Relative decision threshold")->capture_default_str();
  classify_cmd->add_option("--out", cls.out, "Also write the verdict here");

  BargmannConfig bar;
  auto* bargmann_cmd = app.add_subcommand("bargmann", "Check the chirped Gaussian pair");
  bargmann_cmd->add_option("--n", bar.n, "Number of grid points")->capture_default_str();
  bargmann_cmd->add_option("--extent", bar.extent, "Length of the time window")->capture_default_str();
  bargmann_cmd->add_option("--tol", bar.tol, "Classification threshold")->capture_default_str();
  bargmann_cmd->add_option("--out", bar.out, "Also write the report here");

  DiscreteConfig dis;
  auto* discrete_cmd = app.add_subcommand("discrete", "Trigonometric polynomial experiments");
  discrete_cmd->require_subcommand(1);
  auto add_common = [&dis](CLI::App* cmd) {
    cmd->add_option("--N", dis.N, "Number of coefficients")->capture_default_str();
    cmd->add_option("--M", dis.M, "Number of sample points (default depends on mode)");
    cmd->add_option("--kind", dis.kind, "continuous, discrete (or both for sufficiency)");
    cmd->add_option("--tol", dis.tol, "Sample matching tolerance")->capture_default_str();
    cmd->add_option("--seed", dis.seed, "Seed for random polynomials")->capture_default_str();
    cmd->add_option("--out", dis.out, "Also write the report here");
  };
  auto* suff_cmd = discrete_cmd->add_subcommand("sufficiency", "2N-1 samples leave only phase ambiguity");
  add_common(suff_cmd);
  suff_cmd->add_option("--trials", dis.trials, "Random polynomials to test")->capture_default_str();
  auto* counter_cmd = discrete_cmd->add_subcommand("counterexample", "Explicit pairs at 2N-2 samples");
  add_common(counter_cmd);
  auto* oracle_cmd = discrete_cmd->add_subcommand("oracle", "Enumerate zero-flip ambiguities");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--input", dis.input, "Polynomial file (default: random with --N, --seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (signal_cmd->parsed()) cmd_signal(sig, out);
    else if (measure_cmd->parsed()) cmd_measure(meas, out);
    else if (reconstruct_cmd->parsed()) cmd_reconstruct(rec, out);
    else if (classify_cmd->parsed()) cmd_classify(cls, out);
    else if (bargmann_cmd->parsed()) cmd_bargmann(bar, out);
    else if (suff_cmd->parsed()) cmd_sufficiency(dis, out);
    else if (counter_cmd->parsed()) cmd_counterexample(dis, out);
    else if (oracle_cmd->parsed()) cmd_oracle(dis, out);
  } catch (const DegenerateSignal& e) {
    err << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace phaseret
