// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "daqc/bench.hpp"
#include "daqc/compile.hpp"
#include "daqc/errors.hpp"
#include "daqc/fermion.hpp"
#include "daqc/statevector.hpp"

namespace {

using namespace daqc;

struct ModelFlags {
  std::string model = "fh";
  std::size_t n = 3;
  std::optional<double> lambda, epsilon, mu, J, delta;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--model", model, "fh or ladder")
        ->check(CLI::IsMember({"fh", "ladder"}))
        ->capture_default_str();
    cmd.add_option("--n", n, "sites (fh) or rungs (ladder)")->capture_default_str();
    cmd.add_option("--lambda", lambda, "hopping amplitude");
    cmd.add_option("--epsilon", epsilon, "on-site interaction (ladder: rung ZZ)");
    cmd.add_option("--mu", mu, "chemical potential (fh only)");
    cmd.add_option("--J", J, "rung XY coupling (ladder only)");
    cmd.add_option("--delta", delta, "Z field (ladder only)");
  }

  ModelSpec spec() const {
    ModelSpec m;
    if (model == "fh") {
      if (J || delta) throw ValidationError("--J and --delta need --model ladder");
      m.kind = ModelSpec::Kind::FermiHubbard;
      m.fh.n = n;
      if (lambda) m.fh.lambda = *lambda;
      if (epsilon) m.fh.epsilon = *epsilon;
      if (mu) m.fh.mu = *mu;
      m.fh.validate();
    } else {
      if (mu) throw ValidationError("--mu needs --model fh");
      m.kind = ModelSpec::Kind::Ladder;
      // Unset coefficients default to the ladder form of the default fh model.
      m.ladder = LadderParams::from_fermi_hubbard(FermiHubbardParams{n});
      if (lambda) m.ladder.lambda = *lambda;
      if (epsilon) m.ladder.epsilon = *epsilon;
      if (J) m.ladder.J = *J;
      if (delta) m.ladder.delta = *delta;
      m.ladder.validate();
    }
    return m;
  }
};

struct ArchFlags {
  std::string kind = "linear";
  double beta = 1.0;
  double alpha = 1.0;
  double gamma = 1.0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--arch", kind, "linear or ladder")
        ->check(CLI::IsMember({"linear", "ladder"}))
        ->capture_default_str();
    cmd.add_option("--beta", beta, "chain coupling (linear)")->capture_default_str();
    cmd.add_option("--alpha", alpha, "leg coupling (ladder)")->capture_default_str();
    cmd.add_option("--gamma", gamma, "rung coupling (ladder)")->capture_default_str();
  }

  Architecture build(std::size_t n_sites) const {
    return kind == "linear" ? Architecture::linear(2 * n_sites, beta)
                            : Architecture::ladder(n_sites, alpha, gamma);
  }
};

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
}

Schedule read_schedule(const std::string& path) {
  const auto j = read_json(path);
  try {
    return j.get<Schedule>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
}

Schedule compile_factor(const std::string& factor, const ModelSpec& m,
                        const Architecture& arch, double t, std::size_t l,
                        const CompileOptions& opts) {
  if (factor == "full") {
    return m.kind == ModelSpec::Kind::FermiHubbard
               ? trotterize(m.fh, t, l, arch, opts)
               : trotterize(m.ladder, t, l, arch, opts);
  }
  if (arch.n_qubits() != 2 * m.n_sites()) {
    throw DimensionError("architecture and model sizes differ");
  }
  const StepCoefficients c = m.kind == ModelSpec::Kind::FermiHubbard
                                 ? StepCoefficients::from(m.fh)
                                 : StepCoefficients::from(m.ladder);
  if (factor == "z") return compile_z_layer(arch, c.z, t);
  if (factor == "zz") return compile_zz(arch, c.zz, t, opts);
  const Axis axis = factor == "xx" ? Axis::X : Axis::Y;
  return compile_xy(arch, axis, c.xy_leg, t, opts, c.xy_rung);
}

int run(int argc, char** argv) {
  CLI::App app{"Digital-analog compiler and simulator for Fermi-Hubbard chains"};
  app.require_subcommand(1);

  // compile
  auto* compile = app.add_subcommand("compile", "compile a Trotter factor or full evolution");
  ModelFlags compile_model;
  ArchFlags compile_arch;
  std::string factor = "full";
  double compile_t = 1.0;
  std::size_t compile_l = 1;
  std::string schedule_out = "-";
  std::string hamiltonian_out;
  bool allow_signed = false;
  compile_model.add_to(*compile);
  compile_arch.add_to(*compile);
  compile->add_option("--factor", factor, "z, zz, xx, yy or full")
      ->check(CLI::IsMember({"z", "zz", "xx", "yy", "full"}))
      ->capture_default_str();
  compile->add_option("--t", compile_t, "evolution time")->capture_default_str();
  compile->add_option("--l", compile_l, "Trotter steps (full only)")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  compile->add_option("--out", schedule_out, "schedule JSON path, - for stdout")
      ->capture_default_str();
  compile->add_option("--hamiltonian-out", hamiltonian_out,
                      "also write the qubit Hamiltonian as JSON");
  compile->add_flag("--allow-signed-times", allow_signed,
                    "permit negative analog durations");

  // run
  auto* run_cmd = app.add_subcommand("run", "simulate a schedule on a random product state");
  std::string run_schedule_path;
  std::uint64_t state_seed = 0;
  std::string dump_state;
  run_cmd->add_option("--schedule", run_schedule_path, "schedule JSON")->required();
  run_cmd->add_option("--state-seed", state_seed, "random product state seed")
      ->capture_default_str();
  run_cmd->add_option("--dump-state", dump_state,
                      "write final amplitudes (.json: [re, im] pairs, else raw binary)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "fidelity and observable sweep over t and l");
  ModelFlags sweep_model;
  ArchFlags sweep_arch;
  double t_min = 0.0;
  double t_max = 1.0;
  std::size_t t_points = 11;
  std::vector<std::size_t> steps{8, 16, 32, 64};
  std::size_t seeds = 20;
  std::uint64_t first_seed = 0;
  std::size_t site = 1;
  std::size_t threads = 0;
  std::string sweep_out = "-";
  std::string format = "csv";
  sweep_model.add_to(*sweep);
  sweep_arch.add_to(*sweep);
  sweep->add_option("--t-min", t_min, "first time point")->capture_default_str();
  sweep->add_option("--t-max", t_max, "last time point")->capture_default_str();
  sweep->add_option("--t-points", t_points, "number of time points")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  sweep->add_option("--l", steps, "Trotter steps, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--seeds", seeds, "random initial states")->capture_default_str();
  sweep->add_option("--first-seed", first_seed, "seed of the first state")
      ->capture_default_str();
  sweep->add_option("--site", site, "observable site index")->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads, 0 for all cores")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "output path, - for stdout")->capture_default_str();
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bool sweep_signed = false;
  sweep->add_flag("--allow-signed-times", sweep_signed, "permit negative analog durations");

  // stats
  auto* stats = app.add_subcommand("stats", "resource counts of a schedule");
  std::string stats_schedule;
  stats->add_option("--schedule", stats_schedule, "schedule JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "daqc: error: %s\n", e.what());
    return 2;
  }

  if (compile->parsed()) {
    const ModelSpec m = compile_model.spec();
    const Architecture arch = compile_arch.build(m.n_sites());
    CompileOptions opts;
    opts.allow_signed_times = allow_signed;
    const Schedule s = compile_factor(factor, m, arch, compile_t, compile_l, opts);
    if (!hamiltonian_out.empty()) write_json(m.hamiltonian(), hamiltonian_out);
    write_json(s, schedule_out);
  } else if (run_cmd->parsed()) {
    const Schedule s = read_schedule(run_schedule_path);
    StateVector psi = random_product_state(state_seed, s.n_qubits());
    run_schedule(psi, s);
    if (!dump_state.empty()) {
      if (dump_state.ends_with(".json")) {
        write_json(state_to_json(psi), dump_state);
      } else {
        write_state_binary(psi, dump_state);
      }
    }
    const std::size_t n = s.n_qubits() / 2;
    nlohmann::json out = {{"n_q", s.n_qubits()}, {"state_seed", state_seed},
                          {"norm", psi.norm()}};
    if (n >= 1) {
      std::vector<double> dens, docc;
      for (std::size_t i = 1; i <= n; ++i) {
        dens.push_back(density(psi, i, n));
        docc.push_back(double_occupancy(psi, i, n));
      }
      out["density"] = dens;
      out["double_occupancy"] = docc;
    }
    std::cout << out.dump() << '\n';
  } else if (sweep->parsed()) {
    ExperimentConfig cfg;
    cfg.model = sweep_model.spec();
    cfg.arch_kind = sweep_arch.kind == "linear" ? Architecture::Kind::Linear
                                                : Architecture::Kind::Ladder;
    if (cfg.arch_kind == Architecture::Kind::Ladder &&
        sweep_arch.alpha != sweep_arch.gamma) {
      throw ValidationError("sweep uses one ladder coupling; set --alpha equal to --gamma");
    }
    cfg.coupling = cfg.arch_kind == Architecture::Kind::Linear ? sweep_arch.beta
                                                               : sweep_arch.alpha;
    cfg.times = {t_min, t_max, t_points};
    cfg.trotter_steps = steps;
    cfg.seeds = seeds;
    cfg.first_seed = first_seed;
    cfg.site = site;
    cfg.threads = threads;
    cfg.compile.allow_signed_times = sweep_signed;
    const auto records = sweep_trotter(cfg);
    const OutputFormat fmt = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (sweep_out == "-") {
      if (fmt == OutputFormat::Csv) {
        write_csv(std::cout, records);
      } else {
        std::cout << records_to_json(records).dump(2) << '\n';
      }
    } else {
      emit(records, fmt, sweep_out);
    }
  } else if (stats->parsed()) {
    const nlohmann::json j = schedule_stats(read_schedule(stats_schedule));
    std::cout << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "daqc: error: %s\n", e.what());
    return 1;
  }
}
