// SPDX-License-Identifier: Apache-2.0
#include "daqc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "daqc/errors.hpp"

namespace daqc {

namespace {

void check_site(std::size_t site, std::size_t n_sites) {
  if (site < 1 || site > n_sites) {
    throw IndexError("site " + std::to_string(site) + " outside 1.." +
                     std::to_string(n_sites));
  }
}

}  // namespace

PauliSum density_operator(std::size_t site, std::size_t n_sites) {
  check_site(site, n_sites);
  const std::size_t n_q = 2 * n_sites;
  PauliSum op = PauliSum::identity(n_q);
  op.add(0.5, PauliString::single(n_q, site, Pauli::Z));
  op.add(0.5, PauliString::single(n_q, site + n_sites, Pauli::Z));
  return op;
}

PauliSum double_occupancy_operator(std::size_t site, std::size_t n_sites) {
  check_site(site, n_sites);
  const std::size_t n_q = 2 * n_sites;
  PauliSum op = PauliSum::identity(n_q, 0.25);
  op.add(0.25, PauliString::single(n_q, site, Pauli::Z));
  op.add(0.25, PauliString::single(n_q, site + n_sites, Pauli::Z));
  op.add(0.25, PauliString::pair(n_q, site, Pauli::Z, site + n_sites, Pauli::Z));
  return op;
}

double density(const StateVector& psi, std::size_t site, std::size_t n_sites) {
  if (psi.n_qubits() != 2 * n_sites) {
    throw DimensionError("state does not hold 2n qubits");
  }
  return expectation(psi, density_operator(site, n_sites));
}

double double_occupancy(const StateVector& psi, std::size_t site,
                        std::size_t n_sites) {
  if (psi.n_qubits() != 2 * n_sites) {
    throw DimensionError("state does not hold 2n qubits");
  }
  return expectation(psi, double_occupancy_operator(site, n_sites));
}

double fidelity(const StateVector& exact, const StateVector& da) {
  return std::norm(inner_product(exact, da));
}

std::vector<double> TimeGrid::values() const {
  if (points == 0) return {};
  if (points == 1) return {stop};
  std::vector<double> out(points);
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    out[k] = start + step * static_cast<double>(k);
  }
  out.back() = stop;
  return out;
}

Architecture ExperimentConfig::architecture() const {
  const std::size_t n = model.n_sites();
  return arch_kind == Architecture::Kind::Linear
             ? Architecture::linear(2 * n, coupling)
             : Architecture::ladder(n, coupling, coupling);
}

void ExperimentConfig::validate() const {
  if (times.points == 0) throw ValidationError("time grid has no points");
  if (times.points > 1 && !(times.stop > times.start)) {
    throw ValidationError("time grid must be strictly increasing");
  }
  if (trotter_steps.empty()) throw ValidationError("no Trotter steps given");
  for (std::size_t l : trotter_steps) {
    if (l == 0) throw ValidationError("Trotter steps must be positive");
  }
  if (seeds == 0) throw ValidationError("need at least one random state");
  check_site(site, model.n_sites());
}

std::vector<ResultRecord> sweep_trotter(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.model.n_sites();
  const std::size_t n_q = 2 * n;
  const Architecture arch = cfg.architecture();
  const PauliSum h = cfg.model.hamiltonian();
  const ExactEvolution exact(h);
  const std::vector<double> times = cfg.times.values();

  std::vector<StateVector> initial;
  initial.reserve(cfg.seeds);
  for (std::size_t k = 0; k < cfg.seeds; ++k) {
    initial.push_back(random_product_state(cfg.first_seed + k, n_q));
  }

  struct Job {
    double t;
    std::size_t l;
  };
  std::vector<Job> jobs;
  for (double t : times) {
    for (std::size_t l : cfg.trotter_steps) jobs.push_back({t, l});
  }
  std::vector<std::vector<ResultRecord>> results(jobs.size());

  auto run_job = [&](std::size_t index) {
    const Job& job = jobs[index];
    const Schedule schedule =
        cfg.model.kind == ModelSpec::Kind::FermiHubbard
            ? trotterize(cfg.model.fh, job.t, job.l, arch, cfg.compile)
            : trotterize(cfg.model.ladder, job.t, job.l, arch, cfg.compile);
    const ScheduleStats stats = schedule_stats(schedule);
    auto& out = results[index];
    out.reserve(cfg.seeds);
    for (std::size_t k = 0; k < cfg.seeds; ++k) {
      const StateVector psi_exact =
          StateVector::from_dense(exact.evolve(initial[k].to_dense(), job.t));
      StateVector psi_da = initial[k];
      run_schedule(psi_da, schedule);
      out.push_back({.t = job.t,
                     .l = job.l,
                     .seed = cfg.first_seed + k,
                     .fidelity = fidelity(psi_exact, psi_da),
                     .density_exact = density(psi_exact, cfg.site, n),
                     .density_da = density(psi_da, cfg.site, n),
                     .docc_exact = double_occupancy(psi_exact, cfg.site, n),
                     .docc_da = double_occupancy(psi_da, cfg.site, n),
                     .stats = stats});
    }
  };

  std::size_t workers = cfg.threads != 0
                            ? cfg.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
              run_job(i);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ResultRecord> records;
  records.reserve(jobs.size() * cfg.seeds);
  for (auto& batch : results) {
    records.insert(records.end(), batch.begin(), batch.end());
  }
  std::sort(records.begin(), records.end(),
            [](const ResultRecord& a, const ResultRecord& b) {
              return std::tie(a.t, a.l, a.seed) < std::tie(b.t, b.l, b.seed);
            });
  return records;
}

std::vector<FidelitySummary> summarize(
    const std::vector<ResultRecord>& records) {
  std::map<std::pair<double, std::size_t>, std::pair<double, std::size_t>> acc;
  for (const auto& r : records) {
    auto& [sum, count] = acc[{r.t, r.l}];
    sum += r.fidelity;
    ++count;
  }
  std::vector<FidelitySummary> out;
  for (const auto& [key, value] : acc) {
    out.push_back({key.first, key.second,
                   value.first / static_cast<double>(value.second)});
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
  out << "t,l,seed,fidelity,density_exact,density_da,docc_exact,docc_da,"
         "analog_blocks,rotation_layers,swaps\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : records) {
    out << r.t << ',' << r.l << ',' << r.seed << ',' << r.fidelity << ','
        << r.density_exact << ',' << r.density_da << ',' << r.docc_exact << ','
        << r.docc_da << ',' << r.stats.analog_blocks << ','
        << r.stats.rotation_layers << ',' << r.stats.swaps << '\n';
  }
}

nlohmann::json records_to_json(const std::vector<ResultRecord>& records) {
  auto out = nlohmann::json::array();
  for (const auto& r : records) {
    out.push_back({{"t", r.t},
                   {"l", r.l},
                   {"seed", r.seed},
                   {"fidelity", r.fidelity},
                   {"density_exact", r.density_exact},
                   {"density_da", r.density_da},
                   {"docc_exact", r.docc_exact},
                   {"docc_da", r.docc_da},
                   {"stats", r.stats}});
  }
  return out;
}

std::vector<ResultRecord> records_from_json(const nlohmann::json& j) {
  std::vector<ResultRecord> out;
  for (const auto& e : j) {
    ResultRecord r;
    r.t = e.at("t").get<double>();
    r.l = e.at("l").get<std::size_t>();
    r.seed = e.at("seed").get<std::uint64_t>();
    r.fidelity = e.at("fidelity").get<double>();
    r.density_exact = e.at("density_exact").get<double>();
    r.density_da = e.at("density_da").get<double>();
    r.docc_exact = e.at("docc_exact").get<double>();
    r.docc_da = e.at("docc_da").get<double>();
    const auto& s = e.at("stats");
    r.stats.analog_blocks = s.at("analog_blocks").get<std::size_t>();
    r.stats.rotation_layers = s.at("rotation_layers").get<std::size_t>();
    r.stats.swaps = s.at("swaps").get<std::size_t>();
    r.stats.total_analog_time = s.at("total_analog_time").get<double>();
    out.push_back(r);
  }
  return out;
}

void emit(const std::vector<ResultRecord>& records, OutputFormat format,
          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (format == OutputFormat::Csv) {
    write_csv(out, records);
  } else {
    out << records_to_json(records).dump(2) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace daqc
