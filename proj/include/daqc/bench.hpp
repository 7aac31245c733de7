// SPDX-License-Identifier: Apache-2.0
//
// Observables and the exact-vs-digital-analog comparison harness.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "daqc/compile.hpp"
#include "daqc/fermion.hpp"
#include "daqc/statevector.hpp"

namespace daqc {

/// <n_{i,up} + n_{i,down}> = <1 + (Z_i + Z_{i+n}) / 2>.
double density(const StateVector& psi, std::size_t site, std::size_t n_sites);

/// <n_{i,up} n_{i,down}> = <(Z_i Z_{i+n} + Z_i + Z_{i+n} + 1) / 4>.
double double_occupancy(const StateVector& psi, std::size_t site,
                        std::size_t n_sites);

PauliSum density_operator(std::size_t site, std::size_t n_sites);
PauliSum double_occupancy_operator(std::size_t site, std::size_t n_sites);

/// |<exact|da>|^2.
double fidelity(const StateVector& exact, const StateVector& da);

struct TimeGrid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t points = 1;

  /// Evenly spaced, both ends included; a single point is `stop`.
  std::vector<double> values() const;
};

enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
  ModelSpec model;
  Architecture::Kind arch_kind = Architecture::Kind::Linear;
  double coupling = 1.0;  // beta (linear) or alpha = gamma (ladder)
  TimeGrid times;
  std::vector<std::size_t> trotter_steps{8, 16, 32, 64};
  std::size_t seeds = 20;
  std::uint64_t first_seed = 0;
  std::size_t site = 1;
  CompileOptions compile;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;

  Architecture architecture() const;
  void validate() const;
};

struct ResultRecord {
  double t = 0.0;
  std::size_t l = 0;
  std::uint64_t seed = 0;
  double fidelity = 0.0;
  double density_exact = 0.0;
  double density_da = 0.0;
  double docc_exact = 0.0;
  double docc_da = 0.0;
  ScheduleStats stats;

  bool operator==(const ResultRecord&) const = default;
};

/// One record per (t, l, seed), sorted by that key. Each seed's initial state
/// is random_product_state(seed, n_q); the exact path uses the dense
/// propagator of the model Hamiltonian, the DA path the Trotter schedule.
std::vector<ResultRecord> sweep_trotter(const ExperimentConfig& cfg);

/// Mean fidelity over records sharing (t, l).
struct FidelitySummary {
  double t;
  std::size_t l;
  double mean_fidelity;
};
std::vector<FidelitySummary> summarize(const std::vector<ResultRecord>& records);

void write_csv(std::ostream& out, const std::vector<ResultRecord>& records);
nlohmann::json records_to_json(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> records_from_json(const nlohmann::json& j);

/// Writes records to `path`; I/O failures carry the path.
void emit(const std::vector<ResultRecord>& records, OutputFormat format,
          const std::string& path);

}  // namespace daqc
