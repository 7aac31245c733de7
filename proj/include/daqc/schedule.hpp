// SPDX-License-Identifier: Apache-2.0
//
// Hardware description and the digital-analog block stream the compiler emits.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace daqc {

/// Undirected coupling (u < v), 1-based physical positions.
using Edge = std::pair<std::size_t, std::size_t>;

Edge make_edge(std::size_t a, std::size_t b);

enum class EdgeClass { Chain, Leg, Rung };

struct Coupling {
  Edge edge;
  double strength;
  EdgeClass cls;

  bool operator==(const Coupling&) const = default;
};

/// Native always-on Ising resource: H = sum_edges g_e Z_u Z_v.
class Architecture {
 public:
  enum class Kind { Linear, Ladder };

  /// Open chain 1 - 2 - ... - n_q with uniform coupling beta.
  static Architecture linear(std::size_t n_qubits, double beta = 1.0);
  /// Two legs (1..n) and (n+1..2n) with leg coupling alpha, rungs (j, j+n)
  /// with coupling gamma.
  static Architecture ladder(std::size_t n_rungs, double alpha = 1.0,
                             double gamma = 1.0);

  Kind kind() const noexcept { return kind_; }
  std::size_t n_qubits() const noexcept { return n_qubits_; }
  /// Half the qubit count; the rung count for a ladder.
  std::size_t n_sites() const noexcept { return n_qubits_ / 2; }
  double beta() const noexcept { return beta_; }
  double alpha() const noexcept { return alpha_; }
  double gamma() const noexcept { return gamma_; }

  const std::vector<Coupling>& couplings() const noexcept { return couplings_; }
  std::vector<Edge> edges() const;
  bool has_edge(const Edge& e) const;
  double strength(const Edge& e) const;

  bool operator==(const Architecture&) const = default;

 private:
  Kind kind_ = Kind::Linear;
  std::size_t n_qubits_ = 0;
  double beta_ = 0.0;
  double alpha_ = 0.0;
  double gamma_ = 0.0;
  std::vector<Coupling> couplings_;
};

enum class Axis { X, Y, Z };

char axis_char(Axis a);
Axis axis_from_char(char c);

/// exp(-i angle sigma^axis) on one qubit (full-angle convention).
struct Rotation {
  std::size_t qubit;
  Axis axis;
  double angle;

  bool operator==(const Rotation&) const = default;
};

/// Simultaneous single-qubit rotations, at most one per qubit.
class RotationLayer {
 public:
  RotationLayer() = default;
  explicit RotationLayer(std::vector<Rotation> rotations);

  const std::vector<Rotation>& rotations() const noexcept { return rotations_; }
  bool empty() const noexcept { return rotations_.empty(); }
  std::size_t size() const noexcept { return rotations_.size(); }
  /// Same rotations with negated angles.
  RotationLayer inverse() const;

  bool operator==(const RotationLayer&) const = default;

 private:
  std::vector<Rotation> rotations_;
};

/// Free evolution under the architecture's Ising Hamiltonian. With a
/// conjugation layer R the block implements R exp(-i d H) R^dagger, i.e.
/// R^dagger is applied first in time and R last.
struct AnalogBlock {
  double duration = 0.0;
  std::optional<RotationLayer> conjugation;

  bool operator==(const AnalogBlock&) const = default;
};

struct RotationBlock {
  RotationLayer layer;

  bool operator==(const RotationBlock&) const = default;
};

/// Ideal SWAP between adjacent physical positions.
struct SwapBlock {
  std::size_t i;
  std::size_t j;

  bool operator==(const SwapBlock&) const = default;
};

using ScheduleBlock = std::variant<AnalogBlock, RotationBlock, SwapBlock>;

struct ScheduleMeta {
  std::string target;
  double t = 0.0;
  std::size_t l = 1;

  bool operator==(const ScheduleMeta&) const = default;
};

/// Ordered digital-analog block stream over one architecture.
///
/// Blocks address physical positions. SWAP blocks move logical qubits
/// between positions; the schedule's unitary is read in logical qubit order,
/// i.e. after undoing the final layout (a free relabeling).
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(Architecture arch, bool allow_signed_times = false);

  const Architecture& architecture() const noexcept { return arch_; }
  std::size_t n_qubits() const noexcept { return arch_.n_qubits(); }
  bool allow_signed_times() const noexcept { return allow_signed_times_; }
  const std::vector<ScheduleBlock>& blocks() const noexcept { return blocks_; }
  const ScheduleMeta& meta() const noexcept { return meta_; }
  ScheduleMeta& meta() noexcept { return meta_; }

  void add_analog(double duration,
                  std::optional<RotationLayer> conjugation = std::nullopt);
  void add_rotations(RotationLayer layer);
  void add_swap(std::size_t i, std::size_t j);
  /// Appends the other schedule's blocks; architectures must match.
  void append(const Schedule& other);

  /// layout[p-1] is the logical qubit sitting at physical position p after
  /// every block has run.
  std::vector<std::size_t> final_layout() const;

  /// Checks block invariants against the architecture.
  void validate() const;

  bool operator==(const Schedule&) const = default;

 private:
  Architecture arch_;
  bool allow_signed_times_ = false;
  std::vector<ScheduleBlock> blocks_;
  ScheduleMeta meta_;
};

/// Target effective couplings g_e over a total time t_f.
struct CouplingProfile {
  std::map<Edge, double> strengths;
  double total_time = 1.0;

  double at(const Edge& e) const;
};

void to_json(nlohmann::json& j, const Architecture& a);
void from_json(const nlohmann::json& j, Architecture& a);
void to_json(nlohmann::json& j, const RotationLayer& layer);
void from_json(const nlohmann::json& j, RotationLayer& layer);
void to_json(nlohmann::json& j, const Schedule& s);
void from_json(const nlohmann::json& j, Schedule& s);

}  // namespace daqc
