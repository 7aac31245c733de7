// SPDX-License-Identifier: Apache-2.0
//
// Digital-analog compilation of Trotter factors onto Ising hardware.
//
// Every two-body factor is built from the same primitive: a plain analog
// block plus an analog block conjugated by pi/2 x-rotations on a pattern of
// qubits. Conjugation flips the sign of each edge with exactly one rotated
// endpoint, so summing the two blocks cancels those edges and doubles the
// rest. Long-range ZZ pairs on a linear chain are brought together with a
// SWAP network; XX and YY factors add a global basis change.
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "daqc/fermion.hpp"
#include "daqc/schedule.hpp"

namespace daqc {

/// Physical qubits rotated by pi/2 about x inside a conjugated analog block.
using Pattern = std::set<std::size_t>;

struct CompileOptions {
  /// Permit negative analog durations (unphysical, harmless in simulation).
  bool allow_signed_times = false;
  /// Largest acceptable coupling residual, relative to max(1, |g|_2).
  double solver_tolerance = 1e-12;
};

/// (-1)^{|{u, v} & pattern|}.
int edge_sign(const Edge& edge, const Pattern& pattern);

struct BlockTimes {
  std::vector<double> durations;
  double residual = 0.0;  // |T t - g|_2
};

/// Minimum-norm least-squares durations t_k with
///   g_e = sum_k (s_e / t_f) * edge_sign(e, pattern_k) * t_k,
/// s_e being the hardware strength of edge e. Edges absent from `target`
/// are driven to zero. Throws InfeasibleTargetError when `tolerance` is
/// given and the residual exceeds it.
BlockTimes solve_block_times(const std::vector<Pattern>& patterns,
                             const CouplingProfile& target,
                             const Architecture& arch,
                             std::optional<double> tolerance = std::nullopt);

/// Effective coupling produced by running one analog block per pattern.
CouplingProfile effective_profile(const std::vector<Pattern>& patterns,
                                  const std::vector<double>& durations,
                                  const Architecture& arch, double total_time);

/// Adjacent transpositions (i, i+1), applied first to last, that carry the
/// positions of (1, ..., n_q) to (1, 1+n, 2, 2+n, ..., n, 2n), n = n_q / 2.
/// The sequence is minimal: its length is the inversion count.
std::vector<SwapBlock> swap_network(std::size_t n_qubits);

/// Occupants of each position after applying `swaps` to (1, ..., n_q).
std::vector<std::size_t> apply_transpositions(
    std::size_t n_qubits, const std::vector<SwapBlock>& swaps);

/// Pattern that keeps the odd chain links (1,2), (3,4), ... of a linear chain
/// and cancels the even ones: both qubits of every second pair.
Pattern odd_link_pattern(std::size_t n_qubits);

/// exp(-i t coeff sum_j Z_j Z_{j+n}).
Schedule compile_zz(const Architecture& arch, double coeff, double t,
                    const CompileOptions& opts = {});

/// exp(-i t [leg_coeff sum_legs P_u P_v + rung_coeff sum_rungs P_u P_v]) for
/// P = X or Y. Legs are (j, j+1) and (j+n, j+n+1). Rung couplings need
/// ladder hardware.
Schedule compile_xy(const Architecture& arch, Axis axis, double leg_coeff,
                    double t, const CompileOptions& opts = {},
                    double rung_coeff = 0.0);

/// exp(-i t coeff sum_j Z_j) as a single layer of z-rotations.
Schedule compile_z_layer(const Architecture& arch, double coeff, double t);

/// Coefficients of one Trotter step: coeff * (Pauli term) for each class.
struct StepCoefficients {
  double z = 0.0;
  double zz = 0.0;
  double xy_leg = 0.0;
  double xy_rung = 0.0;

  static StepCoefficients from(const FermiHubbardParams& p);
  static StepCoefficients from(const LadderParams& p);
};

/// l first-order steps of [Z, ZZ, XX, YY], each for t / l.
Schedule trotterize(const StepCoefficients& c, double t, std::size_t l,
                    const Architecture& arch, const CompileOptions& opts = {});
Schedule trotterize(const FermiHubbardParams& p, double t, std::size_t l,
                    const Architecture& arch, const CompileOptions& opts = {});
Schedule trotterize(const LadderParams& p, double t, std::size_t l,
                    const Architecture& arch, const CompileOptions& opts = {});

struct ScheduleStats {
  std::size_t analog_blocks = 0;
  /// Explicit rotation blocks plus the two layers around each conjugation.
  std::size_t rotation_layers = 0;
  std::size_t swaps = 0;
  /// Sum of |duration| over analog blocks.
  double total_analog_time = 0.0;

  bool operator==(const ScheduleStats&) const = default;
};

ScheduleStats schedule_stats(const Schedule& s);

void to_json(nlohmann::json& j, const ScheduleStats& s);

}  // namespace daqc
