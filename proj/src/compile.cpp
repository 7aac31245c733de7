// SPDX-License-Identifier: Apache-2.0
#include "daqc/compile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "daqc/errors.hpp"

namespace daqc {

int edge_sign(const Edge& edge, const Pattern& pattern) {
  const int rotated = static_cast<int>(pattern.count(edge.first)) +
                      static_cast<int>(pattern.count(edge.second));
  return rotated % 2 == 0 ? 1 : -1;
}

namespace {

// A(e, k) = s_e * edge_sign(e, pattern_k); T = A / t_f.
Eigen::MatrixXd sign_matrix(const std::vector<Pattern>& patterns,
                            const Architecture& arch) {
  const auto& couplings = arch.couplings();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(couplings.size()),
                    static_cast<Eigen::Index>(patterns.size()));
  for (std::size_t e = 0; e < couplings.size(); ++e) {
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      a(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(k)) =
          couplings[e].strength * edge_sign(couplings[e].edge, patterns[k]);
    }
  }
  return a;
}

void check_patterns(const std::vector<Pattern>& patterns,
                    const Architecture& arch) {
  if (patterns.empty()) throw ValidationError("need at least one pattern");
  for (const auto& p : patterns) {
    for (std::size_t q : p) {
      if (q < 1 || q > arch.n_qubits()) {
        throw IndexError("pattern qubit " + std::to_string(q) +
                         " outside the architecture");
      }
    }
  }
}

}  // namespace

BlockTimes solve_block_times(const std::vector<Pattern>& patterns,
                             const CouplingProfile& target,
                             const Architecture& arch,
                             std::optional<double> tolerance) {
  check_patterns(patterns, arch);
  for (const auto& [edge, g] : target.strengths) {
    if (!arch.has_edge(edge)) {
      throw ValidationError("target edge (" + std::to_string(edge.first) +
                            ", " + std::to_string(edge.second) +
                            ") is not an architecture edge");
    }
  }
  const auto& couplings = arch.couplings();
  Eigen::VectorXd g(static_cast<Eigen::Index>(couplings.size()));
  for (std::size_t e = 0; e < couplings.size(); ++e) {
    g(static_cast<Eigen::Index>(e)) = target.at(couplings[e].edge);
  }
  const double t_f = target.total_time;
  const Eigen::MatrixXd a = sign_matrix(patterns, arch);

  // Solve A t = t_f g, which is T t = g scaled by t_f and stays defined at
  // t_f = 0.
  Eigen::VectorXd durations = Eigen::VectorXd::Zero(a.cols());
  if (t_f != 0.0 && g.size() > 0) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    durations = cod.solve(t_f * g);
  }
  const Eigen::VectorXd achieved = g.size() > 0
                                       ? Eigen::VectorXd(a * durations)
                                       : Eigen::VectorXd();
  double residual = 0.0;
  if (g.size() > 0) {
    residual = t_f != 0.0 ? (achieved / t_f - g).norm() : achieved.norm();
  }

  if (tolerance && residual > *tolerance * std::max(1.0, g.norm())) {
    std::ostringstream msg;
    msg << "coupling target not reachable with " << patterns.size()
        << " pattern(s): residual " << residual;
    throw InfeasibleTargetError(msg.str(), residual);
  }
  BlockTimes out;
  out.durations.assign(durations.data(), durations.data() + durations.size());
  out.residual = residual;
  return out;
}

CouplingProfile effective_profile(const std::vector<Pattern>& patterns,
                                  const std::vector<double>& durations,
                                  const Architecture& arch,
                                  double total_time) {
  check_patterns(patterns, arch);
  if (durations.size() != patterns.size()) {
    throw DimensionError("one duration per pattern required");
  }
  if (total_time == 0.0) throw ValidationError("total time must be nonzero");
  CouplingProfile out;
  out.total_time = total_time;
  for (const auto& c : arch.couplings()) {
    double g = 0.0;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      g += c.strength * edge_sign(c.edge, patterns[k]) * durations[k];
    }
    out.strengths[c.edge] = g / total_time;
  }
  return out;
}

std::vector<std::size_t> apply_transpositions(
    std::size_t n_qubits, const std::vector<SwapBlock>& swaps) {
  std::vector<std::size_t> layout(n_qubits);
  std::iota(layout.begin(), layout.end(), std::size_t{1});
  for (const auto& s : swaps) {
    if (s.i < 1 || s.j < 1 || s.i > n_qubits || s.j > n_qubits) {
      throw IndexError("transposition outside 1.." + std::to_string(n_qubits));
    }
    std::swap(layout[s.i - 1], layout[s.j - 1]);
  }
  return layout;
}

std::vector<SwapBlock> swap_network(std::size_t n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw ValidationError("swap network needs an even qubit count >= 2, got " +
                          std::to_string(n_qubits));
  }
  const std::size_t n = n_qubits / 2;
  // rank[p] is the slot in (1, 1+n, 2, 2+n, ...) the occupant of p must reach.
  std::vector<std::size_t> rank(n_qubits);
  for (std::size_t q = 1; q <= n_qubits; ++q) {
    rank[q - 1] = q <= n ? 2 * q - 1 : 2 * (q - n);
  }
  // Bubble sort only ever exchanges an adjacent inverted pair, so it emits
  // exactly one transposition per inversion.
  std::vector<SwapBlock> swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p + 1 < n_qubits; ++p) {
      if (rank[p] > rank[p + 1]) {
        std::swap(rank[p], rank[p + 1]);
        swaps.push_back({p + 1, p + 2});
        changed = true;
      }
    }
  }
  return swaps;
}

Pattern odd_link_pattern(std::size_t n_qubits) {
  Pattern p;
  for (std::size_t q = 1; q <= n_qubits; ++q) {
    if (((q + 1) / 2) % 2 == 0) p.insert(q);
  }
  return p;
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;

void require_two_halves(const Architecture& arch) {
  if (arch.n_qubits() < 2 || arch.n_qubits() % 2 != 0) {
    throw ValidationError("architecture must hold 2n qubits, got " +
                          std::to_string(arch.n_qubits()));
  }
}

RotationLayer x_layer(const Pattern& pattern, double angle) {
  std::vector<Rotation> rotations;
  for (std::size_t q : pattern) rotations.push_back({q, Axis::X, angle});
  return RotationLayer(std::move(rotations));
}

RotationLayer global_layer(std::size_t n_qubits, Axis axis, double angle) {
  std::vector<Rotation> rotations;
  for (std::size_t q = 1; q <= n_qubits; ++q) {
    rotations.push_back({q, axis, angle});
  }
  return RotationLayer(std::move(rotations));
}

// Plain block followed by the block conjugated with X^{pi/2} on `pattern`,
// timed so the pair realizes `target` over t.
void emit_decoupled_pair(Schedule& s, const Pattern& pattern,
                         const CouplingProfile& target,
                         const CompileOptions& opts) {
  const std::vector<Pattern> patterns = {Pattern{}, pattern};
  const BlockTimes times = solve_block_times(
      patterns, target, s.architecture(), opts.solver_tolerance);
  if (!opts.allow_signed_times) {
    for (double d : times.durations) {
      if (d < 0.0) {
        throw InfeasibleTargetError(
            "target needs a negative analog duration (" + std::to_string(d) +
                "); enable allow-signed-times",
            times.residual);
      }
    }
  }
  s.add_analog(times.durations[0]);
  std::optional<RotationLayer> conj;
  if (!pattern.empty()) conj = x_layer(pattern, kHalfPi);
  s.add_analog(times.durations[1], std::move(conj));
}

}  // namespace

Schedule compile_zz(const Architecture& arch, double coeff, double t,
                    const CompileOptions& opts) {
  require_two_halves(arch);
  const std::size_t n_q = arch.n_qubits();
  const std::size_t n = n_q / 2;
  Schedule s(arch, opts.allow_signed_times);
  s.meta() = {"zz", t, 1};

  CouplingProfile target;
  target.total_time = t;
  Pattern pattern;
  if (arch.kind() == Architecture::Kind::Linear) {
    // Route (j, j+n) onto neighbouring positions, then keep only the odd
    // links (2k-1, 2k), which now hold exactly those pairs.
    for (const auto& swap : swap_network(n_q)) s.add_swap(swap.i, swap.j);
    for (std::size_t k = 1; k <= n; ++k) {
      target.strengths[{2 * k - 1, 2 * k}] = coeff;
    }
    pattern = odd_link_pattern(n_q);
  } else {
    // Rotating both ends of every second rung flips every leg and no rung.
    for (std::size_t j = 1; j <= n; ++j) {
      target.strengths[{j, j + n}] = coeff;
      if (j % 2 == 1) {
        pattern.insert(j);
        pattern.insert(j + n);
      }
    }
  }
  emit_decoupled_pair(s, pattern, target, opts);
  return s;
}

Schedule compile_xy(const Architecture& arch, Axis axis, double leg_coeff,
                    double t, const CompileOptions& opts, double rung_coeff) {
  require_two_halves(arch);
  if (axis == Axis::Z) {
    throw ValidationError("compile_xy takes axis x or y");
  }
  const std::size_t n_q = arch.n_qubits();
  const std::size_t n = n_q / 2;
  Schedule s(arch, opts.allow_signed_times);
  s.meta() = {axis == Axis::X ? "xx" : "yy", t, 1};

  CouplingProfile target;
  target.total_time = t;
  for (std::size_t j = 1; j < n; ++j) {
    target.strengths[{j, j + 1}] = leg_coeff;
    target.strengths[{j + n, j + n + 1}] = leg_coeff;
  }
  if (rung_coeff != 0.0) {
    if (arch.kind() != Architecture::Kind::Ladder) {
      throw ValidationError(
          "rung XY couplings need ladder hardware (pairs (j, j+n) are not "
          "adjacent on a linear chain)");
    }
    for (std::size_t j = 1; j <= n; ++j) target.strengths[{j, j + n}] = rung_coeff;
  }
  // Rotating one whole half flips the couplings between the halves: the
  // single link (n, n+1) on a chain, every rung on a ladder.
  Pattern first_half;
  for (std::size_t q = 1; q <= n; ++q) first_half.insert(q);

  // The last layer R maps Z to -P on every qubit, so R (ZZ) R^dagger = PP:
  // Y^{-pi/4} Z Y^{pi/4} = -X and X^{pi/4} Z X^{-pi/4} = -Y.
  const Axis rot_axis = axis == Axis::X ? Axis::Y : Axis::X;
  const double outer = axis == Axis::X ? -kQuarterPi : kQuarterPi;
  s.add_rotations(global_layer(n_q, rot_axis, -outer));
  emit_decoupled_pair(s, first_half, target, opts);
  s.add_rotations(global_layer(n_q, rot_axis, outer));
  return s;
}

Schedule compile_z_layer(const Architecture& arch, double coeff, double t) {
  Schedule s(arch);
  s.meta() = {"z", t, 1};
  const double angle = coeff * t;
  if (angle != 0.0) s.add_rotations(global_layer(arch.n_qubits(), Axis::Z, angle));
  return s;
}

StepCoefficients StepCoefficients::from(const FermiHubbardParams& p) {
  p.validate();
  return {.z = 0.5 * (0.5 * p.epsilon + p.mu),
          .zz = 0.25 * p.epsilon,
          .xy_leg = 0.5 * p.lambda,
          .xy_rung = 0.0};
}

StepCoefficients StepCoefficients::from(const LadderParams& p) {
  p.validate();
  return {.z = p.delta, .zz = p.epsilon, .xy_leg = p.lambda, .xy_rung = p.J};
}

Schedule trotterize(const StepCoefficients& c, double t, std::size_t l,
                    const Architecture& arch, const CompileOptions& opts) {
  if (l < 1) throw ValidationError("Trotter step count must be >= 1");
  require_two_halves(arch);
  const double dt = t / static_cast<double>(l);

  Schedule step(arch, opts.allow_signed_times);
  step.append(compile_z_layer(arch, c.z, dt));
  step.append(compile_zz(arch, c.zz, dt, opts));
  if (arch.kind() == Architecture::Kind::Linear) {
    // Undo the routing so the hopping factors see contiguous half-chains.
    auto swaps = swap_network(arch.n_qubits());
    std::reverse(swaps.begin(), swaps.end());
    for (const auto& swap : swaps) step.add_swap(swap.i, swap.j);
  }
  step.append(compile_xy(arch, Axis::X, c.xy_leg, dt, opts, c.xy_rung));
  step.append(compile_xy(arch, Axis::Y, c.xy_leg, dt, opts, c.xy_rung));

  Schedule s(arch, opts.allow_signed_times);
  for (std::size_t k = 0; k < l; ++k) s.append(step);
  s.meta() = {"full", t, l};
  return s;
}

Schedule trotterize(const FermiHubbardParams& p, double t, std::size_t l,
                    const Architecture& arch, const CompileOptions& opts) {
  if (arch.n_qubits() != p.n_qubits()) {
    throw DimensionError("architecture has " + std::to_string(arch.n_qubits()) +
                         " qubits, model needs " + std::to_string(p.n_qubits()));
  }
  return trotterize(StepCoefficients::from(p), t, l, arch, opts);
}

Schedule trotterize(const LadderParams& p, double t, std::size_t l,
                    const Architecture& arch, const CompileOptions& opts) {
  if (arch.n_qubits() != p.n_qubits()) {
    throw DimensionError("architecture has " + std::to_string(arch.n_qubits()) +
                         " qubits, model needs " + std::to_string(p.n_qubits()));
  }
  return trotterize(StepCoefficients::from(p), t, l, arch, opts);
}

ScheduleStats schedule_stats(const Schedule& s) {
  ScheduleStats out;
  for (const auto& block : s.blocks()) {
    if (const auto* a = std::get_if<AnalogBlock>(&block)) {
      ++out.analog_blocks;
      out.total_analog_time += std::abs(a->duration);
      if (a->conjugation && !a->conjugation->empty()) out.rotation_layers += 2;
    } else if (std::holds_alternative<RotationBlock>(block)) {
      ++out.rotation_layers;
    } else {
      ++out.swaps;
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const ScheduleStats& s) {
  j = {{"analog_blocks", s.analog_blocks},
       {"rotation_layers", s.rotation_layers},
       {"swaps", s.swaps},
       {"total_analog_time", s.total_analog_time}};
}

}  // namespace daqc
