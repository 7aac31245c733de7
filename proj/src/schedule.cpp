// SPDX-License-Identifier: Apache-2.0
#include "daqc/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "daqc/errors.hpp"

namespace daqc {

Edge make_edge(std::size_t a, std::size_t b) {
  if (a == b) throw ValidationError("edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Architecture Architecture::linear(std::size_t n_qubits, double beta) {
  if (n_qubits < 1) throw ValidationError("architecture needs >= 1 qubit");
  if (!std::isfinite(beta) || beta == 0.0) {
    throw ValidationError("linear coupling beta must be finite and nonzero");
  }
  Architecture a;
  a.kind_ = Kind::Linear;
  a.n_qubits_ = n_qubits;
  a.beta_ = beta;
  for (std::size_t i = 1; i < n_qubits; ++i) {
    a.couplings_.push_back({{i, i + 1}, beta, EdgeClass::Chain});
  }
  return a;
}

Architecture Architecture::ladder(std::size_t n_rungs, double alpha,
                                  double gamma) {
  if (n_rungs < 1) throw ValidationError("ladder needs >= 1 rung");
  if (!std::isfinite(alpha) || !std::isfinite(gamma) || alpha == 0.0 ||
      gamma == 0.0) {
    throw ValidationError("ladder couplings must be finite and nonzero");
  }
  Architecture a;
  a.kind_ = Kind::Ladder;
  a.n_qubits_ = 2 * n_rungs;
  a.alpha_ = alpha;
  a.gamma_ = gamma;
  const std::size_t n = n_rungs;
  for (std::size_t j = 1; j < n; ++j) {
    a.couplings_.push_back({{j, j + 1}, alpha, EdgeClass::Leg});
    a.couplings_.push_back({{j + n, j + n + 1}, alpha, EdgeClass::Leg});
  }
  for (std::size_t j = 1; j <= n; ++j) {
    a.couplings_.push_back({{j, j + n}, gamma, EdgeClass::Rung});
  }
  return a;
}

std::vector<Edge> Architecture::edges() const {
  std::vector<Edge> out;
  out.reserve(couplings_.size());
  for (const auto& c : couplings_) out.push_back(c.edge);
  return out;
}

bool Architecture::has_edge(const Edge& e) const {
  return std::any_of(couplings_.begin(), couplings_.end(),
                     [&](const Coupling& c) { return c.edge == e; });
}

double Architecture::strength(const Edge& e) const {
  for (const auto& c : couplings_) {
    if (c.edge == e) return c.strength;
  }
  throw ValidationError("(" + std::to_string(e.first) + ", " +
                        std::to_string(e.second) +
                        ") is not an architecture edge");
}

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    default: return 'z';
  }
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default:
      throw ValidationError(std::string("unknown rotation axis '") + c + "'");
  }
}

RotationLayer::RotationLayer(std::vector<Rotation> rotations)
    : rotations_(std::move(rotations)) {
  std::set<std::size_t> seen;
  for (const auto& r : rotations_) {
    if (r.qubit < 1) throw IndexError("rotation qubit must be >= 1");
    if (!seen.insert(r.qubit).second) {
      throw ValidationError("rotation layer touches qubit " +
                            std::to_string(r.qubit) + " twice");
    }
  }
}

RotationLayer RotationLayer::inverse() const {
  std::vector<Rotation> out = rotations_;
  for (auto& r : out) r.angle = -r.angle;
  return RotationLayer(std::move(out));
}

Schedule::Schedule(Architecture arch, bool allow_signed_times)
    : arch_(std::move(arch)), allow_signed_times_(allow_signed_times) {}

namespace {

void check_layer(const RotationLayer& layer, std::size_t n_qubits) {
  for (const auto& r : layer.rotations()) {
    if (r.qubit > n_qubits) {
      throw IndexError("rotation on qubit " + std::to_string(r.qubit) +
                       " outside 1.." + std::to_string(n_qubits));
    }
  }
}

}  // namespace

void Schedule::add_analog(double duration,
                          std::optional<RotationLayer> conjugation) {
  if (!std::isfinite(duration)) {
    throw ValidationError("analog duration must be finite");
  }
  if (duration < 0.0 && !allow_signed_times_) {
    throw ValidationError(
        "negative analog duration requires allow-signed-times");
  }
  if (conjugation) check_layer(*conjugation, n_qubits());
  blocks_.emplace_back(AnalogBlock{duration, std::move(conjugation)});
}

void Schedule::add_rotations(RotationLayer layer) {
  check_layer(layer, n_qubits());
  if (layer.empty()) return;
  blocks_.emplace_back(RotationBlock{std::move(layer)});
}

void Schedule::add_swap(std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n_qubits() || j > n_qubits()) {
    throw IndexError("swap position outside 1.." + std::to_string(n_qubits()));
  }
  if (!arch_.has_edge(make_edge(i, j))) {
    throw ValidationError("swap (" + std::to_string(i) + ", " +
                          std::to_string(j) +
                          ") is not between adjacent positions");
  }
  blocks_.emplace_back(SwapBlock{i, j});
}

void Schedule::append(const Schedule& other) {
  if (!(other.arch_ == arch_)) {
    throw DimensionError("cannot concatenate schedules on different hardware");
  }
  if (other.allow_signed_times_ && !allow_signed_times_) {
    throw ValidationError("appended schedule relies on allow-signed-times");
  }
  blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
}

std::vector<std::size_t> Schedule::final_layout() const {
  std::vector<std::size_t> layout(n_qubits());
  std::iota(layout.begin(), layout.end(), std::size_t{1});
  for (const auto& block : blocks_) {
    if (const auto* swap = std::get_if<SwapBlock>(&block)) {
      std::swap(layout[swap->i - 1], layout[swap->j - 1]);
    }
  }
  return layout;
}

void Schedule::validate() const {
  Schedule copy(arch_, allow_signed_times_);
  for (const auto& block : blocks_) {
    std::visit(
        [&](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, AnalogBlock>) {
            copy.add_analog(b.duration, b.conjugation);
          } else if constexpr (std::is_same_v<T, RotationBlock>) {
            copy.add_rotations(b.layer);
          } else {
            copy.add_swap(b.i, b.j);
          }
        },
        block);
  }
}

double CouplingProfile::at(const Edge& e) const {
  auto it = strengths.find(e);
  return it == strengths.end() ? 0.0 : it->second;
}

void to_json(nlohmann::json& j, const Architecture& a) {
  if (a.kind() == Architecture::Kind::Linear) {
    j = {{"kind", "linear"}, {"n_q", a.n_qubits()}, {"beta", a.beta()}};
  } else {
    j = {{"kind", "ladder"},
         {"n", a.n_sites()},
         {"alpha", a.alpha()},
         {"gamma", a.gamma()}};
  }
}

void from_json(const nlohmann::json& j, Architecture& a) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    a = Architecture::linear(j.at("n_q").get<std::size_t>(),
                             j.value("beta", 1.0));
  } else if (kind == "ladder") {
    a = Architecture::ladder(j.at("n").get<std::size_t>(),
                             j.value("alpha", 1.0), j.value("gamma", 1.0));
  } else {
    throw ValidationError("unknown architecture kind '" + kind + "'");
  }
}

void to_json(nlohmann::json& j, const RotationLayer& layer) {
  j = nlohmann::json::array();
  for (const auto& r : layer.rotations()) {
    j.push_back({r.qubit, std::string(1, axis_char(r.axis)), r.angle});
  }
}

void from_json(const nlohmann::json& j, RotationLayer& layer) {
  std::vector<Rotation> rotations;
  for (const auto& entry : j) {
    const auto axis = entry.at(1).get<std::string>();
    if (axis.size() != 1) throw ValidationError("bad axis '" + axis + "'");
    rotations.push_back({entry.at(0).get<std::size_t>(),
                         axis_from_char(axis[0]), entry.at(2).get<double>()});
  }
  layer = RotationLayer(std::move(rotations));
}

void to_json(nlohmann::json& j, const Schedule& s) {
  auto blocks = nlohmann::json::array();
  for (const auto& block : s.blocks()) {
    std::visit(
        [&](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, AnalogBlock>) {
            nlohmann::json entry = {{"type", "analog"},
                                    {"duration", b.duration}};
            if (b.conjugation) entry["conjugation"] = *b.conjugation;
            blocks.push_back(std::move(entry));
          } else if constexpr (std::is_same_v<T, RotationBlock>) {
            blocks.push_back({{"type", "rotations"}, {"layer", b.layer}});
          } else {
            blocks.push_back({{"type", "swap"}, {"i", b.i}, {"j", b.j}});
          }
        },
        block);
  }
  j = {{"arch", s.architecture()},
       {"allow_signed_times", s.allow_signed_times()},
       {"blocks", std::move(blocks)},
       {"meta",
        {{"target", s.meta().target}, {"t", s.meta().t}, {"l", s.meta().l}}}};
}

void from_json(const nlohmann::json& j, Schedule& s) {
  Schedule out(j.at("arch").get<Architecture>(),
               j.value("allow_signed_times", false));
  for (const auto& block : j.at("blocks")) {
    const auto type = block.at("type").get<std::string>();
    if (type == "analog") {
      std::optional<RotationLayer> conj;
      if (block.contains("conjugation") && !block["conjugation"].is_null()) {
        conj = block["conjugation"].get<RotationLayer>();
      }
      out.add_analog(block.at("duration").get<double>(), std::move(conj));
    } else if (type == "rotations") {
      out.add_rotations(block.at("layer").get<RotationLayer>());
    } else if (type == "swap") {
      out.add_swap(block.at("i").get<std::size_t>(),
                   block.at("j").get<std::size_t>());
    } else {
      throw ValidationError("unknown block type '" + type + "'");
    }
  }
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    out.meta().target = m.value("target", std::string());
    out.meta().t = m.value("t", 0.0);
    out.meta().l = m.value("l", std::size_t{1});
  }
  s = std::move(out);
}

}  // namespace daqc
