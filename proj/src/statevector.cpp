// SPDX-License-Identifier: Apache-2.0
#include "daqc/statevector.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "daqc/errors.hpp"

namespace daqc {

namespace {

void check_qubit(const StateVector& psi, std::size_t qubit) {
  if (qubit < 1 || qubit > psi.n_qubits()) {
    throw IndexError("qubit " + std::to_string(qubit) + " outside 1.." +
                     std::to_string(psi.n_qubits()));
  }
}

std::size_t dim_for(std::size_t n_qubits) {
  if (n_qubits > 30) {
    throw ResourceError("state vector of " + std::to_string(n_qubits) +
                        " qubits is too large");
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(dim_for(n_qubits)) {
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != dim_for(n_qubits)) {
    throw DimensionError("expected " + std::to_string(dim_for(n_qubits)) +
                         " amplitudes, got " + std::to_string(amps_.size()));
  }
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  std::vector<Complex> amps(dim_for(n_qubits));
  if (index >= amps.size()) throw IndexError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_dense(const DenseVector& v) {
  const auto dim = static_cast<std::size_t>(v.size());
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw DimensionError("dense vector length is not a power of two");
  }
  return StateVector(static_cast<std::size_t>(std::countr_zero(dim)),
                     std::vector<Complex>(v.data(), v.data() + v.size()));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

DenseVector StateVector::to_dense() const {
  return Eigen::Map<const DenseVector>(amps_.data(),
                                       static_cast<Eigen::Index>(amps_.size()));
}

void apply_rotation(StateVector& psi, std::size_t qubit, Axis axis,
                    double angle) {
  check_qubit(psi, qubit);
  if (angle == 0.0) return;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const std::uint64_t bit = std::uint64_t{1} << (qubit - 1);
  auto amps = psi.amplitudes();
  const Complex phase_occupied = std::polar(1.0, -angle);  // Z = +1 on |1>
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & bit) continue;
    Complex& a0 = amps[b];
    Complex& a1 = amps[b | bit];
    const Complex x0 = a0;
    const Complex x1 = a1;
    switch (axis) {
      case Axis::X:  // cos - i sin X
        a0 = c * x0 - Complex{0.0, s} * x1;
        a1 = c * x1 - Complex{0.0, s} * x0;
        break;
      case Axis::Y:  // cos - i sin Y, Y = [[0, i], [-i, 0]]
        a0 = c * x0 + s * x1;
        a1 = c * x1 - s * x0;
        break;
      case Axis::Z:
        a0 = std::conj(phase_occupied) * x0;
        a1 = phase_occupied * x1;
        break;
    }
  }
}

void apply_layer(StateVector& psi, const RotationLayer& layer) {
  for (const auto& r : layer.rotations()) {
    apply_rotation(psi, r.qubit, r.axis, r.angle);
  }
}

void apply_analog_ising(StateVector& psi, const CouplingProfile& edges,
                        double duration) {
  struct Term {
    std::uint64_t mask;
    double g;
  };
  std::vector<Term> terms;
  for (const auto& [edge, g] : edges.strengths) {
    check_qubit(psi, edge.first);
    check_qubit(psi, edge.second);
    terms.push_back({(std::uint64_t{1} << (edge.first - 1)) |
                         (std::uint64_t{1} << (edge.second - 1)),
                     g});
  }
  if (duration == 0.0) return;
  auto amps = psi.amplitudes();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    double energy = 0.0;
    for (const auto& t : terms) {
      // z_u z_v = +1 iff the two bits agree.
      energy += (std::popcount(b & t.mask) == 1) ? -t.g : t.g;
    }
    amps[b] *= std::polar(1.0, -duration * energy);
  }
}

void apply_analog_ising(StateVector& psi, const Architecture& arch,
                        double duration) {
  CouplingProfile profile;
  for (const auto& c : arch.couplings()) profile.strengths[c.edge] = c.strength;
  apply_analog_ising(psi, profile, duration);
}

void apply_swap(StateVector& psi, std::size_t i, std::size_t j) {
  check_qubit(psi, i);
  check_qubit(psi, j);
  if (i == j) throw IndexError("swap needs two distinct qubits");
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (j - 1);
  auto amps = psi.amplitudes();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    // Visit each (.. 1_i .. 0_j ..) state once and exchange with its partner.
    if ((b & bi) && !(b & bj)) std::swap(amps[b], amps[(b & ~bi) | bj]);
  }
}

void run_schedule(StateVector& psi, const Schedule& s) {
  if (psi.n_qubits() != s.n_qubits()) {
    throw DimensionError("schedule acts on " + std::to_string(s.n_qubits()) +
                         " qubits, state has " +
                         std::to_string(psi.n_qubits()));
  }
  const Architecture& arch = s.architecture();
  // occupant[p-1]: logical qubit currently at physical position p.
  std::vector<std::size_t> occupant(s.n_qubits());
  for (std::size_t p = 0; p < occupant.size(); ++p) occupant[p] = p + 1;

  for (const auto& block : s.blocks()) {
    if (const auto* a = std::get_if<AnalogBlock>(&block)) {
      if (a->conjugation) apply_layer(psi, a->conjugation->inverse());
      apply_analog_ising(psi, arch, a->duration);
      if (a->conjugation) apply_layer(psi, *a->conjugation);
    } else if (const auto* r = std::get_if<RotationBlock>(&block)) {
      apply_layer(psi, r->layer);
    } else {
      const auto& sw = std::get<SwapBlock>(block);
      apply_swap(psi, sw.i, sw.j);
      std::swap(occupant[sw.i - 1], occupant[sw.j - 1]);
    }
  }
  // Relabel: move each logical qubit back to its home position by selection.
  for (std::size_t p = 1; p <= occupant.size(); ++p) {
    while (occupant[p - 1] != p) {
      const std::size_t home = occupant[p - 1];
      apply_swap(psi, p, home);
      std::swap(occupant[p - 1], occupant[home - 1]);
    }
  }
}

DenseOperator schedule_unitary(const Schedule& s, std::size_t cap) {
  if (s.n_qubits() > cap) {
    throw ResourceError("dense unitary of " + std::to_string(s.n_qubits()) +
                        " qubits exceeds cap of " + std::to_string(cap));
  }
  const auto dim = std::size_t{1} << s.n_qubits();
  DenseOperator u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    StateVector psi = StateVector::basis_state(s.n_qubits(), col);
    run_schedule(psi, s);
    u.col(static_cast<Eigen::Index>(col)) = psi.to_dense();
  }
  return u;
}

double expectation(const StateVector& psi, const PauliSum& obs) {
  if (obs.n_qubits() != psi.n_qubits()) {
    throw DimensionError("observable and state sizes differ");
  }
  if (!obs.is_hermitian()) {
    throw ValidationError("observable is not Hermitian");
  }
  std::vector<Complex> image(psi.dim());
  for (const auto& [s, c] : obs.terms()) {
    accumulate_pauli_action(s, c, psi.amplitudes(), image);
  }
  Complex value{};
  const auto amps = psi.amplitudes();
  for (std::size_t b = 0; b < image.size(); ++b) {
    value += std::conj(amps[b]) * image[b];
  }
  if (std::abs(value.imag()) > 1e-10) {
    throw ValidationError("expectation has imaginary part " +
                          std::to_string(value.imag()));
  }
  return value.real();
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("state sizes differ");
  }
  Complex out{};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t k = 0; k < x.size(); ++k) out += std::conj(x[k]) * y[k];
  return out;
}

StateVector product_state(std::span<const double> theta,
                          std::span<const double> phi) {
  if (theta.size() != phi.size()) {
    throw DimensionError("theta and phi lengths differ");
  }
  const std::size_t n_q = theta.size();
  std::vector<Complex> amps(dim_for(n_q));
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    Complex a = 1.0;
    for (std::size_t k = 0; k < n_q; ++k) {
      a *= (b >> k) & 1 ? std::polar(std::sin(theta[k]), -phi[k])
                        : Complex{std::cos(theta[k]), 0.0};
    }
    amps[b] = a;
  }
  return StateVector(n_q, std::move(amps));
}

StateVector random_product_state(std::uint64_t seed, std::size_t n_qubits) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta_dist(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> phi_dist(0.0, std::numbers::pi);
  std::vector<double> theta(n_qubits);
  std::vector<double> phi(n_qubits);
  for (std::size_t k = 0; k < n_qubits; ++k) {
    theta[k] = theta_dist(rng);
    phi[k] = phi_dist(rng);
  }
  return product_state(theta, phi);
}

nlohmann::json state_to_json(const StateVector& psi) {
  auto out = nlohmann::json::array();
  for (const auto& a : psi.amplitudes()) out.push_back({a.real(), a.imag()});
  return out;
}

void write_state_binary(const StateVector& psi, const std::string& path) {
  static_assert(std::endian::native == std::endian::little,
                "binary state dump assumes a little-endian host");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  const auto amps = psi.amplitudes();
  out.write(reinterpret_cast<const char*>(amps.data()),
            static_cast<std::streamsize>(amps.size() * sizeof(Complex)));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace daqc
