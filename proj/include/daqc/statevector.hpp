// SPDX-License-Identifier: Apache-2.0
//
// Dense state-vector execution of digital-analog schedules.
//
// Amplitude index bit q-1 holds qubit q; bit value 1 is the sigma^z = +1
// (occupied) state. See pauli.hpp for the matrix conventions.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "daqc/pauli.hpp"
#include "daqc/schedule.hpp"

namespace daqc {

class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(std::size_t n_qubits);
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);
  static StateVector from_dense(const DenseVector& v);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex operator[](std::uint64_t i) const { return amps_[i]; }

  double norm() const;
  DenseVector to_dense() const;

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// exp(-i angle sigma^axis) on one qubit.
void apply_rotation(StateVector& psi, std::size_t qubit, Axis axis,
                    double angle);
void apply_layer(StateVector& psi, const RotationLayer& layer);

/// Multiplies |b> by exp(-i duration sum_e g_e z_u z_v), z = 2b - 1.
void apply_analog_ising(StateVector& psi, const CouplingProfile& edges,
                        double duration);
void apply_analog_ising(StateVector& psi, const Architecture& arch,
                        double duration);

/// Exchanges qubits i and j.
void apply_swap(StateVector& psi, std::size_t i, std::size_t j);

/// Runs every block in order, then relabels positions back to logical qubit
/// order (undoing the schedule's final layout).
void run_schedule(StateVector& psi, const Schedule& s);

/// Columns are run_schedule applied to each basis state.
DenseOperator schedule_unitary(const Schedule& s,
                               std::size_t cap = kDefaultDenseCap);

/// <psi|O|psi> for Hermitian O.
double expectation(const StateVector& psi, const PauliSum& obs);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Product of cos(theta_k)|0> + e^{-i phi_k} sin(theta_k)|1>, with theta_k
/// uniform on [0, 2 pi] and phi_k uniform on [0, pi].
StateVector random_product_state(std::uint64_t seed, std::size_t n_qubits);

/// Product state with explicit per-qubit (theta, phi).
StateVector product_state(std::span<const double> theta,
                          std::span<const double> phi);

// JSON list of [re, im] pairs in basis-index order.
nlohmann::json state_to_json(const StateVector& psi);
/// Raw little-endian doubles, re then im per amplitude.
void write_state_binary(const StateVector& psi, const std::string& path);

}  // namespace daqc
