// SPDX-License-Identifier: Apache-2.0
//
// Pauli-string algebra and the dense oracle path.
//
// Basis convention used throughout the project: qubit q (1-based) is bit q-1
// of a basis index, and sigma^z |b=1> = +|b=1>, so the occupation operator
// reads n = (1 + sigma^z) / 2. In the (|0>, |1>) basis this gives
//   Z = diag(-1, +1),  X = [[0, 1], [1, 0]],  Y = [[0, i], [-i, 0]],
// which satisfies XY = iZ like the textbook matrices.
#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace daqc {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Default qubit cap for dense realizations (a 2^12 x 2^12 complex matrix).
inline constexpr std::size_t kDefaultDenseCap = 12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Pauli letters. Qubits are 1-based.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  /// axes[0] is qubit 1.
  explicit PauliString(std::string_view axes);

  static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);
  static PauliString pair(std::size_t n_qubits, std::size_t q1, Pauli p1,
                          std::size_t q2, Pauli p2);

  std::size_t size() const noexcept { return axes_.size(); }
  Pauli at(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);

  bool is_identity() const noexcept;
  std::size_t weight() const noexcept;
  /// Qubits carrying a non-identity letter, ascending.
  std::vector<std::size_t> support() const;
  std::string str() const;

  /// Bits flipped by the string (X or Y letters).
  std::uint64_t flip_mask() const noexcept;
  /// Bits contributing a sign (Y or Z letters).
  std::uint64_t phase_mask() const noexcept;
  std::size_t y_count() const noexcept;

  auto operator<=>(const PauliString&) const = default;
  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> axes_;
};

struct PauliProduct {
  Complex phase;
  PauliString product;
};

/// a * b = phase * product, with phase in {+-1, +-i}.
PauliProduct pauli_multiply(const PauliString& a, const PauliString& b);

bool strings_commute(const PauliString& a, const PauliString& b);

/// Weighted sum of Pauli strings in canonical form: one entry per string,
/// ordered lexicographically on the axes (I < X < Y < Z).
///
/// `identity_shift` is a scalar carried alongside the operator. It records a
/// constant dropped while building a Hamiltonian and is never folded into
/// the terms; only spectrum comparisons add it back.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, Complex>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  static PauliSum identity(std::size_t n_qubits, Complex coeff = 1.0);

  /// Merges into an existing term; a term whose coefficient cancels to exactly
  /// zero is removed.
  void add(Complex coeff, const PauliString& s);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  Complex coefficient(const PauliString& s) const;

  double identity_shift() const noexcept { return identity_shift_; }
  void set_identity_shift(double shift) noexcept { identity_shift_ = shift; }

  /// All coefficients real to within tol.
  bool is_hermitian(double tol = 1e-12) const;
  /// Drops terms with |c| <= tol.
  PauliSum pruned(double tol) const;
  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  /// Operator product. The result carries no identity shift.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  bool operator==(const PauliSum& other) const = default;

 private:
  std::size_t n_qubits_ = 0;
  TermMap terms_;
  double identity_shift_ = 0.0;
};

/// [a, b] computed term by term.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// True iff every coefficient of [a, b] is at most tol in magnitude.
bool commutes(const PauliSum& a, const PauliSum& b, double tol = 1e-12);

/// out += coeff * s * in, for state vectors of 2^n amplitudes.
void accumulate_pauli_action(const PauliString& s, Complex coeff,
                             std::span<const Complex> in,
                             std::span<Complex> out);

DenseOperator to_dense(const PauliSum& h,
                       std::size_t cap = kDefaultDenseCap);

/// exp(-i t H) via eigendecomposition of the Hermitian dense matrix.
DenseOperator exact_propagator(const PauliSum& h, double t,
                               std::size_t cap = kDefaultDenseCap);

/// Diagonalizes H once and evaluates exp(-i t H) for many t.
class ExactEvolution {
 public:
  explicit ExactEvolution(const PauliSum& h,
                          std::size_t cap = kDefaultDenseCap);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }

  DenseOperator propagator(double t) const;
  DenseVector evolve(const DenseVector& psi, double t) const;

 private:
  std::size_t n_qubits_;
  Eigen::VectorXd eigenvalues_;
  DenseOperator eigenvectors_;
};

/// min over phi of max_ij |U - e^{i phi} V|, with phi = arg tr(V^dagger U).
double phase_optimal_distance(const DenseOperator& u, const DenseOperator& v);

/// max_ij |U^dagger U - 1|.
double unitarity_defect(const DenseOperator& u);

// {"n_q": int, "terms": [{"coeff": [re, im], "axes": "IZZXY..."}]}
// "axes" lists qubit 1 first.
void to_json(nlohmann::json& j, const PauliSum& h);
void from_json(const nlohmann::json& j, PauliSum& h);

}  // namespace daqc
