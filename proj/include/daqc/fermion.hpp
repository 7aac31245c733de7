// SPDX-License-Identifier: Apache-2.0
//
// Fermionic lattice models and their Jordan-Wigner qubit form.
//
// Spin-orbital layout: (site j, up) -> qubit j, (site j, down) -> qubit j + n,
// so an n-site chain uses 2n qubits and each spin species occupies one half.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "daqc/pauli.hpp"
#include "json.hpp"

namespace daqc {

enum class Spin { Up, Down };

struct FermiHubbardParams {
  std::size_t n = 1;
  double lambda = 1.0;   // tunneling
  double epsilon = 1.0;  // on-site interaction
  double mu = 0.5;       // chemical potential

  std::size_t n_qubits() const noexcept { return 2 * n; }
  void validate() const;
};

/// Two-leg spin ladder. Coefficients multiply the Pauli terms directly:
///   delta * sum Z + epsilon * sum rung ZZ + J * sum rung (XX + YY)
///   + lambda * sum leg (XX + YY).
struct LadderParams {
  std::size_t n = 1;  // rungs
  double delta = 0.0;
  double epsilon = 0.0;
  double J = 0.0;
  double lambda = 0.0;

  std::size_t n_qubits() const noexcept { return 2 * n; }
  void validate() const;

  /// Coefficients for which the J = 0 ladder equals the Fermi-Hubbard qubit
  /// Hamiltonian: delta = (eps/2 + mu)/2, epsilon = eps/4, lambda = lambda/2.
  static LadderParams from_fermi_hubbard(const FermiHubbardParams& p);
};

/// One factor of a fermionic operator product, e.g. c^dagger_{j,up}.
struct FermionOperator {
  std::size_t site;
  Spin spin;
  bool dagger;
};

/// coefficient * (ops[0] ops[1] ...).
struct FermionTerm {
  std::vector<FermionOperator> ops;
  double coefficient = 1.0;
};

std::size_t spin_orbital_to_qubit(std::size_t site, Spin spin, std::size_t n);

/// c^dagger_j = sigma^+_j prod_{i<j} P_i with sigma^+ = (X + iY)/2 and the
/// parity P_i = (-1)^{n_i} = -Z_i in the occupied-is-(+1) basis.
PauliSum jw_creation(std::size_t qubit, std::size_t n_qubits);
PauliSum jw_annihilation(std::size_t qubit, std::size_t n_qubits);

/// Jordan-Wigner image of a sum of fermionic monomials on an n-site chain.
PauliSum jw_transform(const std::vector<FermionTerm>& terms, std::size_t n);

/// Second-quantized Fermi-Hubbard Hamiltonian with open boundaries, listed
/// monomial by monomial in the relabeled spin-orbital form.
std::vector<FermionTerm> fermi_hubbard_fermion_terms(const FermiHubbardParams& p);

/// Closed-form qubit Hamiltonian. The constant n(eps/4 + mu) dropped while
/// substituting n = (1 + Z)/2 is stored as the identity shift.
PauliSum build_fh_qubit_hamiltonian(const FermiHubbardParams& p);

PauliSum build_ladder_hamiltonian(const LadderParams& p);

/// The four Trotter factors of a single-Z / ZZ / XX / YY Hamiltonian.
struct TrotterFactors {
  PauliSum z;
  PauliSum zz;
  PauliSum xx;
  PauliSum yy;
};

/// Partitions h by term type; throws ValidationError naming the first term
/// that is none of Z_i, Z_iZ_j, X_iX_j, Y_iY_j.
TrotterFactors split_terms(const PauliSum& h);

// {"model": "fh"|"ladder", "n": int, "lambda": f, "epsilon": f, "mu": f,
//  "J": f, "delta": f}
struct ModelSpec {
  enum class Kind { FermiHubbard, Ladder };
  Kind kind = Kind::FermiHubbard;
  FermiHubbardParams fh;
  LadderParams ladder;

  std::size_t n_sites() const noexcept {
    return kind == Kind::FermiHubbard ? fh.n : ladder.n;
  }
  PauliSum hamiltonian() const;
};

void to_json(nlohmann::json& j, const ModelSpec& m);
void from_json(const nlohmann::json& j, ModelSpec& m);

}  // namespace daqc
