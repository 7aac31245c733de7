// SPDX-License-Identifier: Apache-2.0
#include "daqc/fermion.hpp"

#include <cmath>

#include "daqc/errors.hpp"

namespace daqc {

namespace {

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

// sum_{pairs} coeff * (X_u X_v + Y_u Y_v)
void add_xy_pair(PauliSum& h, double coeff, std::size_t u, std::size_t v) {
  const std::size_t n_q = h.n_qubits();
  h.add(coeff, PauliString::pair(n_q, u, Pauli::X, v, Pauli::X));
  h.add(coeff, PauliString::pair(n_q, u, Pauli::Y, v, Pauli::Y));
}

void add_zz_pair(PauliSum& h, double coeff, std::size_t u, std::size_t v) {
  h.add(coeff, PauliString::pair(h.n_qubits(), u, Pauli::Z, v, Pauli::Z));
}

void add_z_field(PauliSum& h, double coeff) {
  for (std::size_t q = 1; q <= h.n_qubits(); ++q) {
    h.add(coeff, PauliString::single(h.n_qubits(), q, Pauli::Z));
  }
}

}  // namespace

void FermiHubbardParams::validate() const {
  if (n < 1) throw ValidationError("site count must be >= 1");
  check_finite(lambda, "lambda");
  check_finite(epsilon, "epsilon");
  check_finite(mu, "mu");
}

void LadderParams::validate() const {
  if (n < 1) throw ValidationError("rung count must be >= 1");
  check_finite(delta, "delta");
  check_finite(epsilon, "epsilon");
  check_finite(J, "J");
  check_finite(lambda, "lambda");
}

LadderParams LadderParams::from_fermi_hubbard(const FermiHubbardParams& p) {
  return {.n = p.n,
          .delta = 0.5 * (0.5 * p.epsilon + p.mu),
          .epsilon = 0.25 * p.epsilon,
          .J = 0.0,
          .lambda = 0.5 * p.lambda};
}

std::size_t spin_orbital_to_qubit(std::size_t site, Spin spin, std::size_t n) {
  if (site < 1 || site > n) {
    throw IndexError("site " + std::to_string(site) + " outside 1.." +
                     std::to_string(n));
  }
  return spin == Spin::Up ? site : site + n;
}

PauliSum jw_creation(std::size_t qubit, std::size_t n_qubits) {
  if (qubit < 1 || qubit > n_qubits) {
    throw IndexError("qubit " + std::to_string(qubit) + " outside 1.." +
                     std::to_string(n_qubits));
  }
  PauliString x(n_qubits);
  PauliString y(n_qubits);
  for (std::size_t i = 1; i < qubit; ++i) {
    x.set(i, Pauli::Z);
    y.set(i, Pauli::Z);
  }
  x.set(qubit, Pauli::X);
  y.set(qubit, Pauli::Y);
  // (-1)^{qubit-1} from writing each parity -Z_i as Z_i.
  const double sign = (qubit - 1) % 2 == 0 ? 1.0 : -1.0;
  PauliSum out(n_qubits);
  out.add(0.5 * sign, x);
  out.add(Complex{0.0, 0.5 * sign}, y);
  return out;
}

PauliSum jw_annihilation(std::size_t qubit, std::size_t n_qubits) {
  return jw_creation(qubit, n_qubits).adjoint();
}

PauliSum jw_transform(const std::vector<FermionTerm>& terms, std::size_t n) {
  const std::size_t n_q = 2 * n;
  PauliSum out(n_q);
  for (const auto& term : terms) {
    PauliSum product = PauliSum::identity(n_q, term.coefficient);
    for (const auto& op : term.ops) {
      const std::size_t q = spin_orbital_to_qubit(op.site, op.spin, n);
      product = product * (op.dagger ? jw_creation(q, n_q)
                                     : jw_annihilation(q, n_q));
    }
    out += product;
  }
  return out;
}

std::vector<FermionTerm> fermi_hubbard_fermion_terms(
    const FermiHubbardParams& p) {
  p.validate();
  std::vector<FermionTerm> terms;
  for (Spin s : {Spin::Up, Spin::Down}) {
    for (std::size_t j = 1; j < p.n; ++j) {
      terms.push_back({{{j, s, true}, {j + 1, s, false}}, p.lambda});
      terms.push_back({{{j + 1, s, true}, {j, s, false}}, p.lambda});
    }
  }
  for (std::size_t j = 1; j <= p.n; ++j) {
    terms.push_back({{{j, Spin::Up, true},
                      {j, Spin::Up, false},
                      {j, Spin::Down, true},
                      {j, Spin::Down, false}},
                     p.epsilon});
  }
  for (Spin s : {Spin::Up, Spin::Down}) {
    for (std::size_t j = 1; j <= p.n; ++j) {
      terms.push_back({{{j, s, true}, {j, s, false}}, p.mu});
    }
  }
  return terms;
}

PauliSum build_fh_qubit_hamiltonian(const FermiHubbardParams& p) {
  p.validate();
  const std::size_t n = p.n;
  PauliSum h(p.n_qubits());
  add_z_field(h, 0.5 * (0.5 * p.epsilon + p.mu));
  for (std::size_t j = 1; j <= n; ++j) add_zz_pair(h, 0.25 * p.epsilon, j, j + n);
  // Hopping stays inside each half-chain, so no Jordan-Wigner string survives.
  for (std::size_t j = 1; j < n; ++j) {
    add_xy_pair(h, 0.5 * p.lambda, j, j + 1);
    add_xy_pair(h, 0.5 * p.lambda, j + n, j + n + 1);
  }
  h.set_identity_shift(static_cast<double>(n) * (0.25 * p.epsilon + p.mu));
  return h;
}

PauliSum build_ladder_hamiltonian(const LadderParams& p) {
  p.validate();
  const std::size_t n = p.n;
  PauliSum h(p.n_qubits());
  add_z_field(h, p.delta);
  for (std::size_t j = 1; j <= n; ++j) {
    add_zz_pair(h, p.epsilon, j, j + n);
    add_xy_pair(h, p.J, j, j + n);
  }
  for (std::size_t j = 1; j < n; ++j) {
    add_xy_pair(h, p.lambda, j, j + 1);
    add_xy_pair(h, p.lambda, j + n, j + n + 1);
  }
  return h;
}

TrotterFactors split_terms(const PauliSum& h) {
  const std::size_t n_q = h.n_qubits();
  TrotterFactors f{PauliSum(n_q), PauliSum(n_q), PauliSum(n_q), PauliSum(n_q)};
  for (const auto& [s, c] : h.terms()) {
    const auto support = s.support();
    if (support.size() == 1 && s.at(support[0]) == Pauli::Z) {
      f.z.add(c, s);
      continue;
    }
    if (support.size() == 2) {
      const Pauli a = s.at(support[0]);
      if (a == s.at(support[1])) {
        switch (a) {
          case Pauli::Z: f.zz.add(c, s); continue;
          case Pauli::X: f.xx.add(c, s); continue;
          case Pauli::Y: f.yy.add(c, s); continue;
          default: break;
        }
      }
    }
    throw ValidationError("term " + s.str() +
                          " is not a Z, ZZ, XX or YY interaction");
  }
  return f;
}

PauliSum ModelSpec::hamiltonian() const {
  return kind == Kind::FermiHubbard ? build_fh_qubit_hamiltonian(fh)
                                    : build_ladder_hamiltonian(ladder);
}

void to_json(nlohmann::json& j, const ModelSpec& m) {
  if (m.kind == ModelSpec::Kind::FermiHubbard) {
    j = {{"model", "fh"},
         {"n", m.fh.n},
         {"lambda", m.fh.lambda},
         {"epsilon", m.fh.epsilon},
         {"mu", m.fh.mu}};
  } else {
    j = {{"model", "ladder"},
         {"n", m.ladder.n},
         {"lambda", m.ladder.lambda},
         {"epsilon", m.ladder.epsilon},
         {"J", m.ladder.J},
         {"delta", m.ladder.delta}};
  }
}

void from_json(const nlohmann::json& j, ModelSpec& m) {
  const auto model = j.value("model", std::string("fh"));
  if (model == "fh") {
    m.kind = ModelSpec::Kind::FermiHubbard;
    FermiHubbardParams defaults;
    m.fh.n = j.at("n").get<std::size_t>();
    m.fh.lambda = j.value("lambda", defaults.lambda);
    m.fh.epsilon = j.value("epsilon", defaults.epsilon);
    m.fh.mu = j.value("mu", defaults.mu);
    m.fh.validate();
  } else if (model == "ladder") {
    m.kind = ModelSpec::Kind::Ladder;
    m.ladder.n = j.at("n").get<std::size_t>();
    m.ladder.lambda = j.value("lambda", 0.0);
    m.ladder.epsilon = j.value("epsilon", 0.0);
    m.ladder.J = j.value("J", 0.0);
    m.ladder.delta = j.value("delta", 0.0);
    m.ladder.validate();
  } else {
    throw ValidationError("unknown model '" + model + "'");
  }
}

}  // namespace daqc
