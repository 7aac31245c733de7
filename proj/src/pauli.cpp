// SPDX-License-Identifier: Apache-2.0
#include "daqc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "daqc/errors.hpp"

namespace daqc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubit(std::size_t qubit, std::size_t n_qubits) {
  if (qubit < 1 || qubit > n_qubits) {
    throw IndexError("qubit " + std::to_string(qubit) + " outside 1.." +
                     std::to_string(n_qubits));
  }
}

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("qubit count mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

// i^k for k mod 4.
Complex i_power(std::size_t k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

char to_char(Pauli p) {
  constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
  return letters[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default:
      throw ValidationError(std::string("not a Pauli letter: '") + c + "'");
  }
}

PauliString::PauliString(std::size_t n_qubits) : axes_(n_qubits, Pauli::I) {}

PauliString::PauliString(std::string_view axes) {
  axes_.reserve(axes.size());
  for (char c : axes) axes_.push_back(pauli_from_char(c));
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                Pauli p) {
  PauliString s(n_qubits);
  s.set(qubit, p);
  return s;
}

PauliString PauliString::pair(std::size_t n_qubits, std::size_t q1, Pauli p1,
                              std::size_t q2, Pauli p2) {
  if (q1 == q2) throw ValidationError("pair on a single qubit");
  PauliString s(n_qubits);
  s.set(q1, p1);
  s.set(q2, p2);
  return s;
}

Pauli PauliString::at(std::size_t qubit) const {
  check_qubit(qubit, axes_.size());
  return axes_[qubit - 1];
}

void PauliString::set(std::size_t qubit, Pauli p) {
  check_qubit(qubit, axes_.size());
  axes_[qubit - 1] = p;
}

bool PauliString::is_identity() const noexcept {
  return std::all_of(axes_.begin(), axes_.end(),
                     [](Pauli p) { return p == Pauli::I; });
}

std::size_t PauliString::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      axes_.begin(), axes_.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (axes_[k] != Pauli::I) out.push_back(k + 1);
  }
  return out;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(axes_.size());
  for (Pauli p : axes_) out.push_back(to_char(p));
  return out;
}

std::uint64_t PauliString::flip_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (axes_[k] == Pauli::X || axes_[k] == Pauli::Y) mask |= 1ULL << k;
  }
  return mask;
}

std::uint64_t PauliString::phase_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (axes_[k] == Pauli::Y || axes_[k] == Pauli::Z) mask |= 1ULL << k;
  }
  return mask;
}

std::size_t PauliString::y_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(axes_.begin(), axes_.end(), Pauli::Y));
}

PauliProduct pauli_multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a.size(), b.size());
  PauliString product(a.size());
  // Count factors of +i and -i separately; the phase is i^(plus - minus).
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (std::size_t q = 1; q <= a.size(); ++q) {
    const auto la = static_cast<int>(a.at(q));
    const auto lb = static_cast<int>(b.at(q));
    // With I=0, X=1, Y=2, Z=3 the product letter is always la ^ lb.
    product.set(q, static_cast<Pauli>(la ^ lb));
    if (la == 0 || lb == 0 || la == lb) continue;
    if (lb == la % 3 + 1) {
      ++plus;  // XY = iZ, YZ = iX, ZX = iY
    } else {
      ++minus;
    }
  }
  return {i_power(plus + 3 * minus), std::move(product)};
}

bool strings_commute(const PauliString& a, const PauliString& b) {
  check_same_size(a.size(), b.size());
  std::size_t clashes = 0;
  for (std::size_t q = 1; q <= a.size(); ++q) {
    const Pauli la = a.at(q);
    const Pauli lb = b.at(q);
    if (la != Pauli::I && lb != Pauli::I && la != lb) ++clashes;
  }
  return clashes % 2 == 0;
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coeff) {
  PauliSum h(n_qubits);
  h.add(coeff, PauliString(n_qubits));
  return h;
}

void PauliSum::add(Complex coeff, const PauliString& s) {
  check_same_size(s.size(), n_qubits_);
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
  }
  if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) {
    return std::abs(kv.second.imag()) <= tol;
  });
}

PauliSum PauliSum::pruned(double tol) const {
  PauliSum out(n_qubits_);
  out.identity_shift_ = identity_shift_;
  for (const auto& [s, c] : terms_) {
    if (std::abs(c) > tol) out.terms_.emplace(s, c);
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  out.identity_shift_ = identity_shift_;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same_size(n_qubits_, other.n_qubits_);
  for (const auto& [s, c] : other.terms_) add(c, s);
  identity_shift_ += other.identity_shift_;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same_size(n_qubits_, other.n_qubits_);
  for (const auto& [s, c] : other.terms_) add(-c, s);
  identity_shift_ -= other.identity_shift_;
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  if (scalar == Complex{0.0, 0.0}) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= scalar;
  }
  identity_shift_ *= scalar.real();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      auto [phase, product] = pauli_multiply(sa, sb);
      out.add(phase * ca * cb, product);
    }
  }
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (strings_commute(sa, sb)) continue;
      auto [phase, product] = pauli_multiply(sa, sb);
      out.add(2.0 * phase * ca * cb, product);
    }
  }
  return out;
}

bool commutes(const PauliSum& a, const PauliSum& b, double tol) {
  const PauliSum c = commutator(a, b);
  return std::all_of(c.terms().begin(), c.terms().end(),
                     [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

void accumulate_pauli_action(const PauliString& s, Complex coeff,
                             std::span<const Complex> in,
                             std::span<Complex> out) {
  const std::size_t dim = std::size_t{1} << s.size();
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("state size does not match Pauli string length");
  }
  const std::uint64_t flip = s.flip_mask();
  const std::uint64_t signs = s.phase_mask();
  // Y|b> = i(2b-1)|1-b>, Z|b> = (2b-1)|b>: every Y contributes a factor i and
  // every Y/Z letter on an unset bit contributes -1.
  const Complex base = coeff * i_power(s.y_count());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const int negatives = std::popcount(~b & signs);
    const Complex amp = (negatives & 1) ? -base : base;
    out[b ^ flip] += amp * in[b];
  }
}

DenseOperator to_dense(const PauliSum& h, std::size_t cap) {
  if (h.n_qubits() > cap) {
    throw ResourceError("dense realization of " + std::to_string(h.n_qubits()) +
                        " qubits exceeds cap of " + std::to_string(cap));
  }
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (const auto& [s, c] : h.terms()) {
    const std::uint64_t flip = s.flip_mask();
    const std::uint64_t signs = s.phase_mask();
    const Complex base = c * i_power(s.y_count());
    for (std::uint64_t b = 0; b < dim; ++b) {
      const int negatives = std::popcount(~b & signs);
      m(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b)) +=
          (negatives & 1) ? -base : base;
    }
  }
  return m;
}

namespace {

void require_hermitian(const PauliSum& h) {
  for (const auto& [s, c] : h.terms()) {
    if (std::abs(c.imag()) > 1e-12) {
      throw ValidationError("non-Hermitian term " + s.str() +
                            " with imaginary coefficient");
    }
  }
}

}  // namespace

ExactEvolution::ExactEvolution(const PauliSum& h, std::size_t cap)
    : n_qubits_(h.n_qubits()) {
  require_hermitian(h);
  const DenseOperator m = to_dense(h, cap);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

DenseOperator ExactEvolution::propagator(double t) const {
  const DenseVector phases =
      (eigenvalues_.cast<Complex>() * Complex{0.0, -t}).array().exp();
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

DenseVector ExactEvolution::evolve(const DenseVector& psi, double t) const {
  if (psi.size() != eigenvectors_.rows()) {
    throw DimensionError("state size does not match Hamiltonian");
  }
  const DenseVector phases =
      (eigenvalues_.cast<Complex>() * Complex{0.0, -t}).array().exp();
  DenseVector coords = eigenvectors_.adjoint() * psi;
  coords.array() *= phases.array();
  return eigenvectors_ * coords;
}

DenseOperator exact_propagator(const PauliSum& h, double t, std::size_t cap) {
  return ExactEvolution(h, cap).propagator(t);
}

double phase_optimal_distance(const DenseOperator& u, const DenseOperator& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DimensionError("operator shapes differ");
  }
  const Complex overlap = (v.adjoint() * u).trace();
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return (u - phase * v).cwiseAbs().maxCoeff();
}

double unitarity_defect(const DenseOperator& u) {
  const auto dim = u.rows();
  return (u.adjoint() * u - DenseOperator::Identity(dim, dim))
      .cwiseAbs()
      .maxCoeff();
}

void to_json(nlohmann::json& j, const PauliSum& h) {
  auto terms = nlohmann::json::array();
  for (const auto& [s, c] : h.terms()) {
    terms.push_back({{"coeff", {c.real(), c.imag()}}, {"axes", s.str()}});
  }
  j = {{"n_q", h.n_qubits()}, {"terms", std::move(terms)}};
  if (h.identity_shift() != 0.0) j["identity_shift"] = h.identity_shift();
}

void from_json(const nlohmann::json& j, PauliSum& h) {
  const auto n_q = j.at("n_q").get<std::size_t>();
  PauliSum out(n_q);
  for (const auto& term : j.at("terms")) {
    const auto& coeff = term.at("coeff");
    const auto axes = term.at("axes").get<std::string>();
    if (axes.size() != n_q) {
      throw DimensionError("term '" + axes + "' does not have " +
                           std::to_string(n_q) + " letters");
    }
    out.add({coeff.at(0).get<double>(), coeff.at(1).get<double>()},
            PauliString(axes));
  }
  out.set_identity_shift(j.value("identity_shift", 0.0));
  h = std::move(out);
}

}  // namespace daqc
