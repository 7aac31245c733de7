// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "daqc/compile.hpp"
#include "daqc/errors.hpp"
#include "daqc/statevector.hpp"
#include "dense_oracle.hpp"

namespace daqc {
namespace {

using oracle::max_abs;
using oracle::Mat;
using oracle::Vec;

constexpr double kPi = std::numbers::pi;

StateVector random_state(std::mt19937_64& rng, std::size_t n_q) {
  return StateVector::from_dense(oracle::random_state(rng, n_q));
}

Pauli letter_of(Axis a) {
  switch (a) {
    case Axis::X: return Pauli::X;
    case Axis::Y: return Pauli::Y;
    case Axis::Z: return Pauli::Z;
  }
  return Pauli::I;
}

// exp(-i angle sigma) = cos(angle) I - i sin(angle) sigma, as a full register
// operator.
Mat rotation_matrix(std::size_t n_q, std::size_t q, Axis axis, double angle) {
  const Mat s = oracle::string_matrix(PauliString::single(n_q, q, letter_of(axis)));
  return std::cos(angle) * oracle::identity(n_q) -
         Complex{0.0, std::sin(angle)} * s;
}

Mat swap_matrix(std::size_t n_q, std::size_t i, std::size_t j) {
  // SWAP = (II + XX + YY + ZZ) / 2
  Mat m = oracle::identity(n_q);
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    m += oracle::string_matrix(PauliString::pair(n_q, i, p, j, p));
  }
  return m / 2.0;
}

PauliSum ising(const Architecture& arch) {
  PauliSum h(arch.n_qubits());
  for (const auto& c : arch.couplings()) {
    h.add(c.strength, PauliString::pair(arch.n_qubits(), c.edge.first, Pauli::Z,
                                        c.edge.second, Pauli::Z));
  }
  return h;
}

double distance_up_to_phase(const Vec& a, const Vec& b) {
  const Complex overlap = a.dot(b);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return (phase * a - b).norm();
}

TEST(StateVector, DefaultIsAllZeroBasisState) {
  const StateVector psi(3);
  EXPECT_EQ(psi.dim(), 8u);
  EXPECT_EQ(psi[0], Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(psi.norm(), 1.0);
}

TEST(StateVector, RejectsBadSizes) {
  EXPECT_THROW(StateVector(2, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(StateVector::basis_state(2, 4), IndexError);
  EXPECT_THROW(StateVector(31), ResourceError);
}

TEST(ApplyRotation, ZeroAngleIsIdentity) {
  std::mt19937_64 rng(1);
  const StateVector psi = random_state(rng, 3);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    StateVector phi = psi;
    apply_rotation(phi, 2, a, 0.0);
    EXPECT_LT((phi.to_dense() - psi.to_dense()).norm(), 1e-15);
  }
}

TEST(ApplyRotation, HalfPiTwiceIsMinusOne) {
  std::mt19937_64 rng(2);
  const StateVector psi = random_state(rng, 2);
  StateVector phi = psi;
  apply_rotation(phi, 1, Axis::X, kPi / 2);
  apply_rotation(phi, 1, Axis::X, kPi / 2);
  EXPECT_LT((phi.to_dense() + psi.to_dense()).norm(), 1e-14);
}

TEST(ApplyRotation, QuarterPiXMapsZReadoutToY) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi = random_state(rng, 1);
    StateVector phi = psi;
    apply_rotation(phi, 1, Axis::X, kPi / 4);
    PauliSum z(1);
    z.add(1.0, PauliString("Z"));
    PauliSum y(1);
    y.add(1.0, PauliString("Y"));
    EXPECT_NEAR(expectation(phi, z), expectation(psi, y), 1e-14);
    // Dense conjugation oracle: R^dagger Z R = Y.
    const Mat r = rotation_matrix(1, 1, Axis::X, kPi / 4);
    EXPECT_LT(max_abs(r.adjoint() * oracle::letter(Pauli::Z) * r -
                      oracle::letter(Pauli::Y)),
              1e-15);
  }
}

TEST(ApplyRotation, KernelsMatchDenseOnEveryBasisState) {
  for (std::size_t q = 1; q <= 3; ++q) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      const Mat m = rotation_matrix(3, q, a, 0.731);
      for (std::uint64_t b = 0; b < 8; ++b) {
        StateVector psi = StateVector::basis_state(3, b);
        apply_rotation(psi, q, a, 0.731);
        EXPECT_LT((psi.to_dense() - m.col(static_cast<Eigen::Index>(b))).norm(),
                  1e-15);
      }
    }
  }
}

TEST(ApplyRotation, OutOfRangeQubit) {
  StateVector psi(2);
  EXPECT_THROW(apply_rotation(psi, 0, Axis::X, 1.0), IndexError);
  EXPECT_THROW(apply_rotation(psi, 3, Axis::X, 1.0), IndexError);
}

TEST(ApplyAnalogIsing, ZeroDurationIsIdentity) {
  std::mt19937_64 rng(4);
  const StateVector psi = random_state(rng, 4);
  StateVector phi = psi;
  apply_analog_ising(phi, Architecture::linear(4, 1.3), 0.0);
  EXPECT_LT((phi.to_dense() - psi.to_dense()).norm(), 1e-15);
}

TEST(ApplyAnalogIsing, VacuumPicksUpChainPhase) {
  const double beta = 0.8;
  const double tau = 0.55;
  for (std::size_t n_q = 2; n_q <= 6; ++n_q) {
    StateVector psi(n_q);
    apply_analog_ising(psi, Architecture::linear(n_q, beta), tau);
    EXPECT_LT(std::abs(psi[0] - std::polar(1.0, -beta * tau * (n_q - 1.0))),
              1e-14);
  }
}

TEST(ApplyAnalogIsing, MatchesExactPropagatorOnRandomStates) {
  std::mt19937_64 rng(5);
  for (auto arch : {Architecture::linear(6, 0.9), Architecture::ladder(3, 0.7, 1.2)}) {
    const DenseOperator u = exact_propagator(ising(arch), 0.83);
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector psi = random_state(rng, 6);
      StateVector phi = psi;
      apply_analog_ising(phi, arch, 0.83);
      EXPECT_LT((phi.to_dense() - u * psi.to_dense()).norm(), 1e-12);
    }
  }
}

TEST(ApplyAnalogIsing, ProfileOverloadAndEdgeRange) {
  CouplingProfile g;
  g.strengths[{1, 3}] = 0.4;
  PauliSum h(3);
  h.add(0.4, PauliString("ZIZ"));
  std::mt19937_64 rng(6);
  const StateVector psi = random_state(rng, 3);
  StateVector phi = psi;
  apply_analog_ising(phi, g, 1.1);
  EXPECT_LT((phi.to_dense() - exact_propagator(h, 1.1) * psi.to_dense()).norm(),
            1e-13);
  g.strengths[{2, 4}] = 1.0;
  EXPECT_THROW(apply_analog_ising(phi, g, 1.0), IndexError);
}

TEST(ApplyAnalogIsing, CommutesWithZRotations) {
  std::mt19937_64 rng(7);
  const Architecture arch = Architecture::linear(4, 1.0);
  const StateVector psi = random_state(rng, 4);
  for (std::size_t q = 1; q <= 4; ++q) {
    StateVector a = psi;
    apply_analog_ising(a, arch, 0.4);
    apply_rotation(a, q, Axis::Z, 1.2);
    StateVector b = psi;
    apply_rotation(b, q, Axis::Z, 1.2);
    apply_analog_ising(b, arch, 0.4);
    EXPECT_LT((a.to_dense() - b.to_dense()).norm(), 1e-14);
  }
}

TEST(ApplySwap, ExchangesBits) {
  // |10> in ket notation is qubit 2 set: index 2. After the swap qubit 1 is set.
  StateVector psi = StateVector::basis_state(2, 2);
  apply_swap(psi, 1, 2);
  EXPECT_EQ(psi[1], Complex(1.0, 0.0));
  EXPECT_EQ(psi[2], Complex(0.0, 0.0));
}

TEST(ApplySwap, IsAnInvolutionAndMatchesDense) {
  std::mt19937_64 rng(8);
  const StateVector psi = random_state(rng, 4);
  StateVector phi = psi;
  apply_swap(phi, 2, 4);
  EXPECT_LT((phi.to_dense() - swap_matrix(4, 2, 4) * psi.to_dense()).norm(), 1e-15);
  apply_swap(phi, 2, 4);
  EXPECT_LT((phi.to_dense() - psi.to_dense()).norm(), 1e-15);
}

TEST(ApplySwap, ConjugatesZiIntoZj) {
  const Mat s = swap_matrix(3, 1, 3);
  EXPECT_LT(max_abs(s * oracle::string_matrix(PauliString("ZII")) * s -
                    oracle::string_matrix(PauliString("IIZ"))),
            1e-15);
}

TEST(ApplySwap, RejectsEqualOrOutOfRange) {
  StateVector psi(3);
  EXPECT_THROW(apply_swap(psi, 2, 2), IndexError);
  EXPECT_THROW(apply_swap(psi, 1, 4), IndexError);
}

TEST(RunSchedule, EmptyScheduleLeavesState) {
  std::mt19937_64 rng(9);
  const StateVector psi = random_state(rng, 4);
  StateVector phi = psi;
  run_schedule(phi, Schedule(Architecture::linear(4)));
  EXPECT_EQ(phi.to_dense(), psi.to_dense());
}

TEST(RunSchedule, CompiledZZMatchesExactUpToPhase) {
  const auto f = split_terms(build_fh_qubit_hamiltonian({3, 1.0, 1.0, 0.5}));
  const Schedule s = compile_zz(Architecture::linear(6), 0.25, 0.9);
  const DenseOperator u = exact_propagator(f.zz, 0.9);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector psi = random_state(rng, 6);
    StateVector phi = psi;
    run_schedule(phi, s);
    EXPECT_LT(distance_up_to_phase(phi.to_dense(), u * psi.to_dense()), 1e-12);
    EXPECT_NEAR(phi.norm(), 1.0, 1e-12);
  }
}

TEST(RunSchedule, AgreesWithScheduleUnitary) {
  const Schedule s = trotterize(FermiHubbardParams{2, 1.0, 1.0, 0.5}, 0.6, 2,
                                Architecture::linear(4, 1.3));
  const DenseOperator u = schedule_unitary(s);
  std::mt19937_64 rng(11);
  const StateVector psi = random_state(rng, 4);
  StateVector phi = psi;
  run_schedule(phi, s);
  EXPECT_LT((phi.to_dense() - u * psi.to_dense()).norm(), 1e-12);
}

TEST(RunSchedule, MagnetizationDriftIsTrotterError) {
  // The XX and YY factors do not commute with total Z separately, so a
  // schedule conserves it only up to Trotter error, which shrinks with l.
  PauliSum m(6);
  for (std::size_t q = 1; q <= 6; ++q) m.add(1.0, PauliString::single(6, q, Pauli::Z));
  const FermiHubbardParams p{3, 1.0, 1.0, 0.5};
  const Schedule hop = compile_xy(Architecture::linear(6), Axis::X, 0.5, 0.4);
  auto drift = [&](std::size_t l) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      StateVector psi = random_product_state(seed, 6);
      const double before = expectation(psi, m);
      run_schedule(psi, trotterize(p, 1.3, l, Architecture::linear(6)));
      worst = std::max(worst, std::abs(expectation(psi, m) - before));
    }
    return worst;
  };
  EXPECT_LT(drift(32), 0.6 * drift(8));
  EXPECT_LT(drift(32), 0.1);
  // Z and ZZ factors conserve it exactly.
  for (const Schedule& s : {compile_z_layer(Architecture::linear(6), 1.0, 0.7),
                            compile_zz(Architecture::linear(6), 0.25, 0.7)}) {
    StateVector psi = random_product_state(9, 6);
    const double before = expectation(psi, m);
    run_schedule(psi, s);
    EXPECT_NEAR(expectation(psi, m), before, 1e-12);
  }
  StateVector psi = random_product_state(9, 6);
  const double before = expectation(psi, m);
  run_schedule(psi, hop);
  EXPECT_GT(std::abs(expectation(psi, m) - before), 1e-6);
}

TEST(RunSchedule, SizeMismatchThrows) {
  StateVector psi(4);
  EXPECT_THROW(run_schedule(psi, Schedule(Architecture::linear(6))),
               DimensionError);
}

TEST(RunSchedule, EveryFactorMatchesItsPropagator) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 4; ++n) {
    const FermiHubbardParams p{n, 1.0, 1.0, 0.5};
    const auto f = split_terms(build_fh_qubit_hamiltonian(p));
    const auto c = StepCoefficients::from(p);
    for (auto arch : {Architecture::linear(2 * n), Architecture::ladder(n)}) {
      const std::vector<std::pair<Schedule, const PauliSum*>> cases = {
          {compile_z_layer(arch, c.z, 0.7), &f.z},
          {compile_zz(arch, c.zz, 0.7), &f.zz},
          {compile_xy(arch, Axis::X, c.xy_leg, 0.7), &f.xx},
          {compile_xy(arch, Axis::Y, c.xy_leg, 0.7), &f.yy}};
      const StateVector psi = random_state(rng, 2 * n);
      for (const auto& [s, h] : cases) {
        StateVector phi = psi;
        run_schedule(phi, s);
        EXPECT_LT(distance_up_to_phase(phi.to_dense(),
                                       exact_propagator(*h, 0.7) * psi.to_dense()),
                  1e-10);
      }
    }
  }
}

TEST(Expectation, VacuumZIsMinusOne) {
  const StateVector psi(4);
  for (std::size_t q = 1; q <= 4; ++q) {
    PauliSum z(4);
    z.add(1.0, PauliString::single(4, q, Pauli::Z));
    EXPECT_DOUBLE_EQ(expectation(psi, z), -1.0);
  }
}

TEST(Expectation, IdentityIsOne) {
  std::mt19937_64 rng(13);
  EXPECT_NEAR(expectation(random_state(rng, 3), PauliSum::identity(3)), 1.0, 1e-14);
}

TEST(Expectation, MatchesDenseQuadraticForm) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = random_state(rng, 4);
    const PauliSum obs = oracle::random_sum(rng, 4, 2, true);
    const Vec v = psi.to_dense();
    const Complex dense = v.dot(oracle::sum_matrix(obs) * v);
    EXPECT_NEAR(expectation(psi, obs), dense.real(), 1e-13);
  }
}

TEST(Expectation, RejectsNonHermitian) {
  PauliSum obs(1);
  obs.add(Complex{0.0, 1.0}, PauliString("Z"));
  EXPECT_THROW(expectation(StateVector(1), obs), ValidationError);
}

TEST(RandomProductState, ZeroAnglesGiveVacuum) {
  const std::vector<double> zero(3, 0.0);
  const StateVector psi = product_state(zero, zero);
  EXPECT_EQ(psi[0], Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(psi.norm(), 1.0);
}

TEST(RandomProductState, ProductFormMatchesKronecker) {
  const std::vector<double> theta = {0.3, 1.7};
  const std::vector<double> phi = {2.1, 0.4};
  const StateVector psi = product_state(theta, phi);
  Mat q1(2, 1), q2(2, 1);
  q1 << std::cos(0.3), std::polar(1.0, -2.1) * std::sin(0.3);
  q2 << std::cos(1.7), std::polar(1.0, -0.4) * std::sin(1.7);
  const Mat expected = oracle::kron(q2, q1);
  EXPECT_LT((psi.to_dense() - expected.col(0)).norm(), 1e-15);
}

TEST(RandomProductState, NormalizedAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    EXPECT_NEAR(random_product_state(seed, 6).norm(), 1.0, 1e-12);
  }
  EXPECT_EQ(random_product_state(42, 6).to_dense(),
            random_product_state(42, 6).to_dense());
  EXPECT_NE(random_product_state(42, 6).to_dense(),
            random_product_state(43, 6).to_dense());
}

TEST(StateDump, JsonPairsAndBinaryLayout) {
  const StateVector psi = random_product_state(5, 3);
  const auto j = state_to_json(psi);
  ASSERT_EQ(j.size(), 8u);
  EXPECT_DOUBLE_EQ(j[3][0].get<double>(), psi[3].real());
  EXPECT_DOUBLE_EQ(j[3][1].get<double>(), psi[3].imag());

  const auto path =
      (std::filesystem::temp_directory_path() / "daqc_state_dump.bin").string();
  write_state_binary(psi, path);
  std::ifstream in(path, std::ios::binary);
  std::vector<double> raw(16);
  in.read(reinterpret_cast<char*>(raw.data()), 16 * sizeof(double));
  ASSERT_TRUE(in);
  EXPECT_EQ(raw[6], psi[3].real());
  EXPECT_EQ(raw[7], psi[3].imag());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace daqc
