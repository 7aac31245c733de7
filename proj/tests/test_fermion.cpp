// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "daqc/errors.hpp"
#include "daqc/fermion.hpp"
#include "dense_oracle.hpp"

namespace daqc {
namespace {

using oracle::Mat;
using oracle::max_abs;
using oracle::sum_matrix;

std::size_t count_type(const PauliSum& h, Pauli letter, std::size_t weight) {
  return static_cast<std::size_t>(std::count_if(
      h.terms().begin(), h.terms().end(), [&](const auto& kv) {
        const auto support = kv.first.support();
        return support.size() == weight &&
               std::all_of(support.begin(), support.end(),
                           [&](std::size_t q) { return kv.first.at(q) == letter; });
      }));
}

TEST(SpinOrbital, UpOnFirstHalfDownOnSecond) {
  EXPECT_EQ(spin_orbital_to_qubit(1, Spin::Up, 3), 1u);
  EXPECT_EQ(spin_orbital_to_qubit(1, Spin::Down, 3), 4u);
  EXPECT_EQ(spin_orbital_to_qubit(3, Spin::Down, 3), 6u);
  EXPECT_THROW(spin_orbital_to_qubit(0, Spin::Up, 3), IndexError);
  EXPECT_THROW(spin_orbital_to_qubit(4, Spin::Up, 3), IndexError);
}

TEST(JordanWigner, FirstModeHasNoString) {
  const PauliSum c = jw_creation(1, 3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.coefficient(PauliString("XII")), Complex(0.5, 0.0));
  EXPECT_EQ(c.coefficient(PauliString("YII")), Complex(0.0, 0.5));
}

TEST(JordanWigner, ThirdModeCarriesZOnBothLowerQubits) {
  // sigma^+_3 Z_2 Z_1 on four qubits.
  PauliSum expected(4);
  expected.add(0.5, PauliString("ZZXI"));
  expected.add(Complex{0.0, 0.5}, PauliString("ZZYI"));
  EXPECT_EQ(jw_creation(3, 4), expected);
}

TEST(JordanWigner, IndexOutOfRange) {
  EXPECT_THROW(jw_creation(0, 4), IndexError);
  EXPECT_THROW(jw_creation(5, 4), IndexError);
}

TEST(JordanWigner, MatchesOccupationBasisFermions) {
  for (std::size_t n_q = 1; n_q <= 5; ++n_q) {
    for (std::size_t j = 1; j <= n_q; ++j) {
      EXPECT_LT(max_abs(to_dense(jw_creation(j, n_q)) -
                        oracle::fermion_creation(j, n_q)),
                1e-15)
          << "mode " << j << " of " << n_q;
    }
  }
}

TEST(JordanWigner, CanonicalAnticommutationRelations) {
  for (std::size_t n_q = 1; n_q <= 6; ++n_q) {
    const Mat one = oracle::identity(n_q);
    std::vector<Mat> c;
    std::vector<Mat> cd;
    for (std::size_t j = 1; j <= n_q; ++j) {
      c.push_back(to_dense(jw_annihilation(j, n_q)));
      cd.push_back(to_dense(jw_creation(j, n_q)));
    }
    for (std::size_t i = 0; i < n_q; ++i) {
      for (std::size_t j = 0; j < n_q; ++j) {
        const Mat mixed = c[i] * cd[j] + cd[j] * c[i];
        EXPECT_LT(max_abs(mixed - (i == j ? one : Mat::Zero(one.rows(), one.cols()))),
                  1e-12);
        EXPECT_LT(max_abs(c[i] * c[j] + c[j] * c[i]), 1e-12);
        EXPECT_LT(max_abs(cd[i] * cd[j] + cd[j] * cd[i]), 1e-12);
      }
    }
  }
}

TEST(JordanWigner, NumberOperatorIsHalfOnePlusZ) {
  const std::size_t n_q = 5;
  for (std::size_t j = 1; j <= n_q; ++j) {
    const PauliSum number = jw_creation(j, n_q) * jw_annihilation(j, n_q);
    PauliSum expected = PauliSum::identity(n_q, 0.5);
    expected.add(0.5, PauliString::single(n_q, j, Pauli::Z));
    EXPECT_LT(max_abs(to_dense(number) - to_dense(expected)), 1e-12);
  }
}

TEST(JordanWigner, AdjacentHoppingIsHalfXXPlusYY) {
  const std::size_t n_q = 6;
  for (std::size_t j = 1; j < n_q; ++j) {
    const PauliSum hop = jw_creation(j, n_q) * jw_annihilation(j + 1, n_q) +
                         jw_creation(j + 1, n_q) * jw_annihilation(j, n_q);
    PauliSum expected(n_q);
    expected.add(0.5, PauliString::pair(n_q, j, Pauli::X, j + 1, Pauli::X));
    expected.add(0.5, PauliString::pair(n_q, j, Pauli::Y, j + 1, Pauli::Y));
    EXPECT_LT(max_abs(to_dense(hop) - to_dense(expected)), 1e-12);
    EXPECT_EQ(hop.pruned(1e-15), expected);
  }
}

TEST(FermiHubbard, SingleSiteHasNoHopping) {
  const FermiHubbardParams p{1, 3.7, 1.2, 0.4};
  const PauliSum h = build_fh_qubit_hamiltonian(p);
  PauliSum expected(2);
  const double z = 0.5 * (0.5 * p.epsilon + p.mu);
  expected.add(z, PauliString("ZI"));
  expected.add(z, PauliString("IZ"));
  expected.add(0.25 * p.epsilon, PauliString("ZZ"));
  EXPECT_EQ(h.terms(), expected.terms());
}

TEST(FermiHubbard, ThreeSiteTermCounts) {
  const PauliSum h = build_fh_qubit_hamiltonian({3, 1.0, 1.0, 0.5});
  EXPECT_EQ(h.n_qubits(), 6u);
  EXPECT_EQ(count_type(h, Pauli::Z, 1), 6u);
  EXPECT_EQ(count_type(h, Pauli::Z, 2), 3u);
  EXPECT_EQ(count_type(h, Pauli::X, 2), 4u);
  EXPECT_EQ(count_type(h, Pauli::Y, 2), 4u);
  EXPECT_EQ(h.size(), 17u);
  // Open boundaries: nothing links n to n+1 or 2n to 1.
  EXPECT_EQ(h.coefficient(PauliString("IIXXII")), Complex{});
  EXPECT_EQ(h.coefficient(PauliString("XIIIIX")), Complex{});
}

TEST(FermiHubbard, ClosedFormEqualsJordanWignerOfFermionicHamiltonian) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FermiHubbardParams p{n, 0.8, 1.7, -0.3};
    const PauliSum closed = build_fh_qubit_hamiltonian(p);
    const PauliSum jw = jw_transform(fermi_hubbard_fermion_terms(p), n);
    const Mat shift = closed.identity_shift() * oracle::identity(2 * n);
    EXPECT_LT(max_abs(to_dense(jw) - (to_dense(closed) + shift)), 1e-12)
        << "n = " << n;
  }
}

TEST(FermiHubbard, SpectrumMatchesOccupationBasisDiagonalization) {
  const FermiHubbardParams p{2, 1.0, 2.5, 0.3};
  const std::size_t n = p.n;
  const std::size_t n_q = 2 * n;
  auto cd = [&](std::size_t mode) { return oracle::fermion_creation(mode, n_q); };
  auto num = [&](std::size_t mode) { return Mat(cd(mode) * cd(mode).adjoint()); };
  const auto dim = Eigen::Index{1} << n_q;
  Mat h = Mat::Zero(dim, dim);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t off : {std::size_t{0}, n}) {
      h += p.lambda * (cd(j + off) * cd(j + 1 + off).adjoint() +
                       cd(j + 1 + off) * cd(j + off).adjoint());
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    h += p.epsilon * num(j) * num(j + n);
    h += p.mu * (num(j) + num(j + n));
  }
  const PauliSum hq = build_fh_qubit_hamiltonian(p);
  Eigen::SelfAdjointEigenSolver<Mat> fermionic(h);
  Eigen::SelfAdjointEigenSolver<Mat> qubit(to_dense(hq));
  const Eigen::VectorXd shifted =
      qubit.eigenvalues().array() + hq.identity_shift();
  EXPECT_LT((fermionic.eigenvalues() - shifted).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FermiHubbard, ConservesMagnetization) {
  const PauliSum h = build_fh_qubit_hamiltonian({3, 1.0, 1.0, 0.5});
  PauliSum total(6);
  for (std::size_t q = 1; q <= 6; ++q) {
    total.add(1.0, PauliString::single(6, q, Pauli::Z));
  }
  EXPECT_TRUE(commutes(h, total));
}

TEST(FermiHubbard, RejectsZeroSites) {
  EXPECT_THROW(build_fh_qubit_hamiltonian({0, 1.0, 1.0, 0.5}), ValidationError);
}

TEST(SplitTerms, ThreeSiteZZPairsAreRungs) {
  const auto f = split_terms(build_fh_qubit_hamiltonian({3, 1.0, 1.0, 0.5}));
  ASSERT_EQ(f.zz.size(), 3u);
  for (std::size_t j = 1; j <= 3; ++j) {
    EXPECT_NE(f.zz.coefficient(PauliString::pair(6, j, Pauli::Z, j + 3, Pauli::Z)),
              Complex{});
  }
  EXPECT_EQ(f.z.size(), 6u);
  EXPECT_EQ(f.xx.size(), 4u);
  EXPECT_EQ(f.yy.size(), 4u);
}

TEST(SplitTerms, PartsSumToInput) {
  const PauliSum h = build_ladder_hamiltonian({3, 0.3, 0.7, 1.1, -0.4});
  const auto f = split_terms(h);
  EXPECT_EQ((f.z + f.zz + f.xx + f.yy).terms(), h.terms());
}

TEST(SplitTerms, EmptyGivesFourEmptySums) {
  const auto f = split_terms(PauliSum(4));
  EXPECT_TRUE(f.z.empty());
  EXPECT_TRUE(f.zz.empty());
  EXPECT_TRUE(f.xx.empty());
  EXPECT_TRUE(f.yy.empty());
}

TEST(SplitTerms, LadderRungXYLandsInXX) {
  const auto f = split_terms(build_ladder_hamiltonian({3, 0.5, 1.0, 0.7, 1.0}));
  for (std::size_t j = 1; j <= 3; ++j) {
    EXPECT_EQ(f.xx.coefficient(PauliString::pair(6, j, Pauli::X, j + 3, Pauli::X)),
              Complex(0.7, 0.0));
  }
  EXPECT_EQ(f.xx.size(), 7u);
}

TEST(SplitTerms, UnclassifiableTermIsNamed) {
  PauliSum h(3);
  h.add(1.0, PauliString("XZI"));
  try {
    split_terms(h);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("XZI"), std::string::npos);
  }
  PauliSum three(3);
  three.add(1.0, PauliString("ZZZ"));
  EXPECT_THROW(split_terms(three), ValidationError);
}

TEST(Ladder, ReducesToHubbardAtZeroRungCoupling) {
  const FermiHubbardParams fh{3, 0.9, 1.4, 0.35};
  const PauliSum ladder =
      build_ladder_hamiltonian(LadderParams::from_fermi_hubbard(fh));
  EXPECT_EQ(ladder.terms(), build_fh_qubit_hamiltonian(fh).terms());
}

TEST(Ladder, SingleRungTermCounts) {
  const PauliSum h = build_ladder_hamiltonian({1, 0.5, 1.0, 0.3, 2.0});
  EXPECT_EQ(count_type(h, Pauli::Z, 1), 2u);
  EXPECT_EQ(count_type(h, Pauli::Z, 2), 1u);
  EXPECT_EQ(count_type(h, Pauli::X, 2), 1u);
  EXPECT_EQ(count_type(h, Pauli::Y, 2), 1u);
}

TEST(Ladder, TwoRungsHermitianAndConserving) {
  const PauliSum h = build_ladder_hamiltonian({2, 0.4, 0.8, 1.0, 0.6});
  EXPECT_TRUE(h.is_hermitian());
  PauliSum total(4);
  for (std::size_t q = 1; q <= 4; ++q) {
    total.add(1.0, PauliString::single(4, q, Pauli::Z));
  }
  const Mat a = to_dense(h);
  const Mat b = to_dense(total);
  EXPECT_LT(max_abs(a * b - b * a), 1e-12);
  EXPECT_LT(max_abs(a - a.adjoint()), 1e-15);
}

TEST(ModelSpecJson, ParsesBothModels) {
  auto fh = nlohmann::json::parse(
      R"({"model": "fh", "n": 3, "lambda": 1, "epsilon": 2, "mu": 0.5})")
                .get<ModelSpec>();
  EXPECT_EQ(fh.kind, ModelSpec::Kind::FermiHubbard);
  EXPECT_EQ(fh.fh.n, 3u);
  EXPECT_DOUBLE_EQ(fh.fh.epsilon, 2.0);

  auto ladder = nlohmann::json::parse(
      R"({"model": "ladder", "n": 2, "lambda": 1, "epsilon": 2, "J": 0.5, "delta": 0.1})")
                    .get<ModelSpec>();
  EXPECT_EQ(ladder.kind, ModelSpec::Kind::Ladder);
  EXPECT_DOUBLE_EQ(ladder.ladder.J, 0.5);
  EXPECT_EQ(nlohmann::json(ladder).get<ModelSpec>().hamiltonian(),
            ladder.hamiltonian());

  EXPECT_THROW(nlohmann::json::parse(R"({"model": "tj", "n": 2})").get<ModelSpec>(),
               ValidationError);
}

}  // namespace
}  // namespace daqc
