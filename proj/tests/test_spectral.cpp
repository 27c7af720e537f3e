#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "htype/closedform.hpp"
#include "htype/errors.hpp"
#include "htype/functionals.hpp"
#include "htype/spectral.hpp"
#include "support.hpp"

namespace htype {
namespace {

Eigen::MatrixXd random_spd(int k, std::uint64_t seed) {
  cli::Uniform draw(seed);
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = draw(-1.0, 1.0);
  return g * g.transpose() + Eigen::MatrixXd::Identity(k, k);
}

Eigen::MatrixXd random_symmetric(int k, std::uint64_t seed) {
  cli::Uniform draw(seed);
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) g(i, j) = g(j, i) = draw(-2.0, 2.0);
  return g;
}

TEST(Gevp, IdentityAndDiagonal) {
  const GevpResult id = solve_gevp(Eigen::MatrixXd::Identity(4, 4), Eigen::MatrixXd::Identity(4, 4));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(id.values(i), 1.0, 1e-15);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 1.0;
  const GevpResult d = solve_gevp(a, Eigen::MatrixXd::Identity(2, 2));
  EXPECT_NEAR(d.values(0), 1.0, 1e-15);
  EXPECT_NEAR(d.values(1), 3.0, 1e-15);
  EXPECT_NEAR(std::abs(d.vectors(1, 0)), 1.0, 1e-15);
}

TEST(Gevp, RandomPencilMatchesIndependentSolver) {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const Eigen::MatrixXd a = random_symmetric(3, seed), b = random_spd(3, seed + 100);
    const GevpResult r = solve_gevp(a, b);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ref(a, b);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(r.values(i), ref.eigenvalues()(i), 1e-10 * (1 + std::abs(ref.eigenvalues()(i))));
      EXPECT_NEAR((a - r.values(i) * b).determinant(), 0.0, 1e-10 * a.norm() * b.norm() * b.norm());
    }
    const Eigen::MatrixXd gram = r.vectors.transpose() * b * r.vectors;
    EXPECT_LE((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((a * r.vectors - b * r.vectors * r.values.asDiagonal()).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(Gevp, JacobiOnLargerMatrix) {
  const Eigen::MatrixXd c = random_symmetric(12, 9);
  const GevpResult r = jacobi_eigen(c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(c);
  for (int i = 0; i < 12; ++i) EXPECT_NEAR(r.values(i), ref.eigenvalues()(i), 1e-12);
  for (int i = 1; i < 12; ++i) EXPECT_LE(r.values(i - 1), r.values(i));
  EXPECT_LE((r.vectors.transpose() * r.vectors - Eigen::MatrixXd::Identity(12, 12)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Gevp, NonPositiveDefiniteMassIsRejected) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(3, 3);
  b(2, 2) = -1.0;
  EXPECT_THROW(cholesky(b), FactorizationError);
  EXPECT_THROW(solve_gevp(Eigen::MatrixXd::Identity(3, 3), b), FactorizationError);
  EXPECT_THROW(solve_gevp(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(2, 2)), ShapeError);
}

TEST(Gevp, ConditionNumber) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(2, 2);
  b(1, 1) = 1e-4;
  EXPECT_NEAR(condition_number(b), 1e4, 1e-8);
}

TEST(Basis, OrderingAndValidation) {
  const GalerkinBasis b = default_basis(2, 1, 6);
  ASSERT_EQ(b.size(), 6u);
  EXPECT_EQ(b.degrees[0], (std::pair{0, 0}));
  EXPECT_EQ(b.degrees[1], (std::pair{1, 0}));
  EXPECT_EQ(b.degrees[2], (std::pair{0, 1}));
  EXPECT_EQ(b.degrees[3], (std::pair{2, 0}));
  EXPECT_FALSE(b.recipe.empty());
  EXPECT_THROW(default_basis(2, 1, 0), DomainError);
  const BiradialField u = bubble_profile(2, 1);
  const BiradialField w = product(u, dilation_mode_profile());
  for (double s : {0.1, 1.0, 4.0})
    for (double tau : {0.0, 0.5, 3.0}) {
      EXPECT_NEAR(b.functions[0](s, tau), u(s, tau), 1e-15);
      EXPECT_NEAR(b.functions[1](s, tau), w(s, tau), 1e-15);
    }
}

TEST(Basis, DilationModeIsInTheSpan) {
  const BiradialRule rule = make_rule(2, 1, 64);
  const BiradialField f = product(bubble_profile(2, 1), dilation_mode_profile());
  for (int K : {6, 10, 15}) EXPECT_LT(projection_residual(rule, default_basis(2, 1, K), f), 1e-3) << K;
}

TEST(Assembly, SymmetricWithRayleighQuotientOfU) {
  const BiradialRule rule = make_rule(2, 1, 128);
  const Assembly a = assemble(rule, default_basis(2, 1, 1));
  EXPECT_NEAR(a.A(0, 0) / a.B(0, 0), 1.0, 1e-8);
  const Assembly b = assemble(make_rule(4, 3, 48), default_basis(4, 3, 10));
  EXPECT_LE(b.asymmetry, 1e-13 * b.A.cwiseAbs().maxCoeff());
}

TEST(Assembly, MassWeight) {
  EXPECT_DOUBLE_EQ(mass_weight(1.0, 0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(mass_weight(1.0, 2.0, 0.0), 0.25);
  EXPECT_DOUBLE_EQ(mass_weight(2.0, 0.0, 0.0), 4.0);
}

struct SpectrumCase {
  int m, n;
  double mu1, mu2;
};

void PrintTo(const SpectrumCase& c, std::ostream* os) { *os << "(" << c.m << "," << c.n << ")"; }

class SpectrumTest : public ::testing::TestWithParam<SpectrumCase> {};

TEST_P(SpectrumTest, LowestEigenvaluesAndStructure) {
  const auto c = GetParam();
  const HTypeStructure s = construct_structure(c.m, c.n);
  const SpectrumResult r = spectrum(s, 15, 64);
  EXPECT_LE(testing::rel(r.eigenvalues[0], c.mu1), 1e-3);
  EXPECT_LE(testing::rel(r.eigenvalues[1], c.mu2), 1e-2);
  EXPECT_GE(r.eigenvalues[0], c.mu1 - 1e-4);
  EXPECT_GE(r.eigenvalues[1], c.mu2 - 1e-4);
  EXPECT_LT(r.off_u_mass, 1e-6);
  EXPECT_LT(r.b_orthogonality, 1e-10);
  EXPECT_LT(r.condition, 1e12);
  EXPECT_GE(r.mu2_multiplicity, 1);
  const SpectrumResult r10 = spectrum(s, 10, 64);
  for (int i = 0; i < 2; ++i) EXPECT_LE(r.eigenvalues[i], r10.eigenvalues[i] * (1 + 1e-12));
}

INSTANTIATE_TEST_SUITE_P(Spectral, SpectrumTest,
                         ::testing::Values(SpectrumCase{2, 1, 1.0, 3.0}, SpectrumCase{4, 3, 8.0, 12.0},
                                           SpectrumCase{8, 7, 40.0, 48.0}),
                         [](const ::testing::TestParamInfo<SpectrumCase>& info) {
                           return "m" + std::to_string(info.param.m) + "n" + std::to_string(info.param.n);
                         });

TEST(Spectrum, DilatedBasisAgrees) {
  const HTypeStructure s = construct_structure(2, 1);
  const SpectrumResult a = spectrum(s, 15, 128), b = spectrum(s, 15, 128, 2.0, 0.5);
  EXPECT_LE(testing::rel(a.eigenvalues[0], b.eigenvalues[0]), 1e-6);
  EXPECT_LE(testing::rel(a.eigenvalues[1], b.eigenvalues[1]), 1e-6);
}

TEST(Spectrum, DuplicatedBasisFunctionIsIllConditioned) {
  GalerkinBasis b = default_basis(2, 1, 2);
  b.functions.push_back(b.functions[0]);
  b.degrees.push_back(b.degrees[0]);
  try {
    spectrum(make_rule(2, 1, 32), b);
    FAIL();
  } catch (const ConditioningError& e) {
    EXPECT_GE(e.condition(), 1e12);
  }
}

TEST(Spectrum, JsonFields) {
  const nlohmann::json j = to_json(spectrum(construct_structure(2, 1), 4, 32));
  for (const char* key : {"eigenvalues", "condition", "off_u_mass", "K", "nodes"}) EXPECT_TRUE(j.contains(key)) << key;
}

}  // namespace
}  // namespace htype
