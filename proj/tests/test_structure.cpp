#include <gtest/gtest.h>

#include "htype/errors.hpp"
#include "htype/structure.hpp"
#include "support.hpp"

namespace htype {
namespace {

TEST(RadonHurwitz, KnownValues) {
  EXPECT_EQ(radon_hurwitz(8), 8);
  EXPECT_EQ(radon_hurwitz(12), 4);
  EXPECT_EQ(radon_hurwitz(1), 1);
  EXPECT_EQ(radon_hurwitz(2), 2);
  EXPECT_EQ(radon_hurwitz(4), 4);
  EXPECT_EQ(radon_hurwitz(16), 9);
  EXPECT_EQ(radon_hurwitz(6), 2);
}

TEST(RadonHurwitz, RejectsNonPositive) { EXPECT_THROW(radon_hurwitz(0), DomainError); }

TEST(ConstructStructure, TwoOneIsTheSymplecticForm) {
  const HTypeStructure s = construct_structure(2, 1);
  ASSERT_EQ(s.n(), 1);
  Eigen::MatrixXd expected(2, 2);
  expected << 0, 1, -1, 0;
  EXPECT_EQ(s.mat(0), expected);
  EXPECT_EQ(s.Q(), 4);
}

TEST(ConstructStructure, AdmissibilityErrorNamesRho) {
  try {
    construct_structure(2, 2);
    FAIL() << "expected AdmissibilityError";
  } catch (const AdmissibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("rho(2) = 2"), std::string::npos);
  }
  EXPECT_THROW(construct_structure(3, 1), AdmissibilityError);
  EXPECT_THROW(construct_structure(8, 8), AdmissibilityError);
}

TEST(ConstructStructure, RejectsAbelianCase) { EXPECT_THROW(construct_structure(4, 0), DegenerateStructureError); }

TEST(ConstructStructure, DeterministicIntegerEntries) {
  const HTypeStructure a = construct_structure(8, 7);
  const HTypeStructure b = construct_structure(8, 7);
  ASSERT_TRUE(a.integral());
  for (int j = 0; j < a.n(); ++j) {
    EXPECT_EQ(a.mat(j), b.mat(j));
    EXPECT_TRUE((a.mat(j).array().abs() <= 1.0).all());
  }
}

class AdmissiblePairs : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(AdmissiblePairs, ConditionsHoldExactly) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  for (const auto& r : verify_structure_exact(s)) {
    EXPECT_TRUE(r.pass) << r.check;
    EXPECT_EQ(r.computed, 0.0);
  }
  for (const auto& r : verify_structure(s, 1e-12)) EXPECT_TRUE(r.pass) << r.check;
}

TEST_P(AdmissiblePairs, JIsometryAndSkewPairing) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  cli::Uniform draw(1234);
  std::vector<double> z(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(m));
  for (int k = 0; k < 100; ++k) {
    for (auto& e : z) e = draw(-2.0, 2.0);
    for (auto& e : v) e = draw(-2.0, 2.0);
    const Eigen::VectorXd jz = j_map(s, z, v);
    const Eigen::Map<const Eigen::VectorXd> vv(v.data(), m), zz(z.data(), n);
    EXPECT_LE(testing::rel(jz.squaredNorm(), zz.squaredNorm() * vv.squaredNorm()), 1e-12);
    EXPECT_LE(std::abs(vv.dot(jz)), 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Structure, AdmissiblePairs,
                         ::testing::Values(std::pair{2, 1}, std::pair{4, 1}, std::pair{4, 2}, std::pair{4, 3},
                                           std::pair{8, 4}, std::pair{8, 7}, std::pair{12, 3}, std::pair{16, 8},
                                           std::pair{32, 9}, std::pair{64, 11}));

TEST(VerifyStructure, IdentityMatrixFailsSkewSymmetry) {
  const HTypeStructure s(2, {Eigen::MatrixXd::Identity(2, 2)});
  const auto reports = verify_structure(s, 1e-12);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].check, "skew_symmetry");
  EXPECT_FALSE(reports[0].pass);
  EXPECT_DOUBLE_EQ(reports[0].abs_err, 2.0);
  EXPECT_TRUE(reports[1].pass);
}

TEST(VerifyStructure, DetectsCommutingPair) {
  Eigen::MatrixXd e(2, 2);
  e << 0, 1, -1, 0;
  const HTypeStructure s(2, {e, e});
  EXPECT_FALSE(verify_structure(s, 1e-12)[2].pass);
}

TEST(JMap, HandExpansion) {
  const HTypeStructure s = construct_structure(2, 1);
  const std::vector<double> z{1.0}, v{1.0, 0.0};
  const Eigen::VectorXd r = j_map(s, z, v);
  EXPECT_DOUBLE_EQ(r(0), 0.0);
  EXPECT_DOUBLE_EQ(r(1), 1.0);
  const std::vector<double> zero{0.0};
  EXPECT_EQ(j_map(s, zero, v).squaredNorm(), 0.0);
}

TEST(JMap, ShapeMismatchThrows) {
  const HTypeStructure s = construct_structure(4, 3);
  const std::vector<double> z{1.0}, v{1.0, 0.0, 0.0, 0.0};
  EXPECT_THROW(j_map(s, z, v), ShapeError);
}

TEST(StructureJson, RoundTrip) {
  const HTypeStructure s = construct_structure(4, 3);
  const nlohmann::json j = structure_to_json(s);
  EXPECT_EQ(j.at("m"), 4);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("mats").size(), 3u);
  const HTypeStructure back = structure_from_json(j);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(back.mat(k), s.mat(k));
}

TEST(StructureJson, GoldenTwoOne) {
  EXPECT_EQ(structure_to_json(construct_structure(2, 1)).dump(), R"({"m":2,"mats":[[[0,1],[-1,0]]],"n":1})");
}

}  // namespace
}  // namespace htype
