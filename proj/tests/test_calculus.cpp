#include <gtest/gtest.h>

#include "htype/calculus.hpp"
#include "htype/closedform.hpp"
#include "htype/errors.hpp"
#include "support.hpp"

namespace htype {
namespace {

// Smooth non-biradial test field exercising every coordinate.
ScalarField test_field(int dim) {
  return ScalarField([dim](std::span<const Jet> c) {
    Jet acc(0.0);
    for (int i = 0; i < dim; ++i) acc += (0.3 + 0.1 * i) * c[i] * c[(i + 1) % dim];
    return exp(-0.1 * acc) * cos(c[0] - 0.5 * c[dim - 1]);
  });
}

EuclidJet finite_differences(const ScalarField& u, const GroupPoint& xi, double h) {
  auto c = xi.coords();
  const int d = static_cast<int>(c.size());
  auto f = [&](const std::vector<double>& y) { return u(GroupPoint::from_coords(y, static_cast<int>(xi.x.size()), static_cast<int>(xi.t.size()))); };
  EuclidJet r;
  r.value = f(c);
  r.gradient.resize(d);
  r.hessian.resize(d, d);
  for (int i = 0; i < d; ++i) {
    auto p = c, m = c;
    p[i] += h;
    m[i] -= h;
    r.gradient(i) = (f(p) - f(m)) / (2 * h);
    for (int j = 0; j < d; ++j) {
      auto pp = c, pm = c, mp = c, mm = c;
      pp[i] += h; pp[j] += h;
      pm[i] += h; pm[j] -= h;
      mp[i] -= h; mp[j] += h;
      mm[i] -= h; mm[j] -= h;
      r.hessian(i, j) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
    }
  }
  return r;
}

TEST(EuclidDerivatives, Quadratic) {
  const ScalarField u([](std::span<const Jet> c) { return c[0] * c[0]; });
  const EuclidJet d = euclid_derivatives(u, {{1.5, -1}, {2}});
  EXPECT_DOUBLE_EQ(d.value, 2.25);
  EXPECT_DOUBLE_EQ(d.gradient(0), 3.0);
  EXPECT_EQ(d.gradient.tail(2).squaredNorm(), 0.0);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  h(0, 0) = 2.0;
  EXPECT_EQ(d.hessian, h);
}

TEST(EuclidDerivatives, Constant) {
  const ScalarField u([](std::span<const Jet>) { return Jet(4.0); });
  const EuclidJet d = euclid_derivatives(u, {{1, 2, 3, 4}, {1, 2, 3}});
  EXPECT_EQ(d.gradient.squaredNorm(), 0.0);
  EXPECT_EQ(d.hessian.squaredNorm(), 0.0);
}

TEST(EuclidDerivatives, BubbleAgreesWithFiniteDifferences) {
  const HTypeStructure s = construct_structure(4, 3);
  const ScalarField u = bubble_field(s);
  for (const auto& xi : testing::points(s, 10, 21, 2.0)) {
    const EuclidJet d = euclid_derivatives(u, xi);
    const EuclidJet f = finite_differences(u, xi, 1e-4);
    EXPECT_LE((d.gradient - f.gradient).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_LE((d.hessian - f.hessian).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_EQ(d.hessian, d.hessian.transpose());
  }
}

TEST(EuclidDerivatives, NonFiniteIsReportedNotThrown) {
  const ScalarField u([](std::span<const Jet> c) { return log(c[0]); });
  const EuclidJet d = euclid_derivatives(u, {{-1, 0}, {0}});
  EXPECT_FALSE(d.finite);
  EXPECT_FALSE(d.diagnostic.empty());
}

TEST(HorizontalGradient, CenterCoordinate) {
  const HTypeStructure s = construct_structure(2, 1);
  const ScalarField u([](std::span<const Jet> c) { return c[2]; });
  const Eigen::VectorXd g = horizontal_gradient(s, u, {{1, 0}, {0}});
  EXPECT_DOUBLE_EQ(g(0), 0.0);
  EXPECT_DOUBLE_EQ(g(1), 0.5);
}

TEST(HorizontalGradient, EuclideanForXOnlyFieldsAndAtXZero) {
  const HTypeStructure s = construct_structure(4, 3);
  const ScalarField xonly([](std::span<const Jet> c) { return sin(c[0]) * c[3] + c[1] * c[2]; });
  const ScalarField any = test_field(7);
  for (const auto& xi : testing::points(s, 10, 4)) {
    const EuclidJet d = euclid_derivatives(xonly, xi);
    EXPECT_LE((horizontal_gradient(s, xonly, xi) - d.gradient.head(4)).cwiseAbs().maxCoeff(), 1e-15);
    GroupPoint z = xi;
    std::fill(z.x.begin(), z.x.end(), 0.0);
    EXPECT_EQ(horizontal_gradient(s, any, z), euclid_derivatives(any, z).gradient.head(4));
  }
}

TEST(Sublaplacian, Examples) {
  const HTypeStructure s = construct_structure(2, 1);
  EXPECT_NEAR(sublaplacian(s, bubble_field(s), GroupPoint::identity(2, 1)), -1.0, 1e-15);
  const HTypeStructure s43 = construct_structure(4, 3);
  const ScalarField x2([](std::span<const Jet> c) { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; });
  const ScalarField t1([](std::span<const Jet> c) { return c[4]; });
  for (const auto& xi : testing::points(s43, 5, 8)) {
    EXPECT_NEAR(sublaplacian(s43, x2, xi), 8.0, 1e-13);
    EXPECT_EQ(sublaplacian(s43, t1, xi), 0.0);
  }
}

class CalculusProperties : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(CalculusProperties, TraceOfCompositionIsSublaplacian) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  const ScalarField u = test_field(m + n);
  for (const auto& xi : testing::points(s, 25, 31)) {
    const EuclidJet d = euclid_derivatives(u, xi);
    const double lap = sublaplacian(s, d, xi);
    EXPECT_NEAR(horizontal_hessian(s, d, xi).trace(), lap, 1e-10 * std::max(1.0, std::abs(lap)));
  }
}

TEST_P(CalculusProperties, BracketRelation) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  const ScalarField u = test_field(m + n);
  for (const auto& xi : testing::points(s, 25, 32)) {
    const EuclidJet d = euclid_derivatives(u, xi);
    const Eigen::MatrixXd h = horizontal_hessian(s, d, xi);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double expected = 0.0;
        for (int r = 0; r < n; ++r) expected += s.mat(r)(i, j) * d.gradient(m + r);
        EXPECT_NEAR(h(i, j) - h(j, i), expected, 1e-9);
      }
  }
}

TEST_P(CalculusProperties, LeftInvariance) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  const ScalarField u = test_field(m + n);
  const auto etas = testing::points(s, 10, 40, 2.0);
  const auto xis = testing::points(s, 10, 41, 2.0);
  for (std::size_t k = 0; k < etas.size(); ++k) {
    const GroupPoint eta = etas[k];
    const ScalarField translated([&, eta](std::span<const Jet> c) {
      const auto moved = left_translate<Jet>(s, eta, c);
      return u(std::span<const Jet>(moved));
    });
    const Eigen::VectorXd lhs = horizontal_gradient(s, translated, xis[k]);
    const Eigen::VectorXd rhs = horizontal_gradient(s, u, multiply(s, eta, xis[k]));
    for (int j = 0; j < m; ++j) EXPECT_NEAR(lhs(j), rhs(j), 1e-10 * std::max(1.0, std::abs(rhs(j))));
  }
}

TEST_P(CalculusProperties, DilationHomogeneity) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  const ScalarField u = test_field(m + n);
  const double lambda = 1.7;
  const ScalarField dilated([&, lambda](std::span<const Jet> c) {
    std::vector<Jet> y(c.begin(), c.end());
    for (int i = 0; i < m + n; ++i) y[i] = y[i] * (i < m ? lambda : lambda * lambda);
    return u(std::span<const Jet>(y));
  });
  for (const auto& xi : testing::points(s, 20, 42, 2.0)) {
    const double lhs = sublaplacian(s, dilated, xi);
    const double rhs = lambda * lambda * sublaplacian(s, u, dilate(lambda, xi));
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_P(CalculusProperties, AgreesWithFiniteDifferences) {
  const auto [m, n] = GetParam();
  const HTypeStructure s = construct_structure(m, n);
  const ScalarField u = test_field(m + n);
  for (const auto& xi : testing::points(s, 100, 43, 1.5)) {
    const EuclidJet f = finite_differences(u, xi, 1e-4);
    const Eigen::VectorXd g = horizontal_gradient(s, u, xi);
    const Eigen::VectorXd gf = horizontal_gradient(s, f, xi);
    EXPECT_LE((g - gf).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_NEAR(sublaplacian(s, u, xi), sublaplacian(s, f, xi), 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(Calculus, CalculusProperties,
                         ::testing::Values(std::pair{2, 1}, std::pair{4, 3}, std::pair{8, 7}));

}  // namespace
}  // namespace htype
