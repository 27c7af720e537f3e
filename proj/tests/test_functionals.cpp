#include <gtest/gtest.h>

#include <numbers>

#include "htype/errors.hpp"
#include "htype/functionals.hpp"
#include "support.hpp"

namespace htype {
namespace {

constexpr double kPi = std::numbers::pi;

BiradialField one() {
  return BiradialField([](const Jet&, const Jet&) { return Jet(1.0); });
}

BiradialField perturbed(int m, int n, double a) {
  return product(bubble_profile(m, n), linear_combination(1.0, one(), a, dilation_mode_profile()));
}

std::vector<BiradialField> test_profiles(int m, int n) {
  return {bubble_profile(m, n), perturbed(m, n, 0.3), bubble_profile(m, n, 2.0),
          BiradialField([](const Jet& s, const Jet& t) { return exp(-0.5 * s * s - t); }),
          linear_combination(1.0, bubble_profile(m, n), 0.5, product(bubble_profile(m, n), dilation_mode_profile()))};
}

TEST(SharpConstant, ClosedForms) {
  EXPECT_NEAR(sharp_constant(2, 1), kPi, 1e-15);
  EXPECT_GT(sharp_constant(4, 3), 0.0);
  EXPECT_THROW(sharp_constant(2, 2), AdmissibilityError);
}

TEST(SharpConstant, MatchesBubbleQuotient) {
  for (const auto& [m, n] : {std::pair{4, 3}, std::pair{8, 7}, std::pair{4, 1}, std::pair{8, 4}}) {
    const QuotientReport q = fs_quotient(make_rule(m, n, 64), bubble_profile(m, n));
    EXPECT_LE(testing::rel(q.quotient, sharp_constant(m, n)), 1e-6) << m << "," << n;
  }
}

TEST(FsQuotient, TwoOnePins) {
  const QuotientReport q = fs_quotient(make_rule(2, 1, 128), bubble_profile(2, 1));
  EXPECT_LE(testing::rel(q.numerator, kPi * kPi), 1e-7);
  EXPECT_LE(testing::rel(q.params["critical_integral"].get<double>(), kPi * kPi), 1e-7);
  EXPECT_LE(testing::rel(q.quotient, kPi), 1e-6);
  EXPECT_DOUBLE_EQ(q.quotient, q.numerator / q.denominator);
}

TEST(FsQuotient, DilationInvariance) {
  const BiradialRule rule = make_rule(2, 1, 64);
  for (double lambda : {0.5, 2.0}) EXPECT_LE(testing::rel(fs_quotient(rule, bubble_profile(2, 1, lambda)).quotient, kPi), 1e-6);
  const BiradialRule r43 = make_rule(4, 3, 64);
  const double base = fs_quotient(r43, bubble_profile(4, 3)).quotient;
  for (double lambda : {0.5, 2.0}) EXPECT_LE(testing::rel(fs_quotient(r43, bubble_profile(4, 3, lambda)).quotient, base), 1e-6);
}

TEST(FsQuotient, NonExtremalMarginRegression) {
  const double q = fs_quotient(make_rule(2, 1, 64), perturbed(2, 1, 0.3)).quotient;
  EXPECT_GT(q - kPi, 1e-3);
  EXPECT_NEAR(q, 3.1464886048287477, 1e-9);
}

TEST(FsQuotient, ZeroProfileIsDegenerate) {
  const BiradialField zero([](const Jet&, const Jet&) { return Jet(0.0); });
  EXPECT_THROW(fs_quotient(make_rule(2, 1, 16), zero), DegenerateInputError);
  EXPECT_THROW(hardy_quotient(make_rule(2, 1, 16), zero), DegenerateInputError);
}

TEST(FsQuotient, BoundedBelowBySharpConstant) {
  for (const auto& [m, n] : {std::pair{2, 1}, std::pair{4, 3}}) {
    const BiradialRule rule = make_rule(m, n, 64);
    for (const auto& u : test_profiles(m, n)) EXPECT_GE(fs_quotient(rule, u).quotient, sharp_constant(m, n) - 1e-5);
  }
}

TEST(HardyQuotient, EqualityAtBubble) {
  EXPECT_NEAR(hardy_quotient(make_rule(2, 1, 128), bubble_profile(2, 1)).quotient, 1.0, 1e-8);
  EXPECT_LE(testing::rel(hardy_quotient(make_rule(4, 3, 64), bubble_profile(4, 3)).quotient, 8.0), 1e-6);
}

TEST(HardyQuotient, StrictOffTheEqualityCase) {
  for (const auto& [m, n] : {std::pair{2, 1}, std::pair{4, 3}}) {
    const double bound = m * (m + 2.0 * n - 2.0) / 4.0;
    const BiradialRule rule = make_rule(m, n, 64);
    const auto profiles = test_profiles(m, n);
    for (std::size_t k = 0; k < profiles.size(); ++k) {
      const double q = hardy_quotient(rule, profiles[k]).quotient;
      EXPECT_GE(q, bound - 1e-6);
      if (k > 0) EXPECT_GT(q, bound + 1e-3) << k;
    }
  }
}

TEST(SubcriticalQuotient, Examples) {
  const BiradialRule rule = make_rule(2, 1, 128);
  const BiradialField u = bubble_profile(2, 1);
  EXPECT_NEAR(subcritical_quotient(rule, u, 2.0).quotient, 1.0, 1e-8);
  for (double p : {3.9, 3.99, 3.999}) {
    const double closed = kPi * kPi / std::pow(kPi * kPi, 2.0 / p);
    EXPECT_LE(testing::rel(subcritical_quotient(rule, u, p).quotient, closed), 1e-8);
  }
  const BiradialRule r43 = make_rule(4, 3, 64);
  EXPECT_LE(testing::rel(subcritical_quotient(r43, bubble_profile(4, 3), 2.0).quotient, 8.0), 1e-6);
}

TEST(SubcriticalQuotient, RangeIsEnforced) {
  const BiradialRule rule = make_rule(2, 1, 16);
  EXPECT_THROW(subcritical_quotient(rule, bubble_profile(2, 1), 1.9), DomainError);
  EXPECT_THROW(subcritical_quotient(rule, bubble_profile(2, 1), 4.0), DomainError);
  EXPECT_EQ(critical_exponent(2, 1), 4.0);
}

TEST(Moment, ParityAndDilationDirection) {
  const BiradialRule rule = make_rule(2, 1, 128);
  const MomentResult odd = moment(rule, perturbed(2, 1, 0.3), 3.0, 1);
  EXPECT_TRUE(odd.by_parity);
  EXPECT_EQ(odd.value, 0.0);
  const MomentResult u = moment(rule, bubble_profile(2, 1), 2.0, 4);
  EXPECT_FALSE(u.by_parity);
  EXPECT_LE(std::abs(u.value), 1e-8);
  EXPECT_GT(std::abs(moment(rule, perturbed(2, 1, 0.3), 3.0, 4).value), 1e-3);
  EXPECT_THROW(moment(rule, bubble_profile(2, 1), 2.0, 5), DomainError);
}

TEST(OmegaEnergyIdentity, EnergyIdentityAtTwoOne) {
  const BiradialRule rule = make_rule(2, 1, 64);
  for (const auto& u : test_profiles(2, 1)) {
    const CheckReport r = lemma34_check(rule, u);
    EXPECT_TRUE(r.pass) << r.rel_err;
  }
  EXPECT_THROW(lemma34_check(make_rule(4, 3, 16), bubble_profile(4, 3)), DomainError);
}

TEST(SubcriticalSobolev, HoelderConstantFromOwnQuotients) {
  const BiradialRule rule = make_rule(2, 1, 64);
  for (const auto& u : test_profiles(2, 1))
    for (double p : {2.0, 2.5, 3.0}) EXPECT_TRUE(subcritical_sobolev_check(rule, u, p, false).pass) << p;
  const BiradialRule r43 = make_rule(4, 3, 64);
  for (const auto& u : test_profiles(4, 3))
    for (double p : {2.0, 2.2, 2.4}) EXPECT_TRUE(subcritical_sobolev_check(r43, u, p, false).pass) << p;
}

TEST(SubcriticalSobolev, SharpConstantBoundIsAttainedAtTheBubble) {
  for (const auto& [m, n] : {std::pair{2, 1}, std::pair{4, 3}}) {
    const BiradialRule rule = make_rule(m, n, 64);
    const double p = 2.0 + 0.5 * (critical_exponent(m, n) - 2.0);
    for (const auto& u : test_profiles(m, n)) EXPECT_TRUE(subcritical_sobolev_check(rule, u, p, true, 1e-6).pass);
    const CheckReport at_u = subcritical_sobolev_check(rule, bubble_profile(m, n), p, true, 1e-6);
    EXPECT_LE(testing::rel(at_u.computed, at_u.expected), 1e-6);
  }
}

TEST(QuotientReport, JsonFields) {
  const nlohmann::json j = to_json(hardy_quotient(make_rule(2, 1, 16), bubble_profile(2, 1)));
  for (const char* key : {"kind", "numerator", "denominator", "quotient", "params"}) EXPECT_TRUE(j.contains(key)) << key;
}

}  // namespace
}  // namespace htype
