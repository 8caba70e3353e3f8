/*
 * Copyright 2026 The otplab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "otplab/infotheory.h"

#include <gtest/gtest.h>

#include <cmath>

#include "otplab/errors.h"

namespace otplab {
namespace {

// Reference values computed to 30 digits with mpmath.
constexpr double kH011 = 0.499915958164528;          // h(0.11)
constexpr double kKeyMi09 = 0.531004406410719;       // 1 - h(0.9)
constexpr double kNotp09 = 1.062008812821438;        // 2 - 2 h(0.9)
constexpr double kOntic075 = 1.188721875540867;      // 2 - h(3/4)
constexpr double kMuStar = 0.889972135561640;        // h(mu*) = 1/2

TEST(EntropyTest, BinaryEntropyValues) {
  EXPECT_EQ(BinaryEntropy(0.0), 0.0);
  EXPECT_EQ(BinaryEntropy(1.0), 0.0);
  EXPECT_EQ(BinaryEntropy(0.5), 1.0);
  EXPECT_NEAR(BinaryEntropy(0.11), kH011, 1e-15);
  EXPECT_NEAR(BinaryEntropy(0.89), kH011, 1e-15);
  EXPECT_THROW(BinaryEntropy(-0.1), DomainError);
  EXPECT_THROW(BinaryEntropy(1.5), DomainError);
  EXPECT_THROW(BinaryEntropy(std::nan("")), DomainError);
}

TEST(JointDistributionTest, ValidationAndMarginals) {
  const JointDistribution j({"u", "v", "w"}, {2, 3, 2},
                            std::vector<Rational>(12, Rational(1, 12)));
  EXPECT_EQ(j.at({1, 2, 1}), Rational(1, 12));
  const JointDistribution vu = j.Marginal({1, 0});
  EXPECT_EQ(vu.names(), (std::vector<std::string>{"v", "u"}));
  EXPECT_EQ(vu.at({2, 1}), Rational(1, 6));
  EXPECT_NEAR(Entropy(j), std::log2(12.0), 1e-12);
  EXPECT_THROW(j.at({2, 0, 0}), DomainError);
  EXPECT_THROW(j.Marginal({3}), DomainError);
  EXPECT_THROW(JointDistribution({"u"}, {2}, {Rational(1, 2)}), ConstructionError);
  EXPECT_THROW(JointDistribution({"u"}, {2}, {Rational(1, 2), Rational(1, 3)}),
               ConstructionError);
  EXPECT_THROW(JointDistribution({"u"}, {2}, {Rational(3, 2), Rational(-1, 2)}),
               ConstructionError);
  EXPECT_THROW(JointDistribution({"u", "v"}, {2}, {Rational(1, 2), Rational(1, 2)}),
               ConstructionError);
  EXPECT_THROW(MutualInformation(j), DomainError);
}

TEST(JointDistributionTest, MutualInformationExtremes) {
  const JointDistribution copy({"u", "v"}, {2, 2},
                               {Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)});
  EXPECT_EQ(MutualInformation(copy), 1.0);
  const JointDistribution independent({"u", "v"}, {2, 2},
                                      std::vector<Rational>(4, Rational(1, 4)));
  EXPECT_EQ(MutualInformation(independent), 0.0);
}

TEST(RacNotpTest, EndpointsAndReferenceValue) {
  EXPECT_NEAR(RacRunNotp(Rational(1)).report.i_n, 2.0, 1e-12);
  EXPECT_NEAR(RacRunNotp(Rational(0)).report.i_n, 2.0, 1e-12);
  EXPECT_NEAR(RacRunNotp(Half()).report.i_n, 0.0, 1e-12);
  const RacResult r = RacRunNotp(Rational(9, 10));
  EXPECT_NEAR(r.report.i_n, kNotp09, 1e-12);
  EXPECT_FALSE(r.report.ic_satisfied);
  EXPECT_EQ(r.family, RacFamily::kNoisyKeys);
  EXPECT_STREQ(FamilyName(r.family), "notp");
  ASSERT_EQ(r.report.per_index_information.size(), 2u);
  EXPECT_NEAR(r.report.per_index_information[0], kNotp09 / 2, 1e-12);
  // Guess is correct with probability mu.
  EXPECT_EQ(r.joints[0].at({0, 0}) + r.joints[0].at({1, 1}), Rational(9, 10));
  EXPECT_EQ(r.joints[1].at({0, 0}) + r.joints[1].at({1, 1}), Rational(9, 10));
  EXPECT_THROW(RacRunNotp(Rational(2)), DomainError);
}

TEST(RacNotpTest, MatchesClosedFormOnGrid) {
  for (int k = 0; k <= 100; ++k) {
    const RacResult r = RacRunNotp(Rational(k, 100));
    ASSERT_LT(*r.report.discrepancy, 1e-9) << k;
    ASSERT_NEAR(*r.report.closed_form, 2 - 2 * BinaryEntropy(k / 100.0), 1e-15);
  }
}

TEST(RacNotpTest, ThresholdSplitsVerdicts) {
  const double mu_star = IcThresholdNotp();
  EXPECT_NEAR(mu_star, kMuStar, 1e-14);
  EXPECT_LT(std::fabs(BinaryEntropy(mu_star) - 0.5), 1e-12);
  EXPECT_TRUE(RacRunNotp(Rational(889, 1000)).report.ic_satisfied);
  EXPECT_FALSE(RacRunNotp(Rational(891, 1000)).report.ic_satisfied);
  EXPECT_TRUE(RacRunNotp(Rational(111, 1000)).report.ic_satisfied);
  EXPECT_FALSE(RacRunNotp(Rational(109, 1000)).report.ic_satisfied);
}

TEST(RacNoisyOnticTest, ReferenceValuesAndUniformPoint) {
  const RacResult half = RacRunNoisyOntic(Half());
  EXPECT_EQ(half.report.i_n, 1.0);
  EXPECT_TRUE(half.report.ic_satisfied);
  EXPECT_EQ(half.report.per_index_information[0], 1.0);
  EXPECT_EQ(half.report.per_index_information[1], 0.0);
  EXPECT_NEAR(RacRunNoisyOntic(Rational(3, 4)).report.i_n, kOntic075, 1e-12);
  EXPECT_NEAR(RacRunNoisyOntic(Rational(1)).report.i_n, 2.0, 1e-12);
  EXPECT_STREQ(FamilyName(half.family), "noisy-ontic");
  EXPECT_THROW(RacRunNoisyOntic(Rational(-1, 2)), DomainError);
}

TEST(RacNoisyOnticTest, ViolatesAwayFromHalf) {
  for (int k = 0; k <= 100; ++k) {
    const RacResult r = RacRunNoisyOntic(Rational(k, 100));
    ASSERT_LT(*r.report.discrepancy, 1e-9) << k;
    if (k != 50) {
      ASSERT_GT(r.report.i_n, 1.0) << k;
      ASSERT_FALSE(r.report.ic_satisfied) << k;
    }
  }
}

TEST(KeyInformationTest, CorrelatedKeys) {
  const KeyInformation k = KeyMutualInformation(JointKeyDist::Correlated(Rational(9, 10)));
  EXPECT_NEAR(k.mutual_information, kKeyMi09, 1e-12);
  EXPECT_TRUE(k.ic_violation);
  EXPECT_FALSE(KeyMutualInformation(JointKeyDist::Correlated(Rational(88, 100))).ic_violation);
  EXPECT_NEAR(KeyMutualInformation(JointKeyDist::Correlated(Rational(1))).mutual_information,
              1.0, 1e-15);
  EXPECT_THROW(KeyMutualInformation(JointKeyDist({Rational(1, 2), Rational(0), Rational(1, 4),
                                                  Rational(1, 4)})),
               PreconditionError);
}

}  // namespace
}  // namespace otplab
