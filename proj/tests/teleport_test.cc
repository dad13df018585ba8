// Copyright 2026 The swapgain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapgain/teleport.h"

#include "gtest/gtest.h"

#include "swapgain/filter.h"
#include "swapgain/swap.h"
#include "test_util.h"

using namespace swapgain;
using swapgain::testutil::random_channel;
using swapgain::testutil::test_rng;

TEST(QuantumChannel, IdentityAndDepolarizing) {
  const QuantumChannel id = QuantumChannel::identity_channel();
  EXPECT_NEAR(average_fidelity(id), 1.0, 1e-15);
  EXPECT_NEAR(average_fidelity(QuantumChannel::fully_depolarizing()), 0.5, 1e-15);
  const ComplexMatrix m = testutil::ginibre(test_rng(), 2, 2);
  EXPECT_LE(max_abs_diff(id.apply(m), m), 1e-15);
}

TEST(QuantumChannel, RejectsNonTracePreserving) {
  EXPECT_THROW(QuantumChannel(matrix_unit(4, 0, 0)), ValidationError);
}

TEST(AverageFidelity, AgreesWithTwoDesign) {
  auto& rng = test_rng();
  for (int trial = 0; trial < 200; ++trial) {
    const QuantumChannel channel = random_channel(rng, 1 + trial % 4);
    EXPECT_NEAR(average_fidelity(channel), average_fidelity_two_design(channel), 1e-12);
  }
}

TEST(Compose, IdentityNeutralAndDepolarizingAbsorbing) {
  auto& rng = test_rng();
  const QuantumChannel id = QuantumChannel::identity_channel();
  const QuantumChannel dep = QuantumChannel::fully_depolarizing();
  for (int trial = 0; trial < 20; ++trial) {
    const QuantumChannel c = random_channel(rng);
    EXPECT_LE(max_abs_diff(compose(id, c).choi(), c.choi()), 1e-12);
    EXPECT_LE(max_abs_diff(compose(c, id).choi(), c.choi()), 1e-12);
    EXPECT_LE(max_abs_diff(compose(dep, c).choi(), dep.choi()), 1e-12);
  }
}

TEST(Compose, Associative) {
  auto& rng = test_rng();
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel x = random_channel(rng);
    const QuantumChannel y = random_channel(rng);
    const QuantumChannel z = random_channel(rng);
    EXPECT_LE(max_abs_diff(compose(x, compose(y, z)).choi(), compose(compose(x, y), z).choi()),
              1e-12);
  }
}

TEST(Compose, ActionMatchesSequentialApplication) {
  auto& rng = test_rng();
  const QuantumChannel x = random_channel(rng);
  const QuantumChannel y = random_channel(rng);
  const ComplexMatrix m = testutil::ginibre(rng, 2, 2);
  EXPECT_LE(max_abs_diff(compose(x, y).apply(m), x.apply(y.apply(m))), 1e-12);
}

TEST(TeleportationChannel, SingletGivesIdentity) {
  const Teleportation t =
      teleportation_channel(DensityOperator::from_pure(bell_state(BellLabel::PsiMinus)));
  EXPECT_TRUE(t.resource_aligned);
  EXPECT_LE(max_abs_diff(t.channel.choi(), QuantumChannel::identity_channel().choi()), 1e-12);
}

TEST(TeleportationChannel, NoiseGivesDepolarizing) {
  const Teleportation t = teleportation_channel(DensityOperator::maximally_mixed(4));
  EXPECT_LE(max_abs_diff(t.channel.choi(), identity(4) / 4.0), 1e-12);
}

TEST(TeleportationChannel, UnalignedResourceIsFlagged) {
  const Teleportation t =
      teleportation_channel(DensityOperator::from_pure(bell_state(BellLabel::PhiPlus)));
  EXPECT_FALSE(t.resource_aligned);
}

TEST(AlignResource, Examples) {
  const DensityOperator singlet = DensityOperator::from_pure(bell_state(BellLabel::PsiMinus));
  const CorrectedBranch same = align_resource(singlet);
  EXPECT_LE(max_abs_diff(same.state.matrix(), singlet.matrix()), 1e-12);
  const CorrectedBranch rotated =
      align_resource(DensityOperator::from_pure(bell_state(BellLabel::PhiPlus)));
  EXPECT_LE(max_abs_diff(rotated.state.matrix(), singlet.matrix()), 1e-12);
  const ComplexVector s = bell_state(BellLabel::PsiMinus).amplitudes();
  const DensityOperator psi = align_resource(psi_branch_closed({0.75, 0.5}).state).state;
  EXPECT_NEAR(s.dot(psi.matrix() * s).real(), 0.6, 1e-12);
}

TEST(AlignResource, ReachesSingletFractionOnRandomStates) {
  auto& rng = test_rng();
  for (int trial = 0; trial < 100; ++trial) {
    const DensityOperator rho = testutil::random_density_any_rank(rng);
    const CorrectedBranch aligned = align_resource(rho);
    const ComplexVector s = bell_state(BellLabel::PsiMinus).amplitudes();
    EXPECT_NEAR(s.dot(aligned.state.matrix() * s).real(), singlet_fraction_magic(rho), 1e-9);
    const ComplexMatrix u = aligned.unitaries.combined();
    EXPECT_LE(max_abs_diff(u * rho.matrix() * u.adjoint(), aligned.state.matrix()), 1e-12);
  }
}

TEST(TeleportationChannel, AlignedFamilyAchievesOptimalFidelity) {
  for (double a : {0.2, 0.5, 0.7}) {
    const FamilyParams q(0.75, a);
    const DensityOperator aligned = align_resource(make_rho_ab(q)).state;
    const double f = average_fidelity(teleportation_channel(aligned).channel);
    EXPECT_NEAR(f, (2 * initial_singlet_fraction(q) + 1) / 3, 1e-9);
  }
  const DensityOperator aligned = align_resource(make_rho_ab(FamilyParams(0.75, 0.2))).state;
  EXPECT_NEAR(average_fidelity(teleportation_channel(aligned).channel), 0.783333333333, 1e-9);
}

TEST(Strategies, SpotValues) {
  EXPECT_NEAR(strategy_one_fidelity(FamilyParams(0.75, 0.5)), 0.729166666667, 1e-9);
  EXPECT_NEAR(strategy_two_fidelity(FamilyParams(0.75, 0.5)), 0.729166666667, 1e-9);
  EXPECT_NEAR(strategy_two_fidelity(FamilyParams(0.75, 0.2)), 0.701666666667, 1e-9);
}

TEST(Strategies, ComposedTeleportationsMatchStrategyTwoInMiddle) {
  const FamilyParams q(0.75, 0.5);
  const QuantumChannel ab = teleportation_channel(align_resource(make_rho_ab(q)).state).channel;
  const QuantumChannel bc = teleportation_channel(align_resource(make_rho_bc(q)).state).channel;
  EXPECT_NEAR(average_fidelity(compose(bc, ab)), strategy_two_fidelity(q), 1e-9);
}

TEST(Strategies, OrderingAndSymmetry) {
  for (int j = 1; j < 100; ++j) {
    const double a = j / 100.0;
    const StrategyReport r = compare_strategies(FamilyParams(0.75, a));
    EXPECT_GT(r.fidelity_strategy2, 2.0 / 3.0);
    EXPECT_GE(r.fidelity_strategy2, r.fidelity_strategy1 - 1e-9);
    if (a > 1.0 / 3.0 + 1e-9 && a < 2.0 / 3.0 - 1e-9) {
      EXPECT_NEAR(r.fidelity_strategy1, r.fidelity_strategy2, 1e-9) << a;
    }
    const StrategyReport m = compare_strategies(FamilyParams(0.75, 1 - a));
    EXPECT_NEAR(r.fidelity_strategy1, m.fidelity_strategy1, 1e-9);
    EXPECT_NEAR(r.fidelity_strategy2, m.fidelity_strategy2, 1e-9);
  }
}
