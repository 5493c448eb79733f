#include <gtest/gtest.h>

#include <cmath>

#include "multlag/eom.hpp"
#include "multlag/hamiltonians.hpp"
#include "multlag/lagrangians.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace multlag;

namespace {

ModelParams params(double m = 1.0, double lambda = 1.0, double c = 1.0) { return {m, lambda, c}; }

const Potential kFree{Free{}};
const Potential kSho{Harmonic{1.0, 1.0}};
const Potential kCm{CalogeroMoser{1.0}};

Model model(Family f, int j, ModelParams p, Potential pot) { return Model{f, j, p, std::move(pot)}; }

GridSpec grid_for(Family f, const Potential& pot, double c = 1.0) {
  GridSpec g;
  if (std::holds_alternative<CalogeroMoser>(pot.kind())) {
    g.x_min = 0.5;
    g.x_max = 1.5;
  }
  if (is_relativistic(f)) {
    g.v_min = -0.9 * c;
    g.v_max = 0.9 * c;
  }
  return g;
}

}  // namespace

TEST(Acceleration, Examples) {
  for (double v : {-3.0, 0.0, 1.7}) {
    EXPECT_NEAR(acceleration_from_lagrangian(model(Family::AdditiveNR, 1, params(), kSho), 0.3, v), -0.3, 1e-15);
  }
  EXPECT_NEAR(acceleration_from_lagrangian(model(Family::MultiplicativeNR, 1, params(), kSho), 0.3, 0.5), -0.3,
              1e-14);
  expect_error([] { acceleration_from_lagrangian(model(Family::HierarchyNR, 2, params(), kSho), 0.0, 0.0); },
               ErrorCode::DegenerateHessian);
}

TEST(ReferenceAcceleration, Examples) {
  EXPECT_EQ(reference_acceleration(Reference::Newtonian, params(2.0), Potential(Harmonic{2.0, 1.0}), 1.0, 0.0),
            -1.0);
  EXPECT_NEAR(reference_acceleration(Reference::Relativistic, params(), kSho, 1.0, 0.6), -0.512, 1e-15);
  EXPECT_EQ(reference_acceleration(Reference::Newtonian, params(), kFree, 3.0, 2.0), 0.0);
  EXPECT_EQ(reference_for(Family::HierarchyRel), Reference::Relativistic);
  EXPECT_EQ(reference_for(Family::MultiplicativeNR), Reference::Newtonian);
}

TEST(HamiltonRhs, Examples) {
  PhaseRate r = hamilton_rhs(model(Family::AdditiveNR, 1, params(), kSho), 1.0, 0.0);
  EXPECT_EQ(r.dx, 0.0);
  EXPECT_EQ(r.dp, -1.0);
  r = hamilton_rhs(model(Family::MultiplicativeNR, 1, params(), kFree), 0.0, 1.0);
  EXPECT_NEAR(r.dx, std::exp(-0.5), 1e-16);
  EXPECT_EQ(r.dp, 0.0);
  // H_N(1, 1) = 1/2 + 1/2 = 1, so xdot = 2 H_N p / m = 2 and pdot = -2 H_N V' = -2.
  r = hamilton_rhs(model(Family::HierarchyNR, 2, params(), kSho), 1.0, 1.0);
  EXPECT_NEAR(r.dx, 2.0, 1e-15);
  EXPECT_NEAR(r.dp, -2.0, 1e-15);
  // H_N = 1.5 at x = sqrt(2), p = 1
  r = hamilton_rhs(model(Family::HierarchyNR, 2, params(), kSho), std::sqrt(2.0), 1.0);
  EXPECT_NEAR(r.dx, 3.0, 1e-14);
  EXPECT_NEAR(r.dp, -3.0 * std::sqrt(2.0), 1e-14);
}

TEST(KinematicFlow, MomentumRateIsMinusForce) {
  oracle::Uniform rng(41);
  for (Family f : kAllFamilies) {
    const Model m = model(f, 3, params(1.3, 1.6, 1.2), Potential(Harmonic{1.3, 0.8}));
    for (int i = 0; i < 50; ++i) {
      const double x = rng(-1.0, 1.0);
      const double p = rng(-1.0, 1.0);
      if (is_hierarchy(f) && std::fabs(standard_hamiltonian(m, x, p)) < 1e-3) continue;
      EXPECT_NEAR(momentum_rate_kinematic(m, x, p), -m.potential.derivative(x), 1e-11) << family_name(f);
    }
  }
}

// At |p| = m lambda both sides of the kinematic relation carry the factor
// 1 - p^2 / (m lambda)^2; the rate is continuous through it.
TEST(KinematicFlow, RemovableZeroAtMassTimesLambda) {
  const Model m = model(Family::MultiplicativeNR, 1, params(1.0, 1.0), kSho);
  EXPECT_NEAR(momentum_rate_kinematic(m, 0.2, 1.0), -0.2, 1e-9);
  EXPECT_NEAR(momentum_rate_kinematic(m, 0.2, -1.0), -0.2, 1e-9);
  EXPECT_NEAR(momentum_rate_kinematic(m, 0.2, 1.0 + 1e-12), -0.2, 1e-9);
  const Model rel = model(Family::MultiplicativeRel, 1, params(1.0, 1.0, 1.0), kSho);
  for (double p : {0.3, 0.8, 1.2, 2.0}) EXPECT_NEAR(momentum_rate_kinematic(rel, 0.4, p), -0.4, 1e-9) << p;
}

TEST(EomScan, Examples) {
  EomReport r = eom_equivalence_scan(model(Family::AdditiveNR, 1, params(), kSho), Reference::Newtonian, GridSpec{});
  EXPECT_LT(r.max_abs_residual, 1e-12);
  EXPECT_EQ(r.grid_size, 441);
  r = eom_equivalence_scan(model(Family::MultiplicativeNR, 1, params(1.0, 0.7), kSho), Reference::Newtonian,
                           GridSpec{});
  EXPECT_LT(r.max_abs_residual, 1e-9);
  r = eom_equivalence_scan(model(Family::HierarchyRel, 3, params(), kSho), Reference::Relativistic,
                           GridSpec{-1.0, 1.0, -0.9, 0.9, 21});
  EXPECT_LT(r.max_abs_residual, 1e-8);
}

TEST(EomScan, HierarchyOriginIsSkippedAndCounted) {
  const EomReport r =
      eom_equivalence_scan(model(Family::HierarchyNR, 2, params(), kSho), Reference::Newtonian, GridSpec{});
  EXPECT_EQ(r.degenerate_points_skipped, 1);
  EXPECT_LT(r.max_abs_residual, 1e-8);
}

TEST(EomScan, AllFamiliesAndPotentialsAgreeWithReference) {
  const Potential pots[] = {kFree, kSho, kCm};
  for (Family f : kAllFamilies) {
    for (const Potential& pot : pots) {
      for (double lambda : {0.5, 10.0}) {
        for (int j : {1, 6}) {
          if (!is_hierarchy(f) && j > 1) continue;
          const Model m = model(f, j, params(1.0, lambda, 1.0), pot);
          for (Formulation form : {Formulation::Lagrangian, Formulation::Hamiltonian}) {
            const EomReport r = eom_equivalence_scan(m, reference_for(f), grid_for(f, pot), form);
            EXPECT_LT(r.max_abs_residual, 1e-8)
                << family_name(f) << " " << pot.name() << " lambda=" << lambda << " j=" << j
                << " form=" << static_cast<int>(form) << " worst (" << r.worst_x << ", " << r.worst_v << ")";
          }
        }
      }
    }
  }
}

// d2L_j/dv2 = m j (T + V)^(j-1) for the non-relativistic hierarchy.
TEST(EomScan, HierarchyHessianIdentity) {
  oracle::Uniform rng(43);
  for (int j = 1; j <= 6; ++j) {
    const Model m = model(Family::HierarchyNR, j, params(1.4), Potential(Harmonic{1.4, 0.9}));
    for (int i = 0; i < 50; ++i) {
      const double x = rng(-1.0, 1.0);
      const double v = rng(-1.0, 1.0);
      const double energy = 0.5 * 1.4 * v * v + eval_V(m.potential, x);
      const double want = 1.4 * j * std::pow(energy, j - 1);
      EXPECT_NEAR(lagrangian_derivs(m, x, v).fvv, want, 1e-12 * std::max(1.0, want)) << j;
    }
  }
}

TEST(EomScan, RelativisticGridKeepsOffTheLightCone) {
  const EomReport r = eom_equivalence_scan(model(Family::AdditiveRel, 1, params(), kSho), Reference::Relativistic,
                                           GridSpec{-1.0, 1.0, -1.0, 1.0, 5});
  EXPECT_TRUE(std::isfinite(r.max_abs_residual));
  EXPECT_LT(r.max_abs_residual, 1e-8);
}

TEST(EomScan, GridValidation) {
  const Model m = model(Family::AdditiveNR, 1, params(), kSho);
  expect_error([&] { eom_equivalence_scan(m, Reference::Newtonian, GridSpec{1.0, -1.0, -1.0, 1.0, 5}); },
               ErrorCode::InvalidArgument);
  expect_error([&] { eom_equivalence_scan(m, Reference::Newtonian, GridSpec{-1.0, 1.0, -1.0, 1.0, 0}); },
               ErrorCode::InvalidArgument);
  const GridSpec g{-1.0, 1.0, -2.0, 2.0, 5};
  EXPECT_EQ(g.x_at(0), -1.0);
  EXPECT_EQ(g.x_at(2), 0.0);
  EXPECT_EQ(g.v_at(4), 2.0);
}

TEST(EomScan, CalogeroMoserSingularityIsADomainError) {
  const Model m = model(Family::AdditiveNR, 1, params(), kCm);
  expect_error([&] { eom_equivalence_scan(m, Reference::Newtonian, GridSpec{}); }, ErrorCode::DomainError);
}
