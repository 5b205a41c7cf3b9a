#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fermi/fock.hpp"
#include "fermi/rng.hpp"

using namespace fermi;

namespace {

FockState random_unit_fock(Rng& rng, int d) {
  FockState psi = FockState::zero(d);
  for (int m = 0; m < psi.a.size(); ++m) psi.a[m] = rng.cgaussian();
  psi.a /= psi.norm();
  return psi;
}

double max_duality_residual(const ThetaBasis& tb) {
  double worst = 0.0;
  const int n = static_cast<int>(tb.theta.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const cd tr = (tb.dual[a] * tb.theta[b]).trace();
      worst = std::max(worst,
                       std::abs(tr - (a == b ? cd{1.0, 0.0} : cd{0.0, 0.0})));
    }
  return worst;
}

}  // namespace

TEST_CASE("single-mode basis: four operators with the expected squares") {
  const ThetaBasis& tb = theta_basis(1);
  REQUIRE(tb.theta.size() == 4);
  CHECK((tb.theta[0] - CliffordOp::Identity(2, 2)).norm() == 0.0);

  CliffordOp g1(2, 2), g2(2, 2);
  g1 << 0, 1, 1, 0;
  g2 << 0, cd{0.0, -1.0}, cd{0.0, 1.0}, 0;
  CHECK((tb.theta[1] - g1).norm() == 0.0);
  CHECK((tb.theta[2] - g2).norm() == 0.0);
  // theta_{12} = gamma_1 gamma_2 squares to -1
  CHECK((tb.theta[3] * tb.theta[3] + CliffordOp::Identity(2, 2)).norm() ==
        0.0);

  // trace pairings: tr(theta_S theta_S) = +-2, off-diagonal zero
  CHECK((tb.theta[1] * tb.theta[1]).trace() == cd{2.0, 0.0});
  CHECK((tb.theta[3] * tb.theta[3]).trace() == cd{-2.0, 0.0});
  CHECK((tb.theta[1] * tb.theta[2]).trace() == cd{0.0, 0.0});
}

TEST_CASE("trace duality holds exactly for the dense mode counts") {
  for (int d = 1; d <= 4; ++d) {
    const ThetaBasis& tb = theta_basis(d);
    REQUIRE(tb.theta.size() == (1u << (2 * d)));
    CHECK(max_duality_residual(tb) <= 1e-12);
  }
}

TEST_CASE("trace duality spot-checks at five modes") {
  const ThetaBasis& tb = theta_basis(5);
  Rng rng(81);
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    const int a = static_cast<int>(rng.uniform() * tb.theta.size());
    const int b = static_cast<int>(rng.uniform() * tb.theta.size());
    const cd tr = (tb.dual[a] * tb.theta[b]).trace();
    worst = std::max(worst,
                     std::abs(tr - (a == b ? cd{1.0, 0.0} : cd{0.0, 0.0})));
  }
  CHECK(worst <= 1e-12);
  CHECK_THROWS_AS((void)theta_basis(7), std::length_error);
}

TEST_CASE("hermiticity pattern follows the subset size") {
  const ThetaBasis& tb = theta_basis(3);
  for (std::size_t s = 0; s < tb.theta.size(); ++s) {
    const int k = __builtin_popcount(static_cast<unsigned>(s));
    const double sk = (k * (k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    CHECK((CliffordOp(tb.theta[s].adjoint()) - sk * tb.theta[s]).norm() <=
          1e-13);
  }
}

TEST_CASE("operator completeness at two modes") {
  const ThetaBasis& tb = theta_basis(2);
  Rng rng(82);
  CliffordOp m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rng.cgaussian();
  CliffordOp rebuilt = CliffordOp::Zero(4, 4);
  for (std::size_t s = 0; s < tb.theta.size(); ++s)
    rebuilt += (tb.theta[s] * m).trace() * tb.dual[s];
  CHECK((rebuilt - m).norm() <= 1e-12);
}

TEST_CASE("projector expansions reproduce the rank-one operators") {
  Rng rng(83);
  for (int d = 1; d <= 4; ++d) {
    const FockState psi = random_unit_fock(rng, d);
    const ProjectorResiduals pr = projector_expansions_check(psi);
    CHECK(pr.p_residual <= 1e-11);
    CHECK(pr.p_prime_residual <= 1e-11);
  }
}

TEST_CASE("Fierz identities on dense and matrix-free paths") {
  Rng rng(84);
  for (int d = 3; d <= 5; ++d) {
    const int dim = 1 << d;
    const FockState psi = random_unit_fock(rng, d);
    CliffordOp a(dim, dim), b(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        a(r, c) = rng.cgaussian();
        b(r, c) = rng.cgaussian();
      }
    const FierzResiduals fr = fierz_check(psi, a, b);
    CHECK(fr.residual1 <= 1e-10);
    CHECK(fr.residual2 <= 1e-10);
  }
}

TEST_CASE("Fierz check rejects unnormalized states and wrong shapes") {
  Rng rng(85);
  FockState psi = random_unit_fock(rng, 3);
  psi.a *= 2.0;
  const CliffordOp id = CliffordOp::Identity(8, 8);
  CHECK_THROWS_AS((void)fierz_check(psi, id, id), std::domain_error);
  const FockState ok = random_unit_fock(rng, 3);
  CHECK_THROWS_AS((void)fierz_check(ok, CliffordOp::Identity(4, 4), id),
                  std::domain_error);
}
