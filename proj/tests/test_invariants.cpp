#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fermi/invariants.hpp"
#include "fermi/rng.hpp"
#include "fermi/sampling.hpp"
#include "fermi/state.hpp"
#include "oracles.hpp"

using namespace fermi;

namespace {

FermiState336 random_state(Rng& rng) {
  FermiState336 p;
  for (int t = 0; t < kTriples; ++t) p.ordered()[t] = rng.cgaussian();
  return p;
}

}  // namespace

TEST_CASE("K matrix matches the explicit five-index eps contraction") {
  Rng rng(21);
  for (int rep = 0; rep < 15; ++rep) {
    const FermiState336 p = random_state(rng);
    const Mat6 got = k_matrix(p);
    const Mat6 want = oracle::naive_k_matrix(p);
    CHECK((got - want).norm() <= 1e-11 * (1.0 + want.norm()));
  }
}

TEST_CASE("K matrix of the fully entangled double triple is diagonal") {
  const Mat6 k = k_matrix(state_ghz());
  Mat6 want = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    want(i, i) = 1.0;
    want(i + 3, i + 3) = -1.0;
  }
  CHECK((k - want).norm() == 0.0);
}

TEST_CASE("K matrix of the single-overlap state has one entry") {
  // e^123 + e^156 shares only mode 1 between the two triples
  const Mat6 k = k_matrix(state_biseparable());
  CHECK(k(3, 0) == cd{-2.0, 0.0});
  Mat6 rest = k;
  rest(3, 0) = 0.0;
  CHECK(rest.norm() == 0.0);
}

TEST_CASE("K is quadratic under scaling and exactly traceless") {
  Rng rng(22);
  const FermiState336 p = random_state(rng);
  const Mat6 k = k_matrix(p);
  CHECK(std::abs(k.trace()) <= 1e-13 * (1.0 + k.norm()));
  const Mat6 k2 = k_matrix(cd{2.0, 0.0} * p);
  CHECK((k2 - 4.0 * k).norm() <= 1e-12 * (1.0 + k.norm()));
}

TEST_CASE("singular value profile separates the four classes") {
  const auto sep = k_singular_values(state_separable());
  CHECK(sep[0] == 0.0);

  const auto bis = k_singular_values(state_biseparable());
  CHECK(bis[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(bis[1] <= 1e-14);

  const auto w = k_singular_values(state_w());
  for (int i = 0; i < 3; ++i) CHECK(w[i] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(w[3] <= 1e-13);

  const auto ghz = k_singular_values(state_ghz());
  for (int i = 0; i < 6; ++i)
    CHECK(ghz[i] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("classification ranks for the canonical states") {
  CHECK(classify(FermiState336{}) == ClassLabel::Zero);
  CHECK(classify(state_separable()) == ClassLabel::Separable);
  CHECK(classify(state_biseparable()) == ClassLabel::Biseparable);
  CHECK(classify(state_w()) == ClassLabel::W);
  CHECK(classify(state_ghz()) == ClassLabel::GHZ);

  CHECK(classify_full(state_w()).rank == 3);
  CHECK(classify_full(state_ghz()).rank == 6);
  CHECK(classify_full(state_biseparable()).rank == 1);
  CHECK(classify_full(state_separable()).rank == 0);
}

TEST_CASE("an ambiguous rank throws with the singular values attached") {
  // a biseparable state plus a small W admixture has rank profile {2, eps...}
  FermiState336 p = state_biseparable();
  const FermiState336 w = state_w();
  p += cd{1e-4, 0.0} * w;
  CHECK_THROWS_AS((void)classify(p, 1e-6), ClassificationError);
  try {
    (void)classify(p, 1e-6);
  } catch (const ClassificationError& e) {
    CHECK(e.rank() == 5);
    CHECK(e.singular_values()[0] > 1.0);
    CHECK(e.singular_values()[4] > 1e-5);
  }
  // a coarse threshold hides the admixture again
  CHECK(classify(p, 1e-2) == ClassLabel::Biseparable);
}

TEST_CASE("quartic invariant on the canonical states") {
  CHECK(quartic_d(state_ghz()) == cd{1.0, 0.0});
  CHECK(std::abs(quartic_d(state_ghz().normalized()) - cd{0.25, 0.0}) <=
        1e-15);
  CHECK(std::abs(quartic_d(state_w())) <= 1e-15);
  CHECK(std::abs(quartic_d(state_separable())) == 0.0);
  CHECK(std::abs(quartic_d(state_biseparable())) <= 1e-15);
  // equal-weight normalized four-term state
  const FermiState336 c4 = canonical4(0.5, 0.5, 0.5, 0.5);
  CHECK(std::abs(quartic_d(c4) - cd{0.25, 0.0}) <= 1e-15);
  CHECK(tr_kk_dagger(c4) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("norm invariant and entanglement monotone on canonical states") {
  CHECK(tr_kk_dagger(state_separable()) == 0.0);
  CHECK(tr_kk_dagger(state_ghz().normalized()) ==
        doctest::Approx(1.5).epsilon(1e-14));
  const FermiState336 w = state_w().normalized();
  CHECK(tr_kk_dagger(w) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(concurrence(w) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(concurrence(state_ghz().normalized())) <= 1e-14);
  CHECK(concurrence(state_separable()) == 0.0);
}

TEST_CASE("the K anticommutator is a function of the one-body density") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const FermiState336 p = random_state(rng);
    CHECK(anticommutator_identity_residual(p) <=
          1e-11 * (1.0 + std::pow(p.norm(), 4)));
  }
}

TEST_CASE("covariance under an invertible mode transformation") {
  Rng rng(24);
  Mat6 g;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g(i, j) = rng.cgaussian();
  const FermiState336 p = random_state(rng).normalized();
  const cd det = g.determinant();

  const Mat6 lhs = k_matrix(apply_slocc(g, p));
  const Mat6 rhs = det * g.inverse() * k_matrix(p) * g;
  CHECK((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));

  const cd dl = quartic_d(apply_slocc(g, p));
  const cd dr = det * det * quartic_d(p);
  CHECK(std::abs(dl - dr) <= 1e-10 * (1.0 + std::abs(dr)));
}

TEST_CASE("concurrence is nonnegative up to roundoff on random states") {
  Rng rng(25);
  for (int rep = 0; rep < 50; ++rep) {
    const FermiState336 p = random_state(rng).normalized();
    CHECK(concurrence(p) >= -1e-12);
    CHECK(tr_kk_dagger(p) >= 0.0);
  }
}
