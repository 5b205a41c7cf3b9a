#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "fermi/fock.hpp"
#include "fermi/invariants.hpp"
#include "fermi/rdm.hpp"
#include "fermi/rng.hpp"
#include "fermi/state.hpp"
#include "oracles.hpp"

using namespace fermi;

namespace {

FockState random_unit_fock(Rng& rng, int d) {
  FockState psi = FockState::zero(d);
  for (int m = 0; m < psi.a.size(); ++m) psi.a[m] = rng.cgaussian();
  psi.a /= psi.norm();
  return psi;
}

FermiState336 random_state336(Rng& rng) {
  FermiState336 p;
  for (int t = 0; t < kTriples; ++t) p.ordered()[t] = rng.cgaussian();
  return p;
}

}  // namespace

TEST_CASE("mode operators match the Kronecker-product construction") {
  for (int d = 1; d <= 5; ++d)
    for (int i = 1; i <= d; ++i) {
      CHECK((create_op(d, i) - oracle::jw_create(d, i)).norm() == 0.0);
      CHECK((annihilate_op(d, i) - oracle::jw_create(d, i).adjoint()).norm() ==
            0.0);
    }
}

TEST_CASE("creation fills modes in ascending order with positive sign") {
  const FockState v = FockState::vacuum(3);
  FockState expect = FockState::basis(3, 0b011);
  FockState got = v;
  got.a = create_op(3, 1) * (create_op(3, 2) * v.a);
  CHECK((got.a - expect.a).norm() == 0.0);
  // swapping the creation order flips the sign
  got.a = create_op(3, 2) * (create_op(3, 1) * v.a);
  CHECK((got.a + expect.a).norm() == 0.0);
}

TEST_CASE("canonical anticommutation relations are exact") {
  for (int d = 1; d <= 6; ++d) CHECK(car_max_residual(d) == 0.0);
}

TEST_CASE("mode bounds are enforced") {
  CHECK_THROWS_AS((void)create_op(3, 0), std::domain_error);
  CHECK_THROWS_AS((void)create_op(3, 4), std::domain_error);
  CHECK_THROWS_AS((void)car_max_residual(9), std::length_error);
  CHECK_THROWS_AS((void)car_max_residual(0), std::length_error);
}

TEST_CASE("pairing of complementary determinants") {
  // (e^1, e^{23}) pairs a single mode against its complement
  const FockState phi = FockState::basis(3, 0b001);
  const FockState psi = FockState::basis(3, 0b110);
  CHECK(bilinear_pairing(phi, psi) == cd{1.0, 0.0});
  // same-sector pairings vanish: masks must be complementary
  CHECK(bilinear_pairing(phi, phi) == cd{0.0, 0.0});
}

TEST_CASE("pairing matches the bubble-sort reference and its symmetry") {
  Rng rng(71);
  for (int d = 1; d <= 6; ++d) {
    const FockState phi = random_unit_fock(rng, d);
    const FockState psi = random_unit_fock(rng, d);
    const cd got = bilinear_pairing(phi, psi);
    CHECK(std::abs(got - oracle::naive_pairing(phi, psi)) <= 1e-14);
    const double sign = (d * (d - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(got - sign * bilinear_pairing(psi, phi)) <= 1e-14);
  }
  FockState a = random_unit_fock(rng, 3), b = random_unit_fock(rng, 4);
  CHECK_THROWS_AS((void)bilinear_pairing(a, b), std::domain_error);
}

TEST_CASE("antilinear dual maps determinants to signed complements") {
  // chi(f1+|0>) = f2+ f3+ |0> at d = 3
  const FockState chi1 = chi_dual(FockState::basis(3, 0b001));
  CHECK((chi1.a - FockState::basis(3, 0b110).a).norm() == 0.0);
  // chi|0> = |top>
  const FockState chiv = chi_dual(FockState::vacuum(4));
  CHECK((chiv.a - FockState::basis(4, 0b1111).a).norm() == 0.0);
}

TEST_CASE("dual involution sign and antiunitarity across mode counts") {
  for (int d = 2; d <= 7; ++d) {
    const ChiPropertyReport rep = chi_properties_check(d);
    CHECK(rep.sign == ((d * (d - 1) / 2) % 2 == 0 ? 1 : -1));
    CHECK(rep.involution_residual == 0.0);
    CHECK(rep.antiunitarity_residual <= 1e-13);
  }
}

TEST_CASE("dual of a three-fermion state complements its occupations") {
  Rng rng(72);
  const FermiState336 p = random_state336(rng).normalized();
  const FockState psi = to_fock(p);
  const Eigen::MatrixXcd f = mode_occupation_matrix(psi);
  const Eigen::MatrixXcd fc = mode_occupation_matrix(chi_dual(psi));
  CHECK((f + fc - Eigen::MatrixXcd::Identity(6, 6)).norm() <= 1e-13);
  // occupation matrix is the transpose of the one-body density
  CHECK((f - one_rdm(p).transpose()).norm() <= 1e-13);
}

TEST_CASE("generator data is validated") {
  SpinGenerator gen;
  gen.A = Eigen::MatrixXcd::Zero(3, 3);
  gen.B = Eigen::MatrixXcd::Zero(3, 3);
  gen.beta = Eigen::MatrixXcd::Zero(3, 3);
  CHECK_NOTHROW(validate(gen));
  gen.B(0, 1) = 1.0;  // not antisymmetric without the mirror entry
  CHECK_THROWS_AS(validate(gen), std::domain_error);
  gen.B(1, 0) = -1.0;
  CHECK_NOTHROW(validate(gen));
  gen.beta = Eigen::MatrixXcd::Zero(2, 2);
  CHECK_THROWS_AS(validate(gen), std::domain_error);
}

TEST_CASE("number-conserving flows rescale determinants") {
  const double a = 0.37;
  SpinGenerator gen;
  gen.A = Eigen::MatrixXcd::Zero(3, 3);
  gen.A(0, 0) = a;
  gen.B = Eigen::MatrixXcd::Zero(3, 3);
  gen.beta = Eigen::MatrixXcd::Zero(3, 3);

  const FockState one = FockState::basis(3, 0b001);
  const FockState t_one = spin_transform(gen, one);
  CHECK((t_one.a - std::exp(a / 2.0) * one.a).norm() <= 1e-13);

  const FockState vac = FockState::vacuum(3);
  const FockState t_vac = spin_transform(gen, vac);
  CHECK((t_vac.a - std::exp(-a / 2.0) * vac.a).norm() <= 1e-13);
}

TEST_CASE("vector action exponentiates the block generator") {
  Rng rng(73);
  SpinGenerator gen;
  const int d = 3;
  gen.A = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gen.A(i, j) = 0.4 * rng.cgaussian();
  gen.B = Eigen::MatrixXcd::Zero(d, d);
  gen.beta = Eigen::MatrixXcd::Zero(d, d);
  const Eigen::MatrixXcd m = spin_vector_action(gen);
  const Eigen::MatrixXcd ea = gen.A.exp();
  CHECK((m.topLeftCorner(d, d) - ea).norm() <= 1e-12);
  CHECK((m.bottomRightCorner(d, d) -
         Eigen::MatrixXcd(gen.A.transpose()).exp().inverse())
            .norm() <= 1e-10);
  CHECK(m.topRightCorner(d, d).norm() == 0.0);
  CHECK(m.bottomLeftCorner(d, d).norm() == 0.0);
}

TEST_CASE("pairing is invariant under the quadratic flow") {
  Rng rng(74);
  const int d = 4;
  SpinGenerator gen;
  gen.A = Eigen::MatrixXcd(d, d);
  Eigen::MatrixXcd x(d, d), y(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      gen.A(i, j) = 0.3 * rng.cgaussian();
      x(i, j) = 0.3 * rng.cgaussian();
      y(i, j) = 0.3 * rng.cgaussian();
    }
  gen.B = x - x.transpose();
  gen.beta = y - y.transpose();
  const FockState phi = random_unit_fock(rng, d);
  const FockState psi = random_unit_fock(rng, d);
  const cd before = bilinear_pairing(phi, psi);
  const cd after =
      bilinear_pairing(spin_transform(gen, phi), spin_transform(gen, psi));
  CHECK(std::abs(after - before) <= 1e-11);
}

TEST_CASE("annihilator dimensions detect pure spinors") {
  CHECK(annihilator_dimension(FockState::vacuum(4)) == 4);
  CHECK(annihilator_dimension(FockState::basis(4, 0b0001)) == 4);

  FockState mixed = FockState::vacuum(3);
  mixed.a[0b111] = 1.0;
  mixed.a /= mixed.norm();
  CHECK(annihilator_dimension(mixed) == 0);

  SpinGenerator gen;
  gen.A = Eigen::MatrixXcd::Zero(3, 3);
  gen.B = Eigen::MatrixXcd::Zero(3, 3);
  gen.beta = Eigen::MatrixXcd::Zero(3, 3);
  gen.B(0, 1) = 0.7;
  gen.B(1, 0) = -0.7;
  FockState transformed = spin_transform(gen, FockState::vacuum(3));
  transformed.a /= transformed.norm();
  CHECK(annihilator_dimension(transformed) == 3);

  CHECK_THROWS_AS((void)annihilator_dimension(FockState::zero(3)),
                  std::domain_error);
}

TEST_CASE("gamma generators close the real Clifford algebra") {
  const int d = 2;
  for (int a = 1; a <= 2 * d; ++a)
    for (int b = 1; b <= 2 * d; ++b) {
      const CliffordOp anti =
          gamma_op(d, a) * gamma_op(d, b) + gamma_op(d, b) * gamma_op(d, a);
      const CliffordOp want =
          (a == b ? 2.0 : 0.0) * CliffordOp::Identity(4, 4);
      CHECK((anti - want).norm() == 0.0);
    }
  CHECK_THROWS_AS((void)gamma_op(2, 0), std::domain_error);
  CHECK_THROWS_AS((void)gamma_op(2, 5), std::domain_error);
}

TEST_CASE("fermionic and Fock-space representations round-trip") {
  Rng rng(75);
  const FermiState336 p = random_state336(rng);
  const FermiState336 back = from_fock(to_fock(p));
  CHECK((back - p).norm() == 0.0);

  FockState off = to_fock(p);
  off.a[0b000011] = 0.5;  // two-particle contamination
  CHECK_THROWS_AS((void)from_fock(off), std::invalid_argument);
}

TEST_CASE("dual of the embedded state matches the fermionic dual exactly") {
  Rng rng(76);
  const FermiState336 p = random_state336(rng);
  const FermiState336 a = from_fock(chi_dual(to_fock(p)));
  const FermiState336 b = dual_state(p);
  CHECK((a - b).norm() == 0.0);
}

TEST_CASE("K matrix through the invariant pairing") {
  Rng rng(77);
  const FermiState336 p = random_state336(rng).normalized();
  const Mat6 diff = k_via_pairing(to_fock(p)) - k_matrix(p);
  CHECK(diff.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("distinguishable embeddings land on single-occupancy masks") {
  const std::vector<cd> ket00 = {cd{1.0, 0.0}, cd{}, cd{}, cd{}};
  const FockState got = embed_distinguishable(ket00, {2, 2});
  CHECK((got.a - FockState::basis(4, 0b0101).a).norm() == 0.0);

  CHECK_THROWS_AS(
      (void)embed_distinguishable(std::vector<cd>(4, cd{}), {2, 3}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)embed_distinguishable(std::vector<cd>(512, cd{}),
                                  {2, 2, 2, 2, 2, 2, 2, 2, 2}),
      std::length_error);
}
