#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/LU>

#include "fermi/fock.hpp"
#include "fock_internal.hpp"

namespace fermi {

namespace {

using detail::reversal_sign;

std::unique_ptr<ThetaBasis> build_theta_basis(int d) {
  auto tb = std::make_unique<ThetaBasis>();
  tb->d = d;
  const int n = 1 << d;
  const int count = 1 << (2 * d);

  std::vector<CliffordOp> gam(2 * d);
  for (int a = 0; a < 2 * d; ++a) gam[a] = gamma_op(d, a + 1);

  // theta_S = product of gammas over S with ascending indices left to right,
  // built by peeling the highest factor: theta_S = theta_{S\h} * gamma_h.
  tb->theta.resize(count);
  tb->theta[0] = CliffordOp::Identity(n, n);
  for (int s = 1; s < count; ++s) {
    const int h = 31 - __builtin_clz(static_cast<unsigned>(s));
    tb->theta[s] = tb->theta[s ^ (1 << h)] * gam[h];
  }

  tb->dual.resize(count);
  if (d <= 4) {
    // Solve for the duals from the Gram matrix G(a,b) = tr(theta_a theta_b)
    // (symmetric by trace cyclicity), making no use of the closed-form
    // diagonality; the duality property is then an output, not an input.
    Eigen::MatrixXcd g(count, count);
    for (int a = 0; a < count; ++a)
      for (int b = a; b < count; ++b) {
        const cd t = tb->theta[a].cwiseProduct(tb->theta[b].transpose()).sum();
        g(a, b) = t;
        g(b, a) = t;
      }
    const Eigen::MatrixXcd ginv =
        Eigen::PartialPivLU<Eigen::MatrixXcd>(g).inverse();
    for (int a = 0; a < count; ++a) {
      CliffordOp m = CliffordOp::Zero(n, n);
      for (int b = 0; b < count; ++b)
        if (ginv(a, b) != cd{0.0, 0.0}) m += ginv(a, b) * tb->theta[b];
      tb->dual[a] = std::move(m);
    }
  } else {
    // The Gram matrix is diagonal with entries (-1)^{k(k-1)/2} 2^d, so each
    // dual is the theta itself rescaled; at this size assembling the 4^d
    // square Gram matrix only to invert a diagonal would be pure waste.
    for (int s = 0; s < count; ++s) {
      const int k = __builtin_popcount(static_cast<unsigned>(s));
      tb->dual[s] = (reversal_sign(k) / static_cast<double>(n)) * tb->theta[s];
    }
  }
  return tb;
}

void check_normalized_state(const FockState& psi, const char* who) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::domain_error(std::string(who) + ": state must be normalized");
}

}  // namespace

const ThetaBasis& theta_basis(int d) {
  if (d < 1 || d > 6)
    throw std::length_error("theta_basis: d must lie in 1..6");
  static std::mutex mu;
  static std::array<std::unique_ptr<ThetaBasis>, 7> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[d]) cache[d] = build_theta_basis(d);
  return *cache[d];
}

FierzResiduals fierz_check(const FockState& psi, const CliffordOp& A,
                           const CliffordOp& B) {
  const int d = psi.d;
  if (d < 1 || d > 6) throw std::length_error("fierz_check: d must lie in 1..6");
  const int n = 1 << d;
  if (A.rows() != n || A.cols() != n || B.rows() != n || B.cols() != n)
    throw std::domain_error("fierz_check: operators must be 2^d x 2^d");
  check_normalized_state(psi, "fierz_check");

  const FockState cpsi = chi_dual(psi);
  const Eigen::VectorXcd u = A * psi.a;  // A psi
  const Eigen::VectorXcd w = B * psi.a;  // B psi
  const Eigen::VectorXcd adag_psi = A.adjoint() * psi.a;

  FockState scratch = psi;
  const auto pairing_with = [&](const Eigen::VectorXcd& v) {
    scratch.a = v;
    return bilinear_pairing(psi, scratch);
  };

  const cd lhs1 = pairing_with(u) * std::conj(pairing_with(w));
  const cd lhs2 = cd(psi.a.dot(u)) * cd(cpsi.a.dot(B * cpsi.a));

  cd rhs1{0.0, 0.0};
  cd rhs2{0.0, 0.0};
  if (d <= 4) {
    const ThetaBasis& tb = theta_basis(d);
    const CliffordOp bdag = B.adjoint();
    for (std::size_t s = 0; s < tb.theta.size(); ++s) {
      rhs1 += cd(w.dot(tb.dual[s] * u)) * cd(cpsi.a.dot(tb.theta[s] * cpsi.a));
      // (A theta^S B)+ psi = B+ (theta^S)+ A+ psi
      const Eigen::VectorXcd mdag_psi = bdag * (tb.dual[s].adjoint() * adag_psi);
      rhs2 += pairing_with(tb.theta[s] * psi.a) * std::conj(pairing_with(mdag_psi));
    }
  } else {
    // Matrix-free: theta^S = s_k theta_S / 2^d and (theta^S)+ = theta_S / 2^d
    // with s_k = (-1)^{k(k-1)/2}, since theta_S+ = s_k theta_S.
    const double scale = 1.0 / static_cast<double>(n);
    const CliffordOp bdag = B.adjoint();
    const std::uint32_t count = 1u << (2 * d);
    for (std::uint32_t s = 0; s < count; ++s) {
      const int k = __builtin_popcount(s);
      const double sk = reversal_sign(k);
      Eigen::VectorXcd a1 = u;
      detail::apply_theta(d, s, a1);
      Eigen::VectorXcd a2 = cpsi.a;
      detail::apply_theta(d, s, a2);
      rhs1 += (sk * scale) * cd(w.dot(a1)) * cd(cpsi.a.dot(a2));
      Eigen::VectorXcd a3 = psi.a;
      detail::apply_theta(d, s, a3);
      Eigen::VectorXcd a4 = adag_psi;
      detail::apply_theta(d, s, a4);
      rhs2 += pairing_with(a3) * std::conj(scale * pairing_with(bdag * a4));
    }
  }

  FierzResiduals r;
  r.residual1 = std::abs(lhs1 - rhs1);
  r.residual2 = std::abs(lhs2 - rhs2);
  return r;
}

ProjectorResiduals projector_expansions_check(const FockState& psi) {
  check_normalized_state(psi, "projector_expansions_check");
  const ThetaBasis& tb = theta_basis(psi.d);
  const int n = 1 << psi.d;

  const FockState cpsi = chi_dual(psi);
  FockState scratch = psi;
  CliffordOp p = CliffordOp::Zero(n, n);
  CliffordOp pp = CliffordOp::Zero(n, n);
  for (std::size_t s = 0; s < tb.theta.size(); ++s) {
    const Eigen::VectorXcd tpsi = tb.theta[s] * psi.a;
    p += cd(psi.a.dot(tpsi)) * tb.dual[s];
    scratch.a = tpsi;
    pp += bilinear_pairing(psi, scratch) * tb.dual[s];
  }

  ProjectorResiduals r;
  r.p_residual = (p - psi.a * psi.a.adjoint()).norm();
  r.p_prime_residual = (pp - psi.a * cpsi.a.adjoint()).norm();
  return r;
}

}  // namespace fermi
