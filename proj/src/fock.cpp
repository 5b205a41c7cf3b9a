#include "fermi/fock.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermi/rng.hpp"
#include "fock_internal.hpp"

namespace fermi {

namespace {

using detail::apply_annihilate;
using detail::apply_create;
using detail::concat_sign;
using detail::jw_sign;
using detail::reversal_sign;

void check_d(int d) {
  if (d < 1 || d > 8)
    throw std::length_error("mode count d must lie in 1..8 for dense Fock operators");
}

void check_mode(int d, int i) {
  check_d(d);
  if (i < 1 || i > d) throw std::domain_error("mode label outside 1..d");
}

}  // namespace

FockState FockState::zero(int d) {
  check_d(d);
  FockState s;
  s.d = d;
  s.a = Eigen::VectorXcd::Zero(1 << d);
  return s;
}

FockState FockState::vacuum(int d) {
  FockState s = zero(d);
  s.a[0] = cd{1.0, 0.0};
  return s;
}

FockState FockState::basis(int d, std::uint32_t mask) {
  FockState s = zero(d);
  if (mask >= (1u << d)) throw std::domain_error("basis mask does not fit in d bits");
  s.a[mask] = cd{1.0, 0.0};
  return s;
}

CliffordOp create_op(int d, int i) {
  check_mode(d, i);
  const int bit = i - 1;
  const int n = 1 << d;
  CliffordOp m = CliffordOp::Zero(n, n);
  for (int src = 0; src < n; ++src)
    if (!((src >> bit) & 1)) m(src | (1 << bit), src) = jw_sign(src, bit);
  return m;
}

CliffordOp annihilate_op(int d, int i) {
  // real signed-permutation matrix: the adjoint is the transpose
  return create_op(d, i).transpose();
}

double car_max_residual(int d) {
  check_d(d);
  // Exact evaluation on basis states through the bit-level action: every
  // anticommutator maps a basis state to (at most) one basis component with
  // an integer coefficient.
  const int n = 1 << d;
  double worst = 0.0;
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
  for (int m = 0; m < n; ++m) {
    e[m] = 1.0;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Eigen::VectorXcd pf = apply_create(d, i, apply_annihilate(d, j, e)) +
                                    apply_annihilate(d, j, apply_create(d, i, e));
        Eigen::VectorXcd want = Eigen::VectorXcd::Zero(n);
        if (i == j) want[m] = 1.0;
        worst = std::max(worst, (pf - want).cwiseAbs().maxCoeff());
        const Eigen::VectorXcd pp = apply_create(d, i, apply_create(d, j, e)) +
                                    apply_create(d, j, apply_create(d, i, e));
        worst = std::max(worst, pp.cwiseAbs().maxCoeff());
        const Eigen::VectorXcd ff = apply_annihilate(d, i, apply_annihilate(d, j, e)) +
                                    apply_annihilate(d, j, apply_annihilate(d, i, e));
        worst = std::max(worst, ff.cwiseAbs().maxCoeff());
      }
    }
    e[m] = 0.0;
  }
  return worst;
}

cd bilinear_pairing(const FockState& phi, const FockState& psi) {
  if (phi.d != psi.d)
    throw std::domain_error("bilinear_pairing: mode counts differ");
  const int d = phi.d;
  const std::uint32_t full = (1u << d) - 1u;
  cd tot{0.0, 0.0};
  for (std::uint32_t s = 0; s <= full; ++s) {
    const int k = __builtin_popcount(s);
    tot += reversal_sign(k) * phi.a[s] * psi.a[full ^ s] * concat_sign(s, full ^ s);
  }
  return tot;
}

FockState chi_dual(const FockState& psi) {
  const int d = psi.d;
  const std::uint32_t full = (1u << d) - 1u;
  FockState out = FockState::zero(d);
  for (std::uint32_t t = 0; t <= full; ++t) {
    const std::uint32_t s = full ^ t;
    const int k = __builtin_popcount(s);
    out.a[t] = std::conj(psi.a[s]) * reversal_sign(k) * concat_sign(s, t);
  }
  return out;
}

ChiPropertyReport chi_properties_check(int d, int samples, std::uint64_t seed) {
  check_d(d);
  ChiPropertyReport rep{};
  const int dd = d * (d - 1) / 2;
  rep.sign = (dd % 2 == 0) ? 1 : -1;

  double worst = 0.0;
  const int n = 1 << d;
  for (int m = 0; m < n; ++m) {
    FockState e = FockState::basis(d, m);
    FockState twice = chi_dual(chi_dual(e));
    twice.a[m] -= static_cast<double>(rep.sign);
    worst = std::max(worst, twice.a.cwiseAbs().maxCoeff());
  }
  rep.involution_residual = worst;

  worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    Rng rng = Rng::stream(seed, t);
    FockState phi = FockState::zero(d), psi = FockState::zero(d);
    for (int m = 0; m < n; ++m) {
      phi.a[m] = rng.cgaussian();
      psi.a[m] = rng.cgaussian();
    }
    const cd lhs = chi_dual(phi).a.dot(chi_dual(psi).a);  // <chi phi | chi psi>
    const cd rhs = psi.a.dot(phi.a);                      // <psi | phi>
    worst = std::max(worst, std::abs(lhs - rhs) / (phi.norm() * psi.norm()));
  }
  rep.antiunitarity_residual = worst;
  return rep;
}

void validate(const SpinGenerator& gen) {
  const int d = gen.modes();
  if (d < 1 || d > 8) throw std::length_error("spin generator mode count outside 1..8");
  if (gen.A.rows() != d || gen.A.cols() != d || gen.B.rows() != d ||
      gen.B.cols() != d || gen.beta.rows() != d || gen.beta.cols() != d)
    throw std::domain_error("spin generator blocks must all be d x d");
  if ((gen.B + gen.B.transpose()).cwiseAbs().maxCoeff() > 1e-13)
    throw std::domain_error("spin generator B must be antisymmetric");
  if ((gen.beta + gen.beta.transpose()).cwiseAbs().maxCoeff() > 1e-13)
    throw std::domain_error("spin generator beta must be antisymmetric");
}

CliffordOp spin_generator_op(const SpinGenerator& gen) {
  validate(gen);
  const int d = gen.modes();
  const int n = 1 << d;
  std::vector<CliffordOp> p(d), f(d);
  for (int i = 0; i < d; ++i) {
    p[i] = create_op(d, i + 1);
    f[i] = annihilate_op(d, i + 1);
  }
  CliffordOp t = CliffordOp::Zero(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (gen.A(i, j) != cd{0.0, 0.0})
        t += 0.5 * gen.A(i, j) * (p[j] * f[i] - f[i] * p[j]);
      if (gen.B(i, j) != cd{0.0, 0.0}) t -= 0.5 * gen.B(i, j) * (p[i] * p[j]);
      if (gen.beta(i, j) != cd{0.0, 0.0}) t -= 0.5 * gen.beta(i, j) * (f[i] * f[j]);
    }
  return t;
}

FockState spin_transform(const SpinGenerator& gen, const FockState& psi) {
  if (gen.modes() != psi.d)
    throw std::domain_error("spin_transform: generator and state mode counts differ");
  const CliffordOp t = spin_generator_op(gen);
  FockState out = psi;
  out.a = t.exp() * psi.a;
  return out;
}

Eigen::MatrixXcd spin_vector_action(const SpinGenerator& gen) {
  validate(gen);
  const int d = gen.modes();
  Eigen::MatrixXcd m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = gen.A;
  m.topRightCorner(d, d) = gen.beta;
  m.bottomLeftCorner(d, d) = gen.B;
  m.bottomRightCorner(d, d) = -gen.A.transpose();
  return m.exp();
}

int annihilator_dimension(const FockState& psi, double tol) {
  if (psi.norm_sq() == 0.0)
    throw std::domain_error("annihilator_dimension: zero state");
  const int d = psi.d;
  const int n = 1 << d;
  Eigen::MatrixXcd cols(n, 2 * d);
  for (int i = 0; i < d; ++i) {
    cols.col(i) = apply_create(d, i, psi.a);
    cols.col(d + i) = apply_annihilate(d, i, psi.a);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cols);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) <= cutoff) ++null_dim;
  return null_dim;
}

CliffordOp gamma_op(int d, int a) {
  check_d(d);
  if (a < 1 || a > 2 * d) throw std::domain_error("gamma index outside 1..2d");
  const int i = (a + 1) / 2;  // mode carrying this gamma
  const CliffordOp p = create_op(d, i);
  const CliffordOp f = annihilate_op(d, i);
  if (a % 2 == 1) return p + f;
  return cd{0.0, 1.0} * (p - f);
}

FockState embed_distinguishable(const std::vector<cd>& amplitudes,
                                const std::vector<int>& dims) {
  int total = 0;
  std::size_t count = 1;
  for (int dim : dims) {
    if (dim < 1) throw std::invalid_argument("embed_distinguishable: dims must be >= 1");
    total += dim;
    count *= static_cast<std::size_t>(dim);
  }
  if (total > 8)
    throw std::length_error("embed_distinguishable: sum of dims exceeds 8 modes");
  if (amplitudes.size() != count)
    throw std::invalid_argument("embed_distinguishable: amplitude count != product of dims");

  FockState out = FockState::zero(total);
  for (std::size_t flat = 0; flat < count; ++flat) {
    // decode row-major flat index (last subsystem fastest)
    std::size_t rest = flat;
    std::uint32_t mask = 0;
    for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
      const int mu = static_cast<int>(rest % dims[s]);
      rest /= dims[s];
      int offset = 0;
      for (int q = 0; q < s; ++q) offset += dims[q];
      mask |= 1u << (offset + mu);
    }
    out.a[mask] = amplitudes[flat];
  }
  return out;
}

FockState to_fock(const FermiState336& p) {
  FockState out = FockState::zero(6);
  const auto& ts = triples();
  for (int t = 0; t < kTriples; ++t) {
    const auto [i, j, k] = ts[t];
    out.a[(1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1))] = p.ordered()[t];
  }
  return out;
}

FermiState336 from_fock(const FockState& psi, double tol) {
  if (psi.d != 6) throw std::invalid_argument("from_fock: expected d = 6");
  FermiState336 out;
  double off_sq = 0.0;
  for (std::uint32_t m = 0; m < 64; ++m) {
    if (__builtin_popcount(m) == 3) continue;
    off_sq += std::norm(psi.a[m]);
  }
  if (std::sqrt(off_sq) > tol * psi.norm())
    throw std::invalid_argument("from_fock: state has weight outside the 3-particle sector");
  const auto& ts = triples();
  for (int t = 0; t < kTriples; ++t) {
    const auto [i, j, k] = ts[t];
    out.ordered()[t] = psi.a[(1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1))];
  }
  return out;
}

Eigen::MatrixXcd mode_occupation_matrix(const FockState& psi) {
  const int d = psi.d;
  Eigen::MatrixXcd f(d, d);
  for (int j = 0; j < d; ++j) {
    const Eigen::VectorXcd fj = apply_annihilate(d, j, psi.a);
    for (int i = 0; i < d; ++i)
      f(i, j) = psi.a.dot(apply_create(d, i, fj));  // <psi| p^i f_j psi>
  }
  return f;
}

Mat6 k_via_pairing(const FockState& psi) {
  if (psi.d != 6) throw std::invalid_argument("k_via_pairing: expected d = 6");
  Mat6 k;
  FockState tmp = psi;
  for (int j = 0; j < 6; ++j) {
    const Eigen::VectorXcd fj = apply_annihilate(6, j, psi.a);
    for (int i = 0; i < 6; ++i) {
      tmp.a = apply_create(6, i, fj);
      k(i, j) = bilinear_pairing(psi, tmp);
    }
  }
  return k;
}

}  // namespace fermi
