#include "fermi/rdm.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fermi/invariants.hpp"

namespace fermi {

namespace {

constexpr double kPairDomainSlack = 1e-9;

double xlogx_over3(double lam) {
  // lam/3 * ln(lam/3) with the 0 ln 0 := 0 convention
  if (lam <= 0.0) return 0.0;
  return (lam / 3.0) * std::log(lam / 3.0);
}

// binary-entropy-style factor h(t) = -(1/3)(t ln(t/3) + (1-t) ln((1-t)/3))
double h_factor(double t) {
  double s = 0.0;
  if (t > 0.0) s += t * std::log(t / 3.0);
  if (t < 1.0) s += (1.0 - t) * std::log((1.0 - t) / 3.0);
  return -s / 3.0;
}

}  // namespace

const std::array<std::pair<int, int>, 15>& mode_pairs() {
  static const std::array<std::pair<int, int>, 15> table = [] {
    std::array<std::pair<int, int>, 15> out{};
    int t = 0;
    for (int i = 1; i <= kModes; ++i)
      for (int j = i + 1; j <= kModes; ++j) out[t++] = {i, j};
    return out;
  }();
  return table;
}

int pair_index(int i, int j) {
  static const std::array<std::array<int, 7>, 7> table = [] {
    std::array<std::array<int, 7>, 7> out{};
    for (auto& row : out) row.fill(-1);
    const auto& ps = mode_pairs();
    for (int t = 0; t < 15; ++t) out[ps[t].first][ps[t].second] = t;
    return out;
  }();
  return table[i][j];
}

Mat6 one_rdm(const FermiState336& p) {
  // rho_i^j = (1/2) sum_{nm} P_inm conj(P_jnm) = sum_{n<m} P_inm conj(P_jnm)
  Mat6 rho = Mat6::Zero();
  const auto& ps = mode_pairs();
  for (int i = 1; i <= 6; ++i) {
    for (int j = i; j <= 6; ++j) {
      cd acc{0.0, 0.0};
      for (const auto& [n, m] : ps)
        acc += p.amplitude(i, n, m) * std::conj(p.amplitude(j, n, m));
      rho(i - 1, j - 1) = acc;
      if (j != i) rho(j - 1, i - 1) = std::conj(acc);
    }
  }
  return rho;
}

Mat15 two_rdm(const FermiState336& p) {
  // Entry ((ij),(kl)) = sum_n P_ijn conj(P_kln); this ordered-pair matrix
  // carries twice the raw (1/2)-weighted tensor components, which is exactly
  // what restores Tr = 3 ||P||^2 on the 15-dimensional pair basis.
  Mat15 m = Mat15::Zero();
  const auto& ps = mode_pairs();
  for (int r = 0; r < 15; ++r) {
    const auto [i, j] = ps[r];
    for (int c = r; c < 15; ++c) {
      const auto [k, l] = ps[c];
      cd acc{0.0, 0.0};
      for (int n = 1; n <= 6; ++n)
        acc += p.amplitude(i, j, n) * std::conj(p.amplitude(k, l, n));
      m(r, c) = acc;
      if (c != r) m(c, r) = std::conj(acc);
    }
  }
  return m;
}

Spectrum6 rdm_spectrum(const Mat6& rho) {
  const Mat6 herm = (rho + rho.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat6> es(herm, Eigen::EigenvaluesOnly);
  Spectrum6 out;
  for (int i = 0; i < 6; ++i) out(i) = es.eigenvalues()(5 - i);
  return out;
}

double dual_one_rdm_check(const FermiState336& p) {
  if (std::abs(p.norm_sq() - 1.0) > 1e-12)
    throw std::domain_error("dual_one_rdm_check requires a normalized state");
  const Mat6 lhs = one_rdm(dual_state(p));
  const Mat6 rhs = Mat6::Identity() - one_rdm(p);
  return (lhs - rhs).norm();
}

OccupationConstraints occupation_constraints(const Spectrum6& descending) {
  OccupationConstraints out{};
  for (int a = 0; a < 3; ++a)
    out.equality_residuals[a] = std::abs(descending(a) + descending(5 - a) - 1.0);
  out.inequality_slack = descending(4) + descending(5) - descending(3);
  return out;
}

double von_neumann_entropy(const Spectrum6& eigenvalues) {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) {
    double lam = eigenvalues(i);
    if (lam < 0.0) {
      if (lam < -1e-10)
        throw std::domain_error("von_neumann_entropy: eigenvalue below -1e-10");
      lam = 0.0;
    }
    s -= xlogx_over3(lam);
  }
  return s;
}

double von_neumann_entropy(const Mat6& rho) {
  return von_neumann_entropy(rdm_spectrum(rho));
}

Spectrum6 zero_con_spectrum(double d_abs) {
  if (d_abs < -kPairDomainSlack || d_abs > 0.25 + kPairDomainSlack)
    throw std::domain_error("zero_con_spectrum requires |D| in [0, 1/4]");
  d_abs = std::min(std::max(d_abs, 0.0), 0.25);
  const double lam = (1.0 + std::sqrt(1.0 - 4.0 * d_abs)) / 2.0;
  Spectrum6 out;
  out << lam, lam, lam, 1.0 - lam, 1.0 - lam, 1.0 - lam;
  return out;
}

double entropy_curve(CurveKind kind, double x) {
  switch (kind) {
    case CurveKind::ZeroCon: {
      if (x < -kPairDomainSlack || x > 1.5 + kPairDomainSlack)
        throw std::domain_error("entropy_curve(zero_con): x must lie in [0, 3/2]");
      x = std::min(std::max(x, 0.0), 1.5);
      const double lam = (1.0 + std::sqrt(1.0 - 2.0 * x / 3.0)) / 2.0;
      return 3.0 * h_factor(lam);
    }
    case CurveKind::Biseparable: {
      if (x < -kPairDomainSlack || x > 1.0 + kPairDomainSlack)
        throw std::domain_error("entropy_curve(biseparable): x must lie in [0, 1]");
      x = std::min(std::max(x, 0.0), 1.0);
      const double lam = (1.0 + std::sqrt(1.0 - x)) / 2.0;
      return std::log(3.0) / 3.0 + 2.0 * h_factor(lam);
    }
    case CurveKind::WSpecial: {
      if (x < 1.0 - kPairDomainSlack || x > 1.5 + kPairDomainSlack)
        throw std::domain_error("entropy_curve(w_special): x must lie in [1, 3/2]");
      x = std::min(std::max(x, 1.0), 1.5);
      const double lam3 = (1.0 + std::sqrt(3.0 - 2.0 * x)) / 2.0;
      return 2.0 * h_factor(0.5) + h_factor(lam3);
    }
  }
  throw std::domain_error("entropy_curve: unknown curve kind");
}

std::array<NaturalOrbital, 6> natural_orbitals(const FermiState336& p) {
  const Mat6 rho = one_rdm(p);
  Eigen::SelfAdjointEigenSolver<Mat6> es((rho + rho.adjoint()) / 2.0);
  std::array<NaturalOrbital, 6> out{};
  const auto& ps = mode_pairs();
  for (int r = 0; r < 6; ++r) {
    const int src = 5 - r;  // descending occupation
    out[r].occupation = es.eigenvalues()(src);
    out[r].orbital = es.eigenvectors().col(src);
    for (int t = 0; t < 15; ++t) {
      const auto [i, j] = ps[t];
      cd acc{0.0, 0.0};
      for (int k = 1; k <= 6; ++k)
        acc += p.amplitude(i, j, k) * std::conj(out[r].orbital(k - 1));
      out[r].pair_vector(t) = acc;
    }
  }
  return out;
}

double plucker_residual(const Vec15& q) {
  // signed pair component lookup
  const auto qc = [&q](int i, int j) -> cd {
    if (i == j) return cd{0.0, 0.0};
    return (i < j) ? q(pair_index(i, j)) : -q(pair_index(j, i));
  };
  double sum = 0.0;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k)
        for (int l = k + 1; l <= 6; ++l) {
          const cd comp = qc(i, j) * qc(k, l) - qc(i, k) * qc(j, l) + qc(i, l) * qc(j, k);
          sum += std::norm(comp);
        }
  return std::sqrt(sum);
}

bool plucker_separable(const Vec15& q, double tol) {
  return plucker_residual(q) <= tol * q.squaredNorm();
}

KRhoCommutator k_rho_commutator(const FermiState336& p) {
  const Mat6 k = k_matrix(p);
  const Mat6 rbar = one_rdm(p).conjugate();
  KRhoCommutator out;
  out.matrix = k * rbar - rbar * k;
  out.norm = out.matrix.norm();
  return out;
}

double k_rho_trace_identity_residual(const FermiState336& p) {
  const Mat6 k = k_matrix(p);
  const Mat6 rho = one_rdm(p);
  const Mat6 rbar = rho.conjugate();
  const double t1 = rho.trace().real();
  const double t2 = (rho * rho).trace().real();
  const double t3 = (rho * rho * rho).trace().real();
  const double t4 = (rho * rho * rho * rho).trace().real();
  const cd trk2 = (k * k).trace();
  const double lhs = (k * rbar * k.adjoint() * rbar).trace().real();
  const double rhs = std::pow(t1, 4) / 324.0 - t3 * t1 / 9.0 - t2 * t2 / 4.0 + t4 +
                     t1 * (k * k.adjoint() * rbar).trace().real() / 3.0 -
                     std::norm(trk2) / 12.0;
  return std::abs(lhs - rhs);
}

double commutator_norm_identity_residual(const FermiState336& p) {
  const Mat6 k = k_matrix(p);
  const Mat6 rbar = one_rdm(p).conjugate();
  const Mat6 c = k * rbar - rbar * k;
  const double lhs = c.squaredNorm();
  const Mat6 anti = k * k.adjoint() + k.adjoint() * k;
  const double rhs = (rbar * rbar * anti).trace().real() -
                     2.0 * (k * rbar * k.adjoint() * rbar).trace().real();
  return std::abs(lhs - rhs);
}

}  // namespace fermi
