#include "fermi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermi/fock.hpp"
#include "fermi/invariants.hpp"
#include "fermi/io.hpp"
#include "fermi/qubit.hpp"
#include "fermi/rdm.hpp"
#include "fermi/rng.hpp"
#include "fermi/sampling.hpp"
#include "fermi/state.hpp"

namespace fermi {

namespace {

/// Running maximum; update() returns true when the maximum improved so the
/// caller can (lazily) attach reproduction info for the worst instance.
struct Worst {
  double value = -std::numeric_limits<double>::infinity();
  std::string info;

  bool update(double v) {
    if (v > value) {
      value = v;
      return true;
    }
    return false;
  }
  double get() const { return std::isfinite(value) ? value : 0.0; }
};

PropertyResult finish(std::string name, int count, const Worst& w, double tol) {
  PropertyResult r;
  r.name = std::move(name);
  r.count = count;
  r.worst = w.get();
  r.tol = tol;
  r.passed = r.worst <= tol;
  if (!r.passed) r.failure_info = w.info;
  return r;
}

std::string seed_info(std::uint64_t seed, std::uint64_t index) {
  return "seed=" + std::to_string(seed) + " index=" + std::to_string(index);
}

FermiState336 random_state(Rng& rng) {
  FermiState336 p;
  for (int t = 0; t < kTriples; ++t) p.ordered()[t] = rng.cgaussian();
  return p;
}

FermiState336 random_unit_state(Rng& rng) { return random_state(rng).normalized(); }

Mat6 random_matrix6(Rng& rng) {
  Mat6 g;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g(i, j) = rng.cgaussian();
  return g;
}

Mat6 random_invertible6(Rng& rng, double cond_cap) {
  for (;;) {
    const Mat6 g = random_matrix6(rng);
    Eigen::JacobiSVD<Mat6> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(5) > 0.0 && sv(0) / sv(5) <= cond_cap) return g;
  }
}

Mat6 random_unitary6(Rng& rng) {
  const Mat6 g = random_matrix6(rng);
  Eigen::HouseholderQR<Mat6> qr(g);
  return qr.householderQ();
}

Mat2 random_matrix2(Rng& rng) {
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = rng.cgaussian();
  return g;
}

ThreeQubitState random_unit_qubit(Rng& rng) {
  ThreeQubitState psi{};
  for (int i = 0; i < 8; ++i) psi.a[i] = rng.cgaussian();
  const double n = psi.norm();
  for (int i = 0; i < 8; ++i) psi.a[i] /= n;
  return psi;
}

FockState random_unit_fock(Rng& rng, int d) {
  FockState psi = FockState::zero(d);
  for (int m = 0; m < psi.a.size(); ++m) psi.a[m] = rng.cgaussian();
  psi.a /= psi.norm();
  return psi;
}

SpinGenerator random_generator(Rng& rng, int d, double scale) {
  SpinGenerator gen;
  gen.A.resize(d, d);
  Eigen::MatrixXcd x(d, d), y(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      gen.A(i, j) = scale * rng.cgaussian();
      x(i, j) = scale * rng.cgaussian();
      y(i, j) = scale * rng.cgaussian();
    }
  gen.B = x - x.transpose();
  gen.beta = y - y.transpose();
  return gen;
}

double state_distance(const FermiState336& a, const FermiState336& b) {
  return (a - b).norm();
}

/// x-coordinate of the entropy plots: 3 - Tr(rho^2) of a normalized state.
double purity_x(const FermiState336& p) {
  const Mat6 rho = one_rdm(p);
  return 3.0 - (rho * rho).trace().real();
}

ThreeQubitState qubit_ghz() {
  ThreeQubitState psi{};
  psi(0, 0, 0) = 1.0 / std::sqrt(2.0);
  psi(1, 1, 1) = 1.0 / std::sqrt(2.0);
  return psi;
}

ThreeQubitState qubit_w() {
  ThreeQubitState psi{};
  const double c = 1.0 / std::sqrt(3.0);
  psi(0, 0, 1) = c;
  psi(0, 1, 0) = c;
  psi(1, 0, 0) = c;
  return psi;
}

}  // namespace

namespace checks {

PropertyResult antisymmetry_access() {
  Rng rng = Rng::stream(99, 0);
  const FermiState336 p = random_state(rng);
  Worst w;
  int count = 0;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int signs[6] = {1, -1, -1, 1, 1, -1};
  for (const Triple& t : triples()) {
    const int v[3] = {t.i, t.j, t.k};
    const cd base = p.amplitude(t.i, t.j, t.k);
    for (int q = 0; q < 6; ++q) {
      const cd got =
          p.amplitude(v[perms[q][0]], v[perms[q][1]], v[perms[q][2]]);
      w.update(std::abs(got - static_cast<double>(signs[q]) * base));
      ++count;
    }
  }
  // repeated labels read as zero
  w.update(std::abs(p.amplitude(1, 1, 2)));
  w.update(std::abs(p.amplitude(3, 5, 3)));
  w.update(std::abs(p.amplitude(6, 6, 6)));
  count += 3;
  return finish("antisymmetry_access", count, w, 0.0);
}

PropertyResult group_composition(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const Mat6 g = random_matrix6(rng);
    const Mat6 h = random_matrix6(rng);
    const FermiState336 p = random_unit_state(rng);
    const FermiState336 lhs = apply_slocc(g * h, p);
    const FermiState336 rhs = apply_slocc(h, apply_slocc(g, p));
    if (w.update(state_distance(lhs, rhs) / (1.0 + rhs.norm())))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("group_composition", n, w, 1e-11);
}

PropertyResult duality_involution(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_state(rng);
    const cd c = rng.cgaussian();
    FermiState336 twice = dual_state(dual_state(p));
    if (w.update(state_distance(twice, cd{-1.0, 0.0} * p)) ||
        w.update(state_distance(dual_state(c * p),
                                std::conj(c) * dual_state(p))))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("duality_involution", n, w, 0.0);
}

PropertyResult unitary_isometry(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const Mat6 u = random_unitary6(rng);
    const FermiState336 p = random_unit_state(rng);
    const FermiState336 q = random_unit_state(rng);
    const FermiState336 up = apply_slocc(u, p);
    const FermiState336 uq = apply_slocc(u, q);
    const double r = std::max(
        std::abs(up.norm_sq() - p.norm_sq()),
        std::abs(inner_product(up, uq) - inner_product(p, q)));
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("unitary_isometry", n, w, 1e-12);
}

PropertyResult dual_chi_consistency(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    const FermiState336 a = dual_state(p);
    const FermiState336 b = from_fock(chi_dual(to_fock(p)));
    if (w.update(state_distance(a, b)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("dual_chi_consistency", n, w, 0.0);
}

PropertyResult canonical_ranks() {
  struct Case {
    FermiState336 state;
    ClassLabel label;
    int rank;
  };
  const Case cases[] = {
      {FermiState336{}, ClassLabel::Zero, 0},
      {state_separable(), ClassLabel::Separable, 0},
      {state_biseparable(), ClassLabel::Biseparable, 1},
      {state_w(), ClassLabel::W, 3},
      {state_ghz(), ClassLabel::GHZ, 6},
  };
  Worst w;
  for (const Case& c : cases) {
    const Classification got = classify_full(c.state);
    if (w.update((got.label == c.label && got.rank == c.rank) ? 0.0 : 1.0))
      w.info = std::string("state=") + to_json_line(c.state) +
               " got class=" + to_string(got.label) +
               " rank=" + std::to_string(got.rank);
  }
  return finish("canonical_ranks", 5, w, 0.0);
}

PropertyResult k_square_scalar(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    const FermiState336 p = sample_state(SampleClass::ZeroCon, seed, i);
    const Mat6 k = k_matrix(p);
    const Mat6 k2 = k * k;
    const cd scalar = k2.trace() / 6.0;
    if (w.update((k2 - scalar * Mat6::Identity()).norm()))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("k_square_scalar", n, w, 1e-12);
}

PropertyResult k_covariance(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const Mat6 g = random_invertible6(rng, 1e3);
    const FermiState336 p = random_unit_state(rng);
    const Mat6 lhs = k_matrix(apply_slocc(g, p));
    const Mat6 rhs = g.determinant() * g.inverse() * k_matrix(p) * g;
    if (w.update((lhs - rhs).norm() / (1.0 + rhs.norm())))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("k_covariance", n, w, 1e-10);
}

PropertyResult quartic_covariance(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const Mat6 g = random_matrix6(rng);
    // alternate generic states with the W orbit, where D must vanish
    const FermiState336 p =
        (i % 2 == 0) ? random_unit_state(rng) : state_w().normalized();
    const cd det = g.determinant();
    const cd lhs = quartic_d(apply_slocc(g, p));
    const cd rhs = det * det * quartic_d(p);
    if (w.update(std::abs(lhs - rhs) / (1.0 + std::abs(rhs))))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("quartic_covariance", n, w, 1e-9);
}

PropertyResult class_invariance(int n, std::uint64_t seed, double tol) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    FermiState336 base;
    switch (i % 4) {
      case 0: base = state_separable(); break;
      case 1: base = state_biseparable(); break;
      case 2: base = state_w(); break;
      default: base = state_ghz(); break;
    }
    const Mat6 g = random_invertible6(rng, 1e3);
    const ClassLabel want = classify(base, tol);
    const ClassLabel got = classify(apply_slocc(g, base).normalized(), tol);
    if (w.update(got == want ? 0.0 : 1.0))
      w.info = seed_info(seed, i) + " base=" + to_json_line(base) +
               " got=" + to_string(got);
  }
  return finish("class_invariance", n, w, 0.0);
}

PropertyResult anticommutator_identity(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    FermiState336 p = random_unit_state(rng);
    p *= cd{0.5 + 1.5 * rng.uniform(), 0.0};  // exercise unnormalized states
    if (w.update(anticommutator_identity_residual(p)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("anticommutator_identity", n, w, 1e-11);
}

PropertyResult ckw_inequality(int n_ghz, int n_canonical4, std::uint64_t seed) {
  Worst w;
  const auto violation = [&](const FermiState336& p) {
    const double x = purity_x(p);
    const double six_d = 6.0 * std::abs(quartic_d(p));
    return std::max({six_d - x, x - 1.5, 0.0});
  };
  for (int i = 0; i < n_ghz; ++i) {
    const FermiState336 p = sample_state(SampleClass::GhzRandom, seed, i);
    if (w.update(violation(p)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  for (int i = 0; i < n_canonical4; ++i) {
    const FermiState336 p = sample_state(SampleClass::Canonical4, seed + 1, i);
    if (w.update(violation(p)))
      w.info = seed_info(seed + 1, i) + " state=" + to_json_line(p);
  }
  // GHZ/sqrt(2) saturates both sides at 3/2
  const FermiState336 ghz = state_ghz().normalized();
  const double x = purity_x(ghz);
  if (w.update(std::max(std::abs(x - 1.5),
                        std::abs(6.0 * std::abs(quartic_d(ghz)) - x))))
    w.info = "state=" + to_json_line(ghz);
  return finish("ckw_inequality", n_ghz + n_canonical4 + 1, w, 1e-11);
}

PropertyResult kk_dagger_identity(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    FermiState336 p = random_unit_state(rng);
    p *= cd{0.5 + 1.5 * rng.uniform(), 0.0};  // include unnormalized states
    const Mat6 rho = one_rdm(p);
    const double tr = rho.trace().real();
    const double tr2 = (rho * rho).trace().real();
    const double rhs = (tr * tr - 3.0 * tr2) / 3.0;
    if (w.update(std::abs(tr_kk_dagger(p) - rhs)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("kk_dagger_identity", n, w, 1e-11);
}

PropertyResult two_rdm_pairing_identity(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    const Mat15 m = two_rdm(p);
    const Mat15 md = two_rdm(dual_state(p));
    const double lhs = (m * md).trace().real();
    if (w.update(std::abs(lhs - tr_kk_dagger(p))))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("two_rdm_pairing_identity", n, w, 1e-11);
}

PropertyResult zero_con_phase(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    const FermiState336 p = sample_state(SampleClass::ZeroCon, seed, i);
    const Mat6 k = k_matrix(p);
    const cd trk2 = (k * k).trace();
    double r = std::abs(concurrence(p));
    if (std::abs(trk2) > 1e-14) {
      const cd phase = trk2 / std::abs(trk2);
      r = std::max(r, (k - phase * k.adjoint()).norm());
    }
    const Spectrum6 spectrum = rdm_spectrum(one_rdm(p));
    const Spectrum6 want = zero_con_spectrum(std::abs(trk2) / 6.0);
    r = std::max(r, (spectrum - want).cwiseAbs().maxCoeff());
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("zero_con_phase", n, w, 1e-10);
}

PropertyResult borland_dennis_random(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    const OccupationConstraints oc =
        occupation_constraints(rdm_spectrum(one_rdm(p)));
    const double r = std::max({oc.equality_residuals[0], oc.equality_residuals[1],
                               oc.equality_residuals[2], -oc.inequality_slack});
    if (w.update(std::max(r, 0.0)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("borland_dennis_random", n, w, 1e-10);
}

PropertyResult two_rdm_spectrum(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    Eigen::SelfAdjointEigenSolver<Mat15> es(two_rdm(p),
                                            Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();  // ascending, size 15
    const Spectrum6 one = rdm_spectrum(one_rdm(p));
    double r = 0.0;
    for (int a = 0; a < 6; ++a) r = std::max(r, std::abs(ev(14 - a) - one(a)));
    for (int a = 0; a < 9; ++a) r = std::max(r, std::abs(ev(a)));
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("two_rdm_spectrum", n, w, 1e-10);
}

PropertyResult dual_one_rdm(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    if (w.update(dual_one_rdm_check(p)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("dual_one_rdm", n, w, 1e-11);
}

PropertyResult zero_con_curve(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    const FermiState336 p = sample_state(SampleClass::ZeroCon, seed, i);
    const Mat6 rho = one_rdm(p);
    const double s = von_neumann_entropy(rho);
    const double curve = entropy_curve(CurveKind::ZeroCon, purity_x(p));
    if (w.update(std::abs(s - curve)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("zero_con_curve", n, w, 1e-8);
}

PropertyResult biseparable_curve(int n, std::uint64_t seed, double cond_cap) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    const FermiState336 p =
        sample_state(SampleClass::Biseparable, seed, i, cond_cap);
    const Mat6 rho = one_rdm(p);
    const double s = von_neumann_entropy(rho);
    const double curve = entropy_curve(CurveKind::Biseparable, purity_x(p));
    if (w.update(std::abs(s - curve)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("biseparable_curve", n, w, 1e-7);
}

PropertyResult w_special_curve(int n) {
  Worst w;
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n * (pi / 2.0);
    const double c = std::cos(t) / std::sqrt(2.0);
    const double s = std::sin(t) / std::sqrt(2.0);
    const FermiState336 p = canonical4(c, s, s, c).normalized();
    const double x = purity_x(p);
    const double entropy = von_neumann_entropy(one_rdm(p));
    double r = std::abs(entropy - entropy_curve(CurveKind::WSpecial, x));
    r = std::max({r, 1.0 - x - 1e-9, x - 1.5 - 1e-9});
    if (w.update(r)) w.info = "t=" + std::to_string(t);
  }
  return finish("w_special_curve", n, w, 1e-9);
}

PropertyResult entropy_upper_bound(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    const FermiState336 p = sample_state(SampleClass::GhzRandom, seed, i);
    const double s = von_neumann_entropy(one_rdm(p));
    const double bound = entropy_curve(CurveKind::ZeroCon, purity_x(p));
    if (w.update(std::max(s - bound, 0.0)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("entropy_upper_bound", n, w, 1e-9);
}

PropertyResult natural_orbital_residuals(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    const Mat6 rho = one_rdm(p);
    const Mat15 m = two_rdm(p);
    double r = 0.0;
    for (const NaturalOrbital& orb : natural_orbitals(p)) {
      r = std::max(r, (rho * orb.orbital - orb.occupation * orb.orbital).norm());
      r = std::max(
          r, (m * orb.pair_vector - orb.occupation * orb.pair_vector).norm());
    }
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("natural_orbital_residuals", n, w, 1e-10);
}

PropertyResult natural_orbital_separability(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    const FermiState336 p = sample_state(SampleClass::ZeroCon, seed, i);
    double r = 0.0;
    for (const NaturalOrbital& orb : natural_orbitals(p)) {
      const double q2 = orb.pair_vector.squaredNorm();
      if (q2 > 1e-12) r = std::max(r, plucker_residual(orb.pair_vector) / q2);
    }
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("natural_orbital_separability", n, w, 1e-8);
}

PropertyResult long_trace_identity(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    if (w.update(k_rho_trace_identity_residual(p)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("long_trace_identity", n, w, 1e-10);
}

PropertyResult commutator_norm_identity(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const FermiState336 p = random_unit_state(rng);
    if (w.update(commutator_norm_identity_residual(p)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("commutator_norm_identity", n, w, 1e-9);
}

PropertyResult biseparable_lower_bound_survey(int n, std::uint64_t seed) {
  // Observation logged from sampled families, not asserted as a theorem:
  // below x = 1 the biseparable curve stays under the sampled entropies.
  Worst w;
  w.update(0.0);
  for (int i = 0; i < n; ++i) {
    const SampleClass c =
        (i % 2 == 0) ? SampleClass::GhzRandom : SampleClass::WClass;
    const FermiState336 p = sample_state(c, seed, i);
    const double x = purity_x(p);
    if (x > 1.0) continue;
    const double s = von_neumann_entropy(one_rdm(p));
    const double below = entropy_curve(CurveKind::Biseparable, x) - s;
    if (w.update(std::max(below, 0.0)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(p);
  }
  return finish("biseparable_lower_bound_survey", n, w, 1.0);
}

PropertyResult qubit_reduction(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const ThreeQubitState psi = random_unit_qubit(rng);
    const MonogamyReport rep = ckw_report(psi);
    const double r = std::max(
        {rep.con_residual, rep.sum_rule_residual, rep.pair_flip_residual});
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("qubit_reduction", n, w, 1e-9);
}

PropertyResult qubit_closed_forms() {
  Worst w;
  const MonogamyReport g = ckw_report(qubit_ghz());
  double r = std::max({std::abs(g.tau - 1.0), g.c_ab, g.c_ac, g.c_bc,
                       std::abs(g.det_a - 0.25), std::abs(g.det_b - 0.25),
                       std::abs(g.det_c - 0.25),
                       std::abs(g.tr_kk_dagger - 1.5), std::abs(g.con)});
  // GHZ pair RDM is diag(1/2, 0, 0, 1/2)
  Mat4 want = Mat4::Zero();
  want(0, 0) = 0.5;
  want(3, 3) = 0.5;
  r = std::max(r, (pair_rdm(qubit_ghz(), QubitPair::AB) - want).norm());
  if (w.update(r)) w.info = "state=" + to_json_line(qubit_ghz());

  const MonogamyReport ww = ckw_report(qubit_w());
  const double third = 1.0 / 3.0;
  r = std::max({std::abs(ww.tau), std::abs(ww.c_ab - 2.0 * third),
                std::abs(ww.c_ac - 2.0 * third), std::abs(ww.c_bc - 2.0 * third),
                std::abs(ww.det_a - 2.0 / 9.0), std::abs(ww.det_b - 2.0 / 9.0),
                std::abs(ww.det_c - 2.0 / 9.0),
                std::abs(ww.con - 4.0 * third), std::abs(ww.tr_kk_dagger - 4.0 * third)});
  if (w.update(r)) w.info = "state=" + to_json_line(qubit_w());
  return finish("qubit_closed_forms", 2, w, 1e-10);
}

PropertyResult monogamy_random(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const ThreeQubitState psi = random_unit_qubit(rng);
    const MonogamyReport rep = ckw_report(psi);
    double r = std::max({rep.ckw_residuals[0], rep.ckw_residuals[1],
                         rep.ckw_residuals[2]});
    // pairwise tangles never exceed the one-qubit mixedness budget
    const double c2ab = rep.c_ab * rep.c_ab;
    const double c2ac = rep.c_ac * rep.c_ac;
    const double c2bc = rep.c_bc * rep.c_bc;
    r = std::max({r, c2ab + c2ac - 4.0 * rep.det_a,
                  c2ab + c2bc - 4.0 * rep.det_b,
                  c2ac + c2bc - 4.0 * rep.det_c});
    if (w.update(std::max(r, 0.0)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("monogamy_random", n, w, 1e-9);
}

PropertyResult hyperdet_matches_quartic(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const ThreeQubitState psi = random_unit_qubit(rng);
    if (w.update(std::abs(hyperdeterminant(psi) - quartic_d(embed(psi)))))
      w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("hyperdet_matches_quartic", n, w, 1e-15);
}

PropertyResult qubit_dual_embedding(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const ThreeQubitState psi = random_unit_qubit(rng);
    if (w.update(dual_embedding_residual(psi)))
      w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("qubit_dual_embedding", n, w, 0.0);
}

PropertyResult qubit_block_rdm(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const ThreeQubitState psi = random_unit_qubit(rng);
    const Mat6 rho = one_rdm(embed(psi));
    double r = 0.0;
    for (int q = 0; q < 3; ++q) {
      const Mat2 block_q = (Mat2() << rho(q, q), rho(q, q + 3),
                            rho(q + 3, q), rho(q + 3, q + 3)).finished();
      r = std::max(r, (block_q - qubit_rdm(psi, q + 1)).norm());
    }
    // everything off the three {q, q+3} blocks vanishes
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (a % 3 != b % 3) r = std::max(r, std::abs(rho(a, b)));
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("qubit_block_rdm", n, w, 1e-12);
}

PropertyResult qubit_slocc_compat(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const Mat2 g1 = random_matrix2(rng);
    const Mat2 g2 = random_matrix2(rng);
    const Mat2 g3 = random_matrix2(rng);
    const ThreeQubitState psi = random_unit_qubit(rng);
    const FermiState336 lhs = embed(apply_local(g1, g2, g3, psi));
    const FermiState336 rhs =
        apply_slocc(local_to_slocc(g1, g2, g3), embed(psi));
    if (w.update(state_distance(lhs, rhs) / (1.0 + rhs.norm())))
      w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("qubit_slocc_compat", n, w, 1e-11);
}

PropertyResult pair_rdm_hosting(int n, std::uint64_t seed) {
  // The fermionic two-particle RDM of an embedded state contains each qubit
  // pair RDM on the host-mode pairs, up to the pair-reordering signs.
  struct Hosting {
    QubitPair pair;
    int base1, base2;  // host modes at qubit value 0
  };
  const Hosting hostings[] = {{QubitPair::AB, 1, 2},
                              {QubitPair::AC, 1, 3},
                              {QubitPair::BC, 2, 3}};
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const ThreeQubitState psi = random_unit_qubit(rng);
    const Mat15 m = two_rdm(embed(psi));
    double r = 0.0;
    for (const Hosting& h : hostings) {
      int idx[4];
      double sgn[4];
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          int a = h.base1 + 3 * s, b = h.base2 + 3 * t;
          double sg = 1.0;
          if (a > b) {
            std::swap(a, b);
            sg = -1.0;
          }
          idx[2 * s + t] = pair_index(a, b);
          sgn[2 * s + t] = sg;
        }
      Mat4 hosted;
      for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
          hosted(row, col) = sgn[row] * sgn[col] * m(idx[row], idx[col]);
      r = std::max(r, (hosted - pair_rdm(psi, h.pair)).norm());
    }
    if (w.update(r)) w.info = seed_info(seed, i) + " state=" + to_json_line(psi);
  }
  return finish("pair_rdm_hosting", n, w, 1e-12);
}

PropertyResult fock_car() {
  Worst w;
  for (int d = 1; d <= 8; ++d) {
    if (w.update(car_max_residual(d))) w.info = "d=" + std::to_string(d);
  }
  return finish("fock_car", 8, w, 0.0);
}

PropertyResult pairing_symmetry(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 2 + static_cast<int>(i % 5);  // 2..6
    const FockState phi = random_unit_fock(rng, d);
    const FockState psi = random_unit_fock(rng, d);
    const double sign = (d * (d - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double r = std::abs(bilinear_pairing(phi, psi) -
                              sign * bilinear_pairing(psi, phi));
    if (w.update(r)) w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("pairing_symmetry", n, w, 1e-13);
}

PropertyResult pairing_spin_invariance(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 2 + static_cast<int>(i % 5);  // 2..6
    const SpinGenerator gen = random_generator(rng, d, 0.3);
    const FockState phi = random_unit_fock(rng, d);
    const FockState psi = random_unit_fock(rng, d);
    const cd before = bilinear_pairing(phi, psi);
    const cd after =
        bilinear_pairing(spin_transform(gen, phi), spin_transform(gen, psi));
    if (w.update(std::abs(after - before)))
      w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("pairing_spin_invariance", n, w, 1e-9);
}

PropertyResult transpose_adjointness(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 3 + static_cast<int>(i % 2);  // 3..4
    const int len = 1 + static_cast<int>(rng.uniform() * 3.0);
    const int dim = 1 << d;
    CliffordOp a = CliffordOp::Identity(dim, dim);
    CliffordOp at = CliffordOp::Identity(dim, dim);
    for (int s = 0; s < len; ++s) {
      const int mode = 1 + static_cast<int>(rng.uniform() * d);
      const CliffordOp v = rng.uniform() < 0.5 ? create_op(d, mode)
                                               : annihilate_op(d, mode);
      a = a * v;    // append on the right
      at = v * at;  // transpose reverses the factor order
    }
    const FockState phi = random_unit_fock(rng, d);
    const FockState psi = random_unit_fock(rng, d);
    FockState apsi = psi, atphi = phi;
    apsi.a = a * psi.a;
    atphi.a = at * phi.a;
    if (w.update(std::abs(bilinear_pairing(phi, apsi) -
                          bilinear_pairing(atphi, psi))))
      w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("transpose_adjointness", n, w, 1e-12);
}

PropertyResult chi_sign_sweep() {
  Worst w;
  for (int d = 2; d <= 8; ++d) {
    const ChiPropertyReport rep = chi_properties_check(d);
    const int want = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    const double r = std::max({rep.sign == want ? 0.0 : 1.0,
                               rep.involution_residual,
                               rep.antiunitarity_residual});
    if (w.update(r)) w.info = "d=" + std::to_string(d);
  }
  return finish("chi_sign_sweep", 7, w, 1e-12);
}

PropertyResult chi_rho_complement(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 3 + static_cast<int>(i % 4);  // 3..6
    const FockState psi = random_unit_fock(rng, d);
    const Eigen::MatrixXcd sum = mode_occupation_matrix(psi) +
                                 mode_occupation_matrix(chi_dual(psi));
    if (w.update((sum - Eigen::MatrixXcd::Identity(d, d)).norm()))
      w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("chi_rho_complement", n, w, 1e-11);
}

PropertyResult spin_parity(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 2 + static_cast<int>(i % 4);  // 2..5
    const SpinGenerator gen = random_generator(rng, d, 0.3);
    FockState even = FockState::zero(d), odd = FockState::zero(d);
    for (int m = 0; m < even.a.size(); ++m) {
      if (__builtin_popcount(static_cast<unsigned>(m)) % 2 == 0)
        even.a[m] = rng.cgaussian();
      else
        odd.a[m] = rng.cgaussian();
    }
    even.a /= even.norm();
    odd.a /= odd.norm();
    const FockState te = spin_transform(gen, even);
    const FockState to = spin_transform(gen, odd);
    double r = 0.0;
    for (int m = 0; m < te.a.size(); ++m) {
      const bool m_even = __builtin_popcount(static_cast<unsigned>(m)) % 2 == 0;
      if (!m_even) r = std::max(r, std::abs(te.a[m]));
      if (m_even) r = std::max(r, std::abs(to.a[m]));
    }
    if (w.update(r)) w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("spin_parity", n, w, 1e-12);
}

PropertyResult spin_vector_covariance(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 2 + static_cast<int>(i % 3);  // 2..4
    const SpinGenerator gen = random_generator(rng, d, 0.3);
    const CliffordOp t = spin_generator_op(gen);
    const CliffordOp et = t.exp();
    const CliffordOp eti = (-t).exp();
    const Eigen::MatrixXcd m = spin_vector_action(gen);
    const int dim = 1 << d;
    std::vector<CliffordOp> basis(2 * d);
    for (int a = 0; a < d; ++a) {
      basis[a] = create_op(d, a + 1);
      basis[d + a] = annihilate_op(d, a + 1);
    }
    double r = 0.0;
    for (int a = 0; a < 2 * d; ++a) {
      const CliffordOp lhs = et * basis[a] * eti;
      CliffordOp rhs = CliffordOp::Zero(dim, dim);
      for (int b = 0; b < 2 * d; ++b) rhs += m(a, b) * basis[b];
      r = std::max(r, (lhs - rhs).norm() / (1.0 + rhs.norm()));
    }
    if (w.update(r)) w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("spin_vector_covariance", n, w, 1e-9);
}

PropertyResult annihilator_dimensions(std::uint64_t seed) {
  Worst w;
  int count = 0;
  const auto expect = [&](const FockState& psi, int want, const char* what) {
    const int got = annihilator_dimension(psi);
    if (w.update(got == want ? 0.0 : 1.0))
      w.info = std::string(what) + " d=" + std::to_string(psi.d) +
               " got=" + std::to_string(got);
    ++count;
  };
  for (int d = 2; d <= 6; ++d) expect(FockState::vacuum(d), d, "vacuum");
  for (int d = 2; d <= 5; ++d) {
    Rng rng = Rng::stream(seed, d);
    SpinGenerator gen = random_generator(rng, d, 0.4);
    gen.A.setZero();
    gen.beta.setZero();  // pure B-transform of the vacuum stays a pure spinor
    FockState psi = spin_transform(gen, FockState::vacuum(d));
    psi.a /= psi.norm();
    expect(psi, d, "b_transformed_vacuum");
  }
  {
    // vacuum + top state at d = 3: annihilated by nothing linear
    FockState psi = FockState::vacuum(3);
    psi.a[7] = 1.0;
    psi.a /= psi.norm();
    expect(psi, 0, "vacuum_plus_top");
  }
  {
    FockState psi = FockState::basis(4, 0b0001);  // one-particle determinant
    expect(psi, 4, "single_determinant");
  }
  return finish("annihilator_dimensions", count, w, 0.0);
}

PropertyResult theta_duality() {
  Worst w;
  int count = 0;
  for (int d = 1; d <= 4; ++d) {
    const ThetaBasis& tb = theta_basis(d);
    const int n = static_cast<int>(tb.theta.size());
    double r = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const cd tr = tb.dual[a].cwiseProduct(tb.theta[b].transpose()).sum();
        r = std::max(r, std::abs(tr - (a == b ? cd{1.0, 0.0} : cd{0.0, 0.0})));
      }
    // theta_S+ = s_k theta_S and theta_S^2 = s_k I with s_k = (-1)^{k(k-1)/2}
    const int dim = 1 << d;
    for (int s = 0; s < n; ++s) {
      const int k = __builtin_popcount(static_cast<unsigned>(s));
      const double sk = (k * (k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      r = std::max(r, (tb.theta[s].adjoint() - sk * tb.theta[s]).norm());
      r = std::max(
          r, (tb.theta[s] * tb.theta[s] - sk * CliffordOp::Identity(dim, dim))
                 .norm());
    }
    if (w.update(r)) w.info = "d=" + std::to_string(d);
    count += n;
  }
  {
    // d = 5 duals are trace-normalized; spot-check duality on a slice
    const ThetaBasis& tb = theta_basis(5);
    Rng rng = Rng::stream(5, 0);
    double r = 0.0;
    for (int t = 0; t < 400; ++t) {
      const int a = static_cast<int>(rng.uniform() * tb.theta.size());
      const int b = static_cast<int>(rng.uniform() * tb.theta.size());
      const cd tr = tb.dual[a].cwiseProduct(tb.theta[b].transpose()).sum();
      r = std::max(r, std::abs(tr - (a == b ? cd{1.0, 0.0} : cd{0.0, 0.0})));
    }
    if (w.update(r)) w.info = "d=5";
    count += 400;
  }
  return finish("theta_duality", count, w, 1e-12);
}

PropertyResult projector_expansions(int n, std::uint64_t seed) {
  Worst w;
  for (int i = 0; i < n; ++i) {
    Rng rng = Rng::stream(seed, i);
    const int d = 2 + static_cast<int>(i % 3);  // 2..4
    const FockState psi = random_unit_fock(rng, d);
    const ProjectorResiduals pr = projector_expansions_check(psi);
    if (w.update(std::max(pr.p_residual, pr.p_prime_residual)))
      w.info = seed_info(seed, i) + " d=" + std::to_string(d);
  }
  return finish("projector_expansions", n, w, 1e-10);
}

PropertyResult fierz_random(int n_d3, int n_d4, std::uint64_t seed) {
  Worst w;
  const auto run = [&](int d, int n, std::uint64_t subseed) {
    const int dim = 1 << d;
    for (int i = 0; i < n; ++i) {
      Rng rng = Rng::stream(subseed, i);
      const FockState psi = random_unit_fock(rng, d);
      CliffordOp a(dim, dim), b(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          a(r, c) = rng.cgaussian();
          b(r, c) = rng.cgaussian();
        }
      const FierzResiduals fr = fierz_check(psi, a, b);
      if (w.update(std::max(fr.residual1, fr.residual2)))
        w.info = seed_info(subseed, i) + " d=" + std::to_string(d);
    }
  };
  run(3, n_d3, seed);
  run(4, n_d4, seed + 1);
  return finish("fierz_random", n_d3 + n_d4, w, 1e-9);
}

PropertyResult fierz_kk_dagger_sweep(std::uint64_t seed) {
  Worst w;
  Rng rng = Rng::stream(seed, 0);
  const FermiState336 p = random_unit_state(rng);
  const FockState psi = to_fock(p);
  // K from the invariant pairing against the direct eps contraction
  const Mat6 diff = k_via_pairing(psi) - k_matrix(p);
  if (w.update(diff.cwiseAbs().maxCoeff()))
    w.info = "k_via_pairing state=" + to_json_line(p);
  // matrix-free Fierz path at d = 5 and d = 6 with quadratic operators
  for (int d = 5; d <= 6; ++d) {
    Rng drng = Rng::stream(seed, d);
    const FockState phi = random_unit_fock(drng, d);
    const CliffordOp a = create_op(d, 1) * annihilate_op(d, 2);
    const CliffordOp b = create_op(d, 3) * annihilate_op(d, d);
    const FierzResiduals fr = fierz_check(phi, a, b);
    if (w.update(std::max(fr.residual1, fr.residual2)))
      w.info = "fierz d=" + std::to_string(d);
  }
  return finish("fierz_kk_dagger_sweep", 3, w, 1e-9);
}

PropertyResult embed_distinguishable_checks(std::uint64_t seed) {
  Worst w;
  int count = 0;
  {
    // two qubits: |00> lands on modes {1, 3}
    const std::vector<cd> amps = {cd{1.0, 0.0}, cd{}, cd{}, cd{}};
    const FockState got = embed_distinguishable(amps, {2, 2});
    FockState want = FockState::basis(4, 0b0101);
    if (w.update((got.a - want.a).cwiseAbs().maxCoeff())) w.info = "twoqubit00";
    ++count;
  }
  {
    // a (2,3) system: flat index 4 = (mu1=1, mu2=1) -> bits {1, 2+1}
    std::vector<cd> amps(6, cd{});
    amps[4] = cd{0.0, 1.0};
    const FockState got = embed_distinguishable(amps, {2, 3});
    FockState want = FockState::zero(5);
    want.a[0b01010] = cd{0.0, 1.0};
    if (w.update((got.a - want.a).cwiseAbs().maxCoeff())) w.info = "twothree";
    ++count;
  }
  {
    // three qubits vs the mode-pair embedding: the two differ by the mode
    // relabeling 1,2,3,4,5,6 -> 1,3,5,2,4,6
    Rng rng = Rng::stream(seed, 0);
    const ThreeQubitState psi = random_unit_qubit(rng);
    std::vector<cd> amps(8);
    for (int idx = 0; idx < 8; ++idx) amps[idx] = psi.a[idx];
    const FermiState336 dist = from_fock(embed_distinguishable(amps, {2, 2, 2}));
    Mat6 perm = Mat6::Zero();
    const int image[6] = {1, 3, 5, 2, 4, 6};  // image[m-1] = relabel of mode m
    for (int m = 0; m < 6; ++m) perm(image[m] - 1, m) = 1.0;
    if (w.update(state_distance(apply_slocc(perm, dist), embed(psi))))
      w.info = "relabel state=" + to_json_line(psi);
    ++count;
  }
  return finish("embed_distinguishable_checks", count, w, 0.0);
}

PropertyResult csv_determinism(int n, std::uint64_t seed) {
  Worst w;
  const std::string a = sample_csv(SampleClass::GhzRandom, n, seed);
  const std::string b = sample_csv(SampleClass::GhzRandom, n, seed);
  if (w.update(a == b ? 0.0 : 1.0)) w.info = "repeated sample_csv runs differ";
  const std::string c = sample_csv(SampleClass::ZeroCon, n, seed);
  const std::string e = sample_csv(SampleClass::ZeroCon, n, seed);
  if (w.update(c == e ? 0.0 : 1.0)) w.info = "repeated sample_csv runs differ";
  return finish("csv_determinism", 2, w, 0.0);
}

}  // namespace checks

bool SuiteReport::all_passed() const {
  for (const PropertyResult& p : properties)
    if (!p.passed) return false;
  return true;
}

int SuiteReport::failed_count() const {
  int k = 0;
  for (const PropertyResult& p : properties)
    if (!p.passed) ++k;
  return k;
}

std::string SuiteReport::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["passed"] = static_cast<int>(properties.size()) - failed_count();
  doc["failed"] = failed_count();
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyResult& p : properties) {
    nlohmann::json j;
    j["name"] = p.name;
    j["count"] = p.count;
    j["worst_residual"] = p.worst;
    j["tol"] = p.tol;
    j["passed"] = p.passed;
    if (!p.failure_info.empty()) j["failure_info"] = p.failure_info;
    props.push_back(std::move(j));
  }
  doc["properties"] = std::move(props);
  return doc.dump(2);
}

SuiteReport run_suite(const std::string& suite, int n, std::uint64_t seed,
                      double tol) {
  using namespace checks;
  SuiteReport rep;
  rep.suite = suite;
  auto& out = rep.properties;
  const int n5 = std::max(1, n / 5);

  const bool all = suite == "all";
  if (!all && suite != "ckw" && suite != "fierz" && suite != "rdm" &&
      suite != "fock")
    throw std::invalid_argument("unknown suite \"" + suite +
                                "\" (expected all | ckw | fierz | rdm | fock)");

  if (all) {
    out.push_back(antisymmetry_access());
    out.push_back(group_composition(n, seed));
    out.push_back(duality_involution(n, seed));
    out.push_back(unitary_isometry(n, seed));
    out.push_back(canonical_ranks());
    out.push_back(k_square_scalar(n, seed));
    out.push_back(k_covariance(n, seed));
    out.push_back(quartic_covariance(n, seed));
    out.push_back(class_invariance(n, seed, tol));
    out.push_back(anticommutator_identity(n, seed));
  }
  if (all || suite == "ckw") {
    out.push_back(ckw_inequality(n, n, seed));
    out.push_back(monogamy_random(n, seed));
    out.push_back(qubit_reduction(n, seed));
    out.push_back(qubit_closed_forms());
    out.push_back(hyperdet_matches_quartic(n, seed));
    out.push_back(qubit_dual_embedding(n, seed));
    out.push_back(qubit_block_rdm(n, seed));
    out.push_back(qubit_slocc_compat(n, seed));
    out.push_back(pair_rdm_hosting(n, seed));
  }
  if (all || suite == "fierz") {
    out.push_back(fierz_random(n, n5, seed));
    out.push_back(fierz_kk_dagger_sweep(seed));
    out.push_back(kk_dagger_identity(n, seed));
    out.push_back(two_rdm_pairing_identity(n, seed));
    out.push_back(theta_duality());
    out.push_back(projector_expansions(n5, seed));
    out.push_back(pairing_spin_invariance(n5, seed));
  }
  if (all || suite == "rdm") {
    out.push_back(borland_dennis_random(n, seed));
    out.push_back(two_rdm_spectrum(n5, seed));
    out.push_back(dual_one_rdm(n, seed));
    out.push_back(zero_con_curve(n, seed));
    out.push_back(biseparable_curve(n, seed, 1e3));
    out.push_back(w_special_curve(std::max(3, n)));
    out.push_back(entropy_upper_bound(n, seed));
    out.push_back(natural_orbital_residuals(n5, seed));
    out.push_back(natural_orbital_separability(n5, seed));
    out.push_back(long_trace_identity(n, seed));
    out.push_back(commutator_norm_identity(n, seed));
    out.push_back(zero_con_phase(n, seed));
    out.push_back(biseparable_lower_bound_survey(n, seed));
  }
  if (all || suite == "fock") {
    out.push_back(fock_car());
    out.push_back(pairing_symmetry(n5, seed));
    out.push_back(transpose_adjointness(n5, seed));
    out.push_back(chi_sign_sweep());
    out.push_back(chi_rho_complement(n5, seed));
    out.push_back(spin_parity(n5, seed));
    out.push_back(spin_vector_covariance(std::max(1, n / 20), seed));
    out.push_back(annihilator_dimensions(seed));
    out.push_back(theta_duality());
    out.push_back(projector_expansions(n5, seed));
    out.push_back(dual_chi_consistency(n, seed));
    out.push_back(embed_distinguishable_checks(seed));
  }
  if (all) out.push_back(csv_determinism(std::min(n, 200), seed));

  if (all || suite == "fock") {
    // theta_duality / projector_expansions may appear twice under "all"
    // (fierz and fock sections); drop exact duplicates by name.
    std::vector<PropertyResult> dedup;
    for (auto& p : out) {
      bool seen = false;
      for (const auto& q : dedup) seen = seen || q.name == p.name;
      if (!seen) dedup.push_back(std::move(p));
    }
    out = std::move(dedup);
  }
  return rep;
}

}  // namespace fermi
