#include "fermi/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fermi/invariants.hpp"

namespace fermi {

namespace {

void check_normalized(const ThreeQubitState& psi, const char* who) {
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::domain_error(std::string(who) + " requires a normalized state");
}

// mode hosting value s of qubit q (1-based q): q for s = 0, q + 3 for s = 1
int host_mode(int q, int s) { return q + 3 * s; }

}  // namespace

double ThreeQubitState::norm_sq() const {
  double s = 0.0;
  for (const cd& v : a) s += std::norm(v);
  return s;
}

double ThreeQubitState::norm() const { return std::sqrt(norm_sq()); }

FermiState336 embed(const ThreeQubitState& psi) {
  FermiState336 p;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        p.set_amplitude(host_mode(1, i), host_mode(2, j), host_mode(3, k),
                        psi(i, j, k));
  return p;
}

ThreeQubitState disembed(const FermiState336& p, double tol) {
  ThreeQubitState psi;
  double off_sq = 0.0;
  std::array<bool, kTriples> hosted{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        int a = host_mode(1, i), b = host_mode(2, j), c = host_mode(3, k);
        psi(i, j, k) = p.amplitude(a, b, c);
        sort_triple(a, b, c);
        hosted[triple_index(a, b, c)] = true;
      }
  for (int t = 0; t < kTriples; ++t)
    if (!hosted[t]) off_sq += std::norm(p.ordered()[t]);
  if (std::sqrt(off_sq) > tol * p.norm())
    throw std::invalid_argument(
        "disembed: state has weight outside the embedded qubit subspace");
  return psi;
}

cd hyperdeterminant(const ThreeQubitState& p) {
  const cd a000 = p(0, 0, 0), a001 = p(0, 0, 1), a010 = p(0, 1, 0), a011 = p(0, 1, 1);
  const cd a100 = p(1, 0, 0), a101 = p(1, 0, 1), a110 = p(1, 1, 0), a111 = p(1, 1, 1);
  return a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
         a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011 -
         2.0 * (a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 +
                a000 * a100 * a011 * a111 + a001 * a010 * a101 * a110 +
                a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101) +
         4.0 * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111);
}

double three_tangle(const ThreeQubitState& psi) {
  return 4.0 * std::abs(hyperdeterminant(psi));
}

Mat2 qubit_rdm(const ThreeQubitState& psi, int qubit) {
  if (qubit < 1 || qubit > 3) throw std::domain_error("qubit_rdm: qubit must be 1..3");
  Mat2 rho = Mat2::Zero();
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      cd acc{0.0, 0.0};
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          // place (s|t) at the qubit's slot, trace (u, v) over the others
          int is[3] = {u, u, u}, ks[3] = {v, v, v};
          is[qubit - 1] = s;
          ks[qubit - 1] = t;
          if (qubit == 1) { is[1] = u; is[2] = v; ks[1] = u; ks[2] = v; }
          if (qubit == 2) { is[0] = u; is[2] = v; ks[0] = u; ks[2] = v; }
          if (qubit == 3) { is[0] = u; is[1] = v; ks[0] = u; ks[1] = v; }
          acc += psi(is[0], is[1], is[2]) * std::conj(psi(ks[0], ks[1], ks[2]));
        }
      rho(s, t) = acc;
    }
  return rho;
}

Mat4 pair_rdm(const ThreeQubitState& psi, QubitPair pair) {
  Mat4 rho = Mat4::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          cd acc{0.0, 0.0};
          for (int n = 0; n < 2; ++n) {
            switch (pair) {
              case QubitPair::AB: acc += psi(i, j, n) * std::conj(psi(k, l, n)); break;
              case QubitPair::AC: acc += psi(i, n, j) * std::conj(psi(k, n, l)); break;
              case QubitPair::BC: acc += psi(n, i, j) * std::conj(psi(n, k, l)); break;
            }
          }
          rho(2 * i + j, 2 * k + l) = acc;
        }
  return rho;
}

Mat4 spin_flip_rdm(const Mat4& rho) {
  Mat4 yy = Mat4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * rho.conjugate() * yy;
}

double concurrence(const Mat4& rho) {
  const Mat4 prod = rho * spin_flip_rdm(rho);
  Eigen::ComplexEigenSolver<Mat4> es(prod, false);
  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) {
    const cd ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-10)
      throw std::runtime_error("concurrence: rho*rho~ eigenvalue has imaginary part");
    double lam = ev.real();
    if (lam < -1e-10)
      throw std::domain_error("concurrence: rho*rho~ eigenvalue below -1e-10");
    // rho*rho~ of a pure three-qubit pair state has rank <= 2; flush the
    // null-space roundoff so sqrt does not amplify it to ~1e-8.
    if (std::abs(lam) < 1e-12) lam = 0.0;
    roots[i] = std::sqrt(std::max(lam, 0.0));
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return std::max(roots[0] - roots[1] - roots[2] - roots[3], 0.0);
}

double concurrence_pair(const ThreeQubitState& psi, QubitPair pair) {
  check_normalized(psi, "concurrence_pair");
  return concurrence(pair_rdm(psi, pair));
}

MonogamyReport ckw_report(const ThreeQubitState& psi) {
  check_normalized(psi, "ckw_report");
  MonogamyReport r{};
  r.tau = three_tangle(psi);
  r.c_ab = concurrence(pair_rdm(psi, QubitPair::AB));
  r.c_ac = concurrence(pair_rdm(psi, QubitPair::AC));
  r.c_bc = concurrence(pair_rdm(psi, QubitPair::BC));
  r.det_a = qubit_rdm(psi, 1).determinant().real();
  r.det_b = qubit_rdm(psi, 2).determinant().real();
  r.det_c = qubit_rdm(psi, 3).determinant().real();

  const FermiState336 p = embed(psi);
  r.tr_kk_dagger = tr_kk_dagger(p);
  r.con = concurrence(p);

  const double c2ab = r.c_ab * r.c_ab, c2ac = r.c_ac * r.c_ac, c2bc = r.c_bc * r.c_bc;
  r.ckw_residuals[0] = std::abs(4.0 * r.det_a - (r.tau + c2ab + c2ac));
  r.ckw_residuals[1] = std::abs(4.0 * r.det_b - (r.tau + c2ab + c2bc));
  r.ckw_residuals[2] = std::abs(4.0 * r.det_c - (r.tau + c2ac + c2bc));
  r.sum_rule_residual =
      std::abs(r.tr_kk_dagger - 2.0 * (r.det_a + r.det_b + r.det_c));
  r.con_residual = std::abs(r.con - (c2ab + c2ac + c2bc));

  double flip_sum = 0.0;
  for (QubitPair pr : {QubitPair::AB, QubitPair::AC, QubitPair::BC}) {
    const Mat4 rho = pair_rdm(psi, pr);
    flip_sum += (rho * spin_flip_rdm(rho)).trace().real();
  }
  r.pair_flip_residual = std::abs(r.tr_kk_dagger - flip_sum);
  return r;
}

ThreeQubitState qubit_dual(const ThreeQubitState& psi) {
  // psi~_ijk = eps_ia eps_jb eps_kc conj(psi_abc), eps = [[0,1],[-1,0]]:
  // the only surviving term has (a,b,c) = (1-i, 1-j, 1-k) with sign
  // (-1)^{i+j+k}.
  ThreeQubitState out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const double sign = ((i + j + k) % 2 == 0) ? 1.0 : -1.0;
        out(i, j, k) = sign * std::conj(psi(1 - i, 1 - j, 1 - k));
      }
  return out;
}

double dual_embedding_residual(const ThreeQubitState& psi) {
  return (embed(qubit_dual(psi)) - dual_state(embed(psi))).norm();
}

ThreeQubitState apply_local(const Mat2& g1, const Mat2& g2, const Mat2& g3,
                            const ThreeQubitState& psi) {
  ThreeQubitState out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        cd acc{0.0, 0.0};
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
              acc += g1(a, i) * g2(b, j) * g3(c, k) * psi(a, b, c);
        out(i, j, k) = acc;
      }
  return out;
}

Mat6 local_to_slocc(const Mat2& g1, const Mat2& g2, const Mat2& g3) {
  Mat6 g = Mat6::Zero();
  const Mat2* gs[3] = {&g1, &g2, &g3};
  for (int q = 0; q < 3; ++q)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) g(q + 3 * s, q + 3 * t) = (*gs[q])(s, t);
  return g;
}

}  // namespace fermi
