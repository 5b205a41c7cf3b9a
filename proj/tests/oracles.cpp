#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

using fermi::FermiState336;
using fermi::FockState;
using fermi::Mat15;
using fermi::Mat2;
using fermi::Mat4;
using fermi::Mat6;
using fermi::ThreeQubitState;

int bubble_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t pass = 0; pass + 1 < v.size(); ++pass)
    for (std::size_t j = 0; j + 1 < v.size() - pass; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  return sign;
}

std::array<cd, 216> full_tensor(const FermiState336& p) {
  std::array<cd, 216> t{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        const int sign = bubble_sign({i, j, k});
        if (sign == 0) continue;
        int a = i, b = j, c = k;
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        t[36 * i + 6 * j + k] =
            static_cast<double>(sign) * p.amplitude(a + 1, b + 1, c + 1);
      }
  return t;
}

Mat6 naive_k_matrix(const FermiState336& p) {
  const std::array<cd, 216> t = full_tensor(p);
  Mat6 k = Mat6::Zero();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      cd sum = 0.0;
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          for (int c = 0; c < 6; ++c)
            for (int d = 0; d < 6; ++d)
              for (int e = 0; e < 6; ++e) {
                const int eps = bubble_sign({i, a, b, c, d, e});
                if (eps == 0) continue;
                sum += static_cast<double>(eps) * t[36 * j + 6 * a + b] *
                       t[36 * c + 6 * d + e];
              }
      k(i, j) = sum / 12.0;
    }
  return k;
}

FermiState336 naive_dual(const FermiState336& p) {
  const std::array<cd, 216> t = full_tensor(p);
  FermiState336 out;
  for (const fermi::Triple& tri : fermi::triples()) {
    cd sum = 0.0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) {
          const int eps =
              bubble_sign({a, b, c, tri.i - 1, tri.j - 1, tri.k - 1});
          if (eps == 0) continue;
          sum += static_cast<double>(eps) * std::conj(t[36 * a + 6 * b + c]);
        }
    out.set_amplitude(tri.i, tri.j, tri.k, -sum / 6.0);
  }
  return out;
}

FermiState336 naive_apply_slocc(const Mat6& g, const FermiState336& p) {
  const std::array<cd, 216> t = full_tensor(p);
  FermiState336 out;
  for (const fermi::Triple& tri : fermi::triples()) {
    cd sum = 0.0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          sum += g(a, tri.i - 1) * g(b, tri.j - 1) * g(c, tri.k - 1) *
                 t[36 * a + 6 * b + c];
    out.set_amplitude(tri.i, tri.j, tri.k, sum);
  }
  return out;
}

Mat6 naive_one_rdm(const FermiState336& p) {
  const std::array<cd, 216> t = full_tensor(p);
  Mat6 rho = Mat6::Zero();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      cd sum = 0.0;
      for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 6; ++m)
          sum += t[36 * i + 6 * n + m] * std::conj(t[36 * j + 6 * n + m]);
      rho(i, j) = 0.5 * sum;
    }
  return rho;
}

Mat15 naive_two_rdm(const FermiState336& p) {
  const std::array<cd, 216> t = full_tensor(p);
  Mat15 m = Mat15::Zero();
  const auto& pairs = fermi::mode_pairs();
  for (int r = 0; r < 15; ++r)
    for (int c = 0; c < 15; ++c) {
      const int i = pairs[r].first - 1, j = pairs[r].second - 1;
      const int k = pairs[c].first - 1, l = pairs[c].second - 1;
      cd sum = 0.0;
      for (int n = 0; n < 6; ++n)
        sum += t[36 * i + 6 * j + n] * std::conj(t[36 * k + 6 * l + n]);
      m(r, c) = sum;
    }
  return m;
}

Mat2 naive_qubit_rdm(const ThreeQubitState& psi, int qubit) {
  Mat2 rho = Mat2::Zero();
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      const auto at = [&](int x, int a, int b) {
        if (qubit == 1) return psi(x, a, b);
        if (qubit == 2) return psi(a, x, b);
        return psi(a, b, x);
      };
      cd sum = 0.0;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          sum += at(s, u, v) * std::conj(at(t, u, v));
      rho(s, t) = sum;
    }
  return rho;
}

Mat4 naive_pair_rdm(const ThreeQubitState& psi, fermi::QubitPair pair) {
  Mat4 rho = Mat4::Zero();
  const auto at = [&](int x, int y, int e) {
    switch (pair) {
      case fermi::QubitPair::AB: return psi(x, y, e);
      case fermi::QubitPair::AC: return psi(x, e, y);
      default: return psi(e, x, y);
    }
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          cd sum = 0.0;
          for (int e = 0; e < 2; ++e)
            sum += at(a, b, e) * std::conj(at(c, d, e));
          rho(2 * a + b, 2 * c + d) = sum;
        }
  return rho;
}

double concurrence_hermitian(const Mat4& rho) {
  Mat4 yy = Mat4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Mat4 flipped = yy * rho.conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
  Eigen::Vector4d ev = es.eigenvalues();
  for (int i = 0; i < 4; ++i) ev(i) = std::sqrt(std::max(ev(i), 0.0));
  const Mat4 sqrt_rho =
      es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::SelfAdjointEigenSolver<Mat4> inner(sqrt_rho * flipped * sqrt_rho);
  std::array<double, 4> s{};
  for (int i = 0; i < 4; ++i) {
    double lam = inner.eigenvalues()(i);
    if (std::abs(lam) < 1e-12) lam = 0.0;
    s[i] = std::sqrt(std::max(lam, 0.0));
  }
  std::sort(s.begin(), s.end(), std::greater<double>());
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

cd hyperdet_discriminant(const ThreeQubitState& psi) {
  // det(A0 + x A1) = c + b x + a x^2 for the two slices along the first
  // qubit; the hyperdeterminant is the discriminant b^2 - 4 a c.
  const cd a000 = psi(0, 0, 0), a001 = psi(0, 0, 1), a010 = psi(0, 1, 0),
           a011 = psi(0, 1, 1), a100 = psi(1, 0, 0), a101 = psi(1, 0, 1),
           a110 = psi(1, 1, 0), a111 = psi(1, 1, 1);
  const cd c = a000 * a011 - a001 * a010;
  const cd a = a100 * a111 - a101 * a110;
  const cd b = a000 * a111 - a001 * a110 - a010 * a101 + a011 * a100;
  return b * b - 4.0 * a * c;
}

Eigen::MatrixXcd jw_create(int d, int i) {
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  Eigen::Matrix2cd cdag = Eigen::Matrix2cd::Zero();
  cdag(1, 0) = 1.0;  // |occupied><empty|

  Eigen::MatrixXcd op = Eigen::MatrixXcd::Ones(1, 1);
  for (int mode = d; mode >= 1; --mode) {
    const Eigen::Matrix2cd& factor = mode > i ? id : (mode == i ? cdag : z);
    Eigen::MatrixXcd next(op.rows() * 2, op.cols() * 2);
    for (int r = 0; r < op.rows(); ++r)
      for (int c = 0; c < op.cols(); ++c)
        next.block<2, 2>(2 * r, 2 * c) = op(r, c) * factor;
    op = std::move(next);
  }
  return op;
}

cd naive_pairing(const FockState& phi, const FockState& psi) {
  const int d = phi.d;
  const std::uint32_t full = (1u << d) - 1u;
  cd total = 0.0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    const std::uint32_t t = full ^ s;
    std::vector<int> s_modes, concat;
    for (int b = d - 1; b >= 0; --b)  // reversed list: transpose sign
      if (s & (1u << b)) s_modes.push_back(b);
    const int rev = bubble_sign(s_modes);
    for (int b = 0; b < d; ++b)
      if (s & (1u << b)) concat.push_back(b);
    for (int b = 0; b < d; ++b)
      if (t & (1u << b)) concat.push_back(b);
    const int wedge = bubble_sign(concat);
    total += static_cast<double>(rev) * static_cast<double>(wedge) *
             phi.a[s] * psi.a[t];
  }
  return total;
}

}  // namespace oracle
