#include "fermi/state.hpp"

#include <cmath>
#include <stdexcept>

namespace fermi {

namespace {

std::array<Triple, kTriples> make_triples() {
  std::array<Triple, kTriples> out{};
  int t = 0;
  for (int i = 1; i <= kModes; ++i)
    for (int j = i + 1; j <= kModes; ++j)
      for (int k = j + 1; k <= kModes; ++k) out[t++] = Triple{i, j, k};
  return out;
}

// triple -> storage index, -1 for non-increasing triples
std::array<int, 6 * 6 * 6> make_index_table() {
  std::array<int, 6 * 6 * 6> out;
  out.fill(-1);
  const auto& ts = triples();
  for (int t = 0; t < kTriples; ++t) {
    const auto [i, j, k] = ts[t];
    out[(i - 1) * 36 + (j - 1) * 6 + (k - 1)] = t;
  }
  return out;
}

void check_mode(int m) {
  if (m < 1 || m > kModes) throw std::domain_error("mode label outside 1..6");
}

// permutation sign of a sequence of distinct values by inversion count
template <std::size_t N>
int inversion_sign(const std::array<int, N>& s) {
  int inv = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (s[a] > s[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

const std::array<Triple, kTriples>& triples() {
  static const std::array<Triple, kTriples> table = make_triples();
  return table;
}

int triple_index(int i, int j, int k) {
  static const std::array<int, 6 * 6 * 6> table = make_index_table();
  return table[(i - 1) * 36 + (j - 1) * 6 + (k - 1)];
}

int sort_triple(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) (std::swap(i, j), sign = -sign);
  if (j > k) (std::swap(j, k), sign = -sign);
  if (i > j) (std::swap(i, j), sign = -sign);
  if (i == j || j == k) return 0;
  return sign;
}

FermiState336 FermiState336::basis(int i, int j, int k) {
  FermiState336 p;
  p.set_amplitude(i, j, k, cd{1.0, 0.0});
  return p;
}

cd FermiState336::amplitude(int i, int j, int k) const {
  check_mode(i);
  check_mode(j);
  check_mode(k);
  const int sign = sort_triple(i, j, k);
  if (sign == 0) return cd{0.0, 0.0};
  return static_cast<double>(sign) * a_[triple_index(i, j, k)];
}

void FermiState336::set_amplitude(int i, int j, int k, cd v) {
  check_mode(i);
  check_mode(j);
  check_mode(k);
  const int sign = sort_triple(i, j, k);
  if (sign == 0) throw std::domain_error("repeated mode label in set_amplitude");
  a_[triple_index(i, j, k)] = static_cast<double>(sign) * v;
}

double FermiState336::norm_sq() const {
  double s = 0.0;
  for (const cd& v : a_) s += std::norm(v);
  return s;
}

double FermiState336::norm() const { return std::sqrt(norm_sq()); }

FermiState336 FermiState336::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero state");
  FermiState336 out = *this;
  out *= cd{1.0 / n, 0.0};
  return out;
}

FermiState336& FermiState336::operator+=(const FermiState336& o) {
  for (int t = 0; t < kTriples; ++t) a_[t] += o.a_[t];
  return *this;
}

FermiState336& FermiState336::operator-=(const FermiState336& o) {
  for (int t = 0; t < kTriples; ++t) a_[t] -= o.a_[t];
  return *this;
}

FermiState336& FermiState336::operator*=(cd s) {
  for (cd& v : a_) v *= s;
  return *this;
}

cd inner_product(const FermiState336& p, const FermiState336& q) {
  cd s{0.0, 0.0};
  for (int t = 0; t < kTriples; ++t) s += std::conj(p.ordered()[t]) * q.ordered()[t];
  return s;
}

FermiState336 apply_slocc(const Mat6& g, const FermiState336& p) {
  // Invertibility gate, scaled so unitaries sit at threshold ~1e-12.
  const double scale = std::pow(g.norm() / std::sqrt(6.0), 6.0);
  if (std::abs(g.determinant()) <= 1e-12 * scale)
    throw std::domain_error("apply_slocc: transformation is singular");

  const auto& ts = triples();
  FermiState336 out;
  for (int t = 0; t < kTriples; ++t) {
    const auto [i, j, k] = ts[t];
    cd acc{0.0, 0.0};
    for (int s = 0; s < kTriples; ++s) {
      const auto [a, b, c] = ts[s];
      // (g*P)_ijk = sum over ordered (a,b,c) of P_abc * det of the 3x3
      // submatrix of g with rows (a,b,c) and columns (i,j,k).
      const cd m00 = g(a - 1, i - 1), m01 = g(a - 1, j - 1), m02 = g(a - 1, k - 1);
      const cd m10 = g(b - 1, i - 1), m11 = g(b - 1, j - 1), m12 = g(b - 1, k - 1);
      const cd m20 = g(c - 1, i - 1), m21 = g(c - 1, j - 1), m22 = g(c - 1, k - 1);
      const cd det = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
                     m02 * (m10 * m21 - m11 * m20);
      acc += p.ordered()[s] * det;
    }
    out.ordered()[t] = acc;
  }
  return out;
}

FermiState336 dual_state(const FermiState336& p) {
  // For each ordered triple, the sum over the 6 permutations of its
  // complement collapses (by antisymmetry) to a single term: the epsilon sign
  // of (i, j, k, l, m, n) as a permutation of (1..6), complement sorted.
  struct DualEntry {
    int src;
    double sign;
  };
  static const std::array<DualEntry, kTriples> plan = [] {
    std::array<DualEntry, kTriples> out{};
    const auto& ts = triples();
    for (int t = 0; t < kTriples; ++t) {
      const auto [i, j, k] = ts[t];
      std::array<int, 6> seq{i, j, k, 0, 0, 0};
      int pos = 3;
      for (int m = 1; m <= kModes; ++m)
        if (m != i && m != j && m != k) seq[pos++] = m;
      out[t].src = triple_index(seq[3], seq[4], seq[5]);
      out[t].sign = inversion_sign(seq);
    }
    return out;
  }();

  FermiState336 out;
  for (int t = 0; t < kTriples; ++t)
    out.ordered()[t] = plan[t].sign * std::conj(p.ordered()[plan[t].src]);
  return out;
}

}  // namespace fermi
