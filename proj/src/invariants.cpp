#include "fermi/invariants.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "fermi/rdm.hpp"

namespace fermi {

namespace {

// Per row index i: the 10 terms of K^i_j = sum over unordered pairs {a<b} of
// the complement of {i}, with epsilon sign of (i,a,b,rest...) and the stored
// position of the sorted rest triple. Collapsing the epsilon contraction
// (1/12) eps^{iabcde} P_jab P_cde over ordered index tuples onto unordered
// ones absorbs the 1/12 exactly (factor 2 from (a,b), factor 6 from (c,d,e)).
struct KTerm {
  int a, b;      // pair modes, 1-based
  double sign;   // epsilon sign
  int rest_idx;  // storage index of the complement triple
};

const std::array<std::array<KTerm, 10>, 6>& k_plan() {
  static const std::array<std::array<KTerm, 10>, 6> plan = [] {
    std::array<std::array<KTerm, 10>, 6> out{};
    for (int i = 1; i <= 6; ++i) {
      int slot = 0;
      for (int a = 1; a <= 6; ++a) {
        if (a == i) continue;
        for (int b = a + 1; b <= 6; ++b) {
          if (b == i) continue;
          std::array<int, 6> seq{i, a, b, 0, 0, 0};
          int pos = 3;
          for (int m = 1; m <= 6; ++m)
            if (m != i && m != a && m != b) seq[pos++] = m;
          int inv = 0;
          for (int x = 0; x < 6; ++x)
            for (int y = x + 1; y < 6; ++y)
              if (seq[x] > seq[y]) ++inv;
          out[i - 1][slot++] = KTerm{a, b, (inv % 2 == 0) ? 1.0 : -1.0,
                                     triple_index(seq[3], seq[4], seq[5])};
        }
      }
    }
    return out;
  }();
  return plan;
}

}  // namespace

Mat6 k_matrix(const FermiState336& p) {
  const auto& plan = k_plan();
  Mat6 k = Mat6::Zero();
  for (int i = 1; i <= 6; ++i) {
    for (const KTerm& t : plan[i - 1]) {
      const cd rest = p.ordered()[t.rest_idx];
      if (rest == cd{0.0, 0.0}) continue;
      for (int j = 1; j <= 6; ++j) {
        const cd pj = p.amplitude(j, t.a, t.b);
        if (pj != cd{0.0, 0.0}) k(i - 1, j - 1) += t.sign * pj * rest;
      }
    }
  }
  return k;
}

cd quartic_d(const FermiState336& p) {
  const Mat6 k = k_matrix(p);
  return (k * k).trace() / 6.0;
}

double tr_kk_dagger(const FermiState336& p) { return k_matrix(p).squaredNorm(); }

double concurrence(const FermiState336& p) {
  const Mat6 k = k_matrix(p);
  return k.squaredNorm() - std::abs((k * k).trace());
}

double anticommutator_identity_residual(const FermiState336& p) {
  const Mat6 k = k_matrix(p);
  const Mat6 rho = one_rdm(p);
  const double tr = rho.trace().real();
  const double tr2 = (rho * rho).trace().real();
  const Mat6 lhs = k * k.adjoint() + k.adjoint() * k;
  const Mat6 rhs = (tr * tr - 3.0 * tr2) / 3.0 * Mat6::Identity() -
                   4.0 * (rho * (tr / 3.0 * Mat6::Identity() - rho)).transpose();
  return (lhs - rhs).norm();
}

const char* to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::Zero: return "Zero";
    case ClassLabel::Separable: return "Separable";
    case ClassLabel::Biseparable: return "Biseparable";
    case ClassLabel::W: return "W";
    case ClassLabel::GHZ: return "GHZ";
  }
  return "?";
}

namespace {
std::string classification_message(int rank, const std::array<double, 6>& sv) {
  std::ostringstream os;
  os << "unclassifiable at tolerance: numeric rank " << rank
     << " is not one of {0, 1, 3, 6}; singular values of K:";
  for (double s : sv) os << " " << s;
  return os.str();
}
}  // namespace

ClassificationError::ClassificationError(int rank,
                                         const std::array<double, 6>& singular_values)
    : std::runtime_error(classification_message(rank, singular_values)),
      rank_(rank),
      sv_(singular_values) {}

std::array<double, 6> k_singular_values(const FermiState336& p) {
  Eigen::JacobiSVD<Mat6> svd(k_matrix(p));
  std::array<double, 6> out{};
  for (int i = 0; i < 6; ++i) out[i] = svd.singularValues()(i);
  return out;
}

int k_numeric_rank(const FermiState336& p, double tol) {
  const std::array<double, 6> sv = k_singular_values(p);
  const double n = p.norm();
  // K is degree 2 in the amplitudes; sv[0] <= tol * ||P||^4 can only happen
  // when K vanishes identically up to roundoff.
  if (sv[0] <= tol * n * n * n * n) return 0;
  int rank = 0;
  for (double s : sv)
    if (s > tol * sv[0]) ++rank;
  return rank;
}

Classification classify_full(const FermiState336& p, double tol) {
  Classification out{};
  out.singular_values = k_singular_values(p);
  if (p.norm_sq() == 0.0) {
    out.label = ClassLabel::Zero;
    out.rank = 0;
    return out;
  }
  out.rank = k_numeric_rank(p, tol);
  switch (out.rank) {
    case 0: out.label = ClassLabel::Separable; return out;
    case 1: out.label = ClassLabel::Biseparable; return out;
    case 3: out.label = ClassLabel::W; return out;
    case 6: out.label = ClassLabel::GHZ; return out;
    default: throw ClassificationError(out.rank, out.singular_values);
  }
}

ClassLabel classify(const FermiState336& p, double tol) {
  return classify_full(p, tol).label;
}

}  // namespace fermi
