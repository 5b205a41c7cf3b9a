#pragma once
// Three-fermion pure states on six one-particle modes: the 20-dimensional
// antisymmetric-amplitude representation and the basic operations on it
// (antisymmetric component access, invertible one-particle transformations,
// the particle-hole dual, norms and inner products).
//
// Conventions used throughout the library:
//  * Mode labels are 1-based (1..6) in every public interface; matrices indexed
//    by modes put mode m at row/column m-1.
//  * A state is stored as its 20 independent amplitudes P_ijk with i<j<k in
//    lexicographic order; all other components follow by antisymmetry.
//  * apply_slocc contracts the amplitude indices of P with the ROW index of g:
//    (g*P)_ijk = sum_{abc} g(a,i) g(b,j) g(c,k) P_abc.  Composition therefore
//    reads apply_slocc(g*h, P) == apply_slocc(h, apply_slocc(g, P)).

#include <array>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace fermi {

using cd = std::complex<double>;
using Mat6 = Eigen::Matrix<cd, 6, 6>;
using Vec6 = Eigen::Matrix<cd, 6, 1>;

inline constexpr int kModes = 6;
inline constexpr int kTriples = 20;

/// One ordered mode triple i<j<k, 1-based labels.
struct Triple {
  int i, j, k;
};

/// The 20 ordered triples in lexicographic order; entry t is the triple whose
/// amplitude is stored at position t of FermiState336::ordered().
const std::array<Triple, kTriples>& triples();

/// Position of the ordered triple (i<j<k, 1-based) in the storage order.
/// Precondition: 1 <= i < j < k <= 6.
int triple_index(int i, int j, int k);

/// Sorts (i,j,k) ascending in place and returns the sign of the permutation
/// used (+1/-1), or 0 if two labels coincide.
int sort_triple(int& i, int& j, int& k);

/// A three-fermion state on six modes, held as 20 ordered amplitudes.
class FermiState336 {
 public:
  /// Zero state.
  FermiState336() : a_{} {}

  explicit FermiState336(const std::array<cd, kTriples>& ordered) : a_(ordered) {}

  /// Basis state e^{ijk} for distinct 1-based labels (signed if unsorted).
  /// Throws std::domain_error for labels outside 1..6 or repeated labels.
  static FermiState336 basis(int i, int j, int k);

  /// Fully antisymmetric component P_ijk for any 1-based labels: sign-adjusted
  /// lookup for distinct labels, 0 for repeated labels.
  /// Throws std::domain_error if any label is outside 1..6.
  cd amplitude(int i, int j, int k) const;

  /// Sets P_ijk (and by antisymmetry all its permutations). Distinct 1-based
  /// labels required; throws std::domain_error otherwise.
  void set_amplitude(int i, int j, int k, cd v);

  const std::array<cd, kTriples>& ordered() const { return a_; }
  std::array<cd, kTriples>& ordered() { return a_; }

  /// Squared norm sum_{i<j<k} |P_ijk|^2 (= <P|P>).
  double norm_sq() const;
  double norm() const;

  /// Returns the state scaled to unit norm. Throws std::domain_error on the
  /// zero state.
  FermiState336 normalized() const;

  FermiState336& operator+=(const FermiState336& o);
  FermiState336& operator-=(const FermiState336& o);
  FermiState336& operator*=(cd s);

  friend FermiState336 operator+(FermiState336 x, const FermiState336& y) { return x += y; }
  friend FermiState336 operator-(FermiState336 x, const FermiState336& y) { return x -= y; }
  friend FermiState336 operator*(cd s, FermiState336 x) { return x *= s; }

 private:
  std::array<cd, kTriples> a_;
};

/// Hermitian inner product <P|Q> = sum over ordered triples of conj(P) Q.
cd inner_product(const FermiState336& p, const FermiState336& q);

/// Invertible one-particle transformation g acting on the state:
/// (g*P)_ijk = sum_{abc} g(a,i) g(b,j) g(c,k) P_abc, evaluated via 3x3 minors
/// of g. g(r,c) is the matrix entry at row r, column c (modes 1-based, so
/// mode m is row/column m-1).
FermiState336 apply_slocc(const Mat6& g, const FermiState336& p);

/// Particle-hole dual: Pdual_ijk = (1/3!) eps_{ijklmn} conj(P)^{lmn}.
/// Antilinear; dual(dual(P)) == -P. For example dual(e^123) = -e^456.
FermiState336 dual_state(const FermiState336& p);

}  // namespace fermi
