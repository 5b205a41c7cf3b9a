#pragma once
// Internal matrix-free actions on Fock amplitude vectors (shared between the
// operator realizations and the gamma/theta machinery). All bit positions
// here are 0-based; public interfaces convert from 1-based mode labels.

#include <cstdint>

#include <Eigen/Dense>

#include "fermi/state.hpp"

namespace fermi::detail {

inline int popcount_below(std::uint32_t mask, int bit) {
  return __builtin_popcount(mask & ((1u << bit) - 1u));
}

/// Jordan-Wigner sign (-1)^{#occupied modes below `bit`}.
inline double jw_sign(std::uint32_t mask, int bit) {
  return (popcount_below(mask, bit) % 2 == 0) ? 1.0 : -1.0;
}

/// out = f_bit+ v (creation on 0-based bit).
inline Eigen::VectorXcd apply_create(int d, int bit, const Eigen::VectorXcd& v) {
  const int n = 1 << d;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int m = 0; m < n; ++m)
    if (!((m >> bit) & 1)) out[m | (1 << bit)] = jw_sign(m, bit) * v[m];
  return out;
}

/// out = f_bit v (annihilation on 0-based bit).
inline Eigen::VectorXcd apply_annihilate(int d, int bit, const Eigen::VectorXcd& v) {
  const int n = 1 << d;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int m = 0; m < n; ++m)
    if ((m >> bit) & 1) out[m & ~(1 << bit)] = jw_sign(m, bit) * v[m];
  return out;
}

/// In-place gamma action, 0-based gamma index a in 0..2d-1:
/// even a = 2*bit   -> gamma = p^bit + f_bit : out[m] = s(m) v[m ^ (1<<bit)]
/// odd  a = 2*bit+1 -> gamma = i (p - f)     : out[m] = i t(m) s(m) v[m ^ ...]
/// where s is the JW sign (equal for source and destination, which differ
/// only at `bit`) and t = +1 if the destination has the bit set, else -1.
inline void apply_gamma(int d, int a, Eigen::VectorXcd& v) {
  const int bit = a / 2;
  const bool odd = (a % 2) != 0;
  const int n = 1 << d;
  Eigen::VectorXcd out(n);
  for (int m = 0; m < n; ++m) {
    const double s = jw_sign(m, bit);
    const cd val = s * v[m ^ (1 << bit)];
    if (!odd) {
      out[m] = val;
    } else {
      const double t = ((m >> bit) & 1) ? 1.0 : -1.0;
      out[m] = cd{0.0, 1.0} * t * val;
    }
  }
  v.swap(out);
}

/// v <- theta_S v where theta_S is the ascending-ordered product of the
/// gammas in subset mask S (bits 0..2d-1); the rightmost (largest-index)
/// factor acts first.
inline void apply_theta(int d, std::uint32_t subset, Eigen::VectorXcd& v) {
  for (int a = 2 * d - 1; a >= 0; --a)
    if ((subset >> a) & 1) apply_gamma(d, a, v);
}

/// Reordering sign of the concatenation (sorted S, sorted T) for disjoint
/// bitmasks: (-1)^{#inversions between the two blocks}.
inline double concat_sign(std::uint32_t s_mask, std::uint32_t t_mask) {
  int inv = 0;
  for (int a = 0; a < 32; ++a)
    if ((s_mask >> a) & 1) inv += __builtin_popcount(t_mask & ((1u << a) - 1u));
  return (inv % 2 == 0) ? 1.0 : -1.0;
}

/// (-1)^{k(k-1)/2}: the sign the transpose anti-automorphism puts on a
/// k-particle component (also theta_S^2 and chi^2 sector signs).
inline double reversal_sign(int k) {
  return ((k * (k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace fermi::detail
