#pragma once
// Polynomial invariants of three-fermion states: the covariant K matrix, the
// quartic invariant D, the norm Tr KK+, the entanglement monotone Con(P),
// and the rank-based entanglement classification.

#include <array>
#include <stdexcept>
#include <string>

#include "fermi/state.hpp"

namespace fermi {

/// K^i_j = (1/12) eps^{iabcde} P_jab P_cde, entry (i-1, j-1) for modes i, j.
/// Under apply_slocc(g, .): K -> det(g) g^{-1} K g. Quadratic in the
/// amplitudes; traceless (the trace is an eps-contraction of P with itself).
Mat6 k_matrix(const FermiState336& p);

/// Quartic invariant D = (1/6) Tr K^2; |D| <= 1/4 on normalized states.
cd quartic_d(const FermiState336& p);

/// Tr(K K+) >= 0; quadratic in the amplitudes and in their conjugates.
double tr_kk_dagger(const FermiState336& p);

/// Con(P) = Tr(K K+) - |Tr K^2|. Non-negative up to roundoff; returned as
/// computed (tests allow a -1e-12 floor).
double concurrence(const FermiState336& p);

/// Frobenius norm of {K, K+} - [(1/3)((Tr rho)^2 - 3 Tr rho^2) I
/// - 4 transpose(rho (Tr rho / 3 I - rho))]; ~0 for every state (the
/// anticommutator is a function of the one-particle RDM alone).
double anticommutator_identity_residual(const FermiState336& p);

enum class ClassLabel { Zero, Separable, Biseparable, W, GHZ };

const char* to_string(ClassLabel c);

/// Thrown when the numeric rank of K matches no entanglement class.
class ClassificationError : public std::runtime_error {
 public:
  ClassificationError(int rank, const std::array<double, 6>& singular_values);
  int rank() const { return rank_; }
  const std::array<double, 6>& singular_values() const { return sv_; }

 private:
  int rank_;
  std::array<double, 6> sv_;
};

/// Singular values of K, descending.
std::array<double, 6> k_singular_values(const FermiState336& p);

/// Numeric rank of K: if the largest singular value is <= tol * ||P||^4 the
/// rank is 0; otherwise the count of singular values above tol * (largest).
int k_numeric_rank(const FermiState336& p, double tol = 1e-8);

/// Entanglement class from the numeric rank of K:
///   P == 0 -> Zero; rank 0 -> Separable; 1 -> Biseparable; 3 -> W; 6 -> GHZ.
/// Any other rank throws ClassificationError carrying the singular values.
ClassLabel classify(const FermiState336& p, double tol = 1e-8);

/// Classification together with its diagnostics.
struct Classification {
  ClassLabel label;
  int rank;
  std::array<double, 6> singular_values;
};
Classification classify_full(const FermiState336& p, double tol = 1e-8);

}  // namespace fermi
