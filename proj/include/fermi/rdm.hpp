#pragma once
// Reduced density matrices of three-fermion states, their spectra and
// entropies, occupation-spectrum constraints, closed-form entropy curves,
// natural orbitals with their pair vectors, and the trace identities tying
// the RDMs to the K-matrix invariants.

#include <array>
#include <utility>

#include "fermi/state.hpp"

namespace fermi {

using Mat15 = Eigen::Matrix<cd, 15, 15>;
using Vec15 = Eigen::Matrix<cd, 15, 1>;
using Spectrum6 = Eigen::Matrix<double, 6, 1>;

/// The 15 ordered mode pairs (i<j, 1-based) in lexicographic order; entry p
/// labels row/column p of the pair matrices below.
const std::array<std::pair<int, int>, 15>& mode_pairs();

/// Position of the ordered pair (i<j, 1-based) in the lexicographic order.
int pair_index(int i, int j);

/// One-particle reduced density matrix, entry (i-1, j-1) = rho_i^j =
/// (1/2) sum_{nm} P_inm conj(P_jnm). Hermitian PSD; Tr rho = 3 ||P||^2.
Mat6 one_rdm(const FermiState336& p);

/// Two-particle reduced density matrix on the ordered-pair basis:
/// entry ((ij),(kl)) = sum_n P_ijn conj(P_kln). Hermitian PSD; trace
/// 3 ||P||^2; its nonzero eigenvalues coincide with the one-RDM spectrum.
Mat15 two_rdm(const FermiState336& p);

/// Eigenvalues of a Hermitian matrix, descending. (Adjoint-averaged before
/// the solve to shed roundoff asymmetry.)
Spectrum6 rdm_spectrum(const Mat6& rho);

/// || one_rdm(dual_state(P)) - (I - one_rdm(P)) ||_F for a normalized state
/// (norm checked to 1e-12, std::domain_error otherwise); ~0 always.
double dual_one_rdm_check(const FermiState336& p);

/// Occupation-number constraints on a (descending) one-RDM spectrum of a
/// normalized state: residuals |lam_a + lam_{7-a} - 1| for a = 1, 2, 3, and
/// the slack lam5 + lam6 - lam4 (>= 0).
struct OccupationConstraints {
  std::array<double, 3> equality_residuals;
  double inequality_slack;
};
OccupationConstraints occupation_constraints(const Spectrum6& descending);

/// Von Neumann entropy -Tr(rho/3 ln(rho/3)) of a normalized one-RDM,
/// natural log, 0 ln 0 := 0. Eigenvalues in [-1e-10, 0) are clamped to 0;
/// anything below throws std::domain_error.
double von_neumann_entropy(const Mat6& rho);
double von_neumann_entropy(const Spectrum6& eigenvalues);

/// One-RDM spectrum of the vanishing-Con family at |D| = d_abs: three-fold
/// lam* and three-fold 1 - lam*, lam* = (1 + sqrt(1 - 4 d_abs)) / 2.
/// Requires 0 <= d_abs <= 1/4 + 1e-9 (clamped); throws std::domain_error
/// outside.
Spectrum6 zero_con_spectrum(double d_abs);

enum class CurveKind { ZeroCon, Biseparable, WSpecial };

/// Closed-form entropy curves S(x), x = 3 - Tr(rho^2) on normalized states:
///  ZeroCon      x in [0, 3/2]: S = 3 h((1 + sqrt(1 - 2x/3)) / 2)
///  Biseparable  x in [0, 1]  : S = (ln 3)/3 + 2 h((1 + sqrt(1 - x)) / 2)
///  WSpecial     x in [1, 3/2]: S = 2 h(1/2) + h((1 + sqrt(3 - 2x)) / 2)
/// with h(t) = -(1/3)(t ln(t/3) + (1-t) ln((1-t)/3)). Domains carry 1e-9
/// slack (arguments clamped); outside throws std::domain_error.
double entropy_curve(CurveKind kind, double x);

/// One natural orbital: occupation lam, unit eigenvector e of the one-RDM,
/// and the pair vector E_(ij) = sum_k P_ijk conj(e_k) on the ordered-pair
/// basis, which satisfies two_rdm(P) E = lam E.
struct NaturalOrbital {
  double occupation;
  Vec6 orbital;
  Vec15 pair_vector;
};

/// All six natural orbitals, descending occupation.
std::array<NaturalOrbital, 6> natural_orbitals(const FermiState336& p);

/// Frobenius norm of the antisymmetrized square Q ^ Q of a pair vector
/// (components Q_ij Q_kl - Q_ik Q_jl + Q_il Q_jk over i<j<k<l); zero exactly
/// when Q is a single wedge of two one-particle vectors.
double plucker_residual(const Vec15& q);

/// True when plucker_residual(q) <= tol * (sum |q|^2), i.e. q decomposes as a
/// single pair up to the tolerance.
bool plucker_separable(const Vec15& q, double tol = 1e-8);

/// C = [K, conj(rho)] = K conj(rho) - conj(rho) K with its Frobenius norm.
/// Vanishes (to roundoff) exactly on the vanishing-Con family.
struct KRhoCommutator {
  Mat6 matrix;
  double norm;
};
KRhoCommutator k_rho_commutator(const FermiState336& p);

/// |lhs - rhs| of the degree-12 trace identity expressing Tr(K rbar K+ rbar)
/// (rbar = conj(one_rdm)) through Tr rho^k, Tr(KK+ rbar), and |Tr K^2|^2:
///   Tr(K rbar K+ rbar) = (Tr rho)^4/324 - Tr(rho^3) Tr(rho)/9
///                        - (Tr rho^2)^2/4 + Tr(rho^4)
///                        + Tr(rho) Tr(K K+ rbar)/3 - |Tr K^2|^2/12.
double k_rho_trace_identity_residual(const FermiState336& p);

/// |Tr(C C+) - (Tr(conj(rho)^2 {K,K+}) - 2 Tr(K conj(rho) K+ conj(rho)))|.
double commutator_norm_identity_residual(const FermiState336& p);

}  // namespace fermi
