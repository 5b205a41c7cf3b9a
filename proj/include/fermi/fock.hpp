#pragma once
// Fermionic Fock space over d modes (1 <= d <= 8) with dense operator
// realizations: creation/annihilation operators with Jordan-Wigner signs, the
// invariant bilinear pairing and the chi dual it induces, spin-group
// generators and their exponentiated action, pure-spinor detection via
// annihilator dimensions, the gamma/theta operator basis with trace duals,
// Fierz identities, projector expansions, and the embedding of
// distinguishable-system states into single-occupancy subspaces.
//
// Basis conventions (the single sign authority for this module):
//  * Basis vectors are occupation bitmasks; bit i-1 set <=> mode i occupied.
//  * |mask> = f_{i1}+ ... f_{ik}+ |0> with i1 < ... < ik applied in
//    increasing order, so f_1+ f_2+ |0> = +|{1,2}>.
//  * Mode labels are 1-based in the API; bit positions are label-1.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fermi/state.hpp"

namespace fermi {

using CliffordOp = Eigen::MatrixXcd;

/// A state of the 2^d-dimensional Fock space over d modes.
struct FockState {
  int d = 0;
  Eigen::VectorXcd a;  // size 2^d, indexed by occupation bitmask

  static FockState zero(int d);
  static FockState vacuum(int d);
  /// Basis vector |mask>; mask must fit in d bits.
  static FockState basis(int d, std::uint32_t mask);

  double norm_sq() const { return a.squaredNorm(); }
  double norm() const { return a.norm(); }
};

/// Creation operator f_i+ (1-based mode), dense 2^d x 2^d:
/// f_i+ |mask> = 0 if bit i-1 set, else (-1)^{#occupied modes < i} |mask+i>.
/// Throws std::domain_error for i outside 1..d, std::length_error for
/// d outside 1..8.
CliffordOp create_op(int d, int i);

/// Annihilation operator f_i = (f_i+)^dagger (same error behavior).
CliffordOp annihilate_op(int d, int i);

/// Largest absolute entry over all canonical anticommutation relations
/// {p^i, f_j} - delta * I, {p^i, p^j}, {f_i, f_j} at mode count d.
/// Exactly 0 for this realization.
double car_max_residual(int d);

/// Invariant bilinear pairing (phi, psi) = coefficient of the top state in
/// phi^t wedge psi, where the transpose multiplies each k-particle component
/// by (-1)^{k(k-1)/2}. Bilinear (no conjugation); satisfies
/// (phi, psi) = (-1)^{d(d-1)/2} (psi, phi).
/// Throws std::domain_error if the mode counts differ.
cd bilinear_pairing(const FockState& phi, const FockState& psi);

/// Antilinear dual chi defined by <chi phi | psi> = (phi, psi): amplitude on
/// mask T is conj(psi_{T^c}) * (-1)^{k(k-1)/2} * sign(T^c, T) with k = |T^c|
/// and sign the reordering sign of the concatenation (T^c, T).
/// chi(chi(psi)) = (-1)^{d(d-1)/2} psi; restricted to the 3-particle sector
/// at d = 6 it reproduces dual_state.
FockState chi_dual(const FockState& psi);

/// Residuals of the chi involution (basis sweep) and antiunitarity
/// (<chi phi | chi psi> = <psi | phi> on random pairs).
struct ChiPropertyReport {
  int sign;                       // (-1)^{d(d-1)/2}
  double involution_residual;     // max over basis vectors
  double antiunitarity_residual;  // max over sampled pairs
};
ChiPropertyReport chi_properties_check(int d, int samples = 20,
                                       std::uint64_t seed = 1);

/// Quadratic spin-group generator data: A arbitrary, B and beta antisymmetric
/// (all d x d). The generator operator is
///   T = (1/2) A_ij [p^j, f_i] - (1/2) B_ij p^i p^j - (1/2) beta_ij f_i f_j.
struct SpinGenerator {
  Eigen::MatrixXcd A, B, beta;
  int modes() const { return static_cast<int>(A.rows()); }
};

/// Throws std::domain_error unless all three blocks are d x d and B, beta are
/// antisymmetric to 1e-13.
void validate(const SpinGenerator& gen);

/// Dense generator operator T (see SpinGenerator).
CliffordOp spin_generator_op(const SpinGenerator& gen);

/// exp(T) psi via the dense matrix exponential.
FockState spin_transform(const SpinGenerator& gen, const FockState& psi);

/// The 2d x 2d matrix M = exp([[A, beta], [B, -A^T]]) realizing the conjugate
/// action on the generator vector v = (p^1..p^d, f_1..f_d):
/// e^T v_a e^{-T} = sum_b M(a, b) v_b.
Eigen::MatrixXcd spin_vector_action(const SpinGenerator& gen);

/// Dimension of the annihilator {X in span(p^i, f_j) : X psi = 0}, computed
/// as the SVD null-space dimension (at tol relative to the largest singular
/// value) of the 2^d x 2d matrix [p^1 psi .. p^d psi, f_1 psi .. f_d psi].
/// Value d <=> pure spinor. Throws std::domain_error on the zero state.
int annihilator_dimension(const FockState& psi, double tol = 1e-8);

/// Hermitian gamma generators: gamma_{2i-1} = p^i + f_i,
/// gamma_{2i} = i (p^i - f_i), normalized so {gamma_a, gamma_b} = 2 delta.
CliffordOp gamma_op(int d, int a);  // a in 1..2d

/// The 4^d operators theta_S = ordered products of gammas over subsets S of
/// the 2d gamma indices (ascending factors), paired with their trace-duals
/// theta^S satisfying tr(theta^S theta_T) = delta. Subset masks index the
/// vectors. Duals are obtained by Gram-matrix inversion for d <= 4 and by
/// exact per-element trace normalization for d = 5, 6 (the Gram matrix is
/// diagonal; at d >= 5 assembling and inverting it is pure waste). Memoized
/// per d; note d = 6 materializes 2 * 4096 dense 64 x 64 operators (~0.5 GB).
/// Throws std::length_error for d > 6.
struct ThetaBasis {
  int d = 0;
  std::vector<CliffordOp> theta;
  std::vector<CliffordOp> dual;
};
const ThetaBasis& theta_basis(int d);

/// Residuals of the two Fierz identities for a normalized psi (norm checked
/// to 1e-10, std::domain_error otherwise; operator dimension mismatch is a
/// std::domain_error too):
///   residual1 = |(psi, A psi) conj((psi, B psi))
///                - sum_S <psi| B+ theta^S A psi> <chi psi| theta_S chi psi>|
///   residual2 = |<psi| A psi> <chi psi| B chi psi>
///                - sum_S (psi, theta_S psi) conj((psi, (A theta^S B)+ psi))|
/// Uses the memoized dense basis for d <= 4 and a matrix-free gamma-product
/// sweep for d = 5, 6.
struct FierzResiduals {
  double residual1;
  double residual2;
};
FierzResiduals fierz_check(const FockState& psi, const CliffordOp& A,
                           const CliffordOp& B);

/// Frobenius residuals of the operator expansions
///   P_psi  = sum_S <psi| theta_S psi> theta^S   against |psi><psi|
///   P'_psi = sum_S (psi, theta_S psi) theta^S   against |psi><chi psi|
/// for a normalized psi (std::domain_error otherwise).
struct ProjectorResiduals {
  double p_residual;
  double p_prime_residual;
};
ProjectorResiduals projector_expansions_check(const FockState& psi);

/// Embeds a distinguishable n-system amplitude tensor into the
/// single-occupancy subspace: amplitude psi_{mu1..mun} (flat index with the
/// LAST subsystem fastest) is placed on the mask with bits
/// {mu1, d1+mu2, ..., d1+..+d_{n-1}+mun} (0-based bit positions).
/// Throws std::length_error if sum(dims) > 8, std::invalid_argument on a
/// size mismatch.
FockState embed_distinguishable(const std::vector<cd>& amplitudes,
                                const std::vector<int>& dims);

/// The three-fermion state as a d = 6 Fock vector (3-particle sector).
FockState to_fock(const FermiState336& p);

/// Inverse of to_fock; throws std::invalid_argument if amplitude outside the
/// 3-particle sector exceeds tol * ||psi||.
FermiState336 from_fock(const FockState& psi, double tol = 1e-10);

/// Mode-occupation matrix F(i, j) = <psi| p^i f_j psi> (d x d). For a
/// three-fermion state this is the transpose (= conjugate) of one_rdm.
Eigen::MatrixXcd mode_occupation_matrix(const FockState& psi);

/// K via the pairing at d = 6: K^i_j = (psi, p^i f_j psi); equals
/// k_matrix(from_fock(psi)) for 3-particle states.
Mat6 k_via_pairing(const FockState& psi);

}  // namespace fermi
