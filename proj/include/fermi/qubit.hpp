#pragma once
// Three-qubit states hosted inside the three-fermion sector: the mode-pair
// embedding, the Cayley hyperdeterminant and three-tangle, pair reduced
// density matrices with Wootters concurrences, the monogamy bookkeeping, and
// the qubit-level dual compatible with the fermionic one.

#include <array>

#include "fermi/state.hpp"

namespace fermi {

using Mat2 = Eigen::Matrix<cd, 2, 2>;
using Mat4 = Eigen::Matrix<cd, 4, 4>;

/// A three-qubit amplitude tensor psi_{abc}, a,b,c in {0,1}, stored at
/// position 4a + 2b + c.
struct ThreeQubitState {
  std::array<cd, 8> a{};

  cd& operator()(int i, int j, int k) { return a[4 * i + 2 * j + k]; }
  cd operator()(int i, int j, int k) const { return a[4 * i + 2 * j + k]; }

  double norm_sq() const;
  double norm() const;
};

/// Embeds qubit q (A,B,C = 1,2,3) into the mode pair (q, q+3): the basis ket
/// |b1 b2 b3> maps to the wedge of modes (1+3*b1, 2+3*b2, 3+3*b3), e.g.
/// |000> -> e^{123}, |111> -> e^{456}, |010> -> e^{153} = -e^{135}.
FermiState336 embed(const ThreeQubitState& psi);

/// Inverse of embed on the embedded subspace. Throws std::invalid_argument if
/// any amplitude outside the eight embedded triples exceeds tol * ||P||.
ThreeQubitState disembed(const FermiState336& p, double tol = 1e-10);

/// Cayley hyperdeterminant of the 2x2x2 tensor (quartic; equals
/// quartic_d(embed(psi)) identically).
cd hyperdeterminant(const ThreeQubitState& psi);

/// Three-tangle tau = 4 |hyperdeterminant|.
double three_tangle(const ThreeQubitState& psi);

/// Single-qubit reduced density matrix (qubit = 1, 2, or 3).
Mat2 qubit_rdm(const ThreeQubitState& psi, int qubit);

enum class QubitPair { AB, AC, BC };

/// Two-qubit reduced density matrix of the given pair; row/column index is
/// 2a + b for the values (a, b) of the kept qubits in label order.
Mat4 pair_rdm(const ThreeQubitState& psi, QubitPair pair);

/// Wootters spin flip rho~ = (sy x sy) conj(rho) (sy x sy); the sign matrix
/// sy x sy is antidiag(-1, 1, 1, -1).
Mat4 spin_flip_rdm(const Mat4& rho);

/// Wootters concurrence C(rho) = max(0, s1 - s2 - s3 - s4) where s_i are the
/// descending square roots of the eigenvalues of rho rho~. Eigenvalue
/// imaginary parts beyond 1e-10 throw std::runtime_error; real parts in
/// [-1e-10, 0) are clamped to 0 and below that throw std::domain_error;
/// magnitudes below 1e-12 are flushed to 0 before the square root (the pair
/// states of pure three-qubit states have rank <= 2, and the square root
/// would otherwise amplify null-space roundoff past the advertised
/// accuracy).
double concurrence(const Mat4& rho);

/// Concurrence of a pair of a normalized pure state (norm checked to 1e-10,
/// std::domain_error otherwise).
double concurrence_pair(const ThreeQubitState& psi, QubitPair pair);

/// Everything the monogamy accounting relates, on one normalized state:
/// tangle, pair concurrences, single-qubit determinants, the embedded-state
/// invariants, and the residuals of the identities connecting them:
///   4 det rho_X = tau + sum of C^2 over pairs containing X   (one per X)
///   Tr(K K+)    = 2 (det rho_A + det rho_B + det rho_C)
///   Con(embed)  = C_AB^2 + C_AC^2 + C_BC^2
///   Tr(K K+)    = sum over pairs of Tr(rho^XY spin_flip_rdm(rho^XY))
struct MonogamyReport {
  double tau;
  double c_ab, c_ac, c_bc;
  double det_a, det_b, det_c;
  double tr_kk_dagger;
  double con;
  std::array<double, 3> ckw_residuals;  // one per qubit A, B, C
  double sum_rule_residual;             // Tr KK+ vs 2 sum det
  double con_residual;                  // Con vs sum of C^2
  double pair_flip_residual;            // Tr KK+ vs sum Tr(rho rho~)
};
MonogamyReport ckw_report(const ThreeQubitState& psi);

/// Qubit-level dual psi~ = (eps x eps x eps) conj(psi), eps = [[0,1],[-1,0]];
/// antilinear, and embed(qubit_dual(psi)) == dual_state(embed(psi)) exactly.
ThreeQubitState qubit_dual(const ThreeQubitState& psi);

/// || embed(qubit_dual(psi)) - dual_state(embed(psi)) ||.
double dual_embedding_residual(const ThreeQubitState& psi);

/// Local invertible action, same index convention as apply_slocc:
/// psi'_{ijk} = sum_{abc} g1(a,i) g2(b,j) g3(c,k) psi_{abc}.
ThreeQubitState apply_local(const Mat2& g1, const Mat2& g2, const Mat2& g3,
                            const ThreeQubitState& psi);

/// The 6x6 block transformation hosting (g1, g2, g3): entry
/// (q + 3s, q + 3t) = g_{q+1}(s, t) for qubit q = 0,1,2 and s,t in {0,1}
/// (0-based rows/columns). Satisfies
/// embed(apply_local(g1,g2,g3,psi)) == apply_slocc(local_to_slocc(...), embed(psi)).
Mat6 local_to_slocc(const Mat2& g1, const Mat2& g2, const Mat2& g3);

}  // namespace fermi
