#pragma once
// Slow, independent reference implementations used to cross-check the
// library. Everything here favors the most literal formula available:
// full 216-entry tensors, explicit permutation signs from bubble sorts,
// Kronecker-product mode operators, dense partial traces.

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "fermi/fock.hpp"
#include "fermi/qubit.hpp"
#include "fermi/rdm.hpp"
#include "fermi/state.hpp"

namespace oracle {

using fermi::cd;

/// Sign of the permutation that sorts v (0 if v has duplicates), via an
/// explicit swap-counting bubble sort.
int bubble_sign(std::vector<int> v);

/// The full antisymmetric tensor T[36 i + 6 j + k] (0-based indices).
std::array<cd, 216> full_tensor(const fermi::FermiState336& p);

/// K^i_j = (1/12) eps^{i a b c d e} T_{j a b} T_{c d e}, all five sums
/// explicit, eps evaluated per 6-tuple.
fermi::Mat6 naive_k_matrix(const fermi::FermiState336& p);

/// Dual via the explicit eps contraction (matches dual_state's convention).
fermi::FermiState336 naive_dual(const fermi::FermiState336& p);

/// (gP)_{ijk} = sum_{abc} g(a,i) g(b,j) g(c,k) T_{abc}.
fermi::FermiState336 naive_apply_slocc(const fermi::Mat6& g,
                                       const fermi::FermiState336& p);

/// rho_ij = (1/2) sum_{nm} T_{inm} conj(T_{jnm}).
fermi::Mat6 naive_one_rdm(const fermi::FermiState336& p);

/// M_{(ij),(kl)} = sum_n T_{ijn} conj(T_{kln}) on ordered pairs.
fermi::Mat15 naive_two_rdm(const fermi::FermiState336& p);

/// Dense partial traces of the 8-amplitude three-qubit state.
fermi::Mat2 naive_qubit_rdm(const fermi::ThreeQubitState& psi, int qubit);
fermi::Mat4 naive_pair_rdm(const fermi::ThreeQubitState& psi,
                           fermi::QubitPair pair);

/// Concurrence through the Hermitian route: eigenvalues of
/// sqrt(sqrt(rho) rho~ sqrt(rho)), with the spin flip built from an explicit
/// sigma_y x sigma_y matrix.
double concurrence_hermitian(const fermi::Mat4& rho);

/// Hyperdeterminant as the discriminant of det(A0 + x A1) in x, where A0/A1
/// are the two 2x2 slices of the tensor.
cd hyperdet_discriminant(const fermi::ThreeQubitState& psi);

/// Creation operator from an explicit Jordan-Wigner Kronecker product
/// (mode 1 = least significant bit = last factor).
Eigen::MatrixXcd jw_create(int d, int i);

/// Invariant bilinear pairing with every sign from bubble sorts.
cd naive_pairing(const fermi::FockState& phi, const fermi::FockState& psi);

}  // namespace oracle
