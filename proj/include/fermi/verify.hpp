#pragma once
// Property suites: every library-level identity run over seeded random
// instances, each reporting its worst residual against its pinned tolerance.
// The CLI's verify command and the acceptance harness both drive these.

#include <cstdint>
#include <string>
#include <vector>

namespace fermi {

/// Outcome of one property sweep.
struct PropertyResult {
  std::string name;
  int count = 0;        // instances checked
  double worst = 0.0;   // worst residual (or worst violation, sign-adjusted)
  double tol = 0.0;     // pass threshold on `worst`
  bool passed = false;
  std::string failure_info;  // seed/state serialization when failed, else ""
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool all_passed() const;
  int failed_count() const;
  std::string to_json() const;  // {suite, passed, failed, properties: [...]}
};

/// Runs one named suite (all | ckw | fierz | rdm | fock) with n instances per
/// sampled property. tol is the classification tolerance where one is needed;
/// identity tolerances are fixed per property. Throws std::invalid_argument
/// for an unknown suite name.
SuiteReport run_suite(const std::string& suite, int n, std::uint64_t seed,
                      double tol = 1e-8);

namespace checks {

// tensor / invariants
PropertyResult antisymmetry_access();
PropertyResult group_composition(int n, std::uint64_t seed);
PropertyResult duality_involution(int n, std::uint64_t seed);
PropertyResult unitary_isometry(int n, std::uint64_t seed);
PropertyResult dual_chi_consistency(int n, std::uint64_t seed);
PropertyResult canonical_ranks();
PropertyResult k_square_scalar(int n, std::uint64_t seed);
PropertyResult k_covariance(int n, std::uint64_t seed);
PropertyResult quartic_covariance(int n, std::uint64_t seed);
PropertyResult class_invariance(int n, std::uint64_t seed, double tol);
PropertyResult anticommutator_identity(int n, std::uint64_t seed);
PropertyResult ckw_inequality(int n_ghz, int n_canonical4, std::uint64_t seed);
PropertyResult kk_dagger_identity(int n, std::uint64_t seed);
PropertyResult two_rdm_pairing_identity(int n, std::uint64_t seed);
PropertyResult zero_con_phase(int n, std::uint64_t seed);

// rdm
PropertyResult borland_dennis_random(int n, std::uint64_t seed);
PropertyResult two_rdm_spectrum(int n, std::uint64_t seed);
PropertyResult dual_one_rdm(int n, std::uint64_t seed);
PropertyResult zero_con_curve(int n, std::uint64_t seed);
PropertyResult biseparable_curve(int n, std::uint64_t seed, double cond_cap);
PropertyResult w_special_curve(int n);
PropertyResult entropy_upper_bound(int n, std::uint64_t seed);
PropertyResult natural_orbital_residuals(int n, std::uint64_t seed);
PropertyResult natural_orbital_separability(int n, std::uint64_t seed);
PropertyResult long_trace_identity(int n, std::uint64_t seed);
PropertyResult commutator_norm_identity(int n, std::uint64_t seed);
PropertyResult biseparable_lower_bound_survey(int n, std::uint64_t seed);

// qubit bridge
PropertyResult qubit_reduction(int n, std::uint64_t seed);
PropertyResult qubit_closed_forms();
PropertyResult monogamy_random(int n, std::uint64_t seed);
PropertyResult hyperdet_matches_quartic(int n, std::uint64_t seed);
PropertyResult qubit_dual_embedding(int n, std::uint64_t seed);
PropertyResult qubit_block_rdm(int n, std::uint64_t seed);
PropertyResult qubit_slocc_compat(int n, std::uint64_t seed);
PropertyResult pair_rdm_hosting(int n, std::uint64_t seed);

// fock / clifford
PropertyResult fock_car();
PropertyResult pairing_symmetry(int n, std::uint64_t seed);
PropertyResult pairing_spin_invariance(int n, std::uint64_t seed);
PropertyResult transpose_adjointness(int n, std::uint64_t seed);
PropertyResult chi_sign_sweep();
PropertyResult chi_rho_complement(int n, std::uint64_t seed);
PropertyResult spin_parity(int n, std::uint64_t seed);
PropertyResult spin_vector_covariance(int n, std::uint64_t seed);
PropertyResult annihilator_dimensions(std::uint64_t seed);
PropertyResult theta_duality();
PropertyResult projector_expansions(int n, std::uint64_t seed);
PropertyResult fierz_random(int n_d3, int n_d4, std::uint64_t seed);
PropertyResult fierz_kk_dagger_sweep(std::uint64_t seed);
PropertyResult embed_distinguishable_checks(std::uint64_t seed);

// cli-level
PropertyResult csv_determinism(int n, std::uint64_t seed);

}  // namespace checks

}  // namespace fermi
