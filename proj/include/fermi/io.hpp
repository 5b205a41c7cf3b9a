#pragma once
// JSON file formats for the three state kinds and the invariants report.
//
//  fermion state : { "fermion_336": [[i, j, k, re, im], ...] }  (i<j<k, 1-based;
//                  unlisted triples are zero; unordered or repeated indices
//                  are rejected)
//  qubit state   : { "qubits_3": [[i, j, k, re, im], ...] }     (i,j,k in {0,1})
//  fock state    : { "d": n, "amplitudes": [[mask, re, im], ...] }

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fermi/fock.hpp"
#include "fermi/qubit.hpp"
#include "fermi/state.hpp"

namespace fermi {

/// Malformed input file (bad JSON, wrong schema, out-of-range indices).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FermiState336 read_fermi_state(std::istream& in);
FermiState336 read_fermi_state_file(const std::string& path);
void write_fermi_state(std::ostream& out, const FermiState336& p);

ThreeQubitState read_qubit_state(std::istream& in);
ThreeQubitState read_qubit_state_file(const std::string& path);
void write_qubit_state(std::ostream& out, const ThreeQubitState& psi);

FockState read_fock_state(std::istream& in);
void write_fock_state(std::ostream& out, const FockState& psi);

/// Full invariants report as pretty-printed JSON:
/// { norm, trK2: [re, im], D: [re, im], tr_kk_dagger, con, class, rankK,
///   spectrum: [6 descending], entropy, borland_dennis:
///   { equalities_residuals: [3], inequality_slack } }.
/// norm/trK2/D/tr_kk_dagger/con/rankK describe the state as given; spectrum,
/// entropy and the borland_dennis block describe the normalized state (they
/// are statements about normalized states). For the zero state the class is
/// "Zero" and spectrum/entropy/borland_dennis are null.
/// Propagates ClassificationError from classify.
std::string invariants_report_json(const FermiState336& p, double tol = 1e-8);

/// Serializes a state to a single-line JSON string (for error dumps).
std::string to_json_line(const FermiState336& p);
std::string to_json_line(const ThreeQubitState& psi);

}  // namespace fermi
