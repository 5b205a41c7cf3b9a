#pragma once
// Command-line front end. Each cmd_* function implements one subcommand and
// returns the process exit code; run_cli parses argv and dispatches.
//
// Exit codes: 0 success; 1 verification failure (a verify suite with failed
// properties, or a sampled point violating its range invariants — the state
// is dumped); 2 malformed input, domain or I/O error; 3 classification
// ambiguity (singular values are reported).

#include <cstdint>
#include <iosfwd>
#include <string>

namespace fermi::cli {

int cmd_invariants(const std::string& state_path, double tol,
                   std::ostream& out, std::ostream& err);

int cmd_sample(const std::string& class_name, int n, std::uint64_t seed,
               const std::string& out_path, double cond_cap,
               std::ostream& err);

int cmd_curves(const std::string& kind_name, double min, double max,
               double step, const std::string& out_path, std::ostream& err);

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, double tol,
               std::ostream& out, std::ostream& err);

int cmd_embed(const std::string& qubits_path, const std::string& out_path,
              std::ostream& err);

/// Full argv parse + dispatch (used by the fermitool binary).
int run_cli(int argc, const char* const* argv);

}  // namespace fermi::cli
