#pragma once
// Canonical states, class-conditioned random state generators, and the
// CSV point records they emit.
//
// Determinism: every state is drawn from Rng::stream(seed, index), so output
// depends only on (class, seed, count) — never on evaluation order or thread
// count — and rows are written in index order with 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fermi/invariants.hpp"
#include "fermi/state.hpp"

namespace fermi {

// Canonical (unnormalized) class representatives.
FermiState336 state_separable();    // e^123
FermiState336 state_biseparable();  // e^123 + e^156
FermiState336 state_w();            // e^126 + e^423 + e^153
FermiState336 state_ghz();          // e^123 + e^456

/// Four-parameter canonical form a e^123 + b e^145 + c e^246 + d e^356.
FermiState336 canonical4(cd a, cd b, cd c, cd d);

enum class SampleClass { GhzRandom, WClass, Biseparable, Canonical4, ZeroCon };

/// Parses ghz_random | w_class | biseparable | canonical4 | zero_con
/// (throws std::invalid_argument otherwise).
SampleClass parse_sample_class(const std::string& name);
const char* to_string(SampleClass c);

/// Draws the index-th state of the class under the master seed; all classes
/// return normalized states.
///   GhzRandom   : i.i.d. standard complex Gaussian on all 20 amplitudes.
///   WClass      : apply_slocc(G, state_w()), G with i.i.d. complex Gaussian
///                 entries, resampled until cond(G) <= cond_cap.
///   Biseparable : same construction seeded with state_biseparable().
///   Canonical4  : canonical4 with four i.i.d. real Gaussian coefficients
///                 (the canonical form is a real four-parameter family).
///   ZeroCon     : a e^123 + b e^456 with complex Gaussian a, b (exercises
///                 the phase of Tr K^2).
FermiState336 sample_state(SampleClass c, std::uint64_t seed,
                           std::uint64_t index, double cond_cap = 1e3);

/// One CSV row's worth of invariants of a normalized state.
struct PointRecord {
  double tr_kk_dagger;
  double entropy;
  double con;
  double d_abs;
  ClassLabel label;
};

/// Computes the record (classification may throw ClassificationError).
PointRecord point_record(const FermiState336& p, double tol = 1e-8);

/// Enforces the record's range invariants (0 <= tr_kk_dagger <= 3/2 + 1e-9,
/// entropy <= log 6 + 1e-9); throws std::runtime_error naming the violation.
void validate(const PointRecord& r);

/// Fixed column order: tr_kk_dagger, entropy, con, d_abs, class.
std::string csv_header();
std::string csv_row(const PointRecord& r);

/// Header plus one validated row per state, '\n' line endings.
std::string sample_csv(SampleClass c, int count, std::uint64_t seed,
                       double cond_cap = 1e3);

}  // namespace fermi
