#include "fermi/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermi/invariants.hpp"
#include "fermi/io.hpp"
#include "fermi/qubit.hpp"
#include "fermi/rdm.hpp"
#include "fermi/sampling.hpp"
#include "fermi/verify.hpp"

namespace fermi::cli {

namespace {

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_singular_values(std::ostream& err, const ClassificationError& e) {
  err << "classification ambiguous: " << e.what() << "\nsingular values:";
  for (double s : e.singular_values()) err << ' ' << num17(s);
  err << '\n';
}

struct CurveDomain {
  CurveKind kind;
  double lo, hi;
};

CurveDomain parse_curve_kind(const std::string& name) {
  if (name == "zero_con") return {CurveKind::ZeroCon, 0.0, 1.5};
  if (name == "biseparable") return {CurveKind::Biseparable, 0.0, 1.0};
  if (name == "w_special") return {CurveKind::WSpecial, 1.0, 1.5};
  throw std::domain_error("unknown curve kind \"" + name +
                          "\" (expected zero_con | biseparable | w_special)");
}

}  // namespace

int cmd_invariants(const std::string& state_path, double tol,
                   std::ostream& out, std::ostream& err) {
  try {
    const FermiState336 p = read_fermi_state_file(state_path);
    out << invariants_report_json(p, tol) << '\n';
    return 0;
  } catch (const ClassificationError& e) {
    print_singular_values(err, e);
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_sample(const std::string& class_name, int n, std::uint64_t seed,
               const std::string& out_path, double cond_cap,
               std::ostream& err) {
  SampleClass cls;
  try {
    cls = parse_sample_class(class_name);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (n < 0) {
    err << "error: --n must be nonnegative\n";
    return 2;
  }
  std::ostringstream body;
  body << csv_header() << '\n';
  for (int i = 0; i < n; ++i) {
    const FermiState336 p = sample_state(cls, seed, i, cond_cap);
    const PointRecord r = point_record(p);
    try {
      validate(r);
    } catch (const std::exception& e) {
      err << "invariant violation at index " << i << ": " << e.what()
          << "\nstate: " << to_json_line(p) << '\n';
      return 1;
    }
    body << csv_row(r) << '\n';
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    err << "error: cannot open \"" << out_path << "\" for writing\n";
    return 2;
  }
  out << body.str();
  if (!out.flush()) {
    err << "error: failed writing \"" << out_path << "\"\n";
    return 2;
  }
  return 0;
}

int cmd_curves(const std::string& kind_name, double min, double max,
               double step, const std::string& out_path, std::ostream& err) {
  CurveDomain dom;
  try {
    dom = parse_curve_kind(kind_name);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!(step > 0.0) || !(min <= max)) {
    err << "error: need --step > 0 and --min <= --max\n";
    return 2;
  }
  if (min < dom.lo - 1e-9 || max > dom.hi + 1e-9) {
    err << "error: " << kind_name << " is defined for x in [" << dom.lo << ", "
        << dom.hi << "]\n";
    return 2;
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double x = min + i * step;
    if (x > max + 1e-12 * std::max(1.0, step)) break;
    grid.push_back(std::min(x, max));
  }
  if (grid.empty() || std::abs(grid.back() - max) > 1e-12) grid.push_back(max);

  std::ostringstream body;
  body << "x,entropy\n";
  try {
    for (double x : grid)
      body << num17(x) << ',' << num17(entropy_curve(dom.kind, x)) << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << " (" << kind_name << " is defined for x in ["
        << dom.lo << ", " << dom.hi << "])\n";
    return 2;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    err << "error: cannot open \"" << out_path << "\" for writing\n";
    return 2;
  }
  out << body.str();
  if (!out.flush()) {
    err << "error: failed writing \"" << out_path << "\"\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, double tol,
               std::ostream& out, std::ostream& err) {
  try {
    const SuiteReport rep = run_suite(suite, n, seed, tol);
    out << rep.to_json() << '\n';
    return rep.all_passed() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_embed(const std::string& qubits_path, const std::string& out_path,
              std::ostream& err) {
  try {
    const ThreeQubitState psi = read_qubit_state_file(qubits_path);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      err << "error: cannot open \"" << out_path << "\" for writing\n";
      return 2;
    }
    write_fermi_state(out, embed(psi));
    out << '\n';
    if (!out.flush()) {
      err << "error: failed writing \"" << out_path << "\"\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Invariants of three-fermion states on six modes"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand(
      "invariants", "Report the invariants of a fermionic state file");
  std::string inv_state;
  double inv_tol = 1e-8;
  inv->add_option("--state", inv_state, "JSON state file")->required();
  inv->add_option("--tol", inv_tol, "relative rank threshold");

  auto* smp = app.add_subcommand(
      "sample", "Write a CSV of invariant records for sampled states");
  std::string smp_class, smp_out;
  int smp_n = 0;
  std::uint64_t smp_seed = 0;
  double smp_cap = 1e3;
  smp->add_option("--class", smp_class,
                  "ghz_random | w_class | biseparable | canonical4 | zero_con")
      ->required();
  smp->add_option("--n", smp_n, "number of states")->required();
  smp->add_option("--seed", smp_seed, "RNG seed")->required();
  smp->add_option("--out", smp_out, "output CSV path")->required();
  smp->add_option("--cond-cap", smp_cap, "condition-number cap");

  auto* crv = app.add_subcommand(
      "curves", "Write a closed-form entropy curve as CSV");
  std::string crv_kind, crv_out;
  double crv_min = 0.0, crv_max = 0.0, crv_step = 0.0;
  crv->add_option("--kind", crv_kind, "zero_con | biseparable | w_special")
      ->required();
  crv->add_option("--min", crv_min, "first x value")->required();
  crv->add_option("--max", crv_max, "last x value")->required();
  crv->add_option("--step", crv_step, "x increment")->required();
  crv->add_option("--out", crv_out, "output CSV path")->required();

  auto* ver = app.add_subcommand(
      "verify", "Run a property suite and report residuals as JSON");
  std::string ver_suite;
  int ver_n = 100;
  std::uint64_t ver_seed = 1;
  double ver_tol = 1e-8;
  ver->add_option("--suite", ver_suite, "all | ckw | fierz | rdm | fock")
      ->required();
  ver->add_option("--n", ver_n, "instances per sampled property")->required();
  ver->add_option("--seed", ver_seed, "RNG seed")->required();
  ver->add_option("--tol", ver_tol, "classification threshold");

  auto* emb = app.add_subcommand(
      "embed", "Embed a three-qubit state file as a fermionic state file");
  std::string emb_in, emb_out;
  emb->add_option("--qubits", emb_in, "JSON qubit state file")->required();
  emb->add_option("--out", emb_out, "output JSON state path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits 0, any parse failure exits 2
  }

  if (inv->parsed())
    return cmd_invariants(inv_state, inv_tol, std::cout, std::cerr);
  if (smp->parsed())
    return cmd_sample(smp_class, smp_n, smp_seed, smp_out, smp_cap, std::cerr);
  if (crv->parsed())
    return cmd_curves(crv_kind, crv_min, crv_max, crv_step, crv_out,
                      std::cerr);
  if (ver->parsed())
    return cmd_verify(ver_suite, ver_n, ver_seed, ver_tol, std::cout,
                      std::cerr);
  if (emb->parsed()) return cmd_embed(emb_in, emb_out, std::cerr);
  return 2;
}

}  // namespace fermi::cli
