#include "fermi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fermi/invariants.hpp"
#include "fermi/rdm.hpp"

namespace fermi {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

/// Full-precision number: shortest decimal that round-trips a double.
std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int require_int(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

double require_num(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  return v.get<double>();
}

const json& require_array(const json& v, std::size_t size, const char* what) {
  if (!v.is_array() || v.size() != size)
    throw ParseError(std::string(what) + " must be an array of " +
                     std::to_string(size) + " elements");
  return v;
}

}  // namespace

FermiState336 read_fermi_state(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_object() || !doc.contains("fermion_336"))
    throw ParseError("expected an object with a \"fermion_336\" key");
  const json& rows = doc["fermion_336"];
  if (!rows.is_array()) throw ParseError("\"fermion_336\" must be an array");

  FermiState336 p;
  std::array<bool, kTriples> seen{};
  for (const json& row : rows) {
    require_array(row, 5, "amplitude entry");
    const int i = require_int(row[0], "mode index");
    const int j = require_int(row[1], "mode index");
    const int k = require_int(row[2], "mode index");
    if (i < 1 || i > 6 || j < 1 || j > 6 || k < 1 || k > 6)
      throw ParseError("mode indices must lie in 1..6");
    if (!(i < j && j < k))
      throw ParseError("mode indices must be strictly increasing (i < j < k)");
    const int t = triple_index(i, j, k);
    if (seen[t]) throw ParseError("duplicate amplitude entry for a triple");
    seen[t] = true;
    p.ordered()[t] = cd{require_num(row[3], "amplitude real part"),
                        require_num(row[4], "amplitude imaginary part")};
  }
  return p;
}

FermiState336 read_fermi_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_fermi_state(in);
}

void write_fermi_state(std::ostream& out, const FermiState336& p) {
  json rows = json::array();
  const auto& ts = triples();
  for (int t = 0; t < kTriples; ++t) {
    const cd a = p.ordered()[t];
    if (a == cd{0.0, 0.0}) continue;
    rows.push_back({ts[t].i, ts[t].j, ts[t].k, a.real(), a.imag()});
  }
  json doc;
  doc["fermion_336"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

ThreeQubitState read_qubit_state(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_object() || !doc.contains("qubits_3"))
    throw ParseError("expected an object with a \"qubits_3\" key");
  const json& rows = doc["qubits_3"];
  if (!rows.is_array()) throw ParseError("\"qubits_3\" must be an array");

  ThreeQubitState psi{};
  std::array<bool, 8> seen{};
  for (const json& row : rows) {
    require_array(row, 5, "amplitude entry");
    const int i = require_int(row[0], "qubit value");
    const int j = require_int(row[1], "qubit value");
    const int k = require_int(row[2], "qubit value");
    if ((i != 0 && i != 1) || (j != 0 && j != 1) || (k != 0 && k != 1))
      throw ParseError("qubit values must be 0 or 1");
    const int idx = 4 * i + 2 * j + k;
    if (seen[idx]) throw ParseError("duplicate amplitude entry for a basis state");
    seen[idx] = true;
    psi.a[idx] = cd{require_num(row[3], "amplitude real part"),
                    require_num(row[4], "amplitude imaginary part")};
  }
  return psi;
}

ThreeQubitState read_qubit_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_qubit_state(in);
}

void write_qubit_state(std::ostream& out, const ThreeQubitState& psi) {
  json rows = json::array();
  for (int idx = 0; idx < 8; ++idx) {
    const cd a = psi.a[idx];
    if (a == cd{0.0, 0.0}) continue;
    rows.push_back({(idx >> 2) & 1, (idx >> 1) & 1, idx & 1, a.real(), a.imag()});
  }
  json doc;
  doc["qubits_3"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

FockState read_fock_state(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("amplitudes"))
    throw ParseError("expected an object with \"d\" and \"amplitudes\" keys");
  const int d = require_int(doc["d"], "\"d\"");
  if (d < 1 || d > 8) throw ParseError("\"d\" must lie in 1..8");
  const json& rows = doc["amplitudes"];
  if (!rows.is_array()) throw ParseError("\"amplitudes\" must be an array");

  FockState psi = FockState::zero(d);
  std::vector<bool> seen(std::size_t{1} << d, false);
  for (const json& row : rows) {
    require_array(row, 3, "amplitude entry");
    const int mask = require_int(row[0], "occupation mask");
    if (mask < 0 || mask >= (1 << d))
      throw ParseError("occupation mask does not fit in d bits");
    if (seen[mask]) throw ParseError("duplicate amplitude entry for a mask");
    seen[mask] = true;
    psi.a[mask] = cd{require_num(row[1], "amplitude real part"),
                     require_num(row[2], "amplitude imaginary part")};
  }
  return psi;
}

void write_fock_state(std::ostream& out, const FockState& psi) {
  json rows = json::array();
  for (int m = 0; m < psi.a.size(); ++m) {
    const cd a = psi.a[m];
    if (a == cd{0.0, 0.0}) continue;
    rows.push_back({m, a.real(), a.imag()});
  }
  json doc;
  doc["d"] = psi.d;
  doc["amplitudes"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

std::string invariants_report_json(const FermiState336& p, double tol) {
  json doc;
  doc["norm"] = p.norm();
  const Mat6 k = k_matrix(p);
  const cd trk2 = (k * k).trace();
  const cd d_inv = trk2 / 6.0;
  doc["trK2"] = {trk2.real(), trk2.imag()};
  doc["D"] = {d_inv.real(), d_inv.imag()};
  doc["tr_kk_dagger"] = k.squaredNorm();
  doc["con"] = k.squaredNorm() - std::abs(trk2);

  const Classification cls = classify_full(p, tol);
  doc["class"] = to_string(cls.label);
  doc["rankK"] = cls.rank;

  if (cls.label == ClassLabel::Zero) {
    doc["spectrum"] = nullptr;
    doc["entropy"] = nullptr;
    doc["borland_dennis"] = nullptr;
  } else {
    // Occupation statements are about normalized states.
    const FermiState336 unit = p.normalized();
    const Spectrum6 spectrum = rdm_spectrum(one_rdm(unit));
    doc["spectrum"] = spectrum;
    doc["entropy"] = von_neumann_entropy(spectrum);
    const OccupationConstraints oc = occupation_constraints(spectrum);
    doc["borland_dennis"] = {
        {"equalities_residuals", oc.equality_residuals},
        {"inequality_slack", oc.inequality_slack}};
  }
  return doc.dump(2);
}

std::string to_json_line(const FermiState336& p) {
  std::ostringstream out;
  out << "{\"fermion_336\":[";
  bool first = true;
  const auto& ts = triples();
  for (int t = 0; t < kTriples; ++t) {
    const cd a = p.ordered()[t];
    if (a == cd{0.0, 0.0}) continue;
    if (!first) out << ',';
    first = false;
    out << '[' << ts[t].i << ',' << ts[t].j << ',' << ts[t].k << ','
        << num17(a.real()) << ',' << num17(a.imag()) << ']';
  }
  out << "]}";
  return out.str();
}

std::string to_json_line(const ThreeQubitState& psi) {
  std::ostringstream out;
  out << "{\"qubits_3\":[";
  bool first = true;
  for (int idx = 0; idx < 8; ++idx) {
    const cd a = psi.a[idx];
    if (a == cd{0.0, 0.0}) continue;
    if (!first) out << ',';
    first = false;
    out << '[' << ((idx >> 2) & 1) << ',' << ((idx >> 1) & 1) << ','
        << (idx & 1) << ',' << num17(a.real()) << ',' << num17(a.imag()) << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace fermi
