#include "fermi/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "fermi/rdm.hpp"
#include "fermi/rng.hpp"

namespace fermi {

namespace {

std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Mat6 random_invertible(Rng& rng, double cond_cap) {
  for (;;) {
    Mat6 g;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = rng.cgaussian();
    Eigen::JacobiSVD<Mat6> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(5) > 0.0 && sv(0) / sv(5) <= cond_cap) return g;
  }
}

FermiState336 random_gaussian_state(Rng& rng) {
  FermiState336 p;
  for (int t = 0; t < kTriples; ++t) p.ordered()[t] = rng.cgaussian();
  return p;
}

}  // namespace

FermiState336 state_separable() { return FermiState336::basis(1, 2, 3); }

FermiState336 state_biseparable() {
  return FermiState336::basis(1, 2, 3) + FermiState336::basis(1, 5, 6);
}

FermiState336 state_w() {
  // e^126 + e^423 + e^153 = e^126 + e^234 - e^135
  FermiState336 p;
  p.set_amplitude(1, 2, 6, cd{1.0, 0.0});
  p.set_amplitude(4, 2, 3, cd{1.0, 0.0});
  p.set_amplitude(1, 5, 3, cd{1.0, 0.0});
  return p;
}

FermiState336 state_ghz() {
  return FermiState336::basis(1, 2, 3) + FermiState336::basis(4, 5, 6);
}

FermiState336 canonical4(cd a, cd b, cd c, cd d) {
  FermiState336 p;
  p.set_amplitude(1, 2, 3, a);
  p.set_amplitude(1, 4, 5, b);
  p.set_amplitude(2, 4, 6, c);
  p.set_amplitude(3, 5, 6, d);
  return p;
}

SampleClass parse_sample_class(const std::string& name) {
  if (name == "ghz_random") return SampleClass::GhzRandom;
  if (name == "w_class") return SampleClass::WClass;
  if (name == "biseparable") return SampleClass::Biseparable;
  if (name == "canonical4") return SampleClass::Canonical4;
  if (name == "zero_con") return SampleClass::ZeroCon;
  throw std::invalid_argument(
      "unknown sample class \"" + name +
      "\" (expected ghz_random | w_class | biseparable | canonical4 | zero_con)");
}

const char* to_string(SampleClass c) {
  switch (c) {
    case SampleClass::GhzRandom: return "ghz_random";
    case SampleClass::WClass: return "w_class";
    case SampleClass::Biseparable: return "biseparable";
    case SampleClass::Canonical4: return "canonical4";
    case SampleClass::ZeroCon: return "zero_con";
  }
  return "?";
}

FermiState336 sample_state(SampleClass c, std::uint64_t seed,
                           std::uint64_t index, double cond_cap) {
  Rng rng = Rng::stream(seed, index);
  switch (c) {
    case SampleClass::GhzRandom:
      return random_gaussian_state(rng).normalized();
    case SampleClass::WClass:
      return apply_slocc(random_invertible(rng, cond_cap), state_w())
          .normalized();
    case SampleClass::Biseparable:
      return apply_slocc(random_invertible(rng, cond_cap), state_biseparable())
          .normalized();
    case SampleClass::Canonical4: {
      const double a = rng.gaussian();
      const double b = rng.gaussian();
      const double cc = rng.gaussian();
      const double d = rng.gaussian();
      return canonical4(a, b, cc, d).normalized();
    }
    case SampleClass::ZeroCon: {
      const cd a = rng.cgaussian();
      const cd b = rng.cgaussian();
      FermiState336 p = a * FermiState336::basis(1, 2, 3) +
                        b * FermiState336::basis(4, 5, 6);
      return p.normalized();
    }
  }
  throw std::logic_error("unreachable sample class");
}

PointRecord point_record(const FermiState336& p, double tol) {
  PointRecord r;
  const Mat6 k = k_matrix(p);
  r.tr_kk_dagger = k.squaredNorm();
  r.con = r.tr_kk_dagger - std::abs((k * k).trace());
  r.d_abs = std::abs((k * k).trace()) / 6.0;
  r.entropy = von_neumann_entropy(one_rdm(p));
  r.label = classify(p, tol);
  return r;
}

void validate(const PointRecord& r) {
  if (!(r.tr_kk_dagger >= 0.0 && r.tr_kk_dagger <= 1.5 + 1e-9))
    throw std::runtime_error("point record violates 0 <= tr_kk_dagger <= 3/2: " +
                             num17(r.tr_kk_dagger));
  const double log6 = std::log(6.0);
  if (!(r.entropy <= log6 + 1e-9))
    throw std::runtime_error("point record violates entropy <= log 6: " +
                             num17(r.entropy));
}

std::string csv_header() { return "tr_kk_dagger,entropy,con,d_abs,class"; }

std::string csv_row(const PointRecord& r) {
  std::ostringstream out;
  out << num17(r.tr_kk_dagger) << ',' << num17(r.entropy) << ','
      << num17(r.con) << ',' << num17(r.d_abs) << ',' << to_string(r.label);
  return out.str();
}

std::string sample_csv(SampleClass c, int count, std::uint64_t seed,
                       double cond_cap) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (int i = 0; i < count; ++i) {
    const FermiState336 p = sample_state(c, seed, i, cond_cap);
    const PointRecord r = point_record(p);
    validate(r);
    out << csv_row(r) << '\n';
  }
  return out.str();
}

}  // namespace fermi
