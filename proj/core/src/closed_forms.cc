// Copyright 2026 The weave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weave/closed_forms.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "weave/errors.h"

namespace weave {
namespace {

constexpr std::array<std::pair<ClosedFormId, std::string_view>, 9> kNames{{
    {ClosedFormId::classical_pair_product, "classical-pair-product"},
    {ClosedFormId::classical, "classical"},
    {ClosedFormId::bell_product, "bell-product"},
    {ClosedFormId::ghz, "ghz"},
    {ClosedFormId::dicke_1, "dicke-1"},
    {ClosedFormId::dicke_half, "dicke-half"},
    {ClosedFormId::qudit_classical, "qudit-classical"},
    {ClosedFormId::qudit_bell_product, "qudit-bell-product"},
    {ClosedFormId::a_family, "a-family"},
}};

double h(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

long ceil_div(long a, long b) { return (a + b - 1) / b; }

// ln(i!) for i = 0..n.
std::vector<double> log_factorials(int n) {
  std::vector<double> lf(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 2; i <= n; ++i) lf[static_cast<std::size_t>(i)] = lf[static_cast<std::size_t>(i - 1)] + std::log(static_cast<double>(i));
  return lf;
}

double log_binom(const std::vector<double>& lf, int n, int r) {
  return lf[static_cast<std::size_t>(n)] - lf[static_cast<std::size_t>(r)] - lf[static_cast<std::size_t>(n - r)];
}

// Hypergeometric probabilities C(j,i) C(n-j,m-i) / C(n,m) for i = lo..hi, built by the
// term ratio outward from the mode and normalized at the end. Terms far in the tails
// underflow to zero instead of carrying log-factorial roundoff.
std::vector<double> hypergeometric_pmf(int n, int m, int j) {
  const int lo = std::max(0, m - (n - j));
  const int hi = std::min(j, m);
  const int mode = std::clamp(static_cast<int>((static_cast<long long>(j) + 1) * (m + 1) / (n + 2)), lo, hi);
  std::vector<double> w(static_cast<std::size_t>(hi - lo + 1), 0.0);
  auto at = [&](int i) -> double& { return w[static_cast<std::size_t>(i - lo)]; };
  at(mode) = 1.0;
  for (int i = mode; i < hi; ++i) {
    at(i + 1) = at(i) * (static_cast<double>(j - i) * (m - i)) /
                (static_cast<double>(i + 1) * (n - j - m + i + 1));
  }
  for (int i = mode; i > lo; --i) {
    at(i - 1) = at(i) * (static_cast<double>(i) * (n - j - m + i)) /
                (static_cast<double>(j - i + 1) * (m - i + 1));
  }
  double sum = 0.0;
  for (double x : w) sum += x;
  for (double& x : w) x /= sum;
  return w;
}

double hypergeometric_entropy(int n, int m, int j) {
  double s = 0.0;
  for (double p : hypergeometric_pmf(n, m, j)) s -= h(p);
  return s;
}

// Entropies S(rho_j) of the j-party marginals, j = 0..n, for families whose marginals
// depend only on j.
std::vector<double> symmetric_marginal_entropies(const ClosedFormFamily& f) {
  const int n = f.n;
  std::vector<double> s(static_cast<std::size_t>(n) + 1, 0.0);
  switch (f.id) {
    case ClosedFormId::dicke_1:
      for (int j = 1; j < n; ++j) s[static_cast<std::size_t>(j)] = binary_entropy(static_cast<double>(j) / n);
      break;
    case ClosedFormId::dicke_half: {
      for (int j = 1; j < n; ++j) s[static_cast<std::size_t>(j)] = hypergeometric_entropy(n, n / 2, j);
      break;
    }
    default:
      throw ArgumentError("no symmetric marginal table for this family");
  }
  return s;
}

}  // namespace

std::string closed_form_name(ClosedFormId id) {
  for (const auto& [fid, name] : kNames) {
    if (fid == id) return std::string(name);
  }
  return "unknown";
}

std::optional<ClosedFormId> closed_form_from_name(std::string_view name) {
  for (const auto& [fid, fname] : kNames) {
    if (fname == name) return fid;
  }
  return std::nullopt;
}

const std::vector<ClosedFormId>& all_closed_forms() {
  static const std::vector<ClosedFormId> ids = [] {
    std::vector<ClosedFormId> out;
    for (const auto& [fid, name] : kNames) out.push_back(fid);
    return out;
  }();
  return ids;
}

void validate(const ClosedFormFamily& f) {
  if (f.n < 1) throw ArgumentError("closed form needs N >= 1");
  if (f.d < 2) throw ArgumentError("closed form needs d >= 2");
  switch (f.id) {
    case ClosedFormId::bell_product:
    case ClosedFormId::qudit_bell_product:
    case ClosedFormId::classical_pair_product:
    case ClosedFormId::dicke_half:
      if (f.n % 2 != 0) throw ArgumentError(closed_form_name(f.id) + " needs even N");
      break;
    case ClosedFormId::a_family:
      if (!(f.a > 0.0 && f.a < 1.0)) throw ArgumentError("a-family needs 0 < a < 1");
      break;
    default:
      break;
  }
  const bool qubit_only = f.id == ClosedFormId::dicke_1 || f.id == ClosedFormId::dicke_half ||
                          f.id == ClosedFormId::classical_pair_product ||
                          f.id == ClosedFormId::a_family;
  if (qubit_only && f.d != 2) throw ArgumentError(closed_form_name(f.id) + " is defined for d = 2");
}

StateFamily to_state_family(const ClosedFormFamily& f) {
  validate(f);
  StateFamily s;
  s.n = f.n;
  s.d = f.d;
  switch (f.id) {
    case ClosedFormId::ghz:
      s.id = FamilyId::ghz;
      break;
    case ClosedFormId::classical:
      s.id = FamilyId::classical;
      break;
    case ClosedFormId::qudit_classical:
      s.id = FamilyId::qudit_classical;
      break;
    case ClosedFormId::bell_product:
      s.id = FamilyId::bell_product;
      break;
    case ClosedFormId::qudit_bell_product:
      s.id = FamilyId::qudit_bell_product;
      break;
    case ClosedFormId::classical_pair_product:
      s.id = FamilyId::classical_pair_product;
      break;
    case ClosedFormId::dicke_1:
      s.id = FamilyId::dicke;
      s.excitations = 1;
      break;
    case ClosedFormId::dicke_half:
      s.id = FamilyId::dicke;
      s.excitations = f.n / 2;
      break;
    case ClosedFormId::a_family:
      s.id = FamilyId::a_family;
      s.amplitude = f.a;
      break;
  }
  return s;
}

double binary_entropy(double p) { return -h(p) - h(1.0 - p); }

std::vector<double> dicke_marginal_spectrum(int n, int m, int j) {
  if (n < 1 || m < 0 || m > n || j < 0 || j > n) {
    throw ArgumentError("dicke_marginal_spectrum: need 0 <= m, j <= n");
  }
  return hypergeometric_pmf(n, m, j);
}

double dicke_marginal_entropy(int n, int m, int j) {
  if (n < 1 || m < 0 || m > n || j < 0 || j > n) {
    throw ArgumentError("dicke_marginal_entropy: need 0 <= m, j <= n");
  }
  return hypergeometric_entropy(n, m, j);
}

double dicke_one_dist(int n, int k) {
  if (k < 1 || k > n) throw ArgumentError("dicke_one_dist needs 1 <= k <= N");
  const double q = n / k;
  const double x = static_cast<double>(k) / n;
  const double covered = q * k / n;
  return -q * (h(x) + h(1.0 - x)) - h(covered) - h(1.0 - covered);
}

double dicke_half_dist(int n, int k) {
  if (n % 2 != 0) throw ArgumentError("dicke_half_dist needs even N");
  if (k < 1 || k > n) throw ArgumentError("dicke_half_dist needs 1 <= k <= N");
  const auto lf = log_factorials(n);
  const int half = n / 2;
  const int q = n / k;
  const int covered = k * q;
  const int rest = n - covered;
  const double norm = log_binom(lf, n, half);

  double blocks = 0.0;
  for (int i = std::max(0, half - (n - k)); i <= std::min(k, half); ++i) {
    const double log_p = log_binom(lf, k, i) + log_binom(lf, n - k, half - i) - norm;
    blocks -= std::exp(log_p) * log_p;
  }
  double remainder = 0.0;
  for (int i = 0; i <= rest; ++i) {
    if (half - i < 0 || half - i > covered) continue;
    const double log_p = log_binom(lf, covered, half - i) + log_binom(lf, rest, i) - norm;
    remainder -= std::exp(log_p) * log_p;
  }
  return (q * blocks + remainder) / std::log(2.0);
}

std::vector<double> cf_dist_all(const ClosedFormFamily& f) {
  validate(f);
  const int n = f.n;
  std::vector<double> dist(static_cast<std::size_t>(n), 0.0);
  const double log_d = std::log2(static_cast<double>(f.d));

  switch (f.id) {
    case ClosedFormId::ghz:
    case ClosedFormId::a_family: {
      // Pure, every proper marginal has the same two-level spectrum.
      const double unit = f.id == ClosedFormId::ghz ? 1.0 : binary_entropy(f.a * f.a);
      for (int k = 1; k < n; ++k) dist[static_cast<std::size_t>(k - 1)] = static_cast<double>(ceil_div(n, k)) * unit;
      break;
    }
    case ClosedFormId::classical:
    case ClosedFormId::qudit_classical:
      for (int k = 1; k < n; ++k) {
        dist[static_cast<std::size_t>(k - 1)] = static_cast<double>(ceil_div(n, k) - 1) * log_d;
      }
      break;
    case ClosedFormId::bell_product:
    case ClosedFormId::qudit_bell_product:
      if (n >= 2) dist[0] = n * log_d;
      break;
    case ClosedFormId::classical_pair_product:
      if (n >= 2) dist[0] = n / 2.0;
      break;
    case ClosedFormId::dicke_1:
    case ClosedFormId::dicke_half: {
      const auto s = symmetric_marginal_entropies(f);
      for (int k = 1; k < n; ++k) {
        const int q = n / k;
        const int r = n % k;
        dist[static_cast<std::size_t>(k - 1)] = q * s[static_cast<std::size_t>(k)] + s[static_cast<std::size_t>(r)];
      }
      break;
    }
  }
  return dist;
}

double cf_dist(const ClosedFormFamily& f, int k) {
  validate(f);
  if (k < 1 || k > f.n) throw ArgumentError("cf_dist needs 1 <= k <= N");
  switch (f.id) {
    case ClosedFormId::dicke_1:
      return std::max(0.0, dicke_one_dist(f.n, k));
    case ClosedFormId::dicke_half:
      return std::max(0.0, dicke_half_dist(f.n, k));
    default:
      return cf_dist_all(f)[static_cast<std::size_t>(k - 1)];
  }
}

double cf_genuine(const ClosedFormFamily& f, int k) {
  validate(f);
  if (k < 2 || k > f.n) throw ArgumentError("cf_genuine needs 2 <= k <= N");
  const double g = cf_dist(f, k - 1) - cf_dist(f, k);
  if (g < 0.0 && g >= -1e-12) return 0.0;
  return g;
}

double cf_weaving(const ClosedFormFamily& f, const WeightScheme& weights) {
  validate(f);
  if (weights.n() != f.n) throw ArgumentError("weight scheme size differs from N");
  const auto dist = cf_dist_all(f);
  double w = 0.0;
  for (int k = 1; k <= f.n - 1; ++k) w += weights.big_omega(k) * dist[static_cast<std::size_t>(k - 1)];
  return w;
}

ScalingLaw claimed_scaling(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::ghz:
    case ClosedFormId::classical:
    case ClosedFormId::qudit_classical:
    case ClosedFormId::a_family:
      return ScalingLaw::n_log_n;
    case ClosedFormId::dicke_half:
      return ScalingLaw::quadratic;
    default:
      return ScalingLaw::linear;
  }
}

std::string scaling_law_name(ScalingLaw law) {
  switch (law) {
    case ScalingLaw::linear:
      return "N";
    case ScalingLaw::n_log_n:
      return "N log2 N";
    case ScalingLaw::quadratic:
      return "N^2";
  }
  return "?";
}

double scaling_normalizer(ScalingLaw law, int n) {
  const double x = n;
  switch (law) {
    case ScalingLaw::linear:
      return x;
    case ScalingLaw::n_log_n:
      return x * std::log2(x);
    case ScalingLaw::quadratic:
      return x * x;
  }
  return x;
}

std::vector<ScalingPoint> cf_scaling_sweep(const ClosedFormFamily& prototype,
                                           std::span<const int> ns,
                                           const std::function<WeightScheme(int)>& weights) {
  const ScalingLaw law = claimed_scaling(prototype.id);
  std::vector<ScalingPoint> out;
  out.reserve(ns.size());
  for (int n : ns) {
    if (n < 2) throw ArgumentError("scaling sweep needs N >= 2");
    ClosedFormFamily f = prototype;
    f.n = n;
    const double w = cf_weaving(f, weights(n));
    out.push_back({n, w, w / scaling_normalizer(law, n)});
  }
  return out;
}

}  // namespace weave
