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

#include "cli/specs.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "weave/errors.h"

namespace weave::cli {
namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int to_int(const std::string& s, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ArgumentError(std::string(context) + ": '" + s + "' is not an integer");
  }
  return value;
}

double to_double(const std::string& s, std::string_view context) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw ArgumentError(std::string(context) + ": '" + s + "' is not a number");
  }
  return value;
}

std::vector<double> number_list(const nlohmann::json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw ParseError(path + "[" + std::to_string(i) + "]: expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

WeightScheme weights_from_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open weights file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON (" + e.what() + ")");
  }
  std::vector<double> values;
  bool big = false;
  if (doc.is_array()) {
    values = number_list(doc, path);
  } else if (doc.is_object() && doc.contains("omega")) {
    values = number_list(doc["omega"], path + ": omega");
  } else if (doc.is_object() && doc.contains("big_omega")) {
    values = number_list(doc["big_omega"], path + ": big_omega");
    big = true;
  } else {
    throw ParseError(path + ": expected a list or an object with 'omega' or 'big_omega'");
  }
  if (static_cast<int>(values.size()) != n - 1) {
    throw ArgumentError(path + ": " + std::to_string(values.size()) + " weights given, " +
                        std::to_string(n - 1) + " needed for N = " + std::to_string(n));
  }
  return big ? WeightScheme::from_big_omega(std::move(values))
             : WeightScheme::from_omega(std::move(values));
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  StateSpec spec;
  spec.label = std::string(text);
  const auto parts = split(text, ':');
  const auto id = family_from_name(parts[0]);
  if (parts.size() < 2 || !id || *id == FamilyId::custom) {
    spec.path = std::string(text);
    return spec;
  }
  const std::string context = "state '" + spec.label + "'";
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw ArgumentError(context + ": wrong number of fields");
    }
  };
  StateFamily f;
  f.id = *id;
  switch (*id) {
    case FamilyId::ghz:
    case FamilyId::classical:
    case FamilyId::bell_product:
      arity(2, 3);
      if (parts.size() == 3) f.d = to_int(parts[2], context);
      break;
    case FamilyId::classical_pair_product:
      arity(2, 2);
      break;
    case FamilyId::dicke:
      arity(3, 3);
      f.excitations = to_int(parts[2], context);
      break;
    case FamilyId::a_family:
      arity(3, 3);
      f.amplitude = to_double(parts[2], context);
      break;
    case FamilyId::qudit_classical:
    case FamilyId::qudit_bell_product:
      arity(3, 3);
      f.d = to_int(parts[2], context);
      break;
    case FamilyId::custom:
      break;
  }
  f.n = to_int(parts[1], context);
  validate(f);
  spec.family = f;
  return spec;
}

WeightScheme parse_weights(std::string_view text, int n) {
  if (n < 2) throw ArgumentError("weights need at least 2 subsystems");
  if (text == "k-1") return WeightScheme::linear(n);
  if (text == "uniform") return WeightScheme::uniform(n);
  if (text.starts_with("delta:")) {
    const int k = to_int(std::string(text.substr(6)), "weights");
    if (k < 2 || k > n) {
      throw ArgumentError("weights delta:" + std::to_string(k) + " needs 2 <= K <= N = " +
                          std::to_string(n));
    }
    return WeightScheme::delta(n, k);
  }
  if (text.starts_with("file:")) return weights_from_file(std::string(text.substr(5)), n);
  throw ArgumentError("unknown weights '" + std::string(text) +
                      "' (expected k-1, uniform, delta:K or file:PATH)");
}

MinimizationMode parse_mode(std::string_view text) {
  if (text == "auto") return MinimizationMode::automatic;
  if (text == "brute") return MinimizationMode::brute;
  if (text == "fast") return MinimizationMode::symmetric_fast;
  throw ArgumentError("unknown mode '" + std::string(text) + "' (expected auto, brute, fast)");
}

std::string mode_name(MinimizationMode mode) {
  switch (mode) {
    case MinimizationMode::automatic:
      return "auto";
    case MinimizationMode::brute:
      return "brute";
    case MinimizationMode::symmetric_fast:
      return "fast";
  }
  return "auto";
}

}  // namespace weave::cli
