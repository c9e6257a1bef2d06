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

#include "cli/state_file.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "weave/errors.h"

namespace weave::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  int line = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) fail(name, "missing field");
  return *it;
}

Complex parse_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(path, "expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Dims parse_dims(const json& v) {
  if (!v.is_array() || v.empty()) fail("dims", "expected a non-empty list of integers");
  Dims dims;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = "dims[" + std::to_string(i) + "]";
    if (!v[i].is_number_integer()) fail(path, "expected an integer");
    const auto d = v[i].get<long long>();
    if (d < 1 || d > 10) fail(path, "local dimension must be in [1, 10]");
    dims.push_back(static_cast<int>(d));
  }
  return dims;
}

std::uint64_t checked_size(const Dims& dims, const Limits& limits) {
  std::uint64_t size = 1;
  for (int d : dims) {
    size *= static_cast<std::uint64_t>(d);
    if (size > std::max(limits.max_pure_dim, limits.max_dense_dim)) {
      throw CapacityError("dims: total dimension too large");
    }
  }
  return size;
}

DensityState parse_pure(const json& payload, const Dims& dims, std::uint64_t size,
                        const Limits& limits) {
  if (!payload.is_array()) fail("payload", "expected a list of amplitudes");
  if (payload.size() != size) {
    fail("payload", "expected " + std::to_string(size) + " amplitudes, found " +
                        std::to_string(payload.size()));
  }
  Vector psi(static_cast<Eigen::Index>(size));
  for (std::size_t i = 0; i < size; ++i) {
    psi(static_cast<Eigen::Index>(i)) = parse_complex(payload[i], "payload[" + std::to_string(i) + "]");
  }
  return DensityState::from_amplitudes(dims, std::move(psi), limits);
}

DensityState parse_mixed(const json& payload, const Dims& dims, std::uint64_t size,
                         const Limits& limits) {
  if (size > static_cast<std::uint64_t>(limits.max_dense_dim)) {
    throw CapacityError("payload: dense matrix of dimension " + std::to_string(size) +
                        " exceeds the limit of " + std::to_string(limits.max_dense_dim));
  }
  if (!payload.is_array()) fail("payload", "expected a matrix");
  const auto n = static_cast<Eigen::Index>(size);
  Matrix rho(n, n);
  const bool nested = !payload.empty() && payload[0].is_array() && !payload[0].empty() &&
                      payload[0][0].is_array();
  if (nested) {
    if (payload.size() != size) {
      fail("payload", "expected " + std::to_string(size) + " rows, found " +
                          std::to_string(payload.size()));
    }
    for (std::size_t r = 0; r < size; ++r) {
      const std::string row_path = "payload[" + std::to_string(r) + "]";
      const json& row = payload[r];
      if (!row.is_array() || row.size() != size) {
        fail(row_path, "expected a row of " + std::to_string(size) + " entries");
      }
      for (std::size_t c = 0; c < size; ++c) {
        rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            parse_complex(row[c], row_path + "[" + std::to_string(c) + "]");
      }
    }
  } else {
    if (payload.size() != size * size) {
      fail("payload", "expected " + std::to_string(size * size) + " entries, found " +
                          std::to_string(payload.size()));
    }
    for (std::size_t i = 0; i < size * size; ++i) {
      rho(static_cast<Eigen::Index>(i / size), static_cast<Eigen::Index>(i % size)) =
          parse_complex(payload[i], "payload[" + std::to_string(i) + "]");
    }
  }
  return DensityState::from_matrix(dims, std::move(rho), limits);
}

DensityState parse_classical(const json& payload, const Dims& dims) {
  if (!payload.is_object()) fail("payload", "expected an object of digit strings");
  ProbabilityTable table;
  for (const auto& [key, value] : payload.items()) {
    const std::string path = "payload[\"" + key + "\"]";
    if (key.size() != dims.size()) {
      fail(path, "expected " + std::to_string(dims.size()) + " digits");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
      const int digit = key[i] - '0';
      if (digit < 0 || digit >= dims[i]) {
        fail(path, "digit " + std::to_string(i) + " out of range for dimension " +
                       std::to_string(dims[i]));
      }
      index = index * static_cast<std::uint64_t>(dims[i]) + static_cast<std::uint64_t>(digit);
    }
    if (!value.is_number()) fail(path, "expected a probability");
    table.push_back({index, value.get<double>()});
  }
  return DensityState::from_probabilities(dims, std::move(table));
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

DensityState parse_state_document(std::string_view text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON (" +
                     e.what() + ")");
  }
  if (!doc.is_object()) fail("<root>", "expected an object");
  const Dims dims = parse_dims(field(doc, "dims"));
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) fail("kind", "expected a string");
  const json& payload = field(doc, "payload");
  const std::uint64_t size = checked_size(dims, limits);
  const std::string k = kind.get<std::string>();
  if (k == "pure") return parse_pure(payload, dims, size, limits);
  if (k == "mixed") return parse_mixed(payload, dims, size, limits);
  if (k == "classical") return parse_classical(payload, dims);
  fail("kind", "expected one of pure, mixed, classical; found '" + k + "'");
}

DensityState load_state_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open state file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_state_document(buffer.str(), limits);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string state_document(const DensityState& s) {
  json doc;
  doc["dims"] = s.dims();
  switch (s.representation()) {
    case Representation::pure: {
      doc["kind"] = "pure";
      json payload = json::array();
      const Vector& psi = s.amplitudes();
      for (Eigen::Index i = 0; i < psi.size(); ++i) payload.push_back(complex_json(psi(i)));
      doc["payload"] = std::move(payload);
      break;
    }
    case Representation::dense: {
      doc["kind"] = "mixed";
      json payload = json::array();
      const Matrix& rho = s.matrix();
      for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < rho.cols(); ++c) row.push_back(complex_json(rho(r, c)));
        payload.push_back(std::move(row));
      }
      doc["payload"] = std::move(payload);
      break;
    }
    case Representation::classical: {
      doc["kind"] = "classical";
      json payload = json::object();
      const Dims& dims = s.dims();
      for (const auto& [index, p] : s.probabilities()) {
        std::string key(dims.size(), '0');
        std::uint64_t rest = index;
        for (std::size_t i = dims.size(); i-- > 0;) {
          key[i] = static_cast<char>('0' + rest % static_cast<std::uint64_t>(dims[i]));
          rest /= static_cast<std::uint64_t>(dims[i]);
        }
        payload[key] = p;
      }
      doc["payload"] = std::move(payload);
      break;
    }
  }
  return doc.dump(2);
}

}  // namespace weave::cli
