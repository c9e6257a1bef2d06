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

#include "cli/report.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#ifndef WEAVE_VERSION
#define WEAVE_VERSION "unknown"
#endif

namespace weave::cli {
namespace {

using nlohmann::json;

constexpr const char* kUnits = "bits";

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

json numbers(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

json header(const char* command) {
  return {{"units", kUnits}, {"version", WEAVE_VERSION}, {"command", command}};
}

json weights_json(const WeightsInfo& w) {
  return {{"spec", w.spec}, {"omega", numbers(w.omega)}};
}

std::string joined(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ';';
    out += format12(xs[i]);
  }
  return out;
}

std::string joined(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ';';
    out += xs[i];
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string dims_text(const Dims& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(dims[i]);
  }
  return out;
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

std::string format12(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.12g}", x);
}

bool TableReport::agrees() const {
  return std::all_of(rows.begin(), rows.end(), [&](const TableRow& row) {
    return !row.matrix || row.matrix->max_disagreement <= tolerance;
  });
}

std::string render(const ProfileRecord& r, OutputFormat format) {
  const bool uniform_d = std::all_of(r.dims.begin(), r.dims.end(),
                                     [&](int d) { return d == r.dims.front(); });
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"units", "source", "N", "dims", "mode", "weights", "total",
                                "weaving", "neural_complexity", "dist", "genuine", "argmin"});
    out += csv_line({kUnits, r.source, std::to_string(r.dims.size()), dims_text(r.dims), r.mode,
                     r.weights.spec, format12(r.total), format12(r.weaving),
                     r.neural_complexity ? format12(*r.neural_complexity) : "",
                     joined(r.dist), joined(r.genuine), joined(r.argmin)});
    return out;
  }
  json doc = header("profile");
  doc[r.from_file ? "file" : "family"] = r.source;
  doc["N"] = r.dims.size();
  doc["d"] = uniform_d ? json(r.dims.front()) : json(r.dims);
  doc["dims"] = r.dims;
  doc["mode"] = r.mode;
  doc["dist"] = numbers(r.dist);
  doc["genuine"] = numbers(r.genuine);
  doc["total"] = number(r.total);
  doc["weaving"] = number(r.weaving);
  doc["weights"] = weights_json(r.weights);
  doc["neural_complexity"] = r.neural_complexity ? number(*r.neural_complexity) : json(nullptr);
  doc["argmin"] = r.argmin;
  return doc.dump(2) + "\n";
}

std::string render(const TableReport& r, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out =
        csv_line({"units", "family", "N", "d", "S_N", "total", "weaving", "genuine", "dist",
                  "matrix_weaving", "max_disagreement", "agrees"});
    for (const TableRow& row : r.rows) {
      out += csv_line({kUnits, row.family, std::to_string(row.n), std::to_string(row.d),
                       format12(row.genuine.back()), format12(row.total), format12(row.weaving),
                       joined(row.genuine), joined(row.dist),
                       row.matrix ? format12(row.matrix->weaving) : "",
                       row.matrix ? format12(row.matrix->max_disagreement) : "",
                       row.matrix ? (row.matrix->max_disagreement <= r.tolerance ? "yes" : "no")
                                  : ""});
    }
    return out;
  }
  json doc = header("table");
  doc["N"] = r.n;
  doc["d"] = r.d;
  doc["mode"] = r.mode;
  doc["weights"] = weights_json(r.weights);
  doc["tolerance"] = r.tolerance;
  doc["agrees"] = r.agrees();
  json rows = json::array();
  for (const TableRow& row : r.rows) {
    json j = {{"family", row.family},
              {"N", row.n},
              {"d", row.d},
              {"dist", numbers(row.dist)},
              {"genuine", numbers(row.genuine)},
              {"S_N", number(row.genuine.back())},
              {"total", number(row.total)},
              {"weaving", number(row.weaving)}};
    if (row.matrix) {
      j["matrix"] = {{"dist", numbers(row.matrix->dist)},
                     {"genuine", numbers(row.matrix->genuine)},
                     {"weaving", number(row.matrix->weaving)},
                     {"max_disagreement", number(row.matrix->max_disagreement)}};
    } else {
      j["matrix"] = nullptr;
    }
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  doc["skipped"] = r.skipped;
  return doc.dump(2) + "\n";
}

std::string render(const ScalingReport& r, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"units", "family", "law", "N", "weaving", "coefficient"});
    for (const ScalingPoint& p : r.points) {
      out += csv_line({kUnits, r.family, r.law, std::to_string(p.n), format12(p.weaving),
                       format12(p.coefficient)});
    }
    return out;
  }
  json doc = header("scaling");
  doc["family"] = r.family;
  doc["law"] = r.law;
  doc["weights"] = r.weights;
  json points = json::array();
  for (const ScalingPoint& p : r.points) {
    points.push_back(
        {{"N", p.n}, {"weaving", number(p.weaving)}, {"coefficient", number(p.coefficient)}});
  }
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

std::string render(const SuiteReport& r, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"property", "trials", "worst_margin", "passed"});
    for (const PropertyResult& p : r.properties) {
      out += csv_line({p.name, std::to_string(p.trials), format12(p.worst_margin),
                       p.passed ? "yes" : "no"});
    }
    return out;
  }
  json doc = header("check");
  doc["seed"] = r.seed;
  doc["trials"] = r.trials;
  doc["tolerance"] = r.tolerance;
  doc["passed"] = r.all_passed();
  json props = json::array();
  for (const PropertyResult& p : r.properties) {
    props.push_back({{"name", p.name},
                     {"trials", p.trials},
                     {"worst_margin", number(p.worst_margin)},
                     {"passed", p.passed}});
  }
  doc["properties"] = std::move(props);
  return doc.dump(2) + "\n";
}

}  // namespace weave::cli
