// Copyright 2026 The sombor-rg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sombor/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/theory.hpp"

namespace sombor::io {
namespace {

constexpr std::string_view kToolName = "sombor-rg";

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    fields.emplace_back(line.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

std::uint64_t parse_unsigned(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ArgumentError("not an unsigned integer: '" + std::string(text) + "'");
  }
  return value;
}

// Inverse of std_error = sqrt(m2 / (count (count - 1))).
double m2_from_stderr(double stderr_value, std::size_t count) {
  if (count < 2) return 0.0;
  const auto c = static_cast<double>(count);
  return stderr_value * stderr_value * c * (c - 1.0);
}

nlohmann::json stats_json(const EnsembleStats& stats) {
  return {{"count", stats.count()}, {"mean", stats.mean()}, {"m2", stats.m2()}};
}

EnsembleStats stats_from(const nlohmann::json& j) {
  return EnsembleStats::from_moments(j.at("count").get<std::size_t>(), j.at("mean").get<double>(),
                                     j.at("m2").get<double>());
}

nlohmann::json number_or_null(double value) {
  return std::isfinite(value) ? nlohmann::json(value) : nlohmann::json(nullptr);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ArgumentError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

double parse_number(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ArgumentError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

double point_prediction(const ModelShape& shape, const SweepPoint& point, const IndexSpec& spec) {
  try {
    const double value = theory::predict_dense(shape.at(point.control), spec).value;
    return std::isfinite(value) ? value : std::numeric_limits<double>::quiet_NaN();
  } catch (const ArgumentError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

void write_csv(std::ostream& out, const SweepResult& result) {
  const ModelShape& shape = result.shape;
  out << "# " << kToolName << ' ' << result.tool_version << '\n';
  out << "# model=" << shape.family_name() << " n=" << shape.n << " n1=" << shape.n1
      << " n2=" << shape.n2 << '\n';
  out << "# master_seed=" << result.master_seed << '\n';
  out << "# replicas=" << result.replicas << '\n';
  out << "# grid=";
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    out << (i ? ";" : "") << format_number(result.points[i].control);
  }
  out << '\n';
  out << "# wall_seconds=" << format_number(result.wall_seconds) << '\n';
  out << kCsvHeader << '\n';

  for (const SweepPoint& point : result.points) {
    for (std::size_t s = 0; s < result.specs.size(); ++s) {
      const IndexSpec& spec = result.specs[s];
      const EnsembleStats& stats = point.indices[s];
      const CollapseAxes axes = collapse_axes(shape, point, spec, stats.mean());
      const double prediction = point_prediction(shape, point, spec);
      const double prediction_normalized =
          std::isfinite(prediction) ? collapse_axes(shape, point, spec, prediction).y
                                    : std::numeric_limits<double>::quiet_NaN();
      out << shape.family_name() << ',' << shape.n << ',' << shape.n1 << ',' << shape.n2 << ','
          << format_number(point.control) << ',' << format_number(point.mean_k) << ','
          << format_number(point.mean_k1) << ',' << format_number(point.mean_k2) << ','
          << format_number(point.degree.mean()) << ',' << format_number(point.degree.std_error())
          << ',' << spec.label() << ',' << format_number(spec.alpha) << ','
          << format_number(spec.beta) << ',' << format_number(stats.mean()) << ','
          << format_number(stats.std_error()) << ',' << format_number(axes.y) << ','
          << format_number(axes.x) << ',' << format_number(prediction) << ','
          << format_number(prediction_normalized) << ',' << stats.count() << ','
          << result.master_seed << '\n';
    }
  }
}

SweepResult read_csv(std::istream& in) {
  SweepResult result;
  std::string line;
  bool header_seen = false;
  std::map<std::string, std::size_t> column;
  std::size_t line_number = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string body = line.substr(1);
      std::istringstream words(body);
      std::string word;
      while (words >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) {
          if (word != kToolName) result.tool_version = word;
          continue;
        }
        const std::string key = word.substr(0, eq);
        const std::string value = word.substr(eq + 1);
        if (key == "master_seed") result.master_seed = parse_unsigned(value);
        if (key == "replicas") result.replicas = parse_unsigned(value);
        if (key == "wall_seconds") result.wall_seconds = parse_number(value);
      }
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) throw ArgumentError("CSV header does not match the result format");
      const auto names = split(line, ',');
      for (std::size_t i = 0; i < names.size(); ++i) column[names[i]] = i;
      header_seen = true;
      continue;
    }

    const auto fields = split(line, ',');
    if (fields.size() != column.size()) {
      throw ArgumentError("CSV line " + std::to_string(line_number) + ": expected " +
                          std::to_string(column.size()) + " fields");
    }
    auto field = [&](const char* name) -> const std::string& { return fields[column.at(name)]; };
    auto number = [&](const char* name) { return parse_number(field(name)); };

    ModelShape shape;
    shape.family = parse_family(field("model"));
    shape.n = parse_unsigned(field("n"));
    shape.n1 = parse_unsigned(field("n1"));
    shape.n2 = parse_unsigned(field("n2"));
    if (result.points.empty() && result.specs.empty()) {
      result.shape = shape;
    } else if (!(shape == result.shape)) {
      throw ArgumentError("CSV mixes different models");
    }

    const IndexSpec spec = IndexSpec::general(number("spec_alpha"), number("spec_beta"));
    std::size_t s = 0;
    const auto found = std::find(result.specs.begin(), result.specs.end(), spec);
    if (found == result.specs.end()) {
      if (!result.points.empty() && result.points.size() > 1) {
        throw ArgumentError("CSV line " + std::to_string(line_number) + ": unexpected index");
      }
      result.specs.push_back(spec);
      s = result.specs.size() - 1;
    } else {
      s = static_cast<std::size_t>(found - result.specs.begin());
    }

    const double control = number("control");
    if (result.points.empty() || result.points.back().control != control) {
      SweepPoint point;
      point.control = control;
      point.mean_k = number("mean_k");
      point.mean_k1 = number("mean_k1");
      point.mean_k2 = number("mean_k2");
      const auto count = static_cast<std::size_t>(parse_unsigned(field("replicas")));
      point.degree = EnsembleStats::from_moments(
          count, number("empirical_mean_degree"),
          m2_from_stderr(number("empirical_degree_stderr"), count));
      result.points.push_back(std::move(point));
    }
    SweepPoint& point = result.points.back();
    if (point.indices.size() <= s) point.indices.resize(s + 1);
    const auto count = static_cast<std::size_t>(parse_unsigned(field("replicas")));
    point.indices[s] =
        EnsembleStats::from_moments(count, number("mean"), m2_from_stderr(number("stderr"), count));
    result.master_seed = parse_unsigned(field("seed"));
  }
  if (!header_seen) throw ArgumentError("CSV has no header");
  for (const SweepPoint& point : result.points) {
    if (point.indices.size() != result.specs.size()) {
      throw ArgumentError("CSV grid point is missing an index row");
    }
  }
  return result;
}

nlohmann::json to_json(const SweepResult& result) {
  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = result.tool_version;
  doc["model"] = {{"family", result.shape.family_name()},
                  {"n", result.shape.n},
                  {"n1", result.shape.n1},
                  {"n2", result.shape.n2}};
  doc["master_seed"] = result.master_seed;
  doc["replicas"] = result.replicas;
  doc["wall_seconds"] = result.wall_seconds;
  nlohmann::json grid = nlohmann::json::array();
  for (const SweepPoint& point : result.points) grid.push_back(point.control);
  doc["grid"] = grid;

  nlohmann::json specs = nlohmann::json::array();
  for (const IndexSpec& spec : result.specs) {
    specs.push_back({{"name", spec.label()}, {"alpha", spec.alpha}, {"beta", spec.beta}});
  }
  doc["specs"] = specs;

  nlohmann::json points = nlohmann::json::array();
  for (const SweepPoint& point : result.points) {
    nlohmann::json indices = nlohmann::json::array();
    for (std::size_t s = 0; s < result.specs.size(); ++s) {
      const EnsembleStats& stats = point.indices[s];
      const CollapseAxes axes = collapse_axes(result.shape, point, result.specs[s], stats.mean());
      nlohmann::json entry = stats_json(stats);
      entry["stderr"] = stats.std_error();
      entry["normalized"] = number_or_null(axes.y);
      entry["collapse_x"] = number_or_null(axes.x);
      entry["prediction"] = number_or_null(point_prediction(result.shape, point, result.specs[s]));
      indices.push_back(std::move(entry));
    }
    points.push_back({{"control", point.control},
                      {"mean_k", point.mean_k},
                      {"mean_k1", point.mean_k1},
                      {"mean_k2", point.mean_k2},
                      {"degree", stats_json(point.degree)},
                      {"indices", std::move(indices)}});
  }
  doc["points"] = std::move(points);
  return doc;
}

SweepResult from_json(const nlohmann::json& doc) {
  try {
    SweepResult result;
    const auto& model = doc.at("model");
    result.shape.family = parse_family(model.at("family").get<std::string>());
    result.shape.n = model.at("n").get<std::size_t>();
    result.shape.n1 = model.at("n1").get<std::size_t>();
    result.shape.n2 = model.at("n2").get<std::size_t>();
    result.tool_version = doc.at("version").get<std::string>();
    result.master_seed = doc.at("master_seed").get<std::uint64_t>();
    result.replicas = doc.at("replicas").get<std::size_t>();
    result.wall_seconds = doc.at("wall_seconds").get<double>();
    for (const auto& spec : doc.at("specs")) {
      result.specs.push_back(
          IndexSpec::general(spec.at("alpha").get<double>(), spec.at("beta").get<double>()));
    }
    for (const auto& p : doc.at("points")) {
      SweepPoint point;
      point.control = p.at("control").get<double>();
      point.mean_k = p.at("mean_k").get<double>();
      point.mean_k1 = p.at("mean_k1").get<double>();
      point.mean_k2 = p.at("mean_k2").get<double>();
      point.degree = stats_from(p.at("degree"));
      for (const auto& entry : p.at("indices")) point.indices.push_back(stats_from(entry));
      if (point.indices.size() != result.specs.size()) {
        throw ArgumentError("JSON point has " + std::to_string(point.indices.size()) +
                            " index entries, expected " + std::to_string(result.specs.size()));
      }
      result.points.push_back(std::move(point));
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed result JSON: ") + e.what());
  }
}

void write_json(std::ostream& out, const SweepResult& result) { out << to_json(result).dump(2) << '\n'; }

SweepResult read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("result file is not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

void save_result(const std::filesystem::path& path, const SweepResult& result, Format format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == Format::kJson) {
    write_json(out, result);
  } else {
    write_csv(out, result);
  }
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

SweepResult load_result(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open result file '" + path.string() + "'");
  in >> std::ws;
  if (in.peek() == '{') return read_json(in);
  return read_csv(in);
}

}  // namespace sombor::io
