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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sombor/ensemble.hpp"

// Result-file formats. CSV is one row per (grid point, index) with a fixed
// header; '#' lines before the header carry the provenance needed to rerun
// the sweep. JSON holds the same data nested, with exact accumulator state.
namespace sombor::io {

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);

inline constexpr std::string_view kCsvHeader =
    "model,n,n1,n2,control,mean_k,mean_k1,mean_k2,empirical_mean_degree,"
    "empirical_degree_stderr,spec_name,spec_alpha,spec_beta,mean,stderr,normalized,"
    "collapse_x,prediction,prediction_normalized,replicas,seed";

// 17 significant digits; "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double value);
double parse_number(std::string_view text);

// Dense-limit prediction of <X> at a point, NaN where undefined (<k> = 0
// with a negative exponent, or p = 0).
double point_prediction(const ModelShape& shape, const SweepPoint& point, const IndexSpec& spec);

void write_csv(std::ostream& out, const SweepResult& result);
// Standard errors are stored, not M2, so the accumulators are rebuilt up
// to rounding.
SweepResult read_csv(std::istream& in);

nlohmann::json to_json(const SweepResult& result);
SweepResult from_json(const nlohmann::json& doc);
void write_json(std::ostream& out, const SweepResult& result);
SweepResult read_json(std::istream& in);

void save_result(const std::filesystem::path& path, const SweepResult& result, Format format);
// Format chosen by content: JSON if the first non-blank character is '{'.
SweepResult load_result(const std::filesystem::path& path);

}  // namespace sombor::io
