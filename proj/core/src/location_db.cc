// Copyright 2026 The dpdeid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deid/location_db.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>

#include "absl/status/status.h"
#include "deid/text_util.h"
#include "fmt/format.h"

namespace deid {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;
constexpr double kPi = 3.14159265358979323846;

// Splits one CSV line. Handles "quoted, fields" and doubled quotes.
absl::StatusOr<std::vector<std::string>> SplitCsvLine(std::string_view line,
                                                      int line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::string(StripAsciiWhitespace(current)));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (quoted) {
    return absl::InvalidArgumentError(
        fmt::format("line {}: unterminated quoted field", line_number));
  }
  fields.push_back(std::string(StripAsciiWhitespace(current)));
  return fields;
}

}  // namespace

absl::StatusOr<LocationDb> LocationDb::FromRaw(
    std::vector<RawLocation> rows, std::vector<std::string> feature_names) {
  if (rows.empty()) {
    return absl::InvalidArgumentError("location database has no records");
  }
  const std::size_t n = feature_names.size();
  LocationDb db;
  db.bounds_.assign(n, FeatureBounds{0, 0});
  for (std::size_t f = 0; f < n; ++f) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const RawLocation& row : rows) {
      if (row.raw_features.size() != n) {
        return absl::InvalidArgumentError(
            fmt::format("record '{}' has {} features, expected {}", row.name,
                        row.raw_features.size(), n));
      }
      const double v = row.raw_features[f];
      if (!std::isfinite(v)) {
        return absl::InvalidArgumentError(
            fmt::format("record '{}': feature '{}' is not finite", row.name,
                        feature_names[f]));
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    db.bounds_[f] = {lo, hi};
    if (hi == lo) {
      db.warnings_.push_back(fmt::format(
          "feature '{}' is constant; normalized to 0", feature_names[f]));
    }
  }

  std::vector<std::pair<std::string, std::size_t>> names;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RawLocation& row = rows[i];
    if (!std::isfinite(row.lat) || !std::isfinite(row.lon) ||
        std::abs(row.lat) > 90 || std::abs(row.lon) > 180) {
      return absl::InvalidArgumentError(
          fmt::format("record '{}' has invalid coordinates ({:g}, {:g})",
                      row.name, row.lat, row.lon));
    }
    const std::string canonical = CanonicalKey(row.name);
    if (canonical.empty()) {
      return absl::InvalidArgumentError(
          fmt::format("record {} has an empty name", i));
    }
    names.emplace_back(canonical, i);
    LocationRecord record{std::move(row.name), row.lat, row.lon, {}};
    record.features.reserve(n);
    for (std::size_t f = 0; f < n; ++f) {
      const FeatureBounds& b = db.bounds_[f];
      const double span = b.max - b.min;
      record.features.push_back(span > 0 ? (row.raw_features[f] - b.min) / span
                                         : 0.0);
    }
    db.records_.push_back(std::move(record));
  }
  std::sort(names.begin(), names.end());
  for (std::size_t i = 1; i < names.size(); ++i) {
    if (names[i].first == names[i - 1].first) {
      return absl::InvalidArgumentError(
          fmt::format("duplicate location name '{}' (also '{}')",
                      db.records_[names[i].second].name,
                      db.records_[names[i - 1].second].name));
    }
  }
  for (auto& [canonical, index] : names) {
    db.canonical_names_.push_back(std::move(canonical));
    db.name_index_.push_back(index);
  }
  db.feature_names_ = std::move(feature_names);
  return db;
}

std::optional<std::size_t> LocationDb::FindByName(std::string_view name) const {
  const std::string canonical = CanonicalKey(name);
  auto it = std::lower_bound(canonical_names_.begin(), canonical_names_.end(),
                             canonical);
  if (it == canonical_names_.end() || *it != canonical) return std::nullopt;
  return name_index_[static_cast<std::size_t>(it - canonical_names_.begin())];
}

double LocationDb::RawFeature(std::size_t i, std::size_t f) const {
  const FeatureBounds& b = bounds_[f];
  return b.min + records_[i].features[f] * (b.max - b.min);
}

absl::StatusOr<LocationDb> ParseLocationDb(
    std::string_view source, const std::vector<std::string>& feature_columns) {
  std::vector<std::string_view> lines;
  for (std::size_t begin = 0; begin <= source.size();) {
    std::size_t end = source.find('\n', begin);
    if (end == std::string_view::npos) end = source.size();
    lines.push_back(source.substr(begin, end - begin));
    begin = end + 1;
  }
  int header_line = 0;
  std::vector<std::string> header;
  std::vector<RawLocation> rows;
  std::size_t name_col = 0;
  std::size_t lat_col = 0;
  std::size_t lon_col = 0;
  std::vector<std::size_t> feature_cols;
  std::vector<std::string> feature_names;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (StripAsciiWhitespace(line).empty()) continue;
    const int line_number = static_cast<int>(li) + 1;
    absl::StatusOr<std::vector<std::string>> fields =
        SplitCsvLine(line, line_number);
    if (!fields.ok()) return fields.status();

    if (header.empty()) {
      header = *std::move(fields);
      header_line = line_number;
      auto column = [&](std::string_view name) -> absl::StatusOr<std::size_t> {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
          return absl::InvalidArgumentError(fmt::format(
              "location database schema error: missing column '{}'", name));
        }
        return static_cast<std::size_t>(it - header.begin());
      };
      for (auto [name, slot] :
           {std::pair{"name", &name_col}, std::pair{"lat", &lat_col},
            std::pair{"lon", &lon_col}}) {
        absl::StatusOr<std::size_t> index = column(name);
        if (!index.ok()) return index.status();
        *slot = *index;
      }
      if (feature_columns.empty()) {
        for (std::size_t c = 0; c < header.size(); ++c) {
          if (c == name_col || c == lat_col || c == lon_col) continue;
          feature_cols.push_back(c);
          feature_names.push_back(header[c]);
        }
      } else {
        for (const std::string& name : feature_columns) {
          absl::StatusOr<std::size_t> index = column(name);
          if (!index.ok()) return index.status();
          feature_cols.push_back(*index);
          feature_names.push_back(name);
        }
      }
      continue;
    }

    if (fields->size() != header.size()) {
      return absl::InvalidArgumentError(fmt::format(
          "location database parse error at line {}: {} fields, header has {}",
          line_number, fields->size(), header.size()));
    }
    RawLocation row;
    row.name = (*fields)[name_col];
    auto number = [&](std::size_t col, double* out) -> absl::Status {
      if (!ParseDouble((*fields)[col], out) || !std::isfinite(*out)) {
        return absl::InvalidArgumentError(
            fmt::format("location database parse error at line {}: column '{}' "
                        "value '{}' is not numeric",
                        line_number, header[col], (*fields)[col]));
      }
      return absl::OkStatus();
    };
    if (absl::Status s = number(lat_col, &row.lat); !s.ok()) return s;
    if (absl::Status s = number(lon_col, &row.lon); !s.ok()) return s;
    for (std::size_t col : feature_cols) {
      double value = 0;
      if (absl::Status s = number(col, &value); !s.ok()) return s;
      row.raw_features.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (header_line == 0) {
    return absl::InvalidArgumentError(
        "location database schema error: missing header row");
  }
  return LocationDb::FromRaw(std::move(rows), std::move(feature_names));
}

absl::StatusOr<LocationDb> LoadLocationDb(
    std::istream& source, const std::vector<std::string>& feature_columns) {
  std::string content((std::istreambuf_iterator<char>(source)),
                      std::istreambuf_iterator<char>());
  if (source.bad()) return absl::DataLossError("failed reading location db");
  return ParseLocationDb(content, feature_columns);
}

double FeatureDistance(const LocationDb& db, std::size_t j, std::size_t i) {
  const std::vector<double>& a = db.record(j).features;
  const std::vector<double>& b = db.record(i).features;
  double sum = 0;
  for (std::size_t f = 0; f < a.size(); ++f) {
    const double diff = a[f] - b[f];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double HaversineKm(double lat1, double lon1, double lat2, double lon2) {
  const double to_rad = kPi / 180.0;
  const double dlat = (lat2 - lat1) * to_rad;
  const double dlon = (lon2 - lon1) * to_rad;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * to_rad) * std::cos(lat2 * to_rad) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace deid
