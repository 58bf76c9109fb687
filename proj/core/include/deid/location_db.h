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

#ifndef DEID_LOCATION_DB_H_
#define DEID_LOCATION_DB_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace deid {

// A public place with min-max normalized features in [0, 1].
struct LocationRecord {
  std::string name;
  double lat = 0;  // decimal degrees
  double lon = 0;
  std::vector<double> features;
};

// A place before normalization.
struct RawLocation {
  std::string name;
  double lat = 0;
  double lon = 0;
  std::vector<double> raw_features;
};

struct FeatureBounds {
  double min = 0;
  double max = 0;
};

// The substitution universe for LOC entities. Immutable after construction
// and safe to share across threads.
class LocationDb {
 public:
  // Normalizes every feature column to [0, 1] with min-max scaling. A
  // constant column maps to 0 and leaves a warning. Names must be unique
  // ignoring case; every record needs feature_names.size() features.
  static absl::StatusOr<LocationDb> FromRaw(
      std::vector<RawLocation> rows, std::vector<std::string> feature_names);

  std::size_t size() const { return records_.size(); }
  const std::vector<LocationRecord>& records() const { return records_; }
  const LocationRecord& record(std::size_t i) const { return records_[i]; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::vector<FeatureBounds>& bounds() const { return bounds_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Case- and whitespace-insensitive lookup.
  std::optional<std::size_t> FindByName(std::string_view name) const;

  // Un-normalized value of feature f for record i, from the stored bounds.
  double RawFeature(std::size_t i, std::size_t f) const;

 private:
  LocationDb() = default;

  std::vector<LocationRecord> records_;
  std::vector<std::string> feature_names_;
  std::vector<FeatureBounds> bounds_;
  std::vector<std::string> warnings_;
  std::vector<std::string> canonical_names_;  // sorted with indices below
  std::vector<std::size_t> name_index_;
};

// Reads a comma-separated table with a header row containing name, lat, lon
// and the requested feature columns (double quotes may wrap fields). An empty
// feature_columns list selects every column other than name/lat/lon.
absl::StatusOr<LocationDb> LoadLocationDb(
    std::istream& source, const std::vector<std::string>& feature_columns);
absl::StatusOr<LocationDb> ParseLocationDb(
    std::string_view source, const std::vector<std::string>& feature_columns);

// Euclidean distance between normalized feature vectors of records j and i.
// Coordinates play no part here.
double FeatureDistance(const LocationDb& db, std::size_t j, std::size_t i);

// Great-circle distance in kilometres (haversine, mean Earth radius).
double HaversineKm(double lat1, double lon1, double lat2, double lon2);

}  // namespace deid

#endif  // DEID_LOCATION_DB_H_
