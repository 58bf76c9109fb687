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

#ifndef DEID_MEMO_H_
#define DEID_MEMO_H_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "deid/annotation.h"
#include "deid/locale.h"
#include "deid/temporal.h"
#include "deid/text_util.h"

namespace deid {

// (label, canonical key). The label is part of the key, so "paris" as LOC
// and as PER are distinct entries.
struct MemoKey {
  EntityLabel label = EntityLabel::kPer;
  std::string key;

  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

// Temporal keys identify the value, not the spelling: "granularity:magnitude",
// e.g. "year:40". Two renderings of one date share a key; a date and an age
// never do because the labels differ.
MemoKey TemporalMemoKey(EntityLabel label, const TemporalEntity& entity);

// Key for any span. DATE/AGE spans are parsed (errors propagate); every other
// label uses the canonicalized surface.
absl::StatusOr<MemoKey> MemoKeyForSpan(const EntitySpan& span,
                                       const LocaleConfig& locale);

// Per-document map from MemoKey to a surrogate value. Once a key is bound it
// never changes through GetOrInsert.
template <typename Value>
class MemoTable {
 public:
  // Returns the bound value, or calls produce() once and binds its result.
  // produce may return Value or absl::StatusOr<Value>; a failed produce binds
  // nothing. The key is canonicalized first; empty keys are rejected.
  template <typename Produce>
  absl::StatusOr<Value> GetOrInsert(EntityLabel label, std::string_view key,
                                    Produce&& produce) {
    MemoKey memo_key{label, CanonicalKey(key)};
    if (memo_key.key.empty()) {
      return absl::InvalidArgumentError("memoization key must be non-empty");
    }
    if (auto it = entries_.find(memo_key); it != entries_.end()) {
      return it->second;
    }
    using Result = std::invoke_result_t<Produce>;
    if constexpr (std::is_same_v<Result, absl::StatusOr<Value>>) {
      absl::StatusOr<Value> produced = std::forward<Produce>(produce)();
      if (!produced.ok()) return produced.status();
      return entries_.emplace(std::move(memo_key), *std::move(produced))
          .first->second;
    } else {
      return entries_
          .emplace(std::move(memo_key), std::forward<Produce>(produce)())
          .first->second;
    }
  }

  const Value* Find(EntityLabel label, std::string_view key) const {
    auto it = entries_.find(MemoKey{label, CanonicalKey(key)});
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Post-processing hook (order restoration, caps). Not for first binding.
  Value* FindMutable(EntityLabel label, std::string_view key) {
    auto it = entries_.find(MemoKey{label, CanonicalKey(key)});
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  const std::map<MemoKey, Value>& entries() const { return entries_; }

 private:
  std::map<MemoKey, Value> entries_;
};

}  // namespace deid

#endif  // DEID_MEMO_H_
