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

#ifndef DEID_BUDGET_H_
#define DEID_BUDGET_H_

#include <map>
#include <optional>
#include <set>
#include <span>

#include "absl/status/statusor.h"
#include "deid/annotation.h"
#include "deid/epsilon.h"
#include "deid/locale.h"
#include "deid/memo.h"

namespace deid {

enum class BudgetPolicy { kUniform };

// Splits a document's total epsilon across its distinct DP memoization keys.
// Repeated occurrences of one key share a single allocation because they
// receive one memoized surrogate.
class BudgetLedger {
 public:
  BudgetLedger(Epsilon total, std::map<MemoKey, Epsilon> shares)
      : total_(total), shares_(std::move(shares)) {}

  Epsilon total() const { return total_; }
  BudgetPolicy policy() const { return BudgetPolicy::kUniform; }
  const std::map<MemoKey, Epsilon>& shares() const { return shares_; }

  // nullopt for keys that carry no share (non-DP labels, unknown keys).
  std::optional<Epsilon> ShareFor(const MemoKey& key) const;

  double SumOfShares() const;

  // Records that a share has been spent on a draw. Idempotent per key.
  void MarkConsumed(const MemoKey& key);
  double ConsumedTotal() const;
  std::size_t consumed_count() const { return consumed_.size(); }

 private:
  Epsilon total_;
  std::map<MemoKey, Epsilon> shares_;
  std::set<MemoKey> consumed_;
};

// Uniform split over the distinct DATE/AGE/LOC keys among keys. Other labels
// get nothing. No DP keys yields an empty ledger.
BudgetLedger AllocateBudget(std::span<const MemoKey> keys, Epsilon total);

// Same, deriving keys from the document's spans. DATE/AGE surfaces that do
// not parse fall back to their canonical surface as key.
BudgetLedger AllocateBudget(const AnnotatedDocument& doc, Epsilon total,
                            const LocaleConfig& locale);

}  // namespace deid

#endif  // DEID_BUDGET_H_
