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

#include "deid/budget.h"

#include <vector>

#include "deid/text_util.h"

namespace deid {

std::optional<Epsilon> BudgetLedger::ShareFor(const MemoKey& key) const {
  auto it = shares_.find(key);
  if (it == shares_.end()) return std::nullopt;
  return it->second;
}

double BudgetLedger::SumOfShares() const {
  double sum = 0;
  for (const auto& [key, share] : shares_) sum += share.value();
  return sum;
}

void BudgetLedger::MarkConsumed(const MemoKey& key) {
  if (shares_.contains(key)) consumed_.insert(key);
}

double BudgetLedger::ConsumedTotal() const {
  double sum = 0;
  for (const MemoKey& key : consumed_) sum += shares_.at(key).value();
  return sum;
}

BudgetLedger AllocateBudget(std::span<const MemoKey> keys, Epsilon total) {
  std::set<MemoKey> distinct;
  for (const MemoKey& key : keys) {
    if (IsDpLabel(key.label)) distinct.insert(key);
  }
  std::map<MemoKey, Epsilon> shares;
  if (!distinct.empty()) {
    const Epsilon share =
        *Epsilon::Create(total.value() / static_cast<double>(distinct.size()));
    for (const MemoKey& key : distinct) shares.emplace(key, share);
  }
  return BudgetLedger(total, std::move(shares));
}

BudgetLedger AllocateBudget(const AnnotatedDocument& doc, Epsilon total,
                            const LocaleConfig& locale) {
  std::vector<MemoKey> keys;
  for (const EntitySpan& span : doc.spans()) {
    absl::StatusOr<MemoKey> key = MemoKeyForSpan(span, locale);
    keys.push_back(key.ok() ? *std::move(key)
                            : MemoKey{span.label, CanonicalKey(span.surface)});
  }
  return AllocateBudget(keys, total);
}

}  // namespace deid
