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

#ifndef DEID_PATTERN_RECOGNIZER_H_
#define DEID_PATTERN_RECOGNIZER_H_

#include <string_view>
#include <vector>

#include "deid/annotation.h"
#include "deid/locale.h"

namespace deid {

// Regular-expression front end for DATE, AGE and TEL. It is a convenience for
// producing annotations without an NER model, not a substitute for one:
// names, places and identifiers are never detected.
//
// Returned spans are sorted and non-overlapping; on overlap the earliest,
// then longest, candidate wins. DATE/AGE candidates are kept only if
// ParseTemporal accepts them (future dates included). Malformed UTF-8 yields
// no spans.
std::vector<EntitySpan> PatternRecognize(std::string_view text,
                                         const LocaleConfig& locale);

}  // namespace deid

#endif  // DEID_PATTERN_RECOGNIZER_H_
