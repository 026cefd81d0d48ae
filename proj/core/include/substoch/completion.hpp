// Copyright 2026 The substoch authors
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

#include <optional>

#include "substoch/matrix.hpp"

namespace substoch {

/// Doubly stochastic completion of order n+k with `a` as the leading
/// principal block, or nullopt when none exists. Feasibility is decided
/// by an exact rational max-flow over the free blocks, so the result is
/// an oracle for the minimality of sub_defect that never consults the
/// ceiling formula. Requires 0 <= k <= n.
std::optional<SubstochMatrix> sub_defect_witness(const SubstochMatrix& a, int k);

}  // namespace substoch
