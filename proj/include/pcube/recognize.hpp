// Copyright 2026 The pcube Authors
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
#include <stdexcept>

#include "pcube/graph.hpp"
#include "pcube/labeler.hpp"
#include "pcube/result.hpp"
#include "pcube/verifier.hpp"

namespace pcube {

struct Recognition {
  bool partial_cube = false;
  std::optional<Refusal> refusal;  // set when partial_cube is false
  SemicubeLabeling labeling;
  EdgeClassPartition partition;
  Phase1Stats phase1;
  Phase2Stats phase2;
  bool reached_phase2 = false;
};

// Label (Phase I), then verify the labeling (Phase II). O(n^2) overall.
inline Recognition recognize(const Graph& g, const VerifyOptions& options = {}) {
  if (g.n() == 0) throw std::invalid_argument("recognize: graph has no vertices");
  Recognition out;
  Result<LabelingOutput> labeled = label_all(g, &out.phase1);
  if (!labeled) {
    out.refusal = labeled.refusal();
    return out;
  }
  out.labeling = std::move(labeled.value().labeling);
  out.partition = std::move(labeled.value().partition);
  out.reached_phase2 = true;
  Result<Phase2Stats> verified = verify(g, out.labeling, out.partition, options);
  if (!verified) {
    out.refusal = verified.refusal();
    return out;
  }
  out.phase2 = std::move(verified.value());
  out.partial_cube = true;
  return out;
}

}  // namespace pcube
