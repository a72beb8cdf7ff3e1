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

#include "pcube/bitvec.hpp"
#include "pcube/disjoint_sets.hpp"
#include "pcube/generators.hpp"
#include "pcube/graph.hpp"
#include "pcube/io.hpp"
#include "pcube/labeler.hpp"
#include "pcube/oracle.hpp"
#include "pcube/recognize.hpp"
#include "pcube/result.hpp"
#include "pcube/verifier.hpp"
