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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace pcube {

// Why a graph (or a labeled graph) was found not to be a partial cube.
// Refusals are ordinary values; malformed input is reported by exceptions.
enum class RefusalKind {
  kDisconnected,
  kOddCycle,
  kEdgeBound,
  kBudgetExceeded,
  kMultiBitEdge,
  kUnlabeledSelfLoop,
  kCutViolation,
  kEmptySide,
  kDuplicateAction,
  kNoActingToken,
  kSearchExhausted,
};

inline const char* to_string(RefusalKind kind) {
  switch (kind) {
    case RefusalKind::kDisconnected: return "disconnected";
    case RefusalKind::kOddCycle: return "odd cycle";
    case RefusalKind::kEdgeBound: return "edge bound";
    case RefusalKind::kBudgetExceeded: return "class budget exceeded";
    case RefusalKind::kMultiBitEdge: return "multi-bit edge";
    case RefusalKind::kUnlabeledSelfLoop: return "unlabeled self-loop";
    case RefusalKind::kCutViolation: return "cut violation";
    case RefusalKind::kEmptySide: return "empty cut side";
    case RefusalKind::kDuplicateAction: return "duplicate action";
    case RefusalKind::kNoActingToken: return "no acting token";
    case RefusalKind::kSearchExhausted: return "token search exhausted";
  }
  return "unknown";
}

struct Refusal {
  RefusalKind kind;
  // Kind-specific subjects, e.g. the endpoints of a multi-bit edge or the
  // vertex/coordinate of a duplicate action. Unused slots stay zero.
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  std::string detail;

  std::string describe() const {
    std::string out = to_string(kind);
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    return out;
  }
};

// Either a value or a Refusal. Accessing the wrong alternative throws
// std::logic_error.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Refusal refusal) : state_(std::move(refusal)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result holds a refusal: " + refusal().describe());
    return std::get<T>(state_);
  }
  T& value() & {
    if (!ok()) throw std::logic_error("Result holds a refusal: " + refusal().describe());
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result holds a refusal: " + refusal().describe());
    return std::get<T>(std::move(state_));
  }
  const Refusal& refusal() const {
    if (ok()) throw std::logic_error("Result holds a value");
    return std::get<Refusal>(state_);
  }

  const T* operator->() const { return &value(); }
  T* operator->() { return &value(); }
  const T& operator*() const& { return value(); }
  T& operator*() & { return value(); }

 private:
  std::variant<T, Refusal> state_;
};

// Pass/refuse outcome with no payload.
struct Pass {};
using Check = Result<Pass>;

}  // namespace pcube
