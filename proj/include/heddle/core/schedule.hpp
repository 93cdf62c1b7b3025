// Copyright 2026 The Heddle Authors
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
#include <string>
#include <vector>

#include "heddle/core/ids.hpp"

namespace heddle {

// A recorded scheduler decision.  A schedule is the complete decision
// transcript of one execution; feeding it back through the replay strategy
// reproduces the execution bit for bit.
struct ScheduleStep {
  enum class Kind : std::uint8_t {
    Choose,        // release thread's next gate
    SpuriousWake,  // move thread out of resource's waiting set, no notify
    WakeChoice,    // which waiter a notify() removed
  };

  Kind kind = Kind::Choose;
  ThreadId thread = 0;
  ResourceId resource = kNoResource;  // SpuriousWake only

  static ScheduleStep choose(ThreadId t) {
    return {Kind::Choose, t, kNoResource};
  }
  static ScheduleStep spurious(ThreadId t, ResourceId r) {
    return {Kind::SpuriousWake, t, r};
  }
  static ScheduleStep wake(ThreadId t) {
    return {Kind::WakeChoice, t, kNoResource};
  }

  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

inline constexpr int kScheduleVersion = 1;

struct Schedule {
  int version = kScheduleVersion;
  std::uint64_t seed = 0;
  std::string strategy;
  std::vector<ScheduleStep> steps;
};

}  // namespace heddle
