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

#include <stdexcept>
#include <vector>

#include "heddle/core/schedule.hpp"
#include "heddle/core/state.hpp"

namespace heddle {

// A waiter that could be woken with no notify.  Offered to strategies only
// when spurious wakeups are enabled, ordered by (monitor, arrival).
struct SpuriousOption {
  ResourceId monitor = kNoResource;
  ThreadId thread = 0;

  friend bool operator==(const SpuriousOption&, const SpuriousOption&) =
      default;
};

// Everything a strategy may look at when making one scheduling decision.
// Thread ids in `enabled` are sorted ascending; `enabled.resource` maps each
// enabled thread to the resource it would acquire next.
struct SchedulingView {
  const EnabledSet& enabled;
  const std::vector<SpuriousOption>& spurious;
  std::uint64_t step_index = 0;
};

// Thrown by a strategy that has no further decisions to offer (an exhausted
// replay schedule); the engine turns it into a BudgetExceeded outcome.
struct ScheduleExhausted {};

// A replayed schedule disagreed with the program: the recorded decision is
// not available at this step.  Signals nondeterminism outside the modeled
// primitives.
class ReplayMismatchError : public std::runtime_error {
 public:
  ReplayMismatchError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// One scheduler plug-in.  The engine invokes it only from the scheduler
// context with every application thread parked, so implementations need no
// synchronization.  Decisions must be pure functions of the seed and the
// observed step sequence.
class Strategy {
 public:
  virtual ~Strategy() = default;

  // Called at the start of every execution (fresh engine instance).
  virtual void begin_run() {}

  // Picks one member of view.enabled (as Choose) or of view.spurious (as
  // SpuriousWake).  Never called with both empty.
  virtual ScheduleStep choose(const SchedulingView& view) = 0;

  // Designates which waiter a notify wakes.  `waiters` is non-empty and in
  // arrival order; the result must be one of its members.
  virtual ThreadId choose_wake(ResourceId monitor,
                               const std::vector<ThreadId>& waiters) = 0;
};

}  // namespace heddle
