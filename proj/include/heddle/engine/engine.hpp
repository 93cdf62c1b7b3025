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

#include "heddle/core/outcome.hpp"
#include "heddle/core/schedule.hpp"
#include "heddle/core/trace.hpp"
#include "heddle/engine/runtime.hpp"
#include "heddle/engine/strategy.hpp"

namespace heddle {

// One controlled execution of a program.
//
// Application threads are real preemptive threads, but every modeled
// primitive first parks the caller and hands control to the scheduler, which
// holds an auxiliary (shadow) lock per resource on their behalf.  Releasing
// exactly one thread per decision serializes the program: at most one
// application thread runs between decisions, and it runs precisely from one
// gate to the next.  The decision sequence is recorded as a schedule; the
// same schedule replays the identical execution.

struct EngineOptions {
  std::uint64_t max_steps = 10000;  // scheduling decisions before giving up
  bool spurious = false;            // offer spurious wakeups to the strategy
};

struct EngineResult {
  Outcome outcome;
  Trace trace;
  Schedule schedule;       // steps only; header fields are the caller's
  std::uint64_t steps = 0;  // scheduling decisions consumed
};

// Runs `program` to a terminal outcome under `strategy`.  Never hangs: the
// step budget bounds every execution.  Throws ReplayMismatchError (after
// cleanly tearing down the run) when a replayed schedule diverges.
EngineResult run_program(const Program& program, Strategy& strategy,
                         const EngineOptions& opts = {});

}  // namespace heddle
