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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heddle/core/outcome.hpp"
#include "heddle/oracle/litmus.hpp"

namespace heddle::oracle {

// Interpreter for litmus programs, written as a pure transition function over
// value-semantic states so enumerators can fork and memoize executions.
//
// The transition granularity mirrors the engine exactly, which is what makes
// outcome and schedule-count cross-checks between the two meaningful:
//
//  * one micro-step executes one instruction (plus any attached effects such
//    as thread-exit wakeups);
//  * wait splits into two micro-steps: release-and-park, then
//    reacquire-on-resume;
//  * join behaves like monitor-enter on the target's join gate followed by a
//    wait loop on "target terminated", matching how the engine models
//    Thread.join on top of wait/notify;
//  * a terminating thread implicitly moves every join-gate waiter to
//    pendingWake (the notifyAll the runtime performs on exit).
//
// A micro-step is a *gate* when the engine would consult the scheduler before
// it: thread start, monitor enter, volatile/atomic access, semaphore acquire,
// latch await, park, join's gate acquisition, and wait/join resumption.
// Releases (monitor exit, notify, semaphore release, countdown, unpark) and
// thread-local instructions are not gates; a running thread flows through
// them without a scheduling decision.

enum class ThreadStatus : std::uint8_t {
  NotStarted,
  AtInstr,
  WaitParked,
  JoinParked,
  Terminated,
};

struct ThreadState {
  std::uint16_t body = 0;
  ThreadStatus status = ThreadStatus::NotStarted;
  std::uint16_t pc = 0;
  std::uint32_t saved_hold = 0;  // monitor depth to restore after wait
  std::uint16_t join_gate = 0;   // this thread's join-gate monitor index
  std::array<std::int64_t, kNumRegs> regs{};
};

struct MonitorState {
  std::int16_t owner = -1;  // thread id, -1 when free
  std::uint16_t hold = 0;
};

struct InterpState {
  std::vector<ThreadState> threads;
  std::vector<std::int64_t> vars;
  std::vector<MonitorState> monitors;  // program monitors, then join gates
  std::vector<std::vector<std::uint16_t>> waiting;  // per monitor, arrival order
  std::vector<std::uint8_t> pending_wake;           // per thread
  std::vector<std::int64_t> sems;
  std::vector<std::int64_t> latches;
  std::vector<std::uint8_t> park_permit;  // per thread

  bool all_terminated() const;
  // Canonical byte encoding for memoization.
  std::string key() const;
};

InterpState initial_state(const LitmusProgram& prog);

// True when thread t has a runnable micro-step in s (its gate, if any, is
// grantable).
bool can_step(const LitmusProgram& prog, const InterpState& s, std::uint32_t t);

// True when thread t's next micro-step is a scheduling decision point.
bool at_gate(const LitmusProgram& prog, const InterpState& s, std::uint32_t t);

struct MicroResult {
  enum class Kind : std::uint8_t {
    Done,      // state advanced
    NeedWake,  // notify with waiters: caller must pick one and re-invoke
    Terminal,  // execution over (assert failure or protocol panic)
  };
  Kind kind = Kind::Done;
  int monitor = -1;                     // NeedWake
  std::vector<std::uint16_t> waiters;   // NeedWake, arrival order
  Outcome outcome;                      // Terminal
};

// Executes thread t's next micro-step.  For a notify with a non-empty waiting
// set the caller supplies the designated waiter in `wake_choice`; when it is
// null the call returns NeedWake without touching the state.
MicroResult exec_micro(const LitmusProgram& prog, InterpState& s,
                       std::uint32_t t, const std::uint16_t* wake_choice);

// Moves waiter t out of monitor m's waiting set with no notify (spurious
// wakeup).  Returns false when t is not waiting on m.
bool spurious_wake(InterpState& s, int monitor, std::uint32_t t);

}  // namespace heddle::oracle
