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

#include "heddle/core/ids.hpp"

namespace heddle {

// One observable step of one thread.  The numeric values are part of the
// canonical trace encoding and must never be reordered or reused.
enum class EventKind : std::uint8_t {
  ThreadStart = 0,
  ThreadExit = 1,
  ShadowAcquire = 2,
  ShadowRelease = 3,
  MonitorEnter = 4,
  MonitorExit = 5,
  WaitEnter = 6,    // full monitor release + entry into the waiting set
  WaitResume = 7,   // reacquisition at the saved hold count
  Notify = 8,
  NotifyAll = 9,
  AtomicOp = 10,
  VolatileRead = 11,
  VolatileWrite = 12,
  SemAcquire = 13,
  SemRelease = 14,
  LatchCountDown = 15,
  LatchAwait = 16,
  Park = 17,
  Unpark = 18,
  SleepPoint = 19,
  YieldPoint = 20,
  AssertCheck = 21,  // flag carries the predicate value
};

struct Event {
  ThreadId thread = 0;
  EventKind kind = EventKind::ThreadStart;
  ResourceId resource = kNoResource;
  bool flag = false;
  std::uint64_t index = 0;  // position in the trace, strictly increasing

  friend bool operator==(const Event&, const Event&) = default;
};

const char* to_string(EventKind kind);

}  // namespace heddle
