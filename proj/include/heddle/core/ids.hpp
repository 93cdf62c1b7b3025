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

namespace heddle {

// Threads are numbered in creation order; the main thread is always 0.
using ThreadId = std::uint32_t;

// Resources (monitors, atomics, gates, ...) are numbered in first-touch
// order within one execution.
using ResourceId = std::uint32_t;

inline constexpr ResourceId kNoResource = 0xFFFFFFFFu;

enum class ResourceKind : std::uint8_t {
  Run,        // per-thread start/yield gate
  Monitor,    // reentrant monitor with wait/notify
  Atomic,     // atomic integer cell
  Volatile,   // volatile integer cell
  Semaphore,  // counting semaphore
  Latch,      // countdown latch
  Park,       // per-thread park permit
};

const char* to_string(ResourceKind kind);

}  // namespace heddle
