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

#include <vector>

#include "heddle/core/event.hpp"
#include "heddle/core/outcome.hpp"
#include "heddle/core/sha256.hpp"

namespace heddle {

struct Trace {
  std::vector<Event> events;
  Outcome outcome;
};

// Canonical byte encoding of a trace, hashed into the replay digest.  All
// integers are little-endian and fixed-width, so the digest is identical on
// every platform.  Layout:
//
//   magic    "HTRACE01"                          8 bytes
//   count    u64  number of events
//   per event, length-prefixed:
//     len    u32  record length in bytes (= 18)
//     kind   u8
//     thread u32
//     res    u32  (0xFFFFFFFF when the event has no resource)
//     flag   u8   (0 or 1)
//     index  u64
//   outcome:
//     kind   u8
//     msg    u32 length + UTF-8 bytes
//     nblk   u32 blocked-thread count, then u32 per thread
//     cycle  u8
//
// The digest of the empty trace (no events, Pass) is a fixed point pinned in
// the unit tests.
std::vector<std::uint8_t> encode_trace(const Trace& trace);

Digest256 trace_digest(const Trace& trace);

}  // namespace heddle
