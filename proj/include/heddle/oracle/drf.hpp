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

#include <optional>
#include <string>

#include "heddle/oracle/enumerate.hpp"

namespace heddle::oracle {

struct RaceWitness {
  std::string var;
  std::uint32_t thread_a = 0;
  std::uint32_t thread_b = 0;
  int line_a = 0;  // source lines of the two accesses
  int line_b = 0;
  bool write_a = false;
  bool write_b = false;

  std::string describe() const;
};

struct DrfResult {
  enum class Verdict { RaceFree, Racy, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<RaceWitness> witness;
  std::uint64_t states_explored = 0;
};

// Decides whether any fine-grained interleaving contains two conflicting
// plain-variable accesses unordered by happens-before (program order plus
// monitor, volatile, atomic, semaphore, latch, park, spawn, join and
// wait/notify edges).
//
// Mechanism: a race in this sense exists exactly when some reachable
// fine-grained state has two different threads each about to perform a plain
// access to the same variable, at least one a write.  (Any unordered
// conflicting pair in a trace can be brought adjacent by swapping the
// independent transitions between them, and two adjacent conflicting
// accesses were co-enabled in the state before the first.)  The checker
// walks the reachable state graph once and looks for such co-enabled pairs,
// which keeps it sound and complete without per-trace clock bookkeeping; the
// unit tests cross-check the verdict against an independent vector-clock
// analysis over sampled traces.
DrfResult check_drf(const LitmusProgram& prog, const EnumOptions& opts = {});

}  // namespace heddle::oracle
