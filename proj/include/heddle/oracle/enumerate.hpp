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

#include <map>
#include <set>

#include "heddle/oracle/interp.hpp"

namespace heddle::oracle {

// One terminal of an execution: how it ended plus the final shared store
// (variable values in declaration order).  Outcome sets are sets of these.
struct TerminalRecord {
  Outcome::Kind kind = Outcome::Kind::Pass;
  std::vector<std::int64_t> store;

  auto operator<=>(const TerminalRecord&) const = default;
};

struct EnumOptions {
  bool spurious = false;          // branch on spurious wakeups
  std::uint64_t max_states = 4'000'000;
};

struct EnumerationResult {
  // Distinct complete decision sequences reaching each terminal, and the
  // probability of reaching it under uniform random play (one uniform choice
  // per scheduling decision, then per wake designation).
  std::map<TerminalRecord, std::uint64_t> count;
  std::map<TerminalRecord, double> mass;
  std::uint64_t schedule_count = 0;
  std::uint64_t states_explored = 0;
  bool complete = true;

  std::set<TerminalRecord> outcomes() const;
  std::set<TerminalRecord> failures() const;  // everything except Pass
  std::map<Outcome::Kind, std::uint64_t> count_by_kind() const;
  double failure_mass() const;
};

// All interleavings: any runnable thread may be chosen at every micro-step.
EnumerationResult enumerate_fine_grained(const LitmusProgram& prog,
                                         const EnumOptions& opts = {});

// Scheduler-equivalent interleavings: decisions only at gates, with the
// chosen thread then running through thread-local instructions and releases.
// This is the space the engine's exhaustive strategy walks; schedule counts
// are comparable one-to-one.
EnumerationResult enumerate_sps(const LitmusProgram& prog,
                                const EnumOptions& opts = {});

}  // namespace heddle::oracle
