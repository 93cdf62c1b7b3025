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

#include <string>
#include <vector>

#include "heddle/core/ids.hpp"

namespace heddle {

// Terminal classification of one execution.
struct Outcome {
  enum class Kind : std::uint8_t {
    Pass,                // all threads terminated, no assertion failed
    AssertionViolation,  // an assert_now() predicate was false
    Deadlock,            // no thread enabled, at least one alive
    Panic,               // protocol misuse or uncaught exception in a body
    BudgetExceeded,      // step budget (or replay schedule) ran out
  };

  Kind kind = Kind::Pass;
  std::string message;  // violation / panic detail, empty otherwise

  // For Deadlock: a wait-for cycle over monitors when one exists
  // (cycle == true), else every blocked thread.
  std::vector<ThreadId> blocked;
  bool cycle = false;

  bool is_failure() const { return kind != Kind::Pass; }

  static Outcome pass() { return Outcome{}; }
  static Outcome violation(std::string msg) {
    return Outcome{Kind::AssertionViolation, std::move(msg), {}, false};
  }
  static Outcome panic(std::string msg) {
    return Outcome{Kind::Panic, std::move(msg), {}, false};
  }
  static Outcome deadlock(std::vector<ThreadId> threads, bool is_cycle) {
    return Outcome{Kind::Deadlock, {}, std::move(threads), is_cycle};
  }
  static Outcome budget_exceeded() {
    return Outcome{Kind::BudgetExceeded, {}, {}, false};
  }
};

const char* to_string(Outcome::Kind kind);
std::string describe(const Outcome& outcome);

}  // namespace heddle
