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

#include "heddle/oracle/drf.hpp"

namespace heddle::oracle {

// Checks that restricting context switches to scheduling gates loses no
// bugs on a race-free program: every assertion violation, deadlock, or panic
// reachable under arbitrary preemption is also reachable in the
// gate-switching space.  Full outcome-set equality is reported as a stronger
// diagnostic.  Racy programs (and budget blowouts) are skipped, not failed,
// since the reduction argument assumes race freedom.
struct TheoremReport {
  enum class Verdict { Holds, Divergent, Skipped };

  Verdict verdict = Verdict::Skipped;
  bool mandatory_ok = false;   // failures(fine-grained) subset of sps outcomes
  bool full_equality = false;  // outcome sets identical
  std::string skip_reason;
  DrfResult drf;
  EnumerationResult fine;
  EnumerationResult sps;
};

TheoremReport check_theorem1(const LitmusProgram& prog,
                             const EnumOptions& opts = {});

}  // namespace heddle::oracle
