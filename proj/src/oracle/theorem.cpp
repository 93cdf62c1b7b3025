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

#include "heddle/oracle/theorem.hpp"

#include <algorithm>

namespace heddle::oracle {

TheoremReport check_theorem1(const LitmusProgram& prog,
                             const EnumOptions& opts) {
  TheoremReport rep;
  rep.drf = check_drf(prog, opts);
  if (rep.drf.verdict == DrfResult::Verdict::Racy) {
    rep.verdict = TheoremReport::Verdict::Skipped;
    rep.skip_reason = "program has a data race";
    if (rep.drf.witness.has_value()) {
      rep.skip_reason += ": " + rep.drf.witness->describe();
    }
    return rep;
  }
  if (rep.drf.verdict == DrfResult::Verdict::Unknown) {
    rep.verdict = TheoremReport::Verdict::Skipped;
    rep.skip_reason = "race check exceeded the state budget";
    return rep;
  }

  rep.fine = enumerate_fine_grained(prog, opts);
  if (!rep.fine.complete) {
    rep.verdict = TheoremReport::Verdict::Skipped;
    rep.skip_reason = "fine-grained enumeration exceeded the state budget";
    return rep;
  }
  rep.sps = enumerate_sps(prog, opts);
  if (!rep.sps.complete) {
    rep.verdict = TheoremReport::Verdict::Skipped;
    rep.skip_reason = "gate-switching enumeration exceeded the state budget";
    return rep;
  }

  auto fine_outcomes = rep.fine.outcomes();
  auto sps_outcomes = rep.sps.outcomes();
  auto fine_failures = rep.fine.failures();

  rep.mandatory_ok = std::all_of(
      fine_failures.begin(), fine_failures.end(), [&](const TerminalRecord& r) {
        return std::find(sps_outcomes.begin(), sps_outcomes.end(), r) !=
               sps_outcomes.end();
      });
  rep.full_equality = fine_outcomes == sps_outcomes;
  rep.verdict = rep.mandatory_ok ? TheoremReport::Verdict::Holds
                                 : TheoremReport::Verdict::Divergent;
  return rep;
}

}  // namespace heddle::oracle
