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

#include "heddle/oracle/drf.hpp"

#include <cassert>
#include <unordered_set>

namespace heddle::oracle {

std::string RaceWitness::describe() const {
  auto access = [](bool write, std::uint32_t t, int line) {
    return std::string(write ? "write" : "read") + " by thread " +
           std::to_string(t) + " (line " + std::to_string(line) + ")";
  };
  return "data race on '" + var + "': " + access(write_a, thread_a, line_a) +
         " vs " + access(write_b, thread_b, line_b);
}

namespace {

class DrfChecker {
 public:
  DrfChecker(const LitmusProgram& prog, const EnumOptions& opts)
      : prog_(prog), opts_(opts) {}

  DrfResult run() {
    visit(initial_state(prog_), 0);
    DrfResult out;
    out.states_explored = states_;
    out.witness = witness_;
    if (witness_.has_value()) {
      out.verdict = DrfResult::Verdict::Racy;
    } else if (budget_hit_) {
      out.verdict = DrfResult::Verdict::Unknown;
    } else {
      out.verdict = DrfResult::Verdict::RaceFree;
    }
    return out;
  }

 private:
  static constexpr int kMaxDepth = 2000;

  // A thread's pending plain access, if that is what it would execute next.
  struct PendingPlain {
    std::uint32_t thread;
    int var;
    bool write;
    int line;
  };

  void check_state(const InterpState& s) {
    std::vector<PendingPlain> pending;
    for (std::uint32_t t = 0; t < s.threads.size(); ++t) {
      const ThreadState& ts = s.threads[t];
      if (ts.status != ThreadStatus::AtInstr) continue;
      const Instr& ins = prog_.bodies[ts.body].code[ts.pc];
      const bool is_write = ins.op == OpCode::Write;
      if ((ins.op == OpCode::Read || is_write) &&
          prog_.vars[ins.obj].kind == VarKind::Plain) {
        pending.push_back(PendingPlain{t, ins.obj, is_write, ins.line});
      }
    }
    for (std::size_t i = 0; i < pending.size() && !witness_; ++i) {
      for (std::size_t j = i + 1; j < pending.size(); ++j) {
        const PendingPlain& a = pending[i];
        const PendingPlain& b = pending[j];
        if (a.var == b.var && (a.write || b.write)) {
          witness_ = RaceWitness{prog_.vars[a.var].name, a.thread, b.thread,
                                 a.line,  b.line,        a.write,  b.write};
          return;
        }
      }
    }
  }

  void visit(const InterpState& s, int depth) {
    if (witness_.has_value() || budget_hit_) return;
    if (depth > kMaxDepth || states_ >= opts_.max_states) {
      budget_hit_ = true;
      return;
    }
    if (!seen_.insert(s.key()).second) return;
    ++states_;

    check_state(s);
    if (witness_.has_value()) return;

    for (std::uint32_t t = 0; t < s.threads.size(); ++t) {
      if (!can_step(prog_, s, t)) continue;
      InterpState forked = s;
      const MicroResult r = exec_micro(prog_, forked, t, nullptr);
      if (r.kind == MicroResult::Kind::Terminal) continue;
      if (r.kind == MicroResult::Kind::NeedWake) {
        for (std::uint16_t w : r.waiters) {
          InterpState forked2 = s;
          const MicroResult rr = exec_micro(prog_, forked2, t, &w);
          assert(rr.kind == MicroResult::Kind::Done);
          (void)rr;
          visit(forked2, depth + 1);
        }
      } else {
        visit(forked, depth + 1);
      }
    }
    if (opts_.spurious) {
      // User monitors only; join-gate wakes are runtime-internal stutters.
      for (std::size_t m = 0; m < prog_.monitors.size(); ++m) {
        for (std::uint16_t w : s.waiting[m]) {
          InterpState forked = s;
          spurious_wake(forked, int(m), w);
          visit(forked, depth + 1);
        }
      }
    }
  }

  const LitmusProgram& prog_;
  const EnumOptions opts_;
  std::unordered_set<std::string> seen_;
  std::optional<RaceWitness> witness_;
  std::uint64_t states_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

DrfResult check_drf(const LitmusProgram& prog, const EnumOptions& opts) {
  return DrfChecker(prog, opts).run();
}

}  // namespace heddle::oracle
