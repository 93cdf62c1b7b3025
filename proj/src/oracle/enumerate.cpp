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

#include "heddle/oracle/enumerate.hpp"

#include <cassert>
#include <unordered_map>

namespace heddle::oracle {

std::set<TerminalRecord> EnumerationResult::outcomes() const {
  std::set<TerminalRecord> out;
  for (const auto& [rec, n] : count) out.insert(rec);
  return out;
}

std::set<TerminalRecord> EnumerationResult::failures() const {
  std::set<TerminalRecord> out;
  for (const auto& [rec, n] : count) {
    if (rec.kind != Outcome::Kind::Pass) out.insert(rec);
  }
  return out;
}

std::map<Outcome::Kind, std::uint64_t> EnumerationResult::count_by_kind()
    const {
  std::map<Outcome::Kind, std::uint64_t> out;
  for (const auto& [rec, n] : count) out[rec.kind] += n;
  return out;
}

double EnumerationResult::failure_mass() const {
  double total = 0;
  for (const auto& [rec, m] : mass) {
    if (rec.kind != Outcome::Kind::Pass) total += m;
  }
  return total;
}

namespace {

// Per-memoized-state aggregate: schedules and probability mass reaching each
// terminal from here.  Mass is conditional on having reached this state.
struct NodeValue {
  std::map<TerminalRecord, std::pair<std::uint64_t, double>> results;
  bool complete = true;

  void add(const TerminalRecord& rec, std::uint64_t n, double m) {
    auto& slot = results[rec];
    slot.first += n;
    slot.second += m;
  }
  void merge(const NodeValue& child, double weight) {
    for (const auto& [rec, cm] : child.results) {
      add(rec, cm.first, cm.second * weight);
    }
    complete = complete && child.complete;
  }
};

struct SpuriousOption {
  int monitor;
  std::uint16_t waiter;
};

class Enumerator {
 public:
  static constexpr int kMaxDepth = 2000;
  static constexpr int kMaxBurstSteps = 65536;

  Enumerator(const LitmusProgram& prog, const EnumOptions& opts, bool sps)
      : prog_(prog), opts_(opts), sps_(sps) {}

  EnumerationResult run() {
    InterpState init = initial_state(prog_);
    const NodeValue root = explore(init);
    EnumerationResult out;
    for (const auto& [rec, cm] : root.results) {
      out.count[rec] = cm.first;
      out.mass[rec] = cm.second;
      out.schedule_count += cm.first;
    }
    out.states_explored = states_explored_;
    out.complete = root.complete && !budget_hit_;
    return out;
  }

 private:
  static NodeValue leaf(Outcome::Kind kind, const InterpState& s,
                        double weight) {
    NodeValue v;
    v.add(TerminalRecord{kind, s.vars}, 1, weight);
    return v;
  }

  // Join-gate waiters are excluded: a spuriously woken joiner just re-checks
  // and re-parks, so the branch has no user-visible effect and would make
  // the schedule space infinite.  A user-level wait, by contrast, returns
  // once woken, so each wait episode can spuriously wake at most once.
  std::vector<SpuriousOption> spurious_options(const InterpState& s) const {
    std::vector<SpuriousOption> out;
    if (!opts_.spurious) return out;
    for (std::size_t m = 0; m < prog_.monitors.size(); ++m) {
      for (std::uint16_t w : s.waiting[m]) {
        out.push_back(SpuriousOption{int(m), w});
      }
    }
    return out;
  }

  // Runs thread t through non-gate micro-steps until its burst ends, then
  // resumes node exploration.  Wake designations branch in place.  The step
  // cap catches thread-local infinite loops, which never hit a gate and so
  // never consume the explored-state budget.
  NodeValue continue_burst(InterpState s, std::uint32_t t, int depth) {
    int burst_steps = 0;
    while (true) {
      if (++burst_steps > kMaxBurstSteps) {
        budget_hit_ = true;
        NodeValue v;
        v.complete = false;
        return v;
      }
      const ThreadState& ts = s.threads[t];
      if (ts.status == ThreadStatus::Terminated ||
          ts.status == ThreadStatus::WaitParked ||
          ts.status == ThreadStatus::JoinParked) {
        return explore(s, depth + 1);
      }
      if (at_gate(prog_, s, t)) {
        return explore(s, depth + 1);
      }
      const MicroResult r = exec_micro(prog_, s, t, nullptr);
      if (r.kind == MicroResult::Kind::Terminal) {
        return leaf(r.outcome.kind, s, 1.0);
      }
      if (r.kind == MicroResult::Kind::NeedWake) {
        NodeValue v;
        const double w = 1.0 / double(r.waiters.size());
        for (std::uint16_t waiter : r.waiters) {
          InterpState forked = s;
          const MicroResult rr = exec_micro(prog_, forked, t, &waiter);
          assert(rr.kind == MicroResult::Kind::Done);
          (void)rr;
          v.merge(continue_burst(std::move(forked), t, depth), w);
        }
        return v;
      }
    }
  }

  // Fine-grained: one micro-step per decision.
  NodeValue step_once(InterpState s, std::uint32_t t, int depth) {
    const MicroResult r = exec_micro(prog_, s, t, nullptr);
    if (r.kind == MicroResult::Kind::Terminal) {
      return leaf(r.outcome.kind, s, 1.0);
    }
    if (r.kind == MicroResult::Kind::NeedWake) {
      NodeValue v;
      const double w = 1.0 / double(r.waiters.size());
      for (std::uint16_t waiter : r.waiters) {
        InterpState forked = s;
        const MicroResult rr = exec_micro(prog_, forked, t, &waiter);
        assert(rr.kind == MicroResult::Kind::Done);
        (void)rr;
        v.merge(explore(std::move(forked), depth + 1), w);
      }
      return v;
    }
    return explore(std::move(s), depth + 1);
  }

  NodeValue explore(InterpState s, int depth = 0) {
    if (depth > kMaxDepth) {
      budget_hit_ = true;
      NodeValue v;
      v.complete = false;
      return v;
    }
    const std::string key = s.key();
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    if (states_explored_ >= opts_.max_states) {
      budget_hit_ = true;
      NodeValue v;
      v.complete = false;
      return v;
    }
    ++states_explored_;

    NodeValue v;
    if (s.all_terminated()) {
      v = leaf(Outcome::Kind::Pass, s, 1.0);
      memo_.emplace(key, v);
      return v;
    }

    std::vector<std::uint32_t> steppable;
    for (std::uint32_t t = 0; t < s.threads.size(); ++t) {
      if (can_step(prog_, s, t)) steppable.push_back(t);
    }
    const std::vector<SpuriousOption> spurious = spurious_options(s);

    const std::size_t n = steppable.size() + spurious.size();
    if (n == 0) {
      v = leaf(Outcome::Kind::Deadlock, s, 1.0);
      memo_.emplace(key, v);
      return v;
    }

    const double w = 1.0 / double(n);
    for (std::uint32_t t : steppable) {
      if (sps_) {
        assert(at_gate(prog_, s, t));
        InterpState forked = s;
        const MicroResult r = exec_micro(prog_, forked, t, nullptr);
        // Gate micro-steps are never notifies.
        assert(r.kind != MicroResult::Kind::NeedWake);
        if (r.kind == MicroResult::Kind::Terminal) {
          v.add(TerminalRecord{r.outcome.kind, forked.vars}, 1, w);
        } else {
          v.merge(continue_burst(std::move(forked), t, depth), w);
        }
      } else {
        v.merge(step_once(s, t, depth), w);
      }
    }
    for (const SpuriousOption& opt : spurious) {
      InterpState forked = s;
      const bool ok = spurious_wake(forked, opt.monitor, opt.waiter);
      assert(ok);
      (void)ok;
      v.merge(explore(std::move(forked), depth + 1), w);
    }
    memo_.emplace(key, v);
    return v;
  }

  const LitmusProgram& prog_;
  const EnumOptions opts_;
  const bool sps_;
  std::unordered_map<std::string, NodeValue> memo_;
  std::uint64_t states_explored_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

EnumerationResult enumerate_fine_grained(const LitmusProgram& prog,
                                         const EnumOptions& opts) {
  return Enumerator(prog, opts, /*sps=*/false).run();
}

EnumerationResult enumerate_sps(const LitmusProgram& prog,
                                const EnumOptions& opts) {
  return Enumerator(prog, opts, /*sps=*/true).run();
}

}  // namespace heddle::oracle
