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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "heddle/core/rng.hpp"
#include "heddle/oracle/drf.hpp"
#include "heddle/oracle/enumerate.hpp"
#include "heddle/oracle/interp.hpp"
#include "heddle/oracle/litmus.hpp"
#include "heddle/oracle/theorem.hpp"

using namespace heddle;
using namespace heddle::oracle;

namespace {

LitmusProgram load_corpus(const std::string& name) {
  return load_litmus_file(std::string(HEDDLE_CORPUS_DIR) + "/" + name +
                          ".lit");
}

std::set<Outcome::Kind> kinds_of(const EnumerationResult& r) {
  std::set<Outcome::Kind> out;
  for (const auto& [k, n] : r.count_by_kind()) out.insert(k);
  return out;
}

double total_mass(const EnumerationResult& r) {
  double m = 0;
  for (const auto& [rec, v] : r.mass) m += v;
  return m;
}

const std::vector<std::string> kRaceFreeCorpus = {
    "fig2",         "lock_order",  "lost_notify", "atomicity_cta",
    "delayed_wake", "producer_consumer", "sem_starvation", "latch_order",
    "park_handoff", "spurious_guard", "two_volatiles", "thread_local",
};

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("eval_cmp covers all comparators") {
  CHECK(eval_cmp(1, Cmp::Eq, 1));
  CHECK_FALSE(eval_cmp(1, Cmp::Eq, 2));
  CHECK(eval_cmp(1, Cmp::Ne, 2));
  CHECK(eval_cmp(1, Cmp::Lt, 2));
  CHECK_FALSE(eval_cmp(2, Cmp::Lt, 2));
  CHECK(eval_cmp(2, Cmp::Le, 2));
  CHECK(eval_cmp(3, Cmp::Gt, 2));
  CHECK(eval_cmp(2, Cmp::Ge, 2));
  CHECK_FALSE(eval_cmp(1, Cmp::Ge, 2));
}

TEST_CASE("parser reads the two-worker rendezvous program") {
  const LitmusProgram p = load_corpus("fig2");
  CHECK(p.name == "fig2");
  REQUIRE(p.vars.size() == 2);
  CHECK(p.vars[0].name == "a");
  CHECK(p.vars[0].kind == VarKind::Atomic);
  CHECK(p.vars[1].name == "b");
  CHECK(p.vars[1].kind == VarKind::Volatile);
  REQUIRE(p.monitors.size() == 1);
  CHECK(p.monitors[0] == "o");
  REQUIRE(p.bodies.size() == 2);
  CHECK(p.bodies[0].name == "main");
  CHECK(p.bodies[0].auto_start);
  CHECK(p.bodies[0].code.size() == 6);
  CHECK(p.bodies[1].name == "worker");
  CHECK_FALSE(p.bodies[1].auto_start);
  REQUIRE(p.bodies[1].code.size() == 8);

  const auto& w = p.bodies[1].code;
  CHECK(w[0].op == OpCode::Rmw);
  CHECK(w[1].op == OpCode::MonitorEnter);
  CHECK(w[2].op == OpCode::Branch);
  CHECK(w[2].target == 5);  // notify
  CHECK(w[3].op == OpCode::Wait);
  CHECK(w[4].op == OpCode::Jmp);
  CHECK(w[4].target == 6);  // exit
  CHECK(w[5].op == OpCode::Notify);
  CHECK(w[6].op == OpCode::MonitorExit);
  CHECK(w[7].op == OpCode::Write);
  CHECK(w[7].imm_is_reg);

  const auto& m = p.bodies[0].code;
  CHECK(m[0].op == OpCode::Spawn);
  CHECK(m[0].obj == 1);
  CHECK(m[5].op == OpCode::Assert);
  CHECK(m[5].text == "flag lost");
}

TEST_CASE("parser rejects malformed programs") {
  auto line_of = [](const std::string& text) {
    try {
      parse_litmus(text);
    } catch (const LitmusParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("body main\n  frob x\n") == 2);
  CHECK(line_of("body main\n  read x r0\n") == 2);   // undeclared var
  CHECK(line_of("body main\n  jmp nowhere\n") == 2); // undefined label
  CHECK(line_of("var x plain 0\nbody main\n  rmw x 1 r0\n") == 3);
  CHECK(line_of("body main\n  read\n") == 2);        // missing operands
  CHECK(line_of("body main\n  write x 1\n") == 2);   // undeclared var
  CHECK(line_of("body main\n  spawn main r0\n") == 2);
  CHECK_THROWS_AS(parse_litmus("body other\n  park\n"), LitmusParseError);
  CHECK_THROWS_AS(parse_litmus("body main\nlabel a\nlabel a\n"),
                  LitmusParseError);
  CHECK_THROWS_AS(parse_litmus("body main\n  read q r99\nvar q plain 0\n"),
                  LitmusParseError);
}

TEST_CASE("interpreter runs an empty main to completion") {
  const LitmusProgram p = parse_litmus("body main\n");
  InterpState s = initial_state(p);
  REQUIRE(s.threads.size() == 1);
  CHECK(s.threads[0].status == ThreadStatus::NotStarted);
  CHECK(at_gate(p, s, 0));
  const MicroResult r = exec_micro(p, s, 0, nullptr);
  CHECK(r.kind == MicroResult::Kind::Done);
  CHECK(s.threads[0].status == ThreadStatus::Terminated);
  CHECK(s.all_terminated());
}

TEST_CASE("notify with several waiters defers the designation") {
  const LitmusProgram p = parse_litmus(
      "body main\n"
      "  enter o\n"
      "  notify o\n"
      "  exit o\n"
      "body w1 start\n"
      "  enter o\n"
      "  wait o\n"
      "  exit o\n"
      "body w2 start\n"
      "  enter o\n"
      "  wait o\n"
      "  exit o\n");
  InterpState s = initial_state(p);
  REQUIRE(s.threads.size() == 3);
  // Park both waiters, then bring main to the notify.
  for (std::uint32_t t : {1u, 1u, 1u, 2u, 2u, 2u, 0u, 0u}) {
    const MicroResult r = exec_micro(p, s, t, nullptr);
    REQUIRE(r.kind == MicroResult::Kind::Done);
  }
  CHECK(s.threads[1].status == ThreadStatus::WaitParked);
  CHECK(s.threads[2].status == ThreadStatus::WaitParked);

  const std::string before = s.key();
  const MicroResult need = exec_micro(p, s, 0, nullptr);
  REQUIRE(need.kind == MicroResult::Kind::NeedWake);
  CHECK(need.monitor == 0);
  CHECK(need.waiters == std::vector<std::uint16_t>{1, 2});
  CHECK(s.key() == before);  // undecided notify must not mutate

  const std::uint16_t pick = 2;
  const MicroResult done = exec_micro(p, s, 0, &pick);
  CHECK(done.kind == MicroResult::Kind::Done);
  CHECK(s.pending_wake[2] == 1);
  CHECK(s.pending_wake[1] == 0);
  CHECK(s.waiting[0] == std::vector<std::uint16_t>{1});
  // Resume is gated on the monitor, which main still owns.
  CHECK(s.monitors[0].owner == 0);
  CHECK_FALSE(can_step(p, s, 1));
  CHECK_FALSE(can_step(p, s, 2));
}

TEST_CASE("protocol misuse ends in a panic") {
  SUBCASE("exit without ownership") {
    const LitmusProgram p = parse_litmus("body main\n  exit o\n");
    InterpState s = initial_state(p);
    exec_micro(p, s, 0, nullptr);
    const MicroResult r = exec_micro(p, s, 0, nullptr);
    REQUIRE(r.kind == MicroResult::Kind::Terminal);
    CHECK(r.outcome.kind == Outcome::Kind::Panic);
  }
  SUBCASE("wait without ownership") {
    const LitmusProgram p = parse_litmus("body main\n  wait o\n");
    InterpState s = initial_state(p);
    exec_micro(p, s, 0, nullptr);
    const MicroResult r = exec_micro(p, s, 0, nullptr);
    REQUIRE(r.kind == MicroResult::Kind::Terminal);
    CHECK(r.outcome.kind == Outcome::Kind::Panic);
  }
  SUBCASE("exiting a thread that still holds a monitor") {
    const LitmusProgram p = parse_litmus("body main\n  enter o\n");
    InterpState s = initial_state(p);
    exec_micro(p, s, 0, nullptr);
    const MicroResult r = exec_micro(p, s, 0, nullptr);
    REQUIRE(r.kind == MicroResult::Kind::Terminal);
    CHECK(r.outcome.kind == Outcome::Kind::Panic);
  }
  SUBCASE("join on self") {
    const LitmusProgram p = parse_litmus("body main\n  join r0\n");
    InterpState s = initial_state(p);
    exec_micro(p, s, 0, nullptr);
    const MicroResult r = exec_micro(p, s, 0, nullptr);
    REQUIRE(r.kind == MicroResult::Kind::Terminal);
    CHECK(r.outcome.kind == Outcome::Kind::Panic);
  }
}

TEST_CASE("reentrant monitor entry tracks depth") {
  const LitmusProgram p = parse_litmus(
      "var x plain 0\n"
      "body main\n"
      "  enter o\n"
      "  enter o\n"
      "  write x 1\n"
      "  exit o\n"
      "  exit o\n");
  InterpState s = initial_state(p);
  exec_micro(p, s, 0, nullptr);  // start
  exec_micro(p, s, 0, nullptr);  // enter
  CHECK(s.monitors[0].hold == 1);
  CHECK(at_gate(p, s, 0));       // reentrant entry is still a decision point
  exec_micro(p, s, 0, nullptr);
  CHECK(s.monitors[0].hold == 2);
  exec_micro(p, s, 0, nullptr);  // write
  exec_micro(p, s, 0, nullptr);  // exit
  CHECK(s.monitors[0].owner == 0);
  CHECK(s.monitors[0].hold == 1);
  exec_micro(p, s, 0, nullptr);  // exit, terminates cleanly
  CHECK(s.all_terminated());
}

TEST_CASE("two independent volatile stores interleave six ways") {
  const LitmusProgram p = load_corpus("two_volatiles");
  const EnumerationResult sps = enumerate_sps(p);
  const EnumerationResult fine = enumerate_fine_grained(p);
  CHECK(sps.complete);
  CHECK(sps.schedule_count == 6);
  CHECK(fine.schedule_count == 6);
  REQUIRE(sps.count.size() == 1);
  const TerminalRecord& rec = sps.count.begin()->first;
  CHECK(rec.kind == Outcome::Kind::Pass);
  CHECK(rec.store == std::vector<std::int64_t>{1, 1});
  CHECK(sps.outcomes() == fine.outcomes());
}

TEST_CASE("plain instructions run inside one grant") {
  const LitmusProgram p = load_corpus("thread_local");
  const EnumerationResult sps = enumerate_sps(p);
  const EnumerationResult fine = enumerate_fine_grained(p);
  CHECK(sps.schedule_count == 2);
  CHECK(fine.schedule_count == 20);
  CHECK(sps.outcomes() == fine.outcomes());
  REQUIRE(sps.count.size() == 1);
  CHECK(sps.count.begin()->first.store == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("rendezvous program reaches pass, violation and deadlock") {
  const LitmusProgram p = load_corpus("fig2");
  const EnumerationResult sps = enumerate_sps(p);
  REQUIRE(sps.complete);
  const auto by_kind = sps.count_by_kind();
  REQUIRE(by_kind.size() == 3);
  CHECK(by_kind.count(Outcome::Kind::Pass) == 1);
  CHECK(by_kind.count(Outcome::Kind::AssertionViolation) == 1);
  CHECK(by_kind.count(Outcome::Kind::Deadlock) == 1);
  // The atomic turnstile always ends at 2; only the flag varies.
  for (const auto& [rec, n] : sps.count) {
    CHECK(rec.store[0] == 2);
    if (rec.kind == Outcome::Kind::AssertionViolation) {
      CHECK(rec.store[1] == 0);
    } else {
      CHECK(rec.store[1] == 1);
    }
  }
}

TEST_CASE("rendezvous schedule counts are stable") {
  const EnumerationResult sps = enumerate_sps(load_corpus("fig2"));
  const auto by_kind = sps.count_by_kind();
  CHECK(sps.schedule_count == 1059);
  CHECK(by_kind.at(Outcome::Kind::Pass) == 259);
  CHECK(by_kind.at(Outcome::Kind::AssertionViolation) == 665);
  CHECK(by_kind.at(Outcome::Kind::Deadlock) == 135);
  const EnumerationResult fine = enumerate_fine_grained(load_corpus("fig2"));
  CHECK(fine.schedule_count == 17325);
}

TEST_CASE("outcome classes per corpus program") {
  using K = Outcome::Kind;
  auto classes = [](const std::string& name, EnumOptions opts = {}) {
    const EnumerationResult r = enumerate_sps(load_corpus(name), opts);
    REQUIRE(r.complete);
    return kinds_of(r);
  };
  CHECK(classes("lock_order") == std::set<K>{K::Pass, K::Deadlock});
  CHECK(classes("sem_starvation") == std::set<K>{K::Pass, K::Deadlock});
  CHECK(classes("lost_notify") == std::set<K>{K::Pass, K::Deadlock});
  CHECK(classes("delayed_wake") ==
        std::set<K>{K::Pass, K::AssertionViolation, K::Deadlock});
  CHECK(classes("atomicity_cta") == std::set<K>{K::Pass, K::AssertionViolation});
  CHECK(classes("producer_consumer") == std::set<K>{K::Pass});
  CHECK(classes("latch_order") == std::set<K>{K::Pass});
  CHECK(classes("park_handoff") == std::set<K>{K::Pass});
  CHECK(classes("spurious_guard") == std::set<K>{K::Pass});
  EnumOptions sp;
  sp.spurious = true;
  CHECK(classes("spurious_guard", sp) ==
        std::set<K>{K::Pass, K::AssertionViolation});
  CHECK(classes("racy_sentinel") == std::set<K>{K::Pass});
}

TEST_CASE("enumeration is deterministic and mass sums to one") {
  for (const std::string& name : kRaceFreeCorpus) {
    CAPTURE(name);
    const LitmusProgram p = load_corpus(name);
    const EnumerationResult a = enumerate_sps(p);
    const EnumerationResult b = enumerate_sps(p);
    CHECK(a.count == b.count);
    CHECK(a.mass == b.mass);
    CHECK(a.schedule_count == b.schedule_count);
    REQUIRE(a.complete);
    CHECK(total_mass(a) == doctest::Approx(1.0).epsilon(1e-9));
    const EnumerationResult fine = enumerate_fine_grained(p);
    REQUIRE(fine.complete);
    CHECK(total_mass(fine) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("race checker classifies the corpus") {
  for (const std::string& name : kRaceFreeCorpus) {
    CAPTURE(name);
    const DrfResult r = check_drf(load_corpus(name));
    CHECK(r.verdict == DrfResult::Verdict::RaceFree);
  }
  const DrfResult racy = check_drf(load_corpus("racy_sentinel"));
  REQUIRE(racy.verdict == DrfResult::Verdict::Racy);
  REQUIRE(racy.witness.has_value());
  CHECK(racy.witness->var == "x");
  CHECK(racy.witness->thread_a != racy.witness->thread_b);
  CHECK((racy.witness->write_a || racy.witness->write_b));
}

TEST_CASE("gate-switching preserves outcomes on the race-free corpus") {
  for (const std::string& name : kRaceFreeCorpus) {
    CAPTURE(name);
    const TheoremReport rep = check_theorem1(load_corpus(name));
    CHECK(rep.verdict == TheoremReport::Verdict::Holds);
    CHECK(rep.mandatory_ok);
    CHECK(rep.full_equality);
  }
}

TEST_CASE("equivalence check skips racy programs") {
  const TheoremReport rep = check_theorem1(load_corpus("racy_sentinel"));
  CHECK(rep.verdict == TheoremReport::Verdict::Skipped);
  CHECK(rep.skip_reason.find("race") != std::string::npos);
}

TEST_CASE("spurious wakeups strictly widen the schedule space") {
  const LitmusProgram p = load_corpus("spurious_guard");
  EnumOptions sp;
  sp.spurious = true;
  const EnumerationResult base = enumerate_sps(p);
  const EnumerationResult wide = enumerate_sps(p, sp);
  REQUIRE(base.complete);
  REQUIRE(wide.complete);
  CHECK(wide.schedule_count > base.schedule_count);
  CHECK(total_mass(wide) == doctest::Approx(1.0).epsilon(1e-9));
  // A state with no runnable thread but a possible spurious wake is not a
  // deadlock, so enabling the feature cannot create one here.
  CHECK(kinds_of(wide).count(Outcome::Kind::Deadlock) == 0);
}

// ---------------------------------------------------------------------------
// Independent cross-check of the race checker: a vector-clock happens-before
// detector run over randomly sampled fine-grained executions.  Sampling can
// only under-approximate, so its verdicts must be consistent with check_drf:
// no race may ever be reported on a program the checker proved race-free, and
// the sentinel's race should show up in sampled runs.

namespace {

struct VectorClock {
  std::array<std::uint64_t, kMaxThreads> v{};

  void join(const VectorClock& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], o.v[i]);
  }
};

struct Access {
  std::uint32_t thread;
  bool write;
  VectorClock clock;
  int line;
};

struct VcDetector {
  const LitmusProgram& prog;
  std::vector<VectorClock> thread_clock;   // per thread
  std::vector<VectorClock> final_clock;    // per thread, at exit
  std::vector<VectorClock> monitor_clock;  // per monitor (incl. join gates)
  std::vector<VectorClock> var_clock;      // per volatile/atomic var
  std::vector<VectorClock> sem_clock;
  std::vector<VectorClock> latch_clock;
  std::vector<VectorClock> park_clock;     // per thread
  std::vector<std::vector<Access>> history;  // per plain var
  bool race = false;

  explicit VcDetector(const LitmusProgram& p) : prog(p) {
    var_clock.resize(p.vars.size());
    sem_clock.resize(p.sems.size());
    latch_clock.resize(p.latches.size());
    history.resize(p.vars.size());
  }

  void ensure_thread(std::uint32_t t) {
    while (thread_clock.size() <= t) {
      thread_clock.emplace_back();
      final_clock.emplace_back();
      park_clock.emplace_back();
    }
  }

  void on_plain_access(std::uint32_t t, int var, bool write, int line) {
    VectorClock& c = thread_clock[t];
    ++c.v[t];
    for (const Access& prev : history[var]) {
      if (!prev.write && !write) continue;
      if (prev.thread == t) continue;
      if (prev.clock.v[prev.thread] > c.v[prev.thread]) race = true;
    }
    history[var].push_back(Access{t, write, c, line});
  }

  // Applies the synchronization effect of the micro-step thread t is about
  // to take.  Must be called before exec_micro; spawn and join completion
  // are patched up afterwards via on_spawned / note_exit.
  void before_step(const InterpState& s, std::uint32_t t) {
    ensure_thread(t);
    const ThreadState& ts = s.threads[t];
    while (monitor_clock.size() < s.monitors.size()) {
      monitor_clock.emplace_back();
    }
    if (ts.status == ThreadStatus::NotStarted) return;
    if (ts.status == ThreadStatus::WaitParked) {
      const Instr& ins = prog.bodies[ts.body].code[ts.pc];
      thread_clock[t].join(monitor_clock[ins.obj]);
      return;
    }
    if (ts.status == ThreadStatus::JoinParked) {
      const Instr& ins = prog.bodies[ts.body].code[ts.pc];
      const auto target = std::uint32_t(ts.regs[ins.reg]);
      if (s.threads[target].status == ThreadStatus::Terminated) {
        thread_clock[t].join(final_clock[target]);
      }
      return;
    }
    const Instr& ins = prog.bodies[ts.body].code[ts.pc];
    switch (ins.op) {
      case OpCode::Read:
        if (prog.vars[ins.obj].kind == VarKind::Plain) {
          on_plain_access(t, ins.obj, false, ins.line);
        } else {
          thread_clock[t].join(var_clock[ins.obj]);
        }
        break;
      case OpCode::Write:
        if (prog.vars[ins.obj].kind == VarKind::Plain) {
          on_plain_access(t, ins.obj, true, ins.line);
        } else {
          var_clock[ins.obj].join(thread_clock[t]);
        }
        break;
      case OpCode::Rmw:
        thread_clock[t].join(var_clock[ins.obj]);
        var_clock[ins.obj].join(thread_clock[t]);
        break;
      case OpCode::MonitorEnter:
        thread_clock[t].join(monitor_clock[ins.obj]);
        break;
      case OpCode::MonitorExit:
      case OpCode::Wait:
        monitor_clock[ins.obj].join(thread_clock[t]);
        break;
      case OpCode::Join: {
        const std::int64_t target = ts.regs[ins.reg];
        if (target >= 0 && target < std::int64_t(s.threads.size()) &&
            s.threads[target].status == ThreadStatus::Terminated) {
          thread_clock[t].join(final_clock[target]);
        }
        break;
      }
      case OpCode::SemAcquire:
        thread_clock[t].join(sem_clock[ins.obj]);
        break;
      case OpCode::SemRelease:
        sem_clock[ins.obj].join(thread_clock[t]);
        break;
      case OpCode::LatchAwait:
        thread_clock[t].join(latch_clock[ins.obj]);
        break;
      case OpCode::LatchCountDown:
        latch_clock[ins.obj].join(thread_clock[t]);
        break;
      case OpCode::Park:
        thread_clock[t].join(park_clock[t]);
        break;
      case OpCode::Unpark: {
        const std::int64_t target = ts.regs[ins.reg];
        if (target >= 0 && target < std::int64_t(kMaxThreads)) {
          ensure_thread(std::uint32_t(target));
          park_clock[target].join(thread_clock[t]);
        }
        break;
      }
      default:
        break;
    }
  }

  void on_spawned(std::uint32_t parent, std::uint32_t child) {
    ensure_thread(child);
    ++thread_clock[parent].v[parent];
    thread_clock[child] = thread_clock[parent];
    ++thread_clock[child].v[child];
  }

  void note_exit(const InterpState& s, std::uint32_t t) {
    if (s.threads[t].status == ThreadStatus::Terminated) {
      final_clock[t] = thread_clock[t];
    }
  }
};

// One random fine-grained execution; returns whether the detector saw a race.
bool vc_walk(const LitmusProgram& prog, std::uint64_t seed) {
  InterpState s = initial_state(prog);
  VcDetector det(prog);
  Rng rng(seed);
  for (int step = 0; step < 20000; ++step) {
    std::vector<std::uint32_t> steppable;
    for (std::uint32_t t = 0; t < s.threads.size(); ++t) {
      if (can_step(prog, s, t)) steppable.push_back(t);
    }
    if (steppable.empty()) break;
    const std::uint32_t t =
        steppable[rng.next_below(std::uint32_t(steppable.size()))];
    const bool was_spawn =
        s.threads[t].status == ThreadStatus::AtInstr &&
        prog.bodies[s.threads[t].body].code[s.threads[t].pc].op ==
            OpCode::Spawn;
    det.before_step(s, t);
    MicroResult r = exec_micro(prog, s, t, nullptr);
    if (r.kind == MicroResult::Kind::NeedWake) {
      const std::uint16_t pick = r.waiters[rng.next_below(
          std::uint32_t(r.waiters.size()))];
      r = exec_micro(prog, s, t, &pick);
    }
    if (r.kind == MicroResult::Kind::Terminal) break;
    if (was_spawn) {
      det.on_spawned(t, std::uint32_t(s.threads.size() - 1));
    }
    det.note_exit(s, t);
  }
  return det.race;
}

}  // namespace

TEST_CASE("vector-clock detector agrees with the race checker") {
  for (const std::string& name : kRaceFreeCorpus) {
    CAPTURE(name);
    const LitmusProgram p = load_corpus(name);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      CAPTURE(seed);
      REQUIRE_FALSE(vc_walk(p, seed));
    }
  }
  const LitmusProgram racy = load_corpus("racy_sentinel");
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    if (vc_walk(racy, seed)) ++hits;
  }
  CHECK(hits > 0);
}

TEST_SUITE_END();
