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

#include "heddle/oracle/interp.hpp"

#include <algorithm>
#include <cassert>

namespace heddle::oracle {
namespace {

void append_u8(std::string& k, std::uint8_t v) { k.push_back(char(v)); }

void append_u16(std::string& k, std::uint16_t v) {
  k.push_back(char(v & 0xFF));
  k.push_back(char(v >> 8));
}

void append_i64(std::string& k, std::int64_t sv) {
  auto v = std::uint64_t(sv);
  for (int i = 0; i < 8; ++i) k.push_back(char((v >> (8 * i)) & 0xFF));
}

Outcome panic_at(const Instr& ins, const std::string& what) {
  return Outcome::panic(what + " (line " + std::to_string(ins.line) + ")");
}

}  // namespace

bool InterpState::all_terminated() const {
  for (const ThreadState& t : threads) {
    if (t.status != ThreadStatus::Terminated) return false;
  }
  return true;
}

std::string InterpState::key() const {
  std::string k;
  k.reserve(64 + threads.size() * 24);
  append_u16(k, std::uint16_t(threads.size()));
  for (const ThreadState& t : threads) {
    append_u16(k, t.body);
    append_u8(k, std::uint8_t(t.status));
    append_u16(k, t.pc);
    append_u16(k, std::uint16_t(t.saved_hold));
    // Registers: encode only those that are nonzero, as (index, value).
    std::uint8_t nonzero = 0;
    for (int i = 0; i < kNumRegs; ++i) {
      if (t.regs[i] != 0) ++nonzero;
    }
    append_u8(k, nonzero);
    for (int i = 0; i < kNumRegs; ++i) {
      if (t.regs[i] != 0) {
        append_u8(k, std::uint8_t(i));
        append_i64(k, t.regs[i]);
      }
    }
  }
  for (std::int64_t v : vars) append_i64(k, v);
  for (const MonitorState& m : monitors) {
    append_u8(k, std::uint8_t(m.owner + 1));
    append_u16(k, m.hold);
  }
  for (const auto& ws : waiting) {
    append_u8(k, std::uint8_t(ws.size()));
    for (std::uint16_t t : ws) append_u16(k, t);
  }
  for (std::uint8_t p : pending_wake) append_u8(k, p);
  for (std::int64_t v : sems) append_i64(k, v);
  for (std::int64_t v : latches) append_i64(k, v);
  for (std::uint8_t p : park_permit) append_u8(k, p);
  return k;
}

namespace {

// Adds a thread running `body` to the state; returns its id.
std::uint32_t add_thread(InterpState& s, std::uint16_t body) {
  ThreadState t;
  t.body = body;
  t.join_gate = std::uint16_t(s.monitors.size());
  s.monitors.push_back(MonitorState{});
  s.waiting.emplace_back();
  s.threads.push_back(t);
  s.pending_wake.push_back(0);
  s.park_permit.push_back(0);
  return std::uint32_t(s.threads.size() - 1);
}

}  // namespace

InterpState initial_state(const LitmusProgram& prog) {
  InterpState s;
  s.vars.reserve(prog.vars.size());
  for (const VarDecl& v : prog.vars) s.vars.push_back(v.init);
  for (std::size_t i = 0; i < prog.monitors.size(); ++i) {
    s.monitors.push_back(MonitorState{});
    s.waiting.emplace_back();
  }
  for (const CounterDecl& d : prog.sems) s.sems.push_back(d.init);
  for (const CounterDecl& d : prog.latches) s.latches.push_back(d.init);
  add_thread(s, 0);  // main
  for (std::size_t i = 1; i < prog.bodies.size(); ++i) {
    if (prog.bodies[i].auto_start) add_thread(s, std::uint16_t(i));
  }
  return s;
}

bool can_step(const LitmusProgram& prog, const InterpState& s,
              std::uint32_t t) {
  const ThreadState& ts = s.threads[t];
  auto grantable = [&](int m) {
    return s.monitors[m].owner < 0 || s.monitors[m].owner == std::int16_t(t);
  };
  switch (ts.status) {
    case ThreadStatus::NotStarted:
      return true;
    case ThreadStatus::Terminated:
      return false;
    case ThreadStatus::WaitParked: {
      if (!s.pending_wake[t]) return false;
      const Instr& ins = prog.bodies[ts.body].code[ts.pc];
      return grantable(ins.obj);
    }
    case ThreadStatus::JoinParked: {
      if (!s.pending_wake[t]) return false;
      const auto target = std::uint32_t(ts.regs[
          prog.bodies[ts.body].code[ts.pc].reg]);
      return grantable(s.threads[target].join_gate);
    }
    case ThreadStatus::AtInstr:
      break;
  }
  const Instr& ins = prog.bodies[ts.body].code[ts.pc];
  switch (ins.op) {
    case OpCode::MonitorEnter:
      return grantable(ins.obj);
    case OpCode::SemAcquire:
      return s.sems[ins.obj] > 0;
    case OpCode::LatchAwait:
      return s.latches[ins.obj] == 0;
    case OpCode::Park:
      return s.park_permit[t] == 1;
    case OpCode::Join: {
      const std::int64_t target = ts.regs[ins.reg];
      if (target < 0 || target >= std::int64_t(s.threads.size()) ||
          target == std::int64_t(t)) {
        return true;  // steps straight into a panic
      }
      return grantable(s.threads[target].join_gate);
    }
    default:
      return true;
  }
}

bool at_gate(const LitmusProgram& prog, const InterpState& s, std::uint32_t t) {
  const ThreadState& ts = s.threads[t];
  switch (ts.status) {
    case ThreadStatus::NotStarted:
    case ThreadStatus::WaitParked:
    case ThreadStatus::JoinParked:
      return true;
    case ThreadStatus::Terminated:
      return false;
    case ThreadStatus::AtInstr:
      break;
  }
  const Instr& ins = prog.bodies[ts.body].code[ts.pc];
  switch (ins.op) {
    case OpCode::MonitorEnter:
    case OpCode::Join:
    case OpCode::SemAcquire:
    case OpCode::LatchAwait:
    case OpCode::Park:
    case OpCode::Rmw:
      return true;
    case OpCode::Read:
    case OpCode::Write:
      return prog.vars[ins.obj].kind != VarKind::Plain;
    default:
      return false;
  }
}

namespace {

// pc moved past the last instruction: run the thread-exit effects.  The
// runtime notifies every joiner; a thread may not die holding a monitor.
std::optional<MicroResult> thread_exit(const LitmusProgram& prog,
                                       InterpState& s, std::uint32_t t) {
  for (std::size_t m = 0; m < s.monitors.size(); ++m) {
    if (s.monitors[m].owner == std::int16_t(t)) {
      MicroResult r;
      r.kind = MicroResult::Kind::Terminal;
      r.outcome = Outcome::panic(
          "thread " + std::to_string(t) + " (body '" +
          prog.bodies[s.threads[t].body].name + "') exited holding a monitor");
      return r;
    }
  }
  ThreadState& ts = s.threads[t];
  ts.status = ThreadStatus::Terminated;
  auto& joiners = s.waiting[ts.join_gate];
  for (std::uint16_t w : joiners) s.pending_wake[w] = 1;
  joiners.clear();
  return std::nullopt;
}

// Advances t to `pc`, terminating the thread when it runs off the end.
std::optional<MicroResult> advance_to(const LitmusProgram& prog,
                                      InterpState& s, std::uint32_t t,
                                      int pc) {
  ThreadState& ts = s.threads[t];
  if (pc >= int(prog.bodies[ts.body].code.size())) {
    return thread_exit(prog, s, t);
  }
  ts.pc = std::uint16_t(pc);
  ts.status = ThreadStatus::AtInstr;
  return std::nullopt;
}

}  // namespace

bool spurious_wake(InterpState& s, int monitor, std::uint32_t t) {
  auto& ws = s.waiting[monitor];
  const auto it = std::find(ws.begin(), ws.end(), std::uint16_t(t));
  if (it == ws.end()) return false;
  ws.erase(it);
  s.pending_wake[t] = 1;
  return true;
}

MicroResult exec_micro(const LitmusProgram& prog, InterpState& s,
                       std::uint32_t t, const std::uint16_t* wake_choice) {
  MicroResult res;
  ThreadState& ts = s.threads[t];
  assert(can_step(prog, s, t));

  auto terminal = [&res](Outcome o) -> MicroResult& {
    res.kind = MicroResult::Kind::Terminal;
    res.outcome = std::move(o);
    return res;
  };
  auto finish = [&](std::optional<MicroResult> exit_result) -> MicroResult& {
    if (exit_result.has_value()) res = std::move(*exit_result);
    return res;
  };

  if (ts.status == ThreadStatus::NotStarted) {
    // Start gate released: the thread begins at instruction 0 (an empty body
    // terminates immediately).
    ts.status = ThreadStatus::AtInstr;
    return finish(advance_to(prog, s, t, 0));
  }

  if (ts.status == ThreadStatus::WaitParked) {
    const Instr& ins = prog.bodies[ts.body].code[ts.pc];
    s.pending_wake[t] = 0;
    MonitorState& m = s.monitors[ins.obj];
    m.owner = std::int16_t(t);
    m.hold = std::uint16_t(ts.saved_hold);
    ts.saved_hold = 0;
    return finish(advance_to(prog, s, t, ts.pc + 1));
  }

  if (ts.status == ThreadStatus::JoinParked) {
    const Instr& ins = prog.bodies[ts.body].code[ts.pc];
    const auto target = std::uint32_t(ts.regs[ins.reg]);
    const std::uint16_t jg = s.threads[target].join_gate;
    s.pending_wake[t] = 0;
    if (s.threads[target].status != ThreadStatus::Terminated) {
      // Spurious resumption: the target is still alive, go back to waiting.
      s.waiting[jg].push_back(std::uint16_t(t));
      ts.status = ThreadStatus::JoinParked;
      return res;
    }
    return finish(advance_to(prog, s, t, ts.pc + 1));
  }

  const Instr& ins = prog.bodies[ts.body].code[ts.pc];
  switch (ins.op) {
    case OpCode::Read:
      ts.regs[ins.reg] = s.vars[ins.obj];
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::Write:
      s.vars[ins.obj] = ins.imm_is_reg ? ts.regs[ins.reg] : ins.imm;
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::Rmw:
      ts.regs[ins.reg] = s.vars[ins.obj];
      s.vars[ins.obj] += ins.imm;
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::MonitorEnter: {
      MonitorState& m = s.monitors[ins.obj];
      if (m.owner < 0) {
        m.owner = std::int16_t(t);
        m.hold = 1;
      } else {
        ++m.hold;
      }
      return finish(advance_to(prog, s, t, ts.pc + 1));
    }

    case OpCode::MonitorExit: {
      MonitorState& m = s.monitors[ins.obj];
      if (m.owner != std::int16_t(t)) {
        return terminal(panic_at(ins, "monitor exit without ownership"));
      }
      if (--m.hold == 0) m.owner = -1;
      return finish(advance_to(prog, s, t, ts.pc + 1));
    }

    case OpCode::Wait: {
      MonitorState& m = s.monitors[ins.obj];
      if (m.owner != std::int16_t(t)) {
        return terminal(panic_at(ins, "wait without ownership"));
      }
      ts.saved_hold = m.hold;
      m.owner = -1;
      m.hold = 0;
      s.waiting[ins.obj].push_back(std::uint16_t(t));
      ts.status = ThreadStatus::WaitParked;
      return res;
    }

    case OpCode::Notify: {
      MonitorState& m = s.monitors[ins.obj];
      if (m.owner != std::int16_t(t)) {
        return terminal(panic_at(ins, "notify without ownership"));
      }
      auto& ws = s.waiting[ins.obj];
      if (ws.empty()) {
        return finish(advance_to(prog, s, t, ts.pc + 1));
      }
      if (wake_choice == nullptr) {
        res.kind = MicroResult::Kind::NeedWake;
        res.monitor = ins.obj;
        res.waiters = ws;
        return res;
      }
      const auto it = std::find(ws.begin(), ws.end(), *wake_choice);
      assert(it != ws.end());
      ws.erase(it);
      s.pending_wake[*wake_choice] = 1;
      return finish(advance_to(prog, s, t, ts.pc + 1));
    }

    case OpCode::NotifyAll: {
      MonitorState& m = s.monitors[ins.obj];
      if (m.owner != std::int16_t(t)) {
        return terminal(panic_at(ins, "notifyAll without ownership"));
      }
      auto& ws = s.waiting[ins.obj];
      for (std::uint16_t w : ws) s.pending_wake[w] = 1;
      ws.clear();
      return finish(advance_to(prog, s, t, ts.pc + 1));
    }

    case OpCode::Spawn: {
      if (s.threads.size() >= kMaxThreads) {
        return terminal(panic_at(ins, "too many threads"));
      }
      const std::uint32_t child = add_thread(s, std::uint16_t(ins.obj));
      s.threads[t].regs[ins.reg] = child;
      return finish(advance_to(prog, s, t, s.threads[t].pc + 1));
    }

    case OpCode::Join: {
      const std::int64_t target = ts.regs[ins.reg];
      if (target < 0 || target >= std::int64_t(s.threads.size())) {
        return terminal(panic_at(ins, "join on invalid thread id"));
      }
      if (target == std::int64_t(t)) {
        return terminal(panic_at(ins, "join on self"));
      }
      const std::uint16_t jg = s.threads[target].join_gate;
      if (s.threads[target].status == ThreadStatus::Terminated) {
        // Gate acquired, target already dead: release and move on.
        return finish(advance_to(prog, s, t, ts.pc + 1));
      }
      s.waiting[jg].push_back(std::uint16_t(t));
      ts.status = ThreadStatus::JoinParked;
      return res;
    }

    case OpCode::Branch:
      return finish(advance_to(
          prog, s, t,
          eval_cmp(ts.regs[ins.reg], ins.cmp, ins.imm) ? ins.target
                                                       : ts.pc + 1));

    case OpCode::Jmp:
      return finish(advance_to(prog, s, t, ins.target));

    case OpCode::Assert: {
      if (!eval_cmp(ts.regs[ins.reg], ins.cmp, ins.imm)) {
        return terminal(Outcome::violation(
            ins.text + " (r" + std::to_string(ins.reg) + " = " +
            std::to_string(ts.regs[ins.reg]) + ")"));
      }
      return finish(advance_to(prog, s, t, ts.pc + 1));
    }

    case OpCode::SemAcquire:
      --s.sems[ins.obj];
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::SemRelease:
      ++s.sems[ins.obj];
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::LatchCountDown:
      if (s.latches[ins.obj] > 0) --s.latches[ins.obj];
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::LatchAwait:
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::Park:
      s.park_permit[t] = 0;
      return finish(advance_to(prog, s, t, ts.pc + 1));

    case OpCode::Unpark: {
      const std::int64_t target = ts.regs[ins.reg];
      if (target < 0 || target >= std::int64_t(s.threads.size())) {
        return terminal(panic_at(ins, "unpark on invalid thread id"));
      }
      s.park_permit[target] = 1;
      return finish(advance_to(prog, s, t, ts.pc + 1));
    }
  }
  return terminal(Outcome::panic("internal: unknown opcode"));
}

}  // namespace heddle::oracle
