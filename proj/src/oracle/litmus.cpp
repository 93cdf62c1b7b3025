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

#include "heddle/oracle/litmus.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace heddle::oracle {
namespace {

struct PendingLabelRef {
  int body = -1;
  int pc = -1;
  std::string label;
  int line = 0;
};

struct PendingSpawnRef {
  int body = -1;
  int pc = -1;
  std::string target;
  int line = 0;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

LitmusParseError::LitmusParseError(const std::string& what, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

int LitmusProgram::var_index(const std::string& n) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].name == n) return int(i);
  }
  return -1;
}

int LitmusProgram::monitor_index(const std::string& n) const {
  for (std::size_t i = 0; i < monitors.size(); ++i) {
    if (monitors[i] == n) return int(i);
  }
  return -1;
}

int LitmusProgram::body_index(const std::string& n) const {
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (bodies[i].name == n) return int(i);
  }
  return -1;
}

const char* to_string(Cmp cmp) {
  switch (cmp) {
    case Cmp::Eq: return "==";
    case Cmp::Ne: return "!=";
    case Cmp::Lt: return "<";
    case Cmp::Le: return "<=";
    case Cmp::Gt: return ">";
    case Cmp::Ge: return ">=";
  }
  return "?";
}

bool eval_cmp(std::int64_t lhs, Cmp cmp, std::int64_t rhs) {
  switch (cmp) {
    case Cmp::Eq: return lhs == rhs;
    case Cmp::Ne: return lhs != rhs;
    case Cmp::Lt: return lhs < rhs;
    case Cmp::Le: return lhs <= rhs;
    case Cmp::Gt: return lhs > rhs;
    case Cmp::Ge: return lhs >= rhs;
  }
  return false;
}

LitmusProgram parse_litmus(const std::string& text,
                           const std::string& default_name) {
  LitmusProgram prog;
  prog.name = default_name;

  std::map<std::pair<int, std::string>, int> labels;  // (body, name) -> pc
  std::vector<PendingLabelRef> label_refs;
  std::vector<PendingSpawnRef> spawn_refs;

  int cur_body = -1;
  int line_no = 0;

  auto fail = [&](const std::string& what) -> void {
    throw LitmusParseError(what, line_no);
  };

  auto parse_int = [&](const std::string& tok) -> std::int64_t {
    try {
      std::size_t pos = 0;
      const std::int64_t v = std::stoll(tok, &pos);
      if (pos != tok.size()) fail("malformed integer '" + tok + "'");
      return v;
    } catch (const LitmusParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("malformed integer '" + tok + "'");
    }
    return 0;
  };

  auto parse_reg = [&](const std::string& tok) -> int {
    if (tok.size() < 2 || tok[0] != 'r') fail("expected register, got '" + tok + "'");
    const std::int64_t n = parse_int(tok.substr(1));
    if (n < 0 || n >= kNumRegs) fail("register out of range '" + tok + "'");
    return int(n);
  };

  auto parse_cmp = [&](const std::string& tok) -> Cmp {
    if (tok == "==") return Cmp::Eq;
    if (tok == "!=") return Cmp::Ne;
    if (tok == "<") return Cmp::Lt;
    if (tok == "<=") return Cmp::Le;
    if (tok == ">") return Cmp::Gt;
    if (tok == ">=") return Cmp::Ge;
    fail("expected comparison operator, got '" + tok + "'");
    return Cmp::Eq;
  };

  auto var_of = [&](const std::string& n) -> int {
    const int i = prog.var_index(n);
    if (i < 0) fail("undeclared variable '" + n + "'");
    return i;
  };

  auto monitor_of = [&](const std::string& n) -> int {
    int i = prog.monitor_index(n);
    if (i < 0) {
      // Implicit declaration on first use.
      prog.monitors.push_back(n);
      i = int(prog.monitors.size()) - 1;
    }
    return i;
  };

  auto counter_of = [&](const std::vector<CounterDecl>& decls,
                        const std::string& n,
                        const char* what) -> int {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (decls[i].name == n) return int(i);
    }
    fail(std::string("undeclared ") + what + " '" + n + "'");
    return -1;
  };

  auto need_body = [&]() -> Body& {
    if (cur_body < 0) fail("instruction outside of a body");
    return prog.bodies[cur_body];
  };

  std::istringstream input(text);
  std::string raw;
  while (std::getline(input, raw)) {
    ++line_no;
    const std::vector<std::string> t = tokenize(raw);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    auto argc = [&](std::size_t lo, std::size_t hi = 0) {
      const std::size_t upper = hi == 0 ? lo : hi;
      if (t.size() - 1 < lo || t.size() - 1 > upper) {
        fail("wrong operand count for '" + kw + "'");
      }
    };

    Instr ins;
    ins.line = line_no;

    if (kw == "prog") {
      argc(1);
      prog.name = t[1];
      continue;
    }
    if (kw == "var") {
      argc(3);
      if (prog.var_index(t[1]) >= 0) fail("duplicate variable '" + t[1] + "'");
      VarDecl v;
      v.name = t[1];
      if (t[2] == "plain") v.kind = VarKind::Plain;
      else if (t[2] == "volatile") v.kind = VarKind::Volatile;
      else if (t[2] == "atomic") v.kind = VarKind::Atomic;
      else fail("unknown variable kind '" + t[2] + "'");
      v.init = parse_int(t[3]);
      prog.vars.push_back(v);
      continue;
    }
    if (kw == "sem" || kw == "latch") {
      argc(2);
      auto& decls = kw == "sem" ? prog.sems : prog.latches;
      for (const auto& d : decls) {
        if (d.name == t[1]) fail("duplicate " + kw + " '" + t[1] + "'");
      }
      const std::int64_t init = parse_int(t[2]);
      if (init < 0) fail(kw + " initial value must be nonnegative");
      decls.push_back(CounterDecl{t[1], init});
      continue;
    }
    if (kw == "body") {
      argc(1, 2);
      if (prog.body_index(t[1]) >= 0) fail("duplicate body '" + t[1] + "'");
      Body b;
      b.name = t[1];
      b.auto_start = t[1] == "main";
      if (t.size() == 3) {
        if (t[2] != "start") fail("unknown body flag '" + t[2] + "'");
        b.auto_start = true;
      }
      prog.bodies.push_back(b);
      cur_body = int(prog.bodies.size()) - 1;
      continue;
    }
    if (kw == "label") {
      argc(1);
      Body& b = need_body();
      const auto key = std::make_pair(cur_body, t[1]);
      if (labels.count(key)) fail("duplicate label '" + t[1] + "'");
      labels[key] = int(b.code.size());
      continue;
    }

    // Everything below is an instruction in the current body.
    Body& b = need_body();
    if (kw == "read") {
      argc(2);
      ins.op = OpCode::Read;
      ins.obj = var_of(t[1]);
      ins.reg = parse_reg(t[2]);
    } else if (kw == "write") {
      argc(2);
      ins.op = OpCode::Write;
      ins.obj = var_of(t[1]);
      if (t[2][0] == 'r' && t[2].size() > 1 && std::isdigit(t[2][1])) {
        ins.reg = parse_reg(t[2]);
        ins.imm_is_reg = true;
      } else {
        ins.imm = parse_int(t[2]);
      }
    } else if (kw == "rmw") {
      argc(3);
      ins.op = OpCode::Rmw;
      ins.obj = var_of(t[1]);
      if (prog.vars[ins.obj].kind != VarKind::Atomic) {
        fail("rmw requires an atomic variable");
      }
      ins.imm = parse_int(t[2]);
      ins.reg = parse_reg(t[3]);
    } else if (kw == "enter" || kw == "exit" || kw == "wait" ||
               kw == "notify" || kw == "notifyall") {
      argc(1);
      ins.op = kw == "enter" ? OpCode::MonitorEnter
               : kw == "exit" ? OpCode::MonitorExit
               : kw == "wait" ? OpCode::Wait
               : kw == "notify" ? OpCode::Notify
                                : OpCode::NotifyAll;
      ins.obj = monitor_of(t[1]);
    } else if (kw == "spawn") {
      argc(2);
      ins.op = OpCode::Spawn;
      ins.reg = parse_reg(t[2]);
      spawn_refs.push_back(
          PendingSpawnRef{cur_body, int(b.code.size()), t[1], line_no});
    } else if (kw == "join") {
      argc(1);
      ins.op = OpCode::Join;
      ins.reg = parse_reg(t[1]);
    } else if (kw == "branch") {
      argc(4);
      ins.op = OpCode::Branch;
      ins.reg = parse_reg(t[1]);
      ins.cmp = parse_cmp(t[2]);
      ins.imm = parse_int(t[3]);
      label_refs.push_back(
          PendingLabelRef{cur_body, int(b.code.size()), t[4], line_no});
    } else if (kw == "jmp") {
      argc(1);
      ins.op = OpCode::Jmp;
      label_refs.push_back(
          PendingLabelRef{cur_body, int(b.code.size()), t[1], line_no});
    } else if (kw == "assert") {
      if (t.size() < 4) fail("wrong operand count for 'assert'");
      ins.op = OpCode::Assert;
      ins.reg = parse_reg(t[1]);
      ins.cmp = parse_cmp(t[2]);
      ins.imm = parse_int(t[3]);
      std::string msg;
      for (std::size_t i = 4; i < t.size(); ++i) {
        if (!msg.empty()) msg += ' ';
        msg += t[i];
      }
      if (msg.empty()) {
        msg = "assert " + t[1] + " " + t[2] + " " + t[3];
      }
      ins.text = msg;
    } else if (kw == "semacq" || kw == "semrel") {
      argc(1);
      ins.op = kw == "semacq" ? OpCode::SemAcquire : OpCode::SemRelease;
      ins.obj = counter_of(prog.sems, t[1], "sem");
    } else if (kw == "countdown" || kw == "await") {
      argc(1);
      ins.op = kw == "countdown" ? OpCode::LatchCountDown : OpCode::LatchAwait;
      ins.obj = counter_of(prog.latches, t[1], "latch");
    } else if (kw == "park") {
      argc(0);
      ins.op = OpCode::Park;
    } else if (kw == "unpark") {
      argc(1);
      ins.op = OpCode::Unpark;
      ins.reg = parse_reg(t[1]);
    } else {
      fail("unknown directive '" + kw + "'");
    }
    b.code.push_back(ins);
  }

  line_no = 0;
  if (prog.bodies.empty() || prog.body_index("main") < 0) {
    throw LitmusParseError("program has no 'main' body", 1);
  }
  // main must be body 0; reorder if declared later.
  const int main_idx = prog.body_index("main");
  if (main_idx != 0) {
    std::swap(prog.bodies[0], prog.bodies[main_idx]);
    for (auto& r : label_refs) {
      if (r.body == 0) r.body = main_idx;
      else if (r.body == main_idx) r.body = 0;
    }
    for (auto& r : spawn_refs) {
      if (r.body == 0) r.body = main_idx;
      else if (r.body == main_idx) r.body = 0;
    }
    std::map<std::pair<int, std::string>, int> remapped;
    for (const auto& [key, pc] : labels) {
      int body = key.first;
      if (body == 0) body = main_idx;
      else if (body == main_idx) body = 0;
      remapped[{body, key.second}] = pc;
    }
    labels = std::move(remapped);
  }

  for (const auto& r : label_refs) {
    const auto it = labels.find({r.body, r.label});
    if (it == labels.end()) {
      throw LitmusParseError("undefined label '" + r.label + "'", r.line);
    }
    prog.bodies[r.body].code[r.pc].target = it->second;
  }
  for (const auto& r : spawn_refs) {
    const int idx = prog.body_index(r.target);
    if (idx < 0) {
      throw LitmusParseError("undefined body '" + r.target + "'", r.line);
    }
    if (idx == 0) {
      throw LitmusParseError("cannot spawn 'main'", r.line);
    }
    prog.bodies[r.body].code[r.pc].obj = idx;
  }
  return prog;
}

LitmusProgram load_litmus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open litmus file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = path;
  const auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  const auto dot = base.find_last_of('.');
  if (dot != std::string::npos) base = base.substr(0, dot);
  return parse_litmus(buf.str(), base);
}

}  // namespace heddle::oracle
