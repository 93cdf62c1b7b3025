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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heddle::oracle {

// Litmus programs: small multithreaded test programs over shared integer
// variables, written in a line-oriented text format and executed by the
// desk-checkable interpreter in interp.hpp.
//
// Format (version 1):
//
//   # comment                      blank lines and # comments are ignored
//   prog NAME                      optional program name
//   var NAME KIND INIT             KIND: plain | volatile | atomic
//   sem NAME INIT                  counting semaphore
//   latch NAME INIT                countdown latch
//   body NAME [start]              thread body; "main" always auto-starts
//   label NAME                     jump target inside the current body
//   <instructions>                 one per line, see below
//
// Instructions (REG is r0..r15, IMM a signed integer, CMP one of
// == != < <= > >=):
//
//   read VAR REG                   REG = VAR
//   write VAR (REG|IMM)            VAR = value
//   rmw VAR IMM REG                REG = VAR; VAR += IMM  (atomic vars only)
//   enter MON / exit MON           monitor enter / exit (reentrant)
//   wait MON                       release MON fully, join its waiting set
//   notify MON / notifyall MON     wake one / all waiters
//   spawn BODY REG                 start a thread running BODY; REG = its id
//   join REG                       wait for thread REG to terminate
//   branch REG CMP IMM LABEL       conditional jump
//   jmp LABEL                      unconditional jump
//   assert REG CMP IMM [MESSAGE]   fail the execution when false
//   semacq SEM / semrel SEM        semaphore acquire / release
//   countdown LATCH / await LATCH  latch operations
//   park / unpark REG              permit-based thread parking
//
// Monitors are declared implicitly by first use.  Loops (backward branches)
// are allowed but must be bounded by construction; the enumerators guard
// against runaway programs with an explored-state budget.

inline constexpr int kNumRegs = 16;
inline constexpr int kMaxThreads = 16;

enum class VarKind : std::uint8_t { Plain, Volatile, Atomic };

enum class OpCode : std::uint8_t {
  Read,
  Write,
  Rmw,
  MonitorEnter,
  MonitorExit,
  Wait,
  Notify,
  NotifyAll,
  Spawn,
  Join,
  Branch,
  Jmp,
  Assert,
  SemAcquire,
  SemRelease,
  LatchCountDown,
  LatchAwait,
  Park,
  Unpark,
};

enum class Cmp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

struct Instr {
  OpCode op = OpCode::Read;
  int obj = -1;        // var / monitor / sem / latch / body index
  int reg = -1;        // primary register operand
  std::int64_t imm = 0;
  bool imm_is_reg = false;  // write: source is register `reg`
  Cmp cmp = Cmp::Eq;
  int target = -1;     // branch / jmp destination pc
  std::string text;    // assert message
  int line = 0;        // source line for diagnostics
};

struct VarDecl {
  std::string name;
  VarKind kind = VarKind::Plain;
  std::int64_t init = 0;
};

struct CounterDecl {
  std::string name;
  std::int64_t init = 0;
};

struct Body {
  std::string name;
  bool auto_start = false;
  std::vector<Instr> code;
};

struct LitmusProgram {
  std::string name;
  std::vector<VarDecl> vars;
  std::vector<std::string> monitors;
  std::vector<CounterDecl> sems;
  std::vector<CounterDecl> latches;
  std::vector<Body> bodies;  // bodies[0] is main

  int var_index(const std::string& n) const;
  int monitor_index(const std::string& n) const;
  int body_index(const std::string& n) const;
};

class LitmusParseError : public std::runtime_error {
 public:
  LitmusParseError(const std::string& what, int line);
  int line() const { return line_; }

 private:
  int line_;
};

LitmusProgram parse_litmus(const std::string& text,
                           const std::string& default_name = "litmus");
LitmusProgram load_litmus_file(const std::string& path);

const char* to_string(Cmp cmp);
bool eval_cmp(std::int64_t lhs, Cmp cmp, std::int64_t rhs);

}  // namespace heddle::oracle
