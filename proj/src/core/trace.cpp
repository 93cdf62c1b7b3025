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

#include "heddle/core/trace.hpp"

#include <sstream>

#include "heddle/core/state.hpp"

namespace heddle {
namespace {

void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) {
  out.push_back(v);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(std::uint8_t(v >> (8 * i)));
}

}  // namespace

std::vector<std::uint8_t> encode_trace(const Trace& trace) {
  std::vector<std::uint8_t> out;
  out.reserve(16 + trace.events.size() * 22 + trace.outcome.message.size());
  const char magic[8] = {'H', 'T', 'R', 'A', 'C', 'E', '0', '1'};
  out.insert(out.end(), magic, magic + 8);
  put_u64(out, trace.events.size());
  for (const Event& e : trace.events) {
    put_u32(out, 18);
    put_u8(out, std::uint8_t(e.kind));
    put_u32(out, e.thread);
    put_u32(out, e.resource);
    put_u8(out, e.flag ? 1 : 0);
    put_u64(out, e.index);
  }
  const Outcome& o = trace.outcome;
  put_u8(out, std::uint8_t(o.kind));
  put_u32(out, std::uint32_t(o.message.size()));
  out.insert(out.end(), o.message.begin(), o.message.end());
  put_u32(out, std::uint32_t(o.blocked.size()));
  for (ThreadId t : o.blocked) put_u32(out, t);
  put_u8(out, o.cycle ? 1 : 0);
  return out;
}

Digest256 trace_digest(const Trace& trace) {
  return Sha256::of(encode_trace(trace));
}

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::ThreadStart: return "ThreadStart";
    case EventKind::ThreadExit: return "ThreadExit";
    case EventKind::ShadowAcquire: return "ShadowAcquire";
    case EventKind::ShadowRelease: return "ShadowRelease";
    case EventKind::MonitorEnter: return "MonitorEnter";
    case EventKind::MonitorExit: return "MonitorExit";
    case EventKind::WaitEnter: return "WaitEnter";
    case EventKind::WaitResume: return "WaitResume";
    case EventKind::Notify: return "Notify";
    case EventKind::NotifyAll: return "NotifyAll";
    case EventKind::AtomicOp: return "AtomicOp";
    case EventKind::VolatileRead: return "VolatileRead";
    case EventKind::VolatileWrite: return "VolatileWrite";
    case EventKind::SemAcquire: return "SemAcquire";
    case EventKind::SemRelease: return "SemRelease";
    case EventKind::LatchCountDown: return "LatchCountDown";
    case EventKind::LatchAwait: return "LatchAwait";
    case EventKind::Park: return "Park";
    case EventKind::Unpark: return "Unpark";
    case EventKind::SleepPoint: return "SleepPoint";
    case EventKind::YieldPoint: return "YieldPoint";
    case EventKind::AssertCheck: return "AssertCheck";
  }
  return "?";
}

const char* to_string(ResourceKind kind) {
  switch (kind) {
    case ResourceKind::Run: return "run";
    case ResourceKind::Monitor: return "monitor";
    case ResourceKind::Atomic: return "atomic";
    case ResourceKind::Volatile: return "volatile";
    case ResourceKind::Semaphore: return "semaphore";
    case ResourceKind::Latch: return "latch";
    case ResourceKind::Park: return "park";
  }
  return "?";
}

const char* to_string(ThreadPhase phase) {
  switch (phase) {
    case ThreadPhase::Created: return "Created";
    case ThreadPhase::Runnable: return "Runnable";
    case ThreadPhase::RunningHandoff: return "RunningHandoff";
    case ThreadPhase::BlockedOnShadow: return "BlockedOnShadow";
    case ThreadPhase::Waiting: return "Waiting";
    case ThreadPhase::Terminated: return "Terminated";
  }
  return "?";
}

const char* to_string(Outcome::Kind kind) {
  switch (kind) {
    case Outcome::Kind::Pass: return "Pass";
    case Outcome::Kind::AssertionViolation: return "AssertionViolation";
    case Outcome::Kind::Deadlock: return "Deadlock";
    case Outcome::Kind::Panic: return "Panic";
    case Outcome::Kind::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::string describe(const Outcome& outcome) {
  std::ostringstream os;
  os << to_string(outcome.kind);
  if (!outcome.message.empty()) os << ": " << outcome.message;
  if (outcome.kind == Outcome::Kind::Deadlock) {
    os << (outcome.cycle ? " cycle [" : " blocked [");
    for (std::size_t i = 0; i < outcome.blocked.size(); ++i) {
      if (i) os << ", ";
      os << outcome.blocked[i];
    }
    os << "]";
  }
  return os.str();
}

}  // namespace heddle
