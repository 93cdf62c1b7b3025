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
#include <functional>
#include <string>

#include "heddle/core/ids.hpp"

namespace heddle {

class Engine;
class Runtime;

// A test program: ordinary C++ code that performs all cross-thread
// communication through the modeled primitives below.  Each primitive call
// is a scheduling gate (or a release the scheduler observes), so a program
// that is deterministic apart from thread interleaving is fully determined
// by a schedule.
using Program = std::function<void(Runtime&)>;

// Handles are small value types binding a resource id to the engine that
// owns it; they may be freely copied and shared across modeled threads.

class Monitor {
 public:
  Monitor() = default;
  void enter();
  void exit();
  void wait();
  void notify();
  void notify_all();
  ResourceId id() const { return res_; }

 private:
  friend class Runtime;
  Monitor(Engine* e, ResourceId r) : eng_(e), res_(r) {}
  Engine* eng_ = nullptr;
  ResourceId res_ = kNoResource;
};

class AtomicInt {
 public:
  AtomicInt() = default;
  std::int64_t fetch_add(std::int64_t delta);
  std::int64_t load();
  void store(std::int64_t value);
  ResourceId id() const { return res_; }

 private:
  friend class Runtime;
  AtomicInt(Engine* e, ResourceId r) : eng_(e), res_(r) {}
  Engine* eng_ = nullptr;
  ResourceId res_ = kNoResource;
};

class VolatileInt {
 public:
  VolatileInt() = default;
  std::int64_t load();
  void store(std::int64_t value);
  ResourceId id() const { return res_; }

 private:
  friend class Runtime;
  VolatileInt(Engine* e, ResourceId r) : eng_(e), res_(r) {}
  Engine* eng_ = nullptr;
  ResourceId res_ = kNoResource;
};

class Semaphore {
 public:
  Semaphore() = default;
  void acquire();
  void release();
  ResourceId id() const { return res_; }

 private:
  friend class Runtime;
  Semaphore(Engine* e, ResourceId r) : eng_(e), res_(r) {}
  Engine* eng_ = nullptr;
  ResourceId res_ = kNoResource;
};

class Latch {
 public:
  Latch() = default;
  void count_down();
  void await();
  ResourceId id() const { return res_; }

 private:
  friend class Runtime;
  Latch(Engine* e, ResourceId r) : eng_(e), res_(r) {}
  Engine* eng_ = nullptr;
  ResourceId res_ = kNoResource;
};

class ThreadHandle {
 public:
  ThreadHandle() = default;
  // Blocks until the thread terminates; modeled as wait on its join gate,
  // which the exiting thread notifies.
  void join();
  // Grants the thread's park permit (at most one is stored).
  void unpark();
  ThreadId id() const { return tid_; }

 private:
  friend class Runtime;
  ThreadHandle(Engine* e, ThreadId t) : eng_(e), tid_(t) {}
  Engine* eng_ = nullptr;
  ThreadId tid_ = 0;
};

// The per-execution API surface handed to the program.  Resource ids are
// assigned in creation order, so a deterministic program yields identical
// ids on every run, which is what keeps schedules replayable.
class Runtime {
 public:
  explicit Runtime(Engine* e) : eng_(e) {}

  Monitor monitor();
  AtomicInt atomic_int(std::int64_t init = 0);
  VolatileInt volatile_int(std::int64_t init = 0);
  Semaphore semaphore(std::int64_t init);
  Latch latch(std::int64_t init);

  ThreadHandle spawn(std::function<void()> body);

  // Parks the calling thread until its permit is granted (or immediately
  // consumes a stored permit); still a scheduling gate either way.
  void park();

  // The bug oracle: records the check in the trace and, when false, ends
  // the execution with an assertion-violation outcome.
  void assert_now(bool condition, const std::string& message);

  // Scheduling points with no synchronization effect and no real delay.
  void sleep(std::int64_t millis);
  void yield();

 private:
  Engine* eng_;
};

}  // namespace heddle
