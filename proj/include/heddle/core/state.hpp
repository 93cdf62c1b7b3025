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

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "heddle/core/ids.hpp"

namespace heddle {

// Bookkeeping for the auxiliary locks that serialize the target program.
// The scheduler conceptually holds every lock a thread is blocked on;
// releasing exactly one per decision is what turns thread choice into
// schedule control.  Invariant: at most one owner per resource at any time.
struct ShadowLockTable {
  struct Entry {
    std::optional<ThreadId> owner;
    std::uint32_t hold_count = 0;  // > 1 only for reentrant monitors
    std::vector<ThreadId> waiters;  // blocked acquirers, arrival order
  };

  std::vector<Entry> entries;  // indexed by ResourceId

  Entry& at(ResourceId r) { return entries[r]; }
  const Entry& at(ResourceId r) const { return entries[r]; }

  bool grantable_to(ResourceId r, ThreadId t) const {
    const Entry& e = entries[r];
    return !e.owner.has_value() || *e.owner == t;
  }
};

// wait()/notify() metadata.  A thread is in at most one waiting set;
// pendingWake holds threads that have been designated to resume (by notify,
// notifyAll, thread exit, or a spurious wake) but have not yet reacquired
// their monitor.  The sets and pendingWake are disjoint.
struct WaitingSets {
  std::map<ResourceId, std::vector<ThreadId>> sets;  // arrival order
  std::set<ThreadId> pending_wake;

  bool is_waiting(ThreadId t) const {
    for (const auto& [r, ts] : sets) {
      for (ThreadId w : ts) {
        if (w == t) return true;
      }
    }
    return false;
  }

  // Removes t from r's waiting set into pendingWake.  Returns false when t
  // was not in the set (already woken).
  bool wake(ResourceId r, ThreadId t) {
    auto it = sets.find(r);
    if (it == sets.end()) return false;
    auto& ts = it->second;
    for (auto w = ts.begin(); w != ts.end(); ++w) {
      if (*w == t) {
        ts.erase(w);
        if (ts.empty()) sets.erase(it);
        pending_wake.insert(t);
        return true;
      }
    }
    return false;
  }
};

enum class ThreadPhase : std::uint8_t {
  Created,         // spawned, start gate not yet released
  Runnable,        // granted by the scheduler, not yet observed running
  RunningHandoff,  // the single thread currently executing
  BlockedOnShadow, // parked at an acquire gate
  Waiting,         // inside a waiting set or pendingWake
  Terminated,
};

struct ThreadRecord {
  ThreadId id = 0;
  ThreadPhase phase = ThreadPhase::Created;
  ResourceId blocked_on = kNoResource;   // gate or wait monitor
  std::uint32_t saved_hold_count = 0;    // monitor depth to restore after wait
};

// Threads guaranteed to make progress if chosen next, with the resource each
// one is about to acquire.  Iteration order is ascending ThreadId everywhere;
// strategies rely on that for reproducibility.
struct EnabledSet {
  std::vector<ThreadId> threads;
  std::map<ThreadId, ResourceId> resource;

  bool empty() const { return threads.empty(); }
  bool contains(ThreadId t) const {
    for (ThreadId u : threads) {
      if (u == t) return true;
    }
    return false;
  }
};

const char* to_string(ThreadPhase phase);

}  // namespace heddle
