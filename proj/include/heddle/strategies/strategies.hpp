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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "heddle/core/rng.hpp"
#include "heddle/engine/strategy.hpp"

namespace heddle {

// Uniform choice over every available decision: enabled threads and (when
// offered) spurious wakeups share one flat draw, wake designations are
// uniform over the waiting set.
class RandomStrategy : public Strategy {
 public:
  explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}

  ScheduleStep choose(const SchedulingView& view) override;
  ThreadId choose_wake(ResourceId monitor,
                       const std::vector<ThreadId>& waiters) override;

 private:
  Rng rng_;
};

// Priority scheduler: threads get distinct random priorities on first
// appearance, the highest-priority enabled thread always runs, and at each
// of `depth` change points (step indices sampled without replacement from
// [0, max_steps) per run) the thread chosen there drops below every other
// priority.  A bug that depends on d ordering constraints is hit with
// probability >= 1/(n * k^(d-1)) per run.
class PctStrategy : public Strategy {
 public:
  PctStrategy(std::uint64_t seed, int depth, std::uint64_t max_steps);

  void begin_run() override;
  ScheduleStep choose(const SchedulingView& view) override;
  ThreadId choose_wake(ResourceId monitor,
                       const std::vector<ThreadId>& waiters) override;

 protected:
  // Distinct positive priority for a newly seen thread.  Overridable so
  // tests can pin priority values; only the order may matter.
  virtual std::int64_t fresh_priority();

 private:
  ThreadId argmax_enabled(const EnabledSet& enabled);

  Rng rng_;
  int depth_;
  std::uint64_t max_steps_;
  std::map<ThreadId, std::int64_t> prio_;
  std::set<std::int64_t> used_;
  std::set<std::uint64_t> change_points_;
  std::int64_t next_demotion_ = -1;  // below every fresh (positive) priority
};

// Partial-order sampling: argmax priority like PCT, but after each choice
// every other enabled thread about to acquire the same resource as the
// chosen one gets a fresh random priority, so races on one resource are
// reordered independently of unrelated decisions.
class PosStrategy : public Strategy {
 public:
  explicit PosStrategy(std::uint64_t seed) : rng_(seed) {}

  void begin_run() override;
  ScheduleStep choose(const SchedulingView& view) override;
  ThreadId choose_wake(ResourceId monitor,
                       const std::vector<ThreadId>& waiters) override;

 protected:
  virtual std::int64_t fresh_priority();

 private:
  Rng rng_;
  std::map<ThreadId, std::int64_t> prio_;
  std::set<std::int64_t> used_;
};

// Feeds back a recorded schedule verbatim.  Divergence from the recording
// means the program has nondeterminism outside the modeled primitives and
// raises ReplayMismatchError; running out of steps ends the run as
// BudgetExceeded.
class ReplayStrategy : public Strategy {
 public:
  explicit ReplayStrategy(std::vector<ScheduleStep> steps)
      : steps_(std::move(steps)) {}

  void begin_run() override { cursor_ = 0; }
  ScheduleStep choose(const SchedulingView& view) override;
  ThreadId choose_wake(ResourceId monitor,
                       const std::vector<ThreadId>& waiters) override;

 private:
  std::vector<ScheduleStep> steps_;
  std::size_t cursor_ = 0;
};

// Systematic depth-first enumeration of the whole decision tree: thread
// choices in ascending id order, then spurious wakeups in (monitor,
// arrival) order; wake designations branch over the waiting set in arrival
// order.  One engine run walks one root-to-leaf path; advance() moves to
// the next unexplored path.  Programs re-executed deterministically visit
// every schedule exactly once.
class DfsStrategy : public Strategy {
 public:
  DfsStrategy() = default;

  void begin_run() override { depth_ = 0; }
  ScheduleStep choose(const SchedulingView& view) override;
  ThreadId choose_wake(ResourceId monitor,
                       const std::vector<ThreadId>& waiters) override;

  // Backtracks to the deepest decision with an untried alternative.
  // Returns false (and sets exhausted) when every path has been run.
  bool advance();
  bool exhausted() const { return exhausted_; }

 private:
  struct Node {
    std::vector<ScheduleStep> alts;
    std::size_t cursor = 0;
  };

  const ScheduleStep& step_at(std::vector<ScheduleStep> alts);

  std::vector<Node> stack_;
  std::size_t depth_ = 0;
  bool exhausted_ = false;
};

}  // namespace heddle
