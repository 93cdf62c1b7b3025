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

#include "heddle/strategies/strategies.hpp"

#include <algorithm>
#include <sstream>

namespace heddle {
namespace {

ScheduleStep spurious_step(const SpuriousOption& opt) {
  return ScheduleStep::spurious(opt.thread, opt.monitor);
}

std::string render_enabled(const SchedulingView& view) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < view.enabled.threads.size(); ++i) {
    if (i) os << ", ";
    os << view.enabled.threads[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Random.

ScheduleStep RandomStrategy::choose(const SchedulingView& view) {
  const std::size_t n = view.enabled.threads.size() + view.spurious.size();
  const std::size_t k = std::size_t(rng_.next_below(n));
  if (k < view.enabled.threads.size()) {
    return ScheduleStep::choose(view.enabled.threads[k]);
  }
  return spurious_step(view.spurious[k - view.enabled.threads.size()]);
}

ThreadId RandomStrategy::choose_wake(ResourceId,
                                     const std::vector<ThreadId>& waiters) {
  return waiters[rng_.next_below(waiters.size())];
}

// ---------------------------------------------------------------------------
// PCT.

PctStrategy::PctStrategy(std::uint64_t seed, int depth,
                         std::uint64_t max_steps)
    : rng_(seed), depth_(depth), max_steps_(max_steps) {}

void PctStrategy::begin_run() {
  prio_.clear();
  used_.clear();
  next_demotion_ = -1;
  change_points_.clear();
  // Without-replacement sample of `depth_` step indices; the budget bounds
  // every run, so [0, max_steps) covers all possible decision indices.
  const std::uint64_t want =
      std::min<std::uint64_t>(std::uint64_t(depth_), max_steps_);
  while (change_points_.size() < want) {
    change_points_.insert(rng_.next_below(max_steps_));
  }
}

std::int64_t PctStrategy::fresh_priority() {
  // Positive values only; demotions use negative ones so a demoted thread
  // stays below every thread that still has its original priority.
  while (true) {
    std::int64_t p = std::int64_t(rng_.next_u64() >> 1);
    if (p > 0 && used_.insert(p).second) return p;
  }
}

ThreadId PctStrategy::argmax_enabled(const EnabledSet& enabled) {
  ThreadId best = enabled.threads.front();
  for (ThreadId t : enabled.threads) {
    if (prio_.find(t) == prio_.end()) prio_[t] = fresh_priority();
    if (prio_[t] > prio_[best]) best = t;
  }
  return best;
}

ScheduleStep PctStrategy::choose(const SchedulingView& view) {
  if (view.enabled.empty()) {
    // Only spurious wakeups remain; the priority order says nothing about
    // them, so fall back to a uniform pick.
    return spurious_step(view.spurious[rng_.next_below(view.spurious.size())]);
  }
  ThreadId t = argmax_enabled(view.enabled);
  if (change_points_.count(view.step_index) != 0) {
    prio_[t] = next_demotion_--;
  }
  return ScheduleStep::choose(t);
}

ThreadId PctStrategy::choose_wake(ResourceId,
                                  const std::vector<ThreadId>& waiters) {
  return waiters[rng_.next_below(waiters.size())];
}

// ---------------------------------------------------------------------------
// POS.

void PosStrategy::begin_run() {
  prio_.clear();
  used_.clear();
}

std::int64_t PosStrategy::fresh_priority() {
  while (true) {
    std::int64_t p = std::int64_t(rng_.next_u64() >> 1);
    if (p > 0 && used_.insert(p).second) return p;
  }
}

ScheduleStep PosStrategy::choose(const SchedulingView& view) {
  if (view.enabled.empty()) {
    return spurious_step(view.spurious[rng_.next_below(view.spurious.size())]);
  }
  ThreadId best = view.enabled.threads.front();
  for (ThreadId t : view.enabled.threads) {
    if (prio_.find(t) == prio_.end()) prio_[t] = fresh_priority();
    if (prio_[t] > prio_[best]) best = t;
  }
  // Racing threads (same pending resource as the winner, winner excluded)
  // are reshuffled so the next decision about this resource is fresh.
  const ResourceId res = view.enabled.resource.at(best);
  for (ThreadId t : view.enabled.threads) {
    if (t != best && view.enabled.resource.at(t) == res) {
      prio_[t] = fresh_priority();
    }
  }
  return ScheduleStep::choose(best);
}

ThreadId PosStrategy::choose_wake(ResourceId,
                                  const std::vector<ThreadId>& waiters) {
  return waiters[rng_.next_below(waiters.size())];
}

// ---------------------------------------------------------------------------
// Replay.

ScheduleStep ReplayStrategy::choose(const SchedulingView& view) {
  if (cursor_ >= steps_.size()) throw ScheduleExhausted{};
  const ScheduleStep& s = steps_[cursor_];
  switch (s.kind) {
    case ScheduleStep::Kind::Choose:
      if (!view.enabled.contains(s.thread)) {
        std::ostringstream os;
        os << "replayed schedule chooses thread " << s.thread << " at step "
           << cursor_ << " but the enabled set is " << render_enabled(view);
        throw ReplayMismatchError(os.str(), cursor_);
      }
      break;
    case ScheduleStep::Kind::SpuriousWake: {
      const SpuriousOption want{s.resource, s.thread};
      if (std::find(view.spurious.begin(), view.spurious.end(), want) ==
          view.spurious.end()) {
        std::ostringstream os;
        os << "replayed schedule injects a spurious wake of thread "
           << s.thread << " on monitor " << s.resource << " at step "
           << cursor_ << " but that thread is not waiting there";
        throw ReplayMismatchError(os.str(), cursor_);
      }
      break;
    }
    case ScheduleStep::Kind::WakeChoice: {
      std::ostringstream os;
      os << "replayed schedule holds a wake designation at step " << cursor_
         << " but the engine asked for a scheduling decision";
      throw ReplayMismatchError(os.str(), cursor_);
    }
  }
  ++cursor_;
  return s;
}

ThreadId ReplayStrategy::choose_wake(ResourceId monitor,
                                     const std::vector<ThreadId>& waiters) {
  if (cursor_ >= steps_.size()) throw ScheduleExhausted{};
  const ScheduleStep& s = steps_[cursor_];
  if (s.kind != ScheduleStep::Kind::WakeChoice) {
    std::ostringstream os;
    os << "engine asked for a wake designation on monitor " << monitor
       << " at step " << cursor_ << " but the schedule recorded none";
    throw ReplayMismatchError(os.str(), cursor_);
  }
  if (std::find(waiters.begin(), waiters.end(), s.thread) == waiters.end()) {
    std::ostringstream os;
    os << "replayed wake designates thread " << s.thread << " at step "
       << cursor_ << " but it is not in the waiting set";
    throw ReplayMismatchError(os.str(), cursor_);
  }
  ++cursor_;
  return s.thread;
}

// ---------------------------------------------------------------------------
// Exhaustive DFS.

const ScheduleStep& DfsStrategy::step_at(std::vector<ScheduleStep> alts) {
  if (depth_ == stack_.size()) {
    stack_.push_back(Node{std::move(alts), 0});
  }
  // On a revisit the program is re-executing the recorded prefix, so the
  // alternatives are the same ones saved when this node was first opened.
  const Node& node = stack_[depth_];
  ++depth_;
  return node.alts[node.cursor];
}

ScheduleStep DfsStrategy::choose(const SchedulingView& view) {
  std::vector<ScheduleStep> alts;
  alts.reserve(view.enabled.threads.size() + view.spurious.size());
  for (ThreadId t : view.enabled.threads) {
    alts.push_back(ScheduleStep::choose(t));
  }
  for (const SpuriousOption& opt : view.spurious) {
    alts.push_back(spurious_step(opt));
  }
  return step_at(std::move(alts));
}

ThreadId DfsStrategy::choose_wake(ResourceId,
                                  const std::vector<ThreadId>& waiters) {
  std::vector<ScheduleStep> alts;
  alts.reserve(waiters.size());
  for (ThreadId w : waiters) alts.push_back(ScheduleStep::wake(w));
  return step_at(std::move(alts)).thread;
}

bool DfsStrategy::advance() {
  while (!stack_.empty() && stack_.back().cursor + 1 == stack_.back().alts.size()) {
    stack_.pop_back();
  }
  if (stack_.empty()) {
    exhausted_ = true;
    return false;
  }
  ++stack_.back().cursor;
  return true;
}

}  // namespace heddle
