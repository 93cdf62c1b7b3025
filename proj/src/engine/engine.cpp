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

#include "heddle/engine/engine.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "heddle/core/state.hpp"

namespace heddle {
namespace {

// Unwinds an application thread during teardown or after it set the
// terminal outcome itself.  Deliberately not derived from std::exception so
// the uncaught-exception handler in thread_entry cannot swallow it.
struct AbortRun {};

}  // namespace

// One controlled execution.  All application threads are real std::threads,
// but a single mutex plus per-thread go flags serialize them: the scheduler
// releases exactly one gate per decision, and `active_` (the number of
// threads currently granted) is 1 while a thread runs and 0 at every
// decision point.  Everything below the mutex is therefore only ever
// mutated by the single running thread or by the scheduler while all
// threads are parked.
class Engine {
 public:
  Engine(const EngineOptions& opts, Strategy& strategy)
      : opts_(opts), strategy_(strategy) {}

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  EngineResult run(const Program& program);

  // Resource constructors (burst-internal, no scheduling point).
  ResourceId make_resource(ResourceKind kind, std::int64_t init);

  // Called by Runtime/handle methods from application threads.  Spawn is
  // burst-internal: the child blocks at its start gate, no event is
  // emitted, and the spawner keeps running.
  ThreadId spawn_thread(std::function<void()> body_fn);
  void monitor_enter(ResourceId r);
  void monitor_exit(ResourceId r);
  void monitor_wait(ResourceId r);
  void monitor_notify(ResourceId r, bool all);
  std::int64_t atomic_fetch_add(ResourceId r, std::int64_t delta);
  std::int64_t atomic_load(ResourceId r);
  void atomic_store(ResourceId r, std::int64_t value);
  std::int64_t volatile_load(ResourceId r);
  void volatile_store(ResourceId r, std::int64_t value);
  void sem_acquire(ResourceId r);
  void sem_release(ResourceId r);
  void latch_count_down(ResourceId r);
  void latch_await(ResourceId r);
  void park_self();
  void unpark_thread(ThreadId target);
  void join_thread(ThreadId target);
  void assert_check(bool condition, const std::string& message);
  void pause_point(bool is_sleep);

 private:
  struct ThreadRec {
    ThreadId id = 0;
    Engine* engine = nullptr;
    ThreadPhase phase = ThreadPhase::Created;
    ResourceId pending = kNoResource;  // gate resource while parked
    bool pending_wake = false;         // designated to resume from a wait
    std::uint32_t saved_hold = 0;      // monitor depth to restore after wait
    bool go = false;                   // grant flag, one rendezvous per gate
    bool counted = false;              // included in active_ right now
    std::condition_variable cv;        // start/acquire gates park here
    ResourceId run_res = kNoResource;
    ResourceId park_res = kNoResource;
    ResourceId join_gate = kNoResource;
    std::function<void()> body;
    std::thread native;
  };

  struct Res {
    ResourceKind kind = ResourceKind::Run;
    std::int64_t value = 0;  // cell value, sem count, latch count, park permit
    std::optional<ThreadId> owner;  // monitors only
    std::uint32_t hold = 0;
    std::vector<ThreadId> waiters;  // wait() parkers, arrival order
    bool join_gate = false;
    // Waiters park on the monitor's native condition variable; notify
    // broadcasts it and the per-thread go flag decides who actually
    // resumes, so a delayed or spurious native wakeup is harmless.
    std::unique_ptr<std::condition_variable> cv;
  };

  static thread_local ThreadRec* tls_current;

  void thread_entry(ThreadRec* me);
  void scheduler_loop(std::unique_lock<std::mutex>& lk);
  void teardown(std::unique_lock<std::mutex>& lk);

  ThreadRec& current();
  void block_at_gate(std::unique_lock<std::mutex>& lk, ThreadRec& me,
                     ResourceId r);
  void grant(ThreadRec& t);
  void finish(ThreadRec* me);
  [[noreturn]] void die_running(ThreadRec& me, Outcome outcome);

  ResourceId make_resource_locked(ResourceKind kind, std::int64_t init);
  ThreadId spawn_locked(std::function<void()> body_fn);

  // Removes the thread from the active count exactly once and pokes the
  // scheduler.  Idempotent so every unwind path can call it safely.
  void book_out(ThreadRec& me) {
    if (me.counted) {
      me.counted = false;
      --active_;
    }
    sched_cv_.notify_one();
  }

  EnabledSet compute_enabled() const;
  std::vector<SpuriousOption> spurious_options() const;
  bool valid_step(const ScheduleStep& step, const EnabledSet& enabled,
                  const std::vector<SpuriousOption>& spurious) const;
  bool all_terminated() const;
  Outcome deadlock_outcome() const;

  void set_outcome(Outcome o) {
    if (!outcome_set_) {
      outcome_ = std::move(o);
      outcome_set_ = true;
    }
  }

  void emit(ThreadId t, EventKind k, ResourceId r = kNoResource,
            bool flag = false) {
    trace_.events.push_back(
        Event{t, k, r, flag, std::uint64_t(trace_.events.size())});
  }

  EngineOptions opts_;
  Strategy& strategy_;

  std::mutex mu_;
  std::condition_variable sched_cv_;
  // unique_ptr keeps ThreadRec addresses stable; a deque keeps Res
  // references valid across creation of new resources mid-run.
  std::vector<std::unique_ptr<ThreadRec>> threads_;
  std::deque<Res> resources_;

  int active_ = 0;  // granted-but-not-yet-parked threads; 0 at decisions
  bool abort_ = false;
  bool outcome_set_ = false;
  Outcome outcome_;
  std::uint64_t steps_ = 0;  // scheduling decisions (wake choices are free)
  Trace trace_;
  Schedule schedule_;

  bool mismatch_pending_ = false;
  std::string mismatch_what_;
  std::size_t mismatch_step_ = 0;
};

thread_local Engine::ThreadRec* Engine::tls_current = nullptr;

// ---------------------------------------------------------------------------
// Run loop.

EngineResult Engine::run(const Program& program) {
  Runtime rt(this);
  {
    std::unique_lock<std::mutex> lk(mu_);
    spawn_locked([&program, &rt] { program(rt); });
    strategy_.begin_run();
    scheduler_loop(lk);
    teardown(lk);
  }
  if (mismatch_pending_) {
    throw ReplayMismatchError(mismatch_what_, mismatch_step_);
  }
  trace_.outcome = outcome_;
  return EngineResult{outcome_, std::move(trace_), std::move(schedule_),
                      steps_};
}

void Engine::scheduler_loop(std::unique_lock<std::mutex>& lk) {
  while (true) {
    sched_cv_.wait(lk, [&] { return active_ == 0; });
    if (outcome_set_ || mismatch_pending_) return;
    if (all_terminated()) {
      set_outcome(Outcome::pass());
      return;
    }
    if (steps_ >= opts_.max_steps) {
      set_outcome(Outcome{Outcome::Kind::BudgetExceeded,
                          "step budget of " + std::to_string(opts_.max_steps) +
                              " decisions reached",
                          {},
                          false});
      return;
    }
    EnabledSet enabled = compute_enabled();
    std::vector<SpuriousOption> spurious = spurious_options();
    if (enabled.empty() && spurious.empty()) {
      set_outcome(deadlock_outcome());
      return;
    }
    ScheduleStep step;
    try {
      step = strategy_.choose(SchedulingView{enabled, spurious, steps_});
    } catch (const ScheduleExhausted&) {
      set_outcome(Outcome{Outcome::Kind::BudgetExceeded,
                          "replay schedule exhausted after " +
                              std::to_string(steps_) + " decisions",
                          {},
                          false});
      return;
    } catch (const ReplayMismatchError& e) {
      mismatch_pending_ = true;
      mismatch_what_ = e.what();
      mismatch_step_ = e.step();
      return;
    }
    if (!valid_step(step, enabled, spurious)) {
      set_outcome(
          Outcome::panic("strategy returned a decision that is not available"));
      return;
    }
    schedule_.steps.push_back(step);
    ++steps_;
    if (step.kind == ScheduleStep::Kind::SpuriousWake) {
      // Pure metadata: the waiter leaves the waiting set and becomes
      // eligible to reacquire its monitor; nothing runs this decision.
      Res& m = resources_[step.resource];
      m.waiters.erase(
          std::find(m.waiters.begin(), m.waiters.end(), step.thread));
      threads_[step.thread]->pending_wake = true;
      m.cv->notify_all();
      continue;
    }
    grant(*threads_[step.thread]);
  }
}

void Engine::grant(ThreadRec& t) {
  ThreadPhase prev = t.phase;
  t.go = true;
  t.phase = ThreadPhase::Runnable;
  t.counted = true;
  ++active_;
  if (prev == ThreadPhase::Waiting) {
    resources_[t.pending].cv->notify_all();
  } else {
    t.cv.notify_one();
  }
}

void Engine::teardown(std::unique_lock<std::mutex>& lk) {
  abort_ = true;
  for (auto& t : threads_) t->cv.notify_all();
  for (auto& r : resources_) {
    if (r.cv) r.cv->notify_all();
  }
  lk.unlock();
  for (auto& t : threads_) {
    if (t->native.joinable()) t->native.join();
  }
}

// ---------------------------------------------------------------------------
// Application-thread lifecycle.

void Engine::thread_entry(ThreadRec* me) {
  tls_current = me;
  std::unique_lock<std::mutex> lk(mu_);
  try {
    // Start gate: pending was set to the run resource at spawn, and the
    // thread was never counted active, so there is nothing to decrement.
    me->cv.wait(lk, [&] { return me->go || abort_; });
    if (abort_) throw AbortRun{};
    me->go = false;
    me->phase = ThreadPhase::RunningHandoff;
    me->pending = kNoResource;
    emit(me->id, EventKind::ShadowAcquire, me->run_res);
    emit(me->id, EventKind::ThreadStart, me->run_res);
    emit(me->id, EventKind::ShadowRelease, me->run_res);
    lk.unlock();
    me->body();
    lk.lock();
    finish(me);
  } catch (const AbortRun&) {
    // Either teardown woke a parked thread (not counted active) or the
    // thread already booked itself out in die_running.
    if (!lk.owns_lock()) lk.lock();
    me->phase = ThreadPhase::Terminated;
    book_out(*me);
  } catch (const std::exception& e) {
    if (!lk.owns_lock()) lk.lock();
    set_outcome(Outcome::panic(
        std::string("uncaught exception in thread body: ") + e.what()));
    me->phase = ThreadPhase::Terminated;
    book_out(*me);
  } catch (...) {
    if (!lk.owns_lock()) lk.lock();
    set_outcome(
        Outcome::panic("uncaught non-standard exception in thread body"));
    me->phase = ThreadPhase::Terminated;
    book_out(*me);
  }
}

// Normal exit protocol, still inside the thread's final burst: dying while
// holding a monitor is a protocol error; otherwise every joiner waiting on
// the join gate is designated to resume, exactly like notify_all.
void Engine::finish(ThreadRec* me) {
  for (const Res& r : resources_) {
    if (r.kind == ResourceKind::Monitor && r.owner && *r.owner == me->id) {
      set_outcome(Outcome::panic("thread " + std::to_string(me->id) +
                                 " exited while holding a monitor"));
      me->phase = ThreadPhase::Terminated;
      book_out(*me);
      return;
    }
  }
  Res& jg = resources_[me->join_gate];
  emit(me->id, EventKind::NotifyAll, me->join_gate);
  for (ThreadId w : jg.waiters) threads_[w]->pending_wake = true;
  jg.waiters.clear();
  jg.cv->notify_all();
  emit(me->id, EventKind::ThreadExit);
  me->phase = ThreadPhase::Terminated;
  book_out(*me);
}

void Engine::die_running(ThreadRec& me, Outcome outcome) {
  set_outcome(std::move(outcome));
  me.phase = ThreadPhase::Terminated;
  book_out(me);
  throw AbortRun{};
}

Engine::ThreadRec& Engine::current() {
  ThreadRec* t = tls_current;
  if (t == nullptr || t->engine != this) {
    throw std::logic_error(
        "modeled primitive called outside an application thread");
  }
  return *t;
}

// Parks the caller at an acquire gate and returns once the scheduler grants
// it.  No resource effect happens here; the caller applies its own.
void Engine::block_at_gate(std::unique_lock<std::mutex>& lk, ThreadRec& me,
                           ResourceId r) {
  me.pending = r;
  me.phase = ThreadPhase::BlockedOnShadow;
  book_out(me);
  me.cv.wait(lk, [&] { return me.go || abort_; });
  if (abort_) throw AbortRun{};
  me.go = false;
  me.phase = ThreadPhase::RunningHandoff;
  me.pending = kNoResource;
}

// ---------------------------------------------------------------------------
// Scheduler-side state queries (mutex held, all threads parked).

EnabledSet Engine::compute_enabled() const {
  EnabledSet e;
  for (const auto& tp : threads_) {
    const ThreadRec& t = *tp;
    bool ok = false;
    switch (t.phase) {
      case ThreadPhase::Created:
        ok = true;  // start gate on the thread's own run resource
        break;
      case ThreadPhase::BlockedOnShadow: {
        const Res& r = resources_[t.pending];
        switch (r.kind) {
          case ResourceKind::Monitor:
            ok = !r.owner || *r.owner == t.id;
            break;
          case ResourceKind::Semaphore:
            ok = r.value > 0;
            break;
          case ResourceKind::Latch:
            ok = r.value == 0;
            break;
          case ResourceKind::Park:
            ok = r.value == 1;  // a permit is stored
            break;
          default:
            ok = true;  // run/atomic/volatile gates are always grantable
            break;
        }
        break;
      }
      case ThreadPhase::Waiting: {
        if (!t.pending_wake) break;
        const Res& m = resources_[t.pending];
        ok = !m.owner || *m.owner == t.id;
        break;
      }
      default:
        break;  // Terminated; Runnable/RunningHandoff never exist here
    }
    if (ok) {
      e.threads.push_back(t.id);
      e.resource[t.id] = t.pending;
    }
  }
  return e;
}

std::vector<SpuriousOption> Engine::spurious_options() const {
  std::vector<SpuriousOption> out;
  if (!opts_.spurious) return out;
  for (ResourceId r = 0; r < ResourceId(resources_.size()); ++r) {
    const Res& m = resources_[r];
    // User monitors only.  A spuriously woken joiner would observe its
    // target still alive and re-park into the identical state, so join
    // gates add nothing but an unbounded stutter.
    if (m.kind != ResourceKind::Monitor || m.join_gate) continue;
    for (ThreadId w : m.waiters) out.push_back(SpuriousOption{r, w});
  }
  return out;
}

bool Engine::valid_step(const ScheduleStep& step, const EnabledSet& enabled,
                        const std::vector<SpuriousOption>& spurious) const {
  switch (step.kind) {
    case ScheduleStep::Kind::Choose:
      return enabled.contains(step.thread);
    case ScheduleStep::Kind::SpuriousWake:
      return std::find(spurious.begin(), spurious.end(),
                       SpuriousOption{step.resource, step.thread}) !=
             spurious.end();
    default:
      return false;  // wake choices are made inside notify, never here
  }
}

bool Engine::all_terminated() const {
  for (const auto& t : threads_) {
    if (t->phase != ThreadPhase::Terminated) return false;
  }
  return true;
}

// Every live thread is stuck.  Threads blocked on an owned monitor (or
// designated to resume into one) wait for that owner; following those
// edges either closes a cycle or bottoms out in a thread waiting for a
// notify, permit, sem unit, or latch that will never come.
Outcome Engine::deadlock_outcome() const {
  std::vector<ThreadId> blocked;
  std::vector<std::optional<ThreadId>> succ(threads_.size());
  for (const auto& tp : threads_) {
    const ThreadRec& t = *tp;
    if (t.phase == ThreadPhase::Terminated) continue;
    blocked.push_back(t.id);
    const bool on_monitor =
        (t.phase == ThreadPhase::BlockedOnShadow &&
         resources_[t.pending].kind == ResourceKind::Monitor) ||
        (t.phase == ThreadPhase::Waiting && t.pending_wake);
    if (on_monitor) {
      const Res& m = resources_[t.pending];
      if (m.owner && *m.owner != t.id) succ[t.id] = *m.owner;
    }
  }
  std::vector<std::uint8_t> visited(threads_.size(), 0);
  for (ThreadId start : blocked) {
    if (visited[start]) continue;
    std::vector<ThreadId> path;
    std::vector<std::int32_t> pos(threads_.size(), -1);
    ThreadId cur = start;
    while (!visited[cur] && succ[cur].has_value()) {
      pos[cur] = std::int32_t(path.size());
      path.push_back(cur);
      visited[cur] = 1;
      cur = *succ[cur];
      if (pos[cur] >= 0) {
        std::vector<ThreadId> cycle(path.begin() + pos[cur], path.end());
        std::rotate(cycle.begin(),
                    std::min_element(cycle.begin(), cycle.end()),
                    cycle.end());
        return Outcome::deadlock(std::move(cycle), true);
      }
    }
    visited[cur] = 1;
  }
  return Outcome::deadlock(std::move(blocked), false);
}

// ---------------------------------------------------------------------------
// Resources and threads.

ResourceId Engine::make_resource(ResourceKind kind, std::int64_t init) {
  std::unique_lock<std::mutex> lk(mu_);
  return make_resource_locked(kind, init);
}

ResourceId Engine::make_resource_locked(ResourceKind kind, std::int64_t init) {
  resources_.emplace_back();
  Res& r = resources_.back();
  r.kind = kind;
  r.value = init;
  if (kind == ResourceKind::Monitor) {
    r.cv = std::make_unique<std::condition_variable>();
  }
  return ResourceId(resources_.size() - 1);
}

ThreadId Engine::spawn_thread(std::function<void()> body_fn) {
  std::unique_lock<std::mutex> lk(mu_);
  return spawn_locked(std::move(body_fn));
}

ThreadId Engine::spawn_locked(std::function<void()> body_fn) {
  ThreadId id = ThreadId(threads_.size());
  auto rec = std::make_unique<ThreadRec>();
  rec->id = id;
  rec->engine = this;
  rec->body = std::move(body_fn);
  rec->run_res = make_resource_locked(ResourceKind::Run, 0);
  rec->park_res = make_resource_locked(ResourceKind::Park, 0);
  rec->join_gate = make_resource_locked(ResourceKind::Monitor, 0);
  resources_[rec->join_gate].join_gate = true;
  rec->pending = rec->run_res;  // parked at the start gate
  threads_.push_back(std::move(rec));
  ThreadRec* p = threads_.back().get();
  // The native thread starts immediately but blocks on the engine mutex
  // and then on its start gate; it is invisible to the schedule until the
  // scheduler releases that gate.
  p->native = std::thread([this, p] { thread_entry(p); });
  return id;
}

// ---------------------------------------------------------------------------
// Modeled primitives.  Each acquire-type operation parks at its gate and,
// once granted, applies its effect and emits its events before the burst
// continues; release-type operations take effect immediately within the
// current burst.

void Engine::monitor_enter(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  Res& m = resources_[r];
  if (m.owner) {
    ++m.hold;  // reentrant; the scheduler only grants owner-or-free
  } else {
    m.owner = me.id;
    m.hold = 1;
  }
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::MonitorEnter, r);
}

void Engine::monitor_exit(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  Res& m = resources_[r];
  if (!m.owner || *m.owner != me.id) {
    die_running(me, Outcome::panic("monitor exit without ownership"));
  }
  emit(me.id, EventKind::MonitorExit, r);
  emit(me.id, EventKind::ShadowRelease, r);
  if (--m.hold == 0) m.owner.reset();
}

void Engine::monitor_wait(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  Res& m = resources_[r];
  if (!m.owner || *m.owner != me.id) {
    die_running(me, Outcome::panic("wait without monitor ownership"));
  }
  // Full release regardless of reentrancy depth; the depth is restored on
  // resume.
  me.saved_hold = m.hold;
  m.owner.reset();
  m.hold = 0;
  m.waiters.push_back(me.id);
  emit(me.id, EventKind::WaitEnter, r);
  me.pending = r;
  me.pending_wake = false;
  me.phase = ThreadPhase::Waiting;
  book_out(me);
  m.cv->wait(lk, [&] { return me.go || abort_; });
  if (abort_) throw AbortRun{};
  me.go = false;
  me.phase = ThreadPhase::RunningHandoff;
  me.pending = kNoResource;
  me.pending_wake = false;
  m.owner = me.id;
  m.hold = me.saved_hold;
  me.saved_hold = 0;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::WaitResume, r);
}

void Engine::monitor_notify(ResourceId r, bool all) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  Res& m = resources_[r];
  if (!m.owner || *m.owner != me.id) {
    die_running(me, Outcome::panic("notify without monitor ownership"));
  }
  emit(me.id, all ? EventKind::NotifyAll : EventKind::Notify, r);
  if (m.waiters.empty()) return;
  if (all) {
    for (ThreadId w : m.waiters) threads_[w]->pending_wake = true;
    m.waiters.clear();
    m.cv->notify_all();
    return;
  }
  // A single notify designates one waiter; which one is scheduler policy,
  // recorded so replay repeats it.  The strategy sees arrival order.
  ThreadId pick = 0;
  try {
    pick = strategy_.choose_wake(r, m.waiters);
  } catch (const ScheduleExhausted&) {
    die_running(me, Outcome{Outcome::Kind::BudgetExceeded,
                            "replay schedule exhausted at a wake choice",
                            {},
                            false});
  } catch (const ReplayMismatchError& e) {
    mismatch_pending_ = true;
    mismatch_what_ = e.what();
    mismatch_step_ = e.step();
    me.phase = ThreadPhase::Terminated;
    book_out(me);
    throw AbortRun{};
  }
  auto it = std::find(m.waiters.begin(), m.waiters.end(), pick);
  if (it == m.waiters.end()) {
    die_running(me,
                Outcome::panic("strategy designated a thread that is not "
                               "waiting on the notified monitor"));
  }
  schedule_.steps.push_back(ScheduleStep::wake(pick));
  m.waiters.erase(it);
  threads_[pick]->pending_wake = true;
  m.cv->notify_all();
}

std::int64_t Engine::atomic_fetch_add(ResourceId r, std::int64_t delta) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  Res& c = resources_[r];
  std::int64_t old = c.value;
  c.value += delta;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::AtomicOp, r);
  emit(me.id, EventKind::ShadowRelease, r);
  return old;
}

std::int64_t Engine::atomic_load(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  std::int64_t v = resources_[r].value;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::AtomicOp, r);
  emit(me.id, EventKind::ShadowRelease, r);
  return v;
}

void Engine::atomic_store(ResourceId r, std::int64_t value) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  resources_[r].value = value;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::AtomicOp, r);
  emit(me.id, EventKind::ShadowRelease, r);
}

std::int64_t Engine::volatile_load(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  std::int64_t v = resources_[r].value;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::VolatileRead, r);
  emit(me.id, EventKind::ShadowRelease, r);
  return v;
}

void Engine::volatile_store(ResourceId r, std::int64_t value) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  resources_[r].value = value;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::VolatileWrite, r);
  emit(me.id, EventKind::ShadowRelease, r);
}

void Engine::sem_acquire(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  // Granted only while a unit is available, and nothing ran in between.
  --resources_[r].value;
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::SemAcquire, r);
  emit(me.id, EventKind::ShadowRelease, r);
}

void Engine::sem_release(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  ++resources_[r].value;
  emit(me.id, EventKind::SemRelease, r);
}

void Engine::latch_count_down(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  Res& l = resources_[r];
  if (l.value > 0) --l.value;  // saturates at zero, like CountDownLatch
  emit(me.id, EventKind::LatchCountDown, r);
}

void Engine::latch_await(ResourceId r) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, r);
  emit(me.id, EventKind::ShadowAcquire, r);
  emit(me.id, EventKind::LatchAwait, r);
  emit(me.id, EventKind::ShadowRelease, r);
}

void Engine::park_self() {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, me.park_res);
  resources_[me.park_res].value = 0;  // consume the permit
  emit(me.id, EventKind::ShadowAcquire, me.park_res);
  emit(me.id, EventKind::Park, me.park_res);
  emit(me.id, EventKind::ShadowRelease, me.park_res);
}

void Engine::unpark_thread(ThreadId target) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  if (target >= ThreadId(threads_.size())) {
    die_running(me, Outcome::panic("unpark of an unknown thread"));
  }
  ResourceId pr = threads_[target]->park_res;
  resources_[pr].value = 1;  // permits never accumulate past one
  emit(me.id, EventKind::Unpark, pr);
}

// join is wait on the target's join gate; the exiting thread performs the
// notify_all.  No dedicated join event exists: the trace shows the monitor
// enter, a wait if the target was still alive, and the exit.
void Engine::join_thread(ThreadId target) {
  ThreadRec& me = current();
  ResourceId jg = kNoResource;
  {
    std::unique_lock<std::mutex> lk(mu_);
    if (target >= ThreadId(threads_.size())) {
      die_running(me, Outcome::panic("join of an unknown thread"));
    }
    if (target == me.id) {
      die_running(me, Outcome::panic("thread joined itself"));
    }
    jg = threads_[target]->join_gate;
  }
  monitor_enter(jg);
  while (true) {
    {
      // Nothing else runs between this check and the wait below, so a
      // missed exit is impossible.
      std::lock_guard<std::mutex> g(mu_);
      if (threads_[target]->phase == ThreadPhase::Terminated) break;
    }
    monitor_wait(jg);
  }
  monitor_exit(jg);
}

void Engine::assert_check(bool condition, const std::string& message) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  emit(me.id, EventKind::AssertCheck, kNoResource, condition);
  if (!condition) {
    die_running(me, Outcome::violation(message));
  }
}

void Engine::pause_point(bool is_sleep) {
  ThreadRec& me = current();
  std::unique_lock<std::mutex> lk(mu_);
  block_at_gate(lk, me, me.run_res);
  emit(me.id, EventKind::ShadowAcquire, me.run_res);
  emit(me.id, is_sleep ? EventKind::SleepPoint : EventKind::YieldPoint,
       me.run_res);
  emit(me.id, EventKind::ShadowRelease, me.run_res);
}

// ---------------------------------------------------------------------------
// Public surface.

EngineResult run_program(const Program& program, Strategy& strategy,
                         const EngineOptions& opts) {
  Engine engine(opts, strategy);
  return engine.run(program);
}

Monitor Runtime::monitor() {
  return Monitor(eng_, eng_->make_resource(ResourceKind::Monitor, 0));
}

AtomicInt Runtime::atomic_int(std::int64_t init) {
  return AtomicInt(eng_, eng_->make_resource(ResourceKind::Atomic, init));
}

VolatileInt Runtime::volatile_int(std::int64_t init) {
  return VolatileInt(eng_, eng_->make_resource(ResourceKind::Volatile, init));
}

Semaphore Runtime::semaphore(std::int64_t init) {
  return Semaphore(eng_, eng_->make_resource(ResourceKind::Semaphore, init));
}

Latch Runtime::latch(std::int64_t init) {
  return Latch(eng_, eng_->make_resource(ResourceKind::Latch, init));
}

ThreadHandle Runtime::spawn(std::function<void()> body) {
  return ThreadHandle(eng_, eng_->spawn_thread(std::move(body)));
}

void Runtime::park() { eng_->park_self(); }

void Runtime::assert_now(bool condition, const std::string& message) {
  eng_->assert_check(condition, message);
}

void Runtime::sleep(std::int64_t millis) {
  (void)millis;  // modeled time: a scheduling point, never a real delay
  eng_->pause_point(true);
}

void Runtime::yield() { eng_->pause_point(false); }

void Monitor::enter() { eng_->monitor_enter(res_); }
void Monitor::exit() { eng_->monitor_exit(res_); }
void Monitor::wait() { eng_->monitor_wait(res_); }
void Monitor::notify() { eng_->monitor_notify(res_, false); }
void Monitor::notify_all() { eng_->monitor_notify(res_, true); }

std::int64_t AtomicInt::fetch_add(std::int64_t delta) {
  return eng_->atomic_fetch_add(res_, delta);
}
std::int64_t AtomicInt::load() { return eng_->atomic_load(res_); }
void AtomicInt::store(std::int64_t value) { eng_->atomic_store(res_, value); }

std::int64_t VolatileInt::load() { return eng_->volatile_load(res_); }
void VolatileInt::store(std::int64_t value) {
  eng_->volatile_store(res_, value);
}

void Semaphore::acquire() { eng_->sem_acquire(res_); }
void Semaphore::release() { eng_->sem_release(res_); }

void Latch::count_down() { eng_->latch_count_down(res_); }
void Latch::await() { eng_->latch_await(res_); }

void ThreadHandle::join() { eng_->join_thread(tid_); }
void ThreadHandle::unpark() { eng_->unpark_thread(tid_); }

}  // namespace heddle
