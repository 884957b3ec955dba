/* Copyright 2026 The PSL Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// The strategy interpreter. A core strategy denotes a function from a proof
// state to a search computation: a map from the log of the path so far to a
// lazy stream of (extended log, successor state) pairs. Atoms are guarded by
// the depth limit of the current deepening iteration.

#ifndef PSL_ENGINE_H_
#define PSL_ENGINE_H_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <vector>

#include "psl/kernel.h"
#include "psl/lazy_stream.h"
#include "psl/strategy.h"
#include "psl/tactics.h"
#include "psl/trace.h"

namespace psl {

struct SearchState {
  TraceLog log;
  ProofState state;
};

using SearchStream = LazyStream<SearchState>;
using SearchComputation = std::function<SearchStream(const TraceLog&)>;

using Clock = std::chrono::steady_clock;

// Cooperative cancellation. A token is cancelled when it or any ancestor is.
class CancelToken {
 public:
  explicit CancelToken(std::shared_ptr<const CancelToken> parent = nullptr)
      : parent_(std::move(parent)) {}

  void cancel() const { flag_.store(true, std::memory_order_relaxed); }
  bool cancelled() const {
    for (const CancelToken* t = this; t; t = t->parent_.get())
      if (t->flag_.load(std::memory_order_relaxed)) return true;
    return false;
  }

 private:
  std::shared_ptr<const CancelToken> parent_;
  mutable std::atomic<bool> flag_{false};
};

using CancelPtr = std::shared_ptr<const CancelToken>;

// Shared by all computations of one deepening iteration.
class SearchContext : public std::enable_shared_from_this<SearchContext> {
 public:
  SearchContext(TacticEnv env, std::size_t limit, std::size_t threads = 1,
                std::optional<Clock::time_point> deadline = std::nullopt);

  SearchContext(const SearchContext&) = delete;
  SearchContext& operator=(const SearchContext&) = delete;

  const TacticEnv& env() const { return env_; }
  std::size_t limit() const { return limit_; }
  std::size_t threads() const { return threads_; }
  const CancelPtr& root() const { return root_; }

  // Atom applications attempted within the limit.
  std::size_t atoms() const { return atoms_; }
  std::size_t max_log() const { return max_log_; }
  bool timed_out() const { return timed_out_; }
  // Alt right branches created but not yet started.
  std::size_t suspended() const { return suspended_; }
  std::size_t peak_suspended() const { return peak_suspended_; }

  // Forces the head of `s` on a worker thread if one is free; returns false
  // (doing nothing) otherwise. `done` is called with whether the head
  // exists, on whichever thread forced it.
  bool prefetch(const SearchStream& s, std::function<void(bool)> done);

  // Cancels every computation of this context and waits for its workers.
  // Must be called before the context is dropped if workers may be running.
  void shutdown();

  // Internal bookkeeping used by the interpreter.
  bool admit_atom(const TraceLog& log, const CancelToken& cancel);
  void note_log(std::size_t size);
  void suspend();
  void resume();

 private:
  TacticEnv env_;
  std::size_t limit_;
  std::size_t threads_;
  std::optional<Clock::time_point> deadline_;
  CancelPtr root_;

  std::atomic<std::size_t> atoms_{0};
  std::atomic<std::size_t> max_log_{0};
  std::atomic<bool> timed_out_{false};
  std::atomic<std::size_t> suspended_{0};
  std::atomic<std::size_t> peak_suspended_{0};

  std::counting_semaphore<> slots_;
  std::mutex workers_mutex_;
  std::condition_variable workers_idle_;
  std::size_t workers_ = 0;
};

using SearchContextPtr = std::shared_ptr<SearchContext>;

// Atom application guarded by the depth limit: empty when the input log
// already holds `limit` entries, otherwise the atom's results with their
// trace entries appended.
SearchComputation iddfc(SearchContextPtr ctx, AtomDescriptor atom,
                        ProofState s, CancelPtr cancel = nullptr);

// The interpreter. `c` must be desugared.
std::function<SearchComputation(const ProofState&)> interp(
    CorePtr c, SearchContextPtr ctx, CancelPtr cancel = nullptr);

// Convenience: interp(c, ctx)(s)(log).
SearchStream run(const CorePtr& c, const ProofState& s, const TraceLog& log,
                 const SearchContextPtr& ctx, CancelPtr cancel = nullptr);

struct DepthBudget {
  std::vector<std::size_t> schedule;
  std::optional<std::chrono::milliseconds> timeout;

  // max_depth/step limits step, 2*step, ... ending exactly at max_depth.
  static DepthBudget deepening(std::size_t max_depth = 30, std::size_t step = 1);
  // Throws std::invalid_argument unless the schedule is non-empty, strictly
  // increasing and starts at 1 or more.
  void validate() const;
};

struct SearchOptions {
  DepthBudget budget = DepthBudget::deepening();
  std::size_t threads = 1;
  TacticEnv env;
};

enum class SearchStatus { kFound, kTimeout, kExhausted };

std::string to_string(SearchStatus s);

struct IterationStats {
  std::size_t limit = 0;
  std::size_t atoms = 0;
  std::size_t max_log = 0;
  std::size_t peak_suspended = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<SearchState> result;
  std::vector<IterationStats> iterations;
  double seconds = 0;

  std::size_t atoms() const;
  std::size_t max_log() const;
  std::size_t peak_suspended() const;
};

// Iterative deepening: the first result of the first limit that has one.
SearchOutcome search(const CorePtr& c, const ProofState& s,
                     const SearchOptions& options);

}  // namespace psl

#endif  // PSL_ENGINE_H_
