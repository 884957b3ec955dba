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

#include "psl/engine.h"

#include <stdexcept>
#include <thread>

namespace psl {

// ---- context -----------------------------------------------------------------

SearchContext::SearchContext(TacticEnv env, std::size_t limit,
                             std::size_t threads,
                             std::optional<Clock::time_point> deadline)
    : env_(std::move(env)),
      limit_(limit),
      threads_(threads < 1 ? 1 : threads),
      deadline_(deadline),
      root_(std::make_shared<CancelToken>()),
      slots_(static_cast<std::ptrdiff_t>(threads_ - 1)) {}

bool SearchContext::prefetch(const SearchStream& s,
                             std::function<void(bool)> done) {
  if (root_->cancelled() || !slots_.try_acquire()) return false;
  {
    std::lock_guard<std::mutex> lock(workers_mutex_);
    ++workers_;
  }
  std::thread([self = shared_from_this(), s = SearchStream(s),
               done = std::move(done)]() mutable {
    bool ok = false;
    try {
      ok = s.head() != nullptr;
    } catch (...) {
      // A failed force leaves the stream empty for every consumer.
    }
    if (done) done(ok);
    s = SearchStream();
    done = nullptr;
    self->slots_.release();
    {
      std::lock_guard<std::mutex> lock(self->workers_mutex_);
      --self->workers_;
    }
    self->workers_idle_.notify_all();
  }).detach();
  return true;
}

void SearchContext::shutdown() {
  root_->cancel();
  std::unique_lock<std::mutex> lock(workers_mutex_);
  workers_idle_.wait(lock, [&] { return workers_ == 0; });
}

bool SearchContext::admit_atom(const TraceLog& log, const CancelToken& cancel) {
  if (cancel.cancelled() || log.size() >= limit_) return false;
  if (deadline_ && Clock::now() >= *deadline_) {
    timed_out_ = true;
    return false;
  }
  ++atoms_;
  ++env_.stats->atoms_applied;
  return true;
}

namespace {

void raise_max(std::atomic<std::size_t>& target, std::size_t v) {
  std::size_t cur = target.load();
  while (cur < v && !target.compare_exchange_weak(cur, v)) {
  }
}

}  // namespace

void SearchContext::note_log(std::size_t size) { raise_max(max_log_, size); }

void SearchContext::suspend() { raise_max(peak_suspended_, ++suspended_); }

void SearchContext::resume() { --suspended_; }

// ---- interpreter -------------------------------------------------------------

namespace {

// Counts an Alt right branch from creation until it starts or is dropped.
class Suspension {
 public:
  explicit Suspension(SearchContextPtr ctx) : ctx_(std::move(ctx)) {
    ctx_->suspend();
  }
  ~Suspension() { ctx_->resume(); }
  Suspension(const Suspension&) = delete;
  Suspension& operator=(const Suspension&) = delete;

 private:
  SearchContextPtr ctx_;
};

SearchStream eval_comb(const CorePtr& c, const ProofState& s,
                       const TraceLog& log, const SearchContextPtr& ctx,
                       const CancelPtr& cancel);

// Left if it has a first element, else right. Forces one element of left.
template <typename F>
SearchStream or_else(SearchStream left, F right) {
  return SearchStream::defer([left = std::move(left), right]() {
    if (left.head()) return left;
    return right();
  });
}

}  // namespace

SearchComputation iddfc(SearchContextPtr ctx, AtomDescriptor atom,
                        ProofState s, CancelPtr cancel) {
  if (!cancel) cancel = ctx->root();
  return [ctx, atom = std::move(atom), s = std::move(s),
          cancel](const TraceLog& log) {
    return SearchStream::defer([ctx, atom, s, cancel, log]() {
      if (!ctx->admit_atom(log, *cancel)) return SearchStream::empty();
      return map(eval_atom(atom, s, ctx->env()),
                 [ctx, log](const TacticResult& r) {
                   TraceLog out = log.push(r.entry);
                   ctx->note_log(out.size());
                   return SearchState{out, r.state};
                 });
    });
  };
}

SearchStream run(const CorePtr& c, const ProofState& s, const TraceLog& log,
                 const SearchContextPtr& ctx, CancelPtr cancel) {
  if (!cancel) cancel = ctx->root();
  switch (c->kind) {
    case Core::Kind::kAtom:
      return iddfc(ctx, c->atom, s, cancel)(log);
    case Core::Kind::kSkip:
      return unit(SearchState{log, s});
    case Core::Kind::kFail:
      return SearchStream::empty();
    case Core::Kind::kThen: {
      CorePtr second = c->subs[1];
      return bind(run(c->subs[0], s, log, ctx, cancel),
                  [second, ctx, cancel](const SearchState& r) {
                    return run(second, r.state, r.log, ctx, cancel);
                  });
    }
    case Core::Kind::kAlt: {
      auto guard = std::make_shared<Suspension>(ctx);
      SearchStream right = SearchStream::defer(
          [c, s, log, ctx, cancel, guard]() mutable {
            guard.reset();
            return run(c->subs[1], s, log, ctx, cancel);
          });
      return plus(run(c->subs[0], s, log, ctx, cancel), std::move(right));
    }
    case Core::Kind::kOr:
      return or_else(run(c->subs[0], s, log, ctx, cancel),
                     [c, s, log, ctx, cancel]() {
                       return run(c->subs[1], s, log, ctx, cancel);
                     });
    case Core::Kind::kRep: {
      // (s Then Rep s) Or Skip. An iteration that applied no atom ends the
      // loop, since repeating it could never deepen the path.
      SearchStream again = bind(
          run(c->subs[0], s, log, ctx, cancel),
          [c, log, ctx, cancel](const SearchState& r) {
            if (r.log.size() == log.size()) return SearchStream::empty();
            return run(c, r.state, r.log, ctx, cancel);
          });
      return or_else(std::move(again),
                     [s, log]() { return unit(SearchState{log, s}); });
    }
    case Core::Kind::kRepN: {
      std::size_t n = s.active().size();
      if (n == 0) return unit(SearchState{log, s});
      CorePtr unrolled = c->subs[0];
      for (std::size_t i = 1; i < n; ++i) unrolled = core_then(c->subs[0], unrolled);
      return run(unrolled, s, log, ctx, cancel);
    }
    case Core::Kind::kComb:
      return eval_comb(c, s, log, ctx, cancel);
  }
  return SearchStream::empty();
}

std::function<SearchComputation(const ProofState&)> interp(
    CorePtr c, SearchContextPtr ctx, CancelPtr cancel) {
  return [c = std::move(c), ctx = std::move(ctx),
          cancel = std::move(cancel)](const ProofState& s) -> SearchComputation {
    return [c, ctx, cancel, s](const TraceLog& log) {
      return run(c, s, log, ctx, cancel);
    };
  };
}

// ---- combinators ---------------------------------------------------------------

namespace {

using TokenPtr = std::shared_ptr<CancelToken>;

SearchStream concat_all(const std::vector<SearchStream>& streams) {
  SearchStream out;
  for (std::size_t i = streams.size(); i-- > 0;) out = plus(streams[i], out);
  return out;
}

// The first sub-strategy with a result, all of them started at once.
SearchStream parallel_ors(const CorePtr& c, const ProofState& s,
                          const TraceLog& log, const SearchContextPtr& ctx,
                          const CancelPtr& cancel) {
  std::vector<SearchStream> streams;
  std::vector<TokenPtr> tokens;
  for (const auto& sub : c->subs) {
    tokens.push_back(std::make_shared<CancelToken>(cancel));
    streams.push_back(run(sub, s, log, ctx, tokens.back()));
  }
  for (std::size_t i = 1; i < streams.size(); ++i) ctx->prefetch(streams[i], nullptr);
  for (std::size_t i = 0; i < streams.size(); ++i) {
    if (!streams[i].head()) continue;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) tokens[j]->cancel();
    return streams[i];
  }
  return SearchStream::empty();
}

SearchStream parallel_alts(const CorePtr& c, const ProofState& s,
                           const TraceLog& log, const SearchContextPtr& ctx,
                           const CancelPtr& cancel) {
  std::vector<SearchStream> streams;
  for (const auto& sub : c->subs) streams.push_back(run(sub, s, log, ctx, cancel));
  for (std::size_t i = 1; i < streams.size(); ++i) ctx->prefetch(streams[i], nullptr);
  return concat_all(streams);
}

// Runs the second strategy on every result of the first, concurrently. With
// `one`, only the first result for the earliest first-stage result that has
// any is kept, and the remaining branches are cancelled.
SearchStream parallel_then(const CorePtr& c, const ProofState& s,
                           const TraceLog& log, const SearchContextPtr& ctx,
                           const CancelPtr& cancel, bool one) {
  enum Status { kPending, kSuccess, kFailure };
  struct Branch {
    SearchStream stream;
    TokenPtr token;
    std::shared_ptr<std::atomic<int>> status;
  };
  std::vector<Branch> branches;

  auto finish = [&](std::size_t winner) {
    for (std::size_t j = winner + 1; j < branches.size(); ++j)
      branches[j].token->cancel();
    return truncate(1, branches[winner].stream);
  };
  // The winner, once every earlier branch is known to have failed.
  auto decided = [&]() -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      int st = branches[i].status->load();
      if (st == kPending) return std::nullopt;
      if (st == kSuccess) return i;
    }
    return std::nullopt;
  };

  SearchStream first = run(c->subs[0], s, log, ctx, cancel);
  for (SearchStream cur = first; const SearchState* h = cur.head();
       cur = cur.tail()) {
    Branch b{SearchStream(), std::make_shared<CancelToken>(cancel),
             std::make_shared<std::atomic<int>>(kPending)};
    b.stream = run(c->subs[1], h->state, h->log, ctx, b.token);
    if (one) {
      auto status = b.status;
      bool started = ctx->prefetch(b.stream, [status](bool ok) {
        status->store(ok ? kSuccess : kFailure);
      });
      if (!started) status->store(b.stream.head() ? kSuccess : kFailure);
      branches.push_back(std::move(b));
      if (auto w = decided()) return finish(*w);
    } else {
      ctx->prefetch(b.stream, nullptr);
      branches.push_back(std::move(b));
    }
  }
  if (!one) {
    std::vector<SearchStream> streams;
    for (const auto& b : branches) streams.push_back(b.stream);
    return concat_all(streams);
  }
  for (std::size_t i = 0; i < branches.size(); ++i)
    if (branches[i].stream.head()) return finish(i);
  return SearchStream::empty();
}

SearchStream eval_comb(const CorePtr& c, const ProofState& s,
                       const TraceLog& log, const SearchContextPtr& ctx,
                       const CancelPtr& cancel) {
  switch (c->comb) {
    case CombKind::kCut:
      return truncate(static_cast<std::size_t>(c->cut),
                      run(c->subs[0], s, log, ctx, cancel));
    case CombKind::kPOrs:
      return SearchStream::defer([=]() { return parallel_ors(c, s, log, ctx, cancel); });
    case CombKind::kPAlts:
      return SearchStream::defer([=]() { return parallel_alts(c, s, log, ctx, cancel); });
    case CombKind::kPThenOne:
      return SearchStream::defer(
          [=]() { return parallel_then(c, s, log, ctx, cancel, true); });
    case CombKind::kPThenAll:
      return SearchStream::defer(
          [=]() { return parallel_then(c, s, log, ctx, cancel, false); });
  }
  return SearchStream::empty();
}

}  // namespace

// ---- iterative deepening -------------------------------------------------------

DepthBudget DepthBudget::deepening(std::size_t max_depth, std::size_t step) {
  if (max_depth < 1 || step < 1)
    throw std::invalid_argument("depth and deepening step must be at least 1");
  DepthBudget b;
  for (std::size_t d = step; d < max_depth; d += step) b.schedule.push_back(d);
  b.schedule.push_back(max_depth);
  return b;
}

void DepthBudget::validate() const {
  if (schedule.empty()) throw std::invalid_argument("empty deepening schedule");
  if (schedule.front() < 1)
    throw std::invalid_argument("deepening limits must be at least 1");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("deepening schedule must be strictly increasing");
  if (timeout && timeout->count() <= 0)
    throw std::invalid_argument("timeout must be positive");
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kTimeout: return "timeout";
    case SearchStatus::kExhausted: return "exhausted";
  }
  return "";
}

std::size_t SearchOutcome::atoms() const {
  std::size_t n = 0;
  for (const auto& it : iterations) n += it.atoms;
  return n;
}

std::size_t SearchOutcome::max_log() const {
  std::size_t n = 0;
  for (const auto& it : iterations) n = std::max(n, it.max_log);
  return n;
}

std::size_t SearchOutcome::peak_suspended() const {
  std::size_t n = 0;
  for (const auto& it : iterations) n = std::max(n, it.peak_suspended);
  return n;
}

SearchOutcome search(const CorePtr& c, const ProofState& s,
                     const SearchOptions& options) {
  options.budget.validate();
  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (options.budget.timeout) deadline = start + *options.budget.timeout;

  SearchOutcome out;
  for (std::size_t limit : options.budget.schedule) {
    if (deadline && Clock::now() >= *deadline) {
      out.status = SearchStatus::kTimeout;
      break;
    }
    auto ctx = std::make_shared<SearchContext>(options.env, limit,
                                               options.threads, deadline);
    std::optional<SearchState> found;
    try {
      SearchStream results = run(c, s, TraceLog(), ctx);
      if (const SearchState* h = results.head()) found = *h;
    } catch (...) {
      ctx->shutdown();
      throw;
    }
    ctx->shutdown();
    out.iterations.push_back(
        {limit, ctx->atoms(), ctx->max_log(), ctx->peak_suspended()});
    if (found) {
      out.status = SearchStatus::kFound;
      out.result = std::move(found);
      break;
    }
    if (ctx->timed_out()) {
      out.status = SearchStatus::kTimeout;
      break;
    }
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace psl
