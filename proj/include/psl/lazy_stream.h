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

// Demand-driven, memoizing stream. This is the nondeterminism container of
// the strategy interpreter: tactics return streams of successor states and
// failure is the empty stream.
//
// A stream is a handle to a cell. A cell is either suspended (it holds a
// thunk producing another stream) or forced (it holds an optional head and a
// tail cell). Forcing is at-most-once per cell and guarded by a per-cell
// mutex, so forced prefixes can be shared between threads. Chains of
// delegating suspensions (the shape produced by `plus` over many empty
// streams) are resolved iteratively, not recursively.

#ifndef PSL_LAZY_STREAM_H_
#define PSL_LAZY_STREAM_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <type_traits>
#include <utility>
#include <vector>

namespace psl {

template <typename T>
class LazyStream {
  struct Cell;
  using CellPtr = std::shared_ptr<Cell>;

 public:
  using value_type = T;

  // The empty stream.
  LazyStream() : cell_(make_forced(nullptr, nullptr)) {}

  static LazyStream empty() { return LazyStream(); }

  static LazyStream cons(T head, LazyStream tail) {
    return LazyStream(make_forced(std::make_shared<const T>(std::move(head)),
                                  std::move(tail.cell_)));
  }

  // Shares the head object instead of copying it.
  static LazyStream cons_shared(std::shared_ptr<const T> head,
                                LazyStream tail) {
    return LazyStream(make_forced(std::move(head), std::move(tail.cell_)));
  }

  // `thunk` is a nullary callable returning LazyStream<T>; it runs on the
  // first force and never again.
  template <typename F>
  static LazyStream defer(F&& thunk) {
    auto cell = std::make_shared<Cell>();
    cell->thunk = [f = std::forward<F>(thunk)]() mutable -> CellPtr {
      LazyStream s = f();
      return std::move(s.cell_);
    };
    return LazyStream(std::move(cell));
  }

  // Forces the first element. Returns nullptr for the empty stream.
  const T* head() const {
    const Cell* c = resolve();
    return c->head.get();
  }

  std::shared_ptr<const T> head_shared() const { return resolve()->head; }

  bool is_empty() const { return head() == nullptr; }

  // Precondition: !is_empty().
  LazyStream tail() const { return LazyStream(resolve()->tail); }

  // True once the first element has been computed (or the stream is known
  // to be empty). Never forces anything.
  bool is_forced() const {
    std::lock_guard<std::mutex> lock(cell_->mutex);
    return cell_->forced;
  }

 private:
  struct Cell {
    std::mutex mutex;
    bool forced = false;
    std::function<CellPtr()> thunk;
    std::shared_ptr<const T> head;
    CellPtr tail;
    // Set on suspended cells once forced: the cell that holds the value.
    CellPtr forward;
  };

  explicit LazyStream(CellPtr cell) : cell_(std::move(cell)) {}

  static CellPtr make_forced(std::shared_ptr<const T> head, CellPtr tail) {
    auto cell = std::make_shared<Cell>();
    cell->forced = true;
    cell->head = std::move(head);
    cell->tail = std::move(tail);
    return cell;
  }

  static const Cell* settled(const CellPtr& c) {
    return c->forward ? c->forward.get() : c.get();
  }

  const Cell* resolve() const {
    std::unique_lock<std::mutex> first(cell_->mutex);
    if (cell_->forced) return settled(cell_);

    std::vector<CellPtr> chain{cell_};
    std::vector<std::unique_lock<std::mutex>> locks;
    locks.push_back(std::move(first));
    CellPtr target;
    try {
      for (;;) {
        auto thunk = std::move(chain.back()->thunk);
        chain.back()->thunk = nullptr;
        CellPtr next = thunk();
        thunk = nullptr;  // release captures before going deeper
        std::unique_lock<std::mutex> lock(next->mutex);
        if (next->forced) {
          target = next->forward ? next->forward : next;
          break;
        }
        chain.push_back(std::move(next));
        locks.push_back(std::move(lock));
      }
    } catch (...) {
      auto failed = make_forced(nullptr, nullptr);
      for (auto& c : chain) {
        c->forced = true;
        c->forward = failed;
      }
      throw;
    }
    for (auto& c : chain) {
      c->forced = true;
      c->forward = target;
    }
    return target.get();
  }

  CellPtr cell_;
};

template <typename T>
LazyStream<T> unit(T x) {
  return LazyStream<T>::cons(std::move(x), LazyStream<T>::empty());
}

template <typename T>
LazyStream<T> from_vector(std::vector<T> xs) {
  LazyStream<T> out;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    out = LazyStream<T>::cons(std::move(*it), std::move(out));
  return out;
}

// xs followed by ys; ys is not forced until xs is exhausted.
template <typename T>
LazyStream<T> plus(LazyStream<T> xs, LazyStream<T> ys) {
  return LazyStream<T>::defer([xs = std::move(xs), ys = std::move(ys)]() {
    auto h = xs.head_shared();
    if (!h) return ys;
    return LazyStream<T>::cons_shared(std::move(h), plus(xs.tail(), ys));
  });
}

namespace detail {

// Skips elements of xs whose image under f is empty, then yields the first
// non-empty image followed lazily by the rest.
template <typename T, typename U, typename F>
LazyStream<U> bind_from(LazyStream<T> xs, std::shared_ptr<F> f) {
  return LazyStream<U>::defer([xs = std::move(xs), f = std::move(f)]() {
    LazyStream<T> cur = xs;
    for (;;) {
      const T* h = cur.head();
      if (!h) return LazyStream<U>::empty();
      LazyStream<U> ys = (*f)(*h);
      LazyStream<T> rest = cur.tail();
      if (!ys.is_empty()) return plus(ys, bind_from<T, U>(rest, f));
      cur = rest;
    }
  });
}

}  // namespace detail

// Concatenation, in order, of f applied to each element of xs. f is applied
// to element k only after every output from elements < k was consumed.
template <typename T, typename F,
          typename U = typename std::invoke_result_t<F&, const T&>::value_type>
LazyStream<U> bind(LazyStream<T> xs, F f) {
  return detail::bind_from<T, U>(std::move(xs),
                                 std::make_shared<F>(std::move(f)));
}

template <typename T, typename F,
          typename U = std::decay_t<std::invoke_result_t<F&, const T&>>>
LazyStream<U> map(LazyStream<T> xs, F f) {
  auto fp = std::make_shared<F>(std::move(f));
  return LazyStream<U>::defer([xs = std::move(xs), fp]() {
    const T* h = xs.head();
    if (!h) return LazyStream<U>::empty();
    return LazyStream<U>::cons((*fp)(*h), map(xs.tail(), *fp));
  });
}

// Lazy prefix of at most n elements; element n+1 is never forced.
template <typename T>
LazyStream<T> truncate(std::size_t n, LazyStream<T> xs) {
  if (n == 0) return LazyStream<T>::empty();
  return LazyStream<T>::defer([n, xs = std::move(xs)]() {
    auto h = xs.head_shared();
    if (!h) return LazyStream<T>::empty();
    return LazyStream<T>::cons_shared(std::move(h), truncate(n - 1, xs.tail()));
  });
}

// First min(n, length) elements. Forces no more than n elements.
template <typename T>
std::vector<T> take(std::size_t n, const LazyStream<T>& xs) {
  std::vector<T> out;
  LazyStream<T> cur = xs;
  while (out.size() < n) {
    const T* h = cur.head();
    if (!h) break;
    out.push_back(*h);
    if (out.size() == n) break;
    cur = cur.tail();
  }
  return out;
}

template <typename T>
std::size_t count(const LazyStream<T>& xs) {
  std::size_t n = 0;
  for (LazyStream<T> cur = xs; !cur.is_empty(); cur = cur.tail()) ++n;
  return n;
}

}  // namespace psl

#endif  // PSL_LAZY_STREAM_H_
