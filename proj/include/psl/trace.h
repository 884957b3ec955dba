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

#ifndef PSL_TRACE_H_
#define PSL_TRACE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace psl {

// One successful tactic application. An empty script_text marks steps that
// leave nothing in a proof script (Skip, passing assertions).
struct TraceEntry {
  std::string script_text;
  std::size_t result_index = 0;
  std::size_t goals_after = 0;

  bool operator==(const TraceEntry&) const = default;
};

// Persistent append-only list. Extending a log shares the old one, so the
// logs of sibling branches share their common prefix.
class TraceLog {
 public:
  TraceLog() = default;

  std::size_t size() const { return last_ ? last_->size : 0; }
  bool empty() const { return last_ == nullptr; }

  TraceLog push(TraceEntry e) const {
    return TraceLog(std::make_shared<const Node>(
        Node{last_, std::move(e), size() + 1}));
  }

  // The monoid operation.
  TraceLog concat(const TraceLog& other) const {
    TraceLog out = *this;
    for (auto& e : other.entries()) out = out.push(e);
    return out;
  }

  std::vector<TraceEntry> entries() const {
    std::vector<TraceEntry> out(size());
    std::size_t i = out.size();
    for (const Node* n = last_.get(); n; n = n->prev.get()) out[--i] = n->entry;
    return out;
  }

  // True when this log is an initial segment of `other`.
  bool is_prefix_of(const TraceLog& other) const {
    if (size() > other.size()) return false;
    const Node* n = other.last_.get();
    while (n && n->size > size()) n = n->prev.get();
    if (n == last_.get()) return true;
    const Node* m = last_.get();
    for (; n && m; n = n->prev.get(), m = m->prev.get())
      if (!(n->entry == m->entry)) return false;
    return n == nullptr && m == nullptr;
  }

  bool operator==(const TraceLog& other) const {
    return size() == other.size() && is_prefix_of(other);
  }

 private:
  struct Node {
    std::shared_ptr<const Node> prev;
    TraceEntry entry;
    std::size_t size;
  };

  explicit TraceLog(std::shared_ptr<const Node> last) : last_(std::move(last)) {}

  std::shared_ptr<const Node> last_;
};

}  // namespace psl

#endif  // PSL_TRACE_H_
