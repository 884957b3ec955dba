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

#ifndef PSL_KERNEL_TYPE_UNIFIER_H_
#define PSL_KERNEL_TYPE_UNIFIER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psl {

class TypeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Union-find over monomorphic types. A type is either a datatype name or an
// unknown; unknowns are unified away as constraints come in.
class TypeUnifier {
 public:
  int fresh() {
    parent_.push_back(static_cast<int>(parent_.size()));
    bound_.emplace_back();
    return parent_.back();
  }

  int named(const std::string& name) {
    int v = fresh();
    bound_[v] = name;
    return v;
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (bound_[a] && bound_[b] && *bound_[a] != *bound_[b])
      throw TypeMismatch("type mismatch: " + *bound_[a] + " vs " + *bound_[b]);
    if (!bound_[a]) bound_[a] = bound_[b];
    parent_[b] = a;
  }

  std::optional<std::string> resolve(int v) { return bound_[find(v)]; }

 private:
  std::vector<int> parent_;
  std::vector<std::optional<std::string>> bound_;
};

}  // namespace psl

#endif  // PSL_KERNEL_TYPE_UNIFIER_H_
