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

// Command implementations that need no search: loading inputs, replay and
// checking. Both executables use these.

#ifndef PSL_TOOLS_DRIVER_H_
#define PSL_TOOLS_DRIVER_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl/kernel.h"
#include "psl/strategy.h"
#include "psl/theory.h"

namespace psl::tools {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoProof = 1;
inline constexpr int kExitUsage = 2;

// Bad input: reported and mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Throws UsageError on I/O or parse failure.
Theory load_theory_file(const std::string& path);

// The named goals in order (comma-separated names allowed), or every goal
// of the theory when `labels` is empty. Unknown labels throw UsageError.
GoalList select_goals(const Theory& theory, const std::vector<std::string>& labels);

// The prelude: the file named by PSL_PRELUDE if set, else the built-in
// text. Throws UsageError if it does not parse.
StrategyFile load_prelude();

struct ReplayOptions {
  std::string theory;
  std::vector<std::string> goals;
  std::string script;
  bool print_state = false;
};

// Prints the outcome to `out` and errors to `err`; returns the exit code.
int cmd_replay(const ReplayOptions& options, std::ostream& out, std::ostream& err);

// Parse-only validation. `.thy` files are theories, `.psl` files strategy
// files (checked against the prelude unless `no_prelude`), anything else
// a proof script.
int cmd_check(const std::vector<std::string>& paths, bool no_prelude,
              std::ostream& out, std::ostream& err);

}  // namespace psl::tools

#endif  // PSL_TOOLS_DRIVER_H_
