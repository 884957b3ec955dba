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

// psl-replay: replays proof scripts. Built without the search engine.

#include <iostream>

#include "CLI11.hpp"
#include "driver.h"

int main(int argc, char** argv) {
  using namespace psl::tools;
  CLI::App app{"Replay a proof script without search"};
  ReplayOptions o;
  app.add_option("--theory", o.theory, "theory file")->required();
  app.add_option("--goal", o.goals, "goal label(s); default: all goals");
  app.add_option("--script", o.script, "script file")->required();
  app.add_flag("--print-state", o.print_state, "print the final state");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return cmd_replay(o, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
