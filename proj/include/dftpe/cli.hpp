// Copyright 2026 The dftpe Authors.
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

#include <ostream>
#include <string>
#include <vector>

namespace dftpe {

enum ExitStatus : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitSelfTestFailed = 2,
};

// Parses `args` (without the program name), dispatches the subcommand and
// writes its artifact to `out` unless --out names a file. Diagnostics go to
// `err`. Returns one of ExitStatus.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dftpe
