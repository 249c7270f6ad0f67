// Copyright 2026 The segcomb Authors
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

#ifndef SEGCOMB_SUBPROCESS_H_
#define SEGCOMB_SUBPROCESS_H_

#include <string>
#include <string_view>

namespace segcomb {

struct ProcessResult {
  // Exit status, or -1 if the child was killed by a signal.
  int exit_code = 0;
  int term_signal = 0;
  std::string out;
  std::string err;
};

// Runs `command` through /bin/sh -c, writing `input` to its stdin while
// draining stdout and stderr. Throws ExternalError if the child cannot be
// started.
ProcessResult run_process(const std::string& command, std::string_view input);

}  // namespace segcomb

#endif  // SEGCOMB_SUBPROCESS_H_
