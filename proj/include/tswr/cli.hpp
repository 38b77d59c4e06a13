// Copyright 2026 The tswr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSWR_CLI_HPP_
#define TSWR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tswr {

/// Entry point behind the tswr binary; exposed so tests can drive the CLI
/// in-process. args excludes the program name. Exit codes: 0 success,
/// 1 verification failure or flagged sweep rows, 2 invalid arguments.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace tswr

#endif  // TSWR_CLI_HPP_
