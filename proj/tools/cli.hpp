// Copyright 2026 The subvar Authors.
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

#ifndef SUBVAR_TOOLS_CLI_HPP_
#define SUBVAR_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace subvar {

/// Exit codes: 0 success, 1 usage or input error, 2 solver failure.
int cli_main(int argc, char** argv);

/// Same, with explicit streams. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subvar

#endif  // SUBVAR_TOOLS_CLI_HPP_
