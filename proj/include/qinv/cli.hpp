// Copyright 2026 The qinv authors
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

#ifndef QINV_CLI_HPP
#define QINV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qinv::cli {

/// Runs the command-line front-end. Exit status: 0 success, 1 physics or
/// verification failure, 2 usage/schema error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qinv::cli

#endif  // QINV_CLI_HPP
