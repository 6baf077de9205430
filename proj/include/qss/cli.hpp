// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qss {

/// Command-line entry point. `args` excludes the program name. Returns 0 on
/// success, 1 when a domain error surfaced (its name is printed on `err`),
/// and 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qss
