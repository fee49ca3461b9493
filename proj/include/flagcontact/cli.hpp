#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcontact {

/// Entry point shared by main() and the test suite; `args` excludes the
/// program name. Exit codes: 0 success; 1 verdict NoneExists under
/// --expect-exists; 2 usage or parse errors (including invalid kind or n);
/// 3 internal certification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcontact
