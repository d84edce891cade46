#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdg {

/// Exit codes: 0 ok, 2 invalid input or usage, 3 search found nothing within bounds.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNotFound = 3;

/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdg
