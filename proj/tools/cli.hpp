#ifndef HIJAC_CLI_HPP
#define HIJAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hijac::cli {

// exit statuses of the command surface
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kAborted = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hijac::cli

#endif
