#ifndef CCM_TOOLS_CLI_HPP_
#define CCM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ccm::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 74;

// Runs one subcommand. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace ccm::cli

#endif  // CCM_TOOLS_CLI_HPP_
