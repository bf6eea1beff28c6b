#ifndef KBIP_CLI_HPP
#define KBIP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kbip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
///
///   kappa   --a A --b B --k K [--breakdown] [--i I]
///   pack    --a A --b B [--format json|dot]
///   witness --a A --b B --k K [--i I] [--format json|dot]
///   verify  --input PATH
///   oracle  --a A --b B [--k K]
///   table   --a A --b B
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kbip::cli

#endif  // KBIP_CLI_HPP
