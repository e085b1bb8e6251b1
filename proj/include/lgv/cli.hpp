#ifndef LGV_CLI_HPP
#define LGV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lgv::cli {

/// Runs one CLI invocation. Exit code 0 on success and passing checks,
/// 1 on failing checks, 2 on usage or parse errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lgv::cli

#endif // LGV_CLI_HPP
