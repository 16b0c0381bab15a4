#ifndef DEFOBS_CLI_HPP
#define DEFOBS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace defobs {

/// Executes one CLI invocation. args excludes the program name. Returns the
/// process exit status: 0 success, 2 usage or input error, 3 internal
/// invariant violation. Identical argv yields byte-identical output.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace defobs

#endif
