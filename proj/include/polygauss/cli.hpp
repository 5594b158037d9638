#ifndef POLYGAUSS_CLI_HPP
#define POLYGAUSS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polygauss {

// Exit codes: 0 success / true verdict, 1 false verdict or verification
// failure, 2 usage or parse error, 3 resource-limit abort.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polygauss

#endif
