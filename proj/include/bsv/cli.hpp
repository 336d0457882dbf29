#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsv::cli {

/// Exit codes: 0 PASS, 1 FAIL, 2 ERROR, 3 INCONCLUSIVE.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsv::cli
