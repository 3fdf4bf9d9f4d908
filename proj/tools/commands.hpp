#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elastica::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kDomain = 3,
    kIo = 4,
    kUnattainable = 5,
};

// Stratification and Maxwell tolerance: ELASTICA_TOL if set and valid, else 1e-9.
double default_tol();

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace elastica::cli
