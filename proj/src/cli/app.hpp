#pragma once

#include <iosfwd>

namespace multlag::cli {

/// Exit codes: 0 success, 1 failed check or aborted run, 2 configuration error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace multlag::cli
