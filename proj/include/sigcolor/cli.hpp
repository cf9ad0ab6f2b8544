#pragma once

#include <iosfwd>

namespace sigcolor {

/// Exit codes: 0 success / Ok / equivalent, 1 negative verdict or rejected
/// input, 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigcolor
