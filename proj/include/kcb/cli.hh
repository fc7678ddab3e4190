#pragma once

#include <iosfwd>

namespace kcb::cli {

/// Entry point of the `kcb` tool. Exit codes: 0 success, 1 a verification
/// failed (a graph is not k-critical, a conjecture counterexample, a failed
/// self-test), 2 usage or input error.
auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;

} // namespace kcb::cli
