#pragma once

#include <iosfwd>

namespace borda {

/// Exit codes: 0 feasible / verified / done, 1 infeasible / rejected,
/// 2 usage or parse error, 3 oracle search budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace borda
