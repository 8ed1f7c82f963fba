#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "borda/control.hpp"

namespace borda {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveStats {
  std::uint64_t subsets_examined = 0;
  std::uint64_t combinations = 0;
  std::size_t votes_after_reduction = 0;
};

struct SolveResult {
  std::optional<Solution> solution;
  SolveStats stats;
  std::string solver;

  bool feasible() const { return solution.has_value(); }
};

struct OracleOptions {
  std::uint64_t max_subsets = std::uint64_t{1} << 24;
};

/// Exhaustive search over legal pick sets in order of size, then
/// lexicographically by sorted picks. The first verifying set is returned, so
/// the answer is a minimum-cardinality, lexicographically least solution.
/// Among identical ballots only the lowest-indexed copies are tried.
SolveResult solve_control_bruteforce(const ControlInstance& inst, const OracleOptions& opts = {});

}  // namespace borda
