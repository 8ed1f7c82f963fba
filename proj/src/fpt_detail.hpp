#pragma once

#include <functional>

#include "borda/fpt.hpp"

namespace borda::detail {

/// BordaComplete behaves like Borda-up over complete votes with t = m.
Rule solver_rule(const Election& e);
std::size_t solver_t(const Election& e);

/// Lexicographic walk over count vectors with count[k] <= min(l, avail[k])
/// and total <= l. Stops when `visit` returns true. Returns the number of
/// vectors visited; throws std::logic_error past `bound`.
std::uint64_t for_each_combination(const std::vector<std::size_t>& avail, std::size_t l, std::uint64_t bound,
                                   const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// Lexicographic walk over subsets of `pool` (ascending ballot indices) that
/// take exactly need[type_of[b]] ballots of every type. Among ballots with
/// identical rankings only the lowest-indexed copies are taken. Returns the
/// first subset accepted by `accept`.
std::optional<std::vector<std::size_t>> find_exact_subset(
    const std::vector<std::size_t>& pool, const std::vector<std::size_t>& type_of,
    const std::vector<Vote>& ballots, std::vector<std::size_t> need, std::uint64_t& examined,
    const std::function<bool(const std::vector<std::size_t>&)>& accept);

}  // namespace borda::detail
