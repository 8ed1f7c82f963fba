#include "borda/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace borda {

namespace {

// pred[i]: previous pick with identical content, or -1.
std::vector<std::ptrdiff_t> identical_predecessors(const ControlInstance& inst, std::size_t n) {
  std::vector<std::ptrdiff_t> pred(n, -1);
  if (!is_vote_control(inst.kind)) return pred;
  const auto ballots = expand_ballots(inst.kind == ControlKind::CCAV ? inst.pool_votes : inst.base.votes);
  std::map<std::vector<CandidateId>, std::size_t> last;
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    auto [it, fresh] = last.try_emplace(ballots[i].ranking, i);
    if (!fresh) {
      pred[i] = static_cast<std::ptrdiff_t>(it->second);
      it->second = i;
    }
  }
  return pred;
}

}  // namespace

SolveResult solve_control_bruteforce(const ControlInstance& inst, const OracleOptions& opts) {
  SolveResult res;
  res.solver = "brute";
  const auto legal = legal_picks(inst);
  const std::size_t n = legal.size();
  const auto pred = identical_predecessors(inst, n);
  res.stats.votes_after_reduction = is_vote_control(inst.kind) ? n : 0;

  std::vector<char> chosen(n, 0);
  std::vector<std::size_t> slots;
  Solution sol;

  // Lexicographic combinations of `size` positions; a position whose identical
  // predecessor is unchosen would give a non-canonical copy and is skipped.
  std::function<bool(std::size_t, std::size_t)> descend = [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      if (++res.stats.subsets_examined > opts.max_subsets)
        throw BudgetExceeded("oracle examined more than " + std::to_string(opts.max_subsets) + " subsets");
      sol.picks.clear();
      for (std::size_t s : slots) sol.picks.push_back(legal[s]);
      return verify(inst, sol);
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      if (pred[i] >= 0 && !chosen[static_cast<std::size_t>(pred[i])]) continue;
      chosen[i] = 1;
      slots.push_back(i);
      const bool hit = descend(i + 1, left - 1);
      slots.pop_back();
      chosen[i] = 0;
      if (hit) return true;
    }
    return false;
  };

  const std::size_t cap = std::min(inst.budget, n);
  for (std::size_t size = 0; size <= cap; ++size) {
    if (descend(0, size)) {
      res.solution = sol;
      return res;
    }
  }
  return res;
}

}  // namespace borda
